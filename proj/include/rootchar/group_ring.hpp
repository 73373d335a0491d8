#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "rootchar/exact.hpp"

namespace rootchar {

/// Finite element sum_v c_v e^v of the group ring Z[Q^dim]. Coefficients are
/// never stored as zero; terms are kept sorted lexicographically by exponent.
class GroupRingElement {
public:
    using TermMap = std::map<Vector, Integer>;

    explicit GroupRingElement(std::size_t dim) : dim_(dim) {}
    GroupRingElement(std::size_t dim, TermMap terms);

    static GroupRingElement one(std::size_t dim);
    static GroupRingElement monomial(const Vector& v, const Integer& c = 1);

    std::size_t dim() const { return dim_; }
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    Integer coefficient(const Vector& v) const;

    /// Adds c e^v, removing the term if the coefficient cancels.
    void add_term(const Vector& v, const Integer& c);

    /// e^shift times this element.
    GroupRingElement translated(const Vector& shift) const;
    /// Terms with <v, grading> <= cutoff.
    GroupRingElement truncated(const Vector& grading, const Rational& cutoff) const;

    GroupRingElement& operator+=(const GroupRingElement& o);
    GroupRingElement& operator-=(const GroupRingElement& o);
    GroupRingElement operator-() const;
    friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }
    friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) { return a -= b; }
    friend bool operator==(const GroupRingElement& a, const GroupRingElement& b) = default;

private:
    std::size_t dim_;
    TermMap terms_;
};

GroupRingElement mul(const GroupRingElement& a, const GroupRingElement& b);
inline GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
    return mul(a, b);
}

/// Exponents with nonzero coefficient, sorted lexicographically.
std::vector<Vector> support(const GroupRingElement& x);

/// Multiplicity function m: V -> N with finite nonempty support and m(0) = 0.
class SupportMap {
public:
    SupportMap(std::size_t dim, std::map<Vector, std::int64_t> entries);

    std::size_t dim() const { return dim_; }
    const std::map<Vector, std::int64_t>& entries() const { return entries_; }
    std::int64_t multiplicity(const Vector& v) const;
    std::vector<Vector> support() const;
    std::int64_t total_multiplicity() const;

    friend bool operator==(const SupportMap&, const SupportMap&) = default;

private:
    std::size_t dim_;
    std::map<Vector, std::int64_t> entries_;
};

/// Integer-valued (possibly negative) multiplicity function with m(0) = 0.
class SignedSupportMap {
public:
    SignedSupportMap(std::size_t dim, std::map<Vector, std::int64_t> entries);

    std::size_t dim() const { return dim_; }
    const std::map<Vector, std::int64_t>& entries() const { return entries_; }
    std::int64_t multiplicity(const Vector& v) const;
    std::vector<Vector> support() const;

    friend bool operator==(const SignedSupportMap&, const SignedSupportMap&) = default;

private:
    std::size_t dim_;
    std::map<Vector, std::int64_t> entries_;
};

struct Factor {
    Vector v;
    std::int64_t mult = 1;
};

/// prod_s (1 - e^s)^{m(s)}, multiplied along a balanced tree over the sorted
/// support.
GroupRingElement expand_product(const SupportMap& m);

/// prod_s (1 - e^s)^{m(s)} for signed m, evaluated as an exact quotient.
/// Throws NotDivisible when the quotient is not a finite element.
GroupRingElement expand_signed(const SignedSupportMap& m);

/// prod (1 - e^s)^mult over the factors, discarding every term of grade
/// <v, grading> above cutoff after each multiplication. Every factor must have
/// positive grade (InvalidInput otherwise); factors above the cutoff only
/// contribute their constant term.
GroupRingElement truncated_product(std::span<const Factor> factors, const Vector& grading,
                                   const Rational& cutoff);

/// q with q * b = a. Throws NotDivisible if no such finite q exists.
GroupRingElement exact_divide(const GroupRingElement& a, const GroupRingElement& b);

/// m' = m - [b] + [-b]. Then F(m') = -e^{-b} F(m).
SupportMap shift_equivalent(const SupportMap& m, const Vector& b);
SignedSupportMap shift_equivalent(const SignedSupportMap& m, const Vector& b);

namespace detail {
/// Schoolbook convolution over exact rational exponents, no packing.
GroupRingElement mul_reference(const GroupRingElement& a, const GroupRingElement& b);
}  // namespace detail

}  // namespace rootchar
