#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "rootchar/error.hpp"

namespace rootchar {

using Integer = mpz_class;

/// Exact rational number, always kept in lowest terms with a positive
/// denominator.
class Rational {
public:
    Rational() = default;
    Rational(int n) : q_(n) {}
    Rational(long n) : q_(n) {}
    Rational(long long n) : q_(static_cast<long>(n)) {}
    Rational(unsigned int n) : q_(n) {}
    Rational(unsigned long n) : q_(n) {}
    Rational(const Integer& n) : q_(n) {}
    Rational(const Integer& num, const Integer& den);
    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    /// Accepts "p", "-p" or "p/q" (q may be negative; the result is canonical).
    static Rational parse(std::string_view text);

    Integer numerator() const { return q_.get_num(); }
    Integer denominator() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    int sign() const { return sgn(q_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return q_.get_den() == 1; }

    /// Canonical text: "p" for integers, "p/q" otherwise.
    std::string str() const;

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class q_;
};

Rational abs(const Rational& x);

/// Coordinate vector over Q. Equality is exact and ordering lexicographic.
class Vector {
public:
    Vector() = default;
    explicit Vector(std::size_t dim) : c_(dim) {}
    explicit Vector(std::vector<Rational> coords) : c_(std::move(coords)) {}
    Vector(std::initializer_list<Rational> coords) : c_(coords) {}

    static Vector unit(std::size_t dim, std::size_t i);

    std::size_t dim() const { return c_.size(); }
    const Rational& operator[](std::size_t i) const { return c_[i]; }
    Rational& operator[](std::size_t i) { return c_[i]; }
    auto begin() const { return c_.begin(); }
    auto end() const { return c_.end(); }
    const std::vector<Rational>& coords() const { return c_; }

    bool is_zero() const;
    std::string str() const;

    Vector& operator+=(const Vector& o);
    Vector& operator-=(const Vector& o);
    Vector& operator*=(const Rational& s);

    friend Vector operator+(Vector a, const Vector& b) { return a += b; }
    friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
    friend Vector operator*(const Rational& s, Vector v) { return v *= s; }
    friend Vector operator*(Vector v, const Rational& s) { return v *= s; }
    Vector operator-() const;

    friend bool operator==(const Vector& a, const Vector& b) = default;
    friend std::strong_ordering operator<=>(const Vector& a, const Vector& b) {
        if (auto c = a.dim() <=> b.dim(); c != 0) return c;
        for (std::size_t i = 0; i < a.dim(); ++i)
            if (auto c = a.c_[i] <=> b.c_[i]; c != 0) return c;
        return std::strong_ordering::equal;
    }

private:
    std::vector<Rational> c_;
};

/// Standard Euclidean inner product; throws DimensionMismatch.
Rational inner(const Vector& u, const Vector& v);
Rational norm_sq(const Vector& v);

/// Square matrix (or rectangular) of rationals, row-major.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
    Rational& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }

    Vector apply(const Vector& v) const;
    Matrix transpose() const;
    Rational determinant() const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b) = default;
    friend std::strong_ordering operator<=>(const Matrix& a, const Matrix& b) {
        if (auto c = a.rows_ <=> b.rows_; c != 0) return c;
        if (auto c = a.cols_ <=> b.cols_; c != 0) return c;
        for (std::size_t i = 0; i < a.a_.size(); ++i)
            if (auto c = a.a_[i] <=> b.a_[i]; c != 0) return c;
        return std::strong_ordering::equal;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> a_;
};

struct LinearSolution {
    enum class Kind { unique, affine_family, inconsistent };
    Kind kind = Kind::inconsistent;
    std::optional<Vector> particular;
    std::vector<Vector> kernel_basis;
    /// Pivot columns, in increasing order.
    std::vector<std::size_t> pivots;
};

/// Exact Gaussian elimination of rows * x = rhs over Q with x in Q^dim.
/// Pivots are taken in column order and free variables are set to zero in
/// the particular solution.
LinearSolution solve_linear(std::span<const Vector> rows, std::span<const Rational> rhs,
                            std::size_t dim);
/// Same as above; dim is taken from the rows, which must be nonempty.
LinearSolution solve_linear(std::span<const Vector> rows, std::span<const Rational> rhs);

struct SpanRank {
    std::size_t rank = 0;
    std::vector<std::size_t> basis_indices;
};

/// Rank of the span, with a greedy basis chosen in input order.
SpanRank span_rank(std::span<const Vector> vectors);

/// Basis of the orthogonal complement of span(vectors) inside Q^dim,
/// scaled to integer coordinates.
std::vector<Vector> orthogonal_complement(std::span<const Vector> vectors, std::size_t dim);

/// Nonzero n with { s in S : <s,n> = 0 } = (R p) ∩ S. Deterministic.
/// When p is nonzero and p-perp is trivial (dim 1) no such n exists; the
/// first candidate of the whole space is returned instead.
Vector generic_separator(std::span<const Vector> S, const Vector& p);

/// Least common multiple of all coordinate denominators.
Integer common_denominator(std::span<const Vector> vectors);

}  // namespace rootchar
