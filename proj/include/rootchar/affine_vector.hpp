#pragma once

#include <compare>
#include <string>

#include "rootchar/exact.hpp"

namespace rootchar {

/// Element (level; part) of Q ⊕ V. The level is the p1 projection and the
/// part the p2 projection.
struct AffineVector {
    Rational level;
    Vector part;

    AffineVector() = default;
    AffineVector(Rational lvl, Vector p) : level(std::move(lvl)), part(std::move(p)) {}

    /// Dimension of V (the part).
    std::size_t dim() const { return part.dim(); }
    bool is_isotropic() const { return part.is_zero(); }

    /// Flattened coordinates (level, part_0, ..., part_{N-1}).
    Vector to_vector() const;
    static AffineVector from_vector(const Vector& v);

    std::string str() const;

    AffineVector operator-() const { return {-level, -part}; }
    AffineVector& operator+=(const AffineVector& o);
    AffineVector& operator-=(const AffineVector& o);
    friend AffineVector operator+(AffineVector a, const AffineVector& b) { return a += b; }
    friend AffineVector operator-(AffineVector a, const AffineVector& b) { return a -= b; }
    friend AffineVector operator*(const Rational& s, const AffineVector& v) { return {s * v.level, s * v.part}; }

    friend bool operator==(const AffineVector&, const AffineVector&) = default;
    friend std::strong_ordering operator<=>(const AffineVector& a, const AffineVector& b) {
        if (auto c = a.level <=> b.level; c != 0) return c;
        return a.part <=> b.part;
    }
};

/// Full inner product n1 n2 + <v1, v2> on Q ⊕ V.
Rational full_inner(const AffineVector& a, const AffineVector& b);
/// Affine (part-only) inner product <p2 a, p2 b>.
Rational affine_inner(const AffineVector& a, const AffineVector& b);
Rational affine_norm_sq(const AffineVector& a);

}  // namespace rootchar
