#include "rootchar/affine_vector.hpp"

namespace rootchar {

Vector AffineVector::to_vector() const {
    Vector v(part.dim() + 1);
    v[0] = level;
    for (std::size_t i = 0; i < part.dim(); ++i) v[i + 1] = part[i];
    return v;
}

AffineVector AffineVector::from_vector(const Vector& v) {
    if (v.dim() < 1) throw DimensionMismatch("affine vector needs a level coordinate");
    Vector p(v.dim() - 1);
    for (std::size_t i = 0; i + 1 < v.dim(); ++i) p[i] = v[i + 1];
    return {v[0], std::move(p)};
}

std::string AffineVector::str() const {
    std::string s = "(" + level.str() + ";";
    for (std::size_t i = 0; i < part.dim(); ++i) {
        if (i) s += ",";
        s += part[i].str();
    }
    return s + ")";
}

AffineVector& AffineVector::operator+=(const AffineVector& o) {
    level += o.level;
    part += o.part;
    return *this;
}

AffineVector& AffineVector::operator-=(const AffineVector& o) {
    level -= o.level;
    part -= o.part;
    return *this;
}

Rational full_inner(const AffineVector& a, const AffineVector& b) {
    return a.level * b.level + inner(a.part, b.part);
}

Rational affine_inner(const AffineVector& a, const AffineVector& b) { return inner(a.part, b.part); }

Rational affine_norm_sq(const AffineVector& a) { return norm_sq(a.part); }

}  // namespace rootchar
