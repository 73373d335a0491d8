#pragma once

#include <optional>
#include <span>

#include "rootchar/affine_vector.hpp"
#include "rootchar/exact.hpp"

namespace rootchar {

/// Witness that points lie on { x : |x - center|^2 = radius_sq }, radius_sq > 0.
struct SphereFit {
    Vector center;
    Rational radius_sq;
    friend bool operator==(const SphereFit&, const SphereFit&) = default;
};

/// Witness that points lie on { x : p1(x - c) = r |p2(x - c)|^2 }, r > 0.
struct ParaboloidFit {
    AffineVector c;
    Rational r;
    friend bool operator==(const ParaboloidFit&, const ParaboloidFit&) = default;
};

/// Decides exactly whether the points lie on a common sphere of positive
/// radius. The witness centre is the circumcentre inside the affine hull of
/// the points (for a single point: the point moved by one kernel direction).
std::optional<SphereFit> fit_sphere(std::span<const Vector> points);

/// Decides exactly whether the points lie on a common paraboloid
/// p1(x - c) = r |p2(x - c)|^2 with r > 0, via the linearisation d = r p2(c).
std::optional<ParaboloidFit> fit_paraboloid(std::span<const AffineVector> points);

bool lies_on(const SphereFit& fit, const Vector& p);
bool lies_on(const ParaboloidFit& fit, const AffineVector& p);

}  // namespace rootchar
