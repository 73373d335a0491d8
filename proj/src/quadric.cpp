#include "rootchar/quadric.hpp"

#include <vector>

namespace rootchar {

bool lies_on(const SphereFit& fit, const Vector& p) { return norm_sq(p - fit.center) == fit.radius_sq; }

bool lies_on(const ParaboloidFit& fit, const AffineVector& p) {
    const AffineVector d = p - fit.c;
    return d.level == fit.r * norm_sq(d.part);
}

std::optional<SphereFit> fit_sphere(std::span<const Vector> points) {
    if (points.empty()) throw InvalidInput("fit_sphere: no points");
    const std::size_t dim = points.front().dim();
    for (const auto& p : points)
        if (p.dim() != dim) throw DimensionMismatch("fit_sphere: points of unequal dimension");

    const Vector& base = points.front();
    std::vector<Vector> rows, diffs;
    std::vector<Rational> rhs;
    for (std::size_t i = 1; i < points.size(); ++i) {
        diffs.push_back(points[i] - base);
        rows.push_back(Rational(2) * diffs.back());
        rhs.push_back(norm_sq(points[i]) - norm_sq(base));
    }
    const auto full = solve_linear(rows, rhs, dim);
    if (full.kind == LinearSolution::Kind::inconsistent) return std::nullopt;

    SphereFit fit;
    std::vector<Vector> hull;
    for (const auto& d : diffs)
        if (!d.is_zero()) hull.push_back(d);
    if (hull.empty()) {
        // Only one distinct point: the forced radius would be zero.
        fit.center = base + full.kernel_basis.front();
    } else {
        const auto sr = span_rank(hull);
        std::vector<Vector> basis;
        for (auto i : sr.basis_indices) basis.push_back(hull[i]);
        std::vector<Vector> trows;
        std::vector<Rational> trhs;
        for (const auto& d : hull) {
            Vector row(basis.size());
            for (std::size_t j = 0; j < basis.size(); ++j) row[j] = Rational(2) * inner(d, basis[j]);
            trows.push_back(std::move(row));
            trhs.push_back(norm_sq(d));
        }
        const auto sol = solve_linear(trows, trhs, basis.size());
        if (sol.kind != LinearSolution::Kind::unique)
            throw InternalInconsistency("fit_sphere: circumcentre system not uniquely solvable");
        fit.center = base;
        for (std::size_t j = 0; j < basis.size(); ++j) fit.center += (*sol.particular)[j] * basis[j];
    }
    fit.radius_sq = norm_sq(base - fit.center);
    if (fit.radius_sq.sign() <= 0) throw InternalInconsistency("fit_sphere: nonpositive radius");
    for (const auto& p : points)
        if (!lies_on(fit, p)) throw InternalInconsistency("fit_sphere: witness fails on " + p.str());
    return fit;
}

std::optional<ParaboloidFit> fit_paraboloid(std::span<const AffineVector> points) {
    if (points.empty()) throw InvalidInput("fit_paraboloid: no points");
    const std::size_t dim = points.front().dim();
    for (const auto& p : points)
        if (p.dim() != dim) throw DimensionMismatch("fit_paraboloid: points of unequal dimension");

    // Unknowns (r, d) with d = r p2(c):
    // p1(l_i - l_0) = r (|p2 l_i|^2 - |p2 l_0|^2) - 2 <p2(l_i - l_0), d>.
    const AffineVector& base = points.front();
    std::vector<Vector> rows;
    std::vector<Rational> rhs;
    for (std::size_t i = 1; i < points.size(); ++i) {
        Vector row(dim + 1);
        row[0] = norm_sq(points[i].part) - norm_sq(base.part);
        const Vector dp = points[i].part - base.part;
        for (std::size_t j = 0; j < dim; ++j) row[j + 1] = Rational(-2) * dp[j];
        rows.push_back(std::move(row));
        rhs.push_back(points[i].level - base.level);
    }
    const auto sol = solve_linear(rows, rhs, dim + 1);
    if (sol.kind == LinearSolution::Kind::inconsistent) return std::nullopt;

    Vector x = *sol.particular;
    const Vector* free_r = nullptr;
    for (const auto& k : sol.kernel_basis)
        if (!k[0].is_zero()) {
            free_r = &k;
            break;
        }
    if (free_r) {
        x += ((Rational(1) - x[0]) / (*free_r)[0]) * *free_r;
    } else if (x[0].sign() <= 0) {
        return std::nullopt;
    }

    ParaboloidFit fit;
    fit.r = x[0];
    Vector centre_part(dim);
    for (std::size_t j = 0; j < dim; ++j) centre_part[j] = x[j + 1] / fit.r;
    fit.c = AffineVector(base.level - fit.r * norm_sq(base.part - centre_part), centre_part);
    for (const auto& p : points)
        if (!lies_on(fit, p)) throw InternalInconsistency("fit_paraboloid: witness fails on " + p.str());
    return fit;
}

}  // namespace rootchar
