#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rootchar/affine_root.hpp"
#include "rootchar/exact.hpp"
#include "rootchar/finite_root.hpp"
#include "rootchar/group_ring.hpp"
#include "rootchar/quadric.hpp"

namespace rootchar {

struct CatalogEntry {
    std::string name;
    std::size_t ambient_dim = 0;
    std::vector<Vector> roots;      ///< sorted
    std::vector<Vector> positives;  ///< { a : <a, separator> > 0 }, sorted
    Vector separator;
    Integer weyl_order;
    std::size_t positive_count = 0;

    RootSystem system() const { return RootSystem(roots); }
    /// m = 1 on the positive roots.
    SupportMap positive_support() const;
};

/// A1.., B2.., C3.., D4.. (rank <= 8), E6, E7, E8, F4, G2.
/// A_n lives in the sum-zero hyperplane of Q^{n+1}, G2 in that of Q^3,
/// B/C/D/F4/E8 in Q^n; E7 and E6 are cut out of E8 by orthogonality.
CatalogEntry standard_finite(std::string_view name);
std::vector<std::string> catalog_names();

/// Untwisted affinization: every direction has period 1, levels k in Z. The
/// default grading is (1; t g) with g the entry's separator and
/// t = 1/(3 max <g, a>).
AffineSupportSpec untwisted_affine(std::string_view name, const Rational& cutoff,
                                   std::optional<AffineVector> grading = std::nullopt);
AffineVector default_affine_grading(const CatalogEntry& e);

/// Möbius function. n >= 1.
long mobius(long n);

/// a_k = (1/k) sum_{d | k} mu(k/d) 2^d for k = 1..kmax, the exponents with
/// prod (1 - X^k)^{a_k} = 1 - 2X. Throws InternalInconsistency if a division
/// is inexact or some a_k < 1.
std::vector<Integer> remark29_exponents(long kmax);

/// The same exponents found by matching power-series coefficients of
/// prod (1 - X^k)^{a_k} against 1 - 2X degree by degree.
std::vector<Integer> series_inversion_oracle(long kmax);

struct SignedSphereExample {
    SignedSupportMap m;
    Vector alpha, beta;
    GroupRingElement expansion;
    SphereFit fit;
    AxiomReport axioms;  ///< for S(m) ∪ -S(m)
};

/// m(2a) = m(2b) = m(a+b) = 1, m(a) = m(b) = -1 with a = (2,0,0,0),
/// b = (-1,1,1,1): |a|^2 = |b|^2 = 4, <a,b> = -2. The support of the
/// expansion lies on a sphere of radius 2 although S(m) ∪ -S(m) is no root system.
SignedSphereExample remark210_counterexample();

}  // namespace rootchar
