#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rootchar/affine_vector.hpp"
#include "rootchar/exact.hpp"
#include "rootchar/finite_root.hpp"
#include "rootchar/group_ring.hpp"
#include "rootchar/quadric.hpp"

namespace rootchar {

/// x - (2 f(x) / |p2 a|^2) p2(a), f(x) = <p2 a, x> + p1(a). Throws for isotropic a.
Vector affine_reflect_point(const AffineVector& a, const Vector& x);
/// v - (2 <p2 a, p2 v> / |p2 a|^2) a. Throws for isotropic a.
AffineVector affine_reflect_vec(const AffineVector& a, const AffineVector& v);
/// Matrix of affine_reflect_vec(a, .) on coordinates (level, part...).
Matrix affine_reflection_matrix(const AffineVector& a);

/// Grade <s, n> with the full inner product.
Rational grade(const AffineVector& s, const AffineVector& n);

struct AffineItem {
    AffineVector v;
    std::int64_t mult = 1;
    friend bool operator==(const AffineItem&, const AffineItem&) = default;
};

struct ExplicitSupport {
    std::vector<AffineItem> items;
};

/// Real roots (k u_a; a) for a in the finite system and k in Z, plus
/// imaginary roots k (u_a; 0) over the simple directions.
struct GeneratedSupport {
    RootSystem finite;
    /// u_a per direction; directions not listed have period 1.
    std::map<Vector, Rational> period;
    /// If set, every imaginary root present gets this multiplicity instead of
    /// the counted one.
    std::optional<std::int64_t> imaginary_multiplicity;

    Rational period_of(const Vector& a) const;
};

struct AffineSupportSpec {
    std::variant<ExplicitSupport, GeneratedSupport> kind;
    AffineVector grading;  ///< level > 0
    Rational cutoff;       ///< on grade, > 0

    bool is_generated() const { return std::holds_alternative<GeneratedSupport>(kind); }
    std::size_t dim() const { return grading.dim(); }
};

/// Throws InvalidInput describing the first violated condition.
void validate(const AffineSupportSpec& spec);

/// Support elements of grade <= cutoff with multiplicities, sorted by vector.
/// Throws InvalidInput("empty support") if nothing is left.
std::vector<AffineItem> enumerate_support(const AffineSupportSpec& spec);

struct AffineView {
    std::vector<Vector> R1;
    std::vector<Vector> Rinf;
    std::map<Vector, AffineVector> q;
    std::map<Vector, Rational> u;
};

/// Splits p2 of the truncated real roots into directions seen at one level and
/// directions seen at several. Throws InvalidInput("non-arithmetic levels ...").
AffineView decompose(const std::vector<AffineVector>& roots, const AffineVector& grading);

/// k (u_a; 0) for a in base ∩ Rinf and k >= 1 with grade <= cutoff; the
/// multiplicity counts the pairs (a, k).
std::vector<AffineItem> imaginary_roots(const AffineView& view, const std::vector<Vector>& base,
                                        const Rational& cutoff, const AffineVector& grading);

struct AffineAxiomReport {
    Rational cutoff;
    bool ar1 = true;  ///< span-relative; ranks reported below
    bool ar2 = true;  ///< closure, for images with |grade| <= cutoff
    bool ar3 = true;
    bool ar4 = true;  ///< AR4' via the arithmetic level structure
    bool ar5 = true;
    bool irreducible = true;
    std::size_t rank = 0;     ///< dim span of the truncated real roots
    std::size_t p2_rank = 0;  ///< dim span of their p2 images
    std::vector<std::string> failures;

    bool all() const { return ar1 && ar2 && ar3 && ar4 && ar5; }
};

/// Axioms on R_C = S_re ∪ -S_re, the real roots of grade at most the cutoff.
AffineAxiomReport check_affine_axioms(const std::vector<AffineVector>& real_roots,
                                      const AffineVector& grading, const Rational& cutoff);
AffineAxiomReport check_affine_axioms(const AffineSupportSpec& spec);

/// Affine simple roots of a generated spec: the indecomposable positive real
/// roots. Exactly rank + 1 of them, or InvalidInput.
std::vector<AffineVector> affine_simple_roots(const AffineSupportSpec& spec);

/// sum det(w) e^{s(w)} over the affine Weyl group, restricted to grade(s(w)) <= cutoff.
/// Needs a generated spec.
GroupRingElement affine_weyl_rhs(const AffineSupportSpec& spec, std::size_t bound = kDefaultWeylBound);

/// prod (1 - e^s)^{m(s)} over the spec's support, truncated at the cutoff.
GroupRingElement affine_lhs(const AffineSupportSpec& spec);

struct AffineVerdict {
    Rational cutoff;
    bool on_paraboloid = false;
    std::optional<ParaboloidFit> fit;
    std::vector<AffineVector> lambda;
    AffineAxiomReport axioms;
    bool disjoint = false;
    bool real_multiplicities_ok = false;
    bool imaginary_multiplicities_ok = false;
    bool multiplicities_ok = false;
    bool irreducible = false;
    /// Assumption (A) for this truncation: S(m)_re irreducible. When false the
    /// equivalence is not asserted.
    bool assumption_holds = false;
    bool root_system = false;  ///< the axiomatic verdict
    std::vector<AffineItem> predicted_imaginary;
    Vector finite_separator;  ///< picks the finite positive system for mult
};

/// Paraboloid test on the truncated support of F(m) and, independently, the
/// root-system test, both at the spec's cutoff. Throws InternalInconsistency
/// when assumption (A) holds and the verdicts differ.
AffineVerdict characterize_affine(const AffineSupportSpec& spec);

}  // namespace rootchar
