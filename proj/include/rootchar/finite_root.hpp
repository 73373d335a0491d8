#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rootchar/exact.hpp"
#include "rootchar/group_ring.hpp"
#include "rootchar/quadric.hpp"

namespace rootchar {

/// Finite set of nonzero vectors, stored sorted and without duplicates.
/// rank is dim span(roots), which may be smaller than the ambient dimension.
class RootSystem {
public:
    explicit RootSystem(std::vector<Vector> roots);

    const std::vector<Vector>& roots() const { return roots_; }
    std::size_t size() const { return roots_.size(); }
    std::size_t ambient_dim() const { return ambient_dim_; }
    std::size_t rank() const { return rank_; }
    bool contains(const Vector& v) const;

    friend bool operator==(const RootSystem& a, const RootSystem& b) { return a.roots_ == b.roots_; }

private:
    std::vector<Vector> roots_;
    std::size_t ambient_dim_ = 0;
    std::size_t rank_ = 0;
};

/// Reflection in the hyperplane orthogonal to a: v - (2<a,v>/<a,a>) a.
Vector reflect(const Vector& a, const Vector& v);
Matrix reflection_matrix(const Vector& a);

struct AxiomReport {
    bool fr1 = true;  ///< spans span(R); holds by the span-relative convention
    bool fr2 = true;  ///< closed under every w_a
    bool fr3 = true;  ///< 2<a,b>/<a,a> integral
    bool fr4 = true;  ///< finite and nonempty
    bool fr5 = true;  ///< reduced: R a ∩ R = {a, -a}
    std::size_t rank = 0;
    /// Human-readable witnesses for the failed axioms (a few per axiom).
    std::vector<std::string> failures;

    bool all() const { return fr1 && fr2 && fr3 && fr4 && fr5; }
};

AxiomReport check_axioms(const RootSystem& R);

struct PositiveSystem {
    std::vector<Vector> positives;
    Vector separator;
};

/// R+ = { a : <a,n> > 0 } for the deterministic generic separator n of R.
PositiveSystem positive_roots(const RootSystem& R);

/// Positive roots that are not the sum of two positive roots.
std::vector<Vector> base(std::span<const Vector> positives);

/// Half the sum of the given vectors.
Vector weyl_vector(std::span<const Vector> positives);

struct WeylElement {
    Matrix matrix;
    int det = 1;
    std::vector<std::size_t> word;  ///< indices into the simple roots
};

inline constexpr std::size_t kDefaultWeylBound = 1'000'000;

/// W generated by the simple reflections, by breadth-first closure. Output is
/// sorted by word length, then lexicographically by word (each element carries
/// its lexicographically least reduced word). Throws GroupTooLarge if |W|
/// exceeds bound; when the Dynkin type is recognised this is decided before
/// any enumeration.
std::vector<WeylElement> enumerate_weyl(std::span<const Vector> simple_roots,
                                        std::size_t bound = kDefaultWeylBound);
std::vector<WeylElement> enumerate_weyl(const RootSystem& R, std::size_t bound = kDefaultWeylBound);

/// sum_{w in W} det(w) e^{rho - w(rho)} for the system with these positives.
GroupRingElement denominator_rhs(std::span<const Vector> positives,
                                 std::size_t bound = kDefaultWeylBound);

struct DynkinComponent {
    char family = 'A';  ///< one of A B C D E F G
    std::size_t rank = 0;
    std::string name() const { return std::string(1, family) + std::to_string(rank); }
};

struct RootType {
    std::vector<DynkinComponent> components;  ///< rank descending, then family
    std::string name;                         ///< e.g. "B2×A1"
    Integer weyl_order;
};

/// Identifies the Cartan matrix 2<a_i,a_j>/<a_j,a_j> of the simple roots, up
/// to relabelling, with the standard connected Dynkin diagrams.
/// Throws InvalidInput("unrecognized ...") if no component matches.
RootType identify_type(std::span<const Vector> simple_roots);

/// Type name of a reduced root system. Throws InvalidInput if R fails the axioms.
std::string classify(const RootSystem& R);

/// Standard Cartan matrix (Bourbaki labelling) of a connected type.
std::vector<std::vector<long>> standard_cartan(char family, std::size_t rank);
Integer weyl_order(const DynkinComponent& c);

struct FiniteVerdict {
    bool on_sphere = false;
    std::optional<SphereFit> fit;
    std::vector<Vector> lambda;  ///< support of F(m)
    AxiomReport axioms;          ///< for S(m) ∪ -S(m)
    bool disjoint = false;       ///< S(m) ∩ -S(m) = ∅
    bool multiplicities_ok = false;
    std::optional<RootSystem> recovered;
    std::optional<std::string> type;
    std::optional<Vector> weyl_vector;  ///< half the sum of S(m), when recovered
    std::size_t rank = 0;
};

/// Runs the sphere test on the support of F(m) and, independently, the
/// root-system test on S(m) ∪ -S(m). Throws InternalInconsistency if the two
/// verdicts disagree.
FiniteVerdict characterize_finite(const SupportMap& m);

}  // namespace rootchar
