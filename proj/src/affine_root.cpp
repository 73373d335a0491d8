#include "rootchar/affine_root.hpp"

#include <algorithm>
#include <set>

namespace rootchar {

namespace {

constexpr std::size_t kMaxWitnesses = 3;

Integer floor_of(const Rational& x) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), x.numerator().get_mpz_t(), x.denominator().get_mpz_t());
    return q;
}

void witness(std::vector<std::string>& out, std::size_t& count, std::string msg) {
    if (count++ < kMaxWitnesses) out.push_back(std::move(msg));
}

bool parallel_to(const Vector& b, const Vector& a, Rational& t) {
    std::size_t i = 0;
    while (i < a.dim() && a[i].is_zero()) ++i;
    t = b[i] / a[i];
    return b == t * a;
}

const GeneratedSupport& generated_of(const AffineSupportSpec& spec, const char* who) {
    if (!spec.is_generated()) throw InvalidInput(std::string(who) + ": needs a generated spec");
    return std::get<GeneratedSupport>(spec.kind);
}

// Real roots (k u_a; a) with grade in (0, max_grade] or, if max_level is set,
// with level <= max_level.
std::vector<AffineVector> generated_real(const GeneratedSupport& g, const AffineVector& n,
                                         const std::optional<Rational>& max_grade,
                                         const std::optional<Rational>& max_level) {
    std::vector<AffineVector> out;
    for (const auto& a : g.finite.roots()) {
        const Rational u = g.period_of(a);
        const Rational ga = inner(a, n.part);
        const Rational step = u * n.level;
        // Smallest k with k step + ga > 0.
        Integer k = floor_of(-ga / step) + 1;
        for (;; ++k) {
            const Rational lvl = Rational(k) * u;
            const Rational gr = lvl * n.level + ga;
            if (max_grade && gr > *max_grade) break;
            if (max_level && lvl > *max_level) break;
            out.push_back({lvl, a});
        }
    }
    return out;
}

std::vector<Vector> finite_base_by_grading(const GeneratedSupport& g, const AffineVector& n) {
    std::vector<Vector> pos;
    for (const auto& a : g.finite.roots())
        if (inner(a, n.part).sign() > 0) pos.push_back(a);
    return base(pos);
}

}  // namespace

Vector affine_reflect_point(const AffineVector& a, const Vector& x) {
    if (a.is_isotropic()) throw InvalidInput("affine reflection: isotropic vector");
    const Rational f = inner(a.part, x) + a.level;
    return x - (Rational(2) * f / norm_sq(a.part)) * a.part;
}

AffineVector affine_reflect_vec(const AffineVector& a, const AffineVector& v) {
    if (a.is_isotropic()) throw InvalidInput("affine reflection: isotropic vector");
    const Rational c = Rational(2) * inner(a.part, v.part) / norm_sq(a.part);
    return v - c * a;
}

Matrix affine_reflection_matrix(const AffineVector& a) {
    if (a.is_isotropic()) throw InvalidInput("affine reflection: isotropic vector");
    const Vector av = a.to_vector();
    const std::size_t n = av.dim();
    const Rational k = Rational(2) / norm_sq(a.part);
    Matrix m = Matrix::identity(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 1; j < n; ++j) m(i, j) -= k * av[i] * av[j];
    return m;
}

Rational grade(const AffineVector& s, const AffineVector& n) { return full_inner(s, n); }

Rational GeneratedSupport::period_of(const Vector& a) const {
    auto it = period.find(a);
    return it == period.end() ? Rational(1) : it->second;
}

void validate(const AffineSupportSpec& spec) {
    const auto& n = spec.grading;
    if (n.level.sign() <= 0) throw InvalidInput("grading must have positive level");
    if (spec.cutoff.sign() <= 0) throw InvalidInput("cutoff C must be > 0");
    const std::size_t dim = spec.dim();

    if (const auto* e = std::get_if<ExplicitSupport>(&spec.kind)) {
        if (e->items.empty()) throw InvalidInput("empty support");
        std::set<AffineVector> seen;
        for (const auto& it : e->items) {
            if (it.v.dim() != dim) throw DimensionMismatch("support item of wrong dimension");
            if (it.v.level.is_zero() && it.v.part.is_zero()) throw InvalidInput("m(0) must be 0");
            if (it.mult < 1) throw InvalidInput("multiplicities must be positive");
            const Rational g = grade(it.v, n);
            if (g.sign() <= 0) throw InvalidInput("support item " + it.v.str() + " has grade <= 0");
            if (g > spec.cutoff) throw InvalidInput("support item " + it.v.str() + " has grade above the cutoff");
            if (!seen.insert(it.v).second) throw InvalidInput("duplicate support item " + it.v.str());
        }
        return;
    }

    const auto& g = std::get<GeneratedSupport>(spec.kind);
    if (g.finite.ambient_dim() != dim) throw DimensionMismatch("finite system and grading differ in dimension");
    if (!check_axioms(g.finite).all()) throw InvalidInput("finite system fails the root-system axioms");
    for (const auto& [a, u] : g.period) {
        if (!g.finite.contains(a)) throw InvalidInput("period given for a non-root " + a.str());
        if (u.sign() <= 0) throw InvalidInput("periods must be positive");
    }
    for (const auto& a : g.finite.roots()) {
        const Rational u = g.period_of(a);
        if (g.period_of(-a) != u) throw InvalidInput("periods of a and -a differ for " + a.str());
        const Rational ga = inner(a, n.part);
        if (ga.is_zero()) throw InvalidInput("grading is orthogonal to root " + a.str());
        if (!(abs(ga) < u * n.level))
            throw InvalidInput("grading does not induce the standard positive system at " + a.str());
    }
    if (g.imaginary_multiplicity && *g.imaginary_multiplicity < 0)
        throw InvalidInput("imaginary multiplicity must be >= 0");
}

std::vector<AffineItem> enumerate_support(const AffineSupportSpec& spec) {
    validate(spec);
    std::vector<AffineItem> out;
    if (const auto* e = std::get_if<ExplicitSupport>(&spec.kind)) {
        out = e->items;
    } else {
        const auto& g = std::get<GeneratedSupport>(spec.kind);
        for (auto& v : generated_real(g, spec.grading, spec.cutoff, std::nullopt)) out.push_back({std::move(v), 1});
        std::map<AffineVector, std::int64_t> im;
        for (const auto& a : finite_base_by_grading(g, spec.grading)) {
            const Rational u = g.period_of(a);
            for (long k = 1; Rational(k) * u * spec.grading.level <= spec.cutoff; ++k)
                ++im[AffineVector(Rational(k) * u, Vector(spec.dim()))];
        }
        for (const auto& [v, c] : im) {
            const std::int64_t mult = g.imaginary_multiplicity.value_or(c);
            if (mult > 0) out.push_back({v, mult});
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.v < y.v; });
    if (out.empty()) throw InvalidInput("empty support");
    return out;
}

AffineView decompose(const std::vector<AffineVector>& roots, const AffineVector& grading) {
    std::map<Vector, std::vector<AffineVector>> by_dir;
    for (const auto& r : roots) {
        if (r.is_isotropic()) throw InvalidInput("decompose: isotropic vector among real roots");
        by_dir[r.part].push_back(r);
    }
    AffineView view;
    for (auto& [a, list] : by_dir) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        if (list.size() == 1) {
            view.R1.push_back(a);
            continue;
        }
        const Rational u = list[1].level - list[0].level;
        for (std::size_t i = 2; i < list.size(); ++i)
            if (list[i].level - list[i - 1].level != u) throw InvalidInput("non-arithmetic levels over " + a.str());
        view.Rinf.push_back(a);
        view.u[a] = u;
        const AffineVector* best = &list.front();
        for (const auto& r : list)
            if (abs(grade(r, grading)) < abs(grade(*best, grading))) best = &r;
        view.q[a] = *best;
    }
    return view;
}

std::vector<AffineItem> imaginary_roots(const AffineView& view, const std::vector<Vector>& base_dirs,
                                        const Rational& cutoff, const AffineVector& grading) {
    std::map<AffineVector, std::int64_t> cnt;
    for (const auto& a : base_dirs) {
        auto it = view.u.find(a);
        if (it == view.u.end()) continue;
        for (long k = 1;; ++k) {
            AffineVector v(Rational(k) * it->second, Vector(a.dim()));
            if (grade(v, grading) > cutoff) break;
            ++cnt[v];
        }
    }
    std::vector<AffineItem> out;
    for (const auto& [v, c] : cnt) out.push_back({v, c});
    return out;
}

AffineAxiomReport check_affine_axioms(const std::vector<AffineVector>& real_roots, const AffineVector& grading,
                                      const Rational& cutoff) {
    AffineAxiomReport rep;
    rep.cutoff = cutoff;
    std::vector<AffineVector> R = real_roots;
    std::sort(R.begin(), R.end());
    R.erase(std::unique(R.begin(), R.end()), R.end());
    if (R.empty()) {
        rep.ar1 = false;
        rep.failures.push_back("AR1: no real roots");
        return rep;
    }
    auto in_r = [&](const AffineVector& v) { return std::binary_search(R.begin(), R.end(), v); };

    std::vector<Vector> full, parts;
    for (const auto& r : R) {
        if (r.is_isotropic()) throw InvalidInput("check_affine_axioms: isotropic vector among real roots");
        full.push_back(r.to_vector());
        parts.push_back(r.part);
    }
    rep.rank = span_rank(full).rank;
    rep.p2_rank = span_rank(parts).rank;

    std::size_t bad2 = 0, bad3 = 0, bad5 = 0;
    for (std::size_t i = 0; i < R.size(); ++i) {
        const auto& a = R[i];
        const Rational asq = norm_sq(a.part);
        for (std::size_t j = 0; j < R.size(); ++j) {
            const auto& b = R[j];
            const Rational c = Rational(2) * inner(a.part, b.part) / asq;
            if (!c.is_integer()) {
                rep.ar3 = false;
                witness(rep.failures, bad3, "AR3: 2<a,b>/<a,a> = " + c.str() + " for a=" + a.str() + ", b=" + b.str());
            }
            const AffineVector w = b - c * a;
            if (abs(grade(w, grading)) <= cutoff && !in_r(w)) {
                rep.ar2 = false;
                witness(rep.failures, bad2,
                        "AR2: w_a(b) = " + w.str() + " missing at level C for a=" + a.str() + ", b=" + b.str());
            }
            Rational t;
            if (parallel_to(full[j], full[i], t) && t != 1 && t != -1) {
                rep.ar5 = false;
                witness(rep.failures, bad5, "AR5: " + b.str() + " = " + t.str() + " * " + a.str());
            }
        }
        if (!in_r(-a)) {
            rep.ar5 = false;
            witness(rep.failures, bad5, "AR5: -a missing for a=" + a.str());
        }
    }

    try {
        decompose(R, grading);
    } catch (const InvalidInput& e) {
        rep.ar4 = false;
        rep.failures.push_back(std::string("AR4': ") + e.what());
    }

    std::vector<Vector> dirs = parts;
    std::sort(dirs.begin(), dirs.end());
    dirs.erase(std::unique(dirs.begin(), dirs.end()), dirs.end());
    std::vector<bool> seen(dirs.size(), false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const std::size_t x = stack.back();
        stack.pop_back();
        for (std::size_t y = 0; y < dirs.size(); ++y) {
            if (seen[y] || inner(dirs[x], dirs[y]).is_zero()) continue;
            seen[y] = true;
            ++reached;
            stack.push_back(y);
        }
    }
    if (reached != dirs.size()) {
        rep.irreducible = false;
        rep.failures.push_back("irreducibility: real directions split into orthogonal parts");
    }
    return rep;
}

namespace {

std::vector<AffineVector> truncated_real_roots(const std::vector<AffineItem>& items) {
    std::vector<AffineVector> R;
    for (const auto& it : items) {
        if (it.v.is_isotropic()) continue;
        R.push_back(it.v);
        R.push_back(-it.v);
    }
    return R;
}

}  // namespace

AffineAxiomReport check_affine_axioms(const AffineSupportSpec& spec) {
    const auto items = enumerate_support(spec);
    return check_affine_axioms(truncated_real_roots(items), spec.grading, spec.cutoff);
}

std::vector<AffineVector> affine_simple_roots(const AffineSupportSpec& spec) {
    validate(spec);
    const auto& g = generated_of(spec, "affine_simple_roots");
    Rational maxu = 0;
    for (const auto& a : g.finite.roots()) maxu = std::max(maxu, g.period_of(a));
    const Rational top = Rational(2) * maxu;

    const auto real = generated_real(g, spec.grading, std::nullopt, top);
    std::set<AffineVector> pos(real.begin(), real.end());
    for (const auto& a : finite_base_by_grading(g, spec.grading)) {
        const Rational u = g.period_of(a);
        for (long k = 1; Rational(k) * u <= top; ++k) pos.insert(AffineVector(Rational(k) * u, Vector(spec.dim())));
    }

    std::vector<AffineVector> simple;
    for (const auto& r : real) {
        bool decomposable = false;
        for (const auto& b : pos) {
            if (pos.count(r - b)) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable) simple.push_back(r);
    }
    std::sort(simple.begin(), simple.end());
    if (simple.size() != g.finite.rank() + 1)
        throw InvalidInput("affine_simple_roots: found " + std::to_string(simple.size()) +
                           " simple roots, expected rank + 1 (is the system irreducible?)");
    return simple;
}

GroupRingElement affine_weyl_rhs(const AffineSupportSpec& spec, std::size_t bound) {
    const auto simple = affine_simple_roots(spec);
    const std::size_t dim = spec.dim() + 1;
    const Vector n = spec.grading.to_vector();
    std::vector<Matrix> gens;
    std::vector<Vector> simple_vec;
    for (const auto& a : simple) {
        gens.push_back(affine_reflection_matrix(a));
        simple_vec.push_back(a.to_vector());
    }

    struct Element {
        Matrix w;
        Vector s;
        std::vector<std::size_t> word;
    };
    std::vector<Element> all{{Matrix::identity(dim), Vector(dim), {}}};
    std::set<Matrix> seen{all.front().w};
    std::size_t begin = 0;
    while (begin < all.size()) {
        const std::size_t end = all.size();
        for (std::size_t h = begin; h < end; ++h) {
            for (std::size_t i = 0; i < gens.size(); ++i) {
                // Appending s_i adds w(alpha_i) to the inversion set when it is positive.
                const Vector img = all[h].w.apply(simple_vec[i]);
                if (inner(img, n).sign() <= 0) continue;
                Vector s = all[h].s + img;
                if (inner(s, n) > spec.cutoff) continue;
                Matrix w = all[h].w * gens[i];
                if (!seen.insert(w).second) continue;
                if (all.size() >= bound) throw GroupTooLarge("more than " + std::to_string(bound) + " elements up to C");
                auto word = all[h].word;
                word.push_back(i);
                all.push_back({std::move(w), std::move(s), std::move(word)});
            }
        }
        begin = end;
    }

    // Cross-check short words against the inversion set {a > 0 : w^{-1} a < 0}.
    std::vector<Vector> positives;
    for (const auto& r : enumerate_support(spec))
        if (!r.v.is_isotropic()) positives.push_back(r.v.to_vector());
    for (const auto& e : all) {
        if (e.word.size() > 4) break;
        Matrix inv = Matrix::identity(dim);
        for (auto it = e.word.rbegin(); it != e.word.rend(); ++it) inv = inv * gens[*it];
        Vector sum(dim);
        for (const auto& a : positives)
            if (inner(inv.apply(a), n).sign() < 0) sum += a;
        if (sum != e.s) throw InternalInconsistency("affine_weyl_rhs: s(w) differs from its inversion-set sum");
    }

    GroupRingElement out(dim);
    for (const auto& e : all) out.add_term(e.s, Integer(e.word.size() % 2 == 0 ? 1 : -1));
    return out;
}

GroupRingElement affine_lhs(const AffineSupportSpec& spec) {
    const auto items = enumerate_support(spec);
    std::vector<Factor> factors;
    for (const auto& it : items) factors.push_back({it.v.to_vector(), it.mult});
    return truncated_product(factors, spec.grading.to_vector(), spec.cutoff);
}

AffineVerdict characterize_affine(const AffineSupportSpec& spec) {
    AffineVerdict v;
    v.cutoff = spec.cutoff;
    const auto items = enumerate_support(spec);

    std::vector<Factor> factors;
    for (const auto& it : items) factors.push_back({it.v.to_vector(), it.mult});
    const auto F = truncated_product(factors, spec.grading.to_vector(), spec.cutoff);
    for (const auto& x : support(F)) v.lambda.push_back(AffineVector::from_vector(x));
    v.fit = fit_paraboloid(v.lambda);
    v.on_paraboloid = v.fit.has_value();

    std::set<AffineVector> sre;
    std::vector<AffineItem> sim;
    v.real_multiplicities_ok = true;
    for (const auto& it : items) {
        if (it.v.is_isotropic()) {
            sim.push_back(it);
        } else {
            sre.insert(it.v);
            if (it.mult != 1) v.real_multiplicities_ok = false;
        }
    }
    v.disjoint = std::none_of(sre.begin(), sre.end(), [&](const AffineVector& s) { return sre.count(-s) > 0; });

    const auto R = truncated_real_roots(items);
    v.axioms = check_affine_axioms(R, spec.grading, spec.cutoff);
    v.irreducible = v.axioms.irreducible;
    v.finite_separator = Vector(spec.dim());

    if (!sre.empty() && v.axioms.ar4) {
        std::vector<Vector> dirs;
        for (const auto& r : R) dirs.push_back(r.part);
        const RootSystem finite(std::move(dirs));
        const auto ps = positive_roots(finite);
        v.finite_separator = ps.separator;
        const auto view = decompose(R, spec.grading);
        v.predicted_imaginary = imaginary_roots(view, base(ps.positives), spec.cutoff, spec.grading);
        v.imaginary_multiplicities_ok = v.predicted_imaginary == sim;
    }
    v.multiplicities_ok = v.real_multiplicities_ok && v.imaginary_multiplicities_ok;
    v.assumption_holds = v.irreducible;
    v.root_system = !sre.empty() && v.disjoint && v.multiplicities_ok && v.axioms.all() && v.irreducible;

    if (v.assumption_holds && v.root_system != v.on_paraboloid)
        throw InternalInconsistency(std::string("characterize_affine: at level C = ") + spec.cutoff.str() +
                                    " the paraboloid test says " + (v.on_paraboloid ? "yes" : "no") +
                                    " but the root-system test says " + (v.root_system ? "yes" : "no"));
    return v;
}

}  // namespace rootchar
