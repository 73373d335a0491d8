#include "rootchar/finite_root.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <unordered_map>

namespace rootchar {

namespace {

constexpr std::size_t kMaxWitnesses = 3;

bool is_multiple(const Vector& b, const Vector& a, Rational& t) {
    std::size_t i = 0;
    while (i < a.dim() && a[i].is_zero()) ++i;
    t = b[i] / a[i];
    return b == t * a;
}

void witness(AxiomReport& rep, std::size_t& count, std::string msg) {
    if (count++ < kMaxWitnesses) rep.failures.push_back(std::move(msg));
}

}  // namespace

RootSystem::RootSystem(std::vector<Vector> roots) : roots_(std::move(roots)) {
    if (roots_.empty()) throw InvalidInput("root system: empty");
    ambient_dim_ = roots_.front().dim();
    for (const auto& r : roots_) {
        if (r.dim() != ambient_dim_) throw DimensionMismatch("root system: roots of unequal dimension");
        if (r.is_zero()) throw InvalidInput("root system: contains 0");
    }
    std::sort(roots_.begin(), roots_.end());
    roots_.erase(std::unique(roots_.begin(), roots_.end()), roots_.end());
    rank_ = span_rank(roots_).rank;
}

bool RootSystem::contains(const Vector& v) const {
    return std::binary_search(roots_.begin(), roots_.end(), v);
}

Vector reflect(const Vector& a, const Vector& v) {
    if (a.is_zero()) throw InvalidInput("reflect: a = 0");
    return v - (Rational(2) * inner(a, v) / norm_sq(a)) * a;
}

Matrix reflection_matrix(const Vector& a) {
    if (a.is_zero()) throw InvalidInput("reflect: a = 0");
    const std::size_t n = a.dim();
    const Rational k = Rational(2) / norm_sq(a);
    Matrix m = Matrix::identity(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) -= k * a[i] * a[j];
    return m;
}

AxiomReport check_axioms(const RootSystem& R) {
    AxiomReport rep;
    rep.rank = R.rank();
    const auto& rs = R.roots();
    std::vector<Rational> nsq;
    for (const auto& a : rs) nsq.push_back(norm_sq(a));

    std::size_t bad2 = 0, bad3 = 0, bad5 = 0;
    for (std::size_t i = 0; i < rs.size(); ++i) {
        const auto& a = rs[i];
        for (const auto& b : rs) {
            const Rational c = Rational(2) * inner(a, b) / nsq[i];
            if (!c.is_integer()) {
                rep.fr3 = false;
                witness(rep, bad3, "FR3: 2<a,b>/<a,a> = " + c.str() + " for a=" + a.str() + ", b=" + b.str());
            }
            const Vector w = b - c * a;
            if (!R.contains(w)) {
                rep.fr2 = false;
                witness(rep, bad2, "FR2: w_a(b) = " + w.str() + " not in R for a=" + a.str() + ", b=" + b.str());
            }
            Rational t;
            if (is_multiple(b, a, t) && t != 1 && t != -1) {
                rep.fr5 = false;
                witness(rep, bad5, "FR5: " + b.str() + " = " + t.str() + " * " + a.str());
            }
        }
        if (!R.contains(-a)) {
            rep.fr5 = false;
            witness(rep, bad5, "FR5: -a not in R for a=" + a.str());
        }
    }
    return rep;
}

PositiveSystem positive_roots(const RootSystem& R) {
    PositiveSystem ps;
    ps.separator = generic_separator(R.roots(), Vector(R.ambient_dim()));
    for (const auto& a : R.roots())
        if (inner(a, ps.separator).sign() > 0) ps.positives.push_back(a);
    return ps;
}

std::vector<Vector> base(std::span<const Vector> positives) {
    const std::set<Vector> pos(positives.begin(), positives.end());
    std::vector<Vector> out;
    for (const auto& a : positives) {
        bool decomposable = false;
        for (const auto& b : positives) {
            if (pos.count(a - b)) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable) out.push_back(a);
    }
    return out;
}

Vector weyl_vector(std::span<const Vector> positives) {
    if (positives.empty()) throw InvalidInput("weyl_vector: no positive roots");
    Vector rho(positives.front().dim());
    for (const auto& a : positives) rho += a;
    return Rational(1, 2) * rho;
}

// ---- Dynkin types ----

std::vector<std::vector<long>> standard_cartan(char family, std::size_t n) {
    auto bad = [&] { return InvalidInput(std::string("no standard type ") + family + std::to_string(n)); };
    if (n == 0) throw bad();
    std::vector<std::vector<long>> a(n, std::vector<long>(n, 0));
    auto link = [&](std::size_t i, std::size_t j) { a[i][j] = a[j][i] = -1; };
    for (std::size_t i = 0; i < n; ++i) a[i][i] = 2;
    switch (family) {
    case 'A':
        for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1);
        break;
    case 'B':
    case 'C':
        if (n < 2) throw bad();
        for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1);
        if (family == 'B') a[n - 2][n - 1] = -2;
        else a[n - 1][n - 2] = -2;
        break;
    case 'D':
        if (n < 4) throw bad();
        for (std::size_t i = 0; i + 2 < n; ++i) link(i, i + 1);
        link(n - 3, n - 1);
        break;
    case 'E':
        if (n < 6 || n > 8) throw bad();
        link(0, 2);
        link(1, 3);
        for (std::size_t i = 2; i + 1 < n; ++i) link(i, i + 1);
        break;
    case 'F':
        if (n != 4) throw bad();
        link(0, 1);
        link(1, 2);
        link(2, 3);
        a[1][2] = -2;
        break;
    case 'G':
        if (n != 2) throw bad();
        link(0, 1);
        a[1][0] = -3;
        break;
    default:
        throw bad();
    }
    return a;
}

Integer weyl_order(const DynkinComponent& c) {
    Integer fact = 1;
    for (std::size_t i = 2; i <= c.rank; ++i) fact *= static_cast<unsigned long>(i);
    const Integer pow2 = Integer(1) << static_cast<mp_bitcnt_t>(c.rank);
    switch (c.family) {
    case 'A': return fact * static_cast<unsigned long>(c.rank + 1);
    case 'B':
    case 'C': return pow2 * fact;
    case 'D': return pow2 / 2 * fact;
    case 'E':
        if (c.rank == 6) return 51840;
        if (c.rank == 7) return 2903040;
        return 696729600;
    case 'F': return 1152;
    case 'G': return 12;
    default: throw InvalidInput("weyl_order: unknown family");
    }
}

namespace {

using IntMatrix = std::vector<std::vector<long>>;

IntMatrix cartan_of(std::span<const Vector> simple) {
    const std::size_t n = simple.size();
    IntMatrix a(n, std::vector<long>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const Rational c = Rational(2) * inner(simple[i], simple[j]) / norm_sq(simple[j]);
            if (!c.is_integer() || !c.numerator().fits_slong_p())
                throw InvalidInput("simple roots are not crystallographic");
            a[i][j] = c.numerator().get_si();
        }
    }
    return a;
}

// Does the component (rows/cols listed in nodes) carry the standard matrix std?
bool isomorphic(const IntMatrix& a, const std::vector<std::size_t>& nodes, const IntMatrix& std) {
    const std::size_t k = nodes.size();
    if (std.size() != k) return false;
    // Visit standard nodes in BFS order from 0 so each step is constrained.
    std::vector<std::size_t> order{0};
    std::vector<bool> seen(k, false);
    seen[0] = true;
    for (std::size_t h = 0; h < order.size(); ++h)
        for (std::size_t j = 0; j < k; ++j)
            if (!seen[j] && std[order[h]][j] != 0) {
                seen[j] = true;
                order.push_back(j);
            }
    if (order.size() != k) return false;

    std::vector<std::size_t> map(k);
    std::vector<bool> used(k, false);
    std::function<bool(std::size_t)> place = [&](std::size_t step) {
        if (step == k) return true;
        const std::size_t t = order[step];
        for (std::size_t u = 0; u < k; ++u) {
            if (used[u]) continue;
            bool ok = true;
            for (std::size_t p = 0; p < step && ok; ++p) {
                const std::size_t s = order[p];
                ok = a[nodes[u]][nodes[map[s]]] == std[t][s] && a[nodes[map[s]]][nodes[u]] == std[s][t];
            }
            if (!ok) continue;
            used[u] = true;
            map[t] = u;
            if (place(step + 1)) return true;
            used[u] = false;
        }
        return false;
    };
    return place(0);
}

DynkinComponent match_component(const IntMatrix& a, const std::vector<std::size_t>& nodes) {
    const std::size_t k = nodes.size();
    std::vector<DynkinComponent> candidates{{'A', k}};
    if (k >= 2) candidates.push_back({'B', k});
    if (k >= 3) candidates.push_back({'C', k});
    if (k >= 4) candidates.push_back({'D', k});
    if (k >= 6 && k <= 8) candidates.push_back({'E', k});
    if (k == 4) candidates.push_back({'F', 4});
    if (k == 2) candidates.push_back({'G', 2});
    for (const auto& c : candidates)
        if (isomorphic(a, nodes, standard_cartan(c.family, c.rank))) return c;
    throw InvalidInput("unrecognized Dynkin component of rank " + std::to_string(k));
}

}  // namespace

RootType identify_type(std::span<const Vector> simple_roots) {
    if (simple_roots.empty()) throw InvalidInput("identify_type: no simple roots");
    const IntMatrix a = cartan_of(simple_roots);
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i)
        if (a[i][i] != 2) throw InvalidInput("identify_type: degenerate Cartan matrix");

    RootType t;
    std::vector<bool> seen(n, false);
    for (std::size_t s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<std::size_t> nodes{s};
        seen[s] = true;
        for (std::size_t h = 0; h < nodes.size(); ++h)
            for (std::size_t j = 0; j < n; ++j)
                if (!seen[j] && a[nodes[h]][j] != 0) {
                    seen[j] = true;
                    nodes.push_back(j);
                }
        std::sort(nodes.begin(), nodes.end());
        t.components.push_back(match_component(a, nodes));
    }
    std::sort(t.components.begin(), t.components.end(), [](const auto& x, const auto& y) {
        if (x.rank != y.rank) return x.rank > y.rank;
        return x.family < y.family;
    });
    t.weyl_order = 1;
    for (std::size_t i = 0; i < t.components.size(); ++i) {
        if (i) t.name += "×";
        t.name += t.components[i].name();
        t.weyl_order *= weyl_order(t.components[i]);
    }
    return t;
}

std::string classify(const RootSystem& R) {
    const auto rep = check_axioms(R);
    if (!rep.all()) throw InvalidInput("classify: not a reduced root system");
    const auto ps = positive_roots(R);
    const auto b = base(ps.positives);
    const auto t = identify_type(b);
    std::size_t rank = 0;
    for (const auto& c : t.components) rank += c.rank;
    if (rank != R.rank()) throw InternalInconsistency("classify: base size differs from rank");
    return t.name;
}

// ---- Weyl group ----

namespace {

struct VecHash {
    std::size_t operator()(const std::vector<long>& v) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (long x : v) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
        return h;
    }
};

// Determinant of a small integer matrix by fraction-free elimination.
long int_det(std::vector<long> m, std::size_t n) {
    long sign = 1, prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && m[p * n + k] == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m[p * n + j], m[k * n + j]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i * n + j] = (m[i * n + j] * m[k * n + k] - m[i * n + k] * m[k * n + j]) / prev;
            m[i * n + k] = 0;
        }
        prev = m[k * n + k];
    }
    return sign * m[n * n - 1];
}

}  // namespace

std::vector<WeylElement> enumerate_weyl(std::span<const Vector> simple, std::size_t bound) {
    if (simple.empty()) throw InvalidInput("enumerate_weyl: no simple roots");
    const std::size_t n = simple.size();
    const std::size_t dim = simple.front().dim();
    if (span_rank(simple).rank != n) throw InvalidInput("enumerate_weyl: simple roots are dependent");
    const IntMatrix cartan = cartan_of(simple);

    try {
        const auto t = identify_type(simple);
        if (t.weyl_order > Integer(static_cast<unsigned long>(bound)))
            throw GroupTooLarge("|W(" + t.name + ")| = " + t.weyl_order.get_str() + " exceeds bound " +
                                std::to_string(bound));
    } catch (const InvalidInput&) {
        // Unrecognised: the closure below enforces the bound as it goes.
    }

    // Elements are kept as integer matrices in the basis of simple roots:
    // column j holds the coordinates of w(alpha_j). Right multiplication by
    // s_i subtracts column i times the row (A_{0i}, ..., A_{n-1,i}).
    struct Node {
        std::vector<long> m;
        std::vector<std::size_t> word;
    };
    std::vector<Node> nodes;
    std::unordered_map<std::vector<long>, std::size_t, VecHash> index;
    std::vector<long> id(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) id[i * n + i] = 1;
    nodes.push_back({id, {}});
    index.emplace(id, 0);
    for (std::size_t h = 0; h < nodes.size(); ++h) {
        for (std::size_t g = 0; g < n; ++g) {
            std::vector<long> m = nodes[h].m;
            for (std::size_t r = 0; r < n; ++r) {
                const long col = nodes[h].m[r * n + g];
                if (col == 0) continue;
                for (std::size_t c = 0; c < n; ++c) m[r * n + c] -= col * cartan[c][g];
            }
            if (index.count(m)) continue;
            if (nodes.size() >= bound)
                throw GroupTooLarge("more than " + std::to_string(bound) + " elements");
            auto word = nodes[h].word;
            word.push_back(g);
            index.emplace(m, nodes.size());
            nodes.push_back({std::move(m), std::move(word)});
        }
    }

    // Ambient matrix: w(x) = x + B (W - I) G^{-1} B^T x, with B the simple roots
    // as columns and G their Gram matrix.
    std::vector<Vector> gram;
    for (std::size_t i = 0; i < n; ++i) {
        Vector row(n);
        for (std::size_t j = 0; j < n; ++j) row[j] = inner(simple[i], simple[j]);
        gram.push_back(std::move(row));
    }
    std::vector<Vector> k_cols;  // column k: G^{-1} B^T e_k
    for (std::size_t k = 0; k < dim; ++k) {
        std::vector<Rational> rhs(n);
        for (std::size_t i = 0; i < n; ++i) rhs[i] = simple[i][k];
        const auto sol = solve_linear(gram, rhs, n);
        if (sol.kind != LinearSolution::Kind::unique) throw InternalInconsistency("enumerate_weyl: singular Gram matrix");
        k_cols.push_back(*sol.particular);
    }

    std::vector<WeylElement> out;
    out.reserve(nodes.size());
    for (auto& nd : nodes) {
        WeylElement e;
        e.matrix = Matrix::identity(dim);
        for (std::size_t k = 0; k < dim; ++k) {
            // (W - I) applied to k_cols[k], then mapped through B.
            for (std::size_t j = 0; j < n; ++j) {
                Rational coeff;
                for (std::size_t c = 0; c < n; ++c) {
                    const long w = nd.m[j * n + c] - (j == c ? 1 : 0);
                    if (w != 0) coeff += Rational(w) * k_cols[k][c];
                }
                if (coeff.is_zero()) continue;
                for (std::size_t r = 0; r < dim; ++r) e.matrix(r, k) += coeff * simple[j][r];
            }
        }
        e.det = nd.word.size() % 2 == 0 ? 1 : -1;
        if (int_det(nd.m, n) != e.det) throw InternalInconsistency("enumerate_weyl: det disagrees with word length");
        e.word = std::move(nd.word);
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<WeylElement> enumerate_weyl(const RootSystem& R, std::size_t bound) {
    const auto ps = positive_roots(R);
    return enumerate_weyl(base(ps.positives), bound);
}

GroupRingElement denominator_rhs(std::span<const Vector> positives, std::size_t bound) {
    if (positives.empty()) throw InvalidInput("denominator_rhs: no positive roots");
    const Vector rho = weyl_vector(positives);
    const auto ws = enumerate_weyl(base(positives), bound);
    GroupRingElement out(rho.dim());
    for (const auto& w : ws) out.add_term(rho - w.matrix.apply(rho), Integer(w.det));
    return out;
}

// ---- characterisation ----

FiniteVerdict characterize_finite(const SupportMap& m) {
    FiniteVerdict v;
    const auto S = m.support();

    const GroupRingElement F = expand_product(m);
    v.lambda = support(F);
    v.fit = fit_sphere(v.lambda);
    v.on_sphere = v.fit.has_value();

    const std::set<Vector> sset(S.begin(), S.end());
    v.disjoint = std::none_of(S.begin(), S.end(), [&](const Vector& s) { return sset.count(-s) > 0; });
    v.multiplicities_ok = std::all_of(m.entries().begin(), m.entries().end(),
                                      [](const auto& e) { return e.second == 1; });
    std::vector<Vector> both = S;
    for (const auto& s : S) both.push_back(-s);
    RootSystem R(std::move(both));
    v.axioms = check_axioms(R);
    v.rank = R.rank();

    const bool axiomatic = v.disjoint && v.multiplicities_ok && v.axioms.all();
    if (axiomatic != v.on_sphere)
        throw InternalInconsistency(std::string("characterize_finite: sphere test says ") +
                                    (v.on_sphere ? "on sphere" : "not on sphere") +
                                    " but root-system test says " + (axiomatic ? "root system" : "not a root system"));
    if (axiomatic) {
        v.type = classify(R);
        v.recovered = std::move(R);
        v.weyl_vector = weyl_vector(S);
    }
    return v;
}

}  // namespace rootchar
