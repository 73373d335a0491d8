#include "rootchar/catalog.hpp"

#include <algorithm>
#include <bit>
#include <charconv>

namespace rootchar {

namespace {

constexpr std::size_t kMaxClassicalRank = 8;

Vector pm_pair(std::size_t n, std::size_t i, std::size_t j, int si, int sj) {
    Vector v(n);
    v[i] = si;
    v[j] = sj;
    return v;
}

std::vector<Vector> classical_pairs(std::size_t n) {
    std::vector<Vector> out;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (int si : {1, -1})
                for (int sj : {1, -1}) out.push_back(pm_pair(n, i, j, si, sj));
    return out;
}

Vector descending(std::size_t n) {
    Vector g(n);
    for (std::size_t i = 0; i < n; ++i) g[i] = static_cast<long>(n - i);
    return g;
}

// All (±1/2, ..., ±1/2) in Q^n; with even_minus, only those with an even
// number of minus signs.
std::vector<Vector> half_spinors(std::size_t n, bool even_minus) {
    std::vector<Vector> out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (even_minus && std::popcount(mask) % 2 != 0) continue;
        Vector v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = (mask >> i & 1u) ? Rational(-1, 2) : Rational(1, 2);
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<Vector> e8_roots() {
    auto r = classical_pairs(8);
    auto h = half_spinors(8, true);
    r.insert(r.end(), h.begin(), h.end());
    return r;
}

std::vector<Vector> orthogonal_to(const std::vector<Vector>& roots, const std::vector<Vector>& vs) {
    std::vector<Vector> out;
    for (const auto& a : roots)
        if (std::all_of(vs.begin(), vs.end(), [&](const Vector& v) { return inner(a, v).is_zero(); }))
            out.push_back(a);
    return out;
}

struct Parsed {
    char family;
    std::size_t rank;
};

std::optional<Parsed> parse_name(std::string_view name) {
    if (name.size() < 2) return std::nullopt;
    const char f = name[0];
    std::size_t rank = 0;
    auto [p, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), rank);
    if (ec != std::errc() || p != name.data() + name.size() || name[1] == '0') return std::nullopt;
    bool ok = false;
    switch (f) {
    case 'A': ok = rank >= 1 && rank <= kMaxClassicalRank; break;
    case 'B': ok = rank >= 2 && rank <= kMaxClassicalRank; break;
    case 'C': ok = rank >= 3 && rank <= kMaxClassicalRank; break;
    case 'D': ok = rank >= 4 && rank <= kMaxClassicalRank; break;
    case 'E': ok = rank >= 6 && rank <= 8; break;
    case 'F': ok = rank == 4; break;
    case 'G': ok = rank == 2; break;
    default: break;
    }
    if (!ok) return std::nullopt;
    return Parsed{f, rank};
}

}  // namespace

SupportMap CatalogEntry::positive_support() const {
    std::map<Vector, std::int64_t> m;
    for (const auto& a : positives) m[a] = 1;
    return SupportMap(ambient_dim, std::move(m));
}

std::vector<std::string> catalog_names() {
    std::vector<std::string> out;
    for (std::size_t n = 1; n <= kMaxClassicalRank; ++n) out.push_back("A" + std::to_string(n));
    for (std::size_t n = 2; n <= kMaxClassicalRank; ++n) out.push_back("B" + std::to_string(n));
    for (std::size_t n = 3; n <= kMaxClassicalRank; ++n) out.push_back("C" + std::to_string(n));
    for (std::size_t n = 4; n <= kMaxClassicalRank; ++n) out.push_back("D" + std::to_string(n));
    for (const char* s : {"E6", "E7", "E8", "F4", "G2"}) out.emplace_back(s);
    return out;
}

CatalogEntry standard_finite(std::string_view name) {
    const auto p = parse_name(name);
    if (!p) throw InvalidInput("unknown catalog name '" + std::string(name) + "'");
    const std::size_t n = p->rank;

    CatalogEntry e;
    e.name = std::string(name);
    std::vector<Vector> roots;
    switch (p->family) {
    case 'A': {
        const std::size_t d = n + 1;
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                if (i != j) roots.push_back(pm_pair(d, i, j, 1, -1));
        e.separator = descending(d);
        break;
    }
    case 'B':
    case 'C':
    case 'D':
        roots = classical_pairs(n);
        if (p->family != 'D') {
            const long len = p->family == 'B' ? 1 : 2;
            for (std::size_t i = 0; i < n; ++i) {
                roots.push_back(Rational(len) * Vector::unit(n, i));
                roots.push_back(Rational(-len) * Vector::unit(n, i));
            }
        }
        e.separator = descending(n);
        break;
    case 'G': {
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) {
                if (i == j) continue;
                roots.push_back(pm_pair(3, i, j, 1, -1));
            }
        for (std::size_t i = 0; i < 3; ++i) {
            Vector v{-1, -1, -1};
            v[i] = 2;
            roots.push_back(v);
            roots.push_back(-v);
        }
        e.separator = Vector{3, 1, 0};
        break;
    }
    case 'F': {
        roots = classical_pairs(4);
        for (std::size_t i = 0; i < 4; ++i) {
            roots.push_back(Vector::unit(4, i));
            roots.push_back(-Vector::unit(4, i));
        }
        auto h = half_spinors(4, false);
        roots.insert(roots.end(), h.begin(), h.end());
        e.separator = Vector{8, 4, 2, 1};
        break;
    }
    case 'E': {
        const Vector half{Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(1, 2),
                          Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(1, 2)};
        Vector e12(8);
        e12[0] = -1;
        e12[1] = -1;
        roots = e8_roots();
        if (n == 7) roots = orthogonal_to(roots, {half});
        if (n == 6) roots = orthogonal_to(roots, {half, e12});
        e.separator = Vector{128, 64, 32, 16, 8, 4, 2, 1};
        break;
    }
    }
    std::sort(roots.begin(), roots.end());
    e.roots = std::move(roots);
    e.ambient_dim = e.roots.front().dim();
    for (const auto& a : e.roots) {
        const int s = inner(a, e.separator).sign();
        if (s == 0) throw InternalInconsistency("catalog: separator not generic for " + e.name);
        if (s > 0) e.positives.push_back(a);
    }
    e.positive_count = e.positives.size();
    e.weyl_order = weyl_order(DynkinComponent{p->family, n});
    return e;
}

AffineVector default_affine_grading(const CatalogEntry& e) {
    Rational top = 0;
    for (const auto& a : e.roots) top = std::max(top, inner(a, e.separator));
    return AffineVector(1, (Rational(1) / (Rational(3) * top)) * e.separator);
}

AffineSupportSpec untwisted_affine(std::string_view name, const Rational& cutoff,
                                   std::optional<AffineVector> grading) {
    const auto e = standard_finite(name);
    AffineSupportSpec spec{GeneratedSupport{e.system(), {}, std::nullopt},
                           grading ? *grading : default_affine_grading(e), cutoff};
    validate(spec);
    return spec;
}

long mobius(long n) {
    if (n < 1) throw InvalidInput("mobius: n must be >= 1");
    long result = 1;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return 0;
        result = -result;
    }
    if (n > 1) result = -result;
    return result;
}

std::vector<Integer> remark29_exponents(long kmax) {
    if (kmax < 1) throw InvalidInput("kmax must be >= 1");
    std::vector<Integer> out;
    for (long k = 1; k <= kmax; ++k) {
        Integer sum = 0;
        for (long d = 1; d <= k; ++d) {
            if (k % d != 0) continue;
            const long mu = mobius(k / d);
            if (mu == 0) continue;
            const Integer pw = Integer(1) << static_cast<mp_bitcnt_t>(d);
            sum += mu > 0 ? pw : Integer(-pw);
        }
        if (sum % k != 0) throw InternalInconsistency("exponent a_" + std::to_string(k) + " is not integral");
        Integer a = sum / k;
        if (a < 1) throw InternalInconsistency("exponent a_" + std::to_string(k) + " is not positive");
        out.push_back(std::move(a));
    }
    return out;
}

std::vector<Integer> series_inversion_oracle(long kmax) {
    if (kmax < 1) throw InvalidInput("kmax must be >= 1");
    const auto top = static_cast<std::size_t>(kmax);
    std::vector<Integer> p(top + 1, 0);  // running product, mod X^{kmax+1}
    p[0] = 1;
    std::vector<Integer> out;
    for (std::size_t k = 1; k <= top; ++k) {
        const Integer target = k == 1 ? Integer(-2) : Integer(0);
        // [X^k] of p * (1 - X^k)^a is p[k] - a.
        const Integer a = p[k] - target;
        out.push_back(a);
        // p *= (1 - X^k)^a = sum_j binom(a, j) (-X^k)^j.
        std::vector<Integer> next(top + 1, 0);
        for (std::size_t j = 0; j * k <= top; ++j) {
            Integer c;
            if (a >= 0) {
                mpz_bin_ui(c.get_mpz_t(), a.get_mpz_t(), j);
            } else {
                // binom(a, j) for negative a: (-1)^j binom(-a + j - 1, j).
                const Integer t = -a + static_cast<unsigned long>(j) - 1;
                mpz_bin_ui(c.get_mpz_t(), t.get_mpz_t(), j);
                if (j % 2) c = -c;
            }
            if (j % 2) c = -c;
            if (c == 0) continue;
            for (std::size_t i = 0; i + j * k <= top; ++i)
                if (p[i] != 0) next[i + j * k] += c * p[i];
        }
        p = std::move(next);
    }
    return out;
}

SignedSphereExample remark210_counterexample() {
    const Vector a{2, 0, 0, 0};
    const Vector b{-1, 1, 1, 1};
    std::map<Vector, std::int64_t> m;
    m[Rational(2) * a] = 1;
    m[Rational(2) * b] = 1;
    m[a + b] = 1;
    m[a] = -1;
    m[b] = -1;
    SignedSupportMap sm(4, m);

    GroupRingElement x = expand_signed(sm);
    const auto lambda = support(x);
    auto fit = fit_sphere(lambda);
    if (!fit) throw InternalInconsistency("signed example: support is not on a sphere");

    std::vector<Vector> both;
    for (const auto& s : sm.support()) {
        both.push_back(s);
        both.push_back(-s);
    }
    AxiomReport axioms = check_axioms(RootSystem(std::move(both)));
    return {std::move(sm), a, b, std::move(x), std::move(*fit), std::move(axioms)};
}

}  // namespace rootchar
