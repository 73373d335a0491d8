#include "rootchar/group_ring.hpp"

#include <algorithm>
#include <unordered_map>

#include "packed_lattice.hpp"

namespace rootchar {

GroupRingElement::GroupRingElement(std::size_t dim, TermMap terms) : dim_(dim) {
    for (auto& [v, c] : terms) {
        if (v.dim() != dim) throw DimensionMismatch("group ring term of wrong dimension");
        if (c != 0) terms_.emplace(v, std::move(c));
    }
}

GroupRingElement GroupRingElement::one(std::size_t dim) {
    GroupRingElement e(dim);
    e.terms_.emplace(Vector(dim), 1);
    return e;
}

GroupRingElement GroupRingElement::monomial(const Vector& v, const Integer& c) {
    GroupRingElement e(v.dim());
    e.add_term(v, c);
    return e;
}

Integer GroupRingElement::coefficient(const Vector& v) const {
    auto it = terms_.find(v);
    return it == terms_.end() ? Integer(0) : it->second;
}

void GroupRingElement::add_term(const Vector& v, const Integer& c) {
    if (v.dim() != dim_) throw DimensionMismatch("group ring term of wrong dimension");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(v, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

GroupRingElement GroupRingElement::translated(const Vector& shift) const {
    GroupRingElement r(dim_);
    for (const auto& [v, c] : terms_) r.terms_.emplace(v + shift, c);
    return r;
}

GroupRingElement GroupRingElement::truncated(const Vector& grading, const Rational& cutoff) const {
    GroupRingElement r(dim_);
    for (const auto& [v, c] : terms_)
        if (inner(v, grading) <= cutoff) r.terms_.emplace(v, c);
    return r;
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& o) {
    if (o.dim_ != dim_) throw DimensionMismatch("group ring addition: dimension mismatch");
    for (const auto& [v, c] : o.terms_) add_term(v, c);
    return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& o) {
    if (o.dim_ != dim_) throw DimensionMismatch("group ring subtraction: dimension mismatch");
    for (const auto& [v, c] : o.terms_) add_term(v, -c);
    return *this;
}

GroupRingElement GroupRingElement::operator-() const {
    GroupRingElement r(*this);
    for (auto& [v, c] : r.terms_) c = -c;
    return r;
}

std::vector<Vector> support(const GroupRingElement& x) {
    std::vector<Vector> out;
    out.reserve(x.size());
    for (const auto& [v, c] : x.terms()) out.push_back(v);
    return out;
}

namespace {

using detail::PackedFrame;

struct CodeHash {
    std::size_t operator()(std::uint64_t x) const noexcept {
        x ^= x >> 33;
        x *= 0xff51afd7ed558ccdULL;
        x ^= x >> 33;
        x *= 0xc4ceb9fe1a85ec53ULL;
        x ^= x >> 33;
        return static_cast<std::size_t>(x);
    }
};

template <class Coef>
using Poly = std::unordered_map<std::uint64_t, Coef, CodeHash>;

Integer to_integer(std::int64_t c) { return Integer(static_cast<long>(c)); }
const Integer& to_integer(const Integer& c) { return c; }

template <class Coef>
Coef binomial(std::int64_t n, std::int64_t k);

template <>
std::int64_t binomial<std::int64_t>(std::int64_t n, std::int64_t k) {
    __int128 c = 1;
    for (std::int64_t j = 1; j <= k; ++j) c = c * (n - j + 1) / j;
    return static_cast<std::int64_t>(c);
}

template <>
Integer binomial<Integer>(std::int64_t n, std::int64_t k) {
    Integer c;
    mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return c;
}

template <class Coef>
void drop_zeros(Poly<Coef>& p) {
    for (auto it = p.begin(); it != p.end();) {
        if (it->second == 0)
            it = p.erase(it);
        else
            ++it;
    }
}

template <class Coef>
Poly<Coef> poly_mul(const Poly<Coef>& a, const Poly<Coef>& b, const PackedFrame& f) {
    const Poly<Coef>& small = a.size() <= b.size() ? a : b;
    const Poly<Coef>& big = a.size() <= b.size() ? b : a;
    Poly<Coef> r;
    r.reserve(std::min<std::size_t>(small.size() * big.size(), 4 * (small.size() + big.size()) + 16));
    for (const auto& [ka, ca] : small)
        for (const auto& [kb, cb] : big) r[f.add(ka, kb)] += ca * cb;
    drop_zeros(r);
    return r;
}

template <class Coef>
GroupRingElement to_element(const Poly<Coef>& p, const PackedFrame& f, std::size_t dim) {
    GroupRingElement::TermMap terms;
    for (const auto& [k, c] : p) terms.emplace(f.decode(k), to_integer(c));
    return GroupRingElement(dim, std::move(terms));
}

// Box of all partial sums of factor terms: each factor (1 - e^s)^m ranges
// over {0, s, ..., m s}.
std::optional<PackedFrame> frame_for_factors(std::span<const Factor> factors, std::size_t dim) {
    std::vector<Vector> keys;
    for (const auto& f : factors) keys.push_back(f.v);
    auto denom = detail::small_denominator(keys);
    if (!denom) return std::nullopt;
    std::vector<Integer> lo(dim, 0), hi(dim, 0);
    const Rational d(static_cast<long>(*denom));
    for (const auto& f : factors)
        for (std::size_t i = 0; i < dim; ++i) {
            const Integer x = (f.v[i] * d).numerator() * Integer(static_cast<long>(f.mult));
            if (x < 0)
                lo[i] += x;
            else
                hi[i] += x;
        }
    return PackedFrame::build(*denom, lo, hi);
}

template <class Coef>
Poly<Coef> leaf_power(const Factor& fac, const PackedFrame& f) {
    Poly<Coef> p;
    const std::uint64_t step = f.encode(fac.v);
    std::uint64_t code = f.zero();
    for (std::int64_t j = 0; j <= fac.mult; ++j) {
        Coef c = binomial<Coef>(fac.mult, j);
        if (j % 2) c = -c;
        p.emplace(code, c);
        code = f.add(code, step);
    }
    return p;
}

template <class Coef>
Poly<Coef> tree_product(std::span<const Factor> factors, const PackedFrame& f) {
    if (factors.size() == 1) return leaf_power<Coef>(factors.front(), f);
    const std::size_t mid = factors.size() / 2;
    return poly_mul(tree_product<Coef>(factors.subspan(0, mid), f),
                    tree_product<Coef>(factors.subspan(mid), f), f);
}

GroupRingElement leaf_element(const Factor& fac) {
    GroupRingElement e(fac.v.dim());
    Vector v(fac.v.dim());
    for (std::int64_t j = 0; j <= fac.mult; ++j) {
        Integer c = binomial<Integer>(fac.mult, j);
        if (j % 2) c = -c;
        e.add_term(v, c);
        v += fac.v;
    }
    return e;
}

GroupRingElement tree_product_reference(std::span<const Factor> factors) {
    if (factors.size() == 1) return leaf_element(factors.front());
    const std::size_t mid = factors.size() / 2;
    return detail::mul_reference(tree_product_reference(factors.subspan(0, mid)),
                                 tree_product_reference(factors.subspan(mid)));
}

Integer l1_norm(const GroupRingElement& x) {
    Integer s = 0;
    for (const auto& [v, c] : x.terms()) s += abs(c);
    return s;
}

template <class Coef>
Poly<Coef> to_poly(const GroupRingElement& x, const PackedFrame& f) {
    Poly<Coef> p;
    for (const auto& [v, c] : x.terms()) {
        if constexpr (std::is_same_v<Coef, std::int64_t>)
            p.emplace(f.encode(v), c.get_si());
        else
            p.emplace(f.encode(v), c);
    }
    return p;
}

constexpr std::int64_t kSmallCoefLimit = std::int64_t{1} << 62;

}  // namespace

GroupRingElement detail::mul_reference(const GroupRingElement& a, const GroupRingElement& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("group ring product: dimension mismatch");
    GroupRingElement r(a.dim());
    for (const auto& [va, ca] : a.terms())
        for (const auto& [vb, cb] : b.terms()) r.add_term(va + vb, ca * cb);
    return r;
}

GroupRingElement mul(const GroupRingElement& a, const GroupRingElement& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("group ring product: dimension mismatch");
    if (a.is_zero() || b.is_zero()) return GroupRingElement(a.dim());
    const std::size_t dim = a.dim();

    std::vector<Vector> keys = support(a);
    for (const auto& v : support(b)) keys.push_back(v);
    auto denom = detail::small_denominator(keys);
    if (!denom) return detail::mul_reference(a, b);
    const Rational d(static_cast<long>(*denom));
    std::vector<Integer> lo(dim), hi(dim);
    for (const auto* x : {&a, &b})
        for (std::size_t i = 0; i < dim; ++i) {
            Integer mn, mx;
            bool first = true;
            for (const auto& [v, c] : x->terms()) {
                const Integer s = (v[i] * d).numerator();
                if (first || s < mn) mn = s;
                if (first || s > mx) mx = s;
                first = false;
            }
            lo[i] += mn;
            hi[i] += mx;
        }
    auto frame = PackedFrame::build(*denom, lo, hi);
    if (!frame) return detail::mul_reference(a, b);
    if (l1_norm(a) * l1_norm(b) < Integer(static_cast<long>(kSmallCoefLimit)))
        return to_element(poly_mul(to_poly<std::int64_t>(a, *frame), to_poly<std::int64_t>(b, *frame), *frame),
                          *frame, dim);
    return to_element(poly_mul(to_poly<Integer>(a, *frame), to_poly<Integer>(b, *frame), *frame), *frame, dim);
}

SupportMap::SupportMap(std::size_t dim, std::map<Vector, std::int64_t> entries)
    : dim_(dim), entries_(std::move(entries)) {
    if (dim_ == 0) throw InvalidInput("support map: dimension must be positive");
    if (entries_.empty()) throw InvalidInput("support map: S(m) must be nonempty");
    for (const auto& [v, m] : entries_) {
        if (v.dim() != dim_) throw DimensionMismatch("support map: key of wrong dimension");
        if (v.is_zero()) throw InvalidInput("m(0) must be 0");
        if (m <= 0) throw InvalidInput("support map: multiplicities must be positive");
    }
}

std::int64_t SupportMap::multiplicity(const Vector& v) const {
    auto it = entries_.find(v);
    return it == entries_.end() ? 0 : it->second;
}

std::vector<Vector> SupportMap::support() const {
    std::vector<Vector> out;
    for (const auto& [v, m] : entries_) out.push_back(v);
    return out;
}

std::int64_t SupportMap::total_multiplicity() const {
    std::int64_t t = 0;
    for (const auto& [v, m] : entries_) t += m;
    return t;
}

SignedSupportMap::SignedSupportMap(std::size_t dim, std::map<Vector, std::int64_t> entries)
    : dim_(dim), entries_(std::move(entries)) {
    if (dim_ == 0) throw InvalidInput("signed support map: dimension must be positive");
    for (const auto& [v, m] : entries_) {
        if (v.dim() != dim_) throw DimensionMismatch("signed support map: key of wrong dimension");
        if (v.is_zero()) throw InvalidInput("m(0) must be 0");
        if (m == 0) throw InvalidInput("signed support map: multiplicities must be nonzero");
    }
}

std::int64_t SignedSupportMap::multiplicity(const Vector& v) const {
    auto it = entries_.find(v);
    return it == entries_.end() ? 0 : it->second;
}

std::vector<Vector> SignedSupportMap::support() const {
    std::vector<Vector> out;
    for (const auto& [v, m] : entries_) out.push_back(v);
    return out;
}

GroupRingElement expand_product(const SupportMap& m) {
    std::vector<Factor> factors;
    for (const auto& [v, k] : m.entries()) factors.push_back({v, k});
    if (auto frame = frame_for_factors(factors, m.dim())) {
        if (m.total_multiplicity() <= 62)
            return to_element(tree_product<std::int64_t>(factors, *frame), *frame, m.dim());
        return to_element(tree_product<Integer>(factors, *frame), *frame, m.dim());
    }
    return tree_product_reference(factors);
}

GroupRingElement expand_signed(const SignedSupportMap& m) {
    std::map<Vector, std::int64_t> pos, neg;
    for (const auto& [v, k] : m.entries()) (k > 0 ? pos : neg).emplace(v, k > 0 ? k : -k);
    GroupRingElement num = pos.empty() ? GroupRingElement::one(m.dim())
                                       : expand_product(SupportMap(m.dim(), pos));
    if (neg.empty()) return num;
    return exact_divide(num, expand_product(SupportMap(m.dim(), neg)));
}

namespace {

template <class Coef>
struct GradedCoef {
    Coef c;
    std::int64_t grade;
};

template <class Coef>
GroupRingElement truncated_packed(std::span<const Factor> factors, std::span<const std::int64_t> grades,
                                  std::int64_t cutoff, const PackedFrame& f, std::size_t dim) {
    std::unordered_map<std::uint64_t, GradedCoef<Coef>, CodeHash> cur, next;
    cur.emplace(f.zero(), GradedCoef<Coef>{Coef(1), 0});
    for (std::size_t k = 0; k < factors.size(); ++k) {
        const auto& fac = factors[k];
        const std::uint64_t step = f.encode(fac.v);
        std::vector<Coef> binom;
        for (std::int64_t j = 0; j <= fac.mult; ++j) {
            Coef c = binomial<Coef>(fac.mult, j);
            binom.push_back(j % 2 ? Coef(-c) : c);
        }
        next.clear();
        next.reserve(cur.size() * 2);
        for (const auto& [code, gc] : cur) {
            std::uint64_t c = code;
            std::int64_t g = gc.grade;
            for (std::int64_t j = 0; j <= fac.mult && g <= cutoff; ++j) {
                auto [it, inserted] = next.try_emplace(c, GradedCoef<Coef>{Coef(0), g});
                it->second.c += gc.c * binom[static_cast<std::size_t>(j)];
                c = f.add(c, step);
                g += grades[k];
            }
        }
        for (auto it = next.begin(); it != next.end();) {
            if (it->second.c == 0)
                it = next.erase(it);
            else
                ++it;
        }
        std::swap(cur, next);
    }
    GroupRingElement::TermMap terms;
    for (const auto& [k, gc] : cur) terms.emplace(f.decode(k), to_integer(gc.c));
    return GroupRingElement(dim, std::move(terms));
}

}  // namespace

GroupRingElement truncated_product(std::span<const Factor> factors, const Vector& grading,
                                   const Rational& cutoff) {
    const std::size_t dim = grading.dim();
    std::vector<Factor> active;
    std::vector<Rational> grades;
    for (const auto& f : factors) {
        if (f.v.dim() != dim) throw DimensionMismatch("truncated_product: factor of wrong dimension");
        if (f.mult <= 0) throw InvalidInput("truncated_product: multiplicities must be positive");
        const Rational g = inner(f.v, grading);
        if (g.sign() <= 0) throw InvalidInput("truncated_product: factor with nonpositive grade " + f.v.str());
        if (g > cutoff) continue;
        active.push_back(f);
        grades.push_back(g);
    }
    if (cutoff.sign() < 0) return GroupRingElement(dim);
    if (active.empty()) return GroupRingElement::one(dim);

    // Scale grades to integers.
    Integer l = cutoff.denominator();
    std::int64_t total_mult = 0;
    for (const auto& g : grades) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), g.denominator().get_mpz_t());
    for (const auto& f : active) total_mult += f.mult;
    std::vector<std::int64_t> scaled;
    bool small = l.fits_slong_p();
    Integer sc = 0;
    if (small) {
        sc = (cutoff * Rational(l)).numerator();
        small = sc.fits_slong_p() && abs(sc) < Integer(1L << 40);
        for (const auto& g : grades) {
            const Integer x = (g * Rational(l)).numerator();
            if (!x.fits_slong_p() || x > Integer(1L << 40)) small = false;
            if (small) scaled.push_back(x.get_si());
        }
    }
    if (small) {
        if (auto frame = frame_for_factors(active, dim)) {
            if (total_mult <= 62)
                return truncated_packed<std::int64_t>(active, scaled, sc.get_si(), *frame, dim);
            return truncated_packed<Integer>(active, scaled, sc.get_si(), *frame, dim);
        }
    }
    GroupRingElement acc = GroupRingElement::one(dim);
    for (const auto& f : active) acc = detail::mul_reference(acc, leaf_element(f)).truncated(grading, cutoff);
    return acc;
}

namespace {

struct OrderedKey {
    Rational grade;
    Vector v;
    friend auto operator<=>(const OrderedKey&, const OrderedKey&) = default;
};

}  // namespace

GroupRingElement exact_divide(const GroupRingElement& a, const GroupRingElement& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("exact_divide: dimension mismatch");
    if (b.is_zero()) throw InvalidInput("exact_divide: division by zero element");
    const std::size_t dim = a.dim();
    if (a.is_zero()) return GroupRingElement(dim);

    std::vector<Vector> pts = support(a);
    for (const auto& v : support(b)) pts.push_back(v);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    std::vector<Vector> diffs;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) diffs.push_back(pts[j] - pts[i]);
    if (diffs.empty()) diffs.push_back(Vector::unit(dim, 0));
    const Vector n = generic_separator(diffs, Vector(dim));
    auto key = [&](const Vector& v) { return OrderedKey{inner(v, n), v}; };

    std::map<OrderedKey, Integer> rem;
    for (const auto& [v, c] : a.terms()) rem.emplace(key(v), c);
    std::vector<std::pair<OrderedKey, Integer>> divisor;
    for (const auto& [v, c] : b.terms()) divisor.emplace_back(key(v), c);
    std::sort(divisor.begin(), divisor.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    const auto& lead_b = divisor.back();
    const OrderedKey lowest_quotient{rem.begin()->first.grade - divisor.front().first.grade,
                                     rem.begin()->first.v - divisor.front().first.v};

    GroupRingElement q(dim);
    while (!rem.empty()) {
        const auto [lead_key, lead_c] = *rem.rbegin();
        const OrderedKey qk{lead_key.grade - lead_b.first.grade, lead_key.v - lead_b.first.v};
        if (qk < lowest_quotient) throw NotDivisible();
        if (!mpz_divisible_p(lead_c.get_mpz_t(), lead_b.second.get_mpz_t())) throw NotDivisible();
        const Integer qc = lead_c / lead_b.second;
        q.add_term(qk.v, qc);
        for (const auto& [bk, bc] : divisor) {
            OrderedKey k{qk.grade + bk.grade, qk.v + bk.v};
            auto [it, inserted] = rem.try_emplace(k, 0);
            it->second -= qc * bc;
            if (it->second == 0) rem.erase(it);
        }
    }
    if (mul(q, b) != a) throw InternalInconsistency("exact_divide: quotient check failed");
    return q;
}

SupportMap shift_equivalent(const SupportMap& m, const Vector& b) {
    auto e = m.entries();
    auto it = e.find(b);
    if (it == e.end()) throw InvalidInput("shift_equivalent: b not in support");
    if (--it->second == 0) e.erase(it);
    e[-b] += 1;
    return SupportMap(m.dim(), std::move(e));
}

SignedSupportMap shift_equivalent(const SignedSupportMap& m, const Vector& b) {
    auto e = m.entries();
    auto it = e.find(b);
    if (it == e.end() || it->second <= 0)
        throw InvalidInput("shift_equivalent: b not in support with positive multiplicity");
    if (--it->second == 0) e.erase(it);
    if (++e[-b] == 0) e.erase(-b);
    return SignedSupportMap(m.dim(), std::move(e));
}

}  // namespace rootchar
