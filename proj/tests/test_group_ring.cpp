#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "rootchar/group_ring.hpp"

using namespace rootchar;

namespace {

GroupRingElement el(std::size_t dim, std::initializer_list<std::pair<Vector, long>> ts) {
    GroupRingElement x(dim);
    for (const auto& [v, c] : ts) x.add_term(v, c);
    return x;
}

std::map<Vector, std::int64_t> random_map(std::mt19937_64& rng, std::size_t dim, std::size_t n, long range, long maxm) {
    std::map<Vector, std::int64_t> m;
    // dim 1 has only 2*range nonzero points, so give up after a fixed number of draws
    for (int tries = 0; m.size() < n && tries < 100; ++tries) {
        Vector v(dim);
        for (std::size_t i = 0; i < dim; ++i) v[i] = static_cast<long>(rng() % (2 * range + 1)) - range;
        if (v.is_zero()) continue;
        m[v] = 1 + static_cast<long>(rng() % maxm);
    }
    return m;
}

Integer coefficient_sum(const GroupRingElement& x) {
    Integer s = 0;
    for (const auto& [v, c] : x.terms()) s += c;
    return s;
}

}  // namespace

TEST_CASE("expand examples") {
    const Vector a{1, 0}, b{0, 1};
    // (1 - e^a)(1 + e^a) = 1 - e^{2a}
    const auto p = el(2, {{Vector{0, 0}, 1}, {a, -1}}) * el(2, {{Vector{0, 0}, 1}, {a, 1}});
    CHECK(p == el(2, {{Vector{0, 0}, 1}, {Vector{2, 0}, -1}}));

    // A2 positive roots a, b, a+b
    const SupportMap a2(2, {{a, 1}, {b, 1}, {Vector{1, 1}, 1}});
    CHECK(expand_product(a2) == el(2, {{Vector{0, 0}, 1},
                                       {a, -1},
                                       {b, -1},
                                       {Vector{2, 1}, 1},
                                       {Vector{1, 2}, 1},
                                       {Vector{2, 2}, -1}}));

    const SupportMap twice(1, {{Vector{1}, 2}});
    CHECK(expand_product(twice) == el(1, {{Vector{0}, 1}, {Vector{1}, -2}, {Vector{2}, 1}}));
}

TEST_CASE("support map validation") {
    CHECK_THROWS_WITH_AS(SupportMap(1, {{Vector{0}, 1}}), "m(0) must be 0", InvalidInput);
    CHECK_THROWS_AS(SupportMap(1, {}), InvalidInput);
    CHECK_THROWS_AS(SupportMap(2, {{Vector{1}, 1}}), DimensionMismatch);
    CHECK_THROWS_AS(SupportMap(1, {{Vector{1}, -1}}), InvalidInput);
    CHECK_THROWS_AS(SupportMap(1, {{Vector{1}, 1}, {Vector{2}, 0}}), InvalidInput);
    const SupportMap m(1, {{Vector{2}, 3}, {Vector{1}, 1}});
    CHECK(m.support() == std::vector<Vector>{Vector{1}, Vector{2}});
    CHECK(m.total_multiplicity() == 4);
}

TEST_CASE("expand_product agrees with a schoolbook oracle") {
    std::mt19937_64 rng(2024);
    for (int t = 0; t < 150; ++t) {
        const std::size_t dim = 1 + rng() % 3;
        const auto entries = random_map(rng, dim, 1 + rng() % 6, 2, 3);
        std::map<std::vector<long>, long> om;
        for (const auto& [v, k] : entries) om[oracle::ints(v)] = k;
        const auto got = expand_product(SupportMap(dim, entries));
        CHECK(oracle::from(got) == oracle::product(om, dim));
        CHECK(coefficient_sum(got) == 0);  // F(m) vanishes at e^v = 1
    }
}

TEST_CASE("packed multiplication matches the reference at rational exponents") {
    std::mt19937_64 rng(99);
    for (int t = 0; t < 100; ++t) {
        const std::size_t dim = 1 + rng() % 3;
        auto rand_el = [&] {
            GroupRingElement x(dim);
            const int n = 1 + rng() % 5;
            for (int i = 0; i < n; ++i) {
                Vector v(dim);
                for (std::size_t j = 0; j < dim; ++j)
                    v[j] = Rational(Integer(static_cast<long>(rng() % 9) - 4), Integer(1 + static_cast<long>(rng() % 3)));
                x.add_term(v, static_cast<long>(rng() % 7) - 3);
            }
            return x;
        };
        const auto a = rand_el(), b = rand_el(), c = rand_el();
        CHECK(a * b == detail::mul_reference(a, b));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("big exponents and coefficients stay exact") {
    // (1 - e^v)^40 has coefficients up to C(40,20) > 2^36.
    const SupportMap m(1, {{Vector{Rational::parse("1000000000000")}, 40}});
    const auto x = expand_product(m);
    CHECK(x.size() == 41);
    CHECK(x.coefficient(Vector{Rational::parse("20000000000000")}) == Integer("137846528820"));
}

TEST_CASE("truncated product examples") {
    // prod_{k=1..3} (1 - q^k) in one variable, cut at degree 3
    std::vector<Factor> fs{{Vector{1}, 1}, {Vector{2}, 1}, {Vector{3}, 1}};
    CHECK(truncated_product(fs, Vector{1}, 3) == el(1, {{Vector{0}, 1}, {Vector{1}, -1}, {Vector{2}, -1}}));
    CHECK(truncated_product(std::span<const Factor>{}, Vector{1}, 3) == GroupRingElement::one(1));
    std::vector<Factor> bad{{Vector{-1}, 1}};
    CHECK_THROWS_AS(truncated_product(bad, Vector{1}, 3), InvalidInput);
}

TEST_CASE("truncated Euler product matches a univariate oracle") {
    for (long top : {1L, 5L, 12L, 25L}) {
        std::vector<Factor> fs;
        std::vector<std::pair<long, long>> of;
        for (long k = 1; k <= top + 2; ++k) {
            fs.push_back({Vector{k}, 1});
            of.emplace_back(k, 1);
        }
        const auto got = truncated_product(fs, Vector{1}, top);
        const auto want = oracle::univariate_product(of, top);
        for (long d = 0; d <= top; ++d) CHECK(got.coefficient(Vector{d}) == want[static_cast<std::size_t>(d)]);
        for (const auto& [v, c] : got.terms()) CHECK(v[0] <= top);
    }
    // Euler pentagonal theorem: nonzero exactly at k(3k-1)/2
    std::vector<Factor> fs;
    for (long k = 1; k <= 40; ++k) fs.push_back({Vector{k}, 1});
    const auto e = truncated_product(fs, Vector{1}, 40);
    std::map<long, long> pent;
    for (long k = -6; k <= 6; ++k) pent[k * (3 * k - 1) / 2] = k % 2 ? -1 : 1;
    for (long d = 0; d <= 40; ++d) CHECK(e.coefficient(Vector{d}) == (pent.count(d) ? pent[d] : 0));
}

TEST_CASE("truncation commutes with the full product") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 60; ++t) {
        const std::size_t dim = 2;
        std::map<Vector, std::int64_t> entries;
        while (entries.size() < 5) {
            Vector v{static_cast<long>(rng() % 4), static_cast<long>(rng() % 4)};
            if (!v.is_zero()) entries[v] = 1 + rng() % 2;
        }
        std::vector<Factor> fs;
        for (const auto& [v, k] : entries) fs.push_back({v, k});
        const auto full = expand_product(SupportMap(dim, entries));
        const Vector g{1, 2};
        GroupRingElement prev(dim);
        for (long c = 0; c <= 12; ++c) {
            const auto tr = truncated_product(fs, g, c);
            CHECK(tr == full.truncated(g, c));
            // monotone: the cut at c-1 is a truncation of the cut at c
            if (c > 0) CHECK(tr.truncated(g, c - 1) == prev);
            prev = tr;
        }
    }
}

TEST_CASE("exact division examples") {
    const auto num = el(1, {{Vector{0}, 1}, {Vector{2}, -1}});
    const auto den = el(1, {{Vector{0}, 1}, {Vector{1}, -1}});
    CHECK(exact_divide(num, den) == el(1, {{Vector{0}, 1}, {Vector{1}, 1}}));
    const auto a = el(2, {{Vector{0, 0}, 1}, {Vector{1, 0}, -1}});
    const auto b = el(2, {{Vector{0, 0}, 1}, {Vector{0, 1}, -1}});
    CHECK_THROWS_AS(exact_divide(a, b), NotDivisible);
    CHECK_THROWS_AS(exact_divide(a, GroupRingElement(2)), InvalidInput);
}

TEST_CASE("exact division inverts multiplication") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 80; ++t) {
        const std::size_t dim = 1 + rng() % 2;
        const auto x = expand_product(SupportMap(dim, random_map(rng, dim, 1 + rng() % 3, 2, 2)));
        const auto y = expand_product(SupportMap(dim, random_map(rng, dim, 1 + rng() % 3, 2, 2)));
        CHECK(exact_divide(x * y, y) == x);
        CHECK(exact_divide(x * y, x) == y);
    }
}

TEST_CASE("signed products evaluate as quotients") {
    // (1 - e^{2a}) (1 - e^a)^{-1} = 1 + e^a
    const SignedSupportMap m(1, {{Vector{2}, 1}, {Vector{1}, -1}});
    CHECK(expand_signed(m) == el(1, {{Vector{0}, 1}, {Vector{1}, 1}}));
    const SignedSupportMap bad(2, {{Vector{1, 0}, 1}, {Vector{0, 1}, -1}});
    CHECK_THROWS_AS(expand_signed(bad), NotDivisible);
}

TEST_CASE("shift equivalence examples") {
    const Vector a{1, 0}, b{0, 1};
    const SupportMap m(2, {{a, 1}});
    CHECK(shift_equivalent(m, a) == SupportMap(2, {{-a, 1}}));
    const SupportMap a2(2, {{a, 1}, {b, 1}, {a + b, 1}});
    CHECK(shift_equivalent(a2, a) == SupportMap(2, {{-a, 1}, {b, 1}, {a + b, 1}}));
    CHECK(shift_equivalent(shift_equivalent(a2, a), -a) == a2);
    CHECK_THROWS_AS(shift_equivalent(a2, Vector{1, 1} + a), InvalidInput);
}

TEST_CASE("shift lemma F(m') = -e^{-b} F(m)") {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 100; ++t) {
        const std::size_t dim = 1 + rng() % 3;
        const auto entries = random_map(rng, dim, 1 + rng() % 5, 2, 2);
        const SupportMap m(dim, entries);
        auto it = entries.begin();
        std::advance(it, rng() % entries.size());
        const Vector b = it->first;
        const auto shifted = expand_product(shift_equivalent(m, b));
        CHECK(shifted == -expand_product(m).translated(-b));
        CHECK(shift_equivalent(shift_equivalent(m, b), -b) == m);

        const SignedSupportMap sm(dim, entries);
        CHECK(expand_signed(shift_equivalent(sm, b)) == -expand_signed(sm).translated(-b));
    }
}
