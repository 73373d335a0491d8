#include <doctest.h>

#include <set>

#include "rootchar/catalog.hpp"

using namespace rootchar;

namespace {

std::size_t expected_roots(const std::string& name) {
    const char f = name[0];
    const std::size_t n = std::stoul(name.substr(1));
    switch (f) {
    case 'A': return n * (n + 1);
    case 'B':
    case 'C': return 2 * n * n;
    case 'D': return 2 * n * (n - 1);
    case 'E': return n == 6 ? 72 : n == 7 ? 126 : 240;
    case 'F': return 48;
    default: return 12;
    }
}

}  // namespace

TEST_CASE("catalog names") {
    const auto names = catalog_names();
    const std::set<std::string> have(names.begin(), names.end());
    for (const char* n : {"A1", "A2", "A3", "A4", "A8", "B2", "B3", "B8", "C3", "C8", "D4", "D8", "E6", "E7", "E8", "F4", "G2"})
        CHECK(have.count(n) == 1);
    CHECK(have.count("C2") == 0);
    CHECK(have.count("D3") == 0);
    CHECK_THROWS_AS(standard_finite("Z9"), InvalidInput);
    CHECK_THROWS_AS(standard_finite("A0"), InvalidInput);
    CHECK_THROWS_AS(standard_finite("A9"), InvalidInput);
}

TEST_CASE("catalog examples") {
    const auto a2 = standard_finite("A2");
    const std::set<Vector> want{Vector{1, -1, 0}, Vector{0, 1, -1}, Vector{1, 0, -1},
                                Vector{-1, 1, 0}, Vector{0, -1, 1}, Vector{-1, 0, 1}};
    CHECK(std::set<Vector>(a2.roots.begin(), a2.roots.end()) == want);

    const auto g2 = standard_finite("G2");
    CHECK(g2.roots.size() == 12);
    CHECK(g2.system().contains(Vector{1, -1, 0}));
    CHECK(g2.system().contains(Vector{2, -1, -1}));
    for (const auto& r : g2.roots) CHECK((r[0] + r[1] + r[2]).is_zero());
}

TEST_CASE("every catalog entry is a valid system of the stated type") {
    for (const auto& name : catalog_names()) {
        const auto e = standard_finite(name);
        CHECK_MESSAGE(e.roots.size() == expected_roots(name), name);
        CHECK(e.positive_count * 2 == e.roots.size());
        CHECK(e.positives.size() == e.positive_count);
        CHECK(std::is_sorted(e.roots.begin(), e.roots.end()));
        const auto rep = check_axioms(e.system());
        CHECK_MESSAGE(rep.all(), name);
        CHECK(classify(e.system()) == name);
        for (const auto& a : e.positives) CHECK(inner(a, e.separator) > 0);
        CHECK(e.positive_support().total_multiplicity() == static_cast<std::int64_t>(e.positive_count));
    }
    CHECK(standard_finite("E6").weyl_order == 51840);
    CHECK(standard_finite("E7").weyl_order == Integer("2903040"));
    CHECK(standard_finite("E8").weyl_order == Integer("696729600"));
    CHECK(standard_finite("F4").weyl_order == 1152);
}

TEST_CASE("untwisted affinizations") {
    const auto a1 = untwisted_affine("A1", 3);
    CHECK(a1.grading == default_affine_grading(standard_finite("A1")));
    std::size_t real = 0, imag = 0;
    for (const auto& it : enumerate_support(a1)) (it.v.is_isotropic() ? imag : real) += 1;
    CHECK(real == 6);
    CHECK(imag == 3);
    real = imag = 0;
    for (const auto& it : enumerate_support(untwisted_affine("A1", 2))) (it.v.is_isotropic() ? imag : real) += 1;
    CHECK(real == 4);
    CHECK(imag == 2);

    for (const auto& it : enumerate_support(untwisted_affine("A2", 2)))
        if (it.v.is_isotropic()) CHECK(it.mult == 2);
    CHECK_THROWS_AS(untwisted_affine("A1", 0), InvalidInput);
    CHECK_THROWS_AS(untwisted_affine("A1", -1), InvalidInput);
    CHECK_THROWS_AS(untwisted_affine("Q2", 3), InvalidInput);

    // every catalog type gets a grading inducing the standard positive system
    for (const auto& name : catalog_names()) CHECK_NOTHROW(validate(untwisted_affine(name, 1)));
}

TEST_CASE("mobius examples") {
    CHECK(mobius(1) == 1);
    CHECK(mobius(2) == -1);
    CHECK(mobius(6) == 1);
    CHECK(mobius(12) == 0);
    CHECK(mobius(30) == -1);
    CHECK(mobius(49) == 0);
    CHECK_THROWS_AS(mobius(0), InvalidInput);
}

TEST_CASE("necklace exponents") {
    const auto a = remark29_exponents(30);
    REQUIRE(a.size() == 30);
    const std::vector<long> frozen{2,   1,   2,    3,    6,    9,    18,    30,    56,    99,
                                   186, 335, 630, 1161, 2182, 4080, 7710, 14532, 27594, 52377};
    for (std::size_t k = 0; k < frozen.size(); ++k) CHECK(a[k] == frozen[k]);
    CHECK(a == series_inversion_oracle(30));
    for (std::size_t k = 0; k < a.size(); ++k) CHECK(a[k] * static_cast<unsigned long>(k + 1) >= 2);
    CHECK_THROWS_AS(remark29_exponents(0), InvalidInput);

    // prod (1 - X^k)^{a_k} = 1 - 2X up to X^30, expanded by binomial series here
    std::vector<Integer> p(31, 0);
    p[0] = 1;
    for (std::size_t k = 1; k <= 30; ++k) {
        std::vector<Integer> f(31, 0);
        Integer binom = 1;
        for (std::size_t j = 0; j * k <= 30; ++j) {
            f[j * k] = j % 2 ? Integer(-binom) : binom;
            binom = binom * (a[k - 1] - Integer(static_cast<unsigned long>(j))) / Integer(static_cast<unsigned long>(j + 1));
        }
        std::vector<Integer> r(31, 0);
        for (std::size_t i = 0; i <= 30; ++i)
            for (std::size_t j = 0; i + j <= 30; ++j) r[i + j] += p[i] * f[j];
        p = r;
    }
    CHECK(p[0] == 1);
    CHECK(p[1] == -2);
    for (std::size_t d = 2; d <= 30; ++d) CHECK(p[d] == 0);
}

TEST_CASE("signed sphere counterexample") {
    const auto ex = remark210_counterexample();
    CHECK(norm_sq(ex.alpha) == 4);
    CHECK(norm_sq(ex.beta) == 4);
    CHECK(inner(ex.alpha, ex.beta) == -2);
    const Vector a = ex.alpha, b = ex.beta;
    GroupRingElement want(4);
    want.add_term(Vector(4), 1);
    want.add_term(a, 1);
    want.add_term(b, 1);
    want.add_term(Rational(2) * a + b, -1);
    want.add_term(a + Rational(2) * b, -1);
    want.add_term(Rational(2) * (a + b), -1);
    CHECK(ex.expansion == want);
    CHECK(ex.fit.radius_sq == 4);
    CHECK(ex.fit.center == a + b);
    for (const auto& v : support(ex.expansion)) CHECK(lies_on(ex.fit, v));
    CHECK_FALSE(ex.axioms.all());
    CHECK(ex.m.multiplicity(a) == -1);
    CHECK(ex.m.multiplicity(Rational(2) * a) == 1);
}
