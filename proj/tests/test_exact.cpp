#include <doctest.h>

#include <random>

#include "rootchar/exact.hpp"

using namespace rootchar;

namespace {

Rational rq(std::mt19937_64& rng) {
    const long p = static_cast<long>(rng() % 11) - 5;
    const long q = static_cast<long>(rng() % 4) + 1;
    return Rational(Integer(p), Integer(q));
}

Vector rvec(std::mt19937_64& rng, std::size_t dim) {
    Vector v(dim);
    for (std::size_t i = 0; i < dim; ++i) v[i] = rq(rng);
    return v;
}

}  // namespace

TEST_CASE("rational canonical form") {
    CHECK(Rational(Integer(6), Integer(-4)).str() == "-3/2");
    CHECK(Rational::parse("10/4") == Rational(Integer(5), Integer(2)));
    CHECK(Rational::parse("-7").str() == "-7");
    CHECK(Rational::parse("3/-9").str() == "-1/3");
    CHECK(Rational(Integer(0), Integer(5)).str() == "0");
    CHECK_THROWS_AS(Rational::parse("1/0"), InvalidInput);
    CHECK_THROWS_AS(Rational::parse("abc"), InvalidInput);
    CHECK_THROWS_AS(Rational(1) / Rational(0), InvalidInput);
    CHECK(Rational(Integer(1), Integer(3)) + Rational(Integer(1), Integer(6)) == Rational(Integer(1), Integer(2)));
    CHECK(Rational(Integer(-1), Integer(3)) < Rational(0));
}

TEST_CASE("rational arithmetic is exact far beyond machine words") {
    Rational x = 1;
    for (int i = 0; i < 200; ++i) x = x * Rational(Integer(3), Integer(2));
    for (int i = 0; i < 200; ++i) x = x / Rational(Integer(3), Integer(2));
    CHECK(x == 1);
    const Rational big = Rational::parse("123456789012345678901234567890/7");
    CHECK((big * Rational(7)).str() == "123456789012345678901234567890");
}

TEST_CASE("inner product examples") {
    CHECK(inner(Vector{1, -1, 0}, Vector{0, 1, -1}) == -1);
    CHECK(norm_sq(Vector{1, 0, -1}) == 2);
    CHECK(inner(Vector{Rational(Integer(3), Integer(5)), Rational(Integer(4), Integer(5))},
                Vector{Rational(Integer(-4), Integer(5)), Rational(Integer(3), Integer(5))}) == 0);
    CHECK_THROWS_AS(inner(Vector{1, 2}, Vector{1, 2, 3}), DimensionMismatch);
}

TEST_CASE("inner product is symmetric and bilinear") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 200; ++t) {
        const std::size_t d = 1 + rng() % 4;
        const Vector u = rvec(rng, d), v = rvec(rng, d), w = rvec(rng, d);
        const Rational a = rq(rng), b = rq(rng);
        CHECK(inner(u, v) == inner(v, u));
        CHECK(inner(a * u + b * v, w) == a * inner(u, w) + b * inner(v, w));
    }
}

TEST_CASE("solve_linear examples") {
    {
        std::vector<Vector> rows{Vector{1}};
        std::vector<Rational> rhs{1};
        auto s = solve_linear(rows, rhs);
        CHECK(s.kind == LinearSolution::Kind::unique);
        CHECK(*s.particular == Vector{1});
        CHECK(s.kernel_basis.empty());
    }
    {
        std::vector<Vector> rows{Vector{0}};
        std::vector<Rational> rhs{1};
        CHECK(solve_linear(rows, rhs).kind == LinearSolution::Kind::inconsistent);
    }
    {
        std::vector<Vector> rows{Vector{1, 1}};
        std::vector<Rational> rhs{2};
        auto s = solve_linear(rows, rhs);
        CHECK(s.kind == LinearSolution::Kind::affine_family);
        CHECK(*s.particular == Vector{2, 0});
        REQUIRE(s.kernel_basis.size() == 1);
        CHECK(s.kernel_basis[0] == Vector{-1, 1});
    }
}

TEST_CASE("solve_linear solutions substitute back exactly") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 200; ++t) {
        const std::size_t d = 1 + rng() % 4, m = 1 + rng() % 5;
        std::vector<Vector> rows;
        std::vector<Rational> rhs;
        // Half the systems are built consistent from a hidden solution.
        const Vector hidden = rvec(rng, d);
        const bool consistent = t % 2 == 0;
        for (std::size_t i = 0; i < m; ++i) {
            rows.push_back(rvec(rng, d));
            rhs.push_back(consistent ? inner(rows.back(), hidden) : rq(rng));
        }
        const auto s = solve_linear(rows, rhs, d);
        if (consistent) CHECK(s.kind != LinearSolution::Kind::inconsistent);
        if (s.kind == LinearSolution::Kind::inconsistent) continue;
        for (std::size_t i = 0; i < m; ++i) {
            CHECK(inner(rows[i], *s.particular) == rhs[i]);
            for (const auto& k : s.kernel_basis) CHECK(inner(rows[i], k).is_zero());
        }
        CHECK(s.kernel_basis.size() + s.pivots.size() == d);
        CHECK(span_rank(rows).rank == s.pivots.size());
        if (s.kind == LinearSolution::Kind::unique) CHECK(s.kernel_basis.empty());
    }
}

TEST_CASE("span_rank examples") {
    std::vector<Vector> a{Vector{1, 0}, Vector{0, 1}, Vector{1, 1}};
    auto r = span_rank(a);
    CHECK(r.rank == 2);
    CHECK(r.basis_indices == std::vector<std::size_t>{0, 1});
    std::vector<Vector> b{Vector{1, -1, 0}, Vector{0, 1, -1}};
    CHECK(span_rank(b).rank == 2);
    std::vector<Vector> c{Vector{2, 0}};
    CHECK(span_rank(c).rank == 1);
    std::vector<Vector> d{Vector{1, 2}, Vector{2, 4}, Vector{0, 1}};
    CHECK(span_rank(d).basis_indices == std::vector<std::size_t>{0, 2});
}

TEST_CASE("orthogonal complement is integral and orthogonal") {
    std::vector<Vector> a{Vector{1, 1, 1}};
    const auto c = orthogonal_complement(a, 3);
    CHECK(c.size() == 2);
    for (const auto& v : c) {
        CHECK(inner(v, a[0]).is_zero());
        for (const auto& x : v) CHECK(x.is_integer());
    }
    CHECK(orthogonal_complement({}, 2).size() == 2);
}

TEST_CASE("generic_separator examples") {
    std::vector<Vector> s1{Vector{1, 0}, Vector{0, 1}};
    const Vector n1 = generic_separator(s1, Vector{1, 0});
    CHECK(inner(n1, Vector{1, 0}).is_zero());
    CHECK(!inner(n1, Vector{0, 1}).is_zero());

    std::vector<Vector> s2{Vector{1, 0}, Vector{0, 1}, Vector{1, 1}};
    const Vector n2 = generic_separator(s2, Vector(2));
    for (const auto& s : s2) CHECK(!inner(s, n2).is_zero());
    CHECK(n2 == Vector{1, 1});  // first point of the candidate curve

    std::vector<Vector> s3{Vector{2}};
    CHECK(generic_separator(s3, Vector{1}) == Vector{1});
}

TEST_CASE("generic_separator satisfies the set equality and is deterministic") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 300; ++t) {
        const std::size_t d = 2 + rng() % 3;
        std::vector<Vector> S;
        const std::size_t k = 1 + rng() % 8;
        for (std::size_t i = 0; i < k; ++i) {
            Vector v(d);
            for (std::size_t j = 0; j < d; ++j) v[j] = static_cast<long>(rng() % 5) - 2;
            S.push_back(v);
        }
        Vector p(d);
        if (t % 2) p = S[rng() % S.size()];
        const Vector n = generic_separator(S, p);
        CHECK(!n.is_zero());
        CHECK(n == generic_separator(S, p));
        for (const auto& s : S) {
            // s is on Rp iff s and p are dependent (or s = 0).
            std::vector<Vector> pair{p, s};
            const bool on_line = s.is_zero() || (!p.is_zero() && span_rank(pair).rank == 1);
            CHECK(inner(s, n).is_zero() == on_line);
        }
    }
}

TEST_CASE("matrix determinant and products") {
    Matrix m(2, 2);
    m(0, 0) = 0;
    m(0, 1) = 1;
    m(1, 0) = 1;
    m(1, 1) = 0;
    CHECK(m.determinant() == -1);
    CHECK(m * m == Matrix::identity(2));
    CHECK(m.apply(Vector{3, 4}) == Vector{4, 3});
    CHECK(common_denominator(std::vector<Vector>{Vector{Rational(Integer(1), Integer(2)), Rational(Integer(1), Integer(3))}}) == 6);
}
