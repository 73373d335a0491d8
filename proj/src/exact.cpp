#include "rootchar/exact.hpp"

#include <algorithm>
#include <utility>

namespace rootchar {

Rational::Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw InvalidInput("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    auto parse_int = [&](std::string_view s) {
        if (s.empty()) throw InvalidInput("malformed rational '" + std::string(text) + "'");
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) throw InvalidInput("malformed rational '" + std::string(text) + "'");
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9')
                throw InvalidInput("malformed rational '" + std::string(text) + "'");
        std::string digits(s[0] == '+' ? s.substr(1) : s);
        return Integer(digits, 10);
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

std::string Rational::str() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw InvalidInput("division by zero");
    q_ /= o.q_;
    return *this;
}

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

Vector Vector::unit(std::size_t dim, std::size_t i) {
    Vector v(dim);
    v[i] = 1;
    return v;
}

bool Vector::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return x.is_zero(); });
}

std::string Vector::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) s += ",";
        s += c_[i].str();
    }
    return s + ")";
}

Vector& Vector::operator+=(const Vector& o) {
    if (o.dim() != dim()) throw DimensionMismatch("vector addition: dimension mismatch");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

Vector& Vector::operator-=(const Vector& o) {
    if (o.dim() != dim()) throw DimensionMismatch("vector subtraction: dimension mismatch");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

Vector& Vector::operator*=(const Rational& s) {
    for (auto& x : c_) x *= s;
    return *this;
}

Vector Vector::operator-() const {
    Vector r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
}

Rational inner(const Vector& u, const Vector& v) {
    if (u.dim() != v.dim()) throw DimensionMismatch("inner product: dimension mismatch");
    mpq_class acc = 0;
    for (std::size_t i = 0; i < u.dim(); ++i) acc += u[i].raw() * v[i].raw();
    return Rational(acc);
}

Rational norm_sq(const Vector& v) { return inner(v, v); }

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Vector Matrix::apply(const Vector& v) const {
    if (v.dim() != cols_) throw DimensionMismatch("matrix-vector product: dimension mismatch");
    Vector r(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        mpq_class acc = 0;
        for (std::size_t j = 0; j < cols_; ++j) acc += (*this)(i, j).raw() * v[j].raw();
        r[i] = Rational(acc);
    }
    return r;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Rational Matrix::determinant() const {
    if (rows_ != cols_) throw DimensionMismatch("determinant of a non-square matrix");
    Matrix m(*this);
    Rational det = 1;
    for (std::size_t c = 0; c < cols_; ++c) {
        std::size_t p = c;
        while (p < rows_ && m(p, c).is_zero()) ++p;
        if (p == rows_) return 0;
        if (p != c) {
            for (std::size_t j = 0; j < cols_; ++j) std::swap(m(p, j), m(c, j));
            det = -det;
        }
        det *= m(c, c);
        for (std::size_t r = c + 1; r < rows_; ++r) {
            if (m(r, c).is_zero()) continue;
            const Rational f = m(r, c) / m(c, c);
            for (std::size_t j = c; j < cols_; ++j) m(r, j) -= f * m(c, j);
        }
    }
    return det;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product: dimension mismatch");
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t j = 0; j < b.cols_; ++j) {
            mpq_class acc = 0;
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const auto& x = a(i, k).raw();
                if (sgn(x) == 0) continue;
                acc += x * b(k, j).raw();
            }
            r(i, j) = Rational(acc);
        }
    return r;
}

LinearSolution solve_linear(std::span<const Vector> rows, std::span<const Rational> rhs,
                            std::size_t dim) {
    if (rows.size() != rhs.size())
        throw DimensionMismatch("solve_linear: row count differs from rhs length");
    for (const auto& r : rows)
        if (r.dim() != dim) throw DimensionMismatch("solve_linear: rows of unequal dimension");

    // Augmented system, reduced to row echelon form in place.
    std::vector<std::vector<mpq_class>> m(rows.size(), std::vector<mpq_class>(dim + 1));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < dim; ++j) m[i][j] = rows[i][j].raw();
        m[i][dim] = rhs[i].raw();
    }

    LinearSolution sol;
    std::size_t cur = 0;
    for (std::size_t c = 0; c < dim && cur < m.size(); ++c) {
        std::size_t p = cur;
        while (p < m.size() && sgn(m[p][c]) == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[cur]);
        const mpq_class piv = m[cur][c];
        for (std::size_t j = c; j <= dim; ++j) m[cur][j] /= piv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == cur || sgn(m[r][c]) == 0) continue;
            const mpq_class f = m[r][c];
            for (std::size_t j = c; j <= dim; ++j) m[r][j] -= f * m[cur][j];
        }
        sol.pivots.push_back(c);
        ++cur;
    }
    for (std::size_t r = cur; r < m.size(); ++r)
        if (sgn(m[r][dim]) != 0) {
            sol.kind = LinearSolution::Kind::inconsistent;
            return sol;
        }

    Vector x(dim);
    for (std::size_t k = 0; k < sol.pivots.size(); ++k) x[sol.pivots[k]] = Rational(m[k][dim]);
    sol.particular = std::move(x);

    std::vector<bool> is_pivot(dim, false);
    for (auto c : sol.pivots) is_pivot[c] = true;
    for (std::size_t f = 0; f < dim; ++f) {
        if (is_pivot[f]) continue;
        Vector k(dim);
        k[f] = 1;
        for (std::size_t r = 0; r < sol.pivots.size(); ++r) k[sol.pivots[r]] = Rational(mpq_class(-m[r][f]));
        sol.kernel_basis.push_back(std::move(k));
    }
    sol.kind = sol.kernel_basis.empty() ? LinearSolution::Kind::unique
                                        : LinearSolution::Kind::affine_family;
    return sol;
}

LinearSolution solve_linear(std::span<const Vector> rows, std::span<const Rational> rhs) {
    if (rows.empty()) throw InvalidInput("solve_linear: dimension cannot be inferred from no rows");
    return solve_linear(rows, rhs, rows.front().dim());
}

SpanRank span_rank(std::span<const Vector> vectors) {
    if (vectors.empty()) throw InvalidInput("span_rank: empty input");
    const std::size_t dim = vectors.front().dim();
    // Echelon rows, each normalised so its pivot entry is 1.
    std::vector<std::pair<std::size_t, std::vector<mpq_class>>> basis;
    SpanRank out;
    for (std::size_t idx = 0; idx < vectors.size(); ++idx) {
        const auto& v = vectors[idx];
        if (v.dim() != dim) throw DimensionMismatch("span_rank: vectors of unequal dimension");
        std::vector<mpq_class> w(dim);
        for (std::size_t j = 0; j < dim; ++j) w[j] = v[j].raw();
        for (const auto& [pc, row] : basis) {
            if (sgn(w[pc]) == 0) continue;
            const mpq_class f = w[pc];
            for (std::size_t j = 0; j < dim; ++j) w[j] -= f * row[j];
        }
        std::size_t pc = 0;
        while (pc < dim && sgn(w[pc]) == 0) ++pc;
        if (pc == dim) continue;
        const mpq_class piv = w[pc];
        for (auto& x : w) x /= piv;
        for (auto& [qc, row] : basis) {
            if (sgn(row[pc]) == 0) continue;
            const mpq_class f = row[pc];
            for (std::size_t j = 0; j < dim; ++j) row[j] -= f * w[j];
        }
        basis.emplace_back(pc, std::move(w));
        out.basis_indices.push_back(idx);
    }
    out.rank = basis.size();
    return out;
}

Integer common_denominator(std::span<const Vector> vectors) {
    Integer l = 1;
    for (const auto& v : vectors)
        for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.raw().get_den_mpz_t());
    return l;
}

namespace {

Vector integer_scaled(const Vector& v) {
    const Integer d = common_denominator(std::span<const Vector>(&v, 1));
    Integer g = 0;
    for (const auto& x : v) {
        const Integer n = (x * Rational(d)).numerator();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    }
    if (g == 0) return v;
    return v * Rational(d, g);
}

bool parallel(const Vector& s, const Vector& p) {
    // s in R p, with p nonzero.
    for (std::size_t i = 0; i < s.dim(); ++i)
        for (std::size_t j = i + 1; j < s.dim(); ++j)
            if (s[i] * p[j] != s[j] * p[i]) return false;
    return true;
}

}  // namespace

std::vector<Vector> orthogonal_complement(std::span<const Vector> vectors, std::size_t dim) {
    std::vector<Vector> out;
    if (vectors.empty()) {
        for (std::size_t i = 0; i < dim; ++i) out.push_back(Vector::unit(dim, i));
        return out;
    }
    const std::vector<Rational> zeros(vectors.size());
    auto sol = solve_linear(vectors, zeros, dim);
    for (auto& k : sol.kernel_basis) out.push_back(integer_scaled(k));
    return out;
}

Vector generic_separator(std::span<const Vector> S, const Vector& p) {
    if (S.empty()) throw InvalidInput("generic_separator: empty set");
    const std::size_t dim = p.dim();
    for (const auto& s : S)
        if (s.dim() != dim) throw DimensionMismatch("generic_separator: dimension mismatch");

    const bool p_zero = p.is_zero();
    std::vector<Vector> basis = p_zero ? orthogonal_complement({}, dim)
                                       : orthogonal_complement(std::span<const Vector>(&p, 1), dim);
    if (basis.empty()) {
        // p-perp is {0}; no admissible vector exists.
        Vector n(dim);
        for (std::size_t i = 0; i < dim; ++i) n[i] = 1;
        return n;
    }

    std::vector<const Vector*> bad;
    for (const auto& s : S) {
        if (s.is_zero()) continue;
        if (!p_zero && parallel(s, p)) continue;
        bad.push_back(&s);
    }

    // Integer points on the moment curve t -> sum_j t^j basis_j.
    for (long t = 1;; ++t) {
        Vector n(dim);
        Rational pw = 1;
        for (const auto& b : basis) {
            n += pw * b;
            pw *= Rational(t);
        }
        const bool ok = std::all_of(bad.begin(), bad.end(),
                                    [&](const Vector* s) { return !inner(*s, n).is_zero(); });
        if (ok) return n;
    }
}

}  // namespace rootchar
