#include "homnambu/linalg.hpp"

#include <algorithm>

#include "homnambu/errors.hpp"

namespace homnambu {

Vec zero_vec(std::size_t n) { return Vec(n, Scalar::zero()); }

bool vec_is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool vec_eq(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

Vec vec_add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
    Vec out(a);
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    return out;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
    Vec out(a);
    for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    return out;
}

Vec vec_scale(const Scalar& c, const Vec& v) {
    Vec out(v);
    for (auto& s : out) s *= c;
    return out;
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one();
    return m;
}

Vec Matrix::column(std::size_t c) const {
    Vec out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back(at(r, c));
    return out;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    if (cols_ != rhs.rows_) throw DimensionMismatch("matrix product shape mismatch");
    Matrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = at(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                const Scalar& b = rhs.at(k, j);
                if (b.is_zero()) continue;
                out.at(i, j) += a * b;
            }
        }
    return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw DimensionMismatch("matrix sum shape mismatch");
    Matrix out = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] += rhs.e_[i];
    return out;
}

Matrix Matrix::operator-() const {
    Matrix out = *this;
    for (auto& s : out.e_) s = -s;
    return out;
}

Matrix Matrix::scaled(const Scalar& c) const {
    Matrix out = *this;
    for (auto& s : out.e_) s *= c;
    return out;
}

Vec Matrix::apply(const Vec& v) const {
    if (v.size() != cols_) throw DimensionMismatch("matrix apply shape mismatch");
    Vec out = zero_vec(rows_);
    for (std::size_t j = 0; j < cols_; ++j) {
        if (v[j].is_zero()) continue;
        for (std::size_t i = 0; i < rows_; ++i) {
            const Scalar& a = at(i, j);
            if (!a.is_zero()) out[i] += a * v[j];
        }
    }
    return out;
}

bool Matrix::operator==(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) return false;
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] != rhs.e_[i]) return false;
    return true;
}

bool Matrix::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    return *this == identity(rows_);
}

Scalar apply_covector(const Vec& tau, const Vec& v) {
    if (tau.size() != v.size()) throw DimensionMismatch("covector apply shape mismatch");
    Scalar out = Scalar::zero();
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!tau[i].is_zero() && !v[i].is_zero()) out += tau[i] * v[i];
    return out;
}

Vec covector_compose(const Vec& tau, const Matrix& m) {
    if (tau.size() != m.rows()) throw DimensionMismatch("covector compose shape mismatch");
    Vec out;
    out.reserve(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(apply_covector(tau, m.column(j)));
    return out;
}

namespace {

void record_assumption(std::vector<Scalar>& assumptions, const Scalar& pivot) {
    if (pivot.is_constant()) return;
    for (const Scalar& seen : assumptions)
        if (seen == pivot) return;
    assumptions.push_back(pivot);
}

/* Rows of a linear system are projectively scalable; stripping the joint
 * rational content of a row keeps coefficients small. */
void reduce_row_content(Matrix& m, std::size_t r) {
    Rational num_content(0);
    bool constant_only = true;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!m.at(r, c).is_constant()) constant_only = false;
    if (!constant_only) return;
    Integer g(0), l(1);
    for (std::size_t c = 0; c < m.cols(); ++c) {
        Rational v = m.at(r, c).constant_value();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_num().get_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den().get_mpz_t());
    }
    if (g == 0) return;
    num_content = rat(g, l);
    if (num_content == 1) return;
    Scalar inv(Rational(1) / num_content);
    for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) *= inv;
}

}  // namespace

RrefResult rref(Matrix m) {
    RrefResult res;
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t lead = 0;
    Scalar prev_pivot = Scalar::one();
    std::vector<std::size_t> pivot_rows;
    for (std::size_t col = 0; col < cols && lead < rows; ++col) {
        /* Fewest-terms-numerator pivot, ties to the lowest row. */
        std::size_t best = rows;
        std::size_t best_terms = 0;
        for (std::size_t r = lead; r < rows; ++r) {
            const Scalar& s = m.at(r, col);
            if (s.is_zero()) continue;
            std::size_t nt = s.num().term_count();
            if (best == rows || nt < best_terms) {
                best = r;
                best_terms = nt;
            }
        }
        if (best == rows) continue;
        if (best != lead)
            for (std::size_t c = 0; c < cols; ++c) std::swap(m.at(lead, c), m.at(best, c));
        Scalar pivot = m.at(lead, col);
        record_assumption(res.pivot_assumptions, pivot);
        /* Bareiss step: scale-and-subtract below, then divide by the
         * previous pivot; exact over the scalar field. */
        for (std::size_t r = lead + 1; r < rows; ++r) {
            Scalar factor = m.at(r, col);
            if (factor.is_zero()) continue;
            m.at(r, col) = Scalar::zero();
            for (std::size_t c = col + 1; c < cols; ++c) {
                Scalar v = pivot * m.at(r, c) - factor * m.at(lead, c);
                m.at(r, c) = v / prev_pivot;
            }
            reduce_row_content(m, r);
        }
        prev_pivot = pivot;
        res.pivot_cols.push_back(col);
        pivot_rows.push_back(lead);
        ++lead;
    }
    res.rank = res.pivot_cols.size();
    /* Normalize pivots to 1, then eliminate above. */
    for (std::size_t k = res.rank; k-- > 0;) {
        std::size_t pr = pivot_rows[k], pc = res.pivot_cols[k];
        Scalar inv = Scalar::one() / m.at(pr, pc);
        for (std::size_t c = pc; c < cols; ++c) m.at(pr, c) *= inv;
        /* p/p carries no content to cancel without polynomial GCD; it is 1 by construction. */
        m.at(pr, pc) = Scalar::one();
        for (std::size_t r = 0; r < pr; ++r) {
            Scalar factor = m.at(r, pc);
            if (factor.is_zero()) continue;
            for (std::size_t c = pc; c < cols; ++c) m.at(r, c) -= factor * m.at(pr, c);
            m.at(r, pc) = Scalar::zero();
        }
    }
    res.mat = std::move(m);
    return res;
}

Subspace Subspace::from_spanning(std::size_t ambient, const std::vector<Vec>& vectors) {
    Matrix m(vectors.size(), ambient);
    for (std::size_t r = 0; r < vectors.size(); ++r) {
        if (vectors[r].size() != ambient) throw DimensionMismatch("spanning vector size mismatch");
        for (std::size_t c = 0; c < ambient; ++c) m.at(r, c) = vectors[r][c];
    }
    RrefResult rr = rref(std::move(m));
    Subspace s(ambient);
    for (std::size_t k = 0; k < rr.rank; ++k) {
        Vec row;
        row.reserve(ambient);
        for (std::size_t c = 0; c < ambient; ++c) row.push_back(rr.mat.at(k, c));
        s.basis_.push_back(std::move(row));
    }
    s.pivot_cols_ = rr.pivot_cols;
    s.assumptions_ = rr.pivot_assumptions;
    return s;
}

Subspace Subspace::full(std::size_t ambient) {
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < ambient; ++i) {
        Vec v = zero_vec(ambient);
        v[i] = Scalar::one();
        rows.push_back(std::move(v));
    }
    return from_spanning(ambient, rows);
}

bool Subspace::operator==(const Subspace& rhs) const {
    if (ambient_ != rhs.ambient_ || basis_.size() != rhs.basis_.size()) return false;
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (!vec_eq(basis_[i], rhs.basis_[i])) return false;
    return true;
}

Subspace nullspace(const Matrix& m) {
    RrefResult rr = rref(m);
    const std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (auto c : rr.pivot_cols) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        Vec v = zero_vec(cols);
        v[f] = Scalar::one();
        for (std::size_t k = 0; k < rr.rank; ++k) v[rr.pivot_cols[k]] = -rr.mat.at(k, f);
        basis.push_back(std::move(v));
    }
    Subspace s = Subspace::from_spanning(cols, basis);
    for (const Scalar& a : rr.pivot_assumptions) record_assumption(s.assumptions_, a);
    return s;
}

Subspace nullspace_of_covector(const Vec& tau) {
    Matrix m(1, tau.size());
    for (std::size_t c = 0; c < tau.size(); ++c) m.at(0, c) = tau[c];
    return nullspace(m);
}

bool subspace_contains(const Subspace& s, const Vec& v) {
    if (v.size() != s.ambient_) throw DimensionMismatch("vector/ambient size mismatch");
    Vec rem = v;
    for (std::size_t k = 0; k < s.basis_.size(); ++k) {
        const Scalar& c = rem[s.pivot_cols_[k]];
        if (c.is_zero()) continue;
        rem = vec_sub(rem, vec_scale(c, s.basis_[k]));
    }
    return vec_is_zero(rem);
}

LinearSolution solve_linear(const std::vector<Vec>& rows, const Vec& rhs, std::size_t width) {
    if (rows.size() != rhs.size()) throw DimensionMismatch("row/rhs count mismatch");
    Matrix aug(rows.size(), width + 1);
    Matrix coeff(rows.size(), width);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != width) throw DimensionMismatch("system row width mismatch");
        for (std::size_t c = 0; c < width; ++c) {
            aug.at(r, c) = rows[r][c];
            coeff.at(r, c) = rows[r][c];
        }
        aug.at(r, width) = rhs[r];
    }
    RrefResult rr = rref(std::move(aug));
    LinearSolution sol{true, zero_vec(width), nullspace(coeff), rr.pivot_assumptions};
    for (std::size_t k = 0; k < rr.rank; ++k) {
        if (rr.pivot_cols[k] == width) {
            sol.consistent = false;
            sol.particular = zero_vec(width);
            return sol;
        }
        sol.particular[rr.pivot_cols[k]] = rr.mat.at(k, width);
    }
    return sol;
}

}  // namespace homnambu
