#include "homnambu/binary_algebra.hpp"

#include <array>

#include "homnambu/errors.hpp"
#include "homnambu/exec_scan.hpp"

namespace homnambu {

BinaryAlgebra::BinaryAlgebra(std::size_t dim, ParamSetPtr params,
                             std::vector<std::string> basis_names)
    : dim_(dim), params_(std::move(params)), names_(std::move(basis_names)) {
    if (names_.empty())
        for (std::size_t i = 0; i < dim_; ++i) names_.push_back("x" + std::to_string(i + 1));
    if (names_.size() != dim_) throw DimensionMismatch("basis name count mismatch");
    c_.assign(dim_ * (dim_ - 1) / 2, zero_vec(dim_));
}

std::size_t BinaryAlgebra::pair_index(std::size_t i, std::size_t j) const {
    /* Position of (i, j), i < j, in lexicographic pair order. */
    return i * dim_ - i * (i + 1) / 2 + (j - i - 1);
}

void BinaryAlgebra::set_bracket(std::size_t i, std::size_t j, Vec value) {
    if (i >= j || j >= dim_) throw DimensionMismatch("bracket pair must satisfy i < j < dim");
    if (value.size() != dim_) throw DimensionMismatch("bracket value size mismatch");
    c_[pair_index(i, j)] = std::move(value);
}

const Vec& BinaryAlgebra::stored_bracket(std::size_t i, std::size_t j) const {
    if (i >= j || j >= dim_) throw DimensionMismatch("bracket pair must satisfy i < j < dim");
    return c_[pair_index(i, j)];
}

Vec BinaryAlgebra::basis_bracket(std::size_t i, std::size_t j) const {
    if (i == j) return zero_vec(dim_);
    if (i < j) return stored_bracket(i, j);
    Vec out = stored_bracket(j, i);
    for (auto& s : out) s = -s;
    return out;
}

Vec bracket2(const BinaryAlgebra& a, const Vec& u, const Vec& v) {
    const std::size_t n = a.dim();
    if (u.size() != n || v.size() != n) throw DimensionMismatch("bracket2 operand size mismatch");
    Vec out = zero_vec(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            Scalar coeff = u[i] * v[j] - u[j] * v[i];
            if (coeff.is_zero()) continue;
            const Vec& c = a.stored_bracket(i, j);
            for (std::size_t k = 0; k < n; ++k)
                if (!c[k].is_zero()) out[k] += coeff * c[k];
        }
    }
    return out;
}

namespace {

Vec hom_jacobi_residual(const BinaryAlgebra& a, const Matrix& alpha, std::size_t i, std::size_t j,
                        std::size_t k) {
    Vec r = bracket2(a, alpha.column(i), a.basis_bracket(j, k));
    r = vec_add(r, bracket2(a, alpha.column(j), a.basis_bracket(k, i)));
    r = vec_add(r, bracket2(a, alpha.column(k), a.basis_bracket(i, j)));
    return r;
}

}  // namespace

CheckReport check_hom_jacobi(const BinaryAlgebra& a, const Matrix& alpha, Exec mode) {
    const std::size_t n = a.dim();
    if (alpha.rows() != n || alpha.cols() != n)
        throw DimensionMismatch("twist map shape mismatch");
    /* Sorted triples i <= j <= k, flattened in lexicographic order. */
    std::vector<std::array<std::size_t, 3>> triples;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            for (std::size_t k = j; k < n; ++k) triples.push_back({i, j, k});
    auto fails = [&](std::size_t t) {
        const auto& [i, j, k] = triples[t];
        return !vec_is_zero(hom_jacobi_residual(a, alpha, i, j, k));
    };
    auto hit = detail::first_failure(triples.size(), mode, fails);
    if (!hit) return CheckReport::pass();
    const auto& [i, j, k] = triples[*hit];
    return CheckReport::fail({i, j, k}, hom_jacobi_residual(a, alpha, i, j, k));
}

CheckReport check_trace_function(const BinaryAlgebra& a, const Vec& tau) {
    const std::size_t n = a.dim();
    if (tau.size() != n) throw DimensionMismatch("functional size mismatch");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Scalar v = apply_covector(tau, a.stored_bracket(i, j));
            if (!v.is_zero()) return CheckReport::fail({i, j}, {v});
        }
    return CheckReport::pass();
}

CheckReport check_binary_endomorphism(const BinaryAlgebra& a, const Matrix& rho) {
    const std::size_t n = a.dim();
    if (rho.rows() != n || rho.cols() != n) throw DimensionMismatch("map shape mismatch");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Vec lhs = rho.apply(a.stored_bracket(i, j));
            Vec rhs = bracket2(a, rho.column(i), rho.column(j));
            Vec res = vec_sub(lhs, rhs);
            if (!vec_is_zero(res)) return CheckReport::fail({i, j}, std::move(res));
        }
    return CheckReport::pass();
}

CheckReport check_is_ideal(const BinaryAlgebra& a, const Subspace& s) {
    const std::size_t n = a.dim();
    if (s.ambient() != n) throw DimensionMismatch("subspace ambient mismatch");
    for (std::size_t b = 0; b < s.dim(); ++b)
        for (std::size_t j = 0; j < n; ++j) {
            Vec e = zero_vec(n);
            e[j] = Scalar::one();
            Vec w = bracket2(a, s.basis()[b], e);
            if (!subspace_contains(s, w)) return CheckReport::fail({b, j}, std::move(w));
        }
    CheckReport r = CheckReport::pass();
    r.pivot_assumptions = s.pivot_assumptions();
    return r;
}

Subspace trace_function_space(const BinaryAlgebra& a) {
    const std::size_t n = a.dim();
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) rows.push_back(a.stored_bracket(i, j));
    Matrix m(rows.size(), n);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < n; ++c) m.at(r, c) = rows[r][c];
    return nullspace(m);
}

}  // namespace homnambu
