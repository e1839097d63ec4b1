#include "homnambu/ternary_algebra.hpp"

#include <algorithm>

#include "homnambu/errors.hpp"
#include "homnambu/exec_scan.hpp"

namespace homnambu {

namespace {

constexpr std::array<std::array<std::size_t, 3>, 6> kPerms3 = {
    {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
constexpr std::array<int, 6> kPermSign3 = {1, -1, -1, 1, 1, -1};

}  // namespace

TernaryAlgebra::TernaryAlgebra(std::size_t dim, ParamSetPtr params,
                               std::vector<std::string> basis_names)
    : dim_(dim), params_(std::move(params)), names_(std::move(basis_names)) {
    if (names_.empty())
        for (std::size_t i = 0; i < dim_; ++i) names_.push_back("x" + std::to_string(i + 1));
    if (names_.size() != dim_) throw DimensionMismatch("basis name count mismatch");
    std::size_t count = dim_ >= 3 ? dim_ * (dim_ - 1) * (dim_ - 2) / 6 : 0;
    d_.assign(count, zero_vec(dim_));
    alpha1_ = Matrix::identity(dim_);
    alpha2_ = Matrix::identity(dim_);
}

std::size_t TernaryAlgebra::triple_index(std::size_t i, std::size_t j, std::size_t k) const {
    /* Lexicographic rank of (i, j, k) among sorted triples. */
    auto choose2 = [](std::size_t m) { return m >= 2 ? m * (m - 1) / 2 : 0; };
    std::size_t rank = 0;
    for (std::size_t a = 0; a < i; ++a) rank += choose2(dim_ - 1 - a);
    for (std::size_t b = i + 1; b < j; ++b) rank += dim_ - 1 - b;
    return rank + (k - j - 1);
}

void TernaryAlgebra::set_bracket(std::size_t i, std::size_t j, std::size_t k, Vec value) {
    if (!(i < j && j < k && k < dim_))
        throw DimensionMismatch("bracket triple must satisfy i < j < k < dim");
    if (value.size() != dim_) throw DimensionMismatch("bracket value size mismatch");
    d_[triple_index(i, j, k)] = std::move(value);
}

const Vec& TernaryAlgebra::stored_bracket(std::size_t i, std::size_t j, std::size_t k) const {
    if (!(i < j && j < k && k < dim_))
        throw DimensionMismatch("bracket triple must satisfy i < j < k < dim");
    return d_[triple_index(i, j, k)];
}

Vec TernaryAlgebra::basis_bracket(std::size_t i, std::size_t j, std::size_t k) const {
    if (i == j || j == k || i == k) return zero_vec(dim_);
    std::array<std::size_t, 3> idx = {i, j, k};
    int sign = 1;
    /* Three-element sort, counting transpositions. */
    if (idx[0] > idx[1]) {
        std::swap(idx[0], idx[1]);
        sign = -sign;
    }
    if (idx[1] > idx[2]) {
        std::swap(idx[1], idx[2]);
        sign = -sign;
    }
    if (idx[0] > idx[1]) {
        std::swap(idx[0], idx[1]);
        sign = -sign;
    }
    Vec out = stored_bracket(idx[0], idx[1], idx[2]);
    if (sign < 0)
        for (auto& s : out) s = -s;
    return out;
}

void TernaryAlgebra::set_twist(Matrix alpha1, Matrix alpha2) {
    if (alpha1.rows() != dim_ || alpha1.cols() != dim_ || alpha2.rows() != dim_ ||
        alpha2.cols() != dim_)
        throw DimensionMismatch("twist map shape mismatch");
    alpha1_ = std::move(alpha1);
    alpha2_ = std::move(alpha2);
}

bool TernaryAlgebra::twist_is_identity() const {
    return alpha1_.is_identity() && alpha2_.is_identity();
}

Vec bracket3(const TernaryAlgebra& t, const Vec& u, const Vec& v, const Vec& w) {
    const std::size_t n = t.dim();
    if (u.size() != n || v.size() != n || w.size() != n)
        throw DimensionMismatch("bracket3 operand size mismatch");
    Vec out = zero_vec(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                const Vec& d = t.stored_bracket(i, j, k);
                if (vec_is_zero(d)) continue;
                /* 3x3 minor of the coordinate rows (u, v, w) at columns
                 * (i, j, k). */
                Scalar m01 = v[j] * w[k] - v[k] * w[j];
                Scalar m02 = v[i] * w[k] - v[k] * w[i];
                Scalar m03 = v[i] * w[j] - v[j] * w[i];
                Scalar coeff = u[i] * m01 - u[j] * m02 + u[k] * m03;
                if (coeff.is_zero()) continue;
                for (std::size_t l = 0; l < n; ++l)
                    if (!d[l].is_zero()) out[l] += coeff * d[l];
            }
    return out;
}

TernaryAlgebra induce_ternary(const BinaryAlgebra& a, const Vec& tau, Matrix alpha, Matrix beta) {
    const std::size_t n = a.dim();
    if (tau.size() != n) throw DimensionMismatch("functional size mismatch");
    TernaryAlgebra t(n, a.params(), a.basis_names());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                Vec value = vec_scale(tau[i], a.basis_bracket(j, k));
                value = vec_add(value, vec_scale(tau[j], a.basis_bracket(k, i)));
                value = vec_add(value, vec_scale(tau[k], a.basis_bracket(i, j)));
                t.set_bracket(i, j, k, std::move(value));
            }
    t.set_twist(std::move(alpha), std::move(beta));
    return t;
}

namespace {

Vec hom_nambu_residual(const TernaryAlgebra& t, const std::vector<Vec>& a1,
                       const std::vector<Vec>& a2, std::size_t x1, std::size_t x2, std::size_t x3,
                       std::size_t x4, std::size_t x5) {
    Vec lhs = bracket3(t, a1[x1], a2[x2], t.basis_bracket(x3, x4, x5));
    Vec r = bracket3(t, t.basis_bracket(x1, x2, x3), a1[x4], a2[x5]);
    r = vec_add(r, bracket3(t, a1[x3], t.basis_bracket(x1, x2, x4), a2[x5]));
    r = vec_add(r, bracket3(t, a1[x3], a2[x4], t.basis_bracket(x1, x2, x5)));
    return vec_sub(lhs, r);
}

}  // namespace

CheckReport check_hom_nambu(const TernaryAlgebra& t, Exec mode, NambuSweep sweep) {
    const std::size_t n = t.dim();
    std::vector<Vec> a1(n), a2(n);
    for (std::size_t i = 0; i < n; ++i) {
        a1[i] = t.alpha1().column(i);
        a2[i] = t.alpha2().column(i);
    }
    auto residual_at = [&](const std::array<std::size_t, 5>& x) {
        return hom_nambu_residual(t, a1, a2, x[0], x[1], x[2], x[3], x[4]);
    };
    std::vector<std::array<std::size_t, 5>> tuples;
    if (sweep == NambuSweep::full) {
        tuples.reserve(n * n * n * n * n);
        for (std::size_t x1 = 0; x1 < n; ++x1)
            for (std::size_t x2 = 0; x2 < n; ++x2)
                for (std::size_t x3 = 0; x3 < n; ++x3)
                    for (std::size_t x4 = 0; x4 < n; ++x4)
                        for (std::size_t x5 = 0; x5 < n; ++x5)
                            tuples.push_back({x1, x2, x3, x4, x5});
    } else {
        for (std::size_t x1 = 0; x1 < n; ++x1)
            for (std::size_t x2 = 0; x2 < n; ++x2)
                for (std::size_t x3 = 0; x3 < n; ++x3)
                    for (std::size_t x4 = x3 + 1; x4 < n; ++x4)
                        for (std::size_t x5 = x4 + 1; x5 < n; ++x5)
                            tuples.push_back({x1, x2, x3, x4, x5});
        /* Deterministic sample of unrestricted tuples: the reduced sweep
         * must not silently miss repeated-index constraints. */
        std::uint64_t state = 0x9e3779b97f4a7c15ull;
        std::size_t total = n * n * n * n * n;
        for (int s = 0; s < 64; ++s) {
            state = state * 6364136223846793005ull + 1442695040888963407ull;
            std::size_t flat = static_cast<std::size_t>((state >> 11) % total);
            std::array<std::size_t, 5> x{};
            for (int slot = 4; slot >= 0; --slot) {
                x[static_cast<std::size_t>(slot)] = flat % n;
                flat /= n;
            }
            tuples.push_back(x);
        }
    }
    auto fails = [&](std::size_t idx) { return !vec_is_zero(residual_at(tuples[idx])); };
    auto hit = detail::first_failure(tuples.size(), mode, fails);
    if (!hit) return CheckReport::pass();
    const auto& x = tuples[*hit];
    return CheckReport::fail({x[0], x[1], x[2], x[3], x[4]}, residual_at(x));
}

namespace {

Vec induced_direct(const std::function<Vec(std::size_t, std::size_t)>& bracket, const Vec& tau,
                   std::size_t a, std::size_t b, std::size_t c) {
    Vec out = vec_scale(tau[a], bracket(b, c));
    out = vec_add(out, vec_scale(tau[b], bracket(c, a)));
    out = vec_add(out, vec_scale(tau[c], bracket(a, b)));
    return out;
}

}  // namespace

CheckReport check_ternary_skew_equivalence_table(
    std::size_t dim, const std::function<Vec(std::size_t, std::size_t)>& bracket,
    const Vec& tau) {
    if (tau.size() != dim) throw DimensionMismatch("functional size mismatch");
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i; j < dim; ++j)
            for (std::size_t k = j; k < dim; ++k) {
                Vec sorted = induced_direct(bracket, tau, i, j, k);
                const bool repeated = (i == j) || (j == k);
                if (repeated && !vec_is_zero(sorted))
                    return CheckReport::fail({i, j, k}, std::move(sorted));
                const std::array<std::size_t, 3> base = {i, j, k};
                for (std::size_t p = 0; p < kPerms3.size(); ++p) {
                    std::array<std::size_t, 3> perm = {base[kPerms3[p][0]], base[kPerms3[p][1]],
                                                       base[kPerms3[p][2]]};
                    Vec got = induced_direct(bracket, tau, perm[0], perm[1], perm[2]);
                    Vec want = kPermSign3[p] > 0 ? sorted : vec_scale(Scalar::of(-1), sorted);
                    Vec res = vec_sub(got, want);
                    if (!vec_is_zero(res))
                        return CheckReport::fail({perm[0], perm[1], perm[2]}, std::move(res));
                }
            }
    return CheckReport::pass();
}

CheckReport check_ternary_skew_equivalence(const BinaryAlgebra& a, const Vec& tau) {
    return check_ternary_skew_equivalence_table(
        a.dim(), [&](std::size_t i, std::size_t j) { return a.basis_bracket(i, j); }, tau);
}

CheckReport check_ternary_endomorphism(const TernaryAlgebra& t, const Matrix& rho) {
    const std::size_t n = t.dim();
    if (rho.rows() != n || rho.cols() != n) throw DimensionMismatch("map shape mismatch");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                Vec lhs = rho.apply(t.stored_bracket(i, j, k));
                Vec rhs = bracket3(t, rho.column(i), rho.column(j), rho.column(k));
                Vec res = vec_sub(lhs, rhs);
                if (!vec_is_zero(res)) return CheckReport::fail({i, j, k}, std::move(res));
            }
    /* Structure maps must intertwine: rho o alpha_m == alpha_m o rho. */
    for (const Matrix* m : {&t.alpha1(), &t.alpha2()}) {
        Matrix diff = rho * *m + (-(*m * rho));
        if (!diff.is_zero()) {
            for (std::size_t c = 0; c < n; ++c) {
                Vec col = diff.column(c);
                if (!vec_is_zero(col)) return CheckReport::fail({c}, std::move(col));
            }
        }
    }
    return CheckReport::pass();
}

CheckReport check_ternary_morphism(const TernaryAlgebra& t, const TernaryAlgebra& u,
                                   const Matrix& f) {
    if (f.rows() != u.dim() || f.cols() != t.dim())
        throw DimensionMismatch("morphism shape mismatch");
    const std::size_t n = t.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                Vec lhs = f.apply(t.stored_bracket(i, j, k));
                Vec rhs = bracket3(u, f.column(i), f.column(j), f.column(k));
                Vec res = vec_sub(lhs, rhs);
                if (!vec_is_zero(res)) return CheckReport::fail({i, j, k}, std::move(res));
            }
    const Matrix lhs1 = f * t.alpha1(), rhs1 = u.alpha1() * f;
    const Matrix lhs2 = f * t.alpha2(), rhs2 = u.alpha2() * f;
    for (auto [lhs, rhs] : {std::pair{&lhs1, &rhs1}, std::pair{&lhs2, &rhs2}}) {
        Matrix diff = *lhs + (-*rhs);
        if (!diff.is_zero()) {
            for (std::size_t c = 0; c < f.cols(); ++c) {
                Vec col = diff.column(c);
                if (!vec_is_zero(col)) return CheckReport::fail({c}, std::move(col));
            }
        }
    }
    return CheckReport::pass();
}

TernaryAlgebra twist_by_endomorphism(const TernaryAlgebra& t, const Matrix& rho) {
    if (!t.twist_is_identity())
        throw AlreadyTwisted("input already carries a non-identity twist pair");
    CheckReport endo = check_ternary_endomorphism(t, rho);
    if (!endo.holds())
        throw NotAnEndomorphism("map does not preserve the ternary bracket");
    const std::size_t n = t.dim();
    TernaryAlgebra out(n, t.params(), t.basis_names());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k)
                out.set_bracket(i, j, k, rho.apply(t.stored_bracket(i, j, k)));
    Matrix copy = rho;
    out.set_twist(copy, copy);
    return out;
}

}  // namespace homnambu
