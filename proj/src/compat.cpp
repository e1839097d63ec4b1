#include "homnambu/compat.hpp"

#include <algorithm>

#include "homnambu/errors.hpp"

namespace homnambu {

namespace {

void require_triple_shape(const CompatTriple& t) {
    const std::size_t n = t.tau.size();
    if (t.alpha.rows() != n || t.alpha.cols() != n || t.beta.rows() != n || t.beta.cols() != n)
        throw DimensionMismatch("triple maps must be square of the functional's dimension");
}

/* tau(m(x_i)) tau(x_j) == tau(x_i) tau(m(x_j)) on pairs i < j; the
 * condition is antisymmetric in (i, j) and trivial on the diagonal. */
CheckReport covector_symmetry(const Vec& tau, const Vec& tau_m) {
    const std::size_t n = tau.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Scalar r = tau_m[i] * tau[j] - tau[i] * tau_m[j];
            if (!r.is_zero()) return CheckReport::fail({i, j}, {std::move(r)});
        }
    return CheckReport::pass();
}

}  // namespace

bool CompatConditions::all_hold() const {
    return tau_alpha_symmetry.holds() && tau_beta_symmetry.holds() &&
           alpha_beta_exchange.holds();
}

CheckReport CompatConditions::merged() const {
    if (!tau_alpha_symmetry.holds()) return tau_alpha_symmetry;
    if (!tau_beta_symmetry.holds()) return tau_beta_symmetry;
    if (!alpha_beta_exchange.holds()) return alpha_beta_exchange;
    return CheckReport::pass();
}

CompatConditions check_compatibility_conditions(const CompatTriple& t) {
    require_triple_shape(t);
    const std::size_t n = t.tau.size();
    const Vec ta = covector_compose(t.tau, t.alpha);
    const Vec tb = covector_compose(t.tau, t.beta);
    CompatConditions out;
    out.tau_alpha_symmetry = covector_symmetry(t.tau, ta);
    out.tau_beta_symmetry = covector_symmetry(t.tau, tb);
    out.alpha_beta_exchange = CheckReport::pass();
    for (std::size_t i = 0; i < n && out.alpha_beta_exchange.holds(); ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec r = vec_sub(vec_scale(ta[i], t.beta.column(j)),
                            vec_scale(tb[i], t.alpha.column(j)));
            if (!vec_is_zero(r)) {
                out.alpha_beta_exchange = CheckReport::fail({i, j}, std::move(r));
                break;
            }
        }
    return out;
}

CheckReport check_compatibility(const CompatTriple& t) {
    return check_compatibility_conditions(t).merged();
}

std::string to_string(KernelCase c) {
    switch (c) {
        case KernelCase::C1: return "C1";
        case KernelCase::C2: return "C2";
        case KernelCase::C3: return "C3";
        case KernelCase::C4: return "C4";
    }
    return "?";
}

TripleClassification classify_triple(const CompatTriple& t) {
    CompatConditions cond = check_compatibility_conditions(t);
    if (!cond.all_hold()) throw IncompatibleTriple("triple fails a compatibility condition");
    const std::size_t n = t.tau.size();
    Subspace kernel = nullspace_of_covector(t.tau);
    TripleClassification out;
    out.pivot_assumptions = kernel.pivot_assumptions();
    out.degenerate = kernel.dim() == 0 || kernel.dim() == n;
    const Vec ta = covector_compose(t.tau, t.alpha);
    const Vec tb = covector_compose(t.tau, t.beta);
    out.tau_alpha_zero = vec_is_zero(ta);
    out.tau_beta_zero = vec_is_zero(tb);
    if (!out.degenerate) {
        if (!out.tau_alpha_zero && !out.tau_beta_zero)
            out.kernel_case = KernelCase::C1;
        else if (out.tau_alpha_zero && out.tau_beta_zero)
            out.kernel_case = KernelCase::C2;
        else if (out.tau_beta_zero)
            out.kernel_case = KernelCase::C3;
        else
            out.kernel_case = KernelCase::C4;
    }
    return out;
}

Vec vectorize_map(const Matrix& m) {
    Vec v;
    v.reserve(m.rows() * m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) v.push_back(m.at(r, c));
    return v;
}

Matrix map_from_vectorized(std::size_t dim, const Vec& v) {
    if (v.size() != dim * dim) throw DimensionMismatch("vectorized map size mismatch");
    Matrix m(dim, dim);
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c) m.at(r, c) = v[r * dim + c];
    return m;
}

namespace {

/* Union ParamSet over the sets appearing in the inputs, in first-seen
 * name order. */
ParamSetPtr union_params(std::initializer_list<const Vec*> vecs,
                         std::initializer_list<const Matrix*> mats) {
    std::vector<std::string> names;
    auto absorb = [&](const Scalar& s) {
        for (const std::string& n : s.params()->names())
            if (std::find(names.begin(), names.end(), n) == names.end()) names.push_back(n);
    };
    for (const Vec* v : vecs)
        for (const Scalar& s : *v) absorb(s);
    for (const Matrix* m : mats)
        for (std::size_t r = 0; r < m->rows(); ++r)
            for (std::size_t c = 0; c < m->cols(); ++c) absorb(m->at(r, c));
    return names.empty() ? ParamSet::empty() : ParamSet::make(std::move(names));
}

void record_denominator(std::vector<Scalar>& assumptions, const MultiPoly& den) {
    if (den.is_constant()) return;
    Scalar s{den};
    for (const Scalar& a : assumptions)
        if (a == s) return;
    assumptions.push_back(std::move(s));
}

/* Clears denominators from a symbolic row and splits it, one rational
 * row per parameter monomial, appending to `out`. */
void split_row(const std::vector<Scalar>& row, const ParamSetPtr& all,
               std::vector<Vec>& out, std::vector<Scalar>& assumptions) {
    const std::size_t width = row.size();
    std::vector<MultiPoly> cleared(width, MultiPoly::zero(all));
    for (std::size_t k = 0; k < width; ++k) {
        if (row[k].is_zero()) continue;
        MultiPoly p = row[k].num().reindexed(all);
        for (std::size_t l = 0; l < width; ++l) {
            if (l == k || row[l].den().is_constant()) continue;
            p = p * row[l].den().reindexed(all);
        }
        record_denominator(assumptions, row[k].den());
        cleared[k] = std::move(p);
    }
    std::map<Exponents, Vec, GrlexLess> by_monomial;
    for (std::size_t k = 0; k < width; ++k)
        for (const auto& [exp, coeff] : cleared[k].terms()) {
            auto it = by_monomial.find(exp);
            if (it == by_monomial.end())
                it = by_monomial.emplace(exp, zero_vec(width)).first;
            it->second[k] = Scalar(coeff);
        }
    for (auto& [exp, qrow] : by_monomial) out.push_back(std::move(qrow));
}

}  // namespace

BetaSpace solve_beta_space(const BinaryAlgebra& a, const Matrix& alpha, const Vec& tau) {
    const std::size_t n = a.dim();
    if (tau.size() != n || alpha.rows() != n || alpha.cols() != n)
        throw DimensionMismatch("map or functional shape mismatch");
    if (!check_trace_function(a, tau).holds())
        throw HypothesisFailure("functional is not a trace function for the bracket");
    const std::size_t width = n * n;
    const Vec ta = covector_compose(tau, alpha);
    const ParamSetPtr all = union_params({&tau, &ta}, {&alpha});

    BetaSpace result{Subspace(width), false, {}};
    result.alpha_condition_holds = covector_symmetry(tau, ta).holds();

    std::vector<Vec> qrows;
    std::vector<Scalar> row(width, Scalar::zero());
    auto flush = [&]() {
        split_row(row, all, qrows, result.assumptions);
        std::fill(row.begin(), row.end(), Scalar::zero());
    };
    /* tau(B x_i) tau(x_j) == tau(x_i) tau(B x_j), antisymmetric: i < j. */
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t r = 0; r < n; ++r) {
                if (!tau[r].is_zero()) {
                    row[r * n + i] += tau[r] * tau[j];
                    row[r * n + j] -= tau[i] * tau[r];
                }
            }
            flush();
        }
    /* tau(alpha(x_i)) B x_j == tau(B x_i) alpha(x_j), one vector equation
     * per ordered pair, one scalar row per component. */
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t l = 0; l < n; ++l) {
                row[l * n + j] += ta[i];
                for (std::size_t r = 0; r < n; ++r)
                    if (!tau[r].is_zero() && !alpha.at(l, j).is_zero())
                        row[r * n + i] -= tau[r] * alpha.at(l, j);
                flush();
            }
    Matrix system(qrows.size(), width);
    for (std::size_t r = 0; r < qrows.size(); ++r)
        for (std::size_t c = 0; c < width; ++c) system.at(r, c) = qrows[r][c];
    result.space = nullspace(system);
    return result;
}

CheckReport check_abelian_degenerate(const BinaryAlgebra& a, const Vec& tau) {
    const std::size_t n = a.dim();
    if (tau.size() != n) throw DimensionMismatch("functional size mismatch");
    Subspace kernel = nullspace_of_covector(tau);
    if (kernel.dim() != 0 && kernel.dim() != n)
        throw NotDegenerate("ker tau is a proper nonzero subspace");
    if (kernel.dim() == 0) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                const Vec& b = a.stored_bracket(i, j);
                if (!vec_is_zero(b)) return CheckReport::fail({i, j}, b);
            }
    }
    TernaryAlgebra t = induce_ternary(a, tau, Matrix::identity(n), Matrix::identity(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                const Vec& d = t.stored_bracket(i, j, k);
                if (!vec_is_zero(d)) return CheckReport::fail({i, j, k}, d);
            }
    return CheckReport::pass();
}

CheckReport check_kernel_stability(const CompatTriple& t) {
    if (!check_compatibility(t).holds())
        throw IncompatibleTriple("triple fails a compatibility condition");
    const std::size_t n = t.tau.size();
    Subspace kernel = nullspace_of_covector(t.tau);
    if (kernel.dim() == 0 || kernel.dim() == n)
        throw DegenerateTriple("kernel stability requires a nondegenerate triple");
    CheckReport out = CheckReport::pass();
    out.pivot_assumptions = kernel.pivot_assumptions();
    for (std::size_t b = 0; b < kernel.dim(); ++b) {
        for (const Matrix* m : {&t.alpha, &t.beta}) {
            Vec image = m->apply(kernel.basis()[b]);
            if (!subspace_contains(kernel, image)) {
                CheckReport fail =
                    CheckReport::fail({b, m == &t.alpha ? std::size_t{0} : std::size_t{1}},
                                      {apply_covector(t.tau, image)});
                fail.pivot_assumptions = kernel.pivot_assumptions();
                return fail;
            }
        }
    }
    return out;
}

CheckReport check_beta_hom_jacobi(const BinaryAlgebra& a, const CompatTriple& t) {
    if (!check_hom_jacobi(a, t.alpha).holds())
        throw HypothesisFailure("alpha does not satisfy the Hom-Jacobi identity");
    CompatConditions cond = check_compatibility_conditions(t);
    if (!cond.alpha_beta_exchange.holds())
        throw HypothesisFailure("exchange condition fails for (alpha, beta)");
    const Vec ta = covector_compose(t.tau, t.alpha);
    if (vec_is_zero(ta))
        throw HypothesisFailure("no basis vector v with tau(alpha(v)) nonzero");
    return check_hom_jacobi(a, t.beta);
}

std::optional<Scalar> proportionality_factor(const Matrix& alpha, const Matrix& beta) {
    if (alpha.rows() != beta.rows() || alpha.cols() != beta.cols())
        throw DimensionMismatch("map shape mismatch");
    if (alpha.is_zero()) {
        if (beta.is_zero()) return Scalar::zero();
        return std::nullopt;
    }
    Scalar lambda;
    bool found = false;
    for (std::size_t r = 0; r < alpha.rows() && !found; ++r)
        for (std::size_t c = 0; c < alpha.cols() && !found; ++c)
            if (!alpha.at(r, c).is_zero()) {
                lambda = beta.at(r, c) / alpha.at(r, c);
                found = true;
            }
    if (beta == alpha.scaled(lambda)) return lambda;
    return std::nullopt;
}

}  // namespace homnambu
