#pragma once

#include <optional>
#include <string>

#include "homnambu/ternary_algebra.hpp"

namespace homnambu {

/* Twist pair plus trace functional subject to the compatibility
 * conditions.  The conditions are identities of linear maps alone; no
 * bracket is involved. */
struct CompatTriple {
    Matrix alpha;
    Matrix beta;
    Vec tau;
};

/* The three compatibility conditions, each expanded on basis pairs:
 *   tau_alpha_symmetry:  tau(alpha(x_i)) tau(x_j) == tau(x_i) tau(alpha(x_j))
 *   tau_beta_symmetry:   tau(beta(x_i))  tau(x_j) == tau(x_i) tau(beta(x_j))
 *   alpha_beta_exchange: tau(alpha(x_i)) beta(x_j) == tau(beta(x_i)) alpha(x_j)
 * The first two have scalar residuals (reported as 1-vectors), the third
 * a vector residual. */
struct CompatConditions {
    CheckReport tau_alpha_symmetry;
    CheckReport tau_beta_symmetry;
    CheckReport alpha_beta_exchange;

    bool all_hold() const;
    /* Pass, or the first failing condition's report in the order above. */
    CheckReport merged() const;
};

CompatConditions check_compatibility_conditions(const CompatTriple& t);
CheckReport check_compatibility(const CompatTriple& t);

/* Kernel cases for a nondegenerate compatible triple, by identical
 * vanishing of the composed covectors:
 *   C1: tau o alpha != 0 and tau o beta != 0
 *   C2: tau o alpha == 0 and tau o beta == 0
 *   C3: tau o alpha != 0 and tau o beta == 0
 *   C4: tau o alpha == 0 and tau o beta != 0 */
enum class KernelCase { C1, C2, C3, C4 };

std::string to_string(KernelCase c);

struct TripleClassification {
    bool degenerate = false;  // ker tau is {0} or the whole space
    std::optional<KernelCase> kernel_case;  // present iff not degenerate
    bool tau_alpha_zero = false;
    bool tau_beta_zero = false;
    /* Genericity side conditions assumed while row-reducing tau. */
    std::vector<Scalar> pivot_assumptions;
};

/* Throws IncompatibleTriple unless check_compatibility holds. */
TripleClassification classify_triple(const CompatTriple& t);

/* Row-major vectorization of a square map: v[r*dim + c] = m(r, c). */
Vec vectorize_map(const Matrix& m);
Matrix map_from_vectorized(std::size_t dim, const Vec& v);

struct BetaSpace {
    /* Solutions beta of
     *   tau(beta(x_i)) tau(x_j) == tau(x_i) tau(beta(x_j))   for all i, j
     *   tau(alpha(x_i)) beta(x_j) == tau(beta(x_i)) alpha(x_j) for all i, j
     * inside the dim^2 space of vectorized maps.  Unknown entries of beta
     * are parameter-free rationals: each parametric row is cleared of
     * denominators and split into one rational row per parameter
     * monomial, so solutions satisfy the conditions identically in the
     * parameters. */
    Subspace space;
    /* Whether tau_alpha_symmetry holds for the given alpha; the induced
     * construction needs it and it does not constrain beta. */
    bool alpha_condition_holds = false;
    /* Non-constant denominators cleared during assembly; the space is
     * valid wherever none of them vanishes. */
    std::vector<Scalar> assumptions;
};

/* Throws HypothesisFailure unless tau is a trace function for a. */
BetaSpace solve_beta_space(const BinaryAlgebra& a, const Matrix& alpha, const Vec& tau);

/* For degenerate tau only (NotDegenerate otherwise): every induced
 * ternary structure constant vanishes, and when ker tau = {0} every
 * binary bracket vanishes as well. */
CheckReport check_abelian_degenerate(const BinaryAlgebra& a, const Vec& tau);

/* alpha and beta map ker tau into ker tau.  Requires a compatible
 * (IncompatibleTriple) nondegenerate (DegenerateTriple) triple. */
CheckReport check_kernel_stability(const CompatTriple& t);

/* Hom-Jacobi for beta, under the hypotheses: alpha satisfies Hom-Jacobi,
 * alpha_beta_exchange holds, and tau(alpha(v)) != 0 for some basis
 * vector v.  Each failed hypothesis raises HypothesisFailure. */
CheckReport check_beta_hom_jacobi(const BinaryAlgebra& a, const CompatTriple& t);

/* The scalar lambda with beta == lambda * alpha entrywise, when one
 * exists; nullopt otherwise.  A zero alpha pairs only with a zero beta
 * (lambda reported as 0). */
std::optional<Scalar> proportionality_factor(const Matrix& alpha, const Matrix& beta);

}  // namespace homnambu
