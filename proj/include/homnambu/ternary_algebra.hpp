#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "homnambu/binary_algebra.hpp"

namespace homnambu {

/* Ternary algebra with totally skew-symmetric bracket, stored on basis
 * triples i < j < k, together with its twist pair (alpha1, alpha2).
 * Brackets on permuted triples are signed lookups; repeated indices give
 * zero by construction. */
class TernaryAlgebra {
  public:
    TernaryAlgebra(std::size_t dim, ParamSetPtr params, std::vector<std::string> basis_names);

    std::size_t dim() const { return dim_; }
    const ParamSetPtr& params() const { return params_; }
    const std::vector<std::string>& basis_names() const { return names_; }

    void set_bracket(std::size_t i, std::size_t j, std::size_t k, Vec value);
    const Vec& stored_bracket(std::size_t i, std::size_t j, std::size_t k) const;
    /* [x_i, x_j, x_k] for arbitrary indices (signed lookup). */
    Vec basis_bracket(std::size_t i, std::size_t j, std::size_t k) const;

    const Matrix& alpha1() const { return alpha1_; }
    const Matrix& alpha2() const { return alpha2_; }
    void set_twist(Matrix alpha1, Matrix alpha2);
    bool twist_is_identity() const;

  private:
    std::size_t triple_index(std::size_t i, std::size_t j, std::size_t k) const;

    std::size_t dim_;
    ParamSetPtr params_;
    std::vector<std::string> names_;
    std::vector<Vec> d_;  // indexed over i < j < k
    Matrix alpha1_, alpha2_;
};

/* Trilinear alternating extension to coordinate vectors. */
Vec bracket3(const TernaryAlgebra& t, const Vec& u, const Vec& v, const Vec& w);

/* Trace-induced ternary bracket
 *   [x, y, z] = tau(x)[y, z] + tau(y)[z, x] + tau(z)[x, y]
 * on basis triples, with twist pair (alpha, beta).  Total skew-symmetry
 * of the result is Lemma-level: guaranteed by skewness of the binary
 * bracket, and cross-checked by check_ternary_skew_equivalence. */
TernaryAlgebra induce_ternary(const BinaryAlgebra& a, const Vec& tau, Matrix alpha, Matrix beta);

/* Tuple sweep strategy for the Hom-Nambu checker.  `full` iterates every
 * dim^5 tuple; the identity is not symmetric between the first two and
 * the last three slots, so full iteration is the safe default.
 * `reduced` restricts the last three slots to sorted distinct triples
 * and additionally spot-checks a deterministic sample of unrestricted
 * tuples for sign-consistency. */
enum class NambuSweep { full, reduced };

/* Hom-Nambu identity with the algebra's twist pair (a1, a2):
 *   [a1(x1), a2(x2), [x3, x4, x5]]
 *     = [[x1,x2,x3], a1(x4), a2(x5)]
 *     + [a1(x3), [x1,x2,x4], a2(x5)]
 *     + [a1(x3), a2(x4), [x1,x2,x5]]
 * checked on basis 5-tuples. */
CheckReport check_hom_nambu(const TernaryAlgebra& t, Exec mode = Exec::parallel,
                            NambuSweep sweep = NambuSweep::full);

/* Direct expansion of the trace-induced bracket on arbitrary index
 * triples agrees with the sign of the permutation times the sorted-triple
 * value.  `bracket` maps a basis pair to the coordinate vector of its
 * binary bracket; exposing the raw table lets tests feed non-skew data. */
CheckReport check_ternary_skew_equivalence(const BinaryAlgebra& a, const Vec& tau);
CheckReport check_ternary_skew_equivalence_table(
    std::size_t dim, const std::function<Vec(std::size_t, std::size_t)>& bracket, const Vec& tau);

/* rho([x,y,z]) == [rho x, rho y, rho z] on stored triples, and rho
 * commutes with both twist maps. */
CheckReport check_ternary_endomorphism(const TernaryAlgebra& t, const Matrix& rho);

/* f([x,y,z]_t) == [f x, f y, f z]_u on stored triples of t, and
 * f o alpha_i(t) == alpha_i(u) o f. */
CheckReport check_ternary_morphism(const TernaryAlgebra& t, const TernaryAlgebra& u,
                                   const Matrix& f);

/* Composition twist: brackets replaced by rho([x,y,z]), twist pair set to
 * (rho, rho).  Requires an untwisted input (AlreadyTwisted otherwise) and
 * rho passing check_ternary_endomorphism (NotAnEndomorphism otherwise). */
TernaryAlgebra twist_by_endomorphism(const TernaryAlgebra& t, const Matrix& rho);

}  // namespace homnambu
