#pragma once

#include <string>
#include <vector>

#include "homnambu/check_report.hpp"

namespace homnambu {

/* Finite-dimensional algebra with a skew-symmetric bilinear bracket,
 * stored by structure constants on basis pairs i < j.  Skew-symmetry is
 * structural: [x_j, x_i] is produced by negating the stored value and
 * [x_i, x_i] is zero by construction. */
class BinaryAlgebra {
  public:
    BinaryAlgebra(std::size_t dim, ParamSetPtr params, std::vector<std::string> basis_names);

    std::size_t dim() const { return dim_; }
    const ParamSetPtr& params() const { return params_; }
    const std::vector<std::string>& basis_names() const { return names_; }

    /* Structure constants of [x_i, x_j] for i < j. */
    void set_bracket(std::size_t i, std::size_t j, Vec value);
    const Vec& stored_bracket(std::size_t i, std::size_t j) const;

    /* [x_i, x_j] for arbitrary i, j (signed lookup). */
    Vec basis_bracket(std::size_t i, std::size_t j) const;

  private:
    std::size_t pair_index(std::size_t i, std::size_t j) const;

    std::size_t dim_;
    ParamSetPtr params_;
    std::vector<std::string> names_;
    std::vector<Vec> c_;  // indexed by pair_index over i < j
};

/* Bilinear extension of the bracket to coordinate vectors. */
Vec bracket2(const BinaryAlgebra& a, const Vec& u, const Vec& v);

/* Hom-Jacobi identity: the cyclic sum
 *   [alpha(x_i), [x_j, x_k]] + [alpha(x_j), [x_k, x_i]] + [alpha(x_k), [x_i, x_j]]
 * vanishes for every basis triple i <= j <= k.  Skew-symmetry makes the
 * sum for any permuted triple equal to the sorted one up to sign, so the
 * sorted sweep is exhaustive. */
CheckReport check_hom_jacobi(const BinaryAlgebra& a, const Matrix& alpha,
                             Exec mode = Exec::parallel);

/* tau([x_i, x_j]) == 0 for every pair i < j. */
CheckReport check_trace_function(const BinaryAlgebra& a, const Vec& tau);

/* rho([x_i, x_j]) == [rho(x_i), rho(x_j)] for every pair i < j. */
CheckReport check_binary_endomorphism(const BinaryAlgebra& a, const Matrix& rho);

/* [s, V] subset of s for every basis vector of s. */
CheckReport check_is_ideal(const BinaryAlgebra& a, const Subspace& s);

/* All covectors tau with tau([x_i, x_j]) == 0 for every pair, as a
 * subspace of the dual coordinates. */
Subspace trace_function_space(const BinaryAlgebra& a);

}  // namespace homnambu
