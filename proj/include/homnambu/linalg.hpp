#pragma once

#include <vector>

#include "homnambu/scalar.hpp"

namespace homnambu {

using Vec = std::vector<Scalar>;

Vec zero_vec(std::size_t n);
bool vec_is_zero(const Vec& v);
bool vec_eq(const Vec& a, const Vec& b);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Scalar& c, const Vec& v);

/* Dense row-major matrix of scalars. */
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols, Scalar::zero()) {}
    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Scalar& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
    const Scalar& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

    /* Column c as a vector; for a linear map this is the image of the
     * c-th basis vector. */
    Vec column(std::size_t c) const;

    Matrix operator*(const Matrix& rhs) const;
    Matrix operator+(const Matrix& rhs) const;
    Matrix operator-() const;
    Matrix scaled(const Scalar& c) const;
    Vec apply(const Vec& v) const;

    bool operator==(const Matrix& rhs) const;
    bool is_zero() const;
    bool is_identity() const;

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> e_;
};

/* Covector value tau(v). */
Scalar apply_covector(const Vec& tau, const Vec& v);
/* Row covector composed with a map: (tau o m)(e_j) = tau(m e_j). */
Vec covector_compose(const Vec& tau, const Matrix& m);

struct RrefResult {
    Matrix mat;                           // reduced row echelon form
    std::vector<std::size_t> pivot_cols;  // ascending
    /* Non-constant pivots that were assumed nonzero during elimination;
     * the result is valid wherever none of them vanishes. */
    std::vector<Scalar> pivot_assumptions;
    std::size_t rank = 0;
};

/* Fraction-free (Bareiss-style) forward elimination over the scalar
 * field followed by pivot normalization and back-substitution.  Pivots
 * are chosen per column by fewest-terms numerator to limit parametric
 * expression swell. */
RrefResult rref(Matrix m);

/* Linear subspace held as a canonical reduced-echelon basis (pivot
 * entries 1, zero rows dropped); equal subspaces compare equal
 * entrywise. */
class Subspace {
  public:
    explicit Subspace(std::size_t ambient) : ambient_(ambient) {}
    static Subspace from_spanning(std::size_t ambient, const std::vector<Vec>& vectors);
    static Subspace full(std::size_t ambient);

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Vec>& basis() const { return basis_; }
    const std::vector<Scalar>& pivot_assumptions() const { return assumptions_; }

    bool operator==(const Subspace& rhs) const;

  private:
    std::size_t ambient_;
    std::vector<Vec> basis_;
    std::vector<std::size_t> pivot_cols_;
    std::vector<Scalar> assumptions_;

    friend bool subspace_contains(const Subspace&, const Vec&);
    friend Subspace nullspace(const Matrix&);
};

/* Kernel of a matrix (solutions of m v = 0) as a canonical subspace. */
Subspace nullspace(const Matrix& m);
Subspace nullspace_of_covector(const Vec& tau);

/* True when v is an exact scalar combination of the basis. */
bool subspace_contains(const Subspace& s, const Vec& v);

struct LinearSolution {
    bool consistent = true;
    Vec particular;        // one exact solution (zero vector if homogeneous)
    Subspace homogeneous;  // kernel of the coefficient matrix
    std::vector<Scalar> pivot_assumptions;
};

/* Solves the system rows[i] . x = rhs[i] exactly. */
LinearSolution solve_linear(const std::vector<Vec>& rows, const Vec& rhs, std::size_t width);

}  // namespace homnambu
