#pragma once

#include <map>
#include <string>

#include "homnambu/multipoly.hpp"

namespace homnambu {

/* Element of the rational-function field over the declared parameters,
 * held as numerator/denominator without polynomial gcd reduction.
 *
 * Invariants after every operation:
 *   - denominator is not the zero polynomial,
 *   - a constant denominator is folded into the numerator (den == 1),
 *   - otherwise the pair is scaled by its joint rational content and the
 *     denominator's leading coefficient is positive.
 *
 * Equality is decided by cross-multiplication, so equal values with
 * different representations compare equal. */
class Scalar {
  public:
    Scalar() : num_(ParamSet::empty()), den_(MultiPoly::constant(ParamSet::empty(), 1)) {}
    explicit Scalar(Rational c)
        : num_(MultiPoly::constant(ParamSet::empty(), std::move(c))),
          den_(MultiPoly::constant(ParamSet::empty(), 1)) {}
    explicit Scalar(MultiPoly num);
    Scalar(MultiPoly num, MultiPoly den);

    static Scalar zero() { return Scalar(); }
    static Scalar one() { return Scalar(Rational(1)); }
    static Scalar of(long n, long d = 1) { return Scalar(rat(n, d)); }
    static Scalar parameter(const ParamSetPtr& params, std::size_t index) {
        return Scalar(MultiPoly::variable(params, index));
    }

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }
    const ParamSetPtr& params() const { return num_.params(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    /* Value of a constant scalar; requires is_constant(). */
    Rational constant_value() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& rhs) const;
    Scalar operator-(const Scalar& rhs) const;
    Scalar operator*(const Scalar& rhs) const;
    /* Throws DivisionByZeroScalar when rhs is zero. */
    Scalar operator/(const Scalar& rhs) const;
    Scalar& operator+=(const Scalar& rhs) { return *this = *this + rhs; }
    Scalar& operator-=(const Scalar& rhs) { return *this = *this - rhs; }
    Scalar& operator*=(const Scalar& rhs) { return *this = *this * rhs; }

    /* Cross-multiplied equality: n1*d2 - n2*d1 == 0. */
    bool operator==(const Scalar& rhs) const;
    bool operator!=(const Scalar& rhs) const { return !(*this == rhs); }

    /* Canonical text form, parseable by parse_scalar. */
    std::string to_string() const;

  private:
    void normalize();

    MultiPoly num_;
    MultiPoly den_;
};

/* Replaces parameters by scalar values; unbound parameters stay symbolic.
 * Bindings may reference other parameters of the same ParamSet.  Throws
 * DenominatorVanishes when the substituted denominator is zero. */
Scalar substitute(const Scalar& s, const std::map<std::string, Scalar>& bindings);

}  // namespace homnambu
