#pragma once

#include <array>
#include <string>
#include <string_view>

#include "homnambu/check_report.hpp"

namespace homnambu {

/* Polynomial in the reserved variables x1, x2, x3 with rational
 * coefficients, the carrier of the functional-Jacobian bracket. */
class TriPoly {
  public:
    TriPoly() : p_(vars()) {}
    explicit TriPoly(MultiPoly p);

    /* The shared three-variable parameter set (x1, x2, x3). */
    static const ParamSetPtr& vars();

    static TriPoly constant(Rational c);
    static TriPoly variable(std::size_t i);  // 0, 1, 2

    const MultiPoly& poly() const { return p_; }
    bool is_zero() const { return p_.is_zero(); }
    bool is_one() const;

    TriPoly operator-() const { return TriPoly(-p_); }
    TriPoly operator+(const TriPoly& rhs) const { return TriPoly(p_ + rhs.p_); }
    TriPoly operator-(const TriPoly& rhs) const { return TriPoly(p_ - rhs.p_); }
    TriPoly operator*(const TriPoly& rhs) const { return TriPoly(p_ * rhs.p_); }
    TriPoly pow(std::uint32_t e) const { return TriPoly(p_.pow(e)); }
    bool operator==(const TriPoly& rhs) const { return p_ == rhs.p_; }
    bool operator!=(const TriPoly& rhs) const { return !(*this == rhs); }

    TriPoly partial(std::size_t var) const;

    std::string to_string() const { return p_.to_string(); }

  private:
    MultiPoly p_;
};

/* Polynomial self-map of 3-space, component per variable. */
struct PolyMap {
    std::array<TriPoly, 3> comp;

    static PolyMap id();
    std::string to_string() const;  // "(x1 + x2^2, x2, x3)"
};

/* det of the 3x3 matrix of partials d f_i / d x_j; alternating and
 * trilinear in (f1, f2, f3). */
TriPoly jacobian_bracket(const TriPoly& f1, const TriPoly& f2, const TriPoly& f3);

/* Equals jacobian_bracket over the map's components. */
TriPoly det_jacobian(const PolyMap& g);

/* Exact composition f(g1, g2, g3). */
TriPoly compose(const TriPoly& f, const PolyMap& g);

/* Untwisted Nambu identity for the Jacobian bracket on one 5-tuple:
 *   [f1, f2, [f3, f4, f5]]
 *     == [[f1,f2,f3], f4, f5] + [f3, [f1,f2,f4], f5] + [f3, f4, [f1,f2,f5]].
 * A failure carries witness (0..4) and the residual polynomial as a
 * one-entry scalar vector. */
CheckReport check_fundamental_identity(const std::array<TriPoly, 5>& sample);

/* Hom-Nambu identity for the bracket f -> compose(jacobian_bracket(...), g)
 * with twist pair (compose(., g), compose(., g)) on one 5-tuple.
 * Requires det_jacobian(g) == 1 (NotUnimodular otherwise). */
CheckReport check_twisted_hom_nambu(const PolyMap& g, const std::array<TriPoly, 5>& sample);

/* Scalar expression grammar over the reserved names x1, x2, x3; rejects
 * division by non-constant polynomials. */
TriPoly parse_tripoly(std::string_view text);

/* "(expr, expr, expr)"; components parsed by parse_tripoly. */
PolyMap parse_polymap(std::string_view text);

}  // namespace homnambu
