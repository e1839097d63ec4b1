#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "homnambu/paramset.hpp"
#include "homnambu/rational.hpp"

namespace homnambu {

/* Exponent vector; always exactly ParamSet::size() entries. */
using Exponents = std::vector<std::uint32_t>;

/* Graded lexicographic order: total degree first, then lexicographic on
 * exponents in ParamSet order. */
struct GrlexLess {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

/* Sparse multivariate polynomial with rational coefficients.  Terms are
 * kept in a grlex-ordered map with no zero coefficients stored. */
class MultiPoly {
  public:
    using Terms = std::map<Exponents, Rational, GrlexLess>;

    MultiPoly() : params_(ParamSet::empty()) {}
    explicit MultiPoly(ParamSetPtr params) : params_(std::move(params)) {}

    static MultiPoly zero(ParamSetPtr params) { return MultiPoly(std::move(params)); }
    static MultiPoly constant(ParamSetPtr params, Rational c);
    static MultiPoly variable(const ParamSetPtr& params, std::size_t index);

    const ParamSetPtr& params() const { return params_; }
    const Terms& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /* Value of a constant polynomial (zero polynomial gives 0). */
    Rational constant_value() const;
    std::size_t term_count() const { return terms_.size(); }
    std::uint64_t total_degree() const;

    /* Adds c * x^exp, dropping the term if the sum cancels. */
    void add_term(const Exponents& exp, const Rational& c);

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& rhs) const;
    MultiPoly operator-(const MultiPoly& rhs) const;
    MultiPoly operator*(const MultiPoly& rhs) const;
    MultiPoly pow(std::uint32_t e) const;

    bool operator==(const MultiPoly& rhs) const;

    /* gcd of coefficient numerators over lcm of denominators; positive,
     * and 0 for the zero polynomial. */
    Rational content() const;
    MultiPoly divided_by(const Rational& c) const;

    /* Leading (grlex-greatest) coefficient; 0 for the zero polynomial. */
    Rational leading_coefficient() const;

    /* Rebuilds the polynomial on a superset parameter list.  Every name in
     * the current set must exist in `wider`. */
    MultiPoly reindexed(const ParamSetPtr& wider) const;

    /* Canonical text (grlex-descending terms); "0" for zero. */
    std::string to_string() const;

    /* True when the single-term polynomial would need parentheses in a
     * fraction context, i.e. it has several terms or several factors. */
    bool needs_parens() const;

  private:
    ParamSetPtr params_;
    Terms terms_;
};

/* Shared arithmetic guard: the common ParamSet of two operands, promoting
 * constants; throws DimensionMismatch for genuinely different sets. */
ParamSetPtr merge_params(const MultiPoly& a, const MultiPoly& b);

}  // namespace homnambu
