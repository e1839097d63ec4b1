#include "homnambu/scalar.hpp"

#include <optional>

#include "homnambu/errors.hpp"

namespace homnambu {

Scalar::Scalar(MultiPoly num)
    : num_(std::move(num)), den_(MultiPoly::constant(num_.params(), 1)) {}

Scalar::Scalar(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZeroScalar();
    ParamSetPtr ps = merge_params(num_, den_);
    if (!same_params(num_.params(), ps)) num_ = MultiPoly::constant(ps, num_.constant_value());
    if (!same_params(den_.params(), ps)) den_ = MultiPoly::constant(ps, den_.constant_value());
    normalize();
}

void Scalar::normalize() {
    if (num_.is_zero()) {
        den_ = MultiPoly::constant(num_.params(), 1);
        return;
    }
    if (den_.is_constant()) {
        Rational d = den_.constant_value();
        if (d != 1) num_ = num_.divided_by(d);
        den_ = MultiPoly::constant(num_.params(), 1);
        return;
    }
    /* Joint rational content of both polynomials; dividing num and den by
     * it keeps the value and trims coefficient growth. */
    Rational cn = num_.content();
    Rational cd = den_.content();
    Integer g;
    mpz_gcd(g.get_mpz_t(), cn.get_num().get_mpz_t(), cd.get_num().get_mpz_t());
    Integer l;
    mpz_lcm(l.get_mpz_t(), cn.get_den().get_mpz_t(), cd.get_den().get_mpz_t());
    Rational joint = rat(g, l);
    if (sgn(den_.leading_coefficient()) < 0) joint = -joint;
    if (joint != 1) {
        num_ = num_.divided_by(joint);
        den_ = den_.divided_by(joint);
    }
}

Rational Scalar::constant_value() const {
    if (!is_constant()) throw DimensionMismatch("scalar is not constant");
    if (num_.is_zero()) return Rational(0);
    return num_.constant_value() / den_.constant_value();
}

Scalar Scalar::operator-() const {
    Scalar out = *this;
    out.num_ = -out.num_;
    return out;
}

Scalar Scalar::operator+(const Scalar& rhs) const {
    if (den_.is_constant() && rhs.den_.is_constant())
        return Scalar(num_ + rhs.num_);
    return Scalar(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
}

Scalar Scalar::operator-(const Scalar& rhs) const { return *this + (-rhs); }

Scalar Scalar::operator*(const Scalar& rhs) const {
    return Scalar(num_ * rhs.num_, den_ * rhs.den_);
}

Scalar Scalar::operator/(const Scalar& rhs) const {
    if (rhs.is_zero()) throw DivisionByZeroScalar();
    return Scalar(num_ * rhs.den_, den_ * rhs.num_);
}

bool Scalar::operator==(const Scalar& rhs) const {
    return (num_ * rhs.den_ - rhs.num_ * den_).is_zero();
}

std::string Scalar::to_string() const {
    if (den_.is_constant()) return num_.to_string();
    std::string n = num_.needs_parens() ? "(" + num_.to_string() + ")" : num_.to_string();
    std::string d = den_.needs_parens() ? "(" + den_.to_string() + ")" : den_.to_string();
    return n + "/" + d;
}

namespace {

/* Evaluates one polynomial with some variables bound to scalar values. */
Scalar eval_poly(const MultiPoly& p, const std::vector<std::optional<Scalar>>& bound) {
    const ParamSetPtr& ps = p.params();
    /* Memoized powers of the bound values, per variable. */
    std::vector<std::vector<Scalar>> powers(ps->size());
    Scalar acc = Scalar::zero();
    for (const auto& [exp, c] : p.terms()) {
        MultiPoly free_part(ps);
        Exponents free_exp(ps->size(), 0);
        Scalar factor(c);
        for (std::size_t i = 0; i < exp.size(); ++i) {
            if (exp[i] == 0) continue;
            if (!bound[i]) {
                free_exp[i] = exp[i];
                continue;
            }
            auto& pw = powers[i];
            if (pw.empty()) pw.push_back(Scalar::one());
            while (pw.size() <= exp[i]) pw.push_back(pw.back() * *bound[i]);
            factor = factor * pw[exp[i]];
        }
        MultiPoly mono(ps);
        mono.add_term(free_exp, Rational(1));
        acc = acc + factor * Scalar(mono);
    }
    return acc;
}

}  // namespace

Scalar substitute(const Scalar& s, const std::map<std::string, Scalar>& bindings) {
    const ParamSetPtr& ps = s.params();
    std::vector<std::optional<Scalar>> bound(ps->size());
    for (const auto& [name, value] : bindings) {
        auto idx = ps->index_of(name);
        if (!idx) continue;  // binding for a parameter this scalar's set lacks
        Scalar v = value;
        if (!same_params(v.params(), ps)) {
            if (!v.is_constant())
                throw DimensionMismatch("substitution value uses a different parameter set");
            v = Scalar(MultiPoly::constant(ps, v.constant_value()));
        }
        bound[*idx] = std::move(v);
    }
    Scalar num = eval_poly(s.num(), bound);
    Scalar den = eval_poly(s.den(), bound);
    if (den.is_zero()) throw DenominatorVanishes();
    return num / den;
}

}  // namespace homnambu
