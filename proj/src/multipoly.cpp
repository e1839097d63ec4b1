#include "homnambu/multipoly.hpp"

#include <limits>

#include "homnambu/errors.hpp"

namespace homnambu {

bool GrlexLess::operator()(const Exponents& a, const Exponents& b) const {
    std::uint64_t da = 0, db = 0;
    for (auto e : a) da += e;
    for (auto e : b) db += e;
    if (da != db) return da < db;
    return a < b;
}

MultiPoly MultiPoly::constant(ParamSetPtr params, Rational c) {
    MultiPoly p(std::move(params));
    if (!homnambu::is_zero(c)) p.terms_.emplace(Exponents(p.params_->size(), 0), std::move(c));
    return p;
}

MultiPoly MultiPoly::variable(const ParamSetPtr& params, std::size_t index) {
    if (index >= params->size())
        throw DimensionMismatch("parameter index out of range");
    MultiPoly p(params);
    Exponents exp(params->size(), 0);
    exp[index] = 1;
    p.terms_.emplace(std::move(exp), Rational(1));
    return p;
}

bool MultiPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const Exponents& exp = terms_.begin()->first;
    for (auto e : exp)
        if (e != 0) return false;
    return true;
}

Rational MultiPoly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw DimensionMismatch("polynomial is not constant");
    return terms_.begin()->second;
}

std::uint64_t MultiPoly::total_degree() const {
    if (terms_.empty()) return 0;
    std::uint64_t d = 0;
    for (auto e : terms_.rbegin()->first) d += e;
    return d;
}

void MultiPoly::add_term(const Exponents& exp, const Rational& c) {
    if (homnambu::is_zero(c)) return;
    auto [it, fresh] = terms_.emplace(exp, c);
    if (!fresh) {
        it->second += c;
        if (homnambu::is_zero(it->second)) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out(params_);
    for (const auto& [exp, c] : terms_) out.terms_.emplace(exp, -c);
    return out;
}

ParamSetPtr merge_params(const MultiPoly& a, const MultiPoly& b) {
    if (same_params(a.params(), b.params())) return a.params();
    if (a.is_constant()) return b.params();
    if (b.is_constant()) return a.params();
    throw DimensionMismatch("polynomials use different parameter sets");
}

namespace {

/* Lifts a constant polynomial onto another parameter set when needed. */
const MultiPoly& aligned(const MultiPoly& p, const ParamSetPtr& params, MultiPoly& storage) {
    if (same_params(p.params(), params)) return p;
    storage = MultiPoly::constant(params, p.constant_value());
    return storage;
}

}  // namespace

MultiPoly MultiPoly::operator+(const MultiPoly& rhs) const {
    ParamSetPtr ps = merge_params(*this, rhs);
    MultiPoly la, ra;
    const MultiPoly& a = aligned(*this, ps, la);
    const MultiPoly& b = aligned(rhs, ps, ra);
    MultiPoly out = a;
    for (const auto& [exp, c] : b.terms()) out.add_term(exp, c);
    return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& rhs) const { return *this + (-rhs); }

MultiPoly MultiPoly::operator*(const MultiPoly& rhs) const {
    ParamSetPtr ps = merge_params(*this, rhs);
    MultiPoly la, ra;
    const MultiPoly& a = aligned(*this, ps, la);
    const MultiPoly& b = aligned(rhs, ps, ra);
    MultiPoly out(ps);
    Exponents exp(ps->size(), 0);
    for (const auto& [ea, ca] : a.terms()) {
        for (const auto& [eb, cb] : b.terms()) {
            for (std::size_t i = 0; i < exp.size(); ++i) {
                std::uint64_t sum = std::uint64_t(ea[i]) + std::uint64_t(eb[i]);
                if (sum > std::numeric_limits<std::uint32_t>::max())
                    throw DimensionMismatch("exponent overflow");
                exp[i] = static_cast<std::uint32_t>(sum);
            }
            out.add_term(exp, ca * cb);
        }
    }
    return out;
}

MultiPoly MultiPoly::pow(std::uint32_t e) const {
    MultiPoly out = MultiPoly::constant(params_, 1);
    MultiPoly base = *this;
    while (e > 0) {
        if (e & 1u) out = out * base;
        e >>= 1u;
        if (e) base = base * base;
    }
    return out;
}

bool MultiPoly::operator==(const MultiPoly& rhs) const {
    MultiPoly diff = *this - rhs;
    return diff.is_zero();
}

Rational MultiPoly::content() const {
    if (terms_.empty()) return Rational(0);
    Integer num_gcd(0), den_lcm(1);
    for (const auto& [exp, c] : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    return rat(num_gcd, den_lcm);
}

MultiPoly MultiPoly::divided_by(const Rational& c) const {
    if (homnambu::is_zero(c)) throw DivisionByZeroScalar();
    MultiPoly out(params_);
    for (const auto& [exp, coeff] : terms_) out.terms_.emplace(exp, coeff / c);
    return out;
}

Rational MultiPoly::leading_coefficient() const {
    if (terms_.empty()) return Rational(0);
    return terms_.rbegin()->second;
}

MultiPoly MultiPoly::reindexed(const ParamSetPtr& wider) const {
    std::vector<std::size_t> where(params_->size());
    for (std::size_t i = 0; i < params_->size(); ++i) {
        auto idx = wider->index_of(params_->name(i));
        if (!idx) throw DimensionMismatch("parameter '" + params_->name(i) + "' missing from target set");
        where[i] = *idx;
    }
    MultiPoly out(wider);
    for (const auto& [exp, c] : terms_) {
        Exponents wide(wider->size(), 0);
        for (std::size_t i = 0; i < exp.size(); ++i) wide[where[i]] = exp[i];
        out.add_term(wide, c);
    }
    return out;
}

namespace {

/* One term without its sign: "3/4*a1^2*t", "a1", "2". */
std::string term_text(const ParamSet& params, const Exponents& exp, const Rational& abs_coeff) {
    std::string out;
    bool has_var = false;
    for (auto e : exp)
        if (e != 0) has_var = true;
    if (!has_var || abs_coeff != 1) out = abs_coeff.get_str();
    for (std::size_t i = 0; i < exp.size(); ++i) {
        if (exp[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += params.name(i);
        if (exp[i] > 1) out += '^' + std::to_string(exp[i]);
    }
    return out;
}

}  // namespace

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const bool neg = sgn(it->second) < 0;
        Rational a = neg ? Rational(-it->second) : it->second;
        if (out.empty()) {
            if (neg) out += '-';
        } else {
            out += neg ? " - " : " + ";
        }
        out += term_text(*params_, it->first, a);
    }
    return out;
}

bool MultiPoly::needs_parens() const {
    if (terms_.size() > 1) return true;
    if (terms_.empty()) return false;
    const auto& [exp, c] = *terms_.begin();
    std::size_t factors = 0;
    for (auto e : exp)
        if (e != 0) ++factors;
    if (factors == 0) return false;  // bare (possibly signed) constant
    if (c != 1 && c != -1) ++factors;
    return factors > 1;
}

}  // namespace homnambu
