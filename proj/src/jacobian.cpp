#include "homnambu/jacobian.hpp"

#include <functional>
#include <vector>

#include "homnambu/errors.hpp"
#include "homnambu/scalar_parse.hpp"

namespace homnambu {

const ParamSetPtr& TriPoly::vars() {
    static const ParamSetPtr set = ParamSet::make({"x1", "x2", "x3"});
    return set;
}

TriPoly::TriPoly(MultiPoly p) : p_(std::move(p)) {
    if (!same_params(p_.params(), vars())) {
        if (!p_.is_constant()) throw DimensionMismatch("polynomial not over x1, x2, x3");
        p_ = MultiPoly::constant(vars(), p_.constant_value());
    }
}

TriPoly TriPoly::constant(Rational c) {
    return TriPoly(MultiPoly::constant(vars(), std::move(c)));
}

TriPoly TriPoly::variable(std::size_t i) {
    if (i >= 3) throw DimensionMismatch("variable index out of range");
    return TriPoly(MultiPoly::variable(vars(), i));
}

bool TriPoly::is_one() const { return p_.is_constant() && p_.constant_value() == 1; }

TriPoly TriPoly::partial(std::size_t var) const {
    if (var >= 3) throw DimensionMismatch("variable index out of range");
    MultiPoly out(vars());
    for (const auto& [exp, coeff] : p_.terms()) {
        if (exp[var] == 0) continue;
        Exponents e = exp;
        e[var] -= 1;
        out.add_term(e, coeff * Rational(exp[var]));
    }
    return TriPoly(std::move(out));
}

PolyMap PolyMap::id() {
    return PolyMap{{TriPoly::variable(0), TriPoly::variable(1), TriPoly::variable(2)}};
}

std::string PolyMap::to_string() const {
    return "(" + comp[0].to_string() + ", " + comp[1].to_string() + ", " +
           comp[2].to_string() + ")";
}

TriPoly jacobian_bracket(const TriPoly& f1, const TriPoly& f2, const TriPoly& f3) {
    std::array<std::array<TriPoly, 3>, 3> j;
    const std::array<const TriPoly*, 3> f = {&f1, &f2, &f3};
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c) j[r][c] = f[r]->partial(c);
    TriPoly det = j[0][0] * (j[1][1] * j[2][2] - j[1][2] * j[2][1]);
    det = det - j[0][1] * (j[1][0] * j[2][2] - j[1][2] * j[2][0]);
    det = det + j[0][2] * (j[1][0] * j[2][1] - j[1][1] * j[2][0]);
    return det;
}

TriPoly det_jacobian(const PolyMap& g) {
    return jacobian_bracket(g.comp[0], g.comp[1], g.comp[2]);
}

TriPoly compose(const TriPoly& f, const PolyMap& g) {
    /* Power tables per variable, grown on demand. */
    std::array<std::vector<TriPoly>, 3> powers;
    for (std::size_t v = 0; v < 3; ++v) powers[v].push_back(TriPoly::constant(1));
    auto power = [&](std::size_t v, std::uint32_t e) -> const TriPoly& {
        while (powers[v].size() <= e) powers[v].push_back(powers[v].back() * g.comp[v]);
        return powers[v][e];
    };
    TriPoly out;
    for (const auto& [exp, coeff] : f.poly().terms()) {
        TriPoly term = TriPoly::constant(coeff);
        for (std::size_t v = 0; v < 3; ++v)
            if (exp[v] > 0) term = term * power(v, exp[v]);
        out = out + term;
    }
    return out;
}

namespace {

Scalar as_scalar(const TriPoly& p) { return Scalar(p.poly()); }

TriPoly nambu_residual(const std::function<TriPoly(const TriPoly&, const TriPoly&,
                                                   const TriPoly&)>& br,
                       const std::function<TriPoly(const TriPoly&)>& a1,
                       const std::function<TriPoly(const TriPoly&)>& a2,
                       const std::array<TriPoly, 5>& f) {
    TriPoly lhs = br(a1(f[0]), a2(f[1]), br(f[2], f[3], f[4]));
    TriPoly rhs = br(br(f[0], f[1], f[2]), a1(f[3]), a2(f[4]));
    rhs = rhs + br(a1(f[2]), br(f[0], f[1], f[3]), a2(f[4]));
    rhs = rhs + br(a1(f[2]), a2(f[3]), br(f[0], f[1], f[4]));
    return lhs - rhs;
}

}  // namespace

CheckReport check_fundamental_identity(const std::array<TriPoly, 5>& sample) {
    auto br = [](const TriPoly& a, const TriPoly& b, const TriPoly& c) {
        return jacobian_bracket(a, b, c);
    };
    auto ident = [](const TriPoly& p) { return p; };
    TriPoly res = nambu_residual(br, ident, ident, sample);
    if (res.is_zero()) return CheckReport::pass();
    return CheckReport::fail({0, 1, 2, 3, 4}, {as_scalar(res)});
}

CheckReport check_twisted_hom_nambu(const PolyMap& g, const std::array<TriPoly, 5>& sample) {
    TriPoly det = det_jacobian(g);
    if (!det.is_one())
        throw NotUnimodular("Jacobian determinant is " + det.to_string() + ", not 1");
    auto rho = [&](const TriPoly& p) { return compose(p, g); };
    auto br = [&](const TriPoly& a, const TriPoly& b, const TriPoly& c) {
        return rho(jacobian_bracket(a, b, c));
    };
    TriPoly res = nambu_residual(br, rho, rho, sample);
    if (res.is_zero()) return CheckReport::pass();
    return CheckReport::fail({0, 1, 2, 3, 4}, {as_scalar(res)});
}

TriPoly parse_tripoly(std::string_view text) {
    Scalar s = parse_scalar(text, TriPoly::vars());
    if (!s.den().is_constant())
        throw ParseError(0, "division by a non-constant polynomial");
    Rational d = s.den().constant_value();
    MultiPoly num = s.num();
    if (d != 1) num = num.divided_by(d);
    return TriPoly(std::move(num));
}

PolyMap parse_polymap(std::string_view text) {
    std::size_t begin = text.find_first_not_of(" \t");
    std::size_t end = text.find_last_not_of(" \t");
    if (begin == std::string_view::npos || text[begin] != '(' || text[end] != ')')
        throw ParseError(0, "expected '(expr, expr, expr)'");
    std::string_view inner = text.substr(begin + 1, end - begin - 1);
    std::vector<std::string_view> parts;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < inner.size(); ++i) {
        char ch = inner[i];
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if (ch == ',' && depth == 0) {
            parts.push_back(inner.substr(start, i - start));
            start = i + 1;
        }
    }
    parts.push_back(inner.substr(start));
    if (parts.size() != 3) throw ParseError(begin, "expected exactly 3 components");
    PolyMap m;
    for (std::size_t i = 0; i < 3; ++i) m.comp[i] = parse_tripoly(parts[i]);
    return m;
}

}  // namespace homnambu
