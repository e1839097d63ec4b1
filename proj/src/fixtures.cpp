#include "homnambu/fixtures.hpp"

#include <initializer_list>

#include "homnambu/errors.hpp"
#include "homnambu/scalar_parse.hpp"

namespace homnambu {

namespace {

Vec texts_to_vec(const ParamSetPtr& params, std::initializer_list<const char*> texts) {
    Vec v;
    for (const char* t : texts) v.push_back(parse_scalar(t, params));
    return v;
}

Matrix texts_to_matrix(const ParamSetPtr& params,
                       std::initializer_list<std::initializer_list<const char*>> rows) {
    const std::size_t n = rows.size();
    Matrix m(n, n);
    std::size_t r = 0;
    for (const auto& row : rows) {
        std::size_t c = 0;
        for (const char* t : row) m.at(r, c++) = parse_scalar(t, params);
        ++r;
    }
    return m;
}

void add_bracket(AlgebraDocument& doc, std::vector<std::size_t> args,
                 std::initializer_list<const char*> texts) {
    doc.brackets.emplace(std::move(args), texts_to_vec(doc.params, texts));
}

AlgebraDocument gl2() {
    AlgebraDocument d;
    d.kind = "binary";
    d.dim = 4;
    d.basis = {"E11", "E12", "E21", "E22"};
    add_bracket(d, {0, 1}, {"0", "1", "0", "0"});
    add_bracket(d, {0, 2}, {"0", "0", "-1", "0"});
    add_bracket(d, {1, 2}, {"1", "0", "0", "-1"});
    add_bracket(d, {1, 3}, {"0", "1", "0", "0"});
    add_bracket(d, {2, 3}, {"0", "0", "-1", "0"});
    d.maps.emplace("id", Matrix::identity(4));
    d.maps.emplace("conj", texts_to_matrix(d.params, {{"1", "0", "0", "0"},
                                                      {"0", "2", "0", "0"},
                                                      {"0", "0", "1/2", "0"},
                                                      {"0", "0", "0", "1"}}));
    d.functionals.emplace("tr", texts_to_vec(d.params, {"1", "0", "0", "1"}));
    return d;
}

AlgebraDocument ex1_gl2() {
    AlgebraDocument d;
    d.kind = "binary";
    d.params = ParamSet::make({"lambda"});
    d.dim = 4;
    d.basis = {"E11", "E12", "E21", "E22"};
    /* Commutator bracket composed with the conjugation map. */
    add_bracket(d, {0, 1}, {"0", "2", "0", "0"});
    add_bracket(d, {0, 2}, {"0", "0", "-1/2", "0"});
    add_bracket(d, {1, 2}, {"1", "0", "0", "-1"});
    add_bracket(d, {1, 3}, {"0", "2", "0", "0"});
    add_bracket(d, {2, 3}, {"0", "0", "-1/2", "0"});
    d.maps.emplace("id", Matrix::identity(4));
    d.maps.emplace("alpha", texts_to_matrix(d.params, {{"1", "0", "0", "0"},
                                                       {"0", "2", "0", "0"},
                                                       {"0", "0", "1/2", "0"},
                                                       {"0", "0", "0", "1"}}));
    d.maps.emplace("beta", texts_to_matrix(d.params, {{"lambda", "0", "0", "0"},
                                                      {"0", "2*lambda", "0", "0"},
                                                      {"0", "0", "lambda/2", "0"},
                                                      {"0", "0", "0", "lambda"}}));
    d.functionals.emplace("tr", texts_to_vec(d.params, {"1", "0", "0", "1"}));
    return d;
}

AlgebraDocument ex2_4dim() {
    AlgebraDocument d;
    d.kind = "binary";
    d.params = ParamSet::make({"a12", "a13", "a14", "a23", "a24", "a34", "b12", "b13", "b14",
                               "b23", "b24", "b34", "g1", "g2"});
    d.dim = 4;
    d.basis = {"x1", "x2", "x3", "x4"};
    add_bracket(d, {0, 1}, {"0", "0", "a12", "b12"});
    add_bracket(d, {0, 2}, {"0", "0", "a13", "b13"});
    add_bracket(d, {0, 3}, {"0", "0", "a14", "b14"});
    add_bracket(d, {1, 2}, {"0", "0", "a23", "b23"});
    add_bracket(d, {1, 3}, {"0", "0", "a24", "b24"});
    add_bracket(d, {2, 3}, {"0", "0", "a34", "b34"});
    d.maps.emplace("id", Matrix::identity(4));
    d.maps.emplace("alpha", texts_to_matrix(d.params, {{"0", "0", "0", "0"},
                                                       {"0", "0", "0", "0"},
                                                       {"1", "1", "1", "1"},
                                                       {"0", "0", "0", "0"}}));
    d.maps.emplace("beta", texts_to_matrix(d.params, {{"0", "0", "0", "0"},
                                                      {"0", "0", "0", "0"},
                                                      {"0", "0", "0", "0"},
                                                      {"1", "1", "1", "1"}}));
    d.functionals.emplace("tau", texts_to_vec(d.params, {"g1", "g2", "0", "0"}));
    d.constraints = {"b13 - b12 - b23", "b14 - b12 - b23 - b34", "b24 - b23 - b34"};
    return d;
}

AlgebraDocument ex3_3dim() {
    AlgebraDocument d;
    d.kind = "binary";
    d.params = ParamSet::make({"a1", "a2", "a3", "a4", "p", "q", "r", "t"});
    d.dim = 3;
    d.basis = {"x1", "x2", "x3"};
    add_bracket(d, {0, 1}, {"0", "a1", "-(a2*a4)/a3"});
    add_bracket(d, {0, 2}, {"0", "-(a1*a3)/a4", "a2"});
    add_bracket(d, {1, 2}, {"0", "a3", "a4"});
    d.maps.emplace("id", Matrix::identity(3));
    d.maps.emplace("alpha", texts_to_matrix(d.params, {{"p", "0", "0"},
                                                       {"0", "q", "0"},
                                                       {"0", "0", "q"}}));
    d.maps.emplace("beta", texts_to_matrix(d.params, {{"r", "0", "0"},
                                                      {"0", "(q*r)/p", "0"},
                                                      {"0", "0", "(q*r)/p"}}));
    d.functionals.emplace("tau", texts_to_vec(d.params, {"t", "0", "0"}));
    d.provenance =
        "original source text: alpha(x_2) = q x_3 and alpha(x_3) = q x_4 on a 3-dimensional "
        "space with basis x_1, x_2, x_3, and beta(x_3) = s x_3 for any s. This fixture reads "
        "alpha as diag(p, q, q) and fixes s = (q*r)/p, the value forced at the pair (x_1, x_3) "
        "by the exchange condition tau(alpha(x)) beta(y) = tau(beta(x)) alpha(y).";
    return d;
}

AlgebraDocument ex3_3dim_p0() {
    AlgebraDocument d;
    d.kind = "binary";
    d.params = ParamSet::make({"a1", "a2", "a3", "a4", "q", "r2", "r3", "r5", "r6", "t"});
    d.dim = 3;
    d.basis = {"x1", "x2", "x3"};
    add_bracket(d, {0, 1}, {"0", "a1", "-(a2*a4)/a3"});
    add_bracket(d, {0, 2}, {"0", "-(a1*a3)/a4", "a2"});
    add_bracket(d, {1, 2}, {"0", "a3", "a4"});
    d.maps.emplace("id", Matrix::identity(3));
    d.maps.emplace("alpha", texts_to_matrix(d.params, {{"0", "0", "0"},
                                                       {"0", "q", "0"},
                                                       {"0", "0", "q"}}));
    d.maps.emplace("beta", texts_to_matrix(d.params, {{"0", "0", "0"},
                                                      {"0", "r2", "r5"},
                                                      {"0", "r3", "r6"}}));
    d.functionals.emplace("tau", texts_to_vec(d.params, {"t", "0", "0"}));
    d.provenance =
        "original source text: beta(x_1) = 0, beta(x_2) = r_1 x_1 + r_2 x_2 + r_3 x_3, "
        "beta(x_3) = r_4 x_1 + r_5 x_2 + r_6 x_3 for any r_1..r_6, with alpha(x_2) = q x_3 and "
        "alpha(x_3) = q x_4. This fixture reads alpha as diag(0, q, q) and sets r_1 = r_4 = 0, "
        "the values forced at the pairs (x_1, x_2) and (x_1, x_3) by the functional symmetry "
        "condition tau(beta(x)) tau(y) = tau(x) tau(beta(y)).";
    return d;
}

AlgebraDocument ex4_3dim() {
    AlgebraDocument d;
    d.kind = "binary";
    d.params = ParamSet::make({"a1", "a2", "a3", "a4", "a5", "q", "r2", "r3", "r5", "r6", "t"});
    d.dim = 3;
    d.basis = {"x1", "x2", "x3"};
    add_bracket(d, {0, 1}, {"0", "-a1", "a2"});
    add_bracket(d, {0, 2}, {"0", "a3", "a1"});
    add_bracket(d, {1, 2}, {"0", "a4", "a5"});
    d.maps.emplace("id", Matrix::identity(3));
    d.maps.emplace("alpha", texts_to_matrix(d.params, {{"0", "0", "0"},
                                                       {"0", "q", "0"},
                                                       {"0", "0", "q"}}));
    d.maps.emplace("beta", texts_to_matrix(d.params, {{"0", "0", "0"},
                                                      {"0", "r2", "r5"},
                                                      {"0", "r3", "r6"}}));
    d.functionals.emplace("tau", texts_to_vec(d.params, {"t", "0", "0"}));
    d.provenance =
        "original source text: alpha(x_2) = q x_3 and alpha(x_3) = q x_4 on a 3-dimensional "
        "space with basis x_1, x_2, x_3, and beta(x_2) = r_1 x_1 + r_2 x_2 + r_3 x_3, "
        "beta(x_3) = r_4 x_1 + r_5 x_2 + r_6 x_3. This fixture reads alpha as diag(0, q, q) "
        "and sets r_1 = r_4 = 0, the values forced by the functional symmetry condition for "
        "beta.";
    return d;
}

AlgebraDocument n4() {
    AlgebraDocument d;
    d.kind = "ternary";
    d.dim = 4;
    d.basis = {"x1", "x2", "x3", "x4"};
    add_bracket(d, {0, 1, 2}, {"0", "0", "0", "1"});
    add_bracket(d, {0, 1, 3}, {"0", "0", "-1", "0"});
    add_bracket(d, {0, 2, 3}, {"0", "1", "0", "0"});
    add_bracket(d, {1, 2, 3}, {"-1", "0", "0", "0"});
    d.maps.emplace("id", Matrix::identity(4));
    d.maps.emplace("neg_id", -Matrix::identity(4));
    d.maps.emplace("two_id", Matrix::identity(4).scaled(Scalar::of(2)));
    return d;
}

AlgebraDocument sl2() {
    AlgebraDocument d;
    d.kind = "binary";
    d.dim = 3;
    d.basis = {"e", "f", "h"};
    add_bracket(d, {0, 1}, {"0", "0", "1"});
    add_bracket(d, {0, 2}, {"-2", "0", "0"});
    add_bracket(d, {1, 2}, {"0", "2", "0"});
    d.maps.emplace("id", Matrix::identity(3));
    d.functionals.emplace("zero", zero_vec(3));
    return d;
}

}  // namespace

std::vector<std::string> fixture_names() {
    return {"gl2", "ex1_gl2", "ex2_4dim", "ex3_3dim", "ex3_3dim_p0", "ex4_3dim", "n4", "sl2"};
}

AlgebraDocument make_fixture(const std::string& name) {
    if (name == "gl2") return gl2();
    if (name == "ex1_gl2") return ex1_gl2();
    if (name == "ex2_4dim") return ex2_4dim();
    if (name == "ex3_3dim") return ex3_3dim();
    if (name == "ex3_3dim_p0") return ex3_3dim_p0();
    if (name == "ex4_3dim") return ex4_3dim();
    if (name == "n4") return n4();
    if (name == "sl2") return sl2();
    throw UnknownName("unknown fixture '" + name + "'");
}

}  // namespace homnambu
