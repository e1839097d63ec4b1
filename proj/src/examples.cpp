#include "homnambu/examples.hpp"

#include <map>
#include <sstream>

#include "homnambu/errors.hpp"
#include "homnambu/jacobian.hpp"
#include "homnambu/scalar_parse.hpp"

namespace homnambu {

std::string SuiteResult::text() const {
    std::ostringstream out;
    for (const std::string& line : lines) out << line << "\n";
    return out.str();
}

namespace {

class Steps {
  public:
    explicit Steps(const std::string& fixture) { r_.lines.push_back("fixture " + fixture); }

    void expect(const std::string& what, bool ok) {
        r_.lines.push_back(std::string("  ") + (ok ? "ok   " : "FAIL ") + what);
        if (!ok) r_.ok = false;
    }

    void holds(const std::string& what, const CheckReport& got) {
        expect(what + ": Holds", got.holds());
    }

    void fails(const std::string& what, const CheckReport& got) {
        expect(what + ": Fails (expected on this data)", !got.holds());
    }

    template <class E, class F>
    void raises(const std::string& what, F&& f) {
        bool raised = false;
        try {
            f();
        } catch (const E&) {
            raised = true;
        }
        expect(what, raised);
    }

    SuiteResult take() { return std::move(r_); }

  private:
    SuiteResult r_;
};

Vec parse_vec(const ParamSetPtr& params, std::initializer_list<const char*> texts) {
    Vec v;
    for (const char* t : texts) v.push_back(parse_scalar(t, params));
    return v;
}

BinaryAlgebra substituted(const BinaryAlgebra& a, const std::map<std::string, Scalar>& b) {
    BinaryAlgebra out(a.dim(), a.params(), a.basis_names());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = i + 1; j < a.dim(); ++j) {
            Vec v = a.stored_bracket(i, j);
            for (Scalar& s : v) s = substitute(s, b);
            out.set_bracket(i, j, std::move(v));
        }
    return out;
}

Vec substituted(const Vec& v, const std::map<std::string, Scalar>& b) {
    Vec out = v;
    for (Scalar& s : out) s = substitute(s, b);
    return out;
}

SuiteResult scenario_gl2() {
    Steps s("gl2");
    AlgebraDocument doc = make_fixture("gl2");
    BinaryAlgebra a = doc.to_binary();
    const Vec& tr = doc.functional("tr");
    s.holds("hom-jacobi with map id", check_hom_jacobi(a, doc.map("id")));
    s.holds("trace with functional tr", check_trace_function(a, tr));
    s.holds("induced-bracket skew equivalence", check_ternary_skew_equivalence(a, tr));
    TernaryAlgebra t = induce_ternary(a, tr, Matrix::identity(4), Matrix::identity(4));
    s.expect("induced [E11,E12,E21] equals E11 - E22",
             vec_eq(t.stored_bracket(0, 1, 2), parse_vec(doc.params, {"1", "0", "0", "-1"})));
    s.holds("hom-nambu on the induced algebra", check_hom_nambu(t));
    TripleClassification c = classify_triple({doc.map("id"), doc.map("id"), tr});
    s.expect("classify (id, id, tr): nondegenerate C1",
             !c.degenerate && c.kernel_case == KernelCase::C1);
    BetaSpace bs = solve_beta_space(a, doc.map("conj"), tr);
    s.expect("solve-beta with conjugation map: dimension 1", bs.space.dim() == 1);
    s.expect("solve-beta space contains the vectorized conjugation map",
             subspace_contains(bs.space, vectorize_map(doc.map("conj"))));
    return s.take();
}

SuiteResult scenario_ex1_gl2() {
    Steps s("ex1_gl2");
    AlgebraDocument doc = make_fixture("ex1_gl2");
    BinaryAlgebra a = doc.to_binary();
    const Vec& tr = doc.functional("tr");
    CompatTriple triple{doc.map("alpha"), doc.map("beta"), tr};
    s.holds("hom-jacobi with map alpha", check_hom_jacobi(a, triple.alpha));
    s.holds("trace with functional tr", check_trace_function(a, tr));
    s.holds("compatibility conditions", check_compatibility(triple));
    TripleClassification c = classify_triple(triple);
    s.expect("classify: nondegenerate C1", !c.degenerate && c.kernel_case == KernelCase::C1);
    s.holds("kernel stability", check_kernel_stability(triple));
    s.holds("hom-jacobi inherited by beta", check_beta_hom_jacobi(a, triple));
    auto lambda = proportionality_factor(triple.alpha, triple.beta);
    s.expect("beta proportional to alpha with factor lambda",
             lambda && *lambda == Scalar::parameter(doc.params, *doc.params->index_of("lambda")));
    TernaryAlgebra t = induce_ternary(a, tr, triple.alpha, triple.beta);
    s.holds("hom-nambu on the induced algebra", check_hom_nambu(t));
    BetaSpace bs = solve_beta_space(a, triple.alpha, tr);
    s.expect("solve-beta: dimension 1 containing the vectorized alpha",
             bs.space.dim() == 1 && subspace_contains(bs.space, vectorize_map(triple.alpha)));
    return s.take();
}

SuiteResult scenario_ex2_4dim() {
    Steps s("ex2_4dim");
    AlgebraDocument raw = make_fixture("ex2_4dim");
    s.fails("hom-jacobi with map alpha, constraints not applied",
            check_hom_jacobi(raw.to_binary(), raw.map("alpha")));
    AlgebraDocument doc = apply_constraints(raw);
    BinaryAlgebra a = doc.to_binary();
    const Vec& tau = doc.functional("tau");
    CompatTriple triple{doc.map("alpha"), doc.map("beta"), tau};
    s.holds("hom-jacobi with map alpha, constraints applied", check_hom_jacobi(a, triple.alpha));
    s.holds("trace with functional tau", check_trace_function(a, tau));
    s.holds("induced-bracket skew equivalence", check_ternary_skew_equivalence(a, tau));
    s.holds("compatibility conditions", check_compatibility(triple));
    TripleClassification c = classify_triple(triple);
    s.expect("classify: nondegenerate C2", !c.degenerate && c.kernel_case == KernelCase::C2);
    s.holds("kernel stability", check_kernel_stability(triple));
    s.raises<HypothesisFailure>("beta hom-jacobi gate: no v with tau(alpha(v)) nonzero",
                                [&] { check_beta_hom_jacobi(a, triple); });
    TernaryAlgebra t = induce_ternary(a, tau, triple.alpha, triple.beta);
    s.holds("hom-nambu on the induced algebra", check_hom_nambu(t));
    s.expect("induced [x1,x2,x3]",
             vec_eq(t.stored_bracket(0, 1, 2),
                    parse_vec(doc.params,
                              {"0", "0", "g1*a23 - g2*a13", "g1*b23 - g2*(b12 + b23)"})));
    s.expect("induced [x1,x2,x4]",
             vec_eq(t.stored_bracket(0, 1, 3),
                    parse_vec(doc.params, {"0", "0", "g1*a24 - g2*a14",
                                           "g1*(b23 + b34) - g2*(b12 + b23 + b34)"})));
    s.expect("induced [x1,x3,x4]",
             vec_eq(t.stored_bracket(0, 2, 3), parse_vec(doc.params, {"0", "0", "g1*a34", "g1*b34"})));
    s.expect("induced [x2,x3,x4]",
             vec_eq(t.stored_bracket(1, 2, 3), parse_vec(doc.params, {"0", "0", "g2*a34", "g2*b34"})));
    /* Specialization commutes with induction. */
    std::map<std::string, Scalar> bind;
    for (const char* n : {"g1", "g2", "a12", "a13", "a14", "a23", "a24", "a34"})
        bind.emplace(n, Scalar::one());
    TernaryAlgebra ts = induce_ternary(substituted(a, bind), substituted(tau, bind),
                                       triple.alpha, triple.beta);
    bool commutes = true;
    for (std::size_t i = 0; i < 4 && commutes; ++i)
        for (std::size_t j = i + 1; j < 4 && commutes; ++j)
            for (std::size_t k = j + 1; k < 4 && commutes; ++k)
                commutes = vec_eq(ts.stored_bracket(i, j, k),
                                  substituted(t.stored_bracket(i, j, k), bind));
    s.expect("substitute-then-induce equals induce-then-substitute at g=1, a=1", commutes);
    BetaSpace bs = solve_beta_space(a, triple.alpha, tau);
    s.expect("solve-beta: dimension 8", bs.space.dim() == 8);
    bool images_in_kernel = true;
    for (const Vec& b : bs.space.basis()) {
        Vec tb = covector_compose(tau, map_from_vectorized(4, b));
        if (!vec_is_zero(tb)) images_in_kernel = false;
    }
    s.expect("every solve-beta basis map sends the space into ker tau", images_in_kernel);
    return s.take();
}

SuiteResult scenario_ex3(const std::string& name) {
    Steps s(name);
    AlgebraDocument doc = make_fixture(name);
    BinaryAlgebra a = doc.to_binary();
    const Vec& tau = doc.functional("tau");
    CompatTriple triple{doc.map("alpha"), doc.map("beta"), tau};
    s.holds("trace with functional tau", check_trace_function(a, tau));
    s.holds("induced-bracket skew equivalence", check_ternary_skew_equivalence(a, tau));
    s.holds("compatibility conditions", check_compatibility(triple));
    s.fails("hom-jacobi with map alpha", check_hom_jacobi(a, triple.alpha));
    TripleClassification c = classify_triple(triple);
    if (name == "ex3_3dim") {
        s.expect("classify: nondegenerate C1", !c.degenerate && c.kernel_case == KernelCase::C1);
        auto factor = proportionality_factor(triple.alpha, triple.beta);
        s.expect("beta proportional to alpha with factor r/p",
                 factor && *factor == parse_scalar("r/p", doc.params));
    } else {
        s.expect("classify: nondegenerate C2", !c.degenerate && c.kernel_case == KernelCase::C2);
        s.raises<HypothesisFailure>("beta hom-jacobi gate: no v with tau(alpha(v)) nonzero",
                                    [&] { check_beta_hom_jacobi(a, triple); });
    }
    s.holds("kernel stability", check_kernel_stability(triple));
    TernaryAlgebra t = induce_ternary(a, tau, triple.alpha, triple.beta);
    s.expect("induced [x1,x2,x3] equals t*a3*x2 + t*a4*x3",
             vec_eq(t.stored_bracket(0, 1, 2), parse_vec(doc.params, {"0", "t*a3", "t*a4"})));
    return s.take();
}

SuiteResult scenario_ex4() {
    Steps s("ex4_3dim");
    AlgebraDocument doc = make_fixture("ex4_3dim");
    BinaryAlgebra a = doc.to_binary();
    const Vec& tau = doc.functional("tau");
    CompatTriple triple{doc.map("alpha"), doc.map("beta"), tau};
    s.holds("hom-jacobi with map alpha", check_hom_jacobi(a, triple.alpha));
    s.holds("trace with functional tau", check_trace_function(a, tau));
    s.holds("compatibility conditions", check_compatibility(triple));
    TripleClassification c = classify_triple(triple);
    s.expect("classify: nondegenerate C2", !c.degenerate && c.kernel_case == KernelCase::C2);
    s.holds("kernel stability", check_kernel_stability(triple));
    s.raises<HypothesisFailure>("beta hom-jacobi gate: no v with tau(alpha(v)) nonzero",
                                [&] { check_beta_hom_jacobi(a, triple); });
    TernaryAlgebra t = induce_ternary(a, tau, triple.alpha, triple.beta);
    s.expect("induced [x1,x2,x3] equals t*a4*x2 + t*a5*x3",
             vec_eq(t.stored_bracket(0, 1, 2), parse_vec(doc.params, {"0", "t*a4", "t*a5"})));
    s.holds("hom-nambu on the induced algebra", check_hom_nambu(t));
    return s.take();
}

SuiteResult scenario_n4() {
    Steps s("n4");
    AlgebraDocument doc = make_fixture("n4");
    TernaryAlgebra t = doc.to_ternary();
    s.holds("fundamental identity (identity twist pair)", check_hom_nambu(t));
    s.holds("endomorphism check for -id", check_ternary_endomorphism(t, doc.map("neg_id")));
    s.fails("endomorphism check for 2*id", check_ternary_endomorphism(t, doc.map("two_id")));
    TernaryAlgebra tw = twist_by_endomorphism(t, doc.map("neg_id"));
    s.expect("twisting by -id negates [x1,x2,x3]",
             vec_eq(tw.stored_bracket(0, 1, 2),
                    vec_scale(Scalar::of(-1), t.stored_bracket(0, 1, 2))));
    s.holds("hom-nambu after twisting by -id", check_hom_nambu(tw));
    s.raises<NotAnEndomorphism>("twisting by 2*id is rejected",
                                [&] { twist_by_endomorphism(t, doc.map("two_id")); });
    s.raises<AlreadyTwisted>("twisting a twisted algebra is rejected",
                             [&] { twist_by_endomorphism(tw, doc.map("neg_id")); });
    return s.take();
}

SuiteResult scenario_sl2() {
    Steps s("sl2");
    AlgebraDocument doc = make_fixture("sl2");
    BinaryAlgebra a = doc.to_binary();
    s.holds("hom-jacobi with map id", check_hom_jacobi(a, doc.map("id")));
    Subspace traces = trace_function_space(a);
    s.expect("trace-function space has dimension 0", traces.dim() == 0);
    s.holds("degenerate functional induces the abelian ternary algebra",
            check_abelian_degenerate(a, doc.functional("zero")));
    TripleClassification c =
        classify_triple({doc.map("id"), doc.map("id"), doc.functional("zero")});
    s.expect("classify with the zero functional: degenerate", c.degenerate);
    return s.take();
}

SuiteResult scenario_jacobian() {
    Steps s("jacobian");
    s.expect("bracket of the coordinate functions is 1",
             jacobian_bracket(TriPoly::variable(0), TriPoly::variable(1), TriPoly::variable(2))
                 .is_one());
    std::array<TriPoly, 5> sample = {parse_tripoly("x1^2"), parse_tripoly("x2"),
                                     parse_tripoly("x3"), parse_tripoly("x1*x2"),
                                     parse_tripoly("x3^2")};
    s.holds("fundamental identity on a quadratic sample", check_fundamental_identity(sample));
    PolyMap shear = parse_polymap("(x1 + x2^2, x2, x3)");
    s.expect("shear map has Jacobian determinant 1", det_jacobian(shear).is_one());
    s.holds("hom-nambu for the shear-twisted bracket", check_twisted_hom_nambu(shear, sample));
    s.raises<NotUnimodular>("scaling map is rejected", [&] {
        check_twisted_hom_nambu(parse_polymap("(2*x1, x2, x3)"), sample);
    });
    return s.take();
}

}  // namespace

SuiteResult run_example_scenario(const std::string& fixture) {
    if (fixture == "gl2") return scenario_gl2();
    if (fixture == "ex1_gl2") return scenario_ex1_gl2();
    if (fixture == "ex2_4dim") return scenario_ex2_4dim();
    if (fixture == "ex3_3dim" || fixture == "ex3_3dim_p0") return scenario_ex3(fixture);
    if (fixture == "ex4_3dim") return scenario_ex4();
    if (fixture == "n4") return scenario_n4();
    if (fixture == "sl2") return scenario_sl2();
    if (fixture == "jacobian") return scenario_jacobian();
    throw UnknownName("no scenario for '" + fixture + "'");
}

SuiteResult run_example_suite() {
    SuiteResult all;
    for (const std::string& name : fixture_names()) {
        SuiteResult one = run_example_scenario(name);
        all.ok = all.ok && one.ok;
        for (std::string& line : one.lines) all.lines.push_back(std::move(line));
    }
    SuiteResult jac = scenario_jacobian();
    all.ok = all.ok && jac.ok;
    for (std::string& line : jac.lines) all.lines.push_back(std::move(line));
    all.lines.push_back(all.ok ? "suite: all scenarios passed" : "suite: FAILURES present");
    return all;
}

}  // namespace homnambu
