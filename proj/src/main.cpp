#include <filesystem>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "homnambu/document.hpp"
#include "homnambu/errors.hpp"
#include "homnambu/examples.hpp"
#include "homnambu/jacobian.hpp"

namespace {

using homnambu::AlgebraDocument;
using homnambu::CheckReport;
using homnambu::Scalar;
using homnambu::Vec;
using json = nlohmann::ordered_json;

struct CommonOpts {
    std::string input;
    bool no_constraints = false;
    bool serial = false;
    std::string format = "text";
};

homnambu::Exec exec_mode(const CommonOpts& o) {
    return o.serial ? homnambu::Exec::serial : homnambu::Exec::parallel;
}

AlgebraDocument load(const CommonOpts& o) {
    AlgebraDocument doc = homnambu::read_document(o.input);
    if (!o.no_constraints && !doc.constraints.empty()) doc = homnambu::apply_constraints(doc);
    return doc;
}

std::string vec_text(const Vec& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += v[i].to_string();
    }
    return out + ")";
}

json vec_json(const Vec& v) {
    json arr = json::array();
    for (const Scalar& s : v) arr.push_back(s.to_string());
    return arr;
}

std::string witness_text(const std::vector<std::size_t>& w,
                         const std::vector<std::string>& basis) {
    std::string out = "(";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ", ";
        out += w[i] < basis.size() ? basis[w[i]] : std::to_string(w[i]);
    }
    return out + ")";
}

std::string residual_entries(const Vec& r, const std::vector<std::string>& basis) {
    std::string out = "{";
    bool first = true;
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (r[i].is_zero()) continue;
        if (!first) out += ", ";
        first = false;
        out += (i < basis.size() ? basis[i] : std::to_string(i)) + ": " + r[i].to_string();
    }
    return out + "}";
}

std::string assumptions_text(const std::vector<Scalar>& a) {
    std::string out;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) out += ", ";
        out += a[i].to_string() + " != 0";
    }
    return out;
}

std::string describe(const CheckReport& r, const std::vector<std::string>& basis) {
    std::string out = to_string(r.verdict);
    if (!r.holds()) {
        out += " witness=" + witness_text(*r.witness, basis);
        out += " residual=" + residual_entries(*r.residual, basis);
    }
    if (!r.pivot_assumptions.empty())
        out += " assuming " + assumptions_text(r.pivot_assumptions);
    return out;
}

json report_json(const std::string& name, const CheckReport& r,
                 const std::vector<std::string>& basis) {
    json o;
    o["check"] = name;
    o["verdict"] = to_string(r.verdict);
    if (!r.holds()) {
        json w = json::array();
        for (std::size_t i : *r.witness)
            w.push_back(i < basis.size() ? basis[i] : std::to_string(i));
        o["witness"] = std::move(w);
        json res;
        for (std::size_t i = 0; i < r.residual->size(); ++i)
            if (!(*r.residual)[i].is_zero())
                res[i < basis.size() ? basis[i] : std::to_string(i)] =
                    (*r.residual)[i].to_string();
        o["residual"] = std::move(res);
    }
    if (!r.pivot_assumptions.empty()) {
        json a = json::array();
        for (const Scalar& s : r.pivot_assumptions) a.push_back(s.to_string() + " != 0");
        o["assumptions"] = std::move(a);
    }
    return o;
}

void emit(const CommonOpts& o, const std::vector<std::string>& lines, const json& j) {
    if (o.format == "json")
        std::cout << j.dump(2) << "\n";
    else
        for (const std::string& line : lines) std::cout << line << "\n";
}

int run_check(const CommonOpts& o, std::vector<std::string> map_names,
              std::vector<std::string> functional_names, std::vector<std::string> checks) {
    AlgebraDocument doc = load(o);
    const bool binary = doc.kind == "binary";
    if (checks.empty()) {
        if (binary) {
            checks.push_back("hom-jacobi");
            if (!functional_names.empty() || !doc.functionals.empty()) {
                checks.push_back("trace");
                checks.push_back("skew");
            }
        } else {
            checks.push_back("hom-nambu");
            if (!map_names.empty()) checks.push_back("endo");
        }
    }
    if (map_names.empty()) {
        if (doc.maps.count("id")) map_names.push_back("id");
    }
    if (functional_names.empty())
        for (const auto& [name, v] : doc.functionals) functional_names.push_back(name);

    auto map_or_identity = [&](const std::string& name) {
        return name == "identity" && !doc.maps.count("identity")
                   ? homnambu::Matrix::identity(doc.dim)
                   : doc.map(name);
    };
    std::vector<std::string> maps_or_default = map_names;
    if (maps_or_default.empty()) maps_or_default.push_back("identity");

    std::vector<std::pair<std::string, CheckReport>> results;
    for (const std::string& c : checks) {
        if (c == "hom-jacobi") {
            if (!binary) throw homnambu::DocumentError("hom-jacobi runs on binary documents");
            homnambu::BinaryAlgebra a = doc.to_binary();
            for (const std::string& m : maps_or_default)
                results.emplace_back("hom-jacobi[map=" + m + "]",
                                     check_hom_jacobi(a, map_or_identity(m), exec_mode(o)));
        } else if (c == "trace") {
            if (!binary) throw homnambu::DocumentError("trace runs on binary documents");
            if (functional_names.empty())
                throw homnambu::DocumentError("trace requires a functional");
            homnambu::BinaryAlgebra a = doc.to_binary();
            for (const std::string& f : functional_names)
                results.emplace_back("trace[functional=" + f + "]",
                                     check_trace_function(a, doc.functional(f)));
        } else if (c == "skew") {
            if (!binary) throw homnambu::DocumentError("skew runs on binary documents");
            if (functional_names.empty())
                throw homnambu::DocumentError("skew requires a functional");
            homnambu::BinaryAlgebra a = doc.to_binary();
            for (const std::string& f : functional_names)
                results.emplace_back("skew[functional=" + f + "]",
                                     check_ternary_skew_equivalence(a, doc.functional(f)));
        } else if (c == "hom-nambu") {
            if (binary) throw homnambu::DocumentError("hom-nambu runs on ternary documents");
            results.emplace_back("hom-nambu",
                                 check_hom_nambu(doc.to_ternary(), exec_mode(o)));
        } else if (c == "endo") {
            if (map_names.empty()) throw homnambu::DocumentError("endo requires --map");
            for (const std::string& m : map_names) {
                CheckReport r =
                    binary ? check_binary_endomorphism(doc.to_binary(), map_or_identity(m))
                           : check_ternary_endomorphism(doc.to_ternary(), map_or_identity(m));
                results.emplace_back("endo[map=" + m + "]", std::move(r));
            }
        } else {
            throw homnambu::DocumentError("unknown check '" + c + "'");
        }
    }

    std::vector<std::string> lines = {"command: check", "input: " + o.input};
    json j;
    j["command"] = "check";
    j["input"] = o.input;
    if (!doc.constraints.empty() || o.no_constraints)
        lines.push_back(std::string("constraints: ") +
                        (o.no_constraints ? "not applied" : "applied"));
    j["constraints_applied"] = !o.no_constraints;
    json checks_json = json::array();
    bool all_hold = true;
    for (const auto& [name, r] : results) {
        lines.push_back("check " + name + ": " + describe(r, doc.basis));
        checks_json.push_back(report_json(name, r, doc.basis));
        all_hold = all_hold && r.holds();
    }
    j["checks"] = std::move(checks_json);
    j["all_hold"] = all_hold;
    if (!doc.provenance.empty()) {
        lines.push_back("provenance: " + doc.provenance);
        j["provenance"] = doc.provenance;
    }
    emit(o, lines, j);
    return all_hold ? 0 : 1;
}

int run_induce(const CommonOpts& o, const std::string& tau_name, const std::string& alpha_name,
               const std::string& beta_name, const std::string& out_path, bool force) {
    AlgebraDocument doc = load(o);
    homnambu::BinaryAlgebra a = doc.to_binary();
    const Vec& tau = doc.functional(tau_name);
    homnambu::CompatTriple triple{doc.map(alpha_name), doc.map(beta_name), tau};

    std::vector<std::string> failed;
    if (!check_trace_function(a, tau).holds()) failed.push_back("trace");
    homnambu::CompatConditions cond = check_compatibility_conditions(triple);
    if (!cond.tau_alpha_symmetry.holds()) failed.push_back("tau_alpha_symmetry");
    if (!cond.tau_beta_symmetry.holds()) failed.push_back("tau_beta_symmetry");
    if (!cond.alpha_beta_exchange.holds()) failed.push_back("alpha_beta_exchange");
    std::string failed_joined;
    for (std::size_t i = 0; i < failed.size(); ++i)
        failed_joined += (i ? ", " : "") + failed[i];
    if (!failed.empty() && !force)
        throw homnambu::HypothesisFailure("induction hypotheses failed: " + failed_joined);

    homnambu::TernaryAlgebra t = induce_ternary(a, tau, triple.alpha, triple.beta);
    AlgebraDocument out = document_from_ternary(t, alpha_name, beta_name);
    out.provenance = "induced from " + o.input + " by functional " + tau_name + " with twist (" +
                     alpha_name + ", " + beta_name + ")";
    if (!doc.provenance.empty()) out.provenance += "; source: " + doc.provenance;
    write_document(out, out_path);

    std::vector<std::string> lines = {"command: induce", "input: " + o.input};
    json j;
    j["command"] = "induce";
    j["input"] = o.input;
    j["functional"] = tau_name;
    j["twist"] = json::array({alpha_name, beta_name});
    if (!failed.empty()) {
        lines.push_back("warning: proceeding despite failed hypotheses: " + failed_joined);
        j["failed_hypotheses"] = failed;
    }
    json brackets = json::array();
    for (const auto& [args, value] : out.brackets) {
        std::string text = "[";
        for (std::size_t i = 0; i < args.size(); ++i)
            text += (i ? "," : "") + out.basis[args[i]];
        text += "] = " + residual_entries(value, out.basis);
        lines.push_back("bracket " + text);
        json rec;
        rec["args"] = json::array();
        for (std::size_t i : args) rec["args"].push_back(out.basis[i]);
        rec["value"] = vec_json(value);
        brackets.push_back(std::move(rec));
    }
    j["brackets"] = std::move(brackets);
    lines.push_back("wrote " + out_path);
    j["out"] = out_path;
    emit(o, lines, j);
    return 0;
}

int run_classify(const CommonOpts& o, const std::string& tau_name,
                 const std::string& alpha_name, const std::string& beta_name) {
    AlgebraDocument doc = load(o);
    const Vec& tau = doc.functional(tau_name);
    homnambu::CompatTriple triple{doc.map(alpha_name), doc.map(beta_name), tau};
    homnambu::TripleClassification c = classify_triple(triple);
    homnambu::Subspace kernel = homnambu::nullspace_of_covector(tau);

    std::vector<std::string> lines = {"command: classify", "input: " + o.input};
    json j;
    j["command"] = "classify";
    j["input"] = o.input;
    j["functional"] = tau_name;
    j["alpha"] = alpha_name;
    j["beta"] = beta_name;
    lines.push_back("compatibility: Holds");
    j["compatibility"] = "Holds";
    std::string degen = c.degenerate
                            ? (kernel.dim() == 0 ? "degenerate: ker tau = {0}"
                                                 : "degenerate: ker tau = V")
                            : "nondegenerate";
    lines.push_back(degen);
    j["degenerate"] = c.degenerate;
    if (c.kernel_case) {
        lines.push_back("case: " + to_string(*c.kernel_case));
        j["case"] = to_string(*c.kernel_case);
    }
    lines.push_back(std::string("tau o alpha: ") + (c.tau_alpha_zero ? "zero" : "nonzero"));
    lines.push_back(std::string("tau o beta: ") + (c.tau_beta_zero ? "zero" : "nonzero"));
    j["tau_alpha_zero"] = c.tau_alpha_zero;
    j["tau_beta_zero"] = c.tau_beta_zero;
    lines.push_back("ker tau basis:");
    json kb = json::array();
    for (const Vec& b : kernel.basis()) {
        lines.push_back("  " + vec_text(b));
        kb.push_back(vec_json(b));
    }
    j["kernel_basis"] = std::move(kb);
    if (!c.pivot_assumptions.empty()) {
        lines.push_back("assumptions: " + assumptions_text(c.pivot_assumptions));
        json a = json::array();
        for (const Scalar& s : c.pivot_assumptions) a.push_back(s.to_string() + " != 0");
        j["assumptions"] = std::move(a);
    }
    emit(o, lines, j);
    return 0;
}

int run_solve_beta(const CommonOpts& o, const std::string& tau_name,
                   const std::string& alpha_name) {
    AlgebraDocument doc = load(o);
    homnambu::BinaryAlgebra a = doc.to_binary();
    homnambu::BetaSpace bs = solve_beta_space(a, doc.map(alpha_name), doc.functional(tau_name));

    std::vector<std::string> lines = {"command: solve-beta", "input: " + o.input};
    json j;
    j["command"] = "solve-beta";
    j["input"] = o.input;
    j["functional"] = tau_name;
    j["alpha"] = alpha_name;
    lines.push_back(std::string("alpha tau-symmetry condition: ") +
                    (bs.alpha_condition_holds ? "Holds" : "Fails"));
    j["alpha_condition_holds"] = bs.alpha_condition_holds;
    lines.push_back("dimension: " + std::to_string(bs.space.dim()));
    j["dimension"] = bs.space.dim();
    lines.push_back("basis (vectorized maps, row-major):");
    json basis = json::array();
    for (const Vec& b : bs.space.basis()) {
        lines.push_back("  " + vec_text(b));
        basis.push_back(vec_json(b));
    }
    j["basis"] = std::move(basis);
    if (!bs.assumptions.empty()) {
        lines.push_back("assumptions: " + assumptions_text(bs.assumptions));
        json as = json::array();
        for (const Scalar& s : bs.assumptions) as.push_back(s.to_string() + " != 0");
        j["assumptions"] = std::move(as);
    }
    emit(o, lines, j);
    return 0;
}

int run_twist(const CommonOpts& o, const std::string& rho_name, const std::string& out_path) {
    AlgebraDocument doc = load(o);
    homnambu::TernaryAlgebra t = doc.to_ternary();
    homnambu::TernaryAlgebra tw = twist_by_endomorphism(t, doc.map(rho_name));
    AlgebraDocument out = document_from_ternary(tw, rho_name, rho_name);
    out.provenance = "twisted from " + o.input + " by endomorphism " + rho_name;
    if (!doc.provenance.empty()) out.provenance += "; source: " + doc.provenance;
    write_document(out, out_path);
    std::vector<std::string> lines = {"command: twist", "input: " + o.input,
                                      "endomorphism check: Holds", "wrote " + out_path};
    json j;
    j["command"] = "twist";
    j["input"] = o.input;
    j["map"] = rho_name;
    j["endomorphism_check"] = "Holds";
    j["out"] = out_path;
    emit(o, lines, j);
    return 0;
}

int run_jacobian(const CommonOpts& o, const std::string& sub,
                 const std::vector<std::string>& poly_texts, const std::string& map_text) {
    using homnambu::TriPoly;
    std::vector<TriPoly> polys;
    for (const std::string& t : poly_texts) polys.push_back(homnambu::parse_tripoly(t));
    std::vector<std::string> lines = {"command: jacobian " + sub};
    json j;
    j["command"] = "jacobian " + sub;
    int rc = 0;
    if (sub == "bracket") {
        if (polys.size() != 3)
            throw homnambu::DocumentError("bracket needs exactly 3 polynomials");
        TriPoly r = jacobian_bracket(polys[0], polys[1], polys[2]);
        lines.push_back("result: " + r.to_string());
        j["result"] = r.to_string();
    } else if (sub == "fi-check" || sub == "twist-check") {
        if (polys.size() != 5)
            throw homnambu::DocumentError(sub + " needs exactly 5 polynomials");
        std::array<TriPoly, 5> sample = {polys[0], polys[1], polys[2], polys[3], polys[4]};
        CheckReport r;
        if (sub == "fi-check") {
            r = check_fundamental_identity(sample);
        } else {
            if (map_text.empty()) throw homnambu::DocumentError("twist-check needs --map");
            homnambu::PolyMap g = homnambu::parse_polymap(map_text);
            lines.push_back("map: " + g.to_string());
            j["map"] = g.to_string();
            r = check_twisted_hom_nambu(g, sample);
        }
        lines.push_back("verdict: " + to_string(r.verdict));
        j["verdict"] = to_string(r.verdict);
        if (!r.holds()) {
            lines.push_back("residual: " + (*r.residual)[0].to_string());
            j["residual"] = (*r.residual)[0].to_string();
            rc = 1;
        }
    } else {
        throw homnambu::DocumentError("unknown jacobian subcommand '" + sub + "'");
    }
    emit(o, lines, j);
    return rc;
}

int run_examples(const CommonOpts& o, bool all, const std::string& name,
                 const std::string& write_dir) {
    json j;
    std::vector<std::string> lines;
    int rc = 0;
    if (!write_dir.empty()) {
        std::filesystem::create_directories(write_dir);
        json written = json::array();
        for (const std::string& f : homnambu::fixture_names()) {
            std::string path = write_dir + "/" + f + ".json";
            write_document(homnambu::make_fixture(f), path);
            lines.push_back("wrote " + path);
            written.push_back(path);
        }
        j["command"] = "examples";
        j["written"] = std::move(written);
    } else if (all || !name.empty()) {
        homnambu::SuiteResult r =
            all ? homnambu::run_example_suite() : homnambu::run_example_scenario(name);
        lines = r.lines;
        j["command"] = "examples";
        j["lines"] = r.lines;
        j["ok"] = r.ok;
        rc = r.ok ? 0 : 1;
    } else {
        json names = json::array();
        for (const std::string& f : homnambu::fixture_names()) {
            lines.push_back(f);
            names.push_back(f);
        }
        j["command"] = "examples";
        j["fixtures"] = std::move(names);
    }
    emit(o, lines, j);
    return rc;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact workbench for trace-induced ternary brackets"};
    app.require_subcommand(1);

    CommonOpts common;
    auto add_common = [&](CLI::App* cmd, bool with_input = true) {
        if (with_input) cmd->add_option("--input", common.input, "algebra document")->required();
        cmd->add_flag("--no-constraints", common.no_constraints,
                      "skip constraint substitution");
        cmd->add_flag("--serial", common.serial, "force the serial checker kernels");
        cmd->add_option("--format", common.format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
    };

    auto* check = app.add_subcommand("check", "run identity checkers on a document");
    std::vector<std::string> map_names, functional_names, checks;
    add_common(check);
    check->add_option("--map", map_names, "map name (repeatable)");
    check->add_option("--functional", functional_names, "functional name (repeatable)");
    check->add_option("--checks", checks, "subset of skew,hom-jacobi,trace,hom-nambu,endo")
        ->delimiter(',');

    auto* induce = app.add_subcommand("induce", "construct the induced ternary document");
    std::string tau_name, alpha_name, beta_name, out_path;
    bool force = false;
    add_common(induce);
    induce->add_option("--functional", tau_name, "trace functional name")->required();
    induce->add_option("--alpha", alpha_name, "first twist map name")->required();
    induce->add_option("--beta", beta_name, "second twist map name")->required();
    induce->add_option("--out", out_path, "output path")->required();
    induce->add_flag("--force", force, "proceed despite failed hypotheses");

    auto* classify = app.add_subcommand("classify", "classify a compatible triple");
    add_common(classify);
    classify->add_option("--functional", tau_name, "trace functional name")->required();
    classify->add_option("--alpha", alpha_name, "alpha map name")->required();
    classify->add_option("--beta", beta_name, "beta map name")->required();

    auto* solve = app.add_subcommand("solve-beta", "solve the conditions linear in beta");
    add_common(solve);
    solve->add_option("--functional", tau_name, "trace functional name")->required();
    solve->add_option("--alpha", alpha_name, "alpha map name")->required();

    auto* twist = app.add_subcommand("twist", "twist a ternary document by an endomorphism");
    add_common(twist);
    twist->add_option("--map", alpha_name, "endomorphism name")->required();
    twist->add_option("--out", out_path, "output path")->required();

    auto* jac = app.add_subcommand("jacobian", "functional-Jacobian bracket utilities");
    std::string jac_sub, jac_map;
    std::vector<std::string> jac_polys;
    add_common(jac, false);
    jac->add_option("subcommand", jac_sub, "bracket | fi-check | twist-check")->required();
    jac->add_option("polys", jac_polys, "polynomials in x1, x2, x3");
    jac->add_option("--map", jac_map, "polynomial map '(g1, g2, g3)'");

    auto* examples = app.add_subcommand("examples", "built-in example documents");
    bool all_examples = false;
    std::string example_name, write_dir;
    add_common(examples, false);
    examples->add_flag("--all-paper-examples", all_examples, "run every example scenario");
    examples->add_option("--name", example_name, "run one scenario");
    examples->add_option("--write-dir", write_dir, "write fixture documents to a directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*check) return run_check(common, map_names, functional_names, checks);
        if (*induce) return run_induce(common, tau_name, alpha_name, beta_name, out_path, force);
        if (*classify) return run_classify(common, tau_name, alpha_name, beta_name);
        if (*solve) return run_solve_beta(common, tau_name, alpha_name);
        if (*twist) return run_twist(common, alpha_name, out_path);
        if (*jac) return run_jacobian(common, jac_sub, jac_polys, jac_map);
        if (*examples) return run_examples(common, all_examples, example_name, write_dir);
    } catch (const homnambu::NotAnEndomorphism& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const homnambu::IncompatibleTriple& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const homnambu::DegenerateTriple& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const homnambu::NotDegenerate& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const homnambu::HypothesisFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const homnambu::NotUnimodular& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const homnambu::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
