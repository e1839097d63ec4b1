#include "homnambu/document.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "homnambu/errors.hpp"
#include "homnambu/scalar_parse.hpp"

namespace homnambu {

using json = nlohmann::ordered_json;

std::size_t AlgebraDocument::basis_index(std::string_view name) const {
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (basis[i] == name) return i;
    throw UnknownName("unknown basis name '" + std::string(name) + "'");
}

const Matrix& AlgebraDocument::map(const std::string& name) const {
    auto it = maps.find(name);
    if (it == maps.end()) throw UnknownName("unknown map '" + name + "'");
    return it->second;
}

const Vec& AlgebraDocument::functional(const std::string& name) const {
    auto it = functionals.find(name);
    if (it == functionals.end()) throw UnknownName("unknown functional '" + name + "'");
    return it->second;
}

BinaryAlgebra AlgebraDocument::to_binary() const {
    if (kind != "binary") throw DocumentError("document kind is not binary");
    BinaryAlgebra a(dim, params, basis);
    for (const auto& [args, value] : brackets) a.set_bracket(args[0], args[1], value);
    return a;
}

TernaryAlgebra AlgebraDocument::to_ternary() const {
    if (kind != "ternary") throw DocumentError("document kind is not ternary");
    TernaryAlgebra t(dim, params, basis);
    for (const auto& [args, value] : brackets) t.set_bracket(args[0], args[1], args[2], value);
    if (twist) t.set_twist(map(twist->first), map(twist->second));
    return t;
}

namespace {

Scalar parse_text(const std::string& text, const ParamSetPtr& params,
                  const std::string& where) {
    try {
        return parse_scalar(text, params);
    } catch (const Error& e) {
        throw DocumentError(where + ": " + e.what());
    }
}

Vec parse_vec(const json& arr, std::size_t dim, const ParamSetPtr& params,
              const std::string& where) {
    if (!arr.is_array() || arr.size() != dim)
        throw DocumentError(where + ": expected an array of " + std::to_string(dim) +
                            " scalar texts");
    Vec out;
    out.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        if (!arr[i].is_string()) throw DocumentError(where + ": entries must be strings");
        out.push_back(parse_text(arr[i].get<std::string>(), params,
                                 where + "[" + std::to_string(i) + "]"));
    }
    return out;
}

std::string scalar_text(const Scalar& s) { return s.to_string(); }

json vec_json(const Vec& v) {
    json arr = json::array();
    for (const Scalar& s : v) arr.push_back(scalar_text(s));
    return arr;
}

}  // namespace

AlgebraDocument parse_document(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw DocumentError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw DocumentError("top level must be an object");

    AlgebraDocument doc;
    if (!j.contains("kind") || !j["kind"].is_string())
        throw DocumentError("missing string field 'kind'");
    doc.kind = j["kind"].get<std::string>();
    if (doc.kind != "binary" && doc.kind != "ternary")
        throw DocumentError("kind must be 'binary' or 'ternary'");
    const std::size_t arity = doc.kind == "binary" ? 2 : 3;

    std::vector<std::string> param_names;
    if (j.contains("params")) {
        if (!j["params"].is_array()) throw DocumentError("'params' must be an array of names");
        for (const auto& p : j["params"]) {
            if (!p.is_string()) throw DocumentError("'params' must be an array of names");
            param_names.push_back(p.get<std::string>());
        }
    }
    doc.params = param_names.empty() ? ParamSet::empty() : ParamSet::make(param_names);

    if (!j.contains("dim") || !j["dim"].is_number_unsigned())
        throw DocumentError("missing nonnegative integer field 'dim'");
    doc.dim = j["dim"].get<std::size_t>();

    if (!j.contains("basis") || !j["basis"].is_array() || j["basis"].size() != doc.dim)
        throw DocumentError("'basis' must list exactly dim names");
    for (const auto& b : j["basis"]) {
        if (!b.is_string()) throw DocumentError("'basis' must list names");
        doc.basis.push_back(b.get<std::string>());
    }
    for (std::size_t i = 0; i < doc.basis.size(); ++i)
        for (std::size_t k = i + 1; k < doc.basis.size(); ++k)
            if (doc.basis[i] == doc.basis[k])
                throw DocumentError("duplicate basis name '" + doc.basis[i] + "'");

    if (j.contains("brackets")) {
        if (!j["brackets"].is_array()) throw DocumentError("'brackets' must be an array");
        for (const auto& rec : j["brackets"]) {
            if (!rec.is_object() || !rec.contains("args") || !rec.contains("value"))
                throw DocumentError("bracket records need 'args' and 'value'");
            const auto& args = rec["args"];
            if (!args.is_array() || args.size() != arity)
                throw DocumentError("bracket 'args' must list " + std::to_string(arity) +
                                    " basis names");
            std::vector<std::size_t> idx;
            for (const auto& a : args) {
                if (!a.is_string()) throw DocumentError("bracket 'args' must be names");
                idx.push_back(doc.basis_index(a.get<std::string>()));
            }
            for (std::size_t k = 1; k < idx.size(); ++k)
                if (idx[k - 1] >= idx[k])
                    throw DocumentError("bracket args must be strictly increasing: " +
                                        rec["args"].dump());
            if (doc.brackets.count(idx))
                throw DocumentError("duplicate bracket record " + rec["args"].dump());
            Vec value = zero_vec(doc.dim);
            const auto& entries = rec["value"];
            if (!entries.is_array())
                throw DocumentError("bracket 'value' must be an array of [basis, scalar]");
            for (const auto& e : entries) {
                if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
                    throw DocumentError("bracket value entries must be [basis, scalar] pairs");
                std::size_t b = doc.basis_index(e[0].get<std::string>());
                value[b] = value[b] + parse_text(e[1].get<std::string>(), doc.params,
                                                 "bracket " + rec["args"].dump());
            }
            doc.brackets.emplace(std::move(idx), std::move(value));
        }
    }

    if (j.contains("maps")) {
        if (!j["maps"].is_object()) throw DocumentError("'maps' must be an object");
        for (const auto& [name, rows] : j["maps"].items()) {
            if (!rows.is_array() || rows.size() != doc.dim)
                throw DocumentError("map '" + name + "' must have dim rows");
            Matrix m(doc.dim, doc.dim);
            for (std::size_t r = 0; r < doc.dim; ++r) {
                Vec row = parse_vec(rows[r], doc.dim, doc.params,
                                    "map '" + name + "' row " + std::to_string(r));
                for (std::size_t c = 0; c < doc.dim; ++c) m.at(r, c) = row[c];
            }
            doc.maps.emplace(name, std::move(m));
        }
    }

    if (j.contains("functionals")) {
        if (!j["functionals"].is_object()) throw DocumentError("'functionals' must be an object");
        for (const auto& [name, arr] : j["functionals"].items())
            doc.functionals.emplace(
                name, parse_vec(arr, doc.dim, doc.params, "functional '" + name + "'"));
    }

    if (j.contains("constraints")) {
        if (!j["constraints"].is_array()) throw DocumentError("'constraints' must be an array");
        for (const auto& c : j["constraints"]) {
            if (!c.is_string()) throw DocumentError("constraints must be scalar texts");
            doc.constraints.push_back(c.get<std::string>());
            parse_text(doc.constraints.back(), doc.params, "constraint");
        }
    }

    if (j.contains("twist")) {
        if (doc.kind != "ternary") throw DocumentError("only ternary documents carry a twist");
        const auto& t = j["twist"];
        if (!t.is_array() || t.size() != 2 || !t[0].is_string() || !t[1].is_string())
            throw DocumentError("'twist' must name two maps");
        doc.twist = {t[0].get<std::string>(), t[1].get<std::string>()};
        doc.map(doc.twist->first);
        doc.map(doc.twist->second);
    }

    if (j.contains("provenance")) {
        if (!j["provenance"].is_string()) throw DocumentError("'provenance' must be a string");
        doc.provenance = j["provenance"].get<std::string>();
    }
    return doc;
}

AlgebraDocument read_document(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DocumentError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_document(buf.str());
}

std::string render_document(const AlgebraDocument& doc) {
    json j;
    j["kind"] = doc.kind;
    if (doc.params->size() > 0) j["params"] = doc.params->names();
    j["dim"] = doc.dim;
    j["basis"] = doc.basis;
    json brackets = json::array();
    for (const auto& [args, value] : doc.brackets) {
        if (vec_is_zero(value)) continue;
        json rec;
        json names = json::array();
        for (std::size_t i : args) names.push_back(doc.basis[i]);
        rec["args"] = std::move(names);
        json entries = json::array();
        for (std::size_t b = 0; b < value.size(); ++b)
            if (!value[b].is_zero())
                entries.push_back(json::array({doc.basis[b], scalar_text(value[b])}));
        rec["value"] = std::move(entries);
        brackets.push_back(std::move(rec));
    }
    if (!brackets.empty()) j["brackets"] = std::move(brackets);
    if (!doc.maps.empty()) {
        json maps;
        for (const auto& [name, m] : doc.maps) {
            json rows = json::array();
            for (std::size_t r = 0; r < m.rows(); ++r) {
                json row = json::array();
                for (std::size_t c = 0; c < m.cols(); ++c)
                    row.push_back(scalar_text(m.at(r, c)));
                rows.push_back(std::move(row));
            }
            maps[name] = std::move(rows);
        }
        j["maps"] = std::move(maps);
    }
    if (!doc.functionals.empty()) {
        json fs;
        for (const auto& [name, v] : doc.functionals) fs[name] = vec_json(v);
        j["functionals"] = std::move(fs);
    }
    if (!doc.constraints.empty()) j["constraints"] = doc.constraints;
    if (doc.twist) j["twist"] = json::array({doc.twist->first, doc.twist->second});
    if (!doc.provenance.empty()) j["provenance"] = doc.provenance;
    return j.dump(2) + "\n";
}

void write_document(const AlgebraDocument& doc, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DocumentError("cannot write '" + path + "'");
    out << render_document(doc);
}

namespace {

/* Leading identifier of a constraint text. */
std::string leading_identifier(const std::string& text) {
    std::size_t i = 0;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t start = i;
    while (i < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
        ++i;
    if (i == start || std::isdigit(static_cast<unsigned char>(text[start])))
        throw DocumentError("constraint must start with the parameter to eliminate: '" + text +
                            "'");
    return text.substr(start, i - start);
}

bool mentions(const MultiPoly& p, std::size_t var) {
    for (const auto& [exp, coeff] : p.terms())
        if (exp[var] != 0) return true;
    return false;
}

Scalar substitute_one(const Scalar& s, const std::string& name, const Scalar& value) {
    return substitute(s, {{name, value}});
}

}  // namespace

AlgebraDocument apply_constraints(const AlgebraDocument& doc) {
    AlgebraDocument out = doc;
    out.constraints.clear();
    for (const std::string& text : doc.constraints) {
        const std::string var = leading_identifier(text);
        auto idx = out.params->index_of(var);
        if (!idx) throw DocumentError("constraint eliminates undeclared parameter '" + var + "'");
        Scalar expr = Scalar::parameter(out.params, *idx) -
                      parse_text(text, out.params, "constraint '" + text + "'");
        if (mentions(expr.num(), *idx) || mentions(expr.den(), *idx))
            throw DocumentError("constraint '" + text +
                                "' is not solvable for its leading parameter");
        for (auto& [args, value] : out.brackets)
            for (Scalar& s : value) s = substitute_one(s, var, expr);
        for (auto& [name, m] : out.maps)
            for (std::size_t r = 0; r < m.rows(); ++r)
                for (std::size_t c = 0; c < m.cols(); ++c)
                    m.at(r, c) = substitute_one(m.at(r, c), var, expr);
        for (auto& [name, v] : out.functionals)
            for (Scalar& s : v) s = substitute_one(s, var, expr);
    }
    return out;
}

AlgebraDocument document_from_binary(const BinaryAlgebra& a) {
    AlgebraDocument doc;
    doc.kind = "binary";
    doc.params = a.params();
    doc.dim = a.dim();
    doc.basis = a.basis_names();
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = i + 1; j < a.dim(); ++j) {
            const Vec& v = a.stored_bracket(i, j);
            if (!vec_is_zero(v)) doc.brackets.emplace(std::vector<std::size_t>{i, j}, v);
        }
    return doc;
}

AlgebraDocument document_from_ternary(const TernaryAlgebra& t, const std::string& twist1_name,
                                      const std::string& twist2_name) {
    AlgebraDocument doc;
    doc.kind = "ternary";
    doc.params = t.params();
    doc.dim = t.dim();
    doc.basis = t.basis_names();
    for (std::size_t i = 0; i < t.dim(); ++i)
        for (std::size_t j = i + 1; j < t.dim(); ++j)
            for (std::size_t k = j + 1; k < t.dim(); ++k) {
                const Vec& v = t.stored_bracket(i, j, k);
                if (!vec_is_zero(v)) doc.brackets.emplace(std::vector<std::size_t>{i, j, k}, v);
            }
    if (!t.twist_is_identity()) {
        doc.maps.emplace(twist1_name, t.alpha1());
        doc.maps.emplace(twist2_name, t.alpha2());
        doc.twist = {twist1_name, twist2_name};
    }
    return doc;
}

}  // namespace homnambu
