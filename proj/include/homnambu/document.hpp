#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "homnambu/compat.hpp"

namespace homnambu {

/* On-disk algebra description.  Scalars are stored as grammar text,
 * never as numbers; bracket argument tuples are strictly increasing in
 * basis order; a ternary document may name its twist pair among the
 * maps (absent means the identity pair). */
struct AlgebraDocument {
    std::string kind;  // "binary" or "ternary"
    ParamSetPtr params = ParamSet::empty();
    std::size_t dim = 0;
    std::vector<std::string> basis;
    /* Structure constants by strictly increasing index tuple (size 2 or
     * 3 to match kind); absent tuples are zero. */
    std::map<std::vector<std::size_t>, Vec> brackets;
    std::map<std::string, Matrix> maps;
    std::map<std::string, Vec> functionals;
    /* Expressions asserted zero, each of the form "<param> - <expr>"
     * where the leading parameter does not occur in the remainder;
     * applied by substituting that parameter away. */
    std::vector<std::string> constraints;
    std::optional<std::pair<std::string, std::string>> twist;
    std::string provenance;

    std::size_t basis_index(std::string_view name) const;  // UnknownName
    const Matrix& map(const std::string& name) const;      // UnknownName
    const Vec& functional(const std::string& name) const;  // UnknownName

    BinaryAlgebra to_binary() const;    // requires kind == "binary"
    TernaryAlgebra to_ternary() const;  // requires kind == "ternary"
};

/* Validates shape, names and scalar texts; errors carry a location. */
AlgebraDocument parse_document(const std::string& json_text);
AlgebraDocument read_document(const std::string& path);

/* Canonical rendering: fixed key order, map/functional names sorted,
 * brackets in tuple order, scalars in canonical text, two-space indent,
 * trailing newline.  parse_document . render_document = identity and
 * render_document . parse_document is byte-stable. */
std::string render_document(const AlgebraDocument& doc);
void write_document(const AlgebraDocument& doc, const std::string& path);

/* Substitutes every constraint's leading parameter away, in listed
 * order, across brackets, maps and functionals.  The returned document
 * carries no constraints. */
AlgebraDocument apply_constraints(const AlgebraDocument& doc);

AlgebraDocument document_from_binary(const BinaryAlgebra& a);
AlgebraDocument document_from_ternary(const TernaryAlgebra& t,
                                      const std::string& twist1_name = "alpha",
                                      const std::string& twist2_name = "beta");

}  // namespace homnambu
