#pragma once

#include "cyclocover/cover.hpp"
#include "cyclocover/mv_propagator.hpp"
#include "cyclocover/presentation.hpp"
#include "cyclocover/vanishing.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace cyclocover::io {

using nlohmann::json;

/// [[exponent, numerator, denominator], ...], exponents ascending, zero terms omitted.
/// Integers beyond 64 bits are written as decimal strings; both forms are read.
json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const json& j, Field field);

/// {rows, cols, entries: row-major array of polynomials}
json to_json(const RMatrix& m);
RMatrix rmatrix_from_json(const json& j, Field field);

/// {field, dims, boundaries}; boundaries[i] is d_{i+1}.
json to_json(const ChainComplexOverR& c);
ChainComplexOverR complex_from_json(const json& j);

/// {generators: count or [names], relators: ["xyxY X Y", ...], phi: [..], psi: [..], field?}
Presentation presentation_from_json(const json& j, std::optional<Field> field = std::nullopt);

/// {free_rank, divisors}
json to_json(const ModuleDecomposition& d);
ModuleDecomposition decomposition_from_json(const json& j, Field field);

json to_json(const CoverBettiReport& r);
json to_json(const VanishingCertificate& c);
json to_json(const PPowerReport& r);

/// [[lo2, hi2], ...] on doubled degrees, null for unbounded ends.
json to_json(const mv::DegreeSet& s);
mv::DegreeSet degree_set_from_json(const json& j);
/// {"axioms": [{space, dimension, vanishing: bands | "singer"}]} or the bare list.
std::vector<mv::Axiom> axioms_from_json(const json& j);
json to_json(const mv::DerivationTrace& t);

/// Parses text as JSON, turning parse errors into InputError.
json parse_document(const std::string& text);

/// A builtin name or a path to a complex or presentation document.
/// `field` overrides the builtin/presentation field; for complex documents it
/// must agree with the document's own field.
ChainComplexOverR load_complex(const std::string& input, std::optional<Field> field = std::nullopt);

} // namespace cyclocover::io
