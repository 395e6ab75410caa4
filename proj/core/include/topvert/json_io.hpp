#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "topvert/partition.hpp"
#include "topvert/qscalar.hpp"
#include "topvert/series_poly.hpp"

namespace topvert {

// {"lattice_denom": L, "min_exp": m, "coeffs": ["num/den", ...], "valid_upto": v}; coeffs[i] multiplies
// q^{(m+i)/(2L)}. valid_upto is the first unknown exponent in the same units, null for an exact polynomial.
nlohmann::json qscalar_to_json(const QScalar& s);
QScalar qscalar_from_json(const nlohmann::json& j);

nlohmann::json partition_to_json(const Partition& p);
// Accepts a weakly decreasing array of positive integers; throws std::invalid_argument otherwise.
Partition partition_from_json(const nlohmann::json& j);
// Parses "[[..],[..],[..]]"; errors name the byte offset.
PartitionTriple parse_triple(const std::string& text);
std::string triple_key(const PartitionTriple& t);
std::string monomial_key(const Monomial& m);

// Single family: {"family", "cutoff", "terms": [{"exps": {"k": mult}, "coeff"}]}. Several families: {"families",
// "cutoffs", "terms": [{"exps": {family: {"k": mult}}, "coeff"}]}, omitting families absent from a monomial.
nlohmann::json series_to_json(const SeriesPoly<QScalar>& s);
// Coefficients keyed by the monomial written as an array of index partitions, one per family.
nlohmann::json series_keyed_json(const SeriesPoly<QScalar>& s);

}  // namespace topvert
