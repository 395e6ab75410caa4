#include "topvert/json_io.hpp"

#include <stdexcept>

namespace topvert {

namespace {

nlohmann::json exps_of(const Partition& p) {
    nlohmann::json e = nlohmann::json::object();
    for (int k : p.parts()) e[std::to_string(k)] = p.multiplicity(k);
    return e;
}

}  // namespace

nlohmann::json qscalar_to_json(const QScalar& s) {
    nlohmann::json j;
    j["lattice_denom"] = s.lattice();
    const int lo = s.has_terms() ? s.valuation() : 0;
    nlohmann::json coeffs = nlohmann::json::array();
    if (s.has_terms())
        for (int e = lo; e <= s.top_exponent(); ++e) coeffs.push_back(s.coeff(e).str());
    j["min_exp"] = lo;
    j["coeffs"] = coeffs;
    j["valid_upto"] = s.is_exact() ? nlohmann::json(nullptr) : nlohmann::json(s.valid_upto());
    return j;
}

QScalar qscalar_from_json(const nlohmann::json& j) {
    const int lattice = j.at("lattice_denom").get<int>();
    const int lo = j.at("min_exp").get<int>();
    QScalar s(lattice);
    const auto& coeffs = j.at("coeffs");
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        const Rational c = Rational::parse(coeffs[i].get<std::string>());
        if (!c.is_zero()) s += QScalar::unit_term(lattice, lo + static_cast<int>(i), c);
    }
    if (j.contains("valid_upto") && !j["valid_upto"].is_null()) s += QScalar::big_o(lattice, j["valid_upto"].get<int>());
    return s;
}

nlohmann::json partition_to_json(const Partition& p) { return p.parts(); }

Partition partition_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw std::invalid_argument("partition must be a JSON array, got " + j.dump());
    std::vector<int> parts;
    for (const auto& x : j) {
        if (!x.is_number_integer() || x.get<int>() <= 0)
            throw std::invalid_argument("partition parts must be positive integers, got " + j.dump());
        parts.push_back(x.get<int>());
        if (parts.size() > 1 && parts[parts.size() - 2] < parts.back())
            throw std::invalid_argument("partition parts must be weakly decreasing, got " + j.dump());
    }
    return Partition(parts);
}

PartitionTriple parse_triple(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument("cannot parse partition triple at byte " + std::to_string(e.byte) + ": " + text);
    }
    if (!j.is_array() || j.size() != 3)
        throw std::invalid_argument("expected three partitions like [[2],[1],[]], got " + text);
    return {partition_from_json(j[0]), partition_from_json(j[1]), partition_from_json(j[2])};
}

std::string triple_key(const PartitionTriple& t) { return monomial_key({t.a, t.b, t.c}); }

std::string monomial_key(const Monomial& m) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& p : m) j.push_back(partition_to_json(p));
    return j.dump();
}

nlohmann::json series_to_json(const SeriesPoly<QScalar>& s) {
    nlohmann::json j;
    const bool single = s.family_count() == 1;
    if (single) {
        j["family"] = s.families()[0];
        j["cutoff"] = s.cutoffs()[0];
    } else {
        j["families"] = s.families();
        j["cutoffs"] = s.cutoffs();
    }
    if (s.total_cutoff() >= 0) j["total_cutoff"] = s.total_cutoff();
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [m, c] : s.terms()) {
        nlohmann::json exps = nlohmann::json::object();
        if (single) {
            exps = exps_of(m[0]);
        } else {
            for (std::size_t f = 0; f < m.size(); ++f)
                if (!m[f].empty()) exps[s.families()[f]] = exps_of(m[f]);
        }
        terms.push_back({{"exps", exps}, {"coeff", qscalar_to_json(c)}});
    }
    j["terms"] = terms;
    return j;
}

nlohmann::json series_keyed_json(const SeriesPoly<QScalar>& s) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [m, c] : s.terms()) j[monomial_key(m)] = qscalar_to_json(c);
    return j;
}

}  // namespace topvert
