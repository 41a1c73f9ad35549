#pragma once

// JSON forms of the public types. Rationals are strings "p/q" so nothing is
// lost to floating point.

#include "fockindex/bundles.hpp"
#include "fockindex/index_engine.hpp"
#include "fockindex/spectral.hpp"
#include "fockindex/statmech.hpp"
#include "fockindex/symmetric.hpp"

#include <nlohmann/json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace fockindex {

using nlohmann::json;

inline json to_json(const Rational& r) { return r.str(); }

inline Rational rational_from_json(const json& j) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw std::invalid_argument("expected a rational as \"p/q\" or an integer");
}

inline json to_json(const VariableSet& v) {
    json out = json::array();
    for (const auto& var : v.list()) out.push_back({{"name", var.name}, {"weight", var.weight}});
    return out;
}

inline VariableSet variables_from_json(const json& j) {
    std::vector<Variable> vars;
    for (const auto& e : j.at("variables")) {
        if (e.is_string()) {
            vars.push_back({e.get<std::string>(), 1});
        } else {
            vars.push_back({e.at("name").get<std::string>(), e.value("weight", 1)});
        }
    }
    return VariableSet(std::move(vars));
}

inline json to_json(const TruncatedSeries& s) {
    json terms = json::array();
    for (const auto& [m, c] : s.terms()) terms.push_back({{"exponents", m.exponents}, {"coefficient", to_json(c)}});
    return {{"variables", to_json(s.variables())}, {"truncation", s.truncation()}, {"terms", terms}};
}

inline TruncatedSeries series_from_json(const json& j) {
    TruncatedSeries s(variables_from_json(j), j.at("truncation").get<int>());
    for (const auto& t : j.at("terms")) {
        const auto e = t.at("exponents").get<std::vector<int>>();
        if (e.size() != s.variables().size()) throw std::invalid_argument("series: exponent vector has the wrong length");
        if (s.degree_of(e) <= s.truncation()) s.add_term(e, rational_from_json(t.at("coefficient")));
    }
    return s;
}

inline json to_json(const ChernPolynomial& p) {
    json j = to_json(p.poly);
    j["basis"] = basis_name(p.basis);
    j["rank"] = p.rank;
    j["text"] = to_string(p);
    return j;
}

inline ChernPolynomial chern_polynomial_from_json(const json& j) {
    const std::string b = j.at("basis").get<std::string>();
    if (b != "chern" && b != "pontryagin") throw std::invalid_argument("unknown basis '" + b + "'");
    return {b == "chern" ? Basis::chern : Basis::pontryagin, j.at("rank").get<int>(), series_from_json(j)};
}

inline json to_json(const RootModel& m) {
    json roots = json::array();
    for (const auto& e : m.entries()) {
        json c = json::array();
        for (const auto& r : m.coefficients(e)) c.push_back(to_json(r));
        roots.push_back({{"coefficients", c}, {"multiplicity", e.multiplicity}});
    }
    return {{"variables", to_json(m.variables())}, {"truncation", m.truncation()}, {"roots", roots}};
}

inline RootModel root_model_from_json(const json& j) {
    RootModel m(variables_from_json(j), j.at("truncation").get<int>());
    for (const auto& r : j.at("roots")) {
        std::vector<Rational> c;
        for (const auto& v : r.at("coefficients")) c.push_back(rational_from_json(v));
        m.add_root(c, r.value("multiplicity", 1));
    }
    return m;
}

inline json to_json(const IndexReport& r) {
    return {{"manifold", r.manifold},
            {"pairing", r.pairing},
            {"mode", mode_name(r.mode)},
            {"density", r.density},
            {"density_chern_basis", to_json(r.density_chern)},
            {"index", to_json(r.index)}};
}

inline json to_json(const IdentityReport& r) {
    return {{"pairing", pairing_name(r.kind)},
            {"l", r.l},
            {"truncation", r.truncation},
            {"mode", mode_name(r.mode)},
            {"convention", r.convention == RootConvention::geometric ? "geometric" : "literal"},
            {"density", r.canonical},
            {"chain", r.chain},
            {"match", r.match},
            {"first_mismatch", r.first_mismatch}};
}

inline LevelSystem level_system_from_json(const json& j) {
    LevelSystem s;
    s.levels = j.at("levels").get<std::vector<double>>();
    s.mu = j.value("mu", 0.0);
    s.beta = j.value("beta", 1.0);
    s.kB = j.value("kB", 1.0);
    s.statistics = parse_statistics(j.value("statistics", std::string("FD")));
    s.validate();
    return s;
}

inline json to_json(const LevelSystem& s) {
    return {{"levels", s.levels}, {"mu", s.mu}, {"beta", s.beta}, {"kB", s.kB}, {"statistics", statistics_name(s.statistics)}};
}

inline json to_json(const EnsembleReport& r) {
    return {{"statistics", statistics_name(r.statistics)},
            {"level_xi", r.level_xi},
            {"level_log_xi", r.level_log_xi},
            {"occupations", r.occupations},
            {"xi", r.xi},
            {"log_xi", r.log_xi},
            {"grand_potential", r.grand_potential},
            {"mean_particles", r.mean_particles}};
}

inline SpectrumSpec spectrum_from_json(const json& j) {
    const std::string form = j.value("form", std::string("finite"));
    const bool grading = j.value("grading", false);
    if (form == "finite") return SpectrumSpec::finite(j.at("eigenvalues").get<std::vector<double>>(), grading);
    if (form == "affine") {
        const json& p = j.contains("affine") ? j.at("affine") : j;
        return SpectrumSpec::affine(p.at("a").get<double>(), p.at("c").get<double>(), grading);
    }
    throw std::invalid_argument("unknown spectrum form '" + form + "'");
}

inline json to_json(const SpectrumSpec& s) {
    json j{{"form", s.is_finite() ? "finite" : "affine"}, {"grading", s.grading}};
    if (s.is_finite()) {
        j["eigenvalues"] = s.eigenvalues;
    } else {
        j["a"] = s.a;
        j["c"] = s.c;
    }
    return j;
}

}  // namespace fockindex
