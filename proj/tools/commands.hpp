#pragma once

// Subcommand implementations for the fockindex tool. Each returns its exit
// code and the text it would print, so the tool and the tests share one path.

#include "fockindex/fockindex.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <optional>
#include <random>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

namespace fockindex::cli {

enum ExitCode { ok = 0, verification_failed = 1, input_error = 2 };

struct RunConfig {
    std::optional<int> degree;
    std::string format = "text";
    double tolerance = 1e-12;
    std::uint64_t seed = 20240601;

    void validate() const {
        if (degree && *degree < 0) throw std::invalid_argument("--degree must be non-negative");
        if (!(tolerance > 0.0)) throw std::invalid_argument("--tolerance must be positive");
        if (format != "json" && format != "csv" && format != "text") {
            throw std::invalid_argument("--format must be json, csv or text");
        }
    }
};

struct CommandResult {
    int exit_code = ok;
    std::string out;
    std::string err;
};

inline RunConfig config_from_json(const json& j, RunConfig base = {}) {
    if (j.contains("degree")) base.degree = j.at("degree").get<int>();
    if (j.contains("format")) base.format = j.at("format").get<std::string>();
    if (j.contains("tolerance")) base.tolerance = j.at("tolerance").get<double>();
    if (j.contains("seed")) base.seed = j.at("seed").get<std::uint64_t>();
    return base;
}

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("'" + path + "' is not valid JSON: " + e.what());
    }
}

inline std::string num(double v) {
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return q + "\"";
}

/// Left-aligned columns separated by two spaces.
inline std::string render_table(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width;
    for (const auto& r : rows) {
        if (width.size() < r.size()) width.resize(r.size(), 0);
        for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
    }
    std::string out;
    for (const auto& r : rows) {
        std::string line;
        for (std::size_t i = 0; i < r.size(); ++i) {
            line += r[i];
            if (i + 1 < r.size()) line += std::string(width[i] - r[i].size() + 2, ' ');
        }
        out += line + "\n";
    }
    return out;
}

inline std::string render_csv(const std::vector<std::vector<std::string>>& rows) {
    std::string out;
    for (const auto& r : rows) {
        for (std::size_t i = 0; i < r.size(); ++i) out += (i ? "," : "") + csv_field(r[i]);
        out += "\n";
    }
    return out;
}

// ---------------------------------------------------------------------------
// Bundle grammar: "O", "O(k)", "O(k1,k2)", joined by "+".

inline RootModel parse_bundle(const std::string& text, const Manifold& m) {
    const std::size_t n = m.model.generators().size();
    RootModel b(m.model.generators(), m.complex_dim());
    std::string s;
    for (char ch : text) if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw std::invalid_argument("empty bundle");
    const std::regex summand(R"(O(\(([^()]*)\))?)");
    std::size_t start = 0;
    while (start <= s.size()) {
        std::size_t plus = start;
        int depth = 0;
        while (plus < s.size() && !(s[plus] == '+' && depth == 0)) {
            depth += s[plus] == '(' ? 1 : s[plus] == ')' ? -1 : 0;
            ++plus;
        }
        const std::string term = s.substr(start, plus - start);
        std::smatch match;
        if (!std::regex_match(term, match, summand)) throw std::invalid_argument("cannot parse bundle summand '" + term + "'");
        std::vector<Rational> degrees(n, Rational(0));
        if (match[1].matched) {
            std::vector<std::string> parts;
            std::stringstream ss(match[2].str());
            for (std::string p; std::getline(ss, p, ',');) parts.push_back(p);
            if (parts.size() != n) {
                throw std::invalid_argument("bundle summand '" + term + "' needs " + std::to_string(n) +
                                            " degree(s) on " + m.name);
            }
            for (std::size_t i = 0; i < n; ++i) degrees[i] = Rational::parse(parts[i]);
        }
        b.add_root(degrees, 1);
        if (plus >= s.size()) break;
        start = plus + 1;
    }
    return b;
}

// ---------------------------------------------------------------------------
// genus

inline CommandResult cmd_genus(const std::string& kind_name, const std::optional<std::string>& manifold,
                               const RunConfig& cfg) {
    const GenusKind kind = parse_genus_kind(kind_name);
    CommandResult r;
    if (manifold) {
        const Manifold m = catalog(*manifold);
        const Rational v = genus_number(kind, m);
        if (cfg.format == "json") {
            r.out = json{{"genus", genus_name(kind)}, {"manifold", m.name}, {"value", to_json(v)}}.dump(2) + "\n";
        } else if (cfg.format == "csv") {
            r.out = render_csv({{"genus", "manifold", "value"}, {genus_name(kind), m.name, v.str()}});
        } else {
            r.out = v.str() + "\n";
        }
        return r;
    }
    std::vector<int> degrees;
    if (cfg.degree) {
        degrees.push_back(*cfg.degree);
    } else {
        for (int d = 0; d <= 4; ++d) degrees.push_back(d);
    }
    json arr = json::array();
    std::vector<std::vector<std::string>> rows{{"genus", "degree", "basis", "polynomial"}};
    for (int d : degrees) {
        const ChernPolynomial p = genus_polynomial(kind, d);
        const std::string text = to_factored_string(p);
        arr.push_back({{"genus", genus_name(kind)}, {"degree", d}, {"text", text}, {"polynomial", to_json(p)}});
        rows.push_back({genus_name(kind), std::to_string(d), basis_name(p.basis), text});
    }
    if (cfg.format == "json") {
        r.out = (degrees.size() == 1 ? arr.front() : arr).dump(2) + "\n";
    } else if (cfg.format == "csv") {
        r.out = render_csv(rows);
    } else if (degrees.size() == 1) {
        r.out = rows.back().back() + "\n";
    } else {
        r.out = render_table(rows);
    }
    return r;
}

// ---------------------------------------------------------------------------
// index

inline CommandResult cmd_index(const std::string& pairing, const std::string& manifold, const std::string& mode_name_in,
                               const std::string& bundle, const RunConfig& cfg) {
    const Manifold m = catalog(manifold);
    CommandResult r;
    if (pairing == "hrr") {
        const RootModel b = parse_bundle(bundle, m);
        const Rational v = hrr_index(m, b);
        if (cfg.format == "json") {
            r.out = json{{"manifold", m.name}, {"pairing", "hrr"}, {"bundle", bundle}, {"bundle_roots", to_json(b)},
                         {"index", to_json(v)}}
                        .dump(2) +
                    "\n";
        } else if (cfg.format == "csv") {
            r.out = render_csv({{"manifold", "pairing", "bundle", "index"}, {m.name, "hrr", bundle, v.str()}});
        } else {
            r.out = render_table({{"manifold", m.name}, {"pairing", "hrr"}, {"bundle", bundle}, {"index", v.str()}});
        }
        return r;
    }
    std::vector<PairingKind> kinds;
    std::vector<PairingMode> modes;
    if (pairing == "all") {
        kinds = {PairingKind::fb, PairingKind::bb, PairingKind::ff, PairingKind::bf};
    } else {
        kinds = {parse_pairing_kind(pairing)};
    }
    if (mode_name_in == "both") {
        modes = {PairingMode::exact, PairingMode::nondegenerate};
    } else {
        modes = {parse_pairing_mode(mode_name_in)};
    }
    const int d = cfg.degree.value_or(m.complex_dim());
    std::vector<IndexReport> reports;
    for (auto k : kinds) {
        for (auto md : modes) reports.push_back(pairing_index(k, m, md, d));
    }
    const Rational chi = euler_characteristic(m);
    if (cfg.format == "json") {
        json arr = json::array();
        for (const auto& rep : reports) arr.push_back(to_json(rep));
        r.out = (reports.size() == 1 ? arr.front() : arr).dump(2) + "\n";
    } else if (reports.size() == 1) {
        const IndexReport& rep = reports.front();
        std::vector<std::vector<std::string>> rows{{"manifold", rep.manifold},
                                                   {"pairing", std::string(rep.pairing) + " (" + pairing_title(kinds.front()) + ")"},
                                                   {"mode", mode_name(rep.mode)},
                                                   {"density", rep.density},
                                                   {"density_chern_basis", to_string(rep.density_chern)},
                                                   {"index", rep.index.str()},
                                                   {"euler_characteristic", chi.str()}};
        if (cfg.format == "csv") {
            std::vector<std::string> head;
            std::vector<std::string> row;
            for (const auto& kv : rows) {
                head.push_back(kv[0]);
                row.push_back(kv[1]);
            }
            r.out = render_csv({head, row});
        } else {
            r.out = render_table(rows);
        }
    } else {
        std::vector<std::vector<std::string>> rows{{"pairing", "mode", "density", "index"}};
        for (const auto& rep : reports) rows.push_back({rep.pairing, mode_name(rep.mode), rep.density, rep.index.str()});
        r.out = cfg.format == "csv" ? render_csv(rows)
                                    : m.name + " (euler characteristic " + chi.str() + ")\n" + render_table(rows);
    }
    return r;
}

// ---------------------------------------------------------------------------
// verify

struct PairingRow {
    const char* operator_name;
    const char* bundle;
    const char* character;
    const char* genus_class;
};

inline PairingRow dictionary_row(PairingKind k) {
    switch (k) {
        case PairingKind::fb: return {"Dirac", "spinor bundle E", "prod e^{x/2} Xi_FD", "A-hat"};
        case PairingKind::bb: return {"de Rham", "symbol bundle sigma(D)", "prod 1/Xi_BE", "Td"};
        case PairingKind::ff: return {"Dirac", "spinor bundle E", "prod e^{x/2} Xi_FD", "B-hat"};
        case PairingKind::bf: return {"de Rham", "symbol bundle sigma(D)", "prod 1/Xi_BE", "Td*"};
    }
    return {"", "", "", ""};
}

/// Seeded spot checks of the ring laws and of the series operations.
inline std::vector<std::string> property_failures(std::uint64_t seed, int trials = 25) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coef(-9, 9);
    std::uniform_int_distribution<int> den(1, 5);
    const VariableSet v = VariableSet::roots(3);
    const int d = 5;
    auto random_series = [&](bool with_constant) {
        TruncatedSeries s(v, d);
        for (int e0 = 0; e0 <= 2; ++e0)
            for (int e1 = 0; e1 <= 2; ++e1)
                for (int e2 = 0; e2 <= 1; ++e2) {
                    if (!with_constant && e0 + e1 + e2 == 0) continue;
                    if (rng() % 2 == 0) s.add_term({e0, e1, e2}, Rational(coef(rng), den(rng)));
                }
        if (with_constant) s.add_term({0, 0, 0}, Rational(1 + static_cast<int>(rng() % 4)) - s.constant_term());
        return s;
    };
    std::vector<std::string> failures;
    auto check = [&](bool ok_, const std::string& what, int t) {
        if (!ok_) failures.push_back(what + " (trial " + std::to_string(t) + ")");
    };
    const TruncatedSeries one = TruncatedSeries::one(v, d);
    for (int t = 0; t < trials; ++t) {
        const TruncatedSeries a = random_series(true);
        const TruncatedSeries b = random_series(true);
        const TruncatedSeries c = random_series(false);
        const TruncatedSeries e = random_series(false);
        check(a * b == b * a, "commutativity", t);
        check((a * b) * c == a * (b * c), "associativity", t);
        check(a * (b + c) == a * b + a * c, "distributivity", t);
        check(a + (-a) == TruncatedSeries(v, d), "additive inverse", t);
        check(a * series_invert(a) == one, "multiplicative inverse", t);
        check(series_exp(c + e) == series_exp(c) * series_exp(e), "exp(a+b) = exp(a) exp(b)", t);
        TruncatedSeries symmetric_part = elementary_symmetric(v, d, 1) * Rational(coef(rng)) +
                                         elementary_symmetric(v, d, 2) * elementary_symmetric(v, d, 1) +
                                         pow(elementary_symmetric(v, d, 3), 1 + t % 2);
        check(expand_in_roots(to_chern_basis(symmetric_part, 3), v) == symmetric_part, "symmetric round trip", t);
    }
    return failures;
}

inline CommandResult cmd_verify(bool all, const std::string& kind_name, int l, const std::string& mode_in,
                                const std::string& convention, bool properties, const RunConfig& cfg) {
    CommandResult r;
    if (properties) {
        const auto failures = property_failures(cfg.seed);
        if (cfg.format == "json") {
            r.out = json{{"seed", cfg.seed}, {"failures", failures}, {"pass", failures.empty()}}.dump(2) + "\n";
        } else {
            for (const auto& f : failures) r.out += "FAIL " + f + "\n";
            r.out += std::string(failures.empty() ? "PASS" : "FAIL") + " ring-law spot checks (seed " +
                     std::to_string(cfg.seed) + ")\n";
        }
        r.exit_code = failures.empty() ? ok : verification_failed;
        if (!all && kind_name.empty()) return r;
    }
    if (l < 1) throw std::invalid_argument("--l must be at least 1");
    const int degree = cfg.degree.value_or(2 * l + 4);
    const RootConvention conv = convention == "literal" ? RootConvention::independent_roots
                                : convention == "geometric"
                                    ? RootConvention::geometric
                                    : throw std::invalid_argument("--convention must be geometric or literal");
    std::vector<PairingKind> kinds;
    if (all) {
        kinds = {PairingKind::fb, PairingKind::bb, PairingKind::ff, PairingKind::bf};
    } else {
        if (kind_name.empty()) throw std::invalid_argument("verify needs a pairing or --all");
        kinds = {parse_pairing_kind(kind_name)};
    }
    std::vector<PairingMode> modes;
    if (mode_in == "both" || (all && mode_in.empty())) {
        modes = {PairingMode::exact, PairingMode::nondegenerate};
    } else {
        modes = {parse_pairing_mode(mode_in.empty() ? "exact" : mode_in)};
    }

    std::vector<IdentityReport> reports;
    for (auto k : kinds) {
        for (auto md : modes) reports.push_back(verify_identity(k, l, degree, md, conv));
    }
    bool pass = true;
    for (const auto& rep : reports) pass = pass && rep.match;

    if (cfg.format == "json") {
        json arr = json::array();
        for (const auto& rep : reports) arr.push_back(to_json(rep));
        r.out += json{{"l", l}, {"degree", degree}, {"reports", arr}, {"pass", pass}}.dump(2) + "\n";
    } else if (cfg.format == "csv") {
        std::vector<std::vector<std::string>> rows{{"pairing", "l", "degree", "mode", "density", "result", "first_mismatch"}};
        for (const auto& rep : reports) {
            rows.push_back({pairing_name(rep.kind), std::to_string(l), std::to_string(degree), mode_name(rep.mode),
                            rep.canonical, rep.match ? "PASS" : "FAIL", rep.first_mismatch});
        }
        r.out += render_csv(rows);
    } else if (reports.size() == 1) {
        const IdentityReport& rep = reports.front();
        std::vector<std::vector<std::string>> rows{
            {"pairing", std::string(pairing_name(rep.kind)) + " (" + pairing_title(rep.kind) + ")"},
            {"l", std::to_string(l)},
            {"degree", std::to_string(degree)},
            {"mode", mode_name(rep.mode)}};
        for (std::size_t i = 0; i < rep.chain.size(); ++i) rows.push_back({i == 0 ? "chain" : "", rep.chain[i]});
        rows.push_back({"density", rep.canonical});
        if (!rep.match) rows.push_back({"mismatch", rep.first_mismatch});
        r.out += render_table(rows);
    } else {
        // dictionary layout: one column per pairing
        std::vector<std::vector<std::string>> rows{{"Pairing"}, {"Operator"}, {"Vector bundle"}, {"Chern character"},
                                                   {"Topological class"}};
        for (auto md : modes) rows.push_back({std::string("Density (") + mode_name(md) + ")"});
        rows.push_back({"Identity check"});
        for (auto k : kinds) {
            const PairingRow d = dictionary_row(k);
            rows[0].push_back(pairing_title(k));
            rows[1].push_back(d.operator_name);
            rows[2].push_back(d.bundle);
            rows[3].push_back(d.character);
            rows[4].push_back(d.genus_class);
            bool kind_pass = true;
            for (std::size_t j = 0; j < modes.size(); ++j) {
                for (const auto& rep : reports) {
                    if (rep.kind == k && rep.mode == modes[j]) {
                        rows[5 + j].push_back(rep.canonical);
                        kind_pass = kind_pass && rep.match;
                    }
                }
            }
            rows.back().push_back(kind_pass ? "PASS" : "FAIL");
        }
        r.out += render_table(rows);
        for (const auto& rep : reports) {
            if (!rep.match) r.out += std::string("mismatch in ") + pairing_name(rep.kind) + ": " + rep.first_mismatch + "\n";
        }
    }
    if (cfg.format == "text") r.out += pass ? "PASS\n" : "FAIL\n";
    if (!pass) {
        for (const auto& rep : reports) {
            if (!rep.match) {
                r.err = std::string("verification failed for ") + pairing_name(rep.kind) + ": " + rep.first_mismatch + "\n";
                break;
            }
        }
        r.exit_code = verification_failed;
    }
    return r;
}

// ---------------------------------------------------------------------------
// stats

inline CommandResult cmd_stats(const std::string& path, bool check_correspondence, const RunConfig& cfg) {
    const LevelSystem sys = level_system_from_json(read_json_file(path));
    const EnsembleReport rep = grand_ensemble(sys);
    std::optional<CorrespondenceReport> corr;
    if (check_correspondence) corr = correspondence_check(sys, cfg.tolerance);

    CommandResult r;
    if (cfg.format == "json") {
        json j{{"system", to_json(sys)}, {"ensemble", to_json(rep)}};
        if (corr) {
            j["correspondence"] = {{"log_xi_ensemble", corr->log_xi_ensemble},
                                   {"log_xi_character", corr->log_xi_character},
                                   {"log_xi_series", corr->log_xi_series},
                                   {"series_terms", corr->terms_used},
                                   {"tail_bound", corr->tail_bound},
                                   {"max_relative_deviation", corr->max_relative_deviation},
                                   {"tolerance", cfg.tolerance},
                                   {"pass", corr->pass}};
        }
        r.out = j.dump(2) + "\n";
    } else if (cfg.format == "csv") {
        std::vector<std::vector<std::string>> rows{{"level", "epsilon", "x", "xi", "log_xi", "occupation"}};
        for (std::size_t i = 0; i < sys.levels.size(); ++i) {
            rows.push_back({std::to_string(i), num(sys.levels[i]), num(sys.x(i)), num(rep.level_xi[i]),
                            num(rep.level_log_xi[i]), num(rep.occupations[i])});
        }
        r.out = render_csv(rows);
    } else {
        r.out = render_table({{"statistics", statistics_name(sys.statistics)},
                              {"levels", std::to_string(sys.levels.size())},
                              {"Xi", num(rep.xi)},
                              {"ln Xi", num(rep.log_xi)},
                              {"Omega", num(rep.grand_potential)},
                              {"N", num(rep.mean_particles)}});
    }
    if (corr) {
        if (cfg.format != "json") {
            // csv rows stay machine readable; the check result goes to the error stream there
            const std::string line = std::string(corr->pass ? "PASS" : "FAIL") + " Xi = CH correspondence, max deviation " +
                                     num(corr->max_relative_deviation) + "\n";
            (cfg.format == "csv" ? r.err : r.out) += line;
        }
        if (!corr->pass) r.exit_code = verification_failed;
    }
    return r;
}

// ---------------------------------------------------------------------------
// zeta-det and spectral

struct SpectrumArgs {
    std::string file;
    std::vector<double> eigenvalues;
    std::optional<double> a;
    std::optional<double> c;
    bool grading = false;
};

inline SpectrumSpec spectrum_from_args(const SpectrumArgs& s) {
    const int sources = (!s.file.empty() ? 1 : 0) + (!s.eigenvalues.empty() ? 1 : 0) + ((s.a || s.c) ? 1 : 0);
    if (sources != 1) throw std::invalid_argument("give exactly one of: a spectrum file, --eigenvalues, or --a/--c");
    if (!s.file.empty()) return spectrum_from_json(read_json_file(s.file));
    if (!s.eigenvalues.empty()) return SpectrumSpec::finite(s.eigenvalues, s.grading);
    return SpectrumSpec::affine(s.a.value_or(1.0), s.c.value_or(1.0), s.grading);
}

inline CommandResult cmd_zeta_det(const SpectrumArgs& args, const RunConfig& cfg) {
    const SpectrumSpec s = spectrum_from_args(args);
    const CertifiedValue d = zeta_det(s);
    const double zp = zeta_derivative_at_zero(s);
    CommandResult r;
    if (cfg.format == "json") {
        r.out = json{{"spectrum", to_json(s)}, {"zeta_prime_0", zp}, {"determinant", d.value}, {"error_bound", d.error_bound}}
                    .dump(2) +
                "\n";
    } else if (cfg.format == "csv") {
        r.out = render_csv({{"zeta_prime_0", "determinant", "error_bound"}, {num(zp), num(d.value), num(d.error_bound)}});
    } else {
        r.out = render_table({{"zeta'(0)", num(zp)}, {"det", num(d.value)}, {"error bound", num(d.error_bound)}});
    }
    return r;
}

inline CommandResult cmd_spectral(const SpectrumArgs& args, const RunConfig& cfg) {
    const SpectrumSpec s = spectrum_from_args(args);
    const SpectralPairReport rep = spectral_report(s, std::min(cfg.tolerance, 1e-15));
    CommandResult r;
    if (cfg.format == "json") {
        json pairs = json::array();
        for (const auto& p : rep.pairings) {
            pairs.push_back({{"pairing", pairing_name(p.kind)}, {"density", p.density}, {"exact", p.exact},
                             {"nondegenerate", p.nondegenerate}});
        }
        json j{{"spectrum", to_json(s)},
               {"chern_character", rep.chern_character.value},
               {"log_xi_be", rep.log_xi_be.value},
               {"log_xi_fd", rep.log_xi_fd.value},
               {"determinant", rep.determinant.value},
               {"euler_class", rep.euler_class.value},
               {"pairings", pairs}};
        if (s.is_finite()) {
            j["spinor_character"] = spinor_type_character(s);
            j["de_rham_character"] = de_rham_type_character(s);
        }
        r.out = j.dump(2) + "\n";
        return r;
    }
    std::vector<std::vector<std::string>> rows{{"quantity", "value"},
                                               {"chern_character", num(rep.chern_character.value)},
                                               {"log_xi_be", num(rep.log_xi_be.value)},
                                               {"log_xi_fd", num(rep.log_xi_fd.value)},
                                               {"determinant", num(rep.determinant.value)},
                                               {"euler_class", num(rep.euler_class.value)}};
    if (s.is_finite()) {
        rows.push_back({"spinor_character", num(spinor_type_character(s))});
        rows.push_back({"de_rham_character", num(de_rham_type_character(s))});
    }
    for (const auto& p : rep.pairings) {
        rows.push_back({std::string("pairing_") + pairing_name(p.kind) + "_exact", num(p.exact)});
        rows.push_back({std::string("pairing_") + pairing_name(p.kind) + "_nondegenerate", num(p.nondegenerate)});
    }
    r.out = cfg.format == "csv" ? render_csv(rows) : render_table({rows.begin() + 1, rows.end()});
    return r;
}

// ---------------------------------------------------------------------------
// Argument parsing and dispatch

inline CommandResult run(const std::vector<std::string>& argv_in) {
    CLI::App app{"Characteristic classes, index pairings, ensembles and spectral determinants", "fockindex"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "fockindex 1.0");

    int degree = 0;
    std::string format;
    double tolerance = 0.0;
    std::uint64_t seed = 0;
    std::string config_path;
    auto* o_degree = app.add_option("--degree,-D", degree, "truncation degree")->check(CLI::NonNegativeNumber);
    auto* o_format = app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "csv", "text"}));
    auto* o_tol = app.add_option("--tolerance", tolerance, "floating-point tolerance")->check(CLI::PositiveNumber);
    auto* o_seed = app.add_option("--seed", seed, "seed for property checks");
    app.add_option("--config", config_path, "JSON file with degree/format/tolerance/seed")->check(CLI::ExistingFile);
    // global flags are accepted after the subcommand too
    app.fallthrough();

    std::string g_kind;
    std::string g_manifold;
    auto* genus = app.add_subcommand("genus", "genus polynomials, or genus numbers of a catalog manifold");
    genus->add_option("kind", g_kind, "todd, ahat, bhat, toddstar, euler")->required();
    auto* o_g_manifold = genus->add_option("--manifold,-m", g_manifold, "catalog manifold, e.g. cp2, torus2, cp1xcp1");

    std::string i_pairing;
    std::string i_manifold;
    std::string i_mode = "exact";
    std::string i_bundle = "O";
    auto* index = app.add_subcommand("index", "pairing or Riemann-Roch index on a catalog manifold");
    index->add_option("pairing", i_pairing, "fb, bb, ff, bf, hrr or all")->required();
    index->add_option("manifold", i_manifold, "catalog manifold")->required();
    index->add_option("--mode", i_mode, "exact, nondegenerate or both");
    index->add_option("--bundle", i_bundle, "line bundle sum for hrr, e.g. O(3) or O(1,0)+O(0,1)");

    bool v_all = false;
    bool v_properties = false;
    std::string v_kind;
    int v_l = 1;
    std::string v_mode;
    std::string v_convention = "geometric";
    auto* verify = app.add_subcommand("verify", "dual-route verification of the pairing identities");
    verify->add_option("pairing", v_kind, "fb, bb, ff or bf");
    verify->add_flag("--all", v_all, "all four pairings");
    verify->add_option("--l", v_l, "number of Chern roots")->check(CLI::PositiveNumber);
    verify->add_option("--mode", v_mode, "exact, nondegenerate or both");
    verify->add_option("--convention", v_convention, "geometric or literal");
    verify->add_flag("--properties", v_properties, "seeded ring-law spot checks");

    std::string s_file;
    bool s_check = false;
    auto* stats = app.add_subcommand("stats", "grand canonical ensemble of a level system");
    stats->add_option("input", s_file, "LevelSystem JSON file")->required();
    stats->add_flag("--check-correspondence", s_check, "compare with the Fock-space characters");

    SpectrumArgs z_args;
    SpectrumArgs sp_args;
    for (auto [name, help, args] : {std::tuple{"zeta-det", "zeta-regularized determinant", &z_args},
                                    std::tuple{"spectral", "formal characters and pairings of a spectrum", &sp_args}}) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("input", args->file, "SpectrumSpec JSON file");
        sub->add_option("--eigenvalues", args->eigenvalues, "finite spectrum")->delimiter(',');
        sub->add_option("--a", args->a, "affine scale");
        sub->add_option("--c", args->c, "affine offset");
        sub->add_flag("--grading", args->grading, "declare lambda+ = lambda-");
    }

    std::vector<std::string> reversed(argv_in.rbegin(), argv_in.rend());
    CommandResult result;
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        std::ostringstream out;
        std::ostringstream err;
        const int code = app.exit(e, out, err);
        result.out = out.str();
        result.err = err.str();
        result.exit_code = code == 0 ? ok : input_error;
        return result;
    }

    try {
        RunConfig cfg;
        if (!config_path.empty()) cfg = config_from_json(read_json_file(config_path), cfg);
        if (o_degree->count() > 0) cfg.degree = degree;
        if (o_format->count() > 0) cfg.format = format;
        if (o_tol->count() > 0) cfg.tolerance = tolerance;
        if (o_seed->count() > 0) cfg.seed = seed;
        cfg.validate();

        if (genus->parsed()) {
            return cmd_genus(g_kind, o_g_manifold->count() ? std::optional<std::string>(g_manifold) : std::nullopt, cfg);
        }
        if (index->parsed()) return cmd_index(i_pairing, i_manifold, i_mode, i_bundle, cfg);
        if (verify->parsed()) return cmd_verify(v_all, v_kind, v_l, v_mode, v_convention, v_properties, cfg);
        if (stats->parsed()) return cmd_stats(s_file, s_check, cfg);
        if (app.got_subcommand("zeta-det")) return cmd_zeta_det(z_args, cfg);
        if (app.got_subcommand("spectral")) return cmd_spectral(sp_args, cfg);
    } catch (const std::exception& e) {
        result.err = std::string("error: ") + e.what() + "\n";
        result.exit_code = input_error;
        return result;
    }
    result.err = "error: no subcommand\n";
    result.exit_code = input_error;
    return result;
}

}  // namespace fockindex::cli
