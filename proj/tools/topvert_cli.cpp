#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "topvert/fock_checks.hpp"
#include "topvert/hodge.hpp"
#include "topvert/json_io.hpp"
#include "topvert/kp.hpp"
#include "topvert/mutation.hpp"
#include "topvert/oracles.hpp"
#include "topvert/vertex.hpp"

#ifndef TOPVERT_VERSION
#define TOPVERT_VERSION "unknown"
#endif

namespace {

using namespace topvert;
using nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitUsage = 3;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Flags > config file > defaults. Windows are comparison windows in lattice units; primitives get twice that.
struct RunConfig {
    int lattice_denom = 0;  // 0: chosen from tau
    int window = 40;
    int min_width = 20;
    int fock_cutoff = 14;
    int jobs = 1;
    std::string out;
    std::string format = "json";
    std::string mutate = "none";
    bool full = false;

    std::string mu;
    std::string tau;
    std::optional<int> N;
    std::optional<int> weight;
    std::optional<int> degree;
    std::string check;
    std::string scope = "all";

    json echo() const {
        json j = {{"lattice_denom", lattice_denom}, {"window", window},   {"min_width", min_width},
                  {"fock_cutoff", fock_cutoff},     {"jobs", jobs},       {"format", format},
                  {"mutate", mutate},               {"full", full}};
        if (!tau.empty()) j["tau"] = tau;
        if (N) j["N"] = *N;
        if (weight) j["weight"] = *weight;
        if (degree) j["degree"] = *degree;
        return j;
    }

    VertexConfig vertex() const { return {2 * window, window, min_width, jobs}; }
    HodgeConfig hodge() const { return {2 * window, window, min_width, jobs}; }
    FockConfig fock() const {
        FockConfig f;
        f.window = 2 * window;
        f.compare_window = window;
        f.min_width = min_width;
        f.max_cutoff = fock_cutoff;
        return f;
    }
    int weight_or(int d) const { return weight.value_or(d); }
    int degree_or(int d) const { return degree.value_or(d); }

    void validate() const {
        if (min_width > window) throw UsageError("--min-width must not exceed --window");
        if (window <= 0 || min_width <= 0) throw UsageError("--window and --min-width must be positive");
        if (jobs < 1) throw UsageError("--jobs must be at least 1");
        if (lattice_denom < 0) throw UsageError("--lattice-denom must be positive");
        if (format != "json" && format != "csv") throw UsageError("--format must be json or csv");
        if (!parse_mutation(mutate)) throw UsageError("unknown mutation '" + mutate + "'");
    }
};

Rational parse_tau(const std::string& text) {
    Rational t;
    try {
        t = Rational::parse(text);
    } catch (const std::exception&) {
        throw UsageError("cannot parse --tau '" + text + "'; use an integer or num/den");
    }
    if (t.is_zero() || t == Rational(-1)) throw UsageError("--tau must differ from 0 and -1");
    return t;
}

// Lattice for the output of a tau-dependent computation; a requested denominator must be a multiple.
int output_lattice(const RunConfig& cfg, int needed) {
    if (cfg.lattice_denom == 0) return needed;
    if (cfg.lattice_denom % needed != 0)
        throw UsageError("--lattice-denom " + std::to_string(cfg.lattice_denom) + " cannot carry the requested tau; use " +
                         std::to_string(needed) + " or a multiple");
    return cfg.lattice_denom;
}

int exit_code(CheckStatus s) {
    switch (s) {
    case CheckStatus::pass: return kExitPass;
    case CheckStatus::fail: return kExitFail;
    case CheckStatus::inconclusive: return kExitInconclusive;
    }
    return kExitFail;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

void csv_series_rows(std::ostream& os, const std::string& key, const QScalar& s) {
    const std::string hi = s.is_exact() ? "" : std::to_string(s.valid_upto());
    for (const auto& t : s.terms())
        os << csv_field(key) << ',' << s.lattice() << ',' << t.exp << ',' << t.coeff.str() << ',' << hi << '\n';
    if (!s.has_terms()) os << csv_field(key) << ',' << s.lattice() << ",,0," << hi << '\n';
}

void emit(const RunConfig& cfg, const json& doc, const std::function<void(std::ostream&)>& csv) {
    std::ofstream file;
    if (!cfg.out.empty()) {
        file.open(cfg.out);
        if (!file) throw UsageError("cannot open --out " + cfg.out);
    }
    std::ostream& os = cfg.out.empty() ? std::cout : file;
    if (cfg.format == "csv") {
        csv(os);
    } else {
        os << doc.dump(2) << '\n';
    }
}

json envelope(const std::string& command, const RunConfig& cfg) {
    return {{"command", command}, {"version", TOPVERT_VERSION}, {"config", cfg.echo()}};
}

void emit_reports(const RunConfig& cfg, json doc, const std::vector<CheckReport>& reports) {
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    doc["reports"] = arr;
    doc["status"] = status_name(overall(reports));
    emit(cfg, doc, [&](std::ostream& os) {
        os << "identity,status,pairs_checked,failures\n";
        for (const auto& r : reports)
            os << csv_field(r.identity) << ',' << status_name(r.status) << ',' << r.pairs_checked << ','
               << r.failure_count << '\n';
    });
}

int cmd_vertex(const RunConfig& cfg) {
    if (cfg.mu.empty()) throw UsageError("vertex needs --mu");
    if (!cfg.check.empty() && cfg.check != "theorem1") throw UsageError("--check supports only theorem1");
    PartitionTriple mu;
    try {
        mu = parse_triple(cfg.mu);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const VertexConfig vc = cfg.vertex();
    const QScalar c = vertex_C(mu, vc.window);
    const QScalar ct = vertex_C_tilde(mu, vc.window);
    CheckReport t1;
    t1.identity = "theorem1";
    t1.compare(triple_key(mu), lllz_coefficient(mu, vc.window), ct, vc.min_width, vc.compare_window);
    std::vector<CheckReport> checks = {t1};

    int lattice = output_lattice(cfg, 1);
    std::optional<QScalar> via_fock;
    if (!cfg.tau.empty()) {
        const Rational tau = parse_tau(cfg.tau);
        lattice = output_lattice(cfg, lattice_for_tau(tau));
        FockContext ctx(cfg.fock(), cfg.jobs);
        via_fock = vertex_C_via_fock(ctx, mu, tau);
        CheckReport f;
        f.identity = "fock_route";
        const int L = via_fock->lattice();
        f.compare(triple_key(mu), c.relattice(L), *via_fock, vc.min_width * L, vc.compare_window * L);
        checks.push_back(f);
    }
    json doc = envelope("vertex", cfg);
    doc["mu"] = {partition_to_json(mu.a), partition_to_json(mu.b), partition_to_json(mu.c)};
    doc["C"] = qscalar_to_json(c.relattice(lattice));
    doc["tildeC"] = qscalar_to_json(ct.relattice(lattice));
    doc["theorem1"] = status_name(t1.status);
    if (via_fock) {
        doc["C_via_fock"] = qscalar_to_json(via_fock->relattice(lattice));
        doc["fock_route"] = status_name(checks.back().status);
    }
    emit(cfg, doc, [&](std::ostream& os) {
        os << "field,lattice_denom,exp,coeff,valid_upto\n";
        csv_series_rows(os, "C", c.relattice(lattice));
        csv_series_rows(os, "tildeC", ct.relattice(lattice));
        if (via_fock) csv_series_rows(os, "C_via_fock", via_fock->relattice(lattice));
    });
    return exit_code(overall(checks));
}

using Suite = std::function<std::vector<CheckReport>(const RunConfig&)>;

std::vector<CheckReport> suite_theorem1(const RunConfig& cfg) {
    const int w = cfg.weight_or(4);
    const int b = std::min(w, 3);
    FockContext ctx(cfg.fock(), cfg.jobs);
    return {verify_theorem1(w, cfg.vertex()),
            verify_W_equals_expG(Rational(1), {b, b, b}, cfg.hodge()),
            verify_W_equals_expG(Rational(2), {b, b, b}, cfg.hodge()),
            verify_tau_independence(ctx, std::min(w, 3), {Rational(1), Rational(2), Rational(1, 2)})};
}

std::vector<CheckReport> suite_cyclic(const RunConfig& cfg) {
    const int w = cfg.weight_or(5);
    return {verify_cyclic(w, cfg.vertex()), verify_two_leg_chain(std::min(w, 4), cfg.vertex())};
}

std::vector<CheckReport> suite_shift(const RunConfig& cfg) {
    FockContext ctx(cfg.fock(), cfg.jobs);
    ShiftSweep sweep;
    sweep.max_weight = cfg.weight_or(4);
    std::vector<CheckReport> out;
    for (auto kind : all_shift_kinds()) out.push_back(sweep_shift_symmetry(ctx, kind, sweep));
    out.push_back(check_quantum_torus(ctx, 2, sweep.max_weight));
    out.push_back(check_gamma_adjointness(ctx, sweep.max_weight));
    out.push_back(check_self_adjoint(ctx, sweep.max_weight));
    for (const auto& tau : sweep.taus) out.push_back(check_transpose_property(ctx, tau, 2, 3));
    return out;
}

std::vector<CheckReport> suite_factorization(const RunConfig& cfg) {
    FockContext ctx(cfg.fock(), cfg.jobs);
    const int w = cfg.weight_or(3);
    const int d = cfg.degree_or(3);
    std::vector<int> ns = {1, 2, 3};
    if (cfg.N) ns = {*cfg.N};
    std::vector<CheckReport> out;
    for (int n : ns)
        for (bool primed : {false, true}) out.push_back(check_factorization(ctx, n, primed, d, w));
    for (int n : ns)
        if (n <= 2) out.push_back(check_shifted_flow(ctx, n, 1, w));
    for (const auto& alpha : partitions_up_to(2)) out.push_back(check_exchange_formula(ctx, alpha, w));
    return out;
}

std::vector<CheckReport> suite_reductions(const RunConfig& cfg) {
    const int b = cfg.weight_or(3);
    FockContext ctx(cfg.fock(), cfg.jobs);
    std::vector<int> ns = {1, 2};
    if (cfg.N) ns = {*cfg.N};
    std::vector<CheckReport> out;
    out.push_back(verify_reduction_C_all(std::min(b + 1, 4), cfg.vertex()));
    for (int n : ns) out.push_back(verify_reduction_tauN(n, {b, b, b}, cfg.hodge()));
    out.push_back(verify_quadratic_expansion(cfg.degree_or(6)));
    out.push_back(verify_schur_expansion_prop43(ctx, 2, cfg.hodge()));
    return out;
}

std::vector<CheckReport> suite_kp(const RunConfig& cfg) {
    std::vector<int> ns = {1, 2};
    if (cfg.N) ns = {*cfg.N};
    KpConfig kc;
    kc.degree = cfg.degree_or(6);
    kc.hodge = cfg.hodge();
    std::vector<CheckReport> out;
    for (int n : ns) out.push_back(verify_kp(n, kc));
    return out;
}

OracleBounds oracle_bounds(const RunConfig& cfg) {
    OracleBounds b;
    b.window = cfg.window;
    b.min_width = cfg.min_width;
    b.jobs = cfg.jobs;
    if (cfg.weight) b.lllz_weight = *cfg.weight;
    if (cfg.degree) b.character_degree = *cfg.degree;
    return b;
}

std::vector<CheckReport> suite_oracles(const RunConfig& cfg) {
    const OracleBounds b = oracle_bounds(cfg);
    std::vector<CheckReport> out;
    const std::string& s = cfg.scope;
    if (s == "all" || s == "a" || s == "characters") out.push_back(oracle_characters(b));
    if (s == "all" || s == "ribbons") out.push_back(oracle_ribbons(b));
    if (s == "all" || s == "b" || s == "lr") out.push_back(oracle_lr(b));
    if (s == "all" || s == "c" || s == "h-tail") out.push_back(oracle_h_tail(b));
    if (s == "all" || s == "d" || s == "fock") out.push_back(oracle_fock_window(b));
    if (s == "all" || s == "e" || s == "lllz") out.push_back(oracle_lllz_unpruned(b));
    if (s == "all" || s == "controls") out.push_back(mutation_controls(cfg.jobs));
    if (out.empty()) throw UsageError("unknown --scope '" + s + "'");
    return out;
}

const std::vector<std::pair<std::string, Suite>>& suites() {
    static const std::vector<std::pair<std::string, Suite>> s = {
        {"theorem1", suite_theorem1},       {"cyclic", suite_cyclic},
        {"shift", suite_shift},             {"factorization", suite_factorization},
        {"reductions", suite_reductions},   {"kp", suite_kp},
        {"oracles", suite_oracles},
    };
    return s;
}

int cmd_verify(const RunConfig& cfg, const std::string& suite) {
    std::vector<CheckReport> reports;
    for (const auto& [name, run] : suites()) {
        if (suite == name || (suite == "all" && (name != "oracles" || cfg.full))) {
            auto r = run(cfg);
            reports.insert(reports.end(), r.begin(), r.end());
        }
    }
    json doc = envelope("verify", cfg);
    doc["suite"] = suite;
    emit_reports(cfg, doc, reports);
    return exit_code(overall(reports));
}

int cmd_series(const RunConfig& cfg, const std::string& kind) {
    json doc = envelope("series", cfg);
    doc["kind"] = kind;
    if (kind == "tau") {
        const int n = cfg.N.value_or(1);
        if (n < 1) throw UsageError("--N must be at least 1");
        KpConfig kc;
        kc.degree = cfg.degree_or(6);
        kc.hodge = cfg.hodge();
        const TauSeries T = build_tau(n, kc);
        const int lattice = output_lattice(cfg, T.lattice);
        SeriesPoly<QScalar> body = T.body.same_shape();
        for (const auto& [m, c] : T.body.terms()) body.add(m, c.relattice(lattice));
        doc["N"] = n;
        doc["degree"] = kc.degree;
        doc["lattice_denom"] = lattice;
        doc["series"] = series_to_json(body);
        emit(cfg, doc, [&](std::ostream& os) {
            os << "monomial,lattice_denom,exp,coeff,valid_upto\n";
            for (const auto& [m, c] : body.terms()) csv_series_rows(os, monomial_key(m), c);
        });
        return kExitPass;
    }
    const Rational tau = parse_tau(cfg.tau.empty() ? "1" : cfg.tau);
    const int b = cfg.weight_or(2);
    const FamilyCutoffs cutoffs = {b, b, b};
    const TriSeries s =
        kind == "W" ? W_coefficients(tau, cutoffs, cfg.hodge()) : expG_coefficients(tau, cutoffs, cfg.hodge());
    const int lattice = output_lattice(cfg, lattice_for_tau(tau));
    TriSeries out = s.same_shape();
    for (const auto& [m, c] : s.terms()) out.add(m, c.relattice(lattice));
    doc["tau"] = tau.str();
    doc["cutoffs"] = cutoffs;
    doc["lattice_denom"] = lattice;
    doc["basis"] = "power_sums";
    doc["terms"] = series_keyed_json(out);
    emit(cfg, doc, [&](std::ostream& os) {
        os << "monomial,lattice_denom,exp,coeff,valid_upto\n";
        for (const auto& [m, c] : out.terms()) csv_series_rows(os, monomial_key(m), c);
    });
    return kExitPass;
}

int cmd_oracles(const RunConfig& cfg) {
    json doc = envelope("oracles", cfg);
    doc["scope"] = cfg.scope;
    const auto reports = suite_oracles(cfg);
    emit_reports(cfg, doc, reports);
    return exit_code(overall(reports));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact checks for the topological vertex, three-partition Hodge series and KP reduction"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config", "", "TOML or INI file with flag defaults");

    RunConfig cfg;
    app.add_option("--lattice-denom", cfg.lattice_denom, "Output exponent lattice L (q^{1/(2L)}); 0 picks from tau");
    app.add_option("--window", cfg.window, "Comparison window in lattice units");
    app.add_option("--min-width", cfg.min_width, "Smallest comparison width that counts as a verdict");
    app.add_option("--fock-cutoff", cfg.fock_cutoff, "Largest intermediate partition weight in operator products");
    app.add_option("--jobs", cfg.jobs, "Worker threads");
    app.add_option("--out", cfg.out, "Write output to this file instead of stdout");
    app.add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--mutate", cfg.mutate, "Negative-control mutant (testing only)");
    app.add_flag("--full", cfg.full, "Include the oracle suite in 'verify all'");
    app.add_option("--tau", cfg.tau, "Framing parameter tau, integer or num/den");
    app.add_option("--N", cfg.N, "Reduction order N");
    app.add_option("--weight", cfg.weight, "Weight bound (suite specific)");
    app.add_option("--degree", cfg.degree, "Degree bound (suite specific)");

    auto* vertex = app.add_subcommand("vertex", "Vertex coefficient C, tildeC and the closed-form comparison");
    vertex->add_option("--mu", cfg.mu, "Partition triple as JSON, e.g. [[2],[1],[]]");
    vertex->add_option("--check", cfg.check, "Comparison whose verdict sets the exit code (theorem1)");

    std::string suite = "all";
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("suite", suite, "theorem1|cyclic|shift|factorization|reductions|kp|oracles|all")
        ->check(CLI::IsMember(
            {"theorem1", "cyclic", "shift", "factorization", "reductions", "kp", "oracles", "all"}));
    verify->add_option("--scope", cfg.scope, "Oracle scope: all|characters|ribbons|lr|h-tail|fock|lllz|controls");

    std::string kind;
    auto* series = app.add_subcommand("series", "Emit a truncated generating series");
    series->add_option("kind", kind, "W|expG|tau")->required()->check(CLI::IsMember({"W", "expG", "tau"}));

    auto* oracles = app.add_subcommand("oracles", "Run the brute-force oracle suite");
    oracles->add_option("--scope", cfg.scope, "all|characters|ribbons|lr|h-tail|fock|lllz|controls");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitPass : kExitUsage;
    }

    try {
        cfg.validate();
        set_active_mutation(*parse_mutation(cfg.mutate));
        if (vertex->parsed()) return cmd_vertex(cfg);
        if (verify->parsed()) return cmd_verify(cfg, suite);
        if (series->parsed()) return cmd_series(cfg, kind);
        if (oracles->parsed()) return cmd_oracles(cfg);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const InconclusiveComparison& e) {
        std::cerr << "inconclusive: " << e.what() << '\n';
        return kExitInconclusive;
    } catch (const LatticeError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
