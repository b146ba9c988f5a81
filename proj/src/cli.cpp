#include "sftirr/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sftirr/analysis.hpp"
#include "sftirr/io.hpp"
#include "sftirr/verify.hpp"

namespace sftirr {

namespace {

using nlohmann::json;

constexpr int kFormatVersion = 1;

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

json config_json(const RunConfig& cfg) {
    return json{{"command", cfg.command},
                {"sft", cfg.sft_path},
                {"q", cfg.q},
                {"seed", cfg.seed},
                {"kmin", cfg.kmin},
                {"kmax", cfg.kmax},
                {"m", cfg.m},
                {"times", cfg.times},
                {"count", cfg.count},
                {"size", cfg.size},
                {"tol", cfg.tol},
                {"suite", cfg.suite},
                {"out", cfg.out_path}};
}

json word_json(const Word& w) {
    json arr = json::array();
    for (Symbol s : w) arr.push_back(static_cast<int>(s));
    return arr;
}

json report_shell(const RunConfig& cfg) {
    return json{{"format_version", kFormatVersion},
                {"config", config_json(cfg)},
                {"seed_scheme",
                 "SplitMix64(seed); sub-seed k is output k of the stream"}};
}

int cmd_analyze(const RunConfig& cfg, std::ostream& out) {
    Sft sft = load_sft(cfg.sft_path);
    json doc = report_shell(cfg);
    doc["d"] = sft.d;
    doc["aperiodic"] = check_aperiodic(sft);
    if (!doc["aperiodic"].get<bool>()) {
        out << doc.dump(2) << "\n";
        return 0;
    }
    SpectralData spec = dominant_eigendata(adjacency_matrix(sft));
    MarkovMeasure parry = parry_measure(sft, spec);
    doc["lambda"] = spec.lambda;
    doc["log_lambda"] = std::log(spec.lambda);
    doc["residual"] = spec.residual;
    doc["u"] = spec.u;
    doc["v"] = spec.v;
    doc["parry_matrix"] = parry.P;
    doc["stationary"] = parry.p;
    doc["entropy"] = markov_entropy(parry);
    out << doc.dump(2) << "\n";
    return 0;
}

int cmd_construct(const RunConfig& cfg, std::ostream& out) {
    Sft sft = load_sft(cfg.sft_path);
    WordSystem ws = build_word_system(sft);
    json doc = report_shell(cfg);
    doc["alpha"] = static_cast<int>(ws.alpha);
    doc["beta"] = word_json(ws.beta);
    doc["gamma"] = word_json(ws.gamma);
    doc["theta"] = word_json(ws.theta);
    doc["n0"] = ws.n0;
    doc["e"] = ws.e;
    doc["p"] = ws.p;
    doc["w"] = word_json(ws.w);
    doc["s"] = word_json(ws.s);
    doc["t"] = word_json(ws.t);
    doc["xi"] = word_json(ws.xi);
    doc["eta"] = word_json(ws.eta);
    doc["M"] = ws.M;
    out << doc.dump(2) << "\n";
    return 0;
}

int cmd_measures(const RunConfig& cfg, std::ostream& out) {
    Sft sft = load_sft(cfg.sft_path);
    WordSystem ws = build_word_system(sft);
    PotentialFamily pf(sft, ws);
    json doc = report_shell(cfg);
    auto eq = pf.mu_q(cfg.q);
    doc["rho"] = eq->spectral.lambda;
    doc["pressure"] = eq->pressure;
    doc["Phi"] = eq->Phi;
    doc["stationary"] = eq->measure.p;
    doc["entropy"] = markov_entropy(eq->measure);
    doc["potential_pair"] = {static_cast<int>(ws.alpha),
                             static_cast<int>(ws.theta[0])};
    doc["parry_xi"] = pf.parry_xi_measure();
    if (cfg.q > 0.0) {
        auto [mxi, meta] = pf.xi_eta_measures(cfg.q);
        doc["mu_xi"] = mxi;
        doc["mu_eta"] = meta;
        auto [f, g] = pf.gap_functions(cfg.q);
        doc["f"] = f;
        doc["g"] = g;
    }
    out << doc.dump(2) << "\n";
    return 0;
}

void write_csv(const RunConfig& cfg, const std::string& header,
               const std::vector<std::string>& rows) {
    std::ofstream file(cfg.out_path, std::ios::binary);
    if (!file) throw Error("IoError", "cannot open " + cfg.out_path);
    file << "# config " << config_json(cfg).dump() << " format_version "
         << kFormatVersion << "\n";
    file << header << "\n";
    for (const std::string& row : rows) file << row << "\n";
    if (!file) throw Error("IoError", "failed writing " + cfg.out_path);
}

int cmd_demo(const RunConfig& cfg, std::ostream& out) {
    Sft sft = load_sft(cfg.sft_path);
    PotentialFamily pf(sft, build_word_system(sft));
    OscillationReport report =
        oscillation_report(pf, cfg.q, cfg.seed, cfg.kmin, cfg.kmax);
    std::vector<std::string> rows;
    for (const auto& row : report.rows) {
        std::ostringstream os;
        os << row.n << "," << row.k << "," << row.parity << ","
           << fmt17(row.avg_phi_L) << "," << fmt17(row.avg_psi_x) << ","
           << fmt17(row.target_xi) << "," << fmt17(row.target_eta);
        rows.push_back(os.str());
    }
    write_csv(cfg, "n,k,parity,avg_phi_L,avg_psi_x,target_xi,target_eta",
              rows);
    json doc = report_shell(cfg);
    doc["rows"] = report.rows.size();
    doc["out"] = cfg.out_path;
    out << doc.dump(2) << "\n";
    return 0;
}

int cmd_slln(const RunConfig& cfg, std::ostream& out) {
    Sft sft = load_sft(cfg.sft_path);
    PotentialFamily pf(sft, build_word_system(sft));
    SllnReport report =
        slln_estimate(pf, cfg.q, cfg.seed, cfg.m, cfg.times);
    std::vector<std::string> rows;
    for (const auto& row : report.rows) {
        std::ostringstream os;
        os << row.n << "," << fmt17(row.estimate) << ","
           << fmt17(row.target);
        rows.push_back(os.str());
    }
    write_csv(cfg, "n,estimate,target", rows);
    json doc = report_shell(cfg);
    doc["rows"] = report.rows.size();
    doc["out"] = cfg.out_path;
    out << doc.dump(2) << "\n";
    return 0;
}

int cmd_family(const RunConfig& cfg, std::ostream& out) {
    Sft sft = load_sft(cfg.sft_path);
    PotentialFamily pf(sft, build_word_system(sft));
    std::vector<ParameterFamily> families =
        independent_family(pf, cfg.count, cfg.size, cfg.tol);
    DisjointnessReport disjoint = disjointness_check(families);
    json doc = report_shell(cfg);
    doc["branch"] = pf.branch() == GapBranch::Xi ? "xi" : "eta";
    doc["max_gap"] = pf.max_gap();
    json fams = json::array();
    for (const auto& fam : families) {
        fams.push_back(json{{"prime", fam.prime},
                            {"multiplier", fam.multiplier},
                            {"a", fam.a},
                            {"m0", fam.m0},
                            {"ms", fam.ms},
                            {"epsilons", fam.epsilons},
                            {"qs", fam.qs},
                            {"targets", fam.targets}});
    }
    doc["families"] = fams;
    json collisions = json::array();
    for (const auto& c : disjoint.collisions)
        collisions.push_back(json{{"kind", c.kind},
                                  {"family_a", c.family_a},
                                  {"member_a", c.member_a},
                                  {"family_b", c.family_b},
                                  {"member_b", c.member_b},
                                  {"detail", c.detail}});
    doc["collisions"] = collisions;
    doc["disjoint"] = disjoint.disjoint();
    out << doc.dump(2) << "\n";
    return disjoint.disjoint() ? 0 : 1;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    Sft sft = load_sft(cfg.sft_path);
    std::vector<SuiteReport> suites = run_verify(sft, cfg.suite, cfg.seed);
    json doc = report_shell(cfg);
    json suites_json = json::array();
    json failures = json::array();
    int checks = 0;
    for (const auto& suite : suites) {
        json items = json::array();
        for (const auto& item : suite.report.items) {
            ++checks;
            items.push_back(json{{"name", item.name},
                                 {"pass", item.pass},
                                 {"detail", item.detail}});
            if (!item.pass)
                failures.push_back(json{{"suite", suite.suite},
                                        {"name", item.name},
                                        {"detail", item.detail}});
        }
        suites_json.push_back(json{{"suite", suite.suite}, {"items", items}});
    }
    doc["suites"] = suites_json;
    doc["checks"] = checks;
    doc["failures"] = failures;
    doc["pass"] = failures.empty();
    out << doc.dump(2) << "\n";
    return failures.empty() ? 0 : 1;
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        if (cfg.command == "analyze") return cmd_analyze(cfg, out);
        if (cfg.command == "construct") return cmd_construct(cfg, out);
        if (cfg.command == "measures") return cmd_measures(cfg, out);
        if (cfg.command == "demo") return cmd_demo(cfg, out);
        if (cfg.command == "slln") return cmd_slln(cfg, out);
        if (cfg.command == "family") return cmd_family(cfg, out);
        if (cfg.command == "verify") return cmd_verify(cfg, out);
        err << "unknown command: " << cfg.command << "\n";
        return 2;
    } catch (const Error& e) {
        err << e.name() << ": " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"subshift-of-finite-type irregular-set toolkit"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string times_csv;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--sft", cfg.sft_path, "SFT JSON file")->required();
        sub->add_option("--seed", cfg.seed, "master seed (default 7)");
        sub->add_option("--tol", cfg.tol, "tolerance (default 1e-10)");
    };

    CLI::App* analyze = app.add_subcommand("analyze", "spectral + Parry data");
    add_common(analyze);

    CLI::App* construct =
        app.add_subcommand("construct", "word system (w, s, t, xi, eta)");
    add_common(construct);

    CLI::App* measures =
        app.add_subcommand("measures", "equilibrium state of q phi");
    add_common(measures);
    measures->add_option("--q", cfg.q, "potential parameter (default 0)");

    CLI::App* demo = app.add_subcommand(
        "demo", "factorial-checkpoint oscillation report (CSV)");
    add_common(demo);
    CLI::Option* demo_q =
        demo->add_option("--q", cfg.q, "potential parameter (default 1)");
    demo->add_option("--kmin", cfg.kmin, "first checkpoint k (default 8)");
    demo->add_option("--kmax", cfg.kmax, "last checkpoint k (default 11)");
    demo->add_option("--out", cfg.out_path, "output CSV path")->required();

    CLI::App* slln = app.add_subcommand(
        "slln", "entropy estimates from cylinder measures along L(x) (CSV)");
    add_common(slln);
    CLI::Option* slln_q =
        slln->add_option("--q", cfg.q, "potential parameter (default 0.5)");
    slln->add_option("--m", cfg.m, "cylinder offset m (default 2)");
    slln->add_option("--times", times_csv,
                     "comma-separated checkpoints (default 7!..10!)");
    slln->add_option("--out", cfg.out_path, "output CSV path")->required();

    CLI::App* family = app.add_subcommand(
        "family", "rationally independent epsilon families and solved q");
    add_common(family);
    family->add_option("--count", cfg.count, "number of families (default 5)");
    family->add_option("--size", cfg.size, "members per family (default 8)");

    CLI::App* verify =
        app.add_subcommand("verify", "run module invariant suites");
    add_common(verify);
    verify->add_option("--suite", cfg.suite,
                       "all|sft|spectral|measures|construction|substitution|"
                       "analysis (default all)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << e.what() << "\n";
        return 2;
    }

    cfg.command = app.get_subcommands().front()->get_name();
    if (cfg.command == "demo" && demo_q->count() == 0) cfg.q = 1.0;
    if (cfg.command == "slln" && slln_q->count() == 0) cfg.q = 0.5;
    if (!times_csv.empty()) {
        std::istringstream is(times_csv);
        std::string tok;
        while (std::getline(is, tok, ',')) {
            try {
                cfg.times.push_back(std::stoll(tok));
            } catch (const std::exception&) {
                err << "bad --times entry: " << tok << "\n";
                return 2;
            }
        }
    }
    if (cfg.times.empty())
        cfg.times = {5040, 40320, 362880, 3628800};

    return run(cfg, out, err);
}

}  // namespace sftirr
