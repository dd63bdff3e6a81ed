// Command line driver: capacity and measurement optimizations for qubit
// channels in Bloch affine form, with JSON/CSV reports.
//
// Exit codes: 0 success, 1 reference mismatch, 2 invalid configuration,
// 3 complete-positivity violation, 4 crossing bracket failure.

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qcap/capacity.hpp"
#include "qcap/choi.hpp"
#include "qcap/json_io.hpp"
#include "qcap/shannon.hpp"
#include "reproduce.hpp"

namespace {

using nlohmann::json;
using namespace qcap;

std::string fmt_double(double v) {
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

void write_output(const json& cfg, const std::string& text) {
    if (cfg.contains("out")) {
        std::ofstream f(cfg.at("out").get<std::string>());
        if (!f) throw std::invalid_argument("cannot open output file");
        f << text;
    } else {
        std::cout << text;
    }
}

std::string format_of(const json& cfg, const char* fallback) {
    return cfg.contains("format") ? cfg.at("format").get<std::string>() : fallback;
}

std::uint64_t seed_of(const json& cfg) {
    return cfg.contains("seed") ? cfg.at("seed").get<std::uint64_t>() : 0;
}

OptimizeOptions opts_of(const json& cfg) {
    OptimizeOptions o;
    if (cfg.contains("random_starts")) o.random_starts = cfg.at("random_starts").get<int>();
    if (cfg.contains("max_iter")) o.max_iter = cfg.at("max_iter").get<int>();
    return o;
}

json envelope(const json& cfg, const char* task, const QubitChannel& ch) {
    return json{{"schema", 1},
                {"task", task},
                {"seed", seed_of(cfg)},
                {"channel", channel_to_json(ch)}};
}

PlaneRestriction plane_of(const json& cfg) {
    if (!cfg.contains("plane")) return PlaneRestriction::none;
    std::string p = cfg.at("plane").get<std::string>();
    if (p == "xz") return PlaneRestriction::xz;
    if (p == "none" || p.empty()) return PlaneRestriction::none;
    throw std::invalid_argument("unknown plane restriction: " + p);
}

int run_capacity(const json& cfg) {
    QubitChannel ch = channel_from_json(cfg.at("channel"));
    json rep = envelope(cfg, "capacity", ch);
    if (cfg.contains("n")) {
        auto r = optimize_n_state(ch, cfg.at("n").get<int>(), plane_of(cfg), seed_of(cfg),
                                  opts_of(cfg));
        rep["result"] = capacity_result_to_json(r);
    } else {
        auto g = optimize_global(ch, seed_of(cfg), opts_of(cfg));
        rep["result"] = capacity_result_to_json(g.best);
        rep["by_n"] = json{{"2", round_sig9(g.value_by_n[0])},
                           {"3", round_sig9(g.value_by_n[1])},
                           {"4", round_sig9(g.value_by_n[2])}};
        rep["three_state_advantage"] = g.three_state_advantage;
    }
    write_output(cfg, rep.dump(2) + "\n");
    return 0;
}

int run_pair(const json& cfg, const char* task) {
    QubitChannel ch = channel_from_json(cfg.at("channel"));
    auto r = std::string(task) == "vertical" ? optimize_vertical(ch) : optimize_horizontal(ch);
    json rep = envelope(cfg, task, ch);
    rep["result"] = capacity_result_to_json(r);
    write_output(cfg, rep.dump(2) + "\n");
    return 0;
}

int run_shannon(const json& cfg) {
    QubitChannel ch = channel_from_json(cfg.at("channel"));
    bool ext = cfg.contains("extended") && cfg.at("extended").get<bool>();
    auto r = ext ? optimize_shannon_extended(ch, seed_of(cfg)) : optimize_shannon(ch, seed_of(cfg));
    json rep = envelope(cfg, "shannon", ch);
    rep["result"] = shannon_result_to_json(r);
    rep["extended"] = ext;
    write_output(cfg, rep.dump(2) + "\n");
    return 0;
}

int run_crossing(const json& cfg) {
    std::string fam = cfg.at("family").get<std::string>();
    double mu = cfg.at("mu").get<double>();
    std::function<QubitChannel(double)> family;
    if (fam == "stretched")
        family = [mu](double s) { return make_stretched(mu, s); };
    else if (fam == "squeezed")
        family = [mu](double q) { return make_squeezed(mu, q); };
    else
        throw std::invalid_argument("crossing supports the stretched and squeezed families");
    double lo = cfg.at("lo").get<double>(), hi = cfg.at("hi").get<double>();
    double tol = cfg.contains("tol") ? cfg.at("tol").get<double>() : 1e-6;
    double x = find_crossing(family, lo, hi, tol);
    QubitChannel ch = family(x);
    json rep = envelope(cfg, "crossing", ch);
    rep["family"] = fam;
    rep["mu"] = mu;
    rep["parameter"] = round_sig9(x);
    rep["vertical"] = capacity_result_to_json(optimize_vertical(ch));
    rep["horizontal"] = capacity_result_to_json(optimize_horizontal(ch));
    write_output(cfg, rep.dump(2) + "\n");
    return 0;
}

int run_ellipse(const json& cfg) {
    QubitChannel ch = channel_from_json(cfg.at("channel"));
    int samples = cfg.contains("samples") ? cfg.at("samples").get<int>() : 256;
    if (samples < 16) throw std::invalid_argument("ellipse needs at least 16 samples");
    auto g = optimize_global(ch, seed_of(cfg), opts_of(cfg));
    std::string fmt = format_of(cfg, "csv");
    if (fmt == "csv") {
        std::ostringstream out;
        out << "x,z,role\n";
        for (int i = 0; i < samples; ++i) {
            double a = 2.0 * M_PI * i / samples;
            BlochVector b = ch.apply({std::sin(a), 0.0, std::cos(a)});
            out << fmt_double(b.x) << "," << fmt_double(b.z) << ",ellipse\n";
        }
        for (const auto& m : g.best.ensemble.members) {
            BlochVector b = ch.apply(m.state);
            out << fmt_double(b.x) << "," << fmt_double(b.z) << ",ensemble\n";
        }
        write_output(cfg, out.str());
        return 0;
    }
    if (fmt != "json") throw std::invalid_argument("ellipse formats: csv, json");
    json pts = json::array();
    for (int i = 0; i < samples; ++i) {
        double a = 2.0 * M_PI * i / samples;
        BlochVector b = ch.apply({std::sin(a), 0.0, std::cos(a)});
        pts.push_back({{"x", b.x}, {"z", b.z}, {"role", "ellipse"}});
    }
    for (const auto& m : g.best.ensemble.members) {
        BlochVector b = ch.apply(m.state);
        pts.push_back({{"x", b.x}, {"z", b.z}, {"role", "ensemble"}});
    }
    json rep = envelope(cfg, "ellipse", ch);
    rep["points"] = pts;
    rep["result"] = capacity_result_to_json(g.best);
    write_output(cfg, rep.dump(2) + "\n");
    return 0;
}

int run_check_cp(const json& cfg) {
    QubitChannel ch = channel_from_json(cfg.at("channel"), /*checked=*/false);
    auto eigs = choi_eigenvalues(choi_matrix(ch));
    double tol = cfg.contains("cp_tol") ? cfg.at("cp_tol").get<double>() : 1e-10;
    bool cp = eigs[0] >= -tol;
    json rep = envelope(cfg, "check-cp", ch);
    rep["cp"] = cp;
    rep["choi_eigenvalues"] =
        json::array({round_sig9(eigs[0]), round_sig9(eigs[1]), round_sig9(eigs[2]),
                     round_sig9(eigs[3])});
    write_output(cfg, rep.dump(2) + "\n");
    return cp ? 0 : 3;
}

int run_reproduce(const json& cfg) {
    auto rows = qcap_cli::run_reproduce_rows(opts_of(cfg), seed_of(cfg));
    bool all = true;
    for (const auto& r : rows) all = all && r.pass;
    std::string fmt = format_of(cfg, "text");
    if (fmt == "json") {
        json jr = json::array();
        for (const auto& r : rows) {
            json row{{"name", r.name},
                     {"expected", r.expected},
                     {"tolerance", r.tolerance},
                     {"observed", round_sig9(r.observed)},
                     {"pass", r.pass}};
            if (!r.note.empty()) row["note"] = r.note;
            jr.push_back(row);
        }
        json rep{{"schema", 1}, {"task", "reproduce"}, {"seed", seed_of(cfg)},
                 {"rows", jr}, {"pass", all}};
        write_output(cfg, rep.dump(2) + "\n");
    } else if (fmt == "text") {
        std::ostringstream out;
        char line[160];
        std::snprintf(line, sizeof(line), "%-28s %12s %12s %10s  %s\n", "name", "expected",
                      "observed", "tol", "status");
        out << line;
        for (const auto& r : rows) {
            std::snprintf(line, sizeof(line), "%-28s %12.6f %12.6f %10.0e  %s%s\n",
                          r.name.c_str(), r.expected, r.observed, r.tolerance,
                          r.pass ? "pass" : "FAIL", r.note.empty() ? "" : "  *");
            out << line;
        }
        for (const auto& r : rows)
            if (!r.note.empty()) out << "* " << r.name << ": " << r.note << "\n";
        out << (all ? "all rows pass\n" : "some rows FAILED\n");
        write_output(cfg, out.str());
    } else {
        throw std::invalid_argument("reproduce formats: text, json");
    }
    return all ? 0 : 1;
}

int execute(const json& cfg) {
    std::string task = cfg.at("task").get<std::string>();
    if (task == "capacity") return run_capacity(cfg);
    if (task == "vertical" || task == "horizontal") return run_pair(cfg, task.c_str());
    if (task == "shannon") return run_shannon(cfg);
    if (task == "crossing") return run_crossing(cfg);
    if (task == "ellipse") return run_ellipse(cfg);
    if (task == "check-cp") return run_check_cp(cfg);
    if (task == "reproduce") return run_reproduce(cfg);
    throw std::invalid_argument("unknown task: " + task);
}

// Shared channel flags, assembled into the same JSON shape the config file
// uses so both entry points hit identical code.
struct ChannelFlags {
    std::string family;
    double mu = 0.0, s = 0.0, q = 0.0, t1 = 0.0, t2 = 0.0, t3 = 0.0;
    std::vector<double> lambda, shift;
    CLI::Option *mu_opt = nullptr, *s_opt = nullptr, *q_opt = nullptr;
    CLI::Option *t1_opt = nullptr, *t2_opt = nullptr, *t3_opt = nullptr;
    CLI::Option *lambda_opt = nullptr, *shift_opt = nullptr, *family_opt = nullptr;

    void attach(CLI::App* app) {
        family_opt = app->add_option("--family", family,
                                     "identity, shifted_depolarizing, amplitude_damping, "
                                     "stretched, squeezed, qc, cq");
        mu_opt = app->add_option("--mu", mu, "family parameter mu");
        s_opt = app->add_option("--s", s, "stretched transverse scale");
        q_opt = app->add_option("--q", q, "squeezed transverse scale");
        t1_opt = app->add_option("--t1", t1, "shift x component (cq)");
        t2_opt = app->add_option("--t2", t2, "shift y component (cq)");
        t3_opt = app->add_option("--t3", t3, "shift z component (qc, cq)");
        lambda_opt = app->add_option("--lambda", lambda, "diagonal scaling, three values")
                         ->delimiter(',')
                         ->expected(3);
        shift_opt = app->add_option("--shift", shift, "affine shift, three values")
                        ->delimiter(',')
                        ->expected(3);
    }

    json to_json() const {
        if (family_opt->count()) {
            json j{{"family", family}};
            if (mu_opt->count()) j["mu"] = mu;
            if (s_opt->count()) j["s"] = s;
            if (q_opt->count()) j["q"] = q;
            if (t1_opt->count()) j["t1"] = t1;
            if (t2_opt->count()) j["t2"] = t2;
            if (t3_opt->count()) j["t3"] = t3;
            return j;
        }
        if (lambda_opt->count()) {
            json j{{"lambda", lambda}};
            if (shift_opt->count()) j["shift"] = shift;
            return j;
        }
        throw std::invalid_argument("no channel given: use --family or --lambda/--shift");
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"capacities of qubit channels in Bloch affine form"};
    app.require_subcommand(1);

    struct Common {
        std::uint64_t seed = 0;
        std::string out, format;
        int random_starts = -1, max_iter = -1;
        CLI::Option *seed_opt, *out_opt, *format_opt, *rs_opt, *mi_opt;
        void attach(CLI::App* sub) {
            seed_opt = sub->add_option("--seed", seed, "optimizer seed");
            out_opt = sub->add_option("--out", out, "write the report to this file");
            format_opt = sub->add_option("--format", format, "output format");
            rs_opt = sub->add_option("--random-starts", random_starts,
                                     "random optimizer starts (override)");
            mi_opt = sub->add_option("--max-iter", max_iter,
                                    "simplex iteration budget (override)");
        }
        void fill(json& cfg) const {
            if (seed_opt->count()) cfg["seed"] = seed;
            if (out_opt->count()) cfg["out"] = out;
            if (format_opt->count()) cfg["format"] = format;
            if (rs_opt->count()) cfg["random_starts"] = random_starts;
            if (mi_opt->count()) cfg["max_iter"] = max_iter;
        }
    };

    struct Sub {
        CLI::App* app = nullptr;
        ChannelFlags ch;
        Common common;
    };

    auto make_sub = [&](const char* name, const char* desc, bool with_channel) {
        Sub s;
        s.app = app.add_subcommand(name, desc);
        if (with_channel) s.ch.attach(s.app);
        s.common.attach(s.app);
        return s;
    };

    Sub cap = make_sub("capacity", "unrestricted capacity (n = 2, 3, 4 search)", true);
    int cap_n = 0;
    std::string cap_plane;
    auto* cap_n_opt = cap.app->add_option("--n", cap_n, "fix the ensemble size");
    cap.app->add_option("--plane", cap_plane, "restrict states to a plane: xz");

    Sub ver = make_sub("vertical", "best ensemble on the symmetry axis", true);
    Sub hor = make_sub("horizontal", "best equiprobable transverse pair", true);

    Sub sha = make_sub("shannon", "single-letter Shannon capacity", true);
    bool sha_ext = false;
    sha.app->add_flag("--extended", sha_ext, "three-outcome diagnostic search");

    Sub cro = make_sub("crossing", "parameter where vertical and horizontal tie", false);
    std::string cro_family;
    double cro_mu = 0.0, cro_lo = 0.0, cro_hi = 0.0, cro_tol = 1e-6;
    cro.app->add_option("--family", cro_family, "stretched or squeezed")->required();
    cro.app->add_option("--mu", cro_mu, "fixed mu")->required();
    cro.app->add_option("--lo", cro_lo, "bracket lower end")->required();
    cro.app->add_option("--hi", cro_hi, "bracket upper end")->required();
    cro.app->add_option("--tol", cro_tol, "bisection width");

    Sub ell = make_sub("ellipse", "output-boundary section and optimal outputs", true);
    int ell_samples = 256;
    ell.app->add_option("--samples", ell_samples, "boundary sample count");

    Sub chk = make_sub("check-cp", "Choi eigenvalues and complete positivity", true);
    double chk_tol = 1e-10;
    chk.app->add_option("--cp-tol", chk_tol, "eigenvalue tolerance");

    Sub rep = make_sub("reproduce", "compare against the built-in reference table", false);

    auto* run = app.add_subcommand("run", "execute a task from a JSON config file");
    std::string run_config;
    run->add_option("--config", run_config, "config file path")->required();

    try {
        app.parse(argc, argv);

        json cfg;
        if (run->parsed()) {
            std::ifstream f(run_config);
            if (!f) throw std::invalid_argument("cannot open config file: " + run_config);
            cfg = json::parse(f);
        } else if (cap.app->parsed()) {
            cfg = {{"task", "capacity"}, {"channel", cap.ch.to_json()}};
            if (cap_n_opt->count()) cfg["n"] = cap_n;
            if (!cap_plane.empty()) cfg["plane"] = cap_plane;
            cap.common.fill(cfg);
        } else if (ver.app->parsed()) {
            cfg = {{"task", "vertical"}, {"channel", ver.ch.to_json()}};
            ver.common.fill(cfg);
        } else if (hor.app->parsed()) {
            cfg = {{"task", "horizontal"}, {"channel", hor.ch.to_json()}};
            hor.common.fill(cfg);
        } else if (sha.app->parsed()) {
            cfg = {{"task", "shannon"}, {"channel", sha.ch.to_json()}, {"extended", sha_ext}};
            sha.common.fill(cfg);
        } else if (cro.app->parsed()) {
            cfg = {{"task", "crossing"}, {"family", cro_family}, {"mu", cro_mu},
                   {"lo", cro_lo},       {"hi", cro_hi},         {"tol", cro_tol}};
            cro.common.fill(cfg);
        } else if (ell.app->parsed()) {
            cfg = {{"task", "ellipse"}, {"channel", ell.ch.to_json()}, {"samples", ell_samples}};
            ell.common.fill(cfg);
        } else if (chk.app->parsed()) {
            cfg = {{"task", "check-cp"}, {"channel", chk.ch.to_json()}, {"cp_tol", chk_tol}};
            chk.common.fill(cfg);
        } else if (rep.app->parsed()) {
            cfg = {{"task", "reproduce"}};
            rep.common.fill(cfg);
        }
        return execute(cfg);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const CpViolationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const BracketError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const NoSolutionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
