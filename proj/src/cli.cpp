#include "ttt/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <numbers>
#include <sstream>

#include "ttt/baxter.hpp"
#include "ttt/correspondence.hpp"
#include "ttt/enumerate.hpp"
#include "ttt/json_io.hpp"

namespace ttt {

namespace {

struct VerificationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Globals {
    bool json = false;
    long seed = 0;
    int threads = 1;
    double tol = 1e-9;
};

std::string fmt_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

Json provenance(const Globals& g) {
    return Json{{"seed", g.seed}, {"threads", g.threads}};
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    Json j;
    in >> j;
    return j;
}

// rational "p/q", or "re,im" for a complex literal
Scalar parse_scalar_arg(const std::string& s) {
    auto comma = s.find(',');
    if (comma != std::string::npos) {
        double re = std::stod(s.substr(0, comma));
        double im = std::stod(s.substr(comma + 1));
        return Scalar(Complex(re, im));
    }
    return Scalar::parse_rational(s);
}

class OutFile {
  public:
    OutFile(const std::string& path, std::ostream& fallback) {
        if (path == "-") {
            stream_ = &fallback;
        } else {
            file_ = std::make_unique<std::ofstream>(path);
            if (!*file_) throw std::invalid_argument("cannot open output file: " + path);
            stream_ = file_.get();
        }
    }
    std::ostream& get() { return *stream_; }
    bool is_file() const { return file_ != nullptr; }

  private:
    std::unique_ptr<std::ofstream> file_;
    std::ostream* stream_ = nullptr;
};

// ---- tile -------------------------------------------------------------------

void cmd_tile_count(int m, int n, const Globals& g, std::ostream& out) {
    BigInt count = count_tilings(DomainSpec(m, n));
    if (g.json) {
        emit(out, Json{{"command", "tile count"},
                       {"input", Json{{"m", m}, {"n", n}}},
                       {"result", Json{{"count", count.str()}}},
                       {"provenance",
                        Json{{"engine", "backtracking"}, {"pruning", true},
                             {"seed", g.seed}, {"threads", g.threads}}}});
    } else {
        out << count << "\n";
    }
}

void cmd_tile_enumerate(int m, int n, const std::string& pruning, std::optional<uint64_t> limit,
                        const std::string& out_path, const Globals& g, std::ostream& out) {
    EnumerationConfig cfg;
    cfg.pruning = pruning != "off";
    cfg.limit = limit;
    OutFile dest(out_path, out);
    uint64_t count = 0;
    enumerate_tilings(DomainSpec(m, n), cfg, [&](const Tiling& t) {
        dest.get() << tiling_to_json(t).dump() << "\n";
        ++count;
        return true;
    });
    if (!dest.is_file()) return;
    if (g.json) {
        emit(out, Json{{"command", "tile enumerate"},
                       {"input", Json{{"m", m}, {"n", n}, {"pruning", cfg.pruning}}},
                       {"result", Json{{"tilings", count}, {"out", out_path}}},
                       {"provenance", provenance(g)}});
    } else {
        out << "wrote " << count << " tilings to " << out_path << "\n";
    }
}

// ---- genfun -----------------------------------------------------------------

void cmd_genfun_eval(int m, int n, const std::string& weights_path, const std::string& mode,
                     const Globals& g, std::ostream& out) {
    DomainSpec d(m, n);
    WeightSystem w = weight_system_from_json(d, read_json_file(weights_path));
    ScalarMode want = mode == "complex" ? ScalarMode::ComplexFloat : ScalarMode::Exact;
    if (w.mode() != want)
        throw std::invalid_argument("weights file mode does not match --mode " + mode);
    Scalar f = f_eval(d, w);
    if (g.json) {
        emit(out, Json{{"command", "genfun eval"},
                       {"input", Json{{"m", m}, {"n", n}, {"weights", weights_path},
                                      {"mode", mode}}},
                       {"result", Json{{"F", scalar_to_json(f)}}},
                       {"provenance",
                        Json{{"engine", "enumeration"}, {"seed", g.seed},
                             {"threads", g.threads}}}});
    } else {
        out << f.str() << "\n";
    }
}

// ---- cycles -----------------------------------------------------------------

void cmd_cycles_classes(int m, int n, const std::string& out_path, const Globals& g,
                        std::ostream& out) {
    DomainSpec d(m, n);
    auto classes = class_partition(d, collect_tilings(d));
    OutFile dest(out_path, out);
    size_t total = 0;
    for (const auto& [a, rec] : classes) {
        dest.get() << class_record_to_json(rec).dump() << "\n";
        total += rec.members.size();
    }
    if (!dest.is_file()) return;
    if (g.json) {
        emit(out, Json{{"command", "cycles classes"},
                       {"input", Json{{"m", m}, {"n", n}}},
                       {"result", Json{{"classes", classes.size()}, {"tilings", total},
                                       {"out", out_path}}},
                       {"provenance", provenance(g)}});
    } else {
        out << "wrote " << classes.size() << " classes (" << total << " tilings) to " << out_path
            << "\n";
    }
}

// ---- tutte ------------------------------------------------------------------

void cmd_tutte_eval(const std::string& graph_path, const std::string& q_str,
                    const std::string& engine, const Globals& g, std::ostream& out) {
    Json gj = read_json_file(graph_path);
    WeightedGraph graph = graph_from_json(gj);
    Scalar Q = parse_scalar_arg(q_str);
    Scalar z;
    if (engine == "subset") {
        z = z_subset(graph, Q, g.threads);
    } else if (engine == "delcon") {
        z = z_delcon(graph, Q);
    } else if (engine == "transfer") {
        if (!gj.contains("grid"))
            throw std::invalid_argument(
                "transfer engine needs a grid graph file with a \"grid\":[m,n] field");
        int m = gj["grid"][0].get<int>(), n = gj["grid"][1].get<int>();
        GridGraph grid(m, n);
        if (grid.vertex_count() != graph.n ||
            grid.edge_count() != static_cast<int>(graph.edges.size()))
            throw std::invalid_argument("graph file does not match its declared grid shape");
        std::vector<Scalar> w;
        for (int e = 0; e < grid.edge_count(); ++e) {
            auto ed = grid.edge(e);
            const auto& fe = graph.edges[static_cast<size_t>(e)];
            if (fe.u != ed.u || fe.v != ed.v)
                throw std::invalid_argument("grid graph edges must be in canonical order");
            w.push_back(fe.w);
        }
        z = z_transfer(m, n, Q, w);
    } else {
        throw std::invalid_argument("unknown engine: " + engine);
    }
    if (g.json) {
        emit(out, Json{{"command", "tutte eval"},
                       {"input", Json{{"graph", graph_path}, {"Q", q_str}}},
                       {"result", Json{{"Z", scalar_to_json(z)}}},
                       {"provenance",
                        Json{{"engine", engine}, {"edges", graph.edges.size()},
                             {"seed", g.seed}, {"threads", g.threads}}}});
    } else {
        out << z.str() << "\n";
    }
}

void cmd_tutte_grid(int m, int n, const std::string& v_str, const std::string& out_path,
                    const Globals& g, std::ostream& out) {
    Scalar v = parse_scalar_arg(v_str);
    GridGraph grid(m, n);
    WeightedGraph graph(grid.vertex_count());
    for (int e = 0; e < grid.edge_count(); ++e) {
        auto ed = grid.edge(e);
        graph.add_edge(ed.u, ed.v, v);
    }
    Json j = graph_to_json(graph);
    j["grid"] = Json::array({m, n});
    OutFile dest(out_path, out);
    dest.get() << j.dump(2) << "\n";
    if (dest.is_file() && !g.json)
        out << "wrote " << m << "x" << n << " grid graph to " << out_path << "\n";
}

void cmd_tutte_classical(int m, int n, const std::string& x_str, const std::string& y_str,
                         const Globals& g, std::ostream& out) {
    auto graph = grid_basic_graph<Rational>(m, n, Rational(1));
    Rational x = parse_rational_string(x_str), y = parse_rational_string(y_str);
    Rational t = tutte_classical(graph, x, y);
    if (g.json) {
        emit(out, Json{{"command", "tutte classical"},
                       {"input", Json{{"grid", Json::array({m, n})}, {"x", x_str}, {"y", y_str}}},
                       {"result", Json{{"T", rational_str(t)},
                                       {"doubled", rational_str(t * 2)}}},
                       {"provenance",
                        Json{{"engine", "delcon"}, {"seed", g.seed}, {"threads", g.threads}}}});
    } else {
        out << rational_str(t) << "\n";
    }
}

// ---- verify -----------------------------------------------------------------

Scalar parse_q_arg(const std::string& q_str, const std::string& mode) {
    if (q_str.rfind("complex:", 0) == 0) {
        double mu = std::stod(q_str.substr(8));
        return Scalar(std::polar(1.0, mu));
    }
    Scalar q = Scalar::parse_rational(q_str);
    if (mode == "complex") return Scalar(q.to_complex());
    return q;
}

void cmd_verify_identity(int m, int n, const std::string& q_str, const std::string& x_str,
                         const std::string& mode, const Globals& g, std::ostream& out) {
    Scalar q = parse_q_arg(q_str, mode);
    if (mode == "exact" && !q.is_exact())
        throw std::invalid_argument("--mode exact needs a rational q");
    GridGraph grid(m, n);
    CorrespondenceParams params;
    params.q = q;
    if (x_str.rfind("uniform:", 0) == 0) {
        Scalar x = parse_scalar_arg(x_str.substr(8));
        if (!q.is_exact() && x.is_exact()) x = Scalar(x.to_complex());
        params.x.assign(static_cast<size_t>(grid.edge_count()), x);
    } else {
        Json xs = read_json_file(x_str);
        for (const auto& e : xs) {
            Scalar x = scalar_from_json(e);
            if (!q.is_exact() && x.is_exact()) x = Scalar(x.to_complex());
            params.x.push_back(x);
        }
        if (static_cast<int>(params.x.size()) != grid.edge_count())
            throw std::invalid_argument("x file must list one value per grid edge");
    }
    IdentityReport rep = verify_identity(m, n, params);
    bool pass = rep.exact_mode ? rep.equal : rep.residual <= g.tol;
    if (g.json) {
        emit(out, Json{{"command", "verify identity"},
                       {"input", Json{{"m", m}, {"n", n}, {"q", q_str}, {"x", x_str},
                                      {"mode", mode}}},
                       {"result", Json{{"lhs", scalar_to_json(rep.lhs)},
                                       {"rhs_subset", scalar_to_json(rep.rhs_subset)},
                                       {"rhs_delcon", scalar_to_json(rep.rhs_delcon)},
                                       {"equal", rep.equal},
                                       {"residual", rep.residual},
                                       {"pass", pass}}},
                       {"provenance", Json{{"engines", Json::array({"subset", "delcon"})},
                                           {"tol", g.tol}, {"seed", g.seed},
                                           {"threads", g.threads}}}});
    } else {
        out << "lhs = " << rep.lhs.str() << "\n";
        out << "rhs = " << rep.rhs_subset.str() << " (subset) / " << rep.rhs_delcon.str()
            << " (delcon)\n";
        if (rep.exact_mode) out << (rep.equal ? "exact match\n" : "MISMATCH\n");
        else out << "residual = " << fmt_double(rep.residual) << "\n";
    }
    if (!pass) throw VerificationFailure("identity verification failed");
}

// ---- entropy ----------------------------------------------------------------

EntropyPoint closed_form_point(double Q, double tol) {
    if (Q == 4.0) return entropy_q4();
    if (Q < 4.0) return entropy_integral(mu_from_q_value(Q), QuadratureConfig{tol, 0.0});
    return entropy_series(lambda_from_q_value(Q), tol);
}

const char* regime_name(EntropyRegime r) {
    switch (r) {
        case EntropyRegime::Subcritical: return "subcritical";
        case EntropyRegime::Critical: return "critical";
        case EntropyRegime::Supercritical: return "supercritical";
    }
    return "?";
}

void cmd_entropy_baxter(double Q, double tol, const Globals& g, std::ostream& out) {
    if (!(Q > 0.0)) throw std::domain_error("entropy baxter: Q must be positive");
    EntropyPoint p = closed_form_point(Q, tol);
    Json result{{"regime", regime_name(p.regime)},
                {"Q", p.Q},
                {"log_S", p.log_S},
                {"S", std::exp(p.log_S)},
                {"error_bound", p.error_bound}};
    if (Q == 4.0) {
        result["paper_printed_log_S"] = paper_printed_q4_log_s();
        result["paper_printed_consistent"] = false;
        result["note"] =
            "printed Gamma-ratio is 16x too small; the value consistent with both "
            "formula limits and with tiling growth is used";
    }
    if (g.json) {
        emit(out, Json{{"command", "entropy baxter"},
                       {"input", Json{{"Q", Q}, {"tol", tol}}},
                       {"result", std::move(result)},
                       {"provenance", provenance(g)}});
    } else {
        out << "regime " << regime_name(p.regime) << ", Q = " << fmt_double(p.Q) << "\n";
        out << "log S = " << fmt_double(p.log_S) << "  (S = " << fmt_double(std::exp(p.log_S))
            << "), error bound " << fmt_double(p.error_bound) << "\n";
        if (Q == 4.0)
            out << "paper-printed ratio would give log S = "
                << fmt_double(paper_printed_q4_log_s())
                << ": inconsistent (16x too small), not used\n";
    }
}

void cmd_entropy_finite_size(double Q, int max_size, double tol, const Globals& g,
                             std::ostream& out) {
    if (!(Q > 0.0)) throw std::domain_error("entropy finite-size: Q must be positive");
    if (max_size < 1 || max_size > 10)
        throw std::invalid_argument("--max-size must lie in 1..10 (transfer-matrix budget)");
    EntropyPoint target = closed_form_point(Q, tol);
    Json estimates = Json::array();
    for (int k = 1; k <= max_size; ++k) {
        double est = finite_size_entropy(k, k, Q);
        estimates.push_back(Json{{"m", k}, {"n", k}, {"estimate", est}});
        if (!g.json)
            out << k << "x" << k << ": " << fmt_double(est) << "\n";
    }
    if (g.json) {
        emit(out, Json{{"command", "entropy finite-size"},
                       {"input", Json{{"Q", Q}, {"max_size", max_size}}},
                       {"result", Json{{"estimates", std::move(estimates)},
                                       {"target_log_S", target.log_S},
                                       {"target_S", std::exp(target.log_S)}}},
                       {"provenance",
                        Json{{"engine", "transfer"}, {"seed", g.seed},
                             {"threads", g.threads}}}});
    } else {
        out << "closed form: S = " << fmt_double(std::exp(target.log_S))
            << " (log S = " << fmt_double(target.log_S) << ")\n";
    }
}

} // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact T-tetromino tiling and Tutte/Potts partition-function toolkit", "ttt"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_flag("--json", g.json, "machine-readable output");
    app.add_option("--seed", g.seed, "seed echoed into provenance");
    app.add_option("--threads", g.threads, "worker cap for the subset engine")
        ->check(CLI::Range(1, 1 << 20));
    app.add_option("--tol", g.tol, "tolerance for residual checks");

    int m = 1, n = 1;
    auto add_mn = [&](CLI::App* cmd) {
        cmd->add_option("--m", m, "domain parameter m (width 4m)")
            ->required()
            ->check(CLI::Range(1, 1 << 20));
        cmd->add_option("--n", n, "domain parameter n (height 4n)")
            ->required()
            ->check(CLI::Range(1, 1 << 20));
    };

    auto* tile = app.add_subcommand("tile", "tiling enumeration");
    tile->require_subcommand(1);
    auto* tile_count = tile->add_subcommand("count", "count tilings of the 4m x 4n rectangle");
    add_mn(tile_count);
    tile_count->callback([&] { cmd_tile_count(m, n, g, out); });

    auto* tile_enum = tile->add_subcommand("enumerate", "emit tilings as JSON lines");
    add_mn(tile_enum);
    std::string pruning = "on", out_path = "-";
    std::optional<uint64_t> limit;
    tile_enum->add_option("--pruning", pruning, "on|off")
        ->check(CLI::IsMember({"on", "off"}));
    tile_enum->add_option("--limit", limit, "stop after this many tilings");
    tile_enum->add_option("--out", out_path, "output file, - for stdout")->required();
    tile_enum->callback([&] { cmd_tile_enumerate(m, n, pruning, limit, out_path, g, out); });

    auto* genfun = app.add_subcommand("genfun", "generating-function evaluation");
    genfun->require_subcommand(1);
    auto* genfun_eval = genfun->add_subcommand("eval", "evaluate F for a weight system");
    add_mn(genfun_eval);
    std::string weights_path, mode = "exact";
    genfun_eval->add_option("--weights", weights_path, "weight system JSON file")->required();
    genfun_eval->add_option("--mode", mode, "exact|complex")
        ->check(CLI::IsMember({"exact", "complex"}));
    genfun_eval->callback([&] { cmd_genfun_eval(m, n, weights_path, mode, g, out); });

    auto* cycles = app.add_subcommand("cycles", "cycle classes of tilings");
    cycles->require_subcommand(1);
    auto* cycles_classes = cycles->add_subcommand("classes", "group tilings by edge subset");
    add_mn(cycles_classes);
    cycles_classes->add_option("--out", out_path, "output file, - for stdout")->required();
    cycles_classes->callback([&] { cmd_cycles_classes(m, n, out_path, g, out); });

    auto* tutte = app.add_subcommand("tutte", "partition-function engines");
    tutte->require_subcommand(1);
    auto* tutte_eval = tutte->add_subcommand("eval", "evaluate Z_G(Q, v) from a graph file");
    std::string graph_path, q_str, engine = "subset";
    tutte_eval->add_option("--graph", graph_path, "graph JSON file")->required();
    tutte_eval->add_option("--Q", q_str, "Q as p/q, or re,im")->required();
    tutte_eval->add_option("--engine", engine, "subset|delcon|transfer")
        ->check(CLI::IsMember({"subset", "delcon", "transfer"}));
    tutte_eval->callback([&] { cmd_tutte_eval(graph_path, q_str, engine, g, out); });

    auto* tutte_grid = tutte->add_subcommand("grid", "write a grid graph JSON file");
    std::string v_str = "1";
    add_mn(tutte_grid);
    tutte_grid->add_option("--v", v_str, "uniform edge weight");
    tutte_grid->add_option("--out", out_path, "output file, - for stdout")->required();
    tutte_grid->callback([&] { cmd_tutte_grid(m, n, v_str, out_path, g, out); });

    auto* tutte_classical_cmd =
        tutte->add_subcommand("classical", "two-variable T_G(x,y) on a grid");
    std::vector<int> grid_dims;
    std::string x_str = "3", y_str = "3";
    tutte_classical_cmd->add_option("--grid", grid_dims, "grid vertex dimensions m n")
        ->expected(2)
        ->required();
    tutte_classical_cmd->add_option("--x", x_str, "x as p/q");
    tutte_classical_cmd->add_option("--y", y_str, "y as p/q");
    tutte_classical_cmd->callback([&] {
        if (grid_dims[0] < 1 || grid_dims[1] < 1)
            throw CLI::ValidationError("--grid", "grid dimensions must be positive");
        cmd_tutte_classical(grid_dims[0], grid_dims[1], x_str, y_str, g, out);
    });

    auto* verify = app.add_subcommand("verify", "identity checks");
    verify->require_subcommand(1);
    auto* verify_id = verify->add_subcommand(
        "identity", "check Q^{mn/2} F = Z_G on the 4m x 4n domain");
    add_mn(verify_id);
    std::string vq = "1", vx = "uniform:1";
    verify_id->add_option("--q", vq, "q as p/q, or complex:MU for q = e^{i MU}");
    verify_id->add_option("--x", vx, "uniform:VAL or a JSON file of per-edge values");
    verify_id->add_option("--mode", mode, "exact|complex")
        ->check(CLI::IsMember({"exact", "complex"}));
    verify_id->callback([&] { cmd_verify_identity(m, n, vq, vx, mode, g, out); });

    auto* entropy = app.add_subcommand("entropy", "tiling entropy");
    entropy->require_subcommand(1);
    auto* ebaxter = entropy->add_subcommand("baxter", "closed-form log S at a Potts point");
    double Q = 4.0, etol = 1e-12;
    ebaxter->add_option("--Q", Q, "Potts parameter Q > 0")->required();
    ebaxter->add_option("--tol", etol, "quadrature / series tolerance");
    ebaxter->callback([&] { cmd_entropy_baxter(Q, etol, g, out); });

    auto* efinite = entropy->add_subcommand("finite-size", "transfer-matrix estimates");
    int max_size = 6;
    efinite->add_option("--Q", Q, "Potts parameter Q > 0")->required();
    efinite->add_option("--max-size", max_size, "largest square grid m = n");
    efinite->add_option("--tol", etol, "tolerance for the closed-form target");
    efinite->callback([&] { cmd_entropy_finite_size(Q, max_size, etol, g, out); });

    std::vector<const char*> argv;
    argv.push_back("ttt");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
        return 0;
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const VerificationFailure& e) {
        err << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace ttt
