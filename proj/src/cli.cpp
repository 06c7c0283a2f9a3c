#include "spheretri/cli.hpp"

#include <algorithm>
#include <cstddef>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "spheretri/census.hpp"
#include "spheretri/errors.hpp"
#include "spheretri/generate.hpp"
#include "spheretri/graph6.hpp"
#include "spheretri/planar_code.hpp"
#include "spheretri/report_json.hpp"
#include "spheretri/verify.hpp"

namespace spheretri {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

GenLimits load_limits(const std::string& config_path, std::ostream& err) {
    GenLimits limits;
    if (config_path.empty()) return limits;
    std::ifstream in(config_path, std::ios::binary);
    if (!in)
        throw std::invalid_argument("cannot open config file: " + config_path);
    nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
    if (j.is_discarded() || !j.is_object())
        throw std::invalid_argument("config file is not a JSON object: " +
                                    config_path);
    try {
        if (j.contains("max_n")) limits.max_n = j.at("max_n").get<int>();
        if (j.contains("class_budget"))
            limits.class_budget = j.at("class_budget").get<std::size_t>();
        if (j.contains("threads")) limits.threads = j.at("threads").get<int>();
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("bad config value: ") +
                                    e.what());
    }
    if (limits.threads < 1)
        throw std::invalid_argument("config threads must be positive");
    if (limits.max_n > 14)
        err << "warning: config max_n=" << limits.max_n
            << " is past the tested range; levels beyond n=14 need"
               " substantial memory\n";
    return limits;
}

void warn_large_n(int n, std::ostream& err) {
    if (n > 14)
        err << "warning: n=" << n
            << " is past the tested range; expect heavy memory use and long"
               " runtimes\n";
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open input file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return std::move(ss).str();
}

void write_output(const std::string& path, const std::string& bytes,
                  std::ostream& out) {
    if (path.empty()) {
        out << bytes;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + path);
    f << bytes;
    f.flush();
    if (!f) throw std::runtime_error("write failed: " + path);
}

struct GenOpts {
    int n = 0;
    std::optional<int> min_degree;
    std::optional<int> connectivity;
    std::string output;
    std::string format = "planar_code";
};

int run_gen(const GenOpts& o, GenLimits limits, std::ostream& out,
            std::ostream& err) {
    warn_large_n(o.n, err);
    limits.max_n = std::max(limits.max_n, o.n);
    std::vector<Triangulation> all = enumerate(o.n, limits);
    Predicate pred;
    pred.min_degree = o.min_degree;
    pred.connectivity = o.connectivity;
    std::vector<Triangulation> kept;
    for (auto& t : all)
        if (pred.matches(t)) kept.push_back(std::move(t));
    std::string payload;
    if (o.format == "graph6") {
        for (const auto& t : kept) {
            payload += encode_graph6(t);
            payload += '\n';
        }
    } else {
        payload = encode_planar_code(kept, true);
    }
    write_output(o.output, payload, out);
    err << kept.size() << " of " << all.size() << " classes written\n";
    return kExitOk;
}

struct CensusOpts {
    std::string input;
    bool per_vertex = false;
    bool json = false;
};

int run_census(const CensusOpts& o, std::ostream& out) {
    std::vector<Triangulation> graphs = decode_planar_code(read_file(o.input));
    if (o.json) {
        out << '[';
        for (std::size_t i = 0; i < graphs.size(); ++i) {
            if (i) out << ',';
            out << census_to_json(census(graphs[i]), static_cast<int>(i));
        }
        out << "]\n";
        return kExitOk;
    }
    out << std::setw(5) << "index" << std::setw(4) << "n" << std::setw(6)
        << "c3" << std::setw(6) << "c4" << std::setw(9) << "diamond"
        << std::setw(12) << "separating" << '\n';
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        const CycleCensus c = census(graphs[i]);
        out << std::setw(5) << i << std::setw(4) << graphs[i].n()
            << std::setw(6) << c.c3 << std::setw(6) << c.c4 << std::setw(9)
            << c.c4_diamond << std::setw(12) << c.c4_separating << '\n';
        if (o.per_vertex) {
            out << "      per-vertex:";
            for (auto v : c.per_vertex_c4) out << ' ' << v;
            out << '\n';
        }
    }
    return kExitOk;
}

struct MinC4Opts {
    int n = 0;
    bool json = false;
};

int run_min_c4(const MinC4Opts& o, GenLimits limits, std::ostream& out,
               std::ostream& err) {
    warn_large_n(o.n, err);
    limits.max_n = std::max(limits.max_n, o.n);
    const Catalog cat = build_catalog(o.n, limits);
    const ExtremalRecord rec = min_c4(cat, o.n);
    if (o.json) {
        out << extremal_to_json(rec) << '\n';
        return kExitOk;
    }
    out << "n=" << rec.n << " g=" << rec.g_value
        << " minimizers=" << rec.minimizer_count << '\n';
    for (const auto& code : rec.minimizer_codes) out << code.hex() << '\n';
    return kExitOk;
}

struct VerifyOpts {
    std::string group;
    int max_n = 13;
    bool json = false;
};

int run_verify(const VerifyOpts& o, GenLimits limits, std::ostream& out,
               std::ostream& err) {
    limits.max_n = std::max(limits.max_n, o.max_n);
    const Catalog cat = build_catalog(o.max_n, limits);
    std::vector<VerificationReport> reports;
    if (o.group == "theorem1") {
        reports.push_back(verify_theorem1(cat, o.max_n));
    } else if (o.group == "lemmas") {
        for (int which : {1, 2, 3})
            reports.push_back(verify_lemma(cat, which, o.max_n));
    } else if (o.group == "identities") {
        for (int n : {9, 10, 11})
            if (n <= o.max_n) reports.push_back(verify_degree_identities(cat, n));
    } else if (o.group == "claims") {
        reports = verify_structural_claims(cat, o.max_n);
    } else { // oracle
        reports.push_back(verify_generation_oracle(cat, o.max_n, limits));
        reports.push_back(verify_counting_oracle(cat, o.max_n));
        reports.push_back(verify_deletion_bound(cat, o.max_n));
    }
    if (reports.empty())
        err << "no " << o.group << " checks apply with --max-n " << o.max_n
            << '\n';
    if (o.json) {
        out << '[';
        for (std::size_t i = 0; i < reports.size(); ++i) {
            if (i) out << ',';
            out << report_to_json(reports[i]);
        }
        out << "]\n";
    } else {
        for (const auto& r : reports) {
            out << (r.pass ? "[PASS] " : "[FAIL] ") << r.claim_id << " n="
                << r.n_lo << ".." << r.n_hi
                << " counterexamples=" << r.counterexamples.size();
            if (!r.note.empty()) out << "  # " << r.note;
            out << '\n';
        }
    }
    const bool all_pass = std::all_of(reports.begin(), reports.end(),
                                      [](const auto& r) { return r.pass; });
    return all_pass ? kExitOk : kExitFailure;
}

struct ConvertOpts {
    std::string input;
    std::string to;
    std::string output;
};

int run_convert(const ConvertOpts& o, std::ostream& out) {
    std::vector<Triangulation> graphs = decode_planar_code(read_file(o.input));
    std::string payload;
    if (o.to == "graph6") {
        for (const auto& t : graphs) {
            payload += encode_graph6(t);
            payload += '\n';
        }
    } else {
        payload = encode_planar_code(graphs, true);
    }
    write_output(o.output, payload, out);
    return kExitOk;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"Sphere triangulation enumeration and census toolkit",
                 "spheretri"};
    app.require_subcommand(1);

    std::string config_path;
    std::optional<int> threads_flag;
    app.add_option("--config", config_path,
                   "JSON config file with max_n, class_budget and threads")
        ->check(CLI::ExistingFile);
    app.add_option("--threads", threads_flag, "worker thread count")
        ->check(CLI::PositiveNumber);

    GenOpts gen_opts;
    auto* gen_cmd =
        app.add_subcommand("gen", "enumerate triangulation classes");
    gen_cmd->fallthrough();
    gen_cmd->add_option("-n,--vertices", gen_opts.n, "number of vertices")
        ->required()
        ->check(CLI::Range(4, 64));
    gen_cmd->add_option("--min-degree", gen_opts.min_degree,
                        "keep classes with minimum degree at least D");
    gen_cmd->add_option("--connectivity", gen_opts.connectivity,
                        "keep classes with vertex connectivity exactly K");
    gen_cmd->add_option("-o,--output", gen_opts.output,
                        "output file (default: stdout)");
    gen_cmd->add_option("--format", gen_opts.format, "output format")
        ->check(CLI::IsMember({"planar_code", "graph6"}));

    CensusOpts census_opts;
    auto* census_cmd =
        app.add_subcommand("census", "cycle census of a planar_code file");
    census_cmd->fallthrough();
    census_cmd
        ->add_option("-i,--input", census_opts.input, "planar_code input file")
        ->required()
        ->check(CLI::ExistingFile);
    census_cmd->add_flag("--per-vertex", census_opts.per_vertex,
                         "also print per-vertex 4-cycle counts");
    census_cmd->add_flag("--json", census_opts.json, "emit JSON");

    MinC4Opts min_opts;
    auto* min_cmd = app.add_subcommand(
        "min-c4", "minimum 4-cycle count over all classes with n vertices");
    min_cmd->fallthrough();
    min_cmd->add_option("-n,--vertices", min_opts.n, "number of vertices")
        ->required()
        ->check(CLI::Range(4, 64));
    min_cmd->add_flag("--json", min_opts.json, "emit JSON");

    VerifyOpts verify_opts;
    auto* verify_cmd = app.add_subcommand("verify", "run verification suites");
    verify_cmd->fallthrough();
    verify_cmd->add_option("group", verify_opts.group, "claim group")
        ->required()
        ->check(CLI::IsMember(
            {"theorem1", "lemmas", "identities", "claims", "oracle"}));
    verify_cmd
        ->add_option("--max-n", verify_opts.max_n,
                     "largest vertex count to check")
        ->check(CLI::Range(4, 14));
    verify_cmd->add_flag("--json", verify_opts.json, "emit JSON");

    ConvertOpts conv_opts;
    auto* conv_cmd =
        app.add_subcommand("convert", "transcode a planar_code file");
    conv_cmd->fallthrough();
    conv_cmd
        ->add_option("-i,--input", conv_opts.input, "planar_code input file")
        ->required()
        ->check(CLI::ExistingFile);
    conv_cmd->add_option("--to", conv_opts.to, "target format")
        ->required()
        ->check(CLI::IsMember({"planar_code", "graph6"}));
    conv_cmd->add_option("-o,--output", conv_opts.output,
                         "output file (default: stdout)");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("spheretri");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        GenLimits limits = load_limits(config_path, err);
        if (threads_flag) limits.threads = *threads_flag;
        if (app.got_subcommand(gen_cmd)) return run_gen(gen_opts, limits, out, err);
        if (app.got_subcommand(census_cmd)) return run_census(census_opts, out);
        if (app.got_subcommand(min_cmd))
            return run_min_c4(min_opts, limits, out, err);
        if (app.got_subcommand(verify_cmd)) {
            if (verify_cmd->count("--max-n") == 0)
                verify_opts.max_n = std::min(13, limits.max_n);
            return run_verify(verify_opts, limits, out, err);
        }
        if (app.got_subcommand(conv_cmd)) return run_convert(conv_opts, out);
        err << "error: no subcommand selected\n";
        return kExitUsage;
    } catch (const FormatError& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    } catch (const LimitExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
}

} // namespace spheretri
