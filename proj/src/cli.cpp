#include "nicegen/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "nicegen/errors.hpp"
#include "nicegen/render.hpp"
#include "nicegen/rng.hpp"
#include "nicegen/verify.hpp"

namespace nicegen {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitGenerationFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitVerificationFailed = 3;

struct GenFlags {
    std::size_t n = 3;
    std::uint64_t seed = 0;
    std::int64_t max_coeff = 5;
    std::size_t rank = 0;
    bool rational = false;
    std::vector<std::int64_t> dependence;
    unsigned max_retries = 64;
    std::string config_file;
    std::string format = "json";
    std::string output;
    std::string system_kind;  // unique | infinite | none
    std::size_t count = 1;
    bool show_solution = false;
    bool show_trace = false;
    bool standalone = false;
};

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw contract_violation("cannot open input file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

// Generation flags shared by every `gen` subcommand.
void add_gen_flags(CLI::App* cmd, GenFlags& f) {
    cmd->add_option("--n", f.n, "matrix dimension (>= 2)");
    cmd->add_option("--seed", f.seed, "64-bit generator seed");
    cmd->add_option("--max-coeff", f.max_coeff, "bound on sampled integers");
    cmd->add_option("--rank", f.rank, "target rank");
    cmd->add_flag("--rational", f.rational, "allow rational pivots/columns");
    cmd->add_option("--dependence", f.dependence,
                    "column-combination coefficients (n-1 integers)")
        ->delimiter(',');
    cmd->add_option("--max-retries", f.max_retries, "resampling budget");
    cmd->add_option("--config", f.config_file, "JSON config file; flags override its values");
    cmd->add_option("--format", f.format, "latex | json | text")
        ->check(CLI::IsMember({"latex", "json", "text"}));
    cmd->add_option("--output", f.output, "output path (default: stdout)");
    cmd->add_option("--count", f.count, "number of bundles (seeds derived per index)");
    cmd->add_flag("--show-solution", f.show_solution, "render the worked solution");
    cmd->add_flag("--show-trace", f.show_trace, "render every row-reduction step");
    cmd->add_flag("--standalone", f.standalone, "wrap LaTeX in a compilable document");
}

GenConfig build_config(const CLI::App* cmd, const GenFlags& f) {
    GenConfig cfg;
    if (!f.config_file.empty()) cfg = config_from_json_text(read_input(f.config_file));
    if (cmd->count("--n")) cfg.n = f.n;
    if (cmd->count("--seed")) cfg.seed = f.seed;
    else if (f.config_file.empty())
        throw contract_violation("--seed is required (or provide it via --config)");
    if (cmd->count("--max-coeff")) cfg.max_coeff = f.max_coeff;
    if (cmd->count("--rank")) cfg.rank = f.rank;
    if (cmd->count("--rational")) cfg.rational_mode = f.rational;
    if (cmd->count("--dependence")) cfg.dependence = f.dependence;
    if (cmd->count("--max-retries")) cfg.max_retries = f.max_retries;
    cfg.validate();
    return cfg;
}

ProblemKind resolve_kind(const std::string& subcommand, const GenFlags& f, const GenConfig& cfg) {
    if (subcommand == "lu")
        return cfg.rank && *cfg.rank < cfg.n ? ProblemKind::lu_deficient : ProblemKind::lu_full;
    if (subcommand == "inverse") return ProblemKind::unimodular_inverse;
    if (subcommand == "qr") return ProblemKind::qr;
    if (f.system_kind == "unique") return ProblemKind::system_unique;
    if (f.system_kind == "infinite") return ProblemKind::system_infinite;
    if (f.system_kind == "none") return ProblemKind::system_inconsistent;
    throw contract_violation("unknown system kind: " + f.system_kind);
}

std::string render_bundles(const std::vector<ProblemBundle>& bundles, const GenFlags& f) {
    if (f.format == "json")
        return bundles.size() == 1 ? to_json(bundles.front()) : to_json_many(bundles);
    const RenderOptions options{f.show_solution, f.show_trace, f.standalone};
    std::string out;
    for (std::size_t i = 0; i < bundles.size(); ++i) {
        if (i > 0) out += f.format == "latex" ? "\n% ----\n\n" : "\n----\n\n";
        out += f.format == "latex" ? to_latex(bundles[i], options) : to_text(bundles[i], options);
    }
    return out;
}

int emit(const std::string& text, const std::string& output_path, std::ostream& out) {
    if (output_path.empty()) {
        out << text;
        return kExitOk;
    }
    std::ofstream file(output_path, std::ios::binary);
    if (!file) throw contract_violation("cannot open output file: " + output_path);
    file << text;
    return kExitOk;
}

int run_gen(const CLI::App* cmd, const std::string& subcommand, const GenFlags& f,
            std::ostream& out) {
    const GenConfig base = build_config(cmd, f);
    if (f.count < 1) throw contract_violation("--count must be at least 1");
    const ProblemKind kind = resolve_kind(subcommand, f, base);
    std::vector<ProblemBundle> bundles;
    bundles.reserve(f.count);
    for (std::size_t i = 0; i < f.count; ++i) {
        GenConfig cfg = base;
        if (f.count > 1) cfg.seed = SplitMix64::derive(base.seed, i);
        bundles.push_back(make_bundle(kind, cfg));
    }
    return emit(render_bundles(bundles, f), f.output, out);
}

int run_verify(const std::string& input, const std::string& format, std::ostream& out) {
    const std::vector<ProblemBundle> bundles = from_json_many(read_input(input));
    bool all_passed = true;
    std::string text;
    for (std::size_t i = 0; i < bundles.size(); ++i) {
        const VerificationReport report = verify_bundle(bundles[i]);
        all_passed = all_passed && report.passed;
        if (format == "json") {
            text += report_to_json(report);
        } else {
            if (bundles.size() > 1) text += "bundle " + std::to_string(i) + ":\n";
            text += report_to_text(report);
        }
    }
    out << text;
    return all_passed ? kExitOk : kExitVerificationFailed;
}

int run_replay(const std::string& input, const GenFlags& f, std::ostream& out) {
    const std::vector<ProblemBundle> bundles = from_json_many(read_input(input));
    return emit(render_bundles(bundles, f), f.output, out);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"deterministic generator of linear-algebra problems with nice solutions"};
    app.require_subcommand(1);

    GenFlags flags;

    CLI::App* gen = app.add_subcommand("gen", "generate a problem bundle");
    gen->require_subcommand(1);
    CLI::App* gen_lu = gen->add_subcommand("lu", "full-rank or rank-deficient LU problem");
    CLI::App* gen_inverse = gen->add_subcommand("inverse", "integer matrix with integer inverse");
    CLI::App* gen_qr = gen->add_subcommand("qr", "integer A = QR with rational orthogonal Q");
    CLI::App* gen_system = gen->add_subcommand("system", "linear system A x = b");
    for (CLI::App* cmd : {gen_lu, gen_inverse, gen_qr, gen_system}) add_gen_flags(cmd, flags);
    gen_system->add_option("--kind", flags.system_kind, "unique | infinite | none")
        ->required()
        ->check(CLI::IsMember({"unique", "infinite", "none"}));

    std::string verify_input;
    std::string verify_format = "text";
    CLI::App* verify = app.add_subcommand("verify", "re-check a bundle file");
    verify->add_option("--input", verify_input, "bundle JSON path, or - for stdin")->required();
    verify->add_option("--format", verify_format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));

    std::string replay_input;
    CLI::App* replay_cmd = app.add_subcommand("replay", "re-render a bundle file");
    replay_cmd->add_option("--input", replay_input, "bundle JSON path, or - for stdin")
        ->required();
    replay_cmd->add_option("--format", flags.format, "latex | json | text")
        ->check(CLI::IsMember({"latex", "json", "text"}));
    replay_cmd->add_option("--output", flags.output, "output path (default: stdout)");
    replay_cmd->add_flag("--show-solution", flags.show_solution, "render the worked solution");
    replay_cmd->add_flag("--show-trace", flags.show_trace, "render every reduction step");
    replay_cmd->add_flag("--standalone", flags.standalone, "wrap LaTeX in a document");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("nicegen");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kExitUsage;
    }

    try {
        for (auto [cmd, name] : {std::pair{gen_lu, "lu"}, std::pair{gen_inverse, "inverse"},
                                 std::pair{gen_qr, "qr"}, std::pair{gen_system, "system"}})
            if (cmd->parsed()) return run_gen(cmd, name, flags, out);
        if (verify->parsed()) return run_verify(verify_input, verify_format, out);
        if (replay_cmd->parsed()) return run_replay(replay_input, flags, out);
        err << "no command given\n";
        return kExitUsage;
    } catch (const generation_failed& e) {
        err << "generation failed: " << e.what() << "\n";
        return kExitGenerationFailed;
    } catch (const parse_error& e) {
        err << "parse error at byte " << e.position << ": " << e.what() << "\n";
        return kExitUsage;
    } catch (const contract_violation& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace nicegen
