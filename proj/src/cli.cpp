#include "tfvs/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "tfvs/approx.hpp"
#include "tfvs/detect.hpp"
#include "tfvs/io.hpp"
#include "tfvs/oracle.hpp"

namespace tfvs {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw PreconditionError("cannot open input file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw PreconditionError("cannot open output file '" + path + "'");
    out << content;
}

ParsedTournament load_tournament(const std::string& path) {
    std::string text = read_file(path);
    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        return parse_tournament_json(text);
    }
    return parse_tournament(text);
}

void emit(const std::string& content, const std::string& output_path, std::ostream& out) {
    if (output_path.empty()) {
        out << content;
    } else {
        write_file(output_path, content);
    }
}

bool use_json(const std::string& format) {
    if (format == "json" || format == "structured") return true;
    if (format == "text") return false;
    throw PreconditionError("unknown output format '" + format + "' (text | json)");
}

std::uint64_t mix_seed(std::uint64_t seed) {
    // splitmix64 step; keeps the weight stream decoupled from the arc stream
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

Weights make_weights(int n, const std::string& kind, int max_weight, std::uint64_t seed) {
    if (kind == "unit") return Weights::unit(n);
    if (kind == "random-int") {
        if (max_weight < 0) throw PreconditionError("max-weight must be non-negative");
        std::mt19937_64 rng(mix_seed(seed));
        std::vector<Rational> values;
        values.reserve(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            values.emplace_back(
                static_cast<long long>(rng() % (static_cast<std::uint64_t>(max_weight) + 1)));
        }
        return Weights(std::move(values));
    }
    throw PreconditionError("unknown weight model '" + kind + "'");
}

// Ratio of achieved weight to the optimum; by convention 0/0 is 1 and a
// nonzero answer on an instance with optimum 0 is an algorithm bug.
Rational audit_ratio(const Rational& achieved, const Rational& optimum) {
    if (optimum == 0) {
        if (achieved == 0) return Rational(1);
        throw InvariantViolation("nonzero FVS weight on an instance with optimum 0");
    }
    return achieved / optimum;
}

struct SolveOptions {
    std::string input;
    std::string output;
    std::string algorithm = "seven-thirds";
    std::string format = "text";
    bool audit = false;
    bool check_skip = false;
    int oracle_cap = 18;
};

int cmd_solve(const SolveOptions& opt, std::ostream& out) {
    ParsedTournament instance = load_tournament(opt.input);
    const Tournament& t = instance.tournament;
    const Weights& w = instance.weights;

    FvsResult result;
    int stall_restarts = -1;
    bool has_trace = false;
    if (opt.algorithm == "seven-thirds") {
        result = seven_thirds_fvs(t, w);
        has_trace = true;
    } else if (opt.algorithm == "three-approx") {
        result = three_approx(t, w);
    } else if (opt.algorithm == "exact") {
        OracleResult oracle = exact_min_fvs(t, w, opt.oracle_cap);
        result.fvs = oracle.witness;
        result.weight = oracle.optimum;
        for (int v : result.fvs) result.stage_tags[v] = StageTag::exact;
    } else if (opt.algorithm == "layers-only") {
        LayersResult layers = layers_fvs(t, w);
        result = layers.fvs;
        stall_restarts = layers.decomposition.restart_count();
    } else if (opt.algorithm == "cdz") {
        result = cdz_t5free_fvs(t, w, !opt.check_skip);
    } else {
        throw PreconditionError("unknown algorithm '" + opt.algorithm + "'");
    }

    bool valid = verify_fvs(t, result.fvs);
    if (!valid) {
        throw InvariantViolation("algorithm produced a set that is not an FVS");
    }

    ResultDocument doc = ResultDocument::from(opt.algorithm, t, w, result);
    doc.verified = true;
    doc.has_trace = has_trace;
    doc.stall_restarts = stall_restarts;
    if (opt.audit) {
        OracleResult oracle = exact_min_fvs(t, w, opt.oracle_cap);
        doc.oracle_optimum = oracle.optimum;
        doc.ratio = audit_ratio(result.weight, oracle.optimum);
    }
    emit(use_json(opt.format) ? doc.to_json() : doc.to_text(), opt.output, out);
    return 0;
}

struct VerifyOptions {
    std::string input;
    std::string fvs;
};

int cmd_verify(const VerifyOptions& opt, std::ostream& out) {
    ParsedTournament instance = load_tournament(opt.input);
    std::vector<int> ids;
    std::string token;
    std::istringstream stream(opt.fvs);
    while (stream >> token) {
        std::size_t start = 0;
        while (start < token.size()) {
            std::size_t comma = token.find(',', start);
            std::size_t end = comma == std::string::npos ? token.size() : comma;
            if (end > start) {
                try {
                    ids.push_back(std::stoi(token.substr(start, end - start)));
                } catch (const std::exception&) {
                    throw PreconditionError("bad vertex id '" + token.substr(start, end - start) + "'");
                }
            }
            start = end + 1;
        }
    }
    VertexSet s(ids);
    for (int v : s) {
        if (v < 0 || v >= instance.tournament.size()) {
            throw PreconditionError("vertex id " + std::to_string(v) + " out of range");
        }
    }
    bool valid = verify_fvs(instance.tournament, s);
    out << "fvs: " << (valid ? "valid" : "invalid") << "\n";
    out << "weight: " << to_string(instance.weights.sum(s)) << "\n";
    return valid ? 0 : 1;
}

struct GenerateOptions {
    int n = 0;
    std::uint64_t seed = 0;
    std::string model = "uniform";
    std::string weights = "unit";
    int max_weight = 10;
    std::string output;
    std::string format = "text";
};

int cmd_generate(const GenerateOptions& opt, std::ostream& out) {
    Tournament t;
    if (opt.model == "uniform") {
        t = random_tournament(opt.n, opt.seed);
    } else if (opt.model == "paley") {
        t = paley_tournament(opt.n);
    } else {
        throw PreconditionError("unknown generator model '" + opt.model + "'");
    }
    Weights w = make_weights(t.size(), opt.weights, opt.max_weight, opt.seed);
    std::string content = use_json(opt.format) ? write_tournament_json(t, w) : write_tournament(t, w);
    emit(content, opt.output, out);
    return 0;
}

struct EnumerateOptions {
    int order = 0;
    int forbidden = 0;
    std::string emit_dir;
    std::string format = "text";
};

int cmd_enumerate(const EnumerateOptions& opt, std::ostream& out) {
    FamilyEnumeration family = enumerate_family(opt.order, opt.forbidden);
    if (!opt.emit_dir.empty()) {
        std::filesystem::create_directories(opt.emit_dir);
        for (int i = 0; i < family.class_count(); ++i) {
            Tournament rep = family.representative(i);
            std::ostringstream name;
            name << "family-k" << opt.order << "-f" << opt.forbidden << "-" << std::setw(3)
                 << std::setfill('0') << i << ".tournament";
            write_file((std::filesystem::path(opt.emit_dir) / name.str()).string(),
                       write_tournament(rep, Weights::unit(rep.size())));
        }
    }
    if (use_json(opt.format)) {
        std::ostringstream json;
        json << "{\n  \"order\": " << opt.order << ",\n  \"forbidden\": " << opt.forbidden
             << ",\n  \"classes\": " << family.class_count() << "\n}\n";
        out << json.str();
    } else {
        out << "order: " << opt.order << "\n";
        out << "forbidden: " << opt.forbidden << "\n";
        out << "classes: " << family.class_count() << "\n";
    }
    return 0;
}

struct CheckOptions {
    std::string input;
    std::string format = "text";
};

int cmd_check(const CheckOptions& opt, std::ostream& out) {
    ParsedTournament instance = load_tournament(opt.input);
    const Tournament& t = instance.tournament;
    bool transitive = is_transitive(t);
    auto t5_witness = find_t5_subtournament(t);
    auto t7_witness = find_t7_subtournament(t);
    auto triangle = find_triangle(t);

    auto ids_of = [](const VertexSet& s) {
        std::string text;
        for (int v : s) {
            if (!text.empty()) text += " ";
            text += std::to_string(v);
        }
        return text;
    };

    if (use_json(opt.format)) {
        std::ostringstream json;
        json << "{\n  \"n\": " << t.size() << ",\n  \"transitive\": " << (transitive ? "true" : "false")
             << ",\n  \"t5_free\": " << (t5_witness ? "false" : "true")
             << ",\n  \"t7_free\": " << (t7_witness ? "false" : "true") << "\n}\n";
        out << json.str();
    } else {
        out << "n: " << t.size() << "\n";
        out << "transitive: " << (transitive ? "true" : "false") << "\n";
        if (triangle) out << "triangle-witness: " << ids_of(*triangle) << "\n";
        out << "t5-free: " << (t5_witness ? "false" : "true") << "\n";
        if (t5_witness) out << "t5-witness: " << ids_of(*t5_witness) << "\n";
        out << "t7-free: " << (t7_witness ? "false" : "true") << "\n";
        if (t7_witness) out << "t7-witness: " << ids_of(*t7_witness) << "\n";
    }
    return 0;
}

struct BenchOptions {
    int trials = 10;
    int n_min = 4;
    int n_max = 10;
    std::uint64_t seed = 1;
    std::string weights = "unit";
    int max_weight = 10;
    int oracle_cap = 18;
};

int cmd_bench(const BenchOptions& opt, std::ostream& out) {
    if (opt.trials <= 0) throw PreconditionError("bench: trials must be positive");
    if (opt.n_min < 0 || opt.n_max < opt.n_min) throw PreconditionError("bench: bad n range");
    if (opt.n_max > opt.oracle_cap) {
        throw PreconditionError("bench: n range exceeds the oracle cap " +
                                std::to_string(opt.oracle_cap));
    }
    Rational max3(0), max7(0), sum3(0), sum7(0);
    for (int i = 0; i < opt.trials; ++i) {
        int n = opt.n_min + (opt.n_max > opt.n_min ? i % (opt.n_max - opt.n_min + 1) : 0);
        std::uint64_t trial_seed = opt.seed + static_cast<std::uint64_t>(i);
        Tournament t = random_tournament(n, trial_seed);
        Weights w = make_weights(n, opt.weights, opt.max_weight, trial_seed);

        FvsResult base = three_approx(t, w);
        FvsResult seven = seven_thirds_fvs(t, w);
        OracleResult oracle = exact_min_fvs(t, w, opt.oracle_cap);
        Rational r3 = audit_ratio(base.weight, oracle.optimum);
        Rational r7 = audit_ratio(seven.weight, oracle.optimum);
        max3 = std::max(max3, r3);
        max7 = std::max(max7, r7);
        sum3 += r3;
        sum7 += r7;
        out << "trial " << i << ": n=" << n << " seed=" << trial_seed
            << " optimum=" << to_string(oracle.optimum)
            << " three-approx=" << to_string(base.weight) << " (ratio " << to_string(r3) << ")"
            << " seven-thirds=" << to_string(seven.weight) << " (ratio " << to_string(r7) << ")\n";
    }
    out << "three-approx: max-ratio=" << to_string(max3)
        << " mean-ratio=" << to_string(sum3 / opt.trials) << "\n";
    out << "seven-thirds: max-ratio=" << to_string(max7)
        << " mean-ratio=" << to_string(sum7 / opt.trials) << "\n";
    if (max3 > 3) throw InvariantViolation("bench: three-approx ratio exceeded 3");
    if (max7 > Rational(7, 3)) throw InvariantViolation("bench: seven-thirds ratio exceeded 7/3");
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"feedback vertex set tools for weighted tournaments"};
    app.require_subcommand(1);

    SolveOptions solve_opt;
    auto* solve = app.add_subcommand("solve", "run an FVS algorithm on a tournament file");
    solve->add_option("--input", solve_opt.input, "tournament file (text or json)")->required();
    solve->add_option("--output", solve_opt.output, "write the result here instead of stdout");
    solve->add_option("--algorithm", solve_opt.algorithm,
                      "seven-thirds | three-approx | exact | layers-only | cdz");
    solve->add_option("--format", solve_opt.format, "text | json");
    solve->add_flag("--audit", solve_opt.audit, "also run the exact oracle and report the ratio");
    solve->add_flag("--check-skip", solve_opt.check_skip, "skip the T5-freeness check before cdz");
    solve->add_option("--oracle-cap", solve_opt.oracle_cap, "size cap for exact solves");

    VerifyOptions verify_opt;
    auto* verify = app.add_subcommand("verify", "check whether a vertex set is an FVS");
    verify->add_option("--input", verify_opt.input, "tournament file")->required();
    verify->add_option("--fvs", verify_opt.fvs, "vertex ids, space or comma separated")->required();

    GenerateOptions gen_opt;
    auto* generate = app.add_subcommand("generate", "write a tournament file");
    generate->add_option("--n", gen_opt.n, "vertex count (the prime q for paley)")->required();
    generate->add_option("--seed", gen_opt.seed, "PRNG seed");
    generate->add_option("--model", gen_opt.model, "uniform | paley");
    generate->add_option("--weights", gen_opt.weights, "unit | random-int");
    generate->add_option("--max-weight", gen_opt.max_weight, "largest random integer weight");
    generate->add_option("--output", gen_opt.output, "output path (default stdout)");
    generate->add_option("--format", gen_opt.format, "text | json");

    EnumerateOptions enum_opt;
    auto* enumerate = app.add_subcommand("enumerate", "count small forbidden-family classes");
    enumerate->add_option("--order", enum_opt.order, "tournament order, at most 7")->required();
    enumerate->add_option("--forbidden", enum_opt.forbidden, "forbidden transitive subtournament order")
        ->required();
    enumerate->add_option("--emit", enum_opt.emit_dir, "write one file per representative");
    enumerate->add_option("--format", enum_opt.format, "text | json");

    CheckOptions check_opt;
    auto* check = app.add_subcommand("check", "report transitivity / T5-freeness / T7-freeness");
    check->add_option("--input", check_opt.input, "tournament file")->required();
    check->add_option("--format", check_opt.format, "text | json");

    BenchOptions bench_opt;
    auto* bench = app.add_subcommand("bench", "ratio audit on random instances");
    bench->add_option("--trials", bench_opt.trials, "number of instances");
    bench->add_option("--n-min", bench_opt.n_min, "smallest instance order");
    bench->add_option("--n-max", bench_opt.n_max, "largest instance order");
    bench->add_option("--seed", bench_opt.seed, "base seed; trial i uses seed+i");
    bench->add_option("--weights", bench_opt.weights, "unit | random-int");
    bench->add_option("--max-weight", bench_opt.max_weight, "largest random integer weight");
    bench->add_option("--oracle-cap", bench_opt.oracle_cap, "size cap for the oracle");

    std::vector<const char*> argv;
    argv.push_back("tfvs");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (solve->parsed()) return cmd_solve(solve_opt, out);
        if (verify->parsed()) return cmd_verify(verify_opt, out);
        if (generate->parsed()) return cmd_generate(gen_opt, out);
        if (enumerate->parsed()) return cmd_enumerate(enum_opt, out);
        if (check->parsed()) return cmd_check(check_opt, out);
        if (bench->parsed()) return cmd_bench(bench_opt, out);
    } catch (const InvariantViolation& e) {
        err << "internal invariant violation: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

} // namespace tfvs
