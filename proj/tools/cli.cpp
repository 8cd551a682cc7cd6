#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "mc4/identities.hpp"
#include "mc4/rcc5.hpp"
#include "mc4/solvers.hpp"

namespace mc4::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open '" + path + "'");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_output(const std::string& path, const std::string& content, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << content;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw UsageError("cannot write '" + path + "'");
    file << content;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, sep)) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

RelationSet parse_relation_list(const std::vector<std::string>& tokens) {
    RelationSet out;
    for (const auto& t : tokens) out.insert(parse_relation(t));
    return out;
}

// Named algebra (M72, M78, M31, M81, M99, G81, G99, FULL) or a comma
// separated list of relations.
RelationSet parse_profile(const std::string& text) {
    std::string upper = text;
    std::transform(upper.begin(), upper.end(), upper.begin(), [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    if (upper == "M72") return catalog::m72;
    if (upper == "M78") return catalog::m78;
    if (upper == "M31") return catalog::m31;
    if (upper == "M81") return catalog::m81;
    if (upper == "M99") return catalog::m99;
    if (upper == "G81") return catalog::g81;
    if (upper == "G99") return catalog::g99;
    if (upper == "FULL" || upper == "MC4") return catalog::full;
    return parse_relation_list(split(text, ','));
}

json relation_set_json(RelationSet s) {
    json members = json::array();
    for (Relation r : s.members()) members.push_back({{"code", r.code()}, {"relation", format_relation(r)}});
    return {{"code", s.code()}, {"size", s.size()}, {"members", members}};
}

void print_relation_set(std::ostream& out, RelationSet s) {
    out << "code 0x" << std::hex << std::uppercase << s.code() << std::dec << std::nouppercase << ", " << s.size() << " relations\n";
    for (Relation r : s.members()) out << "  " << static_cast<int>(r.code()) << '\t' << format_relation(r) << '\n';
}

// ---- solve ---------------------------------------------------------------

struct SolveOptions {
    std::string path;
    std::string format = "text";
    std::string solver = "auto";
    std::size_t oracle_limit = default_oracle_limit;
};

void print_verdict_text(std::ostream& out, const ConstraintNetwork& net, const Verdict& v, const std::string& solver,
                        const TractabilityClass& cls) {
    out << "consistent: " << (v.consistent ? "yes" : "no") << '\n';
    out << "class: " << to_string(cls) << '\n';
    out << "solver: " << solver << '\n';
    if (v.scenario) {
        out << "scenario:\n";
        const Scenario& s = *v.scenario;
        for (Vertex i = 0; i < s.size(); ++i) {
            for (Vertex j = i + 1; j < s.size(); ++j) out << "  " << s.name(i) << ' ' << s.name(j) << " : " << format_relation(s.label(i, j)) << '\n';
        }
    }
    if (v.witness) {
        const Witness& w = *v.witness;
        out << "witness: " << to_string(w.kind);
        switch (w.kind) {
        case Witness::Kind::bottom_edge: out << ' ' << net.name(w.vertices.at(0)) << ' ' << net.name(w.vertices.at(1)); break;
        case Witness::Kind::cycle_chord:
            out << " cycle=[";
            for (std::size_t k = 0; k < w.vertices.size(); ++k) out << (k ? " " : "") << net.name(w.vertices[k]);
            out << "] chord=" << net.name(w.chord.first) << ' ' << net.name(w.chord.second);
            break;
        case Witness::Kind::search_exhausted: out << " nodes=" << w.nodes; break;
        }
        out << '\n';
    }
}

int cmd_solve(const SolveOptions& opt, std::ostream& out) {
    const ConstraintNetwork net = parse_network(read_input(opt.path));
    const TractabilityClass cls = classify(relation_profile(net));
    Verdict verdict;
    std::string solver = opt.solver;
    if (opt.solver == "auto") {
        SolveResult r = solve(net);
        verdict = std::move(r.verdict);
        solver = r.solver;
    } else if (opt.solver == "oracle") {
        verdict = solve_oracle(net, opt.oracle_limit);
    } else if (opt.solver == "backtrack") {
        verdict = solve_backtracking(net);
    } else if (opt.solver == "m72") {
        verdict = solve_trivial_core(net, rel::cg);
    } else if (opt.solver == "m99") {
        verdict = solve_m99(net);
    } else if (opt.solver == "m81") {
        verdict = solve_m81(net);
    }
    if (opt.format == "json") {
        out << verdict_json(net, verdict, solver, cls) << '\n';
    } else {
        print_verdict_text(out, net, verdict, solver, cls);
    }
    return verdict.consistent ? exit_ok : exit_inconsistent;
}

// ---- classify / closure / compose ------------------------------------------

int cmd_classify(const std::vector<std::string>& relations, const std::string& format, std::ostream& out) {
    const RelationSet given = parse_relation_list(relations);
    const RelationSet closed = closure(given | catalog::minimal_expressive);
    const TractabilityClass cls = classify(given);
    if (format == "json") {
        json j = {{"class", to_string(cls.tag)}, {"closure", relation_set_json(closed)}};
        j["core"] = cls.tag == TractabilityTag::trivial_core ? json(format_relation(cls.core)) : json(nullptr);
        out << j.dump() << '\n';
    } else {
        out << "class: " << to_string(cls) << '\n' << "closure with NONE and ALL: ";
        print_relation_set(out, closed);
    }
    return exit_ok;
}

int cmd_closure(const std::vector<std::string>& relations, const std::string& format, std::ostream& out) {
    const RelationSet closed = closure(parse_relation_list(relations));
    if (format == "json") {
        out << relation_set_json(closed).dump() << '\n';
    } else {
        print_relation_set(out, closed);
    }
    return exit_ok;
}

int cmd_compose(const std::vector<std::string>& operands, std::ostream& out) {
    if (operands.empty()) {
        out << "o       ";
        for (Basic b : all_basics) {
            std::string name{basic_name(b)};
            name.resize(12, ' ');
            out << name;
        }
        out << '\n';
        for (Basic a : all_basics) {
            std::string row{basic_name(a)};
            row.resize(8, ' ');
            out << row;
            for (Basic b : all_basics) {
                std::string cell = format_relation(compose(a, b));
                cell.resize(12, ' ');
                out << cell;
            }
            out << '\n';
        }
        return exit_ok;
    }
    if (operands.size() != 2) throw UsageError("compose takes zero or two relations");
    const Relation r = parse_relation(operands[0]);
    const Relation s = parse_relation(operands[1]);
    out << format_relation(r) << " o " << format_relation(s) << " = " << format_relation(compose(r, s)) << '\n';
    out << format_relation(r) << " & " << format_relation(s) << " = " << format_relation(intersect(r, s)) << '\n';
    out << "converse(" << format_relation(r) << ") = " << format_relation(converse(r)) << '\n';
    out << "converse(" << format_relation(s) << ") = " << format_relation(converse(s)) << '\n';
    return exit_ok;
}

// ---- enumerate -------------------------------------------------------------

int cmd_enumerate(bool partition, const std::string& format, std::ostream& out) {
    if (partition) {
        const PartitionReport report = partition_report();
        out << (format == "json" ? partition_report_json(report) + "\n" : partition_report_text(report));
        return exit_ok;
    }
    const auto all = enumerate_expressive();
    if (format == "json") {
        json list = json::array();
        for (RelationSet s : all) list.push_back({{"code", s.code()}, {"size", s.size()}, {"members", format_relation_set(s)}});
        out << json{{"count", all.size()}, {"subalgebras", list}}.dump(2) << '\n';
    } else {
        for (RelationSet s : all) {
            out << "0x" << std::hex << std::uppercase << s.code() << std::dec << std::nouppercase << '\t' << s.size() << '\t'
                << format_relation_set(s) << '\n';
        }
        out << all.size() << " expressive subalgebras\n";
    }
    return exit_ok;
}

// ---- convert ---------------------------------------------------------------

int cmd_convert(const std::string& path, const std::string& output, std::ostream& out) {
    const ConstraintNetwork net = parse_network(read_input(path));
    if (!net.is_atomic()) throw UsageError("convert needs a scenario: every pair must carry exactly one basic relation");
    write_output(output, rcc5::serialize(rcc5::omega_scenario(net)), out);
    return exit_ok;
}

// ---- gen / bench -----------------------------------------------------------

struct GenOptions {
    std::size_t n = 10;
    double density = 0.5;
    std::string profile = "FULL";
    std::uint64_t seed = 1;
    bool planted = false;
    std::string output;
};

ConstraintNetwork generate(std::size_t n, double density, RelationSet profile, std::uint64_t seed, bool planted) {
    return planted ? planted_network(n, density, profile, seed) : random_network(n, density, profile, seed);
}

int cmd_gen(const GenOptions& opt, std::ostream& out) {
    const RelationSet profile = parse_profile(opt.profile);
    const ConstraintNetwork net = generate(opt.n, opt.density, profile, opt.seed, opt.planted);
    std::ostringstream text;
    text << "# mc4 gen n=" << opt.n << " density=" << opt.density << " profile=" << opt.profile << " seed=" << opt.seed
         << (opt.planted ? " planted" : "") << '\n'
         << serialize_network(net);
    write_output(opt.output, text.str(), out);
    return exit_ok;
}

struct BenchOptions {
    std::string solver = "m81";
    std::vector<std::size_t> sizes{250, 500, 1000, 2000};
    double density = 1.0;
    std::string profile;
    std::uint64_t seed = 1;
    std::size_t repetitions = 5;
    bool planted = false;
    std::string output;
};

Verdict run_solver(const std::string& solver, const ConstraintNetwork& net) {
    if (solver == "m99") return solve_m99(net);
    if (solver == "m81") return solve_m81(net);
    if (solver == "m72") return solve_trivial_core(net, rel::cg);
    if (solver == "backtrack") return solve_backtracking(net);
    if (solver == "oracle") return solve_oracle(net);
    return solve(net).verdict;
}

RelationSet default_bench_profile(const std::string& solver) {
    if (solver == "m99") return catalog::m99;
    if (solver == "m81") return catalog::m81;
    if (solver == "m72") return catalog::m72;
    return catalog::full;
}

int cmd_bench(const BenchOptions& opt, std::ostream& out) {
    if (opt.solver == "oracle") {
        for (std::size_t n : opt.sizes) {
            if (n > default_oracle_limit) {
                throw UsageError("the oracle is limited to " + std::to_string(default_oracle_limit) + " vertices, requested " + std::to_string(n));
            }
        }
    }
    if (opt.repetitions == 0) throw UsageError("--reps must be positive");
    const RelationSet profile = opt.profile.empty() ? default_bench_profile(opt.solver) : parse_profile(opt.profile);

    std::ostringstream csv;
    csv << "n,density,solver,mean_us,p95_us,seed\n";
    for (std::size_t n : opt.sizes) {
        std::vector<double> micros;
        for (std::size_t rep = 0; rep < opt.repetitions; ++rep) {
            const ConstraintNetwork net = generate(n, opt.density, profile, opt.seed + rep, opt.planted);
            const auto start = std::chrono::steady_clock::now();
            const Verdict v = run_solver(opt.solver, net);
            const auto stop = std::chrono::steady_clock::now();
            static volatile bool sink;
            sink = v.consistent;
            micros.push_back(std::chrono::duration<double, std::micro>(stop - start).count());
        }
        double mean = 0;
        for (double m : micros) mean += m;
        mean /= static_cast<double>(micros.size());
        std::sort(micros.begin(), micros.end());
        // Nearest-rank percentile.
        const auto rank = static_cast<std::size_t>(std::ceil(0.95 * static_cast<double>(micros.size())));
        const double p95 = micros[std::max<std::size_t>(rank, 1) - 1];
        csv << n << ',' << opt.density << ',' << opt.solver << ',' << static_cast<long long>(std::llround(mean)) << ','
            << static_cast<long long>(std::llround(p95)) << ',' << opt.seed << '\n';
    }
    write_output(opt.output, csv.str(), out);
    return exit_ok;
}

// ---- verify ----------------------------------------------------------------

int cmd_verify(const std::string& format, std::ostream& out) {
    const auto lines = run_verification_suite();
    const bool all_passed = std::all_of(lines.begin(), lines.end(), [](const SuiteLine& l) { return l.passed; });
    if (format == "json") {
        json checks = json::array();
        for (const auto& l : lines) checks.push_back({{"name", l.name}, {"passed", l.passed}, {"detail", l.detail}});
        out << json{{"passed", all_passed}, {"checks", checks}}.dump(2) << '\n';
    } else {
        for (const auto& l : lines) {
            out << (l.passed ? "PASS " : "FAIL ") << l.name;
            if (!l.detail.empty()) out << "  [" << l.detail << "]";
            out << '\n';
        }
        out << (all_passed ? "all checks passed" : "some checks FAILED") << '\n';
    }
    return all_passed ? exit_ok : exit_inconsistent;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Reasoning engine for the MC-4 algebra of spatial congruence", "mc4"};
    app.require_subcommand(1);
    const std::vector<std::string> formats{"text", "json"};

    SolveOptions solve_opt;
    auto* solve_cmd = app.add_subcommand("solve", "Decide consistency of a network file");
    solve_cmd->add_option("path", solve_opt.path, "Network file, or - for standard input")->required();
    solve_cmd->add_option("--format", solve_opt.format)->check(CLI::IsMember(formats));
    solve_cmd->add_option("--solver", solve_opt.solver)->check(CLI::IsMember({"auto", "oracle", "backtrack", "m72", "m99", "m81"}));
    solve_cmd->add_option("--oracle-limit", solve_opt.oracle_limit, "Vertex cap for --solver=oracle");

    std::vector<std::string> relations;
    std::string format = "text";
    auto* classify_cmd = app.add_subcommand("classify", "Classify the algebra generated by some relations");
    classify_cmd->add_option("relations", relations, "Relations such as CG|CGPP")->required();
    classify_cmd->add_option("--format", format)->check(CLI::IsMember(formats));

    auto* closure_cmd = app.add_subcommand("closure", "Close a set of relations under composition, intersection, converse");
    closure_cmd->add_option("relations", relations)->required();
    closure_cmd->add_option("--format", format)->check(CLI::IsMember(formats));

    bool partition = false;
    auto* enumerate_cmd = app.add_subcommand("enumerate", "List the expressive subalgebras");
    enumerate_cmd->add_flag("--partition", partition, "Bucket them against the published tables");
    enumerate_cmd->add_option("--format", format)->check(CLI::IsMember(formats));

    std::vector<std::string> operands;
    auto* compose_cmd = app.add_subcommand("compose", "Print the composition table, or facts about two relations");
    compose_cmd->add_option("relations", operands);

    std::string convert_path, convert_output;
    auto* convert_cmd = app.add_subcommand("convert", "Map an MC-4 scenario to RCC-5");
    convert_cmd->add_option("path", convert_path)->required();
    convert_cmd->add_option("-o,--output", convert_output);

    GenOptions gen_opt;
    auto* gen_cmd = app.add_subcommand("gen", "Write a random network");
    gen_cmd->add_option("-n,--n", gen_opt.n)->required();
    gen_cmd->add_option("--density", gen_opt.density)->check(CLI::Range(0.0, 1.0));
    gen_cmd->add_option("--profile", gen_opt.profile, "M72, M78, M31, M81, M99, FULL or comma-separated relations");
    gen_cmd->add_option("--seed", gen_opt.seed);
    gen_cmd->add_flag("--planted", gen_opt.planted, "Only labels compatible with a hidden consistent scenario");
    gen_cmd->add_option("-o,--output", gen_opt.output);

    auto* verify_cmd = app.add_subcommand("verify", "Check the algebraic identities behind the solvers");
    verify_cmd->add_option("--format", format)->check(CLI::IsMember(formats));

    BenchOptions bench_opt;
    auto* bench_cmd = app.add_subcommand("bench", "Time a solver over seeded random batches (CSV)");
    bench_cmd->add_option("--solver", bench_opt.solver)->check(CLI::IsMember({"auto", "oracle", "backtrack", "m72", "m99", "m81"}));
    bench_cmd->add_option("--sizes", bench_opt.sizes)->delimiter(',');
    bench_cmd->add_option("--density", bench_opt.density)->check(CLI::Range(0.0, 1.0));
    bench_cmd->add_option("--profile", bench_opt.profile);
    bench_cmd->add_option("--seed", bench_opt.seed);
    bench_cmd->add_option("--reps", bench_opt.repetitions);
    bench_cmd->add_flag("--planted", bench_opt.planted);
    bench_cmd->add_option("-o,--output", bench_opt.output);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (solve_cmd->parsed()) return cmd_solve(solve_opt, out);
        if (classify_cmd->parsed()) return cmd_classify(relations, format, out);
        if (closure_cmd->parsed()) return cmd_closure(relations, format, out);
        if (enumerate_cmd->parsed()) return cmd_enumerate(partition, format, out);
        if (compose_cmd->parsed()) return cmd_compose(operands, out);
        if (convert_cmd->parsed()) return cmd_convert(convert_path, convert_output, out);
        if (gen_cmd->parsed()) return cmd_gen(gen_opt, out);
        if (verify_cmd->parsed()) return cmd_verify(format, out);
        if (bench_cmd->parsed()) return cmd_bench(bench_opt, out);
    } catch (const PreconditionError& e) {
        err << "mc4: solver precondition failed: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        err << "mc4: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}

} // namespace mc4::cli
