#include "hedonica/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hedonica/enumeration.hpp"
#include "hedonica/errors.hpp"
#include "hedonica/io.hpp"
#include "hedonica/solve.hpp"
#include "hedonica/verify.hpp"

namespace hedonica {

namespace {

/// Bad input that is not tied to a parse position (unreadable file, bad
/// option value, conflicting options).
class InputError : public Error {
public:
    using Error::Error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) throw InputError("cannot write '" + path + "'");
}

std::string strip_comments(const std::string& text) {
    std::string out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        out += line.substr(0, line.find('#'));
        out += '\n';
    }
    return out;
}

bool looks_inline(const std::string& arg) {
    const auto first = arg.find_first_not_of(" \t");
    return first != std::string::npos && arg[first] == '{';
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string part;
    std::istringstream in(text);
    while (std::getline(in, part, sep)) {
        if (!part.empty()) parts.push_back(part);
    }
    return parts;
}

/// Line-oriented `key: value` report writer.
class Report {
public:
    Report(std::ostream& out, bool machine) : out_(out), machine_(machine) {}

    bool machine() const { return machine_; }
    bool labelled() const { return !machine_; }

    template <class T>
    void put(std::string_view key, const T& value) {
        out_ << key << ": " << value << '\n';
    }
    /// Emitted in human mode only.
    template <class T>
    void human(std::string_view key, const T& value) {
        if (!machine_) put(key, value);
    }

private:
    std::ostream& out_;
    bool machine_;
};

struct Options {
    bool machine = false;
    std::optional<int> limit;
};

Partition load_partition(const std::string& inline_or_path, const std::string& file, int n, std::ostream& err) {
    std::string text;
    if (!inline_or_path.empty() && looks_inline(inline_or_path)) {
        if (!file.empty()) {
            err << "warning: both an inline partition and --partition-file were given; using the inline partition\n";
        }
        text = inline_or_path;
    } else if (!inline_or_path.empty()) {
        if (!file.empty()) throw InputError("give the partition either with --partition or with --partition-file");
        text = read_file(inline_or_path);
    } else {
        text = read_file(file);
    }
    return parse_partition(strip_comments(text), n);
}

std::string utilities_line(const Game& g, const Partition& p) {
    std::string line;
    for (const auto& u : partition_utilities(g, p)) line += (line.empty() ? "" : " ") + u.str();
    return line;
}

// ---- check ----------------------------------------------------------------

struct CheckArgs {
    std::string game, partition, partition_file, props;
    std::optional<std::uint64_t> budget;
};

int run_check(const CheckArgs& a, const Options& o, std::ostream& out, std::ostream& err) {
    const Game g = parse_game(read_file(a.game));
    const Partition p = (a.partition.empty() && a.partition_file.empty())
                            ? Partition::singletons(g.size())
                            : load_partition(a.partition, a.partition_file, g.size(), err);
    std::vector<Property> props;
    for (const auto& name : split(a.props, ',')) {
        auto prop = property_from_name(name);
        if (!prop) throw InputError("unknown property '" + name + "' (expected ir, ns, is, ef, po)");
        props.push_back(*prop);
    }
    if (props.empty()) throw InputError("--props lists no property");

    Report r(out, o.machine);
    r.put("partition", serialize_partition(p));
    r.human("utilities", utilities_line(g, p));
    bool failed = false, unknown = false;
    for (Property prop : props) {
        const auto report = check(g, p, prop, a.budget, o.limit);
        r.put("property", property_name(prop));
        r.put("verdict", verdict_name(report.verdict));
        if (report.witness) r.put("witness", format_witness(g, *report.witness, r.labelled()));
        if (prop == Property::ParetoOptimal) r.put("work", report.work);
        failed = failed || report.verdict == Verdict::Fails;
        unknown = unknown || report.verdict == Verdict::Unknown;
    }
    if (failed) return kExitNegative;
    return unknown ? kExitResource : kExitSuccess;
}

// ---- solve ----------------------------------------------------------------

struct SolveArgs {
    std::string game, objective, dictator_order = "index", seed, seed_file;
};

int run_solve(const SolveArgs& a, const Options& o, std::ostream& out, std::ostream& err) {
    const Game g = parse_game(read_file(a.game));
    Report r(out, o.machine);
    r.put("objective", a.objective);

    std::optional<Partition> result;
    if (a.objective == "utilitarian" || a.objective == "egalitarian") {
        const auto s = a.objective == "utilitarian" ? max_utilitarian(g, o.limit) : max_egalitarian(g, o.limit);
        r.put("value", s.value);
        r.put("partition", serialize_partition(s.partition));
        r.put("nodes", s.stats.nodes_expanded);
        r.human("pruned", s.stats.pruned);
        result = s.partition;
    } else if (a.objective == "elitist") {
        const auto s = max_elitist(g);
        r.put("value", s.value);
        r.put("partition", serialize_partition(s.partition));
        result = s.partition;
    } else if (a.objective == "serial-dictatorship") {
        DictatorPolicy policy;
        if (a.dictator_order == "index") {
            policy = DictatorPolicy::LowestIndex;
        } else if (a.dictator_order == "min-f") {
            policy = DictatorPolicy::MinPositiveSum;
        } else {
            throw InputError("unknown dictator order '" + a.dictator_order + "' (expected index or min-f)");
        }
        result = serial_dictatorship(g, policy);
        r.put("partition", serialize_partition(*result));
        r.put("value", welfare(g, *result).utilitarian);
    } else if (a.objective == "nash-local") {
        const Partition seed = (a.seed.empty() && a.seed_file.empty()) ? Partition::singletons(g.size())
                                                                       : load_partition(a.seed, a.seed_file, g.size(), err);
        const auto s = nash_local_search(g, seed);
        r.put("partition", serialize_partition(s.partition));
        r.put("value", s.stats.best_bound);
        r.put("nodes", s.stats.nodes_expanded);
        result = s.partition;
    } else if (a.objective == "po-ir") {
        const auto s = pareto_ir_improve(g, o.limit);
        r.put("partition", serialize_partition(s.partition));
        r.put("value", s.stats.best_bound);
        r.put("nodes", s.stats.nodes_expanded);
        result = s.partition;
    } else {
        throw InputError("unknown objective '" + a.objective + "'");
    }
    r.human("utilities", utilities_line(g, *result));
    return kExitSuccess;
}

// ---- exists ---------------------------------------------------------------

int run_exists(const std::string& game, const std::string& props, const Options& o, std::ostream& out) {
    const Game g = parse_game(read_file(game));
    std::optional<Partition> found;
    if (props == "ef+ns" || props == "ns+ef") {
        found = exists_ef_ns(g, o.limit);
    } else if (props == "ef+po" || props == "po+ef") {
        found = exists_ef_po(g, o.limit);
    } else {
        throw InputError("unknown property combination '" + props + "' (expected ef+ns or ef+po)");
    }
    Report r(out, o.machine);
    r.put("property", props);
    r.put("verdict", found ? "exists" : "none");
    if (found) {
        r.put("partition", serialize_partition(*found));
        r.human("utilities", utilities_line(g, *found));
    }
    return found ? kExitSuccess : kExitNegative;
}

// ---- gadget ---------------------------------------------------------------

struct GadgetArgs {
    std::string kind, source, out, out_partition;
};

int run_gadget(const GadgetArgs& a, const Options& o, std::ostream& out) {
    const auto kind = gadget_kind_from_name(a.kind);
    if (!kind) throw InputError("unknown gadget '" + a.kind + "' (expected po-verify, ef-ns, egal, po-ir, ef-po)");
    const std::string text = read_file(a.source);
    GadgetInstance inst = [&] {
        switch (*kind) {
            case GadgetKind::PoVerify: return gadget_po_verify(parse_e3c(text));
            case GadgetKind::EfNs: return gadget_ef_ns(parse_e3c(text));
            case GadgetKind::Egalitarian: return gadget_egalitarian(parse_scheduling(text));
            case GadgetKind::PoIr: return gadget_po_ir(parse_subset_sum(text));
            case GadgetKind::EfPo: break;
        }
        return gadget_ef_po(parse_allocation(text));
    }();
    if (!a.out_partition.empty() && !inst.distinguished_partition) {
        throw InputError("gadget '" + a.kind + "' has no distinguished partition to write");
    }

    write_file(a.out, serialize_game(inst.game));
    if (!a.out_partition.empty()) write_file(a.out_partition, serialize_partition(*inst.distinguished_partition) + "\n");

    Report r(out, o.machine);
    r.put("gadget", a.kind);
    r.put("players", inst.game.size());
    r.put("symmetric", is_symmetric(inst.game) ? "yes" : "no");
    r.put("strict", is_strict(inst.game) ? "yes" : "no");
    if (inst.distinguished_partition) r.put("partition", serialize_partition(*inst.distinguished_partition));
    for (const auto& note : inst.notes) r.put("note", note);
    if (!r.machine()) {
        std::string roles;
        for (std::size_t k = 0; k < inst.role_labels.size(); ++k) {
            roles += (k ? " " : "") + std::to_string(k + 1) + "=" + inst.role_labels[k];
        }
        r.put("roles", roles);
    }
    return kExitSuccess;
}

// ---- enum -----------------------------------------------------------------

int run_enum(const std::string& game, const std::string& mode, const Options& o, std::ostream& out) {
    if (mode != "summary" && mode != "all") throw InputError("unknown report '" + mode + "' (expected summary or all)");
    const Game g = parse_game(read_file(game));
    auto stream = enumerate_partitions(g.size(), o.limit);
    const auto pareto = oracle_pareto_set(g, o.limit);
    std::size_t next_pareto = 0;

    constexpr std::array kLocal{Property::IndividualRationality, Property::NashStable, Property::IndividuallyStable,
                                Property::EnvyFree};
    std::array<std::uint64_t, 5> counts{};
    std::uint64_t total = 0;
    Report r(out, o.machine);
    for (; !stream.done(); stream.advance()) {
        ++total;
        const Partition p = stream.current();
        std::string flags;
        for (Property prop : kLocal) {
            if (check(g, p, prop).verdict == Verdict::Holds) {
                ++counts[static_cast<std::size_t>(prop)];
                flags += (flags.empty() ? "" : ",") + std::string(property_name(prop));
            }
        }
        if (next_pareto < pareto.size() && pareto[next_pareto] == p) {
            ++next_pareto;
            ++counts[static_cast<std::size_t>(Property::ParetoOptimal)];
            flags += (flags.empty() ? "" : ",") + std::string("po");
        }
        if (mode == "all") {
            r.put("partition", serialize_partition(p));
            r.put("utilities", utilities_line(g, p));
            r.put("properties", flags.empty() ? "-" : flags);
        }
    }
    r.put("partitions", total);
    for (std::size_t k = 0; k < counts.size(); ++k) r.put(property_name(static_cast<Property>(k)), counts[k]);
    r.put("max-utilitarian", oracle_optimal(g, Objective::Utilitarian, o.limit).value);
    r.put("max-egalitarian", oracle_optimal(g, Objective::Egalitarian, o.limit).value);
    r.put("max-elitist", oracle_optimal(g, Objective::Elitist, o.limit).value);
    return kExitSuccess;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact solver and verifier for additively separable hedonic games", "hedonica"};
    app.failure_message(CLI::FailureMessage::help);
    app.require_subcommand(1);

    Options opts;
    int limit = 0;
    app.add_flag("--machine", opts.machine, "Stable machine-readable output without labels");
    app.add_option("--limit", limit, "Largest player count for exhaustive enumeration")->check(CLI::PositiveNumber);

    CheckArgs check_args;
    std::uint64_t budget = 0;
    auto* check_cmd = app.add_subcommand("check", "Check properties of a partition");
    check_cmd->add_option("--game", check_args.game, "Game file")->required();
    check_cmd->add_option("--partition", check_args.partition, "Partition, inline like '{1,2}|{3}' or a file");
    check_cmd->add_option("--partition-file", check_args.partition_file, "Partition file");
    check_cmd->add_option("--props", check_args.props, "Comma-separated subset of ir,ns,is,ef,po")->required();
    auto* budget_opt = check_cmd->add_option("--po-budget", budget, "Most partitions the Pareto check may examine");

    SolveArgs solve_args;
    auto* solve_cmd = app.add_subcommand("solve", "Compute a partition");
    solve_cmd->add_option("--game", solve_args.game, "Game file")->required();
    solve_cmd->add_option("--objective", solve_args.objective)
        ->required()
        ->check(CLI::IsMember({"utilitarian", "egalitarian", "elitist", "serial-dictatorship", "nash-local", "po-ir"}));
    solve_cmd->add_option("--dictator-order", solve_args.dictator_order, "index or min-f")
        ->check(CLI::IsMember({"index", "min-f"}));
    solve_cmd->add_option("--seed-partition", solve_args.seed, "Starting partition for nash-local");
    solve_cmd->add_option("--seed-partition-file", solve_args.seed_file, "Starting partition file for nash-local");

    std::string exists_game, exists_props;
    auto* exists_cmd = app.add_subcommand("exists", "Search for a partition with two properties");
    exists_cmd->add_option("--game", exists_game, "Game file")->required();
    exists_cmd->add_option("--props", exists_props, "ef+ns or ef+po")->required();

    GadgetArgs gadget_args;
    auto* gadget_cmd = app.add_subcommand("gadget", "Build a reduction gadget game from a source instance");
    gadget_cmd->add_option("kind", gadget_args.kind, "po-verify, ef-ns, egal, po-ir or ef-po")
        ->required()
        ->check(CLI::IsMember({"po-verify", "ef-ns", "egal", "po-ir", "ef-po"}));
    gadget_cmd->add_option("--source", gadget_args.source, "Source instance file")->required();
    gadget_cmd->add_option("--out", gadget_args.out, "Game file to write")->required();
    gadget_cmd->add_option("--out-partition", gadget_args.out_partition, "Distinguished partition file to write");

    std::string enum_game, enum_report = "summary";
    auto* enum_cmd = app.add_subcommand("enum", "Enumerate every partition of a game");
    enum_cmd->add_option("--game", enum_game, "Game file")->required();
    enum_cmd->add_option("--report", enum_report, "summary or all")->check(CLI::IsMember({"summary", "all"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitSuccess : kExitUsage;
    }
    if (limit > 0) opts.limit = limit;
    if (budget_opt->count() > 0) check_args.budget = budget;

    try {
        if (check_cmd->parsed()) return run_check(check_args, opts, out, err);
        if (solve_cmd->parsed()) return run_solve(solve_args, opts, out, err);
        if (exists_cmd->parsed()) return run_exists(exists_game, exists_props, opts, out);
        if (gadget_cmd->parsed()) return run_gadget(gadget_args, opts, out);
        return run_enum(enum_game, enum_report, opts, out);
    } catch (const ResourceError& e) {
        err << "error: " << e.what() << '\n';
        return kExitResource;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace hedonica
