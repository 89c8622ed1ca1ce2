#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "hedonica/cli.hpp"
#include "hedonica/io.hpp"

using namespace hedonica;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out, err;

    bool has(const std::string& line) const { return out.find(line + "\n") != std::string::npos; }
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "hedonica");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

/// Scratch directory removed at scope exit.
struct Scratch {
    fs::path dir;
    Scratch() {
        dir = fs::temp_directory_path() / ("hedonica-cli-" + std::to_string(std::random_device{}()));
        fs::create_directories(dir);
    }
    ~Scratch() { fs::remove_all(dir); }

    std::string write(const std::string& name, const std::string& text) const {
        const auto path = dir / name;
        std::ofstream(path) << text;
        return path.string();
    }
    std::string path(const std::string& name) const { return (dir / name).string(); }
    std::string read(const std::string& name) const {
        std::ifstream in(dir / name);
        std::ostringstream s;
        s << in.rdbuf();
        return s.str();
    }
};

const std::string kG1 = "hedonic 3\n0 3 3\n3 0 -7\n3 -7 0\n";

}  // namespace

TEST_CASE("check reports verdicts and witnesses") {
    Scratch tmp;
    const auto g1 = tmp.write("g1.hg", kG1);

    auto ns = run({"check", "--game", g1, "--partition", "{1,2}|{3}", "--props", "ns"});
    CHECK(ns.code == kExitSuccess);
    CHECK(ns.has("property: ns"));
    CHECK(ns.has("verdict: holds"));

    auto ef = run({"--machine", "check", "--game", g1, "--partition", "{1,2}|{3}", "--props", "ef"});
    CHECK(ef.code == kExitNegative);
    CHECK(ef.has("verdict: fails"));
    CHECK(ef.has("witness: player 3 envies 2"));

    auto po = run({"check", "--game", g1, "--partition", "{1,2,3}", "--props", "po", "--po-budget", "1"});
    CHECK(po.code == kExitResource);
    CHECK(po.has("verdict: unknown"));
    CHECK(po.has("work: 1"));

    // a failure outranks an unknown
    auto mixed = run({"check", "--game", g1, "--partition", "{1,2,3}", "--props", "po,ns", "--po-budget", "1"});
    CHECK(mixed.code == kExitNegative);

    auto alone = run({"check", "--game", g1, "--props", "ir,ns,is,ef,po"});
    CHECK(alone.has("partition: {1}|{2}|{3}"));
    CHECK(alone.has("witness: player 1 -> {2}"));
    CHECK(alone.has("witness: {1,2}|{3}"));
    CHECK(alone.code == kExitNegative);
}

TEST_CASE("partitions can come from files") {
    Scratch tmp;
    const auto g1 = tmp.write("g1.hg", kG1);
    const auto part = tmp.write("p.txt", "# best pair\n{1,2}|{3}\n");
    auto by_path = run({"check", "--game", g1, "--partition", part, "--props", "ns"});
    CHECK(by_path.code == kExitSuccess);
    auto by_flag = run({"check", "--game", g1, "--partition-file", part, "--props", "ir"});
    CHECK(by_flag.code == kExitSuccess);

    const auto other = tmp.write("q.txt", "{1,2,3}\n");
    auto both = run({"check", "--game", g1, "--partition", "{1,2}|{3}", "--partition-file", other, "--props", "ns"});
    CHECK(both.code == kExitSuccess);
    CHECK(both.has("partition: {1,2}|{3}"));
    CHECK(both.err.find("inline") != std::string::npos);
}

TEST_CASE("solve prints value and partition") {
    Scratch tmp;
    const auto g1 = tmp.write("g1.hg", kG1);
    auto ut = run({"--machine", "solve", "--game", g1, "--objective", "utilitarian"});
    CHECK(ut.code == kExitSuccess);
    CHECK(ut.has("value: 6"));
    CHECK(ut.has("partition: {1,2}|{3}"));
    CHECK(ut.out.find("nodes: ") != std::string::npos);

    CHECK(run({"solve", "--game", g1, "--objective", "egalitarian"}).has("value: 0"));
    CHECK(run({"solve", "--game", g1, "--objective", "elitist"}).has("partition: {1,2,3}"));
    CHECK(run({"solve", "--game", g1, "--objective", "serial-dictatorship"}).has("partition: {1,2,3}"));
    CHECK(run({"solve", "--game", g1, "--objective", "serial-dictatorship", "--dictator-order", "min-f"})
              .has("partition: {1,2}|{3}"));
    CHECK(run({"solve", "--game", g1, "--objective", "nash-local"}).has("partition: {1,2}|{3}"));
    CHECK(run({"solve", "--game", g1, "--objective", "nash-local", "--seed-partition", "{1,3}|{2}"})
              .has("partition: {1,3}|{2}"));
    CHECK(run({"solve", "--game", g1, "--objective", "po-ir"}).code == kExitSuccess);

    const auto weak = tmp.write("weak.hg", "hedonic 2\n0 0\n1 0\n");
    auto pre = run({"solve", "--game", weak, "--objective", "serial-dictatorship"});
    CHECK(pre.code == kExitUsage);
    CHECK(pre.err.find("strict") != std::string::npos);
}

TEST_CASE("exists") {
    Scratch tmp;
    const auto g1 = tmp.write("g1.hg", kG1);
    auto none = run({"exists", "--game", g1, "--props", "ef+ns"});
    CHECK(none.code == kExitNegative);
    CHECK(none.has("verdict: none"));
    auto some = run({"exists", "--game", g1, "--props", "ef+po"});
    CHECK(some.code == kExitSuccess);
    CHECK(some.has("verdict: exists"));
    CHECK(some.has("partition: {1,2,3}"));
    CHECK(run({"exists", "--game", g1, "--props", "ir+po"}).code == kExitUsage);
}

TEST_CASE("gadget files feed back into the other commands") {
    Scratch tmp;
    const auto src = tmp.write("e3c.txt", "r 3\ntriple 1 2 3\n");
    auto made = run({"gadget", "po-verify", "--source", src, "--out", tmp.path("g.hg"), "--out-partition",
                     tmp.path("d.txt")});
    CHECK(made.code == kExitSuccess);
    CHECK(made.has("players: 6"));
    CHECK(made.out.find("roles: 1=w^1 2=x^1") != std::string::npos);
    CHECK(tmp.read("d.txt") == "{1}|{2,3}|{4,5,6}\n");

    auto po = run({"check", "--game", tmp.path("g.hg"), "--partition", tmp.path("d.txt"), "--props", "po"});
    CHECK(po.code == kExitNegative);
    CHECK(po.out.find("witness: ") != std::string::npos);

    const auto jobs = tmp.write("jobs.txt", "machines 2\njobs 3 3 2\n");
    CHECK(run({"gadget", "egal", "--source", jobs, "--out", tmp.path("egal.hg")}).code == kExitSuccess);
    auto egal = run({"solve", "--game", tmp.path("egal.hg"), "--objective", "egalitarian"});
    CHECK(egal.has("value: 3"));
    CHECK(run({"gadget", "egal", "--source", jobs, "--out", tmp.path("x.hg"), "--out-partition", tmp.path("y")})
              .code == kExitUsage);

    const auto weights = tmp.write("w.txt", "weights 1 -1\n");
    CHECK(run({"gadget", "po-ir", "--source", weights, "--out", tmp.path("ir.hg")}).code == kExitSuccess);
    const auto alloc = tmp.write("a.txt", "agent 1\n");
    CHECK(run({"gadget", "ef-po", "--source", alloc, "--out", tmp.path("a.hg")}).code == kExitSuccess);
    CHECK(run({"exists", "--game", tmp.path("a.hg"), "--props", "ef+po"}).has("partition: {1,2}"));
    CHECK(run({"gadget", "ef-ns", "--source", src, "--out", tmp.path("n.hg")}).has("players: 10"));

    auto warned = run({"gadget", "po-verify", "--source", tmp.write("empty.txt", "r 3\n"), "--out", tmp.path("e.hg")});
    CHECK(warned.code == kExitSuccess);
    CHECK(warned.out.find("note: ") != std::string::npos);
}

TEST_CASE("enum summarizes the whole space") {
    Scratch tmp;
    const auto g1 = tmp.write("g1.hg", kG1);
    auto summary = run({"--machine", "enum", "--game", g1});
    CHECK(summary.code == kExitSuccess);
    CHECK(summary.has("partitions: 5"));
    CHECK(summary.has("ns: 2"));
    CHECK(summary.has("ef: 2"));
    CHECK(summary.has("po: 3"));
    CHECK(summary.has("max-utilitarian: 6"));

    auto all = run({"enum", "--game", g1, "--report", "all"});
    CHECK(all.has("partition: {1,3}|{2}"));
    CHECK(all.has("properties: ef,po"));
    CHECK(run({"--machine", "enum", "--game", g1}).out == summary.out);  // stable across runs
}

TEST_CASE("errors map to exit codes") {
    Scratch tmp;
    const auto g1 = tmp.write("g1.hg", kG1);
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"frobnicate"}).code == kExitUsage);
    auto unknown_flag = run({"check", "--game", g1, "--props", "ns", "--bogus"});
    CHECK(unknown_flag.code == kExitUsage);
    CHECK(unknown_flag.err.find("Usage") != std::string::npos);
    CHECK(run({"check", "--game", g1}).code == kExitUsage);
    CHECK(run({"check", "--game", g1, "--props", "core"}).code == kExitUsage);
    CHECK(run({"check", "--game", tmp.path("missing.hg"), "--props", "ns"}).code == kExitUsage);
    CHECK(run({"check", "--game", g1, "--partition", "{1,2}", "--props", "ns"}).code == kExitUsage);
    CHECK(run({"solve", "--game", g1, "--objective", "maxcut"}).code == kExitUsage);
    CHECK(run({"--help"}).code == kExitSuccess);

    auto parse = run({"check", "--game", tmp.write("bad.hg", "hedonic 2\n0 1\n1 5\n"), "--props", "ns"});
    CHECK(parse.code == kExitUsage);
    CHECK(parse.err.find("line 3") != std::string::npos);

    auto limited = run({"--limit", "2", "solve", "--game", g1, "--objective", "utilitarian"});
    CHECK(limited.code == kExitResource);
    CHECK(limited.err.find("limit") != std::string::npos);
    CHECK(run({"--limit", "2", "check", "--game", g1, "--props", "po"}).code == kExitResource);
}

TEST_CASE("human mode annotates labels") {
    Scratch tmp;
    const auto g = tmp.write("lab.hg", "hedonic 2\nlabel 1 a\nlabel 2 b\n0 -1\n-1 0\n");
    auto human = run({"check", "--game", g, "--partition", "{1,2}", "--props", "ir"});
    CHECK(human.has("witness: player 1 [a]"));
    CHECK(human.has("utilities: -1 -1"));
    auto machine = run({"--machine", "check", "--game", g, "--partition", "{1,2}", "--props", "ir"});
    CHECK(machine.has("witness: player 1"));
    CHECK(machine.out.find("utilities") == std::string::npos);
}
