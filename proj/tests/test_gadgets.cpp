#include <doctest.h>

#include "hedonica/enumeration.hpp"
#include "hedonica/errors.hpp"
#include "hedonica/gadgets.hpp"
#include "hedonica/solve.hpp"
#include "hedonica/verify.hpp"
#include "oracle.hpp"

using namespace hedonica;

namespace {

E3CInstance one_triple() { return E3CInstance{3, {{1, 2, 3}}}; }

Player player_labelled(const Game& g, const std::string& label) {
    for (Player i = 1; i <= g.size(); ++i) {
        if (g.label(i) == label) return i;
    }
    FAIL("no player labelled " << label);
    return 0;
}

}  // namespace

TEST_CASE("E3C validation") {
    CHECK(validate(one_triple()).empty());
    CHECK_THROWS_AS(validate(E3CInstance{4, {}}), DomainError);
    CHECK_THROWS_AS(validate(E3CInstance{0, {}}), DomainError);
    CHECK_THROWS_AS(validate(E3CInstance{3, {{1, 2, 4}}}), DomainError);
    CHECK_THROWS_AS(validate(E3CInstance{3, {{0, 1, 2}}}), DomainError);
    CHECK_THROWS_AS(validate(E3CInstance{3, {{1, 1, 2}}}), DomainError);
    CHECK_THROWS_AS(validate(E3CInstance{3, {{1, 2, 3}, {3, 2, 1}}}), DomainError);

    CHECK(validate(E3CInstance{3, {}}).size() == 1);
    const E3CInstance crowded{6, {{1, 2, 3}, {1, 2, 4}, {1, 2, 5}, {1, 2, 6}, {3, 4, 5}}};
    const auto warnings = validate(crowded);
    REQUIRE(warnings.size() == 2);
    CHECK(warnings[0].find("element 1") != std::string::npos);
    CHECK(warnings[1].find("element 2") != std::string::npos);
    CHECK(gadget_po_verify(crowded).notes == warnings);
}

TEST_CASE("other source validation") {
    CHECK_THROWS_AS(validate(SchedulingInstance{0, {1}}), DomainError);
    CHECK_THROWS_AS(validate(SchedulingInstance{1, {1, 0}}), DomainError);
    CHECK_THROWS_AS(validate(SubsetSumZeroInstance{{1, 0}}), DomainError);
    CHECK_THROWS_AS(validate(AllocationInstance{0, 0, {}}), DomainError);
    CHECK_THROWS_AS(validate(AllocationInstance{1, 2, {{1}}}), DomainError);
    CHECK_THROWS_AS(validate(AllocationInstance{2, 1, {{1}}}), DomainError);
    CHECK_NOTHROW(validate(AllocationInstance{1, 1, {{-3}}}));
}

TEST_CASE("pareto verification gadget") {
    const auto inst = gadget_po_verify(one_triple());
    const Game& g = inst.game;
    CHECK(g.size() == 6);
    CHECK(is_symmetric(g));
    CHECK(is_strict(g));
    CHECK(inst.role_labels == std::vector<std::string>{"w^1", "x^1", "y^1", "z^1", "z^2", "z^3"});
    CHECK(g.labels() == inst.role_labels);
    CHECK(g.value(1, 2) == Rational(3));  // w-x
    CHECK(g.value(2, 3) == Rational(3));  // x-y
    CHECK(g.value(3, 1) == Rational(-1));  // y-w
    CHECK(g.value(3, 4) == Rational(1));  // y-z for a member of the triple
    CHECK(g.value(4, 5) == Rational(1, 2));
    CHECK(g.value(1, 4) == Rational(-7));

    REQUIRE(inst.distinguished_partition);
    const auto& d = *inst.distinguished_partition;
    CHECK(d == Partition::from_blocks({{1}, {2, 3}, {4, 5, 6}}, 6));
    CHECK(partition_utilities(g, d) == std::vector<Rational>{0, 3, 3, 1, 1, 1});
    CHECK(check_pareto_optimal(g, d).verdict == Verdict::Fails);
    CHECK(solve_e3c(one_triple()));

    const auto empty = gadget_po_verify(E3CInstance{3, {}});
    CHECK(empty.game.size() == 3);
    CHECK(*empty.distinguished_partition == Partition::grand(3));
    CHECK(check_pareto_optimal(empty.game, *empty.distinguished_partition).verdict == Verdict::Holds);
    CHECK_FALSE(empty.notes.empty());
    CHECK_FALSE(solve_e3c(E3CInstance{3, {}}));
}

TEST_CASE("y-z weights follow membership") {
    const auto inst = gadget_po_verify(E3CInstance{6, {{1, 2, 3}, {4, 5, 6}}});
    const Game& g = inst.game;
    CHECK(g.size() == 12);
    const Player y1 = player_labelled(g, "y^1"), y2 = player_labelled(g, "y^2");
    const Player w2 = player_labelled(g, "w^2");
    CHECK(g.value(y1, player_labelled(g, "z^2")) == Rational(1));
    CHECK(g.value(y1, player_labelled(g, "z^5")) == Rational(-7));
    CHECK(g.value(y2, player_labelled(g, "z^5")) == Rational(1));
    CHECK(g.value(y1, w2) == Rational(-1));
    CHECK(g.value(y2, player_labelled(g, "w^1")) == Rational(-1));
    CHECK(g.value(player_labelled(g, "z^1"), player_labelled(g, "z^6")) == Rational(1, 5));
    CHECK(g.value(player_labelled(g, "x^1"), w2) == Rational(-7));
}

TEST_CASE("egalitarian gadget") {
    const auto inst = gadget_egalitarian(SchedulingInstance{2, {3, 3, 2}});
    const Game& g = inst.game;
    CHECK(g.size() == 5);
    CHECK_FALSE(is_symmetric(g));
    CHECK(inst.role_labels == std::vector<std::string>{"machine 1", "machine 2", "s_1", "s_2", "s_3"});
    CHECK(g.value(1, 3) == Rational(3));
    CHECK(g.value(3, 1) == Rational(8));
    CHECK(g.value(1, 2) == Rational(-9));
    CHECK(g.value(3, 4) == Rational(0));
    CHECK_FALSE(inst.distinguished_partition);
    CHECK(max_egalitarian(g).value == Rational(3));
    CHECK(solve_scheduling(SchedulingInstance{2, {3, 3, 2}}).min_load == 3);

    CHECK(max_egalitarian(gadget_egalitarian(SchedulingInstance{1, {5}}).game).value == Rational(5));
    CHECK(max_egalitarian(gadget_egalitarian(SchedulingInstance{2, {2, 2}}).game).value == Rational(2));
    // a single machine with a job equal to P is symmetric by accident, so check p != P
    CHECK_FALSE(is_symmetric(gadget_egalitarian(SchedulingInstance{1, {1, 2}}).game));
}

TEST_CASE("scheduling brute force") {
    const auto s = solve_scheduling(SchedulingInstance{2, {3, 3, 2}});
    CHECK(s.min_load == 3);
    REQUIRE(s.machine_of_job.size() == 3);
    std::vector<std::int64_t> load(2);
    const std::vector<std::int64_t> p{3, 3, 2};
    for (std::size_t j = 0; j < 3; ++j) load[s.machine_of_job[j] - 1] += p[j];
    CHECK(std::min(load[0], load[1]) == 3);
    CHECK(solve_scheduling(SchedulingInstance{1, {5}}).min_load == 5);
    CHECK(solve_scheduling(SchedulingInstance{3, {1, 1}}).min_load == 0);
    CHECK(solve_scheduling(SchedulingInstance{2, {}}).min_load == 0);
    CHECK_THROWS_AS(solve_scheduling(SchedulingInstance{10, std::vector<std::int64_t>(8, 1)}), ResourceError);
}

TEST_CASE("pareto and rational gadget") {
    const auto inst = gadget_po_ir(SubsetSumZeroInstance{{1, -1}});
    const Game& g = inst.game;
    CHECK(g.size() == 5);
    CHECK_FALSE(is_strict(g));
    CHECK_FALSE(is_symmetric(g));
    CHECK(inst.role_labels == std::vector<std::string>{"x", "y_1", "y_2", "z_1", "z_2"});
    CHECK(g.value(1, 2) == Rational(3));
    CHECK(g.value(1, 3) == Rational(3));
    CHECK(g.value(1, 4) == Rational(1));
    CHECK(g.value(2, 5) == Rational(-1));
    CHECK(g.value(5, 2) == Rational(1));
    CHECK(g.value(3, 5) == Rational(1));
    CHECK(g.value(5, 3) == Rational(-1));
    CHECK(g.value(4, 5) == Rational(0));

    const auto chain = pareto_ir_improve(g);
    CHECK(chain.partition.block_of(1).members() == std::vector<Player>{1, 2, 3, 4, 5});
}

TEST_CASE("zero-sum subsets") {
    CHECK(solve_max_zero_subset(SubsetSumZeroInstance{{1, -1}}) == std::vector<std::size_t>{0, 1});
    CHECK(solve_max_zero_subset(SubsetSumZeroInstance{{2, -1, -1}}) == std::vector<std::size_t>{0, 1, 2});
    CHECK_FALSE(solve_max_zero_subset(SubsetSumZeroInstance{{1, 1}}));
    CHECK_FALSE(solve_max_zero_subset(SubsetSumZeroInstance{{}}));
    const auto ties = all_max_zero_subsets(SubsetSumZeroInstance{{1, -1, 1}});
    CHECK(ties == std::vector<std::vector<std::size_t>>{{0, 1}, {1, 2}});
    CHECK_THROWS_AS(solve_max_zero_subset(SubsetSumZeroInstance{std::vector<std::int64_t>(21, 1)}), ResourceError);
}

TEST_CASE("envy-free and nash stable gadget") {
    const auto inst = gadget_ef_ns(one_triple());
    const Game& g = inst.game;
    CHECK(g.size() == 10);
    CHECK(is_symmetric(g));
    CHECK(inst.role_labels[0] == "y^1");
    CHECK(inst.role_labels[1] == "z_1^1");
    CHECK(inst.role_labels[9] == "z_3^3");
    const Player y = 1, z11 = 2, z21 = 3, z31 = 4, z12 = 5;
    CHECK(g.value(z11, z21) == Rational(3));
    CHECK(g.value(z11, z31) == Rational(3));
    CHECK(g.value(z21, z31) == Rational(-7));
    CHECK(g.value(z11, z12) == Rational(1, 10));
    CHECK(g.value(y, z11) == Rational(14, 5));
    CHECK(g.value(y, z21) == Rational(-7));
    CHECK(g.value(z21, z12) == Rational(-7));

    // each element's three players form a copy of G1
    for (int r = 0; r < 3; ++r) {
        const Player base = 2 + 3 * r;
        for (Player a = 0; a < 3; ++a) {
            for (Player b = 0; b < 3; ++b) CHECK(g.value(base + a, base + b) == fixtures::g1().value(a + 1, b + 1));
        }
    }

    // the partition from the construction: y with all z_1, each z_2/z_3 alone
    const auto built = Partition::from_blocks({{1, 2, 5, 8}, {3}, {4}, {6}, {7}, {9}, {10}}, 10);
    CHECK(check_envy_free(g, built).verdict == Verdict::Holds);
    CHECK(check_nash_stable(g, built).verdict == Verdict::Holds);
    const auto u = partition_utilities(g, built);
    CHECK(u[z11 - 1] == Rational(3));
}

TEST_CASE("envy-free and pareto optimal gadget") {
    const auto inst = gadget_ef_po(AllocationInstance{2, 2, {{1, 0}, {0, 1}}});
    const Game& g = inst.game;
    CHECK(inst.role_labels == std::vector<std::string>{"agent 1", "agent 2", "x_1", "x_2"});
    CHECK(g.value(1, 2) == Rational(-8));  // W=2, |I u X|=4
    CHECK(g.value(1, 3) == Rational(1));
    CHECK(g.value(1, 4) == Rational(0));
    CHECK(g.value(3, 1) == Rational(0));
    CHECK(g.value(3, 4) == Rational(0));

    CHECK(exists_ef_po(gadget_ef_po(AllocationInstance{1, 1, {{1}}}).game) == Partition::grand(2));
    CHECK_FALSE(exists_ef_po(gadget_ef_po(AllocationInstance{2, 1, {{1}, {1}}}).game));
    CHECK(exists_ef_po(g) == Partition::from_blocks({{1, 3}, {2, 4}}, 4));
}

TEST_CASE("allocation brute force") {
    CHECK(solve_eef(AllocationInstance{1, 1, {{1}}}) == std::vector<int>{1});
    CHECK_FALSE(solve_eef(AllocationInstance{2, 1, {{1}, {1}}}));
    CHECK(solve_eef(AllocationInstance{2, 2, {{1, 0}, {0, 1}}}) == std::vector<int>{1, 2});
    CHECK(solve_eef(AllocationInstance{2, 0, {{}, {}}}) == std::vector<int>{});
    CHECK_THROWS_AS(solve_eef(AllocationInstance{10, 7, std::vector<std::vector<std::int64_t>>(10, std::vector<std::int64_t>(7, 1))}),
                    ResourceError);
}

TEST_CASE("E3C brute force") {
    CHECK(solve_e3c(one_triple()) == std::vector<std::array<int, 3>>{{1, 2, 3}});
    CHECK_FALSE(solve_e3c(E3CInstance{3, {}}));
    const E3CInstance six{6, {{1, 2, 3}, {1, 4, 5}, {4, 5, 6}}};
    CHECK(solve_e3c(six) == std::vector<std::array<int, 3>>{{1, 2, 3}, {4, 5, 6}});
    CHECK_FALSE(solve_e3c(E3CInstance{6, {{1, 2, 3}, {3, 4, 5}}}));

    E3CInstance many{9, {}};
    for (int a = 1; a <= 7 && many.triples.size() < 21; ++a) {
        for (int b = a + 1; b <= 8 && many.triples.size() < 21; ++b) many.triples.push_back({a, b, 9});
    }
    CHECK_THROWS_AS(solve_e3c(many), ResourceError);
}
