#ifndef HEDONICA_SOLVE_HPP
#define HEDONICA_SOLVE_HPP

#include <cstdint>
#include <functional>
#include <optional>

#include "hedonica/game.hpp"

namespace hedonica {

/// How serial dictatorship picks the next dictator among remaining players.
enum class DictatorPolicy {
    LowestIndex,
    /// Smallest positive-value sum over the remaining players, ties by index.
    /// Steers away from handing the pick to whoever would do best.
    MinPositiveSum,
};

struct SearchStats {
    std::uint64_t nodes_expanded = 0;
    std::uint64_t pruned = 0;
    Rational best_bound;
};

struct SolveResult {
    Partition partition;
    Rational value;
    SearchStats stats;
};

struct LocalSearchResult {
    Partition partition;
    SearchStats stats;
};

/// Invoked with every partition a local search visits, starting point included.
using StepObserver = std::function<void(const Partition&)>;

/// f(i): sum of the strictly positive values v_i(j).
Rational f_positive_sum(const Game& g, Player i);

/// Each dictator in turn takes every remaining player it strictly likes.
/// Pareto optimal for strict games; throws PreconditionError naming a
/// zero-valued pair otherwise.
Partition serial_dictatorship(const Game& g, DictatorPolicy policy = DictatorPolicy::LowestIndex);

/// The player k with the largest f(k) (ties by index) together with
/// everyone k likes, and all remaining players in one block. The value is
/// f(k), the best elitist welfare any partition reaches.
ValuedPartition max_elitist(const Game& g);

/// Exact maximum utilitarian welfare by branch-and-bound over player-indexed
/// block assignments. Ties go to the earliest partition in enumeration order.
SolveResult max_utilitarian(const Game& g, std::optional<int> limit = std::nullopt);

/// Exact maximum egalitarian welfare with the same search skeleton.
SolveResult max_egalitarian(const Game& g, std::optional<int> limit = std::nullopt);

/// Applies the least beneficial Nash deviation until none is left. Requires
/// a symmetric game (PreconditionError otherwise), where every move raises
/// utilitarian welfare and the walk terminates in a Nash stable partition.
LocalSearchResult nash_local_search(const Game& g, const Partition& seed, const StepObserver& observer = {});

/// From the singletons, repeatedly moves to the first enumerated partition
/// that Pareto dominates the current one. Ends Pareto optimal and
/// individually rational.
LocalSearchResult pareto_ir_improve(const Game& g, std::optional<int> limit = std::nullopt,
                                    const StepObserver& observer = {});

/// First enumerated partition that is envy-free and Nash stable.
std::optional<Partition> exists_ef_ns(const Game& g, std::optional<int> limit = std::nullopt);

/// First enumerated Pareto optimal partition that is envy-free.
std::optional<Partition> exists_ef_po(const Game& g, std::optional<int> limit = std::nullopt);

}  // namespace hedonica

#endif  // HEDONICA_SOLVE_HPP
