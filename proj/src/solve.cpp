#include "hedonica/solve.hpp"

#include <algorithm>
#include <numeric>

#include "detail/kernels.hpp"
#include "hedonica/enumeration.hpp"
#include "hedonica/errors.hpp"
#include "hedonica/verify.hpp"

namespace hedonica {

Rational f_positive_sum(const Game& g, Player i) {
    g.require_player(i);
    Rational total;
    for (Player j = 1; j <= g.size(); ++j) {
        if (g.value(i, j).sign() > 0) total += g.value(i, j);
    }
    return total;
}

Partition serial_dictatorship(const Game& g, DictatorPolicy policy) {
    const int n = g.size();
    for (Player i = 1; i <= n; ++i) {
        for (Player j = 1; j <= n; ++j) {
            if (i != j && g.value(i, j).is_zero()) {
                throw PreconditionError("serial dictatorship needs strict preferences, but player " +
                                        std::to_string(i) + " values player " + std::to_string(j) + " at 0");
            }
        }
    }

    std::vector<bool> remaining(static_cast<std::size_t>(n) + 1, true);
    std::vector<int> labels(static_cast<std::size_t>(n), -1);
    auto liked_sum = [&](Player d) {
        Rational total;
        for (Player j = 1; j <= n; ++j) {
            if (j != d && remaining[j] && g.value(d, j).sign() > 0) total += g.value(d, j);
        }
        return total;
    };

    int block = 0;
    for (int left = n; left > 0; ++block) {
        Player dictator = 0;
        std::optional<Rational> best;
        for (Player i = 1; i <= n; ++i) {
            if (!remaining[i]) continue;
            if (policy == DictatorPolicy::LowestIndex) {
                dictator = i;
                break;
            }
            Rational f = liked_sum(i);
            if (!best || f < *best) {
                best = std::move(f);
                dictator = i;
            }
        }
        std::vector<Player> members{dictator};
        for (Player j = 1; j <= n; ++j) {
            if (j != dictator && remaining[j] && g.value(dictator, j).sign() > 0) members.push_back(j);
        }
        for (Player j : members) {
            remaining[j] = false;
            labels[j - 1] = block;
        }
        left -= static_cast<int>(members.size());
    }
    return Partition::from_labels(labels);
}

ValuedPartition max_elitist(const Game& g) {
    const int n = g.size();
    Player best = 1;
    Rational best_f = f_positive_sum(g, 1);
    for (Player i = 2; i <= n; ++i) {
        Rational f = f_positive_sum(g, i);
        if (best_f < f) {
            best_f = std::move(f);
            best = i;
        }
    }
    std::vector<int> labels(static_cast<std::size_t>(n), 1);
    labels[best - 1] = 0;
    for (Player j = 1; j <= n; ++j) {
        if (g.value(best, j).sign() > 0) labels[j - 1] = 0;
    }
    return {Partition::from_labels(labels), best_f};
}

namespace {

/// Depth-first assignment of players 0..n-1 to existing blocks (in creation
/// order) or a fresh block. This visits complete assignments in restricted
/// growth string order, so with strict-improvement updates and pruning of
/// nodes that cannot beat the incumbent the first optimum in enumeration
/// order is returned. Both objectives are at least 0 (singletons), so nodes
/// whose bound is negative are pruned before any incumbent exists.
template <class V, class Objective>
class BranchAndBound {
public:
    BranchAndBound(const detail::ValueTable<V>& t, Objective& objective) : t_(t), objective_(objective) {
        labels_.assign(static_cast<std::size_t>(t.n), -1);
    }

    void run() {
        place(0);
    }

    std::vector<int> best_labels;
    V best{};
    SearchStats stats;

private:
    void place(int k) {
        const int n = t_.n;
        if (k == n) {
            const V value = objective_.leaf_value();
            if (best_labels.empty() || best < value) {
                best = value;
                best_labels = labels_;
            }
            return;
        }
        const int open = static_cast<int>(blocks_.size());
        for (int b = 0; b <= open; ++b) {
            if (b == open) blocks_.emplace_back();
            const auto slot = static_cast<std::size_t>(b);
            objective_.join(k, blocks_[slot]);
            blocks_[slot].push_back(k);
            labels_[k] = b;

            const V bound = objective_.bound(k);
            if (bound < V{} || (!best_labels.empty() && !(best < bound))) {
                ++stats.pruned;
            } else {
                ++stats.nodes_expanded;
                place(k + 1);
            }

            // place() may have grown blocks_, so index again
            blocks_[slot].pop_back();
            objective_.leave(k, blocks_[slot]);
            labels_[k] = -1;
            if (b == open) blocks_.pop_back();
        }
    }

    const detail::ValueTable<V>& t_;
    Objective& objective_;
    std::vector<int> labels_;
    std::vector<std::vector<int>> blocks_;
};

/// Bound: welfare among placed players plus, for every pair involving an
/// unplaced player, the larger of 0 and the pair's joint value.
template <class V>
class UtilitarianObjective {
public:
    explicit UtilitarianObjective(const detail::ValueTable<V>& t) : t_(t) {
        const int n = t.n;
        tail_.assign(static_cast<std::size_t>(n) + 1, V{});
        for (int k = n - 1; k >= 0; --k) {
            V add{};
            for (int i = 0; i < k; ++i) {
                const V joint = t(i, k) + t(k, i);
                if (V{} < joint) add += joint;
            }
            tail_[k] = tail_[k + 1] + add;
        }
    }

    void join(int k, const std::vector<int>& members) {
        for (int j : members) welfare_ += t_(j, k) + t_(k, j);
    }
    void leave(int k, const std::vector<int>& members) {
        for (int j : members) welfare_ -= t_(j, k) + t_(k, j);
    }
    V bound(int k) const { return welfare_ + tail_[k + 1]; }
    V leaf_value() const { return welfare_; }

private:
    const detail::ValueTable<V>& t_;
    std::vector<V> tail_;  // tail_[k]: optimistic value of pairs whose larger index is >= k
    V welfare_{};
};

/// Bound: the smallest, over placed players, of current utility plus every
/// positive value toward players not yet placed.
template <class V>
class EgalitarianObjective {
public:
    explicit EgalitarianObjective(const detail::ValueTable<V>& t) : t_(t) {
        const int n = t.n;
        utility_.assign(static_cast<std::size_t>(n), V{});
        tail_.assign(static_cast<std::size_t>(n) * (n + 1), V{});
        for (int i = 0; i < n; ++i) {
            for (int k = n - 1; k >= 0; --k) {
                V add{};
                if (k != i && V{} < t(i, k)) add = t(i, k);
                tail_[idx(i, k)] = tail_[idx(i, k + 1)] + add;
            }
        }
    }

    void join(int k, const std::vector<int>& members) {
        for (int j : members) {
            utility_[j] += t_(j, k);
            utility_[k] += t_(k, j);
        }
    }
    void leave(int k, const std::vector<int>& members) {
        for (int j : members) {
            utility_[j] -= t_(j, k);
            utility_[k] -= t_(k, j);
        }
    }
    V bound(int k) const {
        V lowest = utility_[0] + tail_[idx(0, k + 1)];
        for (int i = 1; i <= k; ++i) {
            const V reach = utility_[i] + tail_[idx(i, k + 1)];
            if (reach < lowest) lowest = reach;
        }
        return lowest;
    }
    V leaf_value() const { return *std::min_element(utility_.begin(), utility_.end()); }

private:
    std::size_t idx(int i, int k) const { return static_cast<std::size_t>(i) * (t_.n + 1) + k; }

    const detail::ValueTable<V>& t_;
    std::vector<V> utility_;
    std::vector<V> tail_;
};

template <template <class> class ObjectiveT>
SolveResult branch_and_bound(const Game& g, std::optional<int> limit) {
    require_enumerable(g.size(), limit);
    return detail::with_table(g, [&](const auto& table) {
        using V = typename std::decay_t<decltype(table)>::value_type;
        ObjectiveT<V> objective(table);
        BranchAndBound<V, ObjectiveT<V>> search(table, objective);
        search.run();
        SolveResult result{Partition::from_labels(search.best_labels), detail::to_real(table, search.best),
                           search.stats};
        result.stats.best_bound = result.value;
        return result;
    });
}

}  // namespace

SolveResult max_utilitarian(const Game& g, std::optional<int> limit) {
    return branch_and_bound<UtilitarianObjective>(g, limit);
}

SolveResult max_egalitarian(const Game& g, std::optional<int> limit) {
    return branch_and_bound<EgalitarianObjective>(g, limit);
}

LocalSearchResult nash_local_search(const Game& g, const Partition& seed, const StepObserver& observer) {
    require_compatible(g, seed);
    if (!is_symmetric(g)) {
        throw PreconditionError("Nash local search needs a symmetric game; termination is not guaranteed otherwise");
    }
    return detail::with_table(g, [&](const auto& table) {
        std::vector<int> labels = seed.labels();
        detail::BlockSums sums(table);
        LocalSearchResult result{seed, {}};
        if (observer) observer(seed);
        for (;;) {
            ++result.stats.nodes_expanded;
            const int blocks = *std::max_element(labels.begin(), labels.end()) + 1;
            sums.load(labels, blocks);
            const auto move = detail::deviation(sums, false);
            if (!move) break;
            labels[move->first] = move->second >= 0 ? move->second : blocks;
            labels = Partition::from_labels(labels).labels();
            if (observer) observer(Partition::from_labels(labels));
        }
        result.partition = Partition::from_labels(labels);
        result.stats.best_bound = welfare(g, result.partition).utilitarian;
        return result;
    });
}

LocalSearchResult pareto_ir_improve(const Game& g, std::optional<int> limit, const StepObserver& observer) {
    require_enumerable(g.size(), limit);
    return detail::with_table(g, [&](const auto& table) {
        LocalSearchResult result{Partition::singletons(g.size()), {}};
        if (observer) observer(result.partition);
        for (bool improved = true; improved;) {
            improved = false;
            const auto base = detail::utilities(table, result.partition.labels());
            for (PartitionStream stream(g.size()); !stream.done(); stream.advance()) {
                ++result.stats.nodes_expanded;
                if (detail::dominating_witness(table, stream.cursor(), std::span(base))) {
                    result.partition = stream.current();
                    if (observer) observer(result.partition);
                    improved = true;
                    break;
                }
            }
        }
        result.stats.best_bound = welfare(g, result.partition).utilitarian;
        return result;
    });
}

std::optional<Partition> exists_ef_ns(const Game& g, std::optional<int> limit) {
    auto stream = enumerate_partitions(g.size(), limit);
    return detail::with_table(g, [&](const auto& table) -> std::optional<Partition> {
        detail::BlockSums sums(table);
        for (; !stream.done(); stream.advance()) {
            sums.load(stream.cursor(), stream.block_count());
            if (!detail::deviation(sums, false) && !detail::envy(sums)) return stream.current();
        }
        return std::nullopt;
    });
}

std::optional<Partition> exists_ef_po(const Game& g, std::optional<int> limit) {
    for (auto& p : oracle_pareto_set(g, limit)) {
        if (check_envy_free(g, p).verdict == Verdict::Holds) return std::move(p);
    }
    return std::nullopt;
}

}  // namespace hedonica
