#include "hedonica/enumeration.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <numeric>

#include "detail/kernels.hpp"
#include "hedonica/errors.hpp"

namespace hedonica {

int enumeration_limit() {
    if (const char* env = std::getenv("HEDONICA_LIMIT")) {
        int value = 0;
        const char* end = env + std::strlen(env);
        auto [ptr, ec] = std::from_chars(env, end, value);
        if (ec == std::errc() && ptr == end && value > 0) return value;
    }
    return kDefaultEnumerationLimit;
}

void require_enumerable(int n, std::optional<int> limit) {
    const int cap = limit.value_or(enumeration_limit());
    if (n > cap) {
        throw ResourceError("exhaustive enumeration over " + std::to_string(n) + " players exceeds the limit of " +
                            std::to_string(cap) + " (raise it with --limit or HEDONICA_LIMIT)");
    }
}

std::uint64_t bell_number(int n) {
    if (n < 0 || n > 25) throw DomainError("bell_number is exact only for 0 <= n <= 25");
    // Bell triangle.
    std::vector<std::uint64_t> row{1};
    for (int k = 0; k < n; ++k) {
        std::vector<std::uint64_t> next{row.back()};
        for (std::uint64_t x : row) next.push_back(next.back() + x);
        row = std::move(next);
    }
    return row.front();
}

namespace {

void require_rgs_prefix(std::span<const int> labels) {
    int max = -1;
    for (std::size_t k = 0; k < labels.size(); ++k) {
        if (labels[k] < 0 || labels[k] > max + 1) {
            throw DomainError("position " + std::to_string(k + 1) + " breaks the restricted growth rule");
        }
        max = std::max(max, labels[k]);
    }
}

}  // namespace

PartitionStream::PartitionStream(int n) {
    if (n < 1) throw DomainError("enumeration needs at least one player");
    labels_.assign(static_cast<std::size_t>(n), 0);
    recount();
}

PartitionStream PartitionStream::with_prefix(int n, std::span<const int> prefix) {
    if (prefix.size() > static_cast<std::size_t>(n)) throw DomainError("prefix longer than the player count");
    require_rgs_prefix(prefix);
    PartitionStream s(n);
    std::copy(prefix.begin(), prefix.end(), s.labels_.begin());
    s.fixed_ = prefix.size();
    s.recount();
    return s;
}

PartitionStream PartitionStream::resume(std::span<const int> cursor, std::size_t fixed) {
    if (cursor.empty()) throw DomainError("enumeration needs at least one player");
    if (fixed > cursor.size()) throw DomainError("fixed prefix longer than the cursor");
    require_rgs_prefix(cursor);
    PartitionStream s;
    s.labels_.assign(cursor.begin(), cursor.end());
    s.fixed_ = fixed;
    s.recount();
    return s;
}

void PartitionStream::recount() {
    prefix_max_.assign(labels_.size(), -1);
    int max = -1;
    for (std::size_t k = 0; k < labels_.size(); ++k) {
        prefix_max_[k] = max;
        max = std::max(max, labels_[k]);
    }
    blocks_ = max + 1;
}

void PartitionStream::advance() {
    if (done_) return;
    const std::size_t n = labels_.size();
    const std::size_t lowest = std::max<std::size_t>(fixed_, 1);
    for (std::size_t k = n; k-- > lowest;) {
        if (labels_[k] <= prefix_max_[k]) {
            ++labels_[k];
            const int max = std::max(prefix_max_[k], labels_[k]);
            for (std::size_t j = k + 1; j < n; ++j) {
                labels_[j] = 0;
                prefix_max_[j] = max;
            }
            blocks_ = max + 1;
            return;
        }
    }
    done_ = true;
}

PartitionStream enumerate_partitions(int n, std::optional<int> limit) {
    require_enumerable(n, limit);
    return PartitionStream(n);
}

DominanceVerdict pareto_dominates(const Game& g, const Partition& p_new, const Partition& p_old) {
    require_compatible(g, p_new);
    require_compatible(g, p_old);
    const auto after = partition_utilities(g, p_new);
    const auto before = partition_utilities(g, p_old);
    DominanceVerdict verdict;
    for (std::size_t k = 0; k < after.size(); ++k) {
        if (after[k] < before[k]) return {};
        if (!verdict.strict_witness && before[k] < after[k]) verdict.strict_witness = static_cast<Player>(k + 1);
    }
    verdict.dominates = verdict.strict_witness.has_value();
    return verdict;
}

ValuedPartition oracle_optimal(const Game& g, Objective objective, std::optional<int> limit) {
    auto stream = enumerate_partitions(g.size(), limit);
    return detail::with_table(g, [&](const auto& table) {
        using V = typename std::decay_t<decltype(table)>::value_type;
        auto score = [&](const std::vector<V>& u) {
            switch (objective) {
                case Objective::Utilitarian: return std::accumulate(u.begin(), u.end(), V{});
                case Objective::Egalitarian: return *std::min_element(u.begin(), u.end());
                case Objective::Elitist: break;
            }
            return *std::max_element(u.begin(), u.end());
        };
        std::vector<int> best_labels;
        V best{};
        for (; !stream.done(); stream.advance()) {
            const V value = score(detail::utilities(table, stream.cursor()));
            if (best_labels.empty() || best < value) {
                best = value;
                best_labels.assign(stream.cursor().begin(), stream.cursor().end());
            }
        }
        return ValuedPartition{Partition::from_labels(best_labels), detail::to_real(table, best)};
    });
}

std::vector<Partition> oracle_pareto_set(const Game& g, std::optional<int> limit) {
    auto stream = enumerate_partitions(g.size(), limit);
    const auto n = static_cast<std::size_t>(g.size());
    return detail::with_table(g, [&](const auto& table) {
        using V = typename std::decay_t<decltype(table)>::value_type;
        std::vector<int> all_labels;
        std::vector<V> all_utils;
        std::vector<V> sums;
        for (; !stream.done(); stream.advance()) {
            auto u = detail::utilities(table, stream.cursor());
            sums.push_back(std::accumulate(u.begin(), u.end(), V{}));
            all_labels.insert(all_labels.end(), stream.cursor().begin(), stream.cursor().end());
            all_utils.insert(all_utils.end(), u.begin(), u.end());
        }
        const std::size_t count = sums.size();
        auto utils_of = [&](std::size_t k) { return std::span<const V>(all_utils).subspan(k * n, n); };

        // A dominator has a strictly larger utility sum, and dominance is
        // transitive, so scanning by decreasing sum only needs to test
        // against partitions already known to be undominated.
        std::vector<std::size_t> order(count);
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return sums[b] < sums[a]; });

        std::vector<std::size_t> front;
        for (std::size_t k : order) {
            const auto u = utils_of(k);
            const bool dominated = std::any_of(front.begin(), front.end(), [&](std::size_t f) {
                const auto w = utils_of(f);
                bool strict = false;
                for (std::size_t i = 0; i < n; ++i) {
                    if (w[i] < u[i]) return false;
                    if (u[i] < w[i]) strict = true;
                }
                return strict;
            });
            if (!dominated) front.push_back(k);
        }
        std::sort(front.begin(), front.end());
        std::vector<Partition> result;
        result.reserve(front.size());
        for (std::size_t k : front) {
            result.push_back(Partition::from_labels(std::span<const int>(all_labels).subspan(k * n, n)));
        }
        return result;
    });
}

}  // namespace hedonica
