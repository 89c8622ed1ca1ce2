#ifndef HEDONICA_ENUMERATION_HPP
#define HEDONICA_ENUMERATION_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hedonica/game.hpp"

namespace hedonica {

/// Largest player count exhaustive enumeration accepts by default.
inline constexpr int kDefaultEnumerationLimit = 13;

/// The active enumeration limit: `HEDONICA_LIMIT` when set to a positive
/// integer, kDefaultEnumerationLimit otherwise.
int enumeration_limit();

/// Throws ResourceError when n exceeds `limit` (or enumeration_limit()).
void require_enumerable(int n, std::optional<int> limit = std::nullopt);

/// Bell number B(n); exact for n <= 25.
std::uint64_t bell_number(int n);

/// Lexicographic walk over the restricted growth strings of length n, i.e.
/// over every set partition of {1..n} exactly once.
///
/// A stream may be pinned to a fixed prefix; streams over the distinct valid
/// prefixes of one length cover the whole space disjointly, so they can be
/// handed to independent workers. The cursor can be read back and used to
/// resume a stream later.
class PartitionStream {
public:
    /// Full stream over partitions of {1..n}, starting at the grand coalition.
    explicit PartitionStream(int n);

    /// Stream over the partitions whose restricted growth string starts with
    /// `prefix`. Throws DomainError when `prefix` is not a valid prefix.
    static PartitionStream with_prefix(int n, std::span<const int> prefix);

    /// Continue from `cursor` (inclusive); positions before `fixed` stay put.
    static PartitionStream resume(std::span<const int> cursor, std::size_t fixed = 0);

    int size() const noexcept { return static_cast<int>(labels_.size()); }
    bool done() const noexcept { return done_; }
    std::span<const int> cursor() const noexcept { return labels_; }
    /// Number of blocks of the current partition.
    int block_count() const noexcept { return blocks_; }
    Partition current() const { return Partition::from_labels(labels_); }
    void advance();

private:
    PartitionStream() = default;
    void recount();

    std::vector<int> labels_;
    std::vector<int> prefix_max_;  // prefix_max_[k] = max(labels_[0..k))
    std::size_t fixed_ = 0;
    int blocks_ = 0;
    bool done_ = false;
};

/// Full stream after checking n against the enumeration limit.
PartitionStream enumerate_partitions(int n, std::optional<int> limit = std::nullopt);

struct DominanceVerdict {
    bool dominates = false;
    std::optional<Player> strict_witness;  // least strictly better-off player
};

/// Does `p_new` Pareto dominate `p_old`?
DominanceVerdict pareto_dominates(const Game& g, const Partition& p_new, const Partition& p_old);

enum class Objective { Utilitarian, Egalitarian, Elitist };

/// Best partition by full enumeration; ties go to the earliest enumerated.
ValuedPartition oracle_optimal(const Game& g, Objective objective, std::optional<int> limit = std::nullopt);

/// Every partition no other partition Pareto dominates, in enumeration order.
std::vector<Partition> oracle_pareto_set(const Game& g, std::optional<int> limit = std::nullopt);

}  // namespace hedonica

#endif  // HEDONICA_ENUMERATION_HPP
