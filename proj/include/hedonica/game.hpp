#ifndef HEDONICA_GAME_HPP
#define HEDONICA_GAME_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "hedonica/rational.hpp"

namespace hedonica {

/// Players are numbered 1..n throughout the public interface.
using Player = int;

/// A nonempty, strictly increasing set of players.
class Coalition {
public:
    /// Sorts `members`; throws DomainError when empty, when it contains a
    /// duplicate or an index below 1.
    explicit Coalition(std::vector<Player> members);

    const std::vector<Player>& members() const noexcept { return members_; }
    std::size_t size() const noexcept { return members_.size(); }
    Player smallest() const { return members_.front(); }
    bool contains(Player i) const;

    auto begin() const noexcept { return members_.begin(); }
    auto end() const noexcept { return members_.end(); }

    friend bool operator==(const Coalition&, const Coalition&) = default;
    friend auto operator<=>(const Coalition&, const Coalition&) = default;

private:
    std::vector<Player> members_;
};

/// A partition of {1..n} into coalitions, held in canonical form: members
/// ascending within each block, blocks ordered by their smallest member.
///
/// The canonical form is exactly the block order induced by the partition's
/// restricted growth string, so `labels()` round-trips through
/// `from_labels()`.
class Partition {
public:
    /// Validates disjointness and coverage of {1..n}; canonicalizes.
    static Partition from_blocks(std::vector<std::vector<Player>> blocks, int n);
    /// Builds a partition from arbitrary per-player block labels (index 0 is
    /// player 1); equal labels mean the same block.
    static Partition from_labels(std::span<const int> labels);
    static Partition singletons(int n);
    static Partition grand(int n);

    int size() const noexcept { return static_cast<int>(block_of_.size()); }
    const std::vector<Coalition>& blocks() const noexcept { return blocks_; }
    std::size_t block_count() const noexcept { return blocks_.size(); }
    std::size_t block_index(Player i) const;
    const Coalition& block_of(Player i) const { return blocks_[block_index(i)]; }

    /// Restricted growth string: entry k is the block index of player k+1.
    const std::vector<int>& labels() const noexcept { return block_of_; }

    friend bool operator==(const Partition& a, const Partition& b) { return a.block_of_ == b.block_of_; }
    /// Orders partitions of equal size as the enumeration visits them.
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.block_of_ <=> b.block_of_; }

private:
    Partition() = default;

    std::vector<Coalition> blocks_;
    std::vector<int> block_of_;
};

/// An additively separable hedonic game: entry (i, j) of the value matrix is
/// the value player i assigns to player j. Immutable after construction.
class Game {
public:
    /// Throws DomainError unless `values` is a nonempty square matrix with a
    /// zero diagonal, or when `labels` is neither empty nor of length n.
    explicit Game(std::vector<std::vector<Rational>> values, std::vector<std::string> labels = {});

    int size() const noexcept { return n_; }
    const Rational& value(Player i, Player j) const;
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    /// Empty string when the game carries no labels.
    const std::string& label(Player i) const;

    void require_player(Player i) const;

    friend bool operator==(const Game& a, const Game& b) {
        return a.n_ == b.n_ && a.values_ == b.values_ && a.labels_ == b.labels_;
    }

private:
    int n_ = 0;
    std::vector<Rational> values_;
    std::vector<std::string> labels_;
};

/// A partition paired with an objective value.
struct ValuedPartition {
    Partition partition;
    Rational value;
};

struct WelfareSummary {
    Rational utilitarian;
    Rational egalitarian;
    Rational elitist;
    std::vector<Rational> per_player;  // index k holds player k+1
};

/// Σ_{j ∈ S, j ≠ i} v_i(j). Throws DomainError unless i ∈ S and S lies in 1..n.
Rational utility(const Game& g, Player i, const Coalition& s);

/// Throws DomainError when `p` is not a partition of the game's players.
void require_compatible(const Game& g, const Partition& p);

std::vector<Rational> partition_utilities(const Game& g, const Partition& p);
WelfareSummary welfare(const Game& g, const Partition& p);

bool is_symmetric(const Game& g);
/// Every off-diagonal value is nonzero.
bool is_strict(const Game& g);

namespace fixtures {

/// Three players: 1 likes 2 and 3 (value 3 each way), 2 and 3 dislike each
/// other (value -7). Symmetric and strict; admits no partition that is both
/// envy-free and Nash stable.
Game g1();

}  // namespace fixtures

}  // namespace hedonica

#endif  // HEDONICA_GAME_HPP
