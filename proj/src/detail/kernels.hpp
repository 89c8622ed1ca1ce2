#ifndef HEDONICA_DETAIL_KERNELS_HPP
#define HEDONICA_DETAIL_KERNELS_HPP

// Hot loops over raw restricted growth strings. Players and blocks are
// 0-based here; the public API converts at the boundary.

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hedonica/game.hpp"

namespace hedonica::detail {

/// The value matrix multiplied by one positive common factor. Every
/// comparison the library makes is between sums of values (or against 0),
/// so a uniform positive scale preserves all verdicts and argmaxes.
template <class V>
struct ValueTable {
    using value_type = V;

    int n = 0;
    std::vector<V> v;
    Rational scale{1};  // stored = real * scale

    const V& operator()(int i, int j) const { return v[static_cast<std::size_t>(i) * n + j]; }
};

inline Rational to_real(const ValueTable<std::int64_t>& t, std::int64_t x) {
    return Rational(x) / t.scale;
}
inline Rational to_real(const ValueTable<Rational>& t, const Rational& x) { return x / t.scale; }

/// Integer table when the common-denominator scaling leaves every sum of up
/// to n*n entries inside int64.
std::optional<ValueTable<std::int64_t>> integer_table(const Game& g);
ValueTable<Rational> rational_table(const Game& g);

/// Calls fn with the fastest exact table for `g`.
template <class Fn>
decltype(auto) with_table(const Game& g, Fn&& fn) {
    if (auto t = integer_table(g)) return std::forward<Fn>(fn)(*t);
    return std::forward<Fn>(fn)(rational_table(g));
}

/// Per-player sums of values over every block of one partition:
/// sum(i, b) = Σ_{j ∈ b} v_i(j), which is i's utility for b ∪ {i}.
template <class V>
class BlockSums {
public:
    explicit BlockSums(const ValueTable<V>& t) : t_(t) {}

    void load(std::span<const int> labels, int blocks) {
        labels_ = labels;
        blocks_ = blocks;
        const int n = t_.n;
        sums_.assign(static_cast<std::size_t>(n) * blocks, V{});
        for (int i = 0; i < n; ++i) {
            V* row = &sums_[static_cast<std::size_t>(i) * blocks];
            for (int j = 0; j < n; ++j) {
                if (j != i) row[labels[j]] += t_(i, j);
            }
        }
    }

    const ValueTable<V>& table() const { return t_; }
    std::span<const int> labels() const { return labels_; }
    int blocks() const { return blocks_; }
    const V& sum(int i, int b) const { return sums_[static_cast<std::size_t>(i) * blocks_ + b]; }
    const V& utility(int i) const { return sum(i, labels_[i]); }

private:
    const ValueTable<V>& t_;
    std::span<const int> labels_;
    int blocks_ = 0;
    std::vector<V> sums_;
};

/// Least player with negative utility.
template <class V>
std::optional<int> ir_violation(const BlockSums<V>& s) {
    for (int i = 0; i < s.table().n; ++i) {
        if (s.utility(i) < V{}) return i;
    }
    return std::nullopt;
}

/// Least (player, target) beneficial deviation. Target -1 is the empty
/// coalition and orders before every existing block. With `individual`, a
/// move into a block also needs every member of that block to weakly welcome
/// the mover.
template <class V>
std::optional<std::pair<int, int>> deviation(const BlockSums<V>& s, bool individual) {
    const auto& t = s.table();
    const auto labels = s.labels();
    for (int i = 0; i < t.n; ++i) {
        const V& u = s.utility(i);
        if (u < V{}) return std::pair{i, -1};
        for (int b = 0; b < s.blocks(); ++b) {
            if (b == labels[i] || !(u < s.sum(i, b))) continue;
            if (individual) {
                bool welcome = true;
                for (int j = 0; j < t.n && welcome; ++j) {
                    if (labels[j] == b && t(j, i) < V{}) welcome = false;
                }
                if (!welcome) continue;
            }
            return std::pair{i, b};
        }
    }
    return std::nullopt;
}

/// Least (envious, envied) pair: i outside j's block would strictly prefer
/// j's seat, i.e. the coalition (block(j) \ {j}) ∪ {i}.
template <class V>
std::optional<std::pair<int, int>> envy(const BlockSums<V>& s) {
    const auto& t = s.table();
    const auto labels = s.labels();
    for (int i = 0; i < t.n; ++i) {
        const V& u = s.utility(i);
        for (int j = 0; j < t.n; ++j) {
            if (labels[j] == labels[i]) continue;
            if (u < s.sum(i, labels[j]) - t(i, j)) return std::pair{i, j};
        }
    }
    return std::nullopt;
}

/// Utility of every player under a labelling.
template <class V>
std::vector<V> utilities(const ValueTable<V>& t, std::span<const int> labels) {
    std::vector<V> u(static_cast<std::size_t>(t.n));
    for (int i = 0; i < t.n; ++i) {
        for (int j = 0; j < t.n; ++j) {
            if (j != i && labels[j] == labels[i]) u[i] += t(i, j);
        }
    }
    return u;
}

/// Least strictly better-off player when `labels` Pareto dominates the
/// utility vector `base`; nullopt otherwise. Bails out at the first player
/// who is worse off.
template <class V>
std::optional<int> dominating_witness(const ValueTable<V>& t, std::span<const int> labels, std::span<const V> base) {
    std::optional<int> witness;
    V u{};
    for (int i = 0; i < t.n; ++i) {
        u = V{};
        for (int j = 0; j < t.n; ++j) {
            if (j != i && labels[j] == labels[i]) u += t(i, j);
        }
        if (u < base[i]) return std::nullopt;
        if (!witness && base[i] < u) witness = i;
    }
    return witness;
}

}  // namespace hedonica::detail

#endif  // HEDONICA_DETAIL_KERNELS_HPP
