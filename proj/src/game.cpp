#include "hedonica/game.hpp"

#include <algorithm>
#include <map>

#include "hedonica/errors.hpp"

namespace hedonica {

Coalition::Coalition(std::vector<Player> members) : members_(std::move(members)) {
    if (members_.empty()) throw DomainError("coalition must be nonempty");
    std::sort(members_.begin(), members_.end());
    if (members_.front() < 1) {
        throw DomainError("player index " + std::to_string(members_.front()) + " is below 1");
    }
    const auto dup = std::adjacent_find(members_.begin(), members_.end());
    if (dup != members_.end()) {
        throw DomainError("player " + std::to_string(*dup) + " listed twice in a coalition");
    }
}

bool Coalition::contains(Player i) const {
    return std::binary_search(members_.begin(), members_.end(), i);
}

Partition Partition::from_blocks(std::vector<std::vector<Player>> blocks, int n) {
    if (n < 1) throw DomainError("partition needs at least one player");
    std::vector<int> label(static_cast<std::size_t>(n), -1);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].empty()) throw DomainError("partition contains an empty block");
        for (Player i : blocks[b]) {
            if (i < 1 || i > n) {
                throw DomainError("player " + std::to_string(i) + " outside 1.." + std::to_string(n));
            }
            if (label[i - 1] != -1) {
                throw DomainError("player " + std::to_string(i) + " appears in more than one block");
            }
            label[i - 1] = static_cast<int>(b);
        }
    }
    for (int i = 0; i < n; ++i) {
        if (label[i] == -1) throw DomainError("player " + std::to_string(i + 1) + " is not covered");
    }
    return from_labels(label);
}

Partition Partition::from_labels(std::span<const int> labels) {
    if (labels.empty()) throw DomainError("partition needs at least one player");
    Partition p;
    std::map<int, int> renumber;
    std::vector<std::vector<Player>> members;
    p.block_of_.reserve(labels.size());
    for (std::size_t k = 0; k < labels.size(); ++k) {
        auto [it, inserted] = renumber.try_emplace(labels[k], static_cast<int>(renumber.size()));
        if (inserted) members.emplace_back();
        members[it->second].push_back(static_cast<Player>(k + 1));
        p.block_of_.push_back(it->second);
    }
    p.blocks_.reserve(members.size());
    for (auto& m : members) p.blocks_.emplace_back(std::move(m));
    return p;
}

Partition Partition::singletons(int n) {
    std::vector<int> labels(static_cast<std::size_t>(std::max(n, 0)));
    for (int i = 0; i < n; ++i) labels[i] = i;
    return from_labels(labels);
}

Partition Partition::grand(int n) {
    return from_labels(std::vector<int>(static_cast<std::size_t>(std::max(n, 0)), 0));
}

std::size_t Partition::block_index(Player i) const {
    if (i < 1 || i > size()) {
        throw DomainError("player " + std::to_string(i) + " outside 1.." + std::to_string(size()));
    }
    return static_cast<std::size_t>(block_of_[i - 1]);
}

Game::Game(std::vector<std::vector<Rational>> values, std::vector<std::string> labels)
    : n_(static_cast<int>(values.size())), labels_(std::move(labels)) {
    if (n_ < 1) throw DomainError("a game needs at least one player");
    if (!labels_.empty() && labels_.size() != values.size()) {
        throw DomainError("expected " + std::to_string(n_) + " labels, got " + std::to_string(labels_.size()));
    }
    values_.reserve(values.size() * values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i].size() != values.size()) {
            throw DomainError("row " + std::to_string(i + 1) + " has " + std::to_string(values[i].size()) +
                              " entries, expected " + std::to_string(n_));
        }
        if (!values[i][i].is_zero()) {
            throw DomainError("diagonal entry (" + std::to_string(i + 1) + "," + std::to_string(i + 1) +
                              ") must be 0");
        }
        for (auto& v : values[i]) values_.push_back(std::move(v));
    }
}

void Game::require_player(Player i) const {
    if (i < 1 || i > n_) {
        throw DomainError("player " + std::to_string(i) + " outside 1.." + std::to_string(n_));
    }
}

const Rational& Game::value(Player i, Player j) const {
    require_player(i);
    require_player(j);
    return values_[static_cast<std::size_t>(i - 1) * n_ + (j - 1)];
}

const std::string& Game::label(Player i) const {
    static const std::string empty;
    require_player(i);
    return labels_.empty() ? empty : labels_[i - 1];
}

Rational utility(const Game& g, Player i, const Coalition& s) {
    g.require_player(i);
    for (Player j : s) g.require_player(j);
    if (!s.contains(i)) {
        throw DomainError("player " + std::to_string(i) + " is not a member of the coalition");
    }
    Rational total;
    for (Player j : s) {
        if (j != i) total += g.value(i, j);
    }
    return total;
}

void require_compatible(const Game& g, const Partition& p) {
    if (p.size() != g.size()) {
        throw DomainError("partition covers " + std::to_string(p.size()) + " players but the game has " +
                          std::to_string(g.size()));
    }
}

std::vector<Rational> partition_utilities(const Game& g, const Partition& p) {
    require_compatible(g, p);
    std::vector<Rational> u;
    u.reserve(static_cast<std::size_t>(g.size()));
    for (Player i = 1; i <= g.size(); ++i) u.push_back(utility(g, i, p.block_of(i)));
    return u;
}

WelfareSummary welfare(const Game& g, const Partition& p) {
    WelfareSummary w;
    w.per_player = partition_utilities(g, p);
    w.egalitarian = w.per_player.front();
    w.elitist = w.per_player.front();
    for (const auto& u : w.per_player) {
        w.utilitarian += u;
        w.egalitarian = std::min(w.egalitarian, u);
        w.elitist = std::max(w.elitist, u);
    }
    return w;
}

bool is_symmetric(const Game& g) {
    for (Player i = 1; i <= g.size(); ++i) {
        for (Player j = i + 1; j <= g.size(); ++j) {
            if (g.value(i, j) != g.value(j, i)) return false;
        }
    }
    return true;
}

bool is_strict(const Game& g) {
    for (Player i = 1; i <= g.size(); ++i) {
        for (Player j = 1; j <= g.size(); ++j) {
            if (i != j && g.value(i, j).is_zero()) return false;
        }
    }
    return true;
}

namespace fixtures {

Game g1() {
    return Game({{0, 3, 3}, {3, 0, -7}, {3, -7, 0}});
}

}  // namespace fixtures

}  // namespace hedonica
