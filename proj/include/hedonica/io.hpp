#ifndef HEDONICA_IO_HPP
#define HEDONICA_IO_HPP

#include <string>
#include <string_view>

#include "hedonica/gadgets.hpp"
#include "hedonica/game.hpp"
#include "hedonica/verify.hpp"

namespace hedonica {

/// Game file:
///
///     # comment
///     hedonic 3
///     label 1 alice
///     0 3 3
///     3 0 -7
///     3 -7 0
///
/// Values are integers or `p/q` fractions; diagonal entries must be the
/// literal `0`. Throws ParseError carrying the offending line.
Game parse_game(std::string_view document);
std::string serialize_game(const Game& g);

/// `{1,2}|{3}`; whitespace is ignored. Throws ParseError on bad syntax and
/// DomainError when the blocks do not partition {1..n}.
Partition parse_partition(std::string_view text, int n);
std::string serialize_partition(const Partition& p);

enum class GadgetKind { PoVerify, EfNs, Egalitarian, PoIr, EfPo };

std::optional<GadgetKind> gadget_kind_from_name(std::string_view name);

/// Source problem files, one directive per line, `#` comments:
///   E3C:         `r 6` then `triple 1 2 3` lines
///   scheduling:  `machines 2` and `jobs 3 3 2`
///   subset-sum:  `weights 2 -1 -1`
///   allocation:  optional `objects k`, then one `agent w1 .. wk` line per agent
E3CInstance parse_e3c(std::string_view document);
SchedulingInstance parse_scheduling(std::string_view document);
SubsetSumZeroInstance parse_subset_sum(std::string_view document);
AllocationInstance parse_allocation(std::string_view document);

/// Player index, followed by ` [label]` when `labelled` and the game has one.
std::string format_player(const Game& g, Player i, bool labelled);
std::string format_coalition(const Game& g, const Coalition& c, bool labelled);
std::string format_witness(const Game& g, const Witness& w, bool labelled);

}  // namespace hedonica

#endif  // HEDONICA_IO_HPP
