#ifndef HEDONICA_VERIFY_HPP
#define HEDONICA_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string_view>
#include <variant>

#include "hedonica/game.hpp"

namespace hedonica {

enum class Property { IndividualRationality, NashStable, IndividuallyStable, EnvyFree, ParetoOptimal };
enum class Verdict { Holds, Fails, Unknown };

/// Short names used on the command line and in reports: ir, ns, is, ef, po.
std::string_view property_name(Property p);
std::optional<Property> property_from_name(std::string_view name);
std::string_view verdict_name(Verdict v);

/// A player whose utility is negative.
struct ViolatingPlayer {
    Player player;
    friend bool operator==(const ViolatingPlayer&, const ViolatingPlayer&) = default;
};

/// `player` strictly gains by moving to `target`; an empty target means
/// leaving to form a singleton.
struct Deviation {
    Player player;
    std::optional<Coalition> target;
    friend bool operator==(const Deviation&, const Deviation&) = default;
};

/// `envious` strictly prefers taking `envied`'s seat.
struct Envy {
    Player envious;
    Player envied;
    friend bool operator==(const Envy&, const Envy&) = default;
};

using Witness = std::variant<ViolatingPlayer, Deviation, Envy, Partition>;

struct PropertyReport {
    Property property;
    Verdict verdict = Verdict::Holds;
    std::optional<Witness> witness;  // present iff verdict == Fails
    std::uint64_t work = 0;          // partitions examined (Pareto check only)
};

PropertyReport check_individual_rationality(const Game& g, const Partition& p);
PropertyReport check_nash_stable(const Game& g, const Partition& p);
PropertyReport check_individually_stable(const Game& g, const Partition& p);
PropertyReport check_envy_free(const Game& g, const Partition& p);

/// Exhaustive scan for a Pareto dominating partition, in enumeration order.
///
/// Without a budget the scan covers all B(n) partitions and the call is
/// rejected with ResourceError when n exceeds `limit` (default:
/// enumeration_limit()). With a budget the scan stops after that many
/// partitions and reports Unknown if it has not finished.
PropertyReport check_pareto_optimal(const Game& g, const Partition& p,
                                    std::optional<std::uint64_t> budget = std::nullopt,
                                    std::optional<int> limit = std::nullopt);

/// Dispatches to the checker for `property`; `budget` and `limit` only
/// affect the Pareto check.
PropertyReport check(const Game& g, const Partition& p, Property property,
                     std::optional<std::uint64_t> budget = std::nullopt, std::optional<int> limit = std::nullopt);

}  // namespace hedonica

#endif  // HEDONICA_VERIFY_HPP
