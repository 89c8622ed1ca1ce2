#include "hedonica/verify.hpp"

#include <array>

#include "detail/kernels.hpp"
#include "hedonica/enumeration.hpp"

namespace hedonica {

namespace {

constexpr std::array<std::string_view, 5> kPropertyNames{"ir", "ns", "is", "ef", "po"};

Coalition block_coalition(const Partition& p, int block) { return p.blocks()[static_cast<std::size_t>(block)]; }

template <class Fn>
PropertyReport run_local_check(const Game& g, const Partition& p, Property property, Fn&& fn) {
    require_compatible(g, p);
    PropertyReport report{property};
    std::optional<Witness> w = detail::with_table(g, [&](const auto& table) {
        detail::BlockSums sums(table);
        sums.load(p.labels(), static_cast<int>(p.block_count()));
        return fn(sums);
    });
    if (w) {
        report.verdict = Verdict::Fails;
        report.witness = std::move(w);
    }
    return report;
}

std::optional<Witness> deviation_witness(const Partition& p, std::optional<std::pair<int, int>> d) {
    if (!d) return std::nullopt;
    Deviation dev{d->first + 1, std::nullopt};
    if (d->second >= 0) dev.target = block_coalition(p, d->second);
    return dev;
}

}  // namespace

std::string_view property_name(Property p) { return kPropertyNames[static_cast<std::size_t>(p)]; }

std::optional<Property> property_from_name(std::string_view name) {
    for (std::size_t k = 0; k < kPropertyNames.size(); ++k) {
        if (kPropertyNames[k] == name) return static_cast<Property>(k);
    }
    return std::nullopt;
}

std::string_view verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Holds: return "holds";
        case Verdict::Fails: return "fails";
        case Verdict::Unknown: break;
    }
    return "unknown";
}

PropertyReport check_individual_rationality(const Game& g, const Partition& p) {
    return run_local_check(g, p, Property::IndividualRationality, [](const auto& sums) -> std::optional<Witness> {
        if (auto i = detail::ir_violation(sums)) return ViolatingPlayer{*i + 1};
        return std::nullopt;
    });
}

PropertyReport check_nash_stable(const Game& g, const Partition& p) {
    return run_local_check(g, p, Property::NashStable,
                           [&](const auto& sums) { return deviation_witness(p, detail::deviation(sums, false)); });
}

PropertyReport check_individually_stable(const Game& g, const Partition& p) {
    return run_local_check(g, p, Property::IndividuallyStable,
                           [&](const auto& sums) { return deviation_witness(p, detail::deviation(sums, true)); });
}

PropertyReport check_envy_free(const Game& g, const Partition& p) {
    return run_local_check(g, p, Property::EnvyFree, [](const auto& sums) -> std::optional<Witness> {
        if (auto e = detail::envy(sums)) return Envy{e->first + 1, e->second + 1};
        return std::nullopt;
    });
}

PropertyReport check_pareto_optimal(const Game& g, const Partition& p, std::optional<std::uint64_t> budget,
                                    std::optional<int> limit) {
    require_compatible(g, p);
    if (!budget) {
        require_enumerable(g.size(), limit);
        budget = bell_number(g.size());
    }
    PropertyReport report{Property::ParetoOptimal};
    detail::with_table(g, [&](const auto& table) {
        const auto base = detail::utilities(table, p.labels());
        PartitionStream stream(g.size());
        while (report.work < *budget) {
            ++report.work;
            if (detail::dominating_witness(table, stream.cursor(), std::span(base))) {
                report.verdict = Verdict::Fails;
                report.witness = stream.current();
                return;
            }
            stream.advance();
            if (stream.done()) return;
        }
        report.verdict = Verdict::Unknown;
    });
    return report;
}

PropertyReport check(const Game& g, const Partition& p, Property property, std::optional<std::uint64_t> budget,
                     std::optional<int> limit) {
    switch (property) {
        case Property::IndividualRationality: return check_individual_rationality(g, p);
        case Property::NashStable: return check_nash_stable(g, p);
        case Property::IndividuallyStable: return check_individually_stable(g, p);
        case Property::EnvyFree: return check_envy_free(g, p);
        case Property::ParetoOptimal: break;
    }
    return check_pareto_optimal(g, p, budget, limit);
}

}  // namespace hedonica
