#ifndef HEDONICA_GADGETS_HPP
#define HEDONICA_GADGETS_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hedonica/game.hpp"

namespace hedonica {

/// Exact cover by 3-sets over R = {1..r_size}.
struct E3CInstance {
    int r_size = 0;
    std::vector<std::array<int, 3>> triples;
};

/// Identical machines and positive job processing times.
struct SchedulingInstance {
    int machines = 1;
    std::vector<std::int64_t> processing_times;
};

/// Nonzero integer weights.
struct SubsetSumZeroInstance {
    std::vector<std::int64_t> weights;
};

/// `weights[i][x]` is agent i+1's value for object x+1.
struct AllocationInstance {
    int agents = 0;
    int objects = 0;
    std::vector<std::vector<std::int64_t>> weights;
};

using SourceInstance = std::variant<E3CInstance, SchedulingInstance, SubsetSumZeroInstance, AllocationInstance>;

/// A generated game plus what it was built from.
struct GadgetInstance {
    Game game;
    std::optional<Partition> distinguished_partition;
    std::vector<std::string> role_labels;  // index k names player k+1
    SourceInstance source;
    std::vector<std::string> notes;        // non-fatal observations about the source
};

/// Throws DomainError on a malformed instance (|R| not a positive multiple
/// of 3, triple entries out of range or repeated, duplicate triples).
/// Returns warnings that do not prevent construction.
std::vector<std::string> validate(const E3CInstance& e);
void validate(const SchedulingInstance& s);
void validate(const SubsetSumZeroInstance& a);
void validate(const AllocationInstance& a);

/// Symmetric strict game whose distinguished partition
/// {x^s,y^s},{w^s} (s ∈ S) plus {all z^r} is Pareto optimal iff the E3C
/// instance has no exact cover. Player order: w^s, x^s, y^s per triple, then
/// z^1..z^|R|.
GadgetInstance gadget_po_verify(const E3CInstance& e);

/// Machines 1..m then jobs s_1..s_n; the maximum egalitarian welfare equals
/// the best achievable minimum machine load.
GadgetInstance gadget_egalitarian(const SchedulingInstance& s);

/// Players x, y1, y2, z_1..z_k; the Pareto optimal and individually rational
/// partitions put x, y1, y2 with a maximum-cardinality zero-sum set of z's.
GadgetInstance gadget_po_ir(const SubsetSumZeroInstance& a);

/// Symmetric game on y^s (per triple) then z_1^r, z_2^r, z_3^r (per element)
/// with an envy-free Nash stable partition iff an exact cover exists.
GadgetInstance gadget_ef_ns(const E3CInstance& e);

/// Agents 1..|I| then objects x_1..x_|X|; an envy-free Pareto optimal
/// partition exists iff an envy-free Pareto optimal allocation does.
GadgetInstance gadget_ef_po(const AllocationInstance& a);

/// First exact cover found scanning subsets of triples by bitmask; throws
/// ResourceError for more than 20 triples.
std::optional<std::vector<std::array<int, 3>>> solve_e3c(const E3CInstance& e);

struct Schedule {
    std::vector<int> machine_of_job;  // 1-based machine per job
    std::int64_t min_load = 0;
};

/// Assignment maximizing the minimum machine load by exhaustive search;
/// ResourceError when m^n exceeds 10^7.
Schedule solve_scheduling(const SchedulingInstance& s);

/// A maximum-cardinality nonempty zero-sum subset as 0-based positions, or
/// none. ResourceError beyond 20 weights.
std::optional<std::vector<std::size_t>> solve_max_zero_subset(const SubsetSumZeroInstance& a);

/// Every maximum-cardinality nonempty zero-sum subset (0-based positions),
/// in bitmask order; empty when no nonempty zero-sum subset exists.
std::vector<std::vector<std::size_t>> all_max_zero_subsets(const SubsetSumZeroInstance& a);

/// An allocation (1-based agent per object) of every object that is
/// envy-free and Pareto optimal among complete allocations, or none.
/// ResourceError when |I|^|X| exceeds 10^6.
std::optional<std::vector<int>> solve_eef(const AllocationInstance& a);

}  // namespace hedonica

#endif  // HEDONICA_GADGETS_HPP
