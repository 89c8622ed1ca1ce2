#include "hedonica/gadgets.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "hedonica/errors.hpp"

namespace hedonica {

namespace {

using Matrix = std::vector<std::vector<Rational>>;

Matrix filled(std::size_t n, const Rational& off_diagonal) {
    Matrix m(n, std::vector<Rational>(n, off_diagonal));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 0;
    return m;
}

void set_both(Matrix& m, std::size_t a, std::size_t b, const Rational& v) {
    m[a][b] = v;
    m[b][a] = v;
}

std::string sup(const std::string& base, std::size_t index) { return base + "^" + std::to_string(index); }

GadgetInstance make_instance(Matrix values, std::vector<std::string> labels, SourceInstance source) {
    Game game(std::move(values), labels);
    return GadgetInstance{std::move(game), std::nullopt, std::move(labels), std::move(source), {}};
}

}  // namespace

std::vector<std::string> validate(const E3CInstance& e) {
    if (e.r_size < 1 || e.r_size % 3 != 0) {
        throw DomainError("E3C ground set size must be a positive multiple of 3, got " + std::to_string(e.r_size));
    }
    std::set<std::array<int, 3>> seen;
    std::map<int, int> occurrences;
    for (const auto& t : e.triples) {
        auto sorted = t;
        std::sort(sorted.begin(), sorted.end());
        if (sorted[0] < 1 || sorted[2] > e.r_size) {
            throw DomainError("triple element outside 1.." + std::to_string(e.r_size));
        }
        if (sorted[0] == sorted[1] || sorted[1] == sorted[2]) {
            throw DomainError("triple {" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
                              std::to_string(t[2]) + "} repeats an element");
        }
        if (!seen.insert(sorted).second) {
            throw DomainError("triple {" + std::to_string(sorted[0]) + "," + std::to_string(sorted[1]) + "," +
                              std::to_string(sorted[2]) + "} listed twice");
        }
        for (int r : sorted) ++occurrences[r];
    }
    std::vector<std::string> warnings;
    if (e.triples.empty()) warnings.push_back("degenerate instance: no triples, so no exact cover exists");
    for (const auto& [r, count] : occurrences) {
        if (count > 3) {
            warnings.push_back("element " + std::to_string(r) + " occurs in " + std::to_string(count) +
                               " triples (more than 3)");
        }
    }
    return warnings;
}

void validate(const SchedulingInstance& s) {
    if (s.machines < 1) throw DomainError("scheduling needs at least one machine");
    for (auto p : s.processing_times) {
        if (p <= 0) throw DomainError("processing times must be positive, got " + std::to_string(p));
    }
}

void validate(const SubsetSumZeroInstance& a) {
    for (auto w : a.weights) {
        if (w == 0) throw DomainError("subset-sum weights must be nonzero");
    }
}

void validate(const AllocationInstance& a) {
    if (a.agents < 1) throw DomainError("allocation needs at least one agent");
    if (a.objects < 0) throw DomainError("object count must be nonnegative");
    if (a.weights.size() != static_cast<std::size_t>(a.agents)) {
        throw DomainError("expected " + std::to_string(a.agents) + " weight rows, got " +
                          std::to_string(a.weights.size()));
    }
    for (std::size_t i = 0; i < a.weights.size(); ++i) {
        if (a.weights[i].size() != static_cast<std::size_t>(a.objects)) {
            throw DomainError("agent " + std::to_string(i + 1) + " has " + std::to_string(a.weights[i].size()) +
                              " weights, expected " + std::to_string(a.objects));
        }
    }
}

GadgetInstance gadget_po_verify(const E3CInstance& e) {
    auto warnings = validate(e);
    if (e.r_size < 2) throw DomainError("the z-to-z weight 1/(|R|-1) needs |R| >= 2");
    const std::size_t s_count = e.triples.size();
    const std::size_t r_size = static_cast<std::size_t>(e.r_size);
    const std::size_t n = 3 * s_count + r_size;
    auto w = [](std::size_t s) { return 3 * s; };
    auto x = [](std::size_t s) { return 3 * s + 1; };
    auto y = [](std::size_t s) { return 3 * s + 2; };
    auto z = [&](int r) { return 3 * s_count + static_cast<std::size_t>(r - 1); };

    Matrix m = filled(n, -7);
    std::vector<std::string> labels(n);
    for (std::size_t s = 0; s < s_count; ++s) {
        labels[w(s)] = sup("w", s + 1);
        labels[x(s)] = sup("x", s + 1);
        labels[y(s)] = sup("y", s + 1);
        set_both(m, w(s), x(s), 3);
        set_both(m, x(s), y(s), 3);
        for (std::size_t t = 0; t < s_count; ++t) set_both(m, y(s), w(t), -1);
        for (int r = 1; r <= e.r_size; ++r) {
            const auto& tri = e.triples[s];
            const bool member = std::find(tri.begin(), tri.end(), r) != tri.end();
            set_both(m, y(s), z(r), member ? Rational(1) : Rational(-7));
        }
    }
    const Rational zz(1, e.r_size - 1);
    for (int r = 1; r <= e.r_size; ++r) {
        labels[z(r)] = sup("z", static_cast<std::size_t>(r));
        for (int q = r + 1; q <= e.r_size; ++q) set_both(m, z(r), z(q), zz);
    }

    std::vector<int> part(n);
    for (std::size_t s = 0; s < s_count; ++s) {
        part[w(s)] = static_cast<int>(2 * s);
        part[x(s)] = static_cast<int>(2 * s + 1);
        part[y(s)] = static_cast<int>(2 * s + 1);
    }
    for (int r = 1; r <= e.r_size; ++r) part[z(r)] = static_cast<int>(2 * s_count);

    auto g = make_instance(std::move(m), std::move(labels), e);
    g.distinguished_partition = Partition::from_labels(part);
    g.notes = std::move(warnings);
    return g;
}

GadgetInstance gadget_egalitarian(const SchedulingInstance& s) {
    validate(s);
    const std::size_t machines = static_cast<std::size_t>(s.machines);
    const std::size_t jobs = s.processing_times.size();
    std::int64_t total = 0;
    for (auto p : s.processing_times) total += p;

    Matrix m = filled(machines + jobs, 0);
    std::vector<std::string> labels(machines + jobs);
    for (std::size_t i = 0; i < machines; ++i) {
        labels[i] = "machine " + std::to_string(i + 1);
        for (std::size_t k = 0; k < machines; ++k) {
            if (k != i) m[i][k] = -(total + 1);
        }
        for (std::size_t j = 0; j < jobs; ++j) {
            m[i][machines + j] = s.processing_times[j];
            m[machines + j][i] = total;
        }
    }
    for (std::size_t j = 0; j < jobs; ++j) labels[machines + j] = "s_" + std::to_string(j + 1);
    return make_instance(std::move(m), std::move(labels), s);
}

GadgetInstance gadget_po_ir(const SubsetSumZeroInstance& a) {
    validate(a);
    const std::size_t k = a.weights.size();
    constexpr std::size_t x = 0, y1 = 1, y2 = 2;
    Matrix m = filled(3 + k, 0);
    std::vector<std::string> labels{"x", "y_1", "y_2"};
    m[x][y1] = static_cast<std::int64_t>(k + 1);
    m[x][y2] = static_cast<std::int64_t>(k + 1);
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t z = 3 + i;
        const Rational ai(a.weights[i]);
        labels.push_back("z_" + std::to_string(i + 1));
        m[x][z] = 1;
        m[y1][z] = ai;
        m[z][y1] = -ai;
        m[y2][z] = -ai;
        m[z][y2] = ai;
    }
    return make_instance(std::move(m), std::move(labels), a);
}

GadgetInstance gadget_ef_ns(const E3CInstance& e) {
    auto warnings = validate(e);
    const std::size_t s_count = e.triples.size();
    const std::size_t n = s_count + 3 * static_cast<std::size_t>(e.r_size);
    auto z = [&](int which, int r) { return s_count + 3 * static_cast<std::size_t>(r - 1) + (which - 1); };

    Matrix m = filled(n, -7);
    std::vector<std::string> labels(n);
    for (int r = 1; r <= e.r_size; ++r) {
        for (int which = 1; which <= 3; ++which) {
            labels[z(which, r)] = "z_" + std::to_string(which) + "^" + std::to_string(r);
        }
        set_both(m, z(1, r), z(2, r), 3);
        set_both(m, z(1, r), z(3, r), 3);
        set_both(m, z(2, r), z(3, r), -7);
    }
    const Rational tenth(1, 10), y_weight(28, 10);
    for (std::size_t s = 0; s < s_count; ++s) {
        labels[s] = sup("y", s + 1);
        const auto& t = e.triples[s];
        for (std::size_t a = 0; a < 3; ++a) {
            set_both(m, s, z(1, t[a]), y_weight);
            for (std::size_t b = a + 1; b < 3; ++b) set_both(m, z(1, t[a]), z(1, t[b]), tenth);
        }
    }
    auto g = make_instance(std::move(m), std::move(labels), e);
    g.notes = std::move(warnings);
    return g;
}

GadgetInstance gadget_ef_po(const AllocationInstance& a) {
    validate(a);
    const std::size_t agents = static_cast<std::size_t>(a.agents);
    const std::size_t n = agents + static_cast<std::size_t>(a.objects);
    std::int64_t total = 0;
    for (const auto& row : a.weights) {
        for (auto w : row) total += w < 0 ? -w : w;
    }
    const Rational apart = Rational(-total) * Rational(static_cast<std::int64_t>(n));

    Matrix m = filled(n, 0);
    std::vector<std::string> labels(n);
    for (std::size_t i = 0; i < agents; ++i) {
        labels[i] = "agent " + std::to_string(i + 1);
        for (std::size_t k = 0; k < agents; ++k) {
            if (k != i) m[i][k] = apart;
        }
        for (std::size_t x = 0; x < static_cast<std::size_t>(a.objects); ++x) m[i][agents + x] = a.weights[i][x];
    }
    for (std::size_t x = 0; x < static_cast<std::size_t>(a.objects); ++x) labels[agents + x] = "x_" + std::to_string(x + 1);
    return make_instance(std::move(m), std::move(labels), a);
}

std::optional<std::vector<std::array<int, 3>>> solve_e3c(const E3CInstance& e) {
    validate(e);
    const std::size_t count = e.triples.size();
    if (count > 20) throw ResourceError("E3C brute force is limited to 20 triples, got " + std::to_string(count));
    const std::uint32_t full = 1u << count;
    std::vector<int> cover(static_cast<std::size_t>(e.r_size) + 1);
    for (std::uint32_t mask = 0; mask < full; ++mask) {
        if (static_cast<int>(std::popcount(mask)) * 3 != e.r_size) continue;
        std::fill(cover.begin(), cover.end(), 0);
        bool exact = true;
        for (std::size_t t = 0; t < count && exact; ++t) {
            if (!(mask >> t & 1u)) continue;
            for (int r : e.triples[t]) {
                if (++cover[static_cast<std::size_t>(r)] > 1) exact = false;
            }
        }
        if (!exact) continue;
        std::vector<std::array<int, 3>> chosen;
        for (std::size_t t = 0; t < count; ++t) {
            if (mask >> t & 1u) chosen.push_back(e.triples[t]);
        }
        return chosen;
    }
    return std::nullopt;
}

Schedule solve_scheduling(const SchedulingInstance& s) {
    validate(s);
    const std::size_t jobs = s.processing_times.size();
    std::uint64_t space = 1;
    for (std::size_t j = 0; j < jobs; ++j) {
        space *= static_cast<std::uint64_t>(s.machines);
        if (space > 10'000'000) throw ResourceError("scheduling brute force exceeds 10^7 assignments");
    }
    std::vector<int> assign(jobs, 0);
    std::vector<std::int64_t> load(static_cast<std::size_t>(s.machines));
    Schedule best{{}, -1};
    for (std::uint64_t step = 0; step < space; ++step) {
        std::fill(load.begin(), load.end(), 0);
        for (std::size_t j = 0; j < jobs; ++j) load[static_cast<std::size_t>(assign[j])] += s.processing_times[j];
        const std::int64_t low = *std::min_element(load.begin(), load.end());
        if (low > best.min_load) {
            best.min_load = low;
            best.machine_of_job.assign(assign.begin(), assign.end());
        }
        for (std::size_t j = jobs; j-- > 0;) {
            if (++assign[j] < s.machines) break;
            assign[j] = 0;
        }
    }
    for (int& m : best.machine_of_job) ++m;
    return best;
}

std::vector<std::vector<std::size_t>> all_max_zero_subsets(const SubsetSumZeroInstance& a) {
    validate(a);
    const std::size_t k = a.weights.size();
    if (k > 20) throw ResourceError("subset-sum brute force is limited to 20 weights, got " + std::to_string(k));
    std::vector<std::uint32_t> best;
    int best_size = 0;
    for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
        std::int64_t sum = 0;
        for (std::size_t i = 0; i < k; ++i) {
            if (mask >> i & 1u) sum += a.weights[i];
        }
        if (sum != 0) continue;
        const int size = std::popcount(mask);
        if (size > best_size) {
            best_size = size;
            best.clear();
        }
        if (size == best_size) best.push_back(mask);
    }
    std::vector<std::vector<std::size_t>> result;
    for (std::uint32_t mask : best) {
        std::vector<std::size_t> positions;
        for (std::size_t i = 0; i < k; ++i) {
            if (mask >> i & 1u) positions.push_back(i);
        }
        result.push_back(std::move(positions));
    }
    return result;
}

std::optional<std::vector<std::size_t>> solve_max_zero_subset(const SubsetSumZeroInstance& a) {
    auto all = all_max_zero_subsets(a);
    if (all.empty()) return std::nullopt;
    return std::move(all.front());
}

std::optional<std::vector<int>> solve_eef(const AllocationInstance& a) {
    validate(a);
    const std::size_t agents = static_cast<std::size_t>(a.agents);
    const std::size_t objects = static_cast<std::size_t>(a.objects);
    std::uint64_t space = 1;
    for (std::size_t x = 0; x < objects; ++x) {
        space *= agents;
        if (space > 1'000'000) throw ResourceError("allocation brute force exceeds 10^6 allocations");
    }

    // Every complete allocation with its utility vector and, per agent, the
    // value it would get from each other agent's bundle.
    std::vector<std::vector<int>> owners;
    std::vector<std::vector<std::int64_t>> cross;  // cross[k][i*agents + j] = w(i, bundle of j)
    std::vector<int> owner(objects, 0);
    for (std::uint64_t step = 0; step < space; ++step) {
        std::vector<std::int64_t> c(agents * agents, 0);
        for (std::size_t x = 0; x < objects; ++x) {
            const auto j = static_cast<std::size_t>(owner[x]);
            for (std::size_t i = 0; i < agents; ++i) c[i * agents + j] += a.weights[i][x];
        }
        owners.push_back(owner);
        cross.push_back(std::move(c));
        for (std::size_t x = objects; x-- > 0;) {
            if (++owner[x] < a.agents) break;
            owner[x] = 0;
        }
    }

    auto own = [&](std::size_t k, std::size_t i) { return cross[k][i * agents + i]; };
    for (std::size_t k = 0; k < owners.size(); ++k) {
        bool envy_free = true;
        for (std::size_t i = 0; i < agents && envy_free; ++i) {
            for (std::size_t j = 0; j < agents && envy_free; ++j) {
                envy_free = cross[k][i * agents + j] <= own(k, i);
            }
        }
        if (!envy_free) continue;
        bool dominated = false;
        for (std::size_t other = 0; other < owners.size() && !dominated; ++other) {
            bool weakly = true, strictly = false;
            for (std::size_t i = 0; i < agents && weakly; ++i) {
                weakly = own(other, i) >= own(k, i);
                strictly = strictly || own(other, i) > own(k, i);
            }
            dominated = weakly && strictly;
        }
        if (dominated) continue;
        std::vector<int> result = owners[k];
        for (int& o : result) ++o;
        return result;
    }
    return std::nullopt;
}

}  // namespace hedonica
