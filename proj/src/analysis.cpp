#include "ssc/analysis.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>

#include "ssc/errors.hpp"

namespace ssc {

ControllabilityReport controllability_report(const StateSpaceEncoder &enc) {
    const std::size_t m = enc.state_bits();
    BitMatrix block = enc.b(); // A^i B
    BitMatrix matrix = block;
    for (std::size_t i = 1; i < m; ++i) {
        block = matmul(enc.a(), block);
        matrix = hstack(matrix, block);
    }
    const std::size_t r = rank(matrix);
    return {std::move(matrix), r, r == m};
}

ObservabilityReport observability_report(const StateSpaceEncoder &enc) {
    const std::size_t m = enc.state_bits();
    BitMatrix block = enc.c(); // C A^i
    BitMatrix matrix = block;
    for (std::size_t i = 1; i < m; ++i) {
        block = matmul(block, enc.a());
        matrix = vstack(matrix, block);
    }
    const std::size_t r = rank(matrix);
    return {std::move(matrix), r, r == m};
}

Orbit orbit(const StateSpaceEncoder &enc, const BitVector &x0, std::size_t max_steps) {
    const std::size_t m = enc.state_bits();
    if (x0.size() != m)
        throw DimensionError("orbit: start state width does not match the code");
    if (m >= 63)
        throw DomainError("orbit: state space too wide to walk");
    if (max_steps == 0)
        max_steps = std::size_t{1} << m; // a repeat is guaranteed within 2^m steps

    std::vector<BitVector> walk{x0};
    std::unordered_map<std::uint64_t, std::size_t> first_seen{{x0.to_index(), 0}};
    for (std::size_t s = 0; s < max_steps; ++s) {
        BitVector next = matvec(enc.a(), walk.back());
        auto [it, fresh] = first_seen.try_emplace(next.to_index(), walk.size());
        if (!fresh) {
            Orbit out;
            out.start = x0;
            out.transient.assign(walk.begin(), walk.begin() + static_cast<long>(it->second));
            out.cycle.assign(walk.begin() + static_cast<long>(it->second), walk.end());
            return out;
        }
        walk.push_back(std::move(next));
    }
    throw DomainError("orbit: no repeat within max_steps; pass at least 2^m steps");
}

std::vector<OrbitClass> all_orbits(const StateSpaceEncoder &enc, std::size_t state_cap) {
    const std::size_t m = enc.state_bits();
    if (m >= 63 || (std::uint64_t{1} << m) > state_cap)
        throw DomainError("all_orbits: 2^m exceeds the state cap of " + std::to_string(state_cap));
    const std::size_t num_states = std::size_t{1} << m;

    std::vector<std::uint32_t> next(num_states);
    for (std::size_t s = 0; s < num_states; ++s)
        next[s] = static_cast<std::uint32_t>(
            matvec(enc.a(), BitVector::from_index(s, m)).to_index());

    // Functional-graph decomposition: walk unclassified states until the walk
    // meets itself (a new cycle) or a state with a known class.
    constexpr std::uint32_t kUnset = UINT32_MAX;
    std::vector<std::uint32_t> class_of(num_states, kUnset);
    std::vector<std::vector<std::uint32_t>> cycles;

    for (std::size_t start = 0; start < num_states; ++start) {
        if (class_of[start] != kUnset)
            continue;
        std::vector<std::uint32_t> walk;
        std::unordered_map<std::uint32_t, std::size_t> position;
        std::uint32_t s = static_cast<std::uint32_t>(start);
        while (class_of[s] == kUnset && !position.contains(s)) {
            position.emplace(s, walk.size());
            walk.push_back(s);
            s = next[s];
        }
        std::uint32_t cls;
        if (class_of[s] != kUnset) {
            cls = class_of[s];
        } else {
            cls = static_cast<std::uint32_t>(cycles.size());
            cycles.emplace_back(walk.begin() + static_cast<long>(position[s]), walk.end());
        }
        for (std::uint32_t visited : walk)
            class_of[visited] = cls;
    }

    std::vector<OrbitClass> classes(cycles.size());
    std::vector<std::vector<bool>> on_cycle(cycles.size());
    for (std::size_t c = 0; c < cycles.size(); ++c) {
        // Rotate the cycle so its smallest state leads.
        auto &cyc = cycles[c];
        auto lead = std::min_element(cyc.begin(), cyc.end());
        std::rotate(cyc.begin(), lead, cyc.end());
        for (std::uint32_t s : cyc)
            classes[c].cycle.push_back(BitVector::from_index(s, m));
    }
    for (std::size_t s = 0; s < num_states; ++s) {
        const auto &cyc = cycles[class_of[s]];
        if (std::find(cyc.begin(), cyc.end(), s) == cyc.end())
            classes[class_of[s]].transients.push_back(
                BitVector::from_index(s, m)); // ascending: s is already in order
    }
    std::sort(classes.begin(), classes.end(), [](const OrbitClass &l, const OrbitClass &r) {
        return l.cycle.front().to_index() < r.cycle.front().to_index();
    });
    return classes;
}

std::optional<std::vector<BitVector>> steer(const StateSpaceEncoder &enc,
                                            const BitVector &x_start, const BitVector &x_end,
                                            std::size_t max_horizon) {
    const std::size_t m = enc.state_bits();
    const std::size_t k = enc.input_bits();
    if (x_start.size() != m || x_end.size() != m)
        throw DimensionError("steer: state width does not match the code");
    if (max_horizon == 0)
        max_horizon = m;

    // reach holds [A^{T-1}B | ... | AB | B]; drift holds A^T x_start.
    BitMatrix reach = enc.b();
    BitVector drift = x_start;
    for (std::size_t horizon = 1; horizon <= max_horizon; ++horizon) {
        drift = matvec(enc.a(), drift);
        if (auto stacked = solve(reach, x_end ^ drift)) {
            std::vector<BitVector> inputs(horizon, BitVector(k));
            for (std::size_t t = 0; t < horizon; ++t)
                for (std::size_t i = 0; i < k; ++i)
                    inputs[t].set(i, (*stacked)[t * k + i]);
            return inputs;
        }
        if (horizon < max_horizon)
            reach = hstack(matmul(enc.a(), reach), enc.b());
    }
    return std::nullopt;
}

} // namespace ssc
