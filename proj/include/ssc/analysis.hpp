#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ssc/encoder.hpp"

namespace ssc {

struct ControllabilityReport {
    BitMatrix matrix; ///< [B | AB | ... | A^{m-1}B], m x m*k
    std::size_t rank = 0;
    bool controllable = false; ///< rank == m
};

struct ObservabilityReport {
    BitMatrix matrix; ///< [C; CA; ...; CA^{m-1}], n*m x m
    std::size_t rank = 0;
    bool observable = false; ///< rank == m
};

/// Zero-input trajectory of one start state: the transient prefix that is
/// never revisited, then the cycle the trajectory falls into. When the start
/// state already lies on a cycle the transient is empty and cycle[0] == start.
struct Orbit {
    BitVector start;
    std::vector<BitVector> transient;
    std::vector<BitVector> cycle;
};

/// One element of the zero-input partition of the state space: a cycle plus
/// every off-cycle state that eventually falls onto it.
struct OrbitClass {
    std::vector<BitVector> cycle;      ///< rotated so the smallest state index leads
    std::vector<BitVector> transients; ///< ascending state index
};

ControllabilityReport controllability_report(const StateSpaceEncoder &enc);
ObservabilityReport observability_report(const StateSpaceEncoder &enc);

/// Iterates x <- A x from x0 until a state repeats and splits the walk into
/// transient and cycle. max_steps == 0 selects the 2^m bound that guarantees
/// a repeat; a smaller explicit budget that ends before any repeat raises
/// DomainError.
Orbit orbit(const StateSpaceEncoder &enc, const BitVector &x0, std::size_t max_steps = 0);

/// Partitions all 2^m states by the cycle they fall into under zero input.
/// Classes are ordered by their smallest cycle state. Throws DomainError when
/// 2^m exceeds state_cap.
std::vector<OrbitClass> all_orbits(const StateSpaceEncoder &enc,
                                   std::size_t state_cap = kDefaultEnumerationCap);

/// Shortest input sequence u_0..u_{T-1}, 1 <= T <= max_horizon, with
///
///   x_end = A^T x_start + sum_t A^{T-1-t} B u_t
///
/// found by solving the stacked GF(2) system per horizon; nullopt when x_end
/// is unreachable within the horizon. max_horizon == 0 selects m. Among the
/// solutions at the smallest feasible T the free-variables-to-zero rule of
/// solve() makes the result deterministic.
std::optional<std::vector<BitVector>> steer(const StateSpaceEncoder &enc,
                                            const BitVector &x_start, const BitVector &x_end,
                                            std::size_t max_horizon = 0);

} // namespace ssc
