#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ssc/encoder.hpp"

namespace ssc {

/// Channel-domain amplitudes of the two code-bit values. The identity map
/// compares bits against the received reals directly; the BPSK map is the
/// usual antipodal convention (0 -> +1, 1 -> -1).
struct SymbolMap {
    double zero_level = 0.0;
    double one_level = 1.0;

    static SymbolMap identity() { return {0.0, 1.0}; }
    static SymbolMap bpsk() { return {1.0, -1.0}; }

    double level(Bit b) const { return b ? one_level : zero_level; }
};

/// A received sequence split into N stages of n reals each, together with
/// everything the decoder needs to interpret it.
struct DecodeProblem {
    std::vector<std::vector<double>> received;
    SymbolMap map;
    BitVector x0;
    Termination termination = Termination::kFree;

    std::size_t stages() const { return received.size(); }
};

/// Splits a flat symbol stream (n reals per stage, stage-major) into a
/// DecodeProblem. Throws DimensionError when the length is not a positive
/// multiple of n.
DecodeProblem make_problem(const StateSpaceEncoder &enc, std::span<const double> symbols,
                           SymbolMap map, BitVector x0, Termination termination);

/// Cost-to-go table of the backward pass. cost_to_go[k][s] is the least total
/// cost of stages k..N-1 starting from state s; level N is the boundary set
/// by the termination mode (all zero under kFree, zero only at state 0 under
/// kZero, +infinity elsewhere). policy[k][s] is the minimizing input block
/// for stage k in state s, ties resolved toward the numerically smallest
/// input.
struct ValueTable {
    std::vector<std::vector<double>> cost_to_go;    ///< [N+1][2^m]
    std::vector<std::vector<std::uint32_t>> policy; ///< [N][2^m]
};

struct DecodeResult {
    std::vector<BitVector> inputs;   ///< N blocks of k bits
    std::vector<BitVector> states;   ///< N+1 states, states[0] == x0
    std::vector<BitVector> codeword; ///< N blocks of n bits
    double total_cost = 0.0;
};

/// Squared Euclidean distance between the mapped output C x + D u and the
/// received block r.
double stage_cost(const StateSpaceEncoder &enc, const BitVector &x, const BitVector &u,
                  std::span<const double> r, const SymbolMap &map);

/// Backward dynamic program over all (stage, state) pairs:
///
///   J[k][x] = min_u ( stage_cost(x, u, r_k) + J[k+1][A x + B u] )
///
/// evaluated from the termination boundary down to stage 0.
ValueTable backward_pass(const StateSpaceEncoder &enc, const DecodeProblem &problem);

/// Minimum-cost decode: backward pass, then a forward roll following the
/// policy from x0. Throws DomainError when the termination constraint makes
/// every codeword infeasible from x0.
DecodeResult decode(const StateSpaceEncoder &enc, const DecodeProblem &problem);

/// Classical forward add-compare-select with survivor traceback. Matches
/// decode() stage for stage, including the tie rule (smallest input sequence
/// as a binary number).
DecodeResult viterbi_forward(const StateSpaceEncoder &enc, const DecodeProblem &problem);

/// Exhaustive maximum-likelihood reference: tries every input sequence.
/// Guarded to N*k <= 20 total input bits.
DecodeResult brute_force_ml(const StateSpaceEncoder &enc, const DecodeProblem &problem);

} // namespace ssc
