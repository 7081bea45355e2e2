// Acceptance suite: end-to-end checks of the decoder stack against golden
// transition data, exhaustive and randomized oracles, steering, and
// Monte-Carlo BER behaviour. Prints one line per criterion and exits with
// the number of failures.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "ssc/analysis.hpp"
#include "ssc/channel.hpp"
#include "ssc/decoder.hpp"
#include "ssc/encoder.hpp"
#include "ssc/gf2.hpp"
#include "ssc/sweep.hpp"
#include "test_util.hpp"

using namespace ssc;

namespace {

int checks_failed = 0;

void expect(bool ok, const char *what) {
    if (!ok) {
        ++checks_failed;
        std::printf("        check failed: %s\n", what);
    }
}

// --- 1: golden transition table ---------------------------------------------

bool golden_table() {
    struct Row {
        const char *u, *state, *next, *output;
    };
    static constexpr Row kRows[] = {
        {"0", "00", "00", "00"}, {"1", "00", "10", "11"}, {"0", "01", "10", "00"},
        {"1", "01", "00", "11"}, {"0", "10", "11", "01"}, {"1", "10", "01", "10"},
        {"0", "11", "01", "01"}, {"1", "11", "11", "10"},
    };
    const auto rows = transition_table(ssct::reference_encoder());
    expect(rows.size() == 8, "row count is 2^(m+k) = 8");
    if (rows.size() != 8)
        return false;
    bool ok = true;
    for (std::size_t i = 0; i < 8; ++i) {
        ok &= rows[i].u == BitVector::parse(kRows[i].u);
        ok &= rows[i].current_state == BitVector::parse(kRows[i].state);
        ok &= rows[i].next_state == BitVector::parse(kRows[i].next);
        ok &= rows[i].output == BitVector::parse(kRows[i].output);
    }
    expect(ok, "all 8 rows match bit for bit");
    return ok;
}

// --- 2: controllability ------------------------------------------------------

bool controllability() {
    const ControllabilityReport r = controllability_report(ssct::reference_encoder());
    expect(r.matrix == BitMatrix::from_rows({{1, 1}, {0, 1}}), "matrix is [[1,1],[0,1]]");
    expect(r.rank == 2, "rank is 2");
    expect(r.controllable, "system is controllable");
    return r.matrix == BitMatrix::from_rows({{1, 1}, {0, 1}}) && r.rank == 2 &&
           r.controllable;
}

// --- 3: orbit partition ------------------------------------------------------

bool is_rotation(const std::vector<BitVector> &cycle, const std::vector<BitVector> &expected) {
    if (cycle.size() != expected.size())
        return false;
    for (std::size_t shift = 0; shift < expected.size(); ++shift) {
        bool match = true;
        for (std::size_t i = 0; i < expected.size(); ++i)
            match &= cycle[i] == expected[(i + shift) % expected.size()];
        if (match)
            return true;
    }
    return false;
}

bool orbit_partition() {
    const auto classes = all_orbits(ssct::reference_encoder());
    expect(classes.size() == 2, "exactly two orbit classes");
    if (classes.size() != 2)
        return false;
    const bool fixed_point = classes[0].cycle == std::vector<BitVector>{{0, 0}} &&
                             classes[0].transients.empty();
    const bool three_cycle =
        is_rotation(classes[1].cycle, {{1, 1}, {0, 1}, {1, 0}}) &&
        classes[1].transients.empty();
    expect(fixed_point, "state 00 is an isolated fixed point");
    expect(three_cycle, "the other class is the 3-cycle 11 -> 01 -> 10");
    return fixed_point && three_cycle;
}

// --- 4: exhaustive hard-decision oracle equivalence --------------------------

bool exhaustive_hard_equivalence() {
    const StateSpaceEncoder enc = ssct::reference_encoder();
    const std::size_t stages = 5;
    bool ok = true;
    for (unsigned word = 0; word < (1u << (2 * stages)); ++word) {
        DecodeProblem p;
        p.received.assign(stages, std::vector<double>(2));
        for (std::size_t i = 0; i < 2 * stages; ++i)
            p.received[i / 2][i % 2] =
                static_cast<double>((word >> (2 * stages - 1 - i)) & 1u);
        p.x0 = BitVector(2);

        const DecodeResult dp = decode(enc, p);
        const DecodeResult vit = viterbi_forward(enc, p);
        const DecodeResult ml = brute_force_ml(enc, p);
        ok &= dp.total_cost == ml.total_cost && vit.total_cost == ml.total_cost;
        ok &= dp.inputs == ml.inputs && vit.inputs == ml.inputs;
        if (!ok)
            break;
    }
    expect(ok, "cost and decoded inputs identical on all 1024 hard sequences");
    return ok;
}

// --- 5: randomized soft oracle equivalence -----------------------------------

bool random_soft_equivalence() {
    const StateSpaceEncoder enc = ssct::reference_encoder();
    std::mt19937 rng(20260811);
    std::uniform_real_distribution<double> value(-0.5, 1.5);
    bool costs_ok = true;
    bool inputs_ok = true;
    for (int iter = 0; iter < 1000; ++iter) {
        DecodeProblem p;
        p.received.assign(5, std::vector<double>(2));
        for (auto &block : p.received)
            for (double &v : block)
                v = value(rng);
        p.x0 = BitVector(2);

        const ssct::OracleResult oracle = ssct::oracle_search(enc, p);
        const DecodeResult dp = decode(enc, p);
        const DecodeResult vit = viterbi_forward(enc, p);
        const DecodeResult ml = brute_force_ml(enc, p);

        costs_ok &= std::fabs(dp.total_cost - oracle.best_cost) <= 1e-9;
        costs_ok &= std::fabs(vit.total_cost - oracle.best_cost) <= 1e-9;
        costs_ok &= std::fabs(ml.total_cost - oracle.best_cost) <= 1e-9;
        if (oracle.second_cost - oracle.best_cost > 1e-6) {
            inputs_ok &= dp.inputs == oracle.best_inputs;
            inputs_ok &= vit.inputs == oracle.best_inputs;
            inputs_ok &= ml.inputs == oracle.best_inputs;
        }
    }
    expect(costs_ok, "all costs within 1e-9 of the oracle on 1000 soft sequences");
    expect(inputs_ok, "inputs match the oracle whenever its top-two costs differ > 1e-6");
    return costs_ok && inputs_ok;
}

// --- 6: noiseless round trip -------------------------------------------------

bool noiseless_round_trip() {
    const StateSpaceEncoder enc = ssct::reference_encoder();
    std::mt19937 rng(606);
    bool ok = true;
    for (int iter = 0; iter < 1000; ++iter) {
        std::vector<BitVector> inputs;
        for (int t = 0; t < 8; ++t)
            inputs.push_back(ssct::random_vector(rng, 1));
        const EncodeResult sent = encode(enc, inputs, BitVector(2), Termination::kZero);
        std::vector<double> symbols;
        for (const BitVector &block : sent.codeword)
            for (std::size_t i = 0; i < block.size(); ++i)
                symbols.push_back(static_cast<double>(block[i]));

        const DecodeResult r = decode(
            enc, make_problem(enc, symbols, SymbolMap::identity(), BitVector(2),
                              Termination::kZero));
        ok &= r.total_cost == 0.0;
        for (std::size_t t = 0; t < inputs.size(); ++t)
            ok &= r.inputs[t] == inputs[t];
        ok &= r.states.back().is_zero();
        if (!ok)
            break;
    }
    expect(ok, "1000 random words recovered exactly with zero cost");
    return ok;
}

// --- 7: steering -------------------------------------------------------------

bool steering_all_pairs() {
    const StateSpaceEncoder enc = ssct::reference_encoder();
    bool ok = true;
    for (std::uint64_t from = 0; from < 4; ++from) {
        for (std::uint64_t to = 0; to < 4; ++to) {
            const BitVector start = BitVector::from_index(from, 2);
            const BitVector goal = BitVector::from_index(to, 2);
            const auto plan = steer(enc, start, goal);
            if (!plan || plan->size() > 2) {
                ok = false;
                continue;
            }
            BitVector x = start;
            for (const BitVector &u : *plan)
                x = step(enc, x, u).next;
            ok &= x == goal;
        }
    }
    expect(ok, "all 16 ordered state pairs steered in at most 2 steps");
    return ok;
}

// --- 8: hard-decision reduction ----------------------------------------------

bool hard_decision_reduction() {
    const StateSpaceEncoder enc = ssct::reference_encoder();
    const SymbolMap map = SymbolMap::identity();
    std::mt19937 rng(808);
    bool ok = true;
    for (int iter = 0; iter < 10000; ++iter) {
        const BitVector x = ssct::random_vector(rng, 2);
        const BitVector u = ssct::random_vector(rng, 1);
        const BitVector bits = ssct::random_vector(rng, 2);
        const std::vector<double> r{static_cast<double>(bits[0]),
                                    static_cast<double>(bits[1])};
        const BitVector y = matvec(enc.c(), x) ^ matvec(enc.d(), u);
        const double hamming = static_cast<double>((y[0] != bits[0]) + (y[1] != bits[1]));
        ok &= stage_cost(enc, x, u, r, map) == hamming;
    }
    expect(ok, "stage cost equals Hamming distance on 10^4 hard triples");
    return ok;
}

// --- 9: BER sanity -----------------------------------------------------------

bool ber_sanity() {
    const StateSpaceEncoder enc = ssct::reference_encoder();
    SweepConfig config;
    config.channel = ChannelSpec::Kind::kAwgn;
    config.grid = {2.0, 4.0, 6.0};
    config.trials = 100;
    config.frame_bits = 1000; // 10^5 information bits per grid point
    config.seed = 424242;

    config.decision = Decision::kSoft;
    const auto soft = ber_sweep(enc, config);
    config.decision = Decision::kHard;
    const auto hard = ber_sweep(enc, config);
    config.uncoded = true;
    const auto uncoded = ber_sweep(enc, config);

    bool soft_no_worse = true;
    for (std::size_t i = 0; i < soft.size(); ++i)
        soft_no_worse &= soft[i].ber <= hard[i].ber;
    expect(soft_no_worse, "soft-decision BER <= hard-decision BER at 2, 4 and 6 dB");

    const bool coding_gain = soft.back().ber < uncoded.back().ber;
    expect(coding_gain, "coded soft BER at 6 dB beats the uncoded baseline");
    return soft_no_worse && coding_gain;
}

// --- 10: GF(2) algebra laws ----------------------------------------------------

bool algebra_laws() {
    std::mt19937 rng(1010);
    bool ok = true;
    for (int iter = 0; iter < 1000; ++iter) {
        const std::size_t p = 1 + rng() % 4;
        const std::size_t q = 1 + rng() % 4;
        const std::size_t r = 1 + rng() % 4;
        const std::size_t s = 1 + rng() % 4;
        const BitMatrix a = ssct::random_matrix(rng, p, q);
        const BitMatrix b = ssct::random_matrix(rng, q, r);
        const BitMatrix c = ssct::random_matrix(rng, r, s);
        ok &= matmul(matmul(a, b), c) == matmul(a, matmul(b, c));
        ok &= add(a, a) == BitMatrix(p, q);

        const BitVector witness = ssct::random_vector(rng, q);
        const BitVector rhs = matvec(a, witness);
        const auto x = solve(a, rhs);
        ok &= x.has_value() && matvec(a, *x) == rhs;

        const BitMatrix sq = ssct::random_matrix(rng, q, q);
        const std::size_t e1 = rng() % 5;
        const std::size_t e2 = rng() % 5;
        ok &= matpow(sq, e1 + e2) == matmul(matpow(sq, e1), matpow(sq, e2));
    }
    expect(ok, "associativity, self-inverse addition, solve substitution, matpow composition");
    return ok;
}

struct Criterion {
    const char *label;
    bool (*fn)();
    double max_seconds; // 0 = no explicit bound
};

} // namespace

int main() {
    const Criterion criteria[] = {
        {"transition table matches the 8 golden transitions exactly", golden_table, 0},
        {"controllability matrix [[1,1],[0,1]], rank 2, controllable", controllability, 0},
        {"orbit partition is {00} plus the 3-cycle 11 -> 01 -> 10", orbit_partition, 0},
        {"decode == viterbi == brute force on all 1024 hard sequences (N=5)",
         exhaustive_hard_equivalence, 10.0},
        {"decode/viterbi/brute match the oracle on 1000 random soft sequences",
         random_soft_equivalence, 0},
        {"1000 noiseless zero-terminated round trips recover the input",
         noiseless_round_trip, 0},
        {"steering succeeds with T <= 2 for all 16 state pairs", steering_all_pairs, 0},
        {"stage cost equals Hamming distance on 10^4 hard triples",
         hard_decision_reduction, 0},
        {"AWGN sweep: soft <= hard at 2/4/6 dB and coded beats uncoded at 6 dB",
         ber_sanity, 0},
        {"GF(2) algebra laws hold on 1000 random instances each", algebra_laws, 0},
    };

    int failures = 0;
    int id = 0;
    for (const Criterion &criterion : criteria) {
        ++id;
        const auto start = std::chrono::steady_clock::now();
        bool ok = criterion.fn();
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (criterion.max_seconds > 0 && seconds > criterion.max_seconds) {
            std::printf("        check failed: runtime %.1fs exceeds %.0fs\n", seconds,
                        criterion.max_seconds);
            ok = false;
        }
        std::printf("[%s] %2d. %s (%.0f ms)\n", ok ? "PASS" : "FAIL", id, criterion.label,
                    seconds * 1e3);
        failures += !ok;
    }
    std::printf("acceptance: %d/10 criteria passed\n", 10 - failures);
    return failures;
}
