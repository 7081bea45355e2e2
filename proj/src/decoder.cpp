#include "ssc/decoder.hpp"

#include <cmath>
#include <limits>
#include <utility>

#include "ssc/errors.hpp"

namespace ssc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Flattened trellis: per (state, input) pair the successor state and the
// mapped output levels. Decoding tabulates all 2^m states, so the same cap
// as the transition table applies.
struct Trellis {
    std::size_t num_states = 0;
    std::size_t num_inputs = 0;
    std::size_t n = 0;
    std::vector<std::uint32_t> next;   // [s * num_inputs + u]
    std::vector<double> levels;        // [(s * num_inputs + u) * n + i]
    std::vector<BitVector> output_of;  // [s * num_inputs + u]
};

Trellis build_trellis(const StateSpaceEncoder &enc, const SymbolMap &map) {
    const std::size_t m = enc.state_bits();
    const std::size_t k = enc.input_bits();
    if (m + k > 20)
        throw DomainError("decoder: 2^(m+k) state-input pairs exceed the tabulation cap");
    Trellis t;
    t.num_states = std::size_t{1} << m;
    t.num_inputs = std::size_t{1} << k;
    t.n = enc.output_bits();
    t.next.reserve(t.num_states * t.num_inputs);
    t.levels.reserve(t.num_states * t.num_inputs * t.n);
    t.output_of.reserve(t.num_states * t.num_inputs);
    for (std::size_t s = 0; s < t.num_states; ++s) {
        const BitVector x = BitVector::from_index(s, m);
        for (std::size_t v = 0; v < t.num_inputs; ++v) {
            StepResult r = step(enc, x, BitVector::from_index(v, k));
            t.next.push_back(static_cast<std::uint32_t>(r.next.to_index()));
            for (std::size_t i = 0; i < t.n; ++i)
                t.levels.push_back(map.level(r.output[i]));
            t.output_of.push_back(std::move(r.output));
        }
    }
    return t;
}

double branch_cost(const Trellis &t, std::size_t edge, std::span<const double> r) {
    double cost = 0.0;
    const double *levels = &t.levels[edge * t.n];
    for (std::size_t i = 0; i < t.n; ++i) {
        const double d = levels[i] - r[i];
        cost += d * d;
    }
    return cost;
}

void validate_problem(const StateSpaceEncoder &enc, const DecodeProblem &p) {
    if (p.stages() == 0)
        throw DimensionError("decode problem must contain at least one received block");
    for (const auto &block : p.received)
        if (block.size() != enc.output_bits())
            throw DimensionError("received block length does not match n");
    if (p.x0.size() != enc.state_bits())
        throw DimensionError("initial state width does not match the code");
    if (p.map.zero_level == p.map.one_level)
        throw std::invalid_argument("symbol map levels must differ");
}

// Shared result assembly: replay an input-index sequence from x0.
DecodeResult rebuild(const Trellis &t, const StateSpaceEncoder &enc, std::uint64_t x0_index,
                     const std::vector<std::uint32_t> &input_indices, double total_cost) {
    const std::size_t m = enc.state_bits();
    const std::size_t k = enc.input_bits();
    DecodeResult out;
    out.total_cost = total_cost;
    out.states.reserve(input_indices.size() + 1);
    out.states.push_back(BitVector::from_index(x0_index, m));
    std::size_t s = x0_index;
    for (std::uint32_t u : input_indices) {
        const std::size_t edge = s * t.num_inputs + u;
        out.inputs.push_back(BitVector::from_index(u, k));
        out.codeword.push_back(t.output_of[edge]);
        s = t.next[edge];
        out.states.push_back(BitVector::from_index(s, m));
    }
    return out;
}

std::vector<double> boundary_costs(const Trellis &t, Termination termination) {
    std::vector<double> j(t.num_states, 0.0);
    if (termination == Termination::kZero) {
        j.assign(t.num_states, kInf);
        j[0] = 0.0;
    }
    return j;
}

} // namespace

DecodeProblem make_problem(const StateSpaceEncoder &enc, std::span<const double> symbols,
                           SymbolMap map, BitVector x0, Termination termination) {
    const std::size_t n = enc.output_bits();
    if (symbols.empty() || symbols.size() % n != 0)
        throw DimensionError("received length must be a positive multiple of n");
    DecodeProblem p;
    p.received.reserve(symbols.size() / n);
    for (std::size_t off = 0; off < symbols.size(); off += n)
        p.received.emplace_back(symbols.begin() + static_cast<long>(off),
                                symbols.begin() + static_cast<long>(off + n));
    p.map = map;
    p.x0 = std::move(x0);
    p.termination = termination;
    return p;
}

double stage_cost(const StateSpaceEncoder &enc, const BitVector &x, const BitVector &u,
                  std::span<const double> r, const SymbolMap &map) {
    if (r.size() != enc.output_bits())
        throw DimensionError("stage_cost: received block length does not match n");
    const BitVector y = matvec(enc.c(), x) ^ matvec(enc.d(), u);
    double cost = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i) {
        const double d = map.level(y[i]) - r[i];
        cost += d * d;
    }
    return cost;
}

ValueTable backward_pass(const StateSpaceEncoder &enc, const DecodeProblem &problem) {
    validate_problem(enc, problem);
    const Trellis t = build_trellis(enc, problem.map);
    const std::size_t stages = problem.stages();

    ValueTable table;
    table.cost_to_go.assign(stages + 1, {});
    table.policy.assign(stages, std::vector<std::uint32_t>(t.num_states, 0));
    table.cost_to_go[stages] = boundary_costs(t, problem.termination);

    for (std::size_t k = stages; k-- > 0;) {
        const std::vector<double> &ahead = table.cost_to_go[k + 1];
        std::vector<double> &current = table.cost_to_go[k];
        current.assign(t.num_states, kInf);
        const std::span<const double> r(problem.received[k]);
        for (std::size_t s = 0; s < t.num_states; ++s) {
            double best = kInf;
            std::uint32_t best_u = 0;
            for (std::size_t u = 0; u < t.num_inputs; ++u) {
                const std::size_t edge = s * t.num_inputs + u;
                const double cand = branch_cost(t, edge, r) + ahead[t.next[edge]];
                if (cand < best) { // strict: ties keep the smaller input
                    best = cand;
                    best_u = static_cast<std::uint32_t>(u);
                }
            }
            current[s] = best;
            table.policy[k][s] = best_u;
        }
    }
    return table;
}

DecodeResult decode(const StateSpaceEncoder &enc, const DecodeProblem &problem) {
    const ValueTable table = backward_pass(enc, problem);
    const Trellis t = build_trellis(enc, problem.map);
    const std::uint64_t x0 = problem.x0.to_index();
    if (!std::isfinite(table.cost_to_go[0][x0]))
        throw DomainError("no valid codeword: termination is infeasible from the initial state");

    std::vector<std::uint32_t> inputs;
    inputs.reserve(problem.stages());
    std::size_t s = x0;
    for (std::size_t k = 0; k < problem.stages(); ++k) {
        const std::uint32_t u = table.policy[k][s];
        inputs.push_back(u);
        s = t.next[s * t.num_inputs + u];
    }
    return rebuild(t, enc, x0, inputs, table.cost_to_go[0][x0]);
}

DecodeResult viterbi_forward(const StateSpaceEncoder &enc, const DecodeProblem &problem) {
    validate_problem(enc, problem);
    const Trellis t = build_trellis(enc, problem.map);
    const std::size_t stages = problem.stages();
    const std::uint64_t x0 = problem.x0.to_index();
    constexpr std::uint32_t kNoState = UINT32_MAX;

    // Metric, survivor edge and the full input prefix per state. Equal-metric
    // merges keep the path whose input prefix is the smaller binary number,
    // which is exactly the backward pass's tie rule.
    std::vector<double> metric(t.num_states, kInf);
    metric[x0] = 0.0;
    std::vector<std::vector<std::uint32_t>> prefix(t.num_states);
    struct Survivor {
        std::uint32_t prev = kNoState;
        std::uint32_t u = 0;
    };
    std::vector<std::vector<Survivor>> survivors(stages,
                                                 std::vector<Survivor>(t.num_states));

    auto prefix_less = [](const std::vector<std::uint32_t> &a, std::uint32_t au,
                          const std::vector<std::uint32_t> &b, std::uint32_t bu) {
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i])
                return a[i] < b[i];
        return au < bu;
    };

    for (std::size_t k = 0; k < stages; ++k) {
        const std::span<const double> r(problem.received[k]);
        std::vector<double> next_metric(t.num_states, kInf);
        for (std::size_t s = 0; s < t.num_states; ++s) {
            if (!std::isfinite(metric[s]))
                continue;
            for (std::size_t u = 0; u < t.num_inputs; ++u) {
                const std::size_t edge = s * t.num_inputs + u;
                const std::uint32_t to = t.next[edge];
                const double cand = metric[s] + branch_cost(t, edge, r);
                Survivor &sv = survivors[k][to];
                const bool better =
                    cand < next_metric[to] ||
                    (cand == next_metric[to] && sv.prev != kNoState &&
                     prefix_less(prefix[s], static_cast<std::uint32_t>(u), prefix[sv.prev],
                                 sv.u));
                if (sv.prev == kNoState ? std::isfinite(cand) : better) {
                    next_metric[to] = cand;
                    sv = {static_cast<std::uint32_t>(s), static_cast<std::uint32_t>(u)};
                }
            }
        }
        std::vector<std::vector<std::uint32_t>> next_prefix(t.num_states);
        for (std::size_t s = 0; s < t.num_states; ++s) {
            const Survivor &sv = survivors[k][s];
            if (sv.prev == kNoState)
                continue;
            next_prefix[s] = prefix[sv.prev];
            next_prefix[s].push_back(sv.u);
        }
        metric = std::move(next_metric);
        prefix = std::move(next_prefix);
    }

    std::size_t end = 0;
    if (problem.termination == Termination::kZero) {
        if (!std::isfinite(metric[0]))
            throw DomainError(
                "no valid codeword: termination is infeasible from the initial state");
    } else {
        // Free end: best metric; among equal metrics the smaller input
        // sequence (distinct end states never share a prefix).
        std::size_t best = 0;
        while (best < t.num_states && !std::isfinite(metric[best]))
            ++best;
        for (std::size_t s = best + 1; s < t.num_states; ++s) {
            if (!std::isfinite(metric[s]))
                continue;
            if (metric[s] < metric[best] ||
                (metric[s] == metric[best] && prefix[s] < prefix[best]))
                best = s;
        }
        end = best;
    }

    std::vector<std::uint32_t> inputs(stages, 0);
    std::size_t s = end;
    for (std::size_t k = stages; k-- > 0;) {
        const Survivor &sv = survivors[k][s];
        inputs[k] = sv.u;
        s = sv.prev;
    }
    return rebuild(t, enc, x0, inputs, metric[end]);
}

DecodeResult brute_force_ml(const StateSpaceEncoder &enc, const DecodeProblem &problem) {
    validate_problem(enc, problem);
    const std::size_t k = enc.input_bits();
    const std::size_t stages = problem.stages();
    const std::size_t total_bits = stages * k;
    if (total_bits > 20)
        throw DomainError("brute_force_ml: N*k exceeds the 20-bit enumeration guard");
    const Trellis t = build_trellis(enc, problem.map);
    const std::uint64_t x0 = problem.x0.to_index();
    const std::uint32_t input_mask = (std::uint32_t{1} << k) - 1;

    double best_cost = kInf;
    std::uint64_t best_seq = 0;
    bool found = false;
    for (std::uint64_t seq = 0; seq < (std::uint64_t{1} << total_bits); ++seq) {
        std::size_t s = x0;
        double cost = 0.0;
        for (std::size_t stage = 0; stage < stages; ++stage) {
            const std::uint32_t u =
                static_cast<std::uint32_t>(seq >> ((stages - 1 - stage) * k)) & input_mask;
            const std::size_t edge = s * t.num_inputs + u;
            cost += branch_cost(t, edge, problem.received[stage]);
            s = t.next[edge];
        }
        if (problem.termination == Termination::kZero && s != 0)
            continue;
        if (cost < best_cost) { // strict: ascending seq keeps the smallest on ties
            best_cost = cost;
            best_seq = seq;
            found = true;
        }
    }
    if (!found)
        throw DomainError("no valid codeword: the feasible set under zero termination is empty");

    std::vector<std::uint32_t> inputs(stages);
    for (std::size_t stage = 0; stage < stages; ++stage)
        inputs[stage] =
            static_cast<std::uint32_t>(best_seq >> ((stages - 1 - stage) * k)) & input_mask;
    return rebuild(t, enc, x0, inputs, best_cost);
}

} // namespace ssc
