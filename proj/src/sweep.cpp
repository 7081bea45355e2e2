#include "ssc/sweep.hpp"

#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "ssc/errors.hpp"

namespace ssc {

std::string to_string(Decision decision) {
    return decision == Decision::kHard ? "hard" : "soft";
}

std::string to_string(DecoderKind kind) {
    switch (kind) {
    case DecoderKind::kBowyer:
        return "bowyer";
    case DecoderKind::kViterbi:
        return "viterbi";
    case DecoderKind::kNone:
        return "none";
    }
    return "?";
}

namespace {

std::vector<Bit> random_bits(std::size_t count, RngStream &rng) {
    std::vector<Bit> bits(count);
    for (Bit &b : bits)
        b = static_cast<Bit>(rng.engine()() & 1u);
    return bits;
}

std::vector<double> transmit(ChannelSpec::Kind kind, std::span<const Bit> bits, double param,
                             double rate, RngStream &rng) {
    return kind == ChannelSpec::Kind::kBsc ? transmit_bsc(bits, param, rng)
                                           : transmit_awgn(bits, param, rate, rng);
}

// Bits per frame sent uncoded through the channel and sliced back.
std::uint64_t run_uncoded_trial(ChannelSpec::Kind kind, const std::vector<Bit> &info,
                                double param, const SymbolMap &map, RngStream &rng) {
    const std::vector<double> received = transmit(kind, info, param, 1.0, rng);
    const std::vector<double> sliced = harden(received, map);
    std::uint64_t errors = 0;
    for (std::size_t i = 0; i < info.size(); ++i)
        errors += sliced[i] != map.level(info[i]);
    return errors;
}

std::uint64_t run_coded_trial(const StateSpaceEncoder &enc, const SweepConfig &config,
                              const std::vector<Bit> &info, double param, const SymbolMap &map,
                              RngStream &rng) {
    const std::size_t k = enc.input_bits();
    std::vector<BitVector> blocks(info.size() / k, BitVector(k));
    for (std::size_t i = 0; i < info.size(); ++i)
        blocks[i / k].set(i % k, info[i]);

    const EncodeResult sent =
        encode(enc, blocks, BitVector(enc.state_bits()), config.termination);
    std::vector<Bit> code_bits;
    code_bits.reserve(sent.codeword.size() * enc.output_bits());
    for (const BitVector &block : sent.codeword)
        for (std::size_t i = 0; i < block.size(); ++i)
            code_bits.push_back(block[i]);

    std::vector<double> received = transmit(config.channel, code_bits, param, enc.rate(), rng);
    if (config.decision == Decision::kHard)
        received = harden(received, map);

    const DecodeProblem problem =
        make_problem(enc, received, map, BitVector(enc.state_bits()), config.termination);
    const DecodeResult result = decode(enc, problem);

    std::uint64_t errors = 0;
    for (std::size_t b = 0; b < blocks.size(); ++b)
        for (std::size_t i = 0; i < k; ++i)
            errors += result.inputs[b][i] != blocks[b][i];
    return errors;
}

} // namespace

std::vector<SweepRow> ber_sweep(const StateSpaceEncoder &enc, const SweepConfig &config) {
    if (config.trials == 0)
        throw std::invalid_argument("sweep needs at least one trial");
    if (config.frame_bits == 0 || config.frame_bits % enc.input_bits() != 0)
        throw std::invalid_argument("frame bit count must be a positive multiple of k");
    if (config.grid.empty())
        throw std::invalid_argument("sweep grid is empty");
    if (config.channel == ChannelSpec::Kind::kBsc)
        for (double p : config.grid)
            if (!(p >= 0.0 && p < 0.5))
                throw std::invalid_argument("bsc grid values must satisfy 0 <= p < 0.5");

    const SymbolMap map = config.channel == ChannelSpec::Kind::kBsc ? SymbolMap::identity()
                                                                    : SymbolMap::bpsk();
    std::vector<SweepRow> rows;
    rows.reserve(config.grid.size());
    for (double param : config.grid) {
        SweepRow row;
        row.param = param;
        row.trials = config.trials;
        row.decoder = config.uncoded ? DecoderKind::kNone : DecoderKind::kBowyer;
        row.decision = config.decision;
        for (std::uint64_t trial = 0; trial < config.trials; ++trial) {
            RngStream rng(config.seed, trial);
            const std::vector<Bit> info = random_bits(config.frame_bits, rng);
            row.bit_errors += config.uncoded
                                  ? run_uncoded_trial(config.channel, info, param, map, rng)
                                  : run_coded_trial(enc, config, info, param, map, rng);
            row.info_bits += config.frame_bits;
        }
        row.ber = static_cast<double>(row.bit_errors) / static_cast<double>(row.info_bits);
        rows.push_back(row);
    }
    return rows;
}

void write_csv(std::ostream &out, const std::vector<SweepRow> &rows) {
    out << "param,trials,info_bits,bit_errors,ber,decoder,decision\n";
    char buffer[64];
    for (const SweepRow &row : rows) {
        std::snprintf(buffer, sizeof(buffer), "%.8g", row.param);
        out << buffer << ',' << row.trials << ',' << row.info_bits << ',' << row.bit_errors
            << ',';
        std::snprintf(buffer, sizeof(buffer), "%.8g", row.ber);
        out << buffer << ',' << to_string(row.decoder) << ',' << to_string(row.decision)
            << '\n';
    }
}

} // namespace ssc
