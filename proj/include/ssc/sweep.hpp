#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ssc/channel.hpp"
#include "ssc/decoder.hpp"

namespace ssc {

enum class Decision { kHard, kSoft };
enum class DecoderKind { kBowyer, kViterbi, kNone };

std::string to_string(Decision decision);
std::string to_string(DecoderKind kind);

/// One grid point of a Monte-Carlo sweep. BER is measured over information
/// bits: the decoded input prefix is compared against the transmitted one,
/// termination tails excluded.
struct SweepRow {
    double param = 0.0; ///< p for BSC, ebn0_db for AWGN
    std::uint64_t trials = 0;
    std::uint64_t info_bits = 0;
    std::uint64_t bit_errors = 0;
    double ber = 0.0;
    DecoderKind decoder = DecoderKind::kBowyer;
    Decision decision = Decision::kHard;
};

struct SweepConfig {
    ChannelSpec::Kind channel = ChannelSpec::Kind::kBsc;
    std::vector<double> grid; ///< p values (BSC) or ebn0_db values (AWGN)
    std::uint64_t trials = 1;
    std::size_t frame_bits = 0; ///< information bits per frame, multiple of k
    std::uint64_t seed = 0;
    Decision decision = Decision::kHard;
    bool uncoded = false; ///< channel pass-through baseline, no code at all
    Termination termination = Termination::kZero;
};

/// Runs trials frames per grid point and aggregates information-bit errors.
/// Trial i always draws from substream (seed, i), so results do not depend on
/// scheduling and repeat exactly for a fixed configuration within one build.
std::vector<SweepRow> ber_sweep(const StateSpaceEncoder &enc, const SweepConfig &config);

/// CSV with header param,trials,info_bits,bit_errors,ber,decoder,decision.
void write_csv(std::ostream &out, const std::vector<SweepRow> &rows);

} // namespace ssc
