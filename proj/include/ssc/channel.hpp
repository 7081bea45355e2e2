#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "ssc/decoder.hpp"

namespace ssc {

/// Deterministic substream of a master seed: the same (seed, stream_index)
/// pair reproduces the same sample sequence within one build. Streams are
/// independent objects; share one across threads and the determinism is gone.
class RngStream {
  public:
    RngStream(std::uint64_t seed, std::uint64_t stream_index);

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream_index() const { return stream_index_; }
    std::mt19937_64 &engine() { return engine_; }

  private:
    std::uint64_t seed_;
    std::uint64_t stream_index_;
    std::mt19937_64 engine_;
};

struct ChannelSpec {
    enum class Kind { kBsc, kAwgn };
    Kind kind = Kind::kBsc;
    double p = 0.0;       ///< BSC crossover probability, 0 <= p < 0.5
    double ebn0_db = 0.0; ///< AWGN SNR per information bit
    double rate = 1.0;    ///< AWGN noise scaling, code rate in (0, 1]
};

/// Noise variance for BPSK with unit symbol energy:
/// sigma^2 = 1 / (2 * rate * 10^(ebn0_db / 10)).
double awgn_noise_variance(double ebn0_db, double rate);

/// Flips each bit independently with probability p and emits 0.0/1.0 reals.
std::vector<double> transmit_bsc(std::span<const Bit> codeword, double p, RngStream &rng);

/// Maps bits to +/-1 (0 -> +1, 1 -> -1) and adds white Gaussian noise whose
/// variance reflects ebn0_db per information bit at the given code rate.
std::vector<double> transmit_awgn(std::span<const Bit> codeword, double ebn0_db, double rate,
                                  RngStream &rng);

/// Snaps every value to the nearer of the two map levels; exact midpoints go
/// to zero_level. Idempotent.
std::vector<double> harden(std::span<const double> received, const SymbolMap &map);

} // namespace ssc
