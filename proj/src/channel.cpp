#include "ssc/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace ssc {

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_index)
    : seed_(seed), stream_index_(stream_index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream_index),
                      static_cast<std::uint32_t>(stream_index >> 32)};
    engine_.seed(seq);
}

double awgn_noise_variance(double ebn0_db, double rate) {
    return 1.0 / (2.0 * rate * std::pow(10.0, ebn0_db / 10.0));
}

std::vector<double> transmit_bsc(std::span<const Bit> codeword, double p, RngStream &rng) {
    if (!(p >= 0.0 && p < 0.5))
        throw std::invalid_argument("bsc crossover probability must satisfy 0 <= p < 0.5");
    std::bernoulli_distribution flip(p);
    std::vector<double> out;
    out.reserve(codeword.size());
    for (Bit b : codeword)
        out.push_back(static_cast<double>(b ^ static_cast<Bit>(flip(rng.engine()))));
    return out;
}

std::vector<double> transmit_awgn(std::span<const Bit> codeword, double ebn0_db, double rate,
                                  RngStream &rng) {
    if (!(rate > 0.0 && rate <= 1.0))
        throw std::invalid_argument("code rate must lie in (0, 1]");
    const SymbolMap bpsk = SymbolMap::bpsk();
    std::normal_distribution<double> noise(0.0, std::sqrt(awgn_noise_variance(ebn0_db, rate)));
    std::vector<double> out;
    out.reserve(codeword.size());
    for (Bit b : codeword)
        out.push_back(bpsk.level(b) + noise(rng.engine()));
    return out;
}

std::vector<double> harden(std::span<const double> received, const SymbolMap &map) {
    std::vector<double> out;
    out.reserve(received.size());
    for (double r : received)
        out.push_back(std::fabs(r - map.zero_level) <= std::fabs(r - map.one_level)
                          ? map.zero_level
                          : map.one_level);
    return out;
}

} // namespace ssc
