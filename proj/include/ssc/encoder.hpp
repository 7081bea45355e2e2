#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "ssc/gf2.hpp"

namespace ssc {

enum class Termination {
    kFree, ///< the encoder ends wherever the input drives it
    kZero, ///< steering inputs are appended until the state returns to zero
};

/// A convolutional encoder in discrete-time linear state-space form over
/// GF(2):
///
///   x_{t+1} = A x_t + B u_t
///   y_t     = C x_t + D u_t      (all arithmetic mod 2)
///
/// with m state bits, k input bits per stage and n output bits per stage.
/// Instances are immutable once constructed and safe to share across threads.
class StateSpaceEncoder {
  public:
    StateSpaceEncoder(BitMatrix a, BitMatrix b, BitMatrix c, BitMatrix d);

    const BitMatrix &a() const { return a_; }
    const BitMatrix &b() const { return b_; }
    const BitMatrix &c() const { return c_; }
    const BitMatrix &d() const { return d_; }

    std::size_t state_bits() const { return a_.rows(); }  // m
    std::size_t input_bits() const { return b_.cols(); }  // k
    std::size_t output_bits() const { return c_.rows(); } // n

    /// Code rate R = k / n.
    double rate() const {
        return static_cast<double>(input_bits()) / static_cast<double>(output_bits());
    }

  private:
    BitMatrix a_;
    BitMatrix b_;
    BitMatrix c_;
    BitMatrix d_;
};

/// Mutable cursor for streaming encoding.
struct EncoderState {
    BitVector x;
    std::size_t stage = 0;
};

struct StepResult {
    BitVector next;
    BitVector output;
};

/// One stage of the system: next = A x + B u, output = C x + D u.
StepResult step(const StateSpaceEncoder &enc, const BitVector &x, const BitVector &u);

/// Applies one input block to a cursor and returns the emitted output block.
BitVector advance(const StateSpaceEncoder &enc, EncoderState &state, const BitVector &u);

struct EncodeResult {
    std::vector<BitVector> codeword; ///< one n-bit block per stage, tail stages included
    BitVector final_state;           ///< state after the last emitted block
    std::vector<BitVector> tail;     ///< steering inputs appended under kZero
};

/// Encodes a sequence of k-bit input blocks starting from x0. Under kZero the
/// shortest steering sequence (at most m extra stages) drives the state back
/// to zero and its output blocks are appended; a DomainError is raised when
/// no such sequence exists.
EncodeResult encode(const StateSpaceEncoder &enc, const std::vector<BitVector> &input,
                    const BitVector &x0, Termination termination);

struct TransitionRow {
    BitVector u;
    BitVector current_state;
    BitVector next_state;
    BitVector output;
};

inline constexpr std::size_t kDefaultEnumerationCap = std::size_t{1} << 20;

/// Full (state, input) transition table, one row per pair, ordered by state
/// index then input index. Throws DomainError when 2^(m+k) exceeds row_cap.
std::vector<TransitionRow> transition_table(const StateSpaceEncoder &enc,
                                            std::size_t row_cap = kDefaultEnumerationCap);

/// Parses a code definition. Grammar, line oriented with '#' comments:
///
///   dims: m k n
///   <m rows of m bits>   A
///   <m rows of k bits>   B
///   <n rows of m bits>   C
///   <n rows of k bits>   D
///
/// Throws ParseError with the offending line number.
StateSpaceEncoder parse_code_file(std::istream &text);
StateSpaceEncoder parse_code_file(const std::string &text);
StateSpaceEncoder load_code_file(const std::string &path);

} // namespace ssc
