#include "ssc/encoder.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <utility>

#include "ssc/analysis.hpp"
#include "ssc/errors.hpp"

namespace ssc {

StateSpaceEncoder::StateSpaceEncoder(BitMatrix a, BitMatrix b, BitMatrix c, BitMatrix d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    if (a_.rows() != a_.cols())
        throw DimensionError("A must be square");
    const std::size_t m = a_.rows();
    const std::size_t k = b_.cols();
    const std::size_t n = c_.rows();
    if (b_.rows() != m)
        throw DimensionError("B must have m rows");
    if (c_.cols() != m)
        throw DimensionError("C must have m columns");
    if (d_.rows() != n || d_.cols() != k)
        throw DimensionError("D must be n x k");
    if (k > n)
        throw DimensionError("rate k/n must not exceed 1");
}

StepResult step(const StateSpaceEncoder &enc, const BitVector &x, const BitVector &u) {
    if (x.size() != enc.state_bits())
        throw DimensionError("step: state has " + std::to_string(x.size()) + " bits, expected " +
                             std::to_string(enc.state_bits()));
    if (u.size() != enc.input_bits())
        throw DimensionError("step: input has " + std::to_string(u.size()) + " bits, expected " +
                             std::to_string(enc.input_bits()));
    return {matvec(enc.a(), x) ^ matvec(enc.b(), u), matvec(enc.c(), x) ^ matvec(enc.d(), u)};
}

BitVector advance(const StateSpaceEncoder &enc, EncoderState &state, const BitVector &u) {
    StepResult r = step(enc, state.x, u);
    state.x = std::move(r.next);
    ++state.stage;
    return std::move(r.output);
}

EncodeResult encode(const StateSpaceEncoder &enc, const std::vector<BitVector> &input,
                    const BitVector &x0, Termination termination) {
    if (x0.size() != enc.state_bits())
        throw DimensionError("encode: initial state width does not match the code");
    EncodeResult out;
    out.codeword.reserve(input.size());
    EncoderState cursor{x0, 0};
    for (const BitVector &u : input)
        out.codeword.push_back(advance(enc, cursor, u));
    if (termination == Termination::kZero && !cursor.x.is_zero()) {
        auto tail = steer(enc, cursor.x, BitVector(enc.state_bits()), enc.state_bits());
        if (!tail)
            throw DomainError("zero termination infeasible: no steering sequence within " +
                              std::to_string(enc.state_bits()) + " steps");
        for (const BitVector &u : *tail)
            out.codeword.push_back(advance(enc, cursor, u));
        out.tail = std::move(*tail);
    }
    out.final_state = std::move(cursor.x);
    return out;
}

std::vector<TransitionRow> transition_table(const StateSpaceEncoder &enc, std::size_t row_cap) {
    const std::size_t m = enc.state_bits();
    const std::size_t k = enc.input_bits();
    if (m + k >= 63 || (std::uint64_t{1} << (m + k)) > row_cap)
        throw DomainError("transition table would exceed the row cap of " +
                          std::to_string(row_cap));
    std::vector<TransitionRow> rows;
    rows.reserve(std::size_t{1} << (m + k));
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << m); ++s) {
        const BitVector x = BitVector::from_index(s, m);
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << k); ++v) {
            const BitVector u = BitVector::from_index(v, k);
            StepResult r = step(enc, x, u);
            rows.push_back({u, x, std::move(r.next), std::move(r.output)});
        }
    }
    return rows;
}

namespace {

// One significant line of a code file: comments stripped, blanks skipped.
struct Line {
    std::vector<std::string> tokens;
    std::size_t number = 0;
};

class LineReader {
  public:
    explicit LineReader(std::istream &in) : in_(in) {}

    // Next non-empty line after comment stripping, or nullopt at EOF.
    std::optional<Line> next() {
        std::string raw;
        while (std::getline(in_, raw)) {
            ++line_number_;
            if (auto hash = raw.find('#'); hash != std::string::npos)
                raw.erase(hash);
            std::istringstream split(raw);
            Line line;
            line.number = line_number_;
            std::string token;
            while (split >> token)
                line.tokens.push_back(token);
            if (!line.tokens.empty())
                return line;
        }
        return std::nullopt;
    }

    std::size_t line_number() const { return line_number_; }

  private:
    std::istream &in_;
    std::size_t line_number_ = 0;
};

std::size_t parse_count(const std::string &token, const Line &line) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size() || value == 0)
        throw ParseError("malformed header: '" + token + "' is not a positive count",
                         line.number);
    return value;
}

BitMatrix read_matrix(LineReader &reader, std::size_t rows, std::size_t cols,
                      const char *label) {
    BitMatrix out(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        auto line = reader.next();
        if (!line)
            throw ParseError(std::string("unexpected end of file: missing row ") +
                                 std::to_string(r + 1) + " of matrix " + label,
                             reader.line_number() + 1);
        if (line->tokens.size() != cols)
            throw ParseError(std::string("matrix ") + label + " row " + std::to_string(r + 1) +
                                 ": expected " + std::to_string(cols) + " entries, found " +
                                 std::to_string(line->tokens.size()),
                             line->number);
        for (std::size_t c = 0; c < cols; ++c) {
            const std::string &tok = line->tokens[c];
            if (tok != "0" && tok != "1")
                throw ParseError(std::string("matrix ") + label + ": entry '" + tok +
                                     "' is not a bit",
                                 line->number);
            out.set(r, c, static_cast<Bit>(tok == "1"));
        }
    }
    return out;
}

} // namespace

StateSpaceEncoder parse_code_file(std::istream &text) {
    LineReader reader(text);
    auto header = reader.next();
    if (!header)
        throw ParseError("empty code file: expected 'dims: m k n'", reader.line_number() + 1);
    if (header->tokens.size() != 4 || header->tokens[0] != "dims:")
        throw ParseError("malformed header: expected 'dims: m k n'", header->number);
    const std::size_t m = parse_count(header->tokens[1], *header);
    const std::size_t k = parse_count(header->tokens[2], *header);
    const std::size_t n = parse_count(header->tokens[3], *header);
    constexpr std::size_t kMaxDim = std::size_t{1} << 12;
    if (m > kMaxDim || k > kMaxDim || n > kMaxDim)
        throw ParseError("malformed header: dimension larger than " + std::to_string(kMaxDim),
                         header->number);

    BitMatrix a = read_matrix(reader, m, m, "A");
    BitMatrix b = read_matrix(reader, m, k, "B");
    BitMatrix c = read_matrix(reader, n, m, "C");
    BitMatrix d = read_matrix(reader, n, k, "D");

    if (auto extra = reader.next())
        throw ParseError("unexpected content after matrix D", extra->number);

    return StateSpaceEncoder(std::move(a), std::move(b), std::move(c), std::move(d));
}

StateSpaceEncoder parse_code_file(const std::string &text) {
    std::istringstream in(text);
    return parse_code_file(in);
}

StateSpaceEncoder load_code_file(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open code file: " + path);
    return parse_code_file(in);
}

} // namespace ssc
