#include "ssc/gf2.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "ssc/errors.hpp"

namespace ssc {

namespace {

Bit checked_bit(int value) {
    if (value != 0 && value != 1)
        throw std::invalid_argument("bit entries must be 0 or 1");
    return static_cast<Bit>(value);
}

} // namespace

BitVector::BitVector(std::initializer_list<int> bits) {
    bits_.reserve(bits.size());
    for (int b : bits)
        bits_.push_back(checked_bit(b));
}

BitVector BitVector::from_index(std::uint64_t value, std::size_t len) {
    if (len < 64 && (value >> len) != 0)
        throw std::invalid_argument("index does not fit in the requested bit width");
    BitVector v(len);
    for (std::size_t i = 0; i < len; ++i)
        v.bits_[i] = static_cast<Bit>((value >> (len - 1 - i)) & 1u);
    return v;
}

BitVector BitVector::parse(std::string_view text) {
    BitVector v;
    v.bits_.reserve(text.size());
    for (char c : text) {
        if (c != '0' && c != '1')
            throw std::invalid_argument("bit strings may contain only 0 and 1");
        v.bits_.push_back(static_cast<Bit>(c - '0'));
    }
    return v;
}

void BitVector::set(std::size_t i, Bit value) {
    bits_.at(i) = checked_bit(value);
}

std::uint64_t BitVector::to_index() const {
    if (size() > 64)
        throw std::invalid_argument("bit vector too wide for a 64-bit index");
    std::uint64_t value = 0;
    for (Bit b : bits_)
        value = (value << 1) | b;
    return value;
}

std::string BitVector::to_string() const {
    std::string s;
    s.reserve(size());
    for (Bit b : bits_)
        s.push_back(static_cast<char>('0' + b));
    return s;
}

bool BitVector::is_zero() const {
    return std::all_of(bits_.begin(), bits_.end(), [](Bit b) { return b == 0; });
}

BitVector BitVector::operator^(const BitVector &other) const {
    if (size() != other.size())
        throw DimensionError("XOR of bit vectors with different lengths");
    BitVector out(size());
    for (std::size_t i = 0; i < size(); ++i)
        out.bits_[i] = bits_[i] ^ other.bits_[i];
    return out;
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
    if (rows == 0 || cols == 0)
        throw DimensionError("matrix dimensions must be at least 1x1");
    data_.assign(rows * cols, 0);
}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.data_[i * n + i] = 1;
    return m;
}

BitMatrix BitMatrix::from_rows(std::initializer_list<std::initializer_list<int>> rows) {
    if (rows.size() == 0 || rows.begin()->size() == 0)
        throw DimensionError("matrix dimensions must be at least 1x1");
    BitMatrix m(rows.size(), rows.begin()->size());
    std::size_t r = 0;
    for (const auto &row : rows) {
        if (row.size() != m.cols_)
            throw DimensionError("matrix rows must all have the same length");
        std::size_t c = 0;
        for (int value : row)
            m.data_[r * m.cols_ + c++] = checked_bit(value);
        ++r;
    }
    return m;
}

void BitMatrix::set(std::size_t r, std::size_t c, Bit value) {
    if (r >= rows_ || c >= cols_)
        throw std::out_of_range("matrix index out of range");
    data_[r * cols_ + c] = checked_bit(value);
}

BitMatrix matmul(const BitMatrix &a, const BitMatrix &b) {
    if (a.cols() != b.rows())
        throw DimensionError("matmul: inner dimensions do not match (" + std::to_string(a.cols()) +
                             " vs " + std::to_string(b.rows()) + ")");
    BitMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            Bit acc = 0;
            for (std::size_t t = 0; t < a.cols(); ++t)
                acc ^= a(i, t) & b(t, j);
            out.set(i, j, acc);
        }
    return out;
}

BitVector matvec(const BitMatrix &a, const BitVector &x) {
    if (a.cols() != x.size())
        throw DimensionError("matvec: matrix has " + std::to_string(a.cols()) +
                             " columns but vector has " + std::to_string(x.size()) + " entries");
    BitVector out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Bit acc = 0;
        for (std::size_t t = 0; t < a.cols(); ++t)
            acc ^= a(i, t) & x[t];
        out.set(i, acc);
    }
    return out;
}

BitMatrix matpow(const BitMatrix &a, std::size_t t) {
    if (a.rows() != a.cols())
        throw DimensionError("matpow requires a square matrix");
    BitMatrix out = BitMatrix::identity(a.rows());
    for (std::size_t i = 0; i < t; ++i)
        out = matmul(out, a);
    return out;
}

BitMatrix add(const BitMatrix &a, const BitMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionError("add: shapes do not match");
    BitMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out.set(i, j, a(i, j) ^ b(i, j));
    return out;
}

BitMatrix hstack(const BitMatrix &left, const BitMatrix &right) {
    if (left.rows() != right.rows())
        throw DimensionError("hstack: row counts do not match");
    BitMatrix out(left.rows(), left.cols() + right.cols());
    for (std::size_t i = 0; i < out.rows(); ++i) {
        for (std::size_t j = 0; j < left.cols(); ++j)
            out.set(i, j, left(i, j));
        for (std::size_t j = 0; j < right.cols(); ++j)
            out.set(i, left.cols() + j, right(i, j));
    }
    return out;
}

BitMatrix vstack(const BitMatrix &top, const BitMatrix &bottom) {
    if (top.cols() != bottom.cols())
        throw DimensionError("vstack: column counts do not match");
    BitMatrix out(top.rows() + bottom.rows(), top.cols());
    for (std::size_t j = 0; j < out.cols(); ++j) {
        for (std::size_t i = 0; i < top.rows(); ++i)
            out.set(i, j, top(i, j));
        for (std::size_t i = 0; i < bottom.rows(); ++i)
            out.set(top.rows() + i, j, bottom(i, j));
    }
    return out;
}

namespace {

using Rows = std::vector<std::vector<Bit>>;

Rows to_rows(const BitMatrix &m, const BitVector *rhs) {
    Rows rows(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        rows[i].resize(m.cols() + (rhs ? 1 : 0));
        for (std::size_t j = 0; j < m.cols(); ++j)
            rows[i][j] = m(i, j);
        if (rhs)
            rows[i][m.cols()] = (*rhs)[i];
    }
    return rows;
}

// Forward elimination over GF(2); returns the pivot column of each echelon
// row. Row XOR replaces the usual scaling/subtraction.
std::vector<std::size_t> eliminate(Rows &rows, std::size_t num_cols) {
    std::vector<std::size_t> pivot_cols;
    std::size_t next_row = 0;
    for (std::size_t col = 0; col < num_cols && next_row < rows.size(); ++col) {
        std::size_t pivot = next_row;
        while (pivot < rows.size() && rows[pivot][col] == 0)
            ++pivot;
        if (pivot == rows.size())
            continue;
        std::swap(rows[pivot], rows[next_row]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == next_row || rows[i][col] == 0)
                continue;
            for (std::size_t j = col; j < rows[i].size(); ++j)
                rows[i][j] ^= rows[next_row][j];
        }
        pivot_cols.push_back(col);
        ++next_row;
    }
    return pivot_cols;
}

} // namespace

std::size_t rank(const BitMatrix &a) {
    Rows rows = to_rows(a, nullptr);
    return eliminate(rows, a.cols()).size();
}

int determinant(const BitMatrix &a) {
    if (a.rows() != a.cols())
        throw DimensionError("determinant requires a square matrix");
    return rank(a) == a.rows() ? 1 : 0;
}

std::optional<BitVector> solve(const BitMatrix &a, const BitVector &b) {
    if (a.rows() != b.size())
        throw DimensionError("solve: matrix has " + std::to_string(a.rows()) +
                             " rows but right-hand side has " + std::to_string(b.size()));
    Rows rows = to_rows(a, &b);
    const std::vector<std::size_t> pivot_cols = eliminate(rows, a.cols());

    // A zero row with a 1 on the right-hand side marks an inconsistent system.
    for (std::size_t i = pivot_cols.size(); i < rows.size(); ++i)
        if (rows[i][a.cols()] != 0)
            return std::nullopt;

    // Rows are fully reduced, so each pivot variable equals its row's rhs;
    // free variables stay 0.
    BitVector x(a.cols());
    for (std::size_t r = 0; r < pivot_cols.size(); ++r)
        x.set(pivot_cols[r], rows[r][a.cols()]);
    return x;
}

} // namespace ssc
