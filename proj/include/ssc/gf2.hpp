#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ssc {

using Bit = std::uint8_t;

/// Bit vector over GF(2). Position 0 is the most significant bit when the
/// vector is read as a binary number or printed as a string, so "10" has
/// bit 0 set and bit 1 clear and indexes to 2.
class BitVector {
  public:
    BitVector() = default;
    explicit BitVector(std::size_t len) : bits_(len, 0) {}
    BitVector(std::initializer_list<int> bits);

    static BitVector from_index(std::uint64_t value, std::size_t len);
    static BitVector parse(std::string_view text);

    std::size_t size() const { return bits_.size(); }
    bool empty() const { return bits_.empty(); }
    Bit operator[](std::size_t i) const { return bits_[i]; }
    void set(std::size_t i, Bit value);

    std::uint64_t to_index() const;
    std::string to_string() const;
    bool is_zero() const;

    /// Entrywise XOR; sizes must match.
    BitVector operator^(const BitVector &other) const;

    friend bool operator==(const BitVector &, const BitVector &) = default;

  private:
    std::vector<Bit> bits_;
};

/// Dense row-major matrix over GF(2). Addition is XOR, multiplication AND.
class BitMatrix {
  public:
    BitMatrix(std::size_t rows, std::size_t cols);
    static BitMatrix identity(std::size_t n);
    static BitMatrix from_rows(std::initializer_list<std::initializer_list<int>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Bit operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, Bit value);

    friend bool operator==(const BitMatrix &, const BitMatrix &) = default;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Bit> data_;
};

BitMatrix matmul(const BitMatrix &a, const BitMatrix &b);
BitVector matvec(const BitMatrix &a, const BitVector &x);

/// a^t for square a; t == 0 yields the identity.
BitMatrix matpow(const BitMatrix &a, std::size_t t);

/// Entrywise XOR; shapes must match.
BitMatrix add(const BitMatrix &a, const BitMatrix &b);

BitMatrix hstack(const BitMatrix &left, const BitMatrix &right);
BitMatrix vstack(const BitMatrix &top, const BitMatrix &bottom);

/// Rank over GF(2) by Gaussian elimination.
std::size_t rank(const BitMatrix &a);

/// Determinant over GF(2) for square matrices: 1 iff full rank.
int determinant(const BitMatrix &a);

/// Some x with a·x = b if the system is consistent, otherwise nullopt.
/// When the solution is not unique, free variables are fixed to 0, so the
/// result is deterministic.
std::optional<BitVector> solve(const BitMatrix &a, const BitVector &b);

} // namespace ssc
