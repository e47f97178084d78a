#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "widthlab/numeric.hpp"

namespace widthlab {

/// Dense 0/1 matrix, row-major bit rows.
class BooleanBlock {
 public:
  BooleanBlock() = default;
  BooleanBlock(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }
  bool get(std::size_t i, std::size_t j) const {
    return (bits_[i * words_ + j / 64] >> (j % 64)) & 1U;
  }
  void set(std::size_t i, std::size_t j, bool value = true);
  bool is_zero() const;
  bool is_symmetric() const;
  std::size_t count_ones() const;

  /// First / last nonzero column of row i (0-based), nullopt for a zero row.
  std::optional<std::size_t> first_in_row(std::size_t i) const;
  std::optional<std::size_t> last_in_row(std::size_t i) const;

  /// Provenance for blocks of M^(t,n): weights of the row and column slices
  /// (-1 for the full matrix).
  int t = 0;
  int n = 0;
  int row_weight = -1;
  int col_weight = -1;

  friend bool operator==(const BooleanBlock& a, const BooleanBlock& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.bits_ == b.bits_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Positive integer or the bottom element -infinity.
class RadiusValue {
 public:
  RadiusValue() = default;  // -infinity
  explicit RadiusValue(BigInt v) : value_(std::move(v)) {}
  static RadiusValue neg_infinity() { return {}; }

  bool is_neg_infinity() const { return !value_.has_value(); }
  /// Throws UndefinedValueError for -infinity.
  const BigInt& value() const;
  std::string to_string() const;

  RadiusValue operator+(const BigInt& offset) const;
  friend bool operator==(const RadiusValue&, const RadiusValue&) = default;
  friend std::strong_ordering operator<=>(const RadiusValue& a, const RadiusValue& b);

 private:
  std::optional<BigInt> value_;
};

RadiusValue max(const RadiusValue& a, const RadiusValue& b);

constexpr int kFullMatrixCap = 14;
constexpr int kBlockDimensionCap = 20;
constexpr std::size_t kBlockBitCap = std::size_t{1} << 30;

/// max |i - j| over nonzero entries. Throws UndefinedValueError for a zero
/// or empty matrix, PreconditionError if not square.
std::size_t matrix_bandwidth(const BooleanBlock& m);

/// max (s - i + j) over nonzero entries (1-based, s rows).
RadiusValue manhattan_radius(const BooleanBlock& m);

/// M^(t,n)_{k,k'} under slice orders; empty when k or k' is outside 0..n.
BooleanBlock assemble_block(int t, int n, int k, int k2);

/// Adjacency matrix of H(t,2,n) under the Hales order.
BooleanBlock assemble_full(int t, int n, int cap = kFullMatrixCap);

/// Valid tuple check for the closed form: t >= 2s, n >= 1, t >= 1, k + t - 2s <= n.
bool radius_tuple_valid(int t, int n, int k, int s);

/// Values of every closed-form branch that applies to the tuple (one value
/// for t >= n-1, two at an overlap point).
std::vector<BigInt> radius_closed_branches(int t, int n, int k, int s);

/// Closed form value as printed, with no degenerate-block correction.
BigInt radius_closed_formula(int t, int n, int k, int s);

/// Closed form for r(M^(t,n)_{k,k+t-2s}). The 1x1 diagonal blocks (k = 0 or
/// k = n with t = 2s) are zero matrices and return -infinity.
RadiusValue radius_closed(int t, int n, int k, int s);

/// Memo for radius_recursive; safe to share across threads.
class RadiusMemo {
 public:
  std::optional<RadiusValue> find(int t, int n, int k, int p) const;
  void store(int t, int n, int k, int p, const RadiusValue& v);
  std::size_t size() const;

 private:
  mutable std::mutex mutex_;
  std::map<std::tuple<int, int, int, int>, RadiusValue> table_;
};

/// r(M^(t,n)_{k,k+p}) by the four-way block split. Uses a process-wide
/// memo unless one is supplied.
RadiusValue radius_recursive(int t, int n, int k, int p, RadiusMemo* memo = nullptr);

BigInt bw_closed(int t, int n);

/// Diagonal-distance quantity of block M_{k,k+p}: for p >= 1 the column
/// offset sum_{q=1}^{p-1} C(n,k+q) plus r(M_{k,k+p}); for p = 0, bw(M_kk).
RadiusValue rtilde(int t, int n, int k, int p, RadiusMemo* memo = nullptr);

BigInt bw_recursion(int t, int n, RadiusMemo* memo = nullptr);

/// radius_closed(2,n,k,1) - C(n,k).
BigInt johnson_slice_bandwidth(int n, int k);

struct HarperBound {
  Rational value;  // rounded down
  int r = 0;       // minimizing r
  double x = 0.0;  // root of the ball equation for that r
};

HarperBound harper_lower_bound(int t, int q, int n, const BigInt& m);

}  // namespace widthlab
