#include "widthlab/widthcalc.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "widthlab/error.hpp"
#include "widthlab/hales.hpp"

namespace widthlab {

// ---- BooleanBlock ----

BooleanBlock::BooleanBlock(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64), bits_(rows * ((cols + 63) / 64), 0) {}

void BooleanBlock::set(std::size_t i, std::size_t j, bool value) {
  auto& w = bits_[i * words_ + j / 64];
  const std::uint64_t b = std::uint64_t{1} << (j % 64);
  w = value ? (w | b) : (w & ~b);
}

bool BooleanBlock::is_zero() const {
  return std::all_of(bits_.begin(), bits_.end(), [](std::uint64_t w) { return w == 0; });
}

bool BooleanBlock::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if (get(i, j) != get(j, i)) return false;
  return true;
}

std::size_t BooleanBlock::count_ones() const {
  std::size_t c = 0;
  for (auto w : bits_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::optional<std::size_t> BooleanBlock::first_in_row(std::size_t i) const {
  for (std::size_t w = 0; w < words_; ++w)
    if (auto x = bits_[i * words_ + w]) return w * 64 + static_cast<std::size_t>(std::countr_zero(x));
  return std::nullopt;
}

std::optional<std::size_t> BooleanBlock::last_in_row(std::size_t i) const {
  for (std::size_t w = words_; w-- > 0;)
    if (auto x = bits_[i * words_ + w]) return w * 64 + 63 - static_cast<std::size_t>(std::countl_zero(x));
  return std::nullopt;
}

// ---- RadiusValue ----

const BigInt& RadiusValue::value() const {
  if (!value_) throw UndefinedValueError("radius is -infinity");
  return *value_;
}

std::string RadiusValue::to_string() const { return value_ ? widthlab::to_string(*value_) : "-inf"; }

RadiusValue RadiusValue::operator+(const BigInt& offset) const {
  if (!value_) return {};
  return RadiusValue(*value_ + offset);
}

std::strong_ordering operator<=>(const RadiusValue& a, const RadiusValue& b) {
  if (a.is_neg_infinity() || b.is_neg_infinity())
    return static_cast<int>(!a.is_neg_infinity()) <=> static_cast<int>(!b.is_neg_infinity());
  if (a.value() < b.value()) return std::strong_ordering::less;
  if (a.value() > b.value()) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

RadiusValue max(const RadiusValue& a, const RadiusValue& b) { return a < b ? b : a; }

// ---- direct matrix quantities ----

std::size_t matrix_bandwidth(const BooleanBlock& m) {
  if (m.rows() != m.cols()) throw PreconditionError("matrix_bandwidth needs a square matrix");
  std::optional<std::size_t> bw;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    auto first = m.first_in_row(i);
    if (!first) continue;
    auto last = *m.last_in_row(i);
    const std::size_t d = std::max(i > *first ? i - *first : *first - i, last > i ? last - i : i - last);
    bw = std::max(bw.value_or(0), d);
  }
  if (!bw) throw UndefinedValueError("bandwidth of a zero or empty matrix is undefined");
  return *bw;
}

RadiusValue manhattan_radius(const BooleanBlock& m) {
  std::optional<std::size_t> best;
  const std::size_t s = m.rows();
  for (std::size_t i = 0; i < s; ++i) {
    auto last = m.last_in_row(i);
    if (!last) continue;
    // 1-based: s - (i+1) + (last+1)
    best = std::max(best.value_or(0), s - i + *last);
  }
  if (!best) return RadiusValue::neg_infinity();
  return RadiusValue(BigInt(*best));
}

BooleanBlock assemble_block(int t, int n, int k, int k2) {
  if (n < 1) throw ParameterError("assemble_block requires n >= 1");
  if (n > kBlockDimensionCap) throw SizeError("assemble_block dimension above " + std::to_string(kBlockDimensionCap));
  auto slice = [&](int w) { return (w < 0 || w > n) ? std::vector<std::uint64_t>{} : slice_order(n, w).rows; };
  const BigInt rows_count = (k < 0 || k > n) ? BigInt(0) : binom_ext(n, k);
  const BigInt cols_count = (k2 < 0 || k2 > n) ? BigInt(0) : binom_ext(n, k2);
  if (rows_count * cols_count > kBlockBitCap) throw SizeError("assemble_block exceeds bit cap");
  const auto rows = slice(k);
  const auto cols = slice(k2);
  BooleanBlock b(rows.size(), cols.size());
  b.t = t;
  b.n = n;
  b.row_weight = k;
  b.col_weight = k2;
  if (std::abs(k - k2) > t) return b;
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) {
      const int d = std::popcount(rows[i] ^ cols[j]);
      if (d >= 1 && d <= t) b.set(i, j);
    }
  return b;
}

BooleanBlock assemble_full(int t, int n, int cap) {
  if (n < 1 || t < 1) throw ParameterError("assemble_full requires t >= 1 and n >= 1");
  if (n > cap || n > kMaxHalesDimension) throw SizeError("assemble_full: n = " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  const auto seq = hales_sequence(n);
  BooleanBlock b(seq.size(), seq.size());
  b.t = t;
  b.n = n;
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = 0; j < seq.size(); ++j) {
      const int d = std::popcount(seq[i] ^ seq[j]);
      if (d >= 1 && d <= t) b.set(i, j);
    }
  return b;
}

// ---- closed form ----

namespace {

BigInt C(std::int64_t x, std::int64_t y) { return binom_ext(x, y); }

BigInt g_term(std::int64_t a, std::int64_t u) { return C(u + 2 * a, u + a - 1) - C(u + 2 * a, a - 1); }

}  // namespace

bool radius_tuple_valid(int t, int n, int k, int s) {
  return n >= 1 && t >= 1 && s >= 0 && k >= 0 && t >= 2 * s && k + t - 2 * s <= n;
}

std::vector<BigInt> radius_closed_branches(int t, int n, int k, int s) {
  if (!radius_tuple_valid(t, n, k, s))
    throw ParameterError("invalid radius tuple (t,n,k,s) = (" + std::to_string(t) + "," + std::to_string(n) +
                         "," + std::to_string(k) + "," + std::to_string(s) + ")");
  const std::int64_t p = t - 2 * s;
  if (t >= n - 1) return {C(n, k) + C(n, k + p) - 1};

  BigInt a1 = 0, a2 = 0, b = 0, c = 0, d = 0;
  for (std::int64_t a = 0; a <= k - s - 1; ++a) a1 += g_term(a, t - s);
  for (std::int64_t m = t - 3 * s + 1 + 2 * k; m <= n - s; ++m) a2 += C(m - 1, k + p - 1) - C(m - 1, k - s - 1);
  for (std::int64_t a = 0; a <= n - t - k + s - 1; ++a) b += g_term(a, t - s);
  for (std::int64_t m = n - s + 1; m <= n; ++m) c += C(m - 1, k + p - 1);
  for (std::int64_t m = k + p + 1; m <= n; ++m) d += C(m - 1, k + p - 1);

  const int h = (n - t) / 2;
  const int diff = k - s;
  std::vector<BigInt> values;
  if (0 <= diff && diff <= h) values.push_back(C(n, k) + a1 + a2 + c);
  if (h <= diff && diff <= n - t) values.push_back(C(n, k) + b + c);
  if (diff <= 0 || diff >= n - t) values.push_back(C(n, k) + d);
  return values;
}

BigInt radius_closed_formula(int t, int n, int k, int s) {
  const auto values = radius_closed_branches(t, n, k, s);
  for (const auto& v : values)
    if (v != values.front()) throw Error("radius closed form: branch values disagree at an overlap point");
  return values.front();
}

RadiusValue radius_closed(int t, int n, int k, int s) {
  BigInt v = radius_closed_formula(t, n, k, s);
  if (t == 2 * s && (k == 0 || k == n)) return RadiusValue::neg_infinity();
  return RadiusValue(std::move(v));
}

// ---- recursion ----

std::optional<RadiusValue> RadiusMemo::find(int t, int n, int k, int p) const {
  std::lock_guard lock(mutex_);
  auto it = table_.find({t, n, k, p});
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

void RadiusMemo::store(int t, int n, int k, int p, const RadiusValue& v) {
  std::lock_guard lock(mutex_);
  table_.emplace(std::tuple{t, n, k, p}, v);
}

std::size_t RadiusMemo::size() const {
  std::lock_guard lock(mutex_);
  return table_.size();
}

namespace {

RadiusMemo& shared_memo() {
  static RadiusMemo memo;
  return memo;
}

}  // namespace

RadiusValue radius_recursive(int t, int n, int k, int p, RadiusMemo* memo) {
  if (n < 1) throw ParameterError("radius_recursive requires n >= 1");
  if (!memo) memo = &shared_memo();
  if (k < 0 || k > n || k + p < 0 || k + p > n || t <= 0) return RadiusValue::neg_infinity();
  t = std::min(t, n);
  if (std::abs(p) > t) return RadiusValue::neg_infinity();
  if (n == 1) return manhattan_radius(assemble_block(t, 1, k, k + p));
  if (auto hit = memo->find(t, n, k, p)) return *hit;

  const RadiusValue r1 = radius_recursive(t, n - 1, k - 1, p, memo) + C(n - 1, k);
  const RadiusValue r2 = radius_recursive(t - 1, n - 1, k - 1, p + 1, memo) + (C(n - 1, k) + C(n - 1, k + p - 1));
  const RadiusValue r3 = radius_recursive(t - 1, n - 1, k, p - 1, memo);
  const RadiusValue r4 = radius_recursive(t, n - 1, k, p, memo) + C(n - 1, k + p - 1);
  const RadiusValue r = max(max(r1, r2), max(r3, r4));
  memo->store(t, n, k, p, r);
  return r;
}

BigInt bw_closed(int t, int n) {
  if (t < 1 || n < 1) throw ParameterError("bw_closed requires t >= 1 and n >= 1");
  if (t >= n) return (BigInt(1) << n) - 1;
  const int h = (n - t) / 2;
  BigInt total = 0;
  for (int k = h; k <= h + t - 1; ++k) total += C(n, k);
  for (int a = 0; a <= (n - t - 1) / 2; ++a) total += g_term(a, t);
  return total;
}

RadiusValue rtilde(int t, int n, int k, int p, RadiusMemo* memo) {
  const RadiusValue r = radius_recursive(t, n, k, p, memo);
  if (r.is_neg_infinity()) return r;
  if (p == 0) return RadiusValue(r.value() - C(n, k));
  BigInt offset = 0;
  for (int q = 1; q <= p - 1; ++q) offset += C(n, k + q);
  return r + offset;
}

BigInt bw_recursion(int t, int n, RadiusMemo* memo) {
  if (t < 1 || n < 1) throw ParameterError("bw_recursion requires t >= 1 and n >= 1");
  RadiusValue best;
  for (int k = 0; k <= n; ++k)
    for (int p = 0; p <= t && k + p <= n; ++p) best = max(best, rtilde(t, n, k, p, memo));
  return best.value();
}

BigInt johnson_slice_bandwidth(int n, int k) {
  if (!(n > k && k >= 1)) throw ParameterError("johnson_slice_bandwidth requires n > k >= 1");
  return radius_closed(2, n, k, 1).value() - C(n, k);
}

// ---- Harper ----

HarperBound harper_lower_bound(int t, int q, int n, const BigInt& m) {
  if (t < 1 || q < 2 || n < 1) throw ParameterError("harper_lower_bound requires t >= 1, q >= 2, n >= 1");
  const BigInt total = pow(BigInt(q), static_cast<unsigned>(n));
  if (m < 1 || m > total) throw ParameterError("harper_lower_bound requires 1 <= m <= q^n");

  using real = long double;
  std::vector<real> binom(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) binom[i] = C(n, i).convert_to<real>();
  const real big_q = total.convert_to<real>();
  const real target = m.convert_to<real>() / big_q;

  auto ball = [&](int r, real x) {
    real s = 0;
    for (int i = 0; i <= r; ++i) s += binom[i] * std::pow(x, n - i) * std::pow(1 - x, i);
    return s;
  };

  std::optional<HarperBound> best;
  std::optional<real> best_raw;
  for (int r = 0; r <= n; ++r) {
    real x = 1;
    real raw = 0;
    if (r == n || m == total) {
      if (!(r == n && m == total)) continue;
    } else {
      real lo = 0, hi = 1;
      for (int it = 0; it < 200 && hi - lo > 1e-15L * std::max<real>(hi, 1e-300L); ++it) {
        const real mid = (lo + hi) / 2;
        (ball(r, mid) < target ? lo : hi) = mid;
      }
      x = (lo + hi) / 2;
      for (int i = 1; i <= t && r + i <= n; ++i)
        raw += binom[r + i] * std::pow(x, n - r - i) * std::pow(1 - x, r + i);
      raw *= big_q;
    }
    if (!best_raw || raw < *best_raw) {
      best_raw = raw;
      best = HarperBound{Rational(0), r, static_cast<double>(x)};
    }
  }
  if (!best) throw InfeasibleError("harper_lower_bound: no feasible (x, r)");

  // Conservative rounding down onto a 1e-6 grid.
  const real shaved = *best_raw * (1 - 1e-9L) - 1e-9L;
  const real grid = std::floor(shaved * 1e6L);
  const BigInt numerator = grid > 0 ? BigInt(grid) : BigInt(0);
  best->value = Rational(numerator, BigInt(1000000));
  return *best;
}

}  // namespace widthlab
