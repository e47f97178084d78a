#include "widthlab/hales.hpp"

#include <algorithm>
#include <bit>

#include "widthlab/error.hpp"
#include "widthlab/numeric.hpp"
#include "widthlab/oracles.hpp"

namespace widthlab {

Ordering Ordering::from_sequence(std::vector<Vertex> sequence) {
  Ordering o;
  o.rank_.assign(sequence.size(), 0);
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    const Vertex v = sequence[i];
    if (v >= sequence.size() || o.rank_[v] != 0)
      throw PreconditionError("ordering is not a permutation of the vertex set");
    o.rank_[v] = i + 1;
  }
  o.sequence_ = std::move(sequence);
  return o;
}

Ordering Ordering::identity(std::size_t size) {
  std::vector<Vertex> seq(size);
  for (std::size_t i = 0; i < size; ++i) seq[i] = static_cast<Vertex>(i);
  return from_sequence(std::move(seq));
}

Ordering Ordering::reversed() const {
  return from_sequence(std::vector<Vertex>(sequence_.rbegin(), sequence_.rend()));
}

SliceOrder slice_order(int n, int k) {
  if (n < 1) throw ParameterError("slice_order requires n >= 1");
  if (k < 0 || k > n) throw ParameterError("slice_order requires 0 <= k <= n");
  if (n > kMaxSliceDimension) throw SizeError("slice_order dimension above " + std::to_string(kMaxSliceDimension));
  if (binom_ext(n, k) > kMaxSliceRows) throw SizeError("slice_order row count exceeds cap");

  // level[j - lo] holds A_j^{(m)} for lo <= j <= hi.
  auto range = [&](int m) { return std::pair{std::max(0, k - (n - m)), std::min(k, m)}; };
  std::vector<std::vector<std::uint64_t>> level;
  {
    auto [lo, hi] = range(1);
    for (int j = lo; j <= hi; ++j) level.push_back({j == 1 ? std::uint64_t{1} : std::uint64_t{0}});
  }
  for (int m = 2; m <= n; ++m) {
    auto [plo, phi_] = range(m - 1);
    auto [lo, hi] = range(m);
    const std::uint64_t top = std::uint64_t{1} << (m - 1);
    std::vector<std::vector<std::uint64_t>> next;
    for (int j = lo; j <= hi; ++j) {
      std::vector<std::uint64_t> rows;
      if (j == m) {
        rows.push_back((std::uint64_t{1} << m) - 1);
      } else if (j == 0) {
        rows.push_back(0);
      } else {
        if (j - 1 >= plo && j - 1 <= phi_)
          for (auto r : level[j - 1 - plo]) rows.push_back(r | top);
        if (j >= plo && j <= phi_) rows.insert(rows.end(), level[j - plo].begin(), level[j - plo].end());
      }
      next.push_back(std::move(rows));
    }
    level = std::move(next);
  }
  return SliceOrder{n, k, std::move(level.front())};
}

std::vector<std::uint64_t> hales_sequence(int n) {
  if (n < 1) throw ParameterError("hales order requires n >= 1");
  if (n > kMaxHalesDimension) throw SizeError("hales order dimension above " + std::to_string(kMaxHalesDimension));
  std::vector<std::uint64_t> out;
  out.reserve(std::size_t{1} << n);
  for (int k = 0; k <= n; ++k) {
    auto s = slice_order(n, k);
    out.insert(out.end(), s.rows.begin(), s.rows.end());
  }
  return out;
}

Ordering hales_order(int n) {
  auto seq = hales_sequence(n);
  return Ordering::from_sequence(std::vector<Vertex>(seq.begin(), seq.end()));
}

std::size_t HalesReport::max_prefix_boundary() const {
  return prefix_boundary.empty() ? 0 : *std::max_element(prefix_boundary.begin(), prefix_boundary.end());
}

HalesReport verify_hales_property(const Graph& g, const Ordering& ordering, std::size_t limit) {
  const std::size_t n = g.vertex_count();
  if (n > limit || n > 63)
    throw SizeError("verify_hales_property: " + std::to_string(n) + " vertices exceeds limit " +
                    std::to_string(limit));
  if (ordering.size() != n) throw PreconditionError("ordering size does not match graph");

  HalesReport report;
  const auto nb = g.neighbor_masks();
  const auto profile = b_v_profile(g, limit);
  std::uint64_t prefix = 0;
  for (std::size_t l = 1; l <= n; ++l) {
    prefix |= std::uint64_t{1} << ordering.at_rank(l);
    const std::size_t boundary = phi_mask(nb, prefix);
    report.prefix_boundary.push_back(boundary);
    report.optimal_boundary.push_back(profile[l]);

    std::uint64_t interior = 0;
    for (std::uint64_t rem = prefix; rem; rem &= rem - 1) {
      const auto v = static_cast<unsigned>(std::countr_zero(rem));
      if ((nb[v] & ~prefix) == 0) interior |= std::uint64_t{1} << v;
    }
    std::uint64_t lowest = 0;
    const auto interior_size = static_cast<std::size_t>(std::popcount(interior));
    for (std::size_t r = 1; r <= interior_size; ++r) lowest |= std::uint64_t{1} << ordering.at_rank(r);

    int failed = 0;
    if (boundary != profile[l]) failed = 1;
    else if (interior != lowest) failed = 2;
    if (failed && report.ok) {
      report.ok = false;
      report.first_violation = l;
      report.failed_condition = failed;
    }
  }
  return report;
}

}  // namespace widthlab
