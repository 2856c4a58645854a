#pragma once

// Minimal projective resolutions of rank 1 modules: covers, syzygy rims, the
// presentation matrix D, and periods.

#include <algorithm>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "gext/error.hpp"
#include "gext/rim.hpp"

namespace gext {

struct ProjectiveCover {
  std::vector<int> summands;  // peak labels u, the cover is the sum of P_u
  int rank() const { return static_cast<int>(summands.size()); }
};

inline ProjectiveCover projective_cover(const Rim& rim) { return ProjectiveCover{peaks(rim)}; }

/// Peaks u_1 < ... < u_p, each paired with the valley v_i immediately
/// before it. This pairing fixes the row/column order of D and D*.
struct PeakValleyOrder {
  std::vector<int> peaks;
  std::vector<int> valleys;
};

inline PeakValleyOrder peak_valley_order(const Rim& rim) {
  PeakValleyOrder o;
  o.peaks = peaks(rim);
  const auto vs = valleys(rim);
  for (int u : o.peaks) {
    // the valley preceding u is the closest one walking backwards
    int best = vs.front();
    for (int v : vs)
      if (forward_distance(v, u, rim.n()) < forward_distance(best, u, rim.n())) best = v;
    o.valleys.push_back(best);
  }
  return o;
}

enum class ArrowKind { X, Y };

struct DEntry {
  std::size_t row;
  std::size_t col;
  ArrowKind kind;
  int sign;
  int exponent;  // cyclic path length
};

/// Presentation matrix of the projective cover: rows are valleys, columns
/// peaks. Entry (v,u) is x^{v-u} when u immediately precedes v and -y^{u-v}
/// when u immediately follows v. A single-peak rim gives a degenerate 1x1
/// matrix whose only cell holds both terms.
struct PresentationMatrixD {
  std::vector<int> row_valleys;
  std::vector<int> col_peaks;
  std::vector<DEntry> entries;
  bool degenerate = false;

  std::size_t size() const { return col_peaks.size(); }
};

inline PresentationMatrixD build_D(const Rim& rim) {
  const int n = rim.n();
  const auto order = peak_valley_order(rim);
  const std::size_t p = order.peaks.size();
  PresentationMatrixD d;
  d.row_valleys = order.valleys;
  d.col_peaks = order.peaks;
  d.degenerate = p == 1;
  for (std::size_t i = 0; i < p; ++i) {
    const int u = order.peaks[i];
    d.entries.push_back({i, i, ArrowKind::Y, -1, forward_distance(order.valleys[i], u, n)});
    const std::size_t next = (i + 1) % p;
    d.entries.push_back({next, i, ArrowKind::X, 1, forward_distance(u, order.valleys[next], n)});
  }
  return d;
}

/// Rim of the 2*steps-th syzygy: the rim shifted by steps*k.
inline Rim syzygy_rim_even(const Rim& rim, long long steps) {
  if (is_projective(rim)) throw Error(ErrorCode::ProjectiveModule, "interval rim " + rim.to_string() + " is projective");
  return shift(rim, steps * rim.k());
}

/// Rim of Omega^steps for a rim with exactly two peaks (every syzygy has rank 1).
inline Rim syzygy_rim_two_peak(const Rim& rim, long long steps) {
  const auto dec = decompose(rim);
  if (dec.peak_count() != 2)
    throw Error(ErrorCode::NotTwoPeak, rim.to_string() + " has " + std::to_string(dec.peak_count()) + " peaks");
  const int n = rim.n();
  const long long k = rim.k();
  const long long t = steps / 2;
  if (steps % 2 == 0) return shift(rim, t * k);

  // Formula for A_1 = {1..d_1}; rotate the result back afterwards.
  const int d1 = dec.segments[0].length;
  const int d2 = dec.segments[1].length;
  const int l2 = dec.gaps[1];
  const long long offset = dec.segments[0].start - 1;
  std::vector<int> e;
  for (int i = 1; i <= d1; ++i) e.push_back(wrap_label(i - l2 + t * k + offset, n));
  for (int i = d1 + 1; i <= d1 + d2; ++i) e.push_back(wrap_label(i + t * k + offset, n));
  return Rim(n, rim.k(), std::move(e));
}

class PeriodResult {
 public:
  static PeriodResult projective() { return PeriodResult(std::nullopt); }
  static PeriodResult finite(int m) { return PeriodResult(m); }

  bool is_projective() const { return !period_; }
  int value() const {
    if (!period_) throw Error(ErrorCode::ProjectiveModule, "projective modules have no period");
    return *period_;
  }

  std::string to_string() const { return period_ ? std::to_string(*period_) : "projective"; }

  friend bool operator==(const PeriodResult&, const PeriodResult&) = default;

 private:
  explicit PeriodResult(std::optional<int> p) : period_(p) {}
  std::optional<int> period_;
};

namespace detail {

constexpr int kNoSolution = std::numeric_limits<int>::max();

// Smallest t >= 1 with offset + t*k = 0 (mod n); kNoSolution if none.
inline int min_t_solving(long long offset, int k, int n) {
  for (int t = 1; t <= n; ++t)
    if ((offset + static_cast<long long>(t) * k) % n == 0) return t;
  return kNoSolution;
}

inline int odd_candidate(int t) { return t == kNoSolution ? kNoSolution : 2 * t + 1; }
inline int even_candidate(int t) { return t == kNoSolution ? kNoSolution : 2 * t; }

}  // namespace detail

/// Period read off from the segment data alone.
inline PeriodResult period_closed_form(const Rim& rim) {
  const auto dec = decompose(rim);
  const int n = rim.n();
  const int k = rim.k();
  const int p = dec.peak_count();
  if (p == 1) return PeriodResult::projective();

  const int upper = 2 * n / std::gcd(n, k);

  if (p == 2) {
    const int d1 = dec.segments[0].length, d2 = dec.segments[1].length;
    const int l1 = dec.gaps[0], l2 = dec.gaps[1];
    using detail::even_candidate;
    using detail::min_t_solving;
    using detail::odd_candidate;
    int m = upper;
    if (d1 == d2) m = std::min(m, odd_candidate(min_t_solving(d1, k, n)));
    if (l1 == l2) m = std::min(m, odd_candidate(min_t_solving(-l2, k, n)));
    if (d1 == d2 && l1 == l2) m = std::min(m, even_candidate(min_t_solving(d1 + l1, k, n)));
    return PeriodResult::finite(m);
  }

  const auto d = dec.downs();
  const auto& l = dec.gaps;
  int best = detail::kNoSolution;
  long long offset = 0;  // sum of (d_i + l_i) for i < c
  for (int c = 0; c < p; ++c) {
    bool aligned = true;
    for (int i = 0; i < p && aligned; ++i)
      aligned = d[(c + i) % p] == d[i] && l[(c + i) % p] == l[i];
    if (aligned) best = std::min(best, detail::min_t_solving(-offset, k, n));
    offset += d[c] + l[c];
  }
  return PeriodResult::finite(2 * best);
}

/// Period found by cycling the syzygy rims until the input rim recurs.
inline PeriodResult period_iterative(const Rim& rim) {
  const int p = peak_count(rim);
  if (p == 1) return PeriodResult::projective();
  const int bound = 2 * rim.n();
  if (p == 2) {
    for (int m = 1; m <= bound; ++m)
      if (syzygy_rim_two_peak(rim, m) == rim) return PeriodResult::finite(m);
  } else {
    for (int t = 1; t <= bound; ++t)
      if (shift(rim, static_cast<long long>(t) * rim.k()) == rim) return PeriodResult::finite(2 * t);
  }
  throw Error(ErrorCode::KernelRelationFailed, "no period found within 2n steps for " + rim.to_string());
}

}  // namespace gext
