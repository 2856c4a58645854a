#pragma once

// Ext^i(L_I, L_J) over the centre F[t] for all i >= 1.
//
// Odd degrees reduce to Ext^1 of an even syzygy and are read off the
// invariant factors of D*. Even degrees are cyclic, F[t]/(t^a), with a the
// smallest offset a_uv between a peak of the second syzygy and a valley.

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "gext/error.hpp"
#include "gext/resolution.hpp"
#include "gext/rim.hpp"
#include "gext/snf.hpp"
#include "gext/trapezia.hpp"

namespace gext {

inline constexpr int kDefaultMaxDegree = 1000;
inline constexpr int kDefaultTableCap = 12;

enum class ExtShape { Zero, OddLike, EvenCyclic };

constexpr std::string_view to_string(ExtShape s) {
  switch (s) {
    case ExtShape::Zero: return "zero";
    case ExtShape::OddLike: return "odd_like";
    case ExtShape::EvenCyclic: return "even_cyclic";
  }
  return "zero";
}

struct ExtDecomposition {
  int degree = 1;
  ExtShape shape = ExtShape::Zero;
  std::vector<int> exponents;  // odd degrees: h_1 <= ... <= h_{s-1}
  int a = 0;                   // even degrees: F[t]/(t^a)
  int dimension = 0;
  Rim context;                 // rim of the even syzygy actually used

  /// Exponents of the cyclic summands F[t]/(t^h), h > 0, ascending. Equal
  /// multisets mean isomorphic F[t]-modules regardless of degree parity.
  std::vector<int> factors() const {
    if (shape == ExtShape::EvenCyclic) return a > 0 ? std::vector<int>{a} : std::vector<int>{};
    return exponents;
  }
  bool is_zero() const { return dimension == 0; }
};

namespace detail {

inline void check_degree(int degree, int max_degree) {
  if (degree < 1 || degree > max_degree)
    throw Error(ErrorCode::DegreeOutOfRange,
                "degree " + std::to_string(degree) + " outside 1.." + std::to_string(max_degree));
}

inline ExtDecomposition odd_result(int degree, const Rim& context, std::vector<int> exponents) {
  ExtDecomposition e{degree, ExtShape::Zero, std::move(exponents), 0, 0, context};
  e.dimension = std::accumulate(e.exponents.begin(), e.exponents.end(), 0);
  if (!e.exponents.empty()) e.shape = ExtShape::OddLike;
  return e;
}

}  // namespace detail

inline ExtDecomposition ext1(const Rim& i, const Rim& j) {
  require_same_parameters(i, j);
  // L_I is rigid; interval rims are projective.
  if (i == j || is_projective(i)) return detail::odd_result(1, i, {});
  return detail::odd_result(1, i, invariant_factors(build_Dstar(i, j)).exponents);
}

inline ExtDecomposition ext_odd(const Rim& i, const Rim& j, int degree, int max_degree = kDefaultMaxDegree) {
  require_same_parameters(i, j);
  if (degree % 2 == 0) throw Error(ErrorCode::EvenDegree, "degree " + std::to_string(degree) + " is even");
  detail::check_degree(degree, max_degree);
  const Rim shifted = shift(i, static_cast<long long>((degree - 1) / 2) * i.k());
  auto e = ext1(shifted, j);
  e.degree = degree;
  return e;
}

/// One a_uv: offset of the peak u+k of the second syzygy, placed inside P_v,
/// from the rim of J.
struct EvenOffset {
  int peak;
  int valley;
  bool peak_left_of_valley;  // (u, v] has at most k edges
  int value;
};

/// All a_uv for the rim `i` (already the relevant even syzygy) against `j`.
inline std::vector<EvenOffset> even_offset_table(const Rim& i, const Rim& j) {
  require_same_parameters(i, j);
  const int n = i.n(), k = i.k();
  std::vector<EvenOffset> out;
  for (int u : peaks(i)) {
    for (int v : valleys(i)) {
      EvenOffset e{u, v, forward_distance(u, v, n) <= k, 0};
      if (e.peak_left_of_valley) {
        e.value = i.count_not_in(u, v) + j.count_not_in(v, u + k);
      } else {
        e.value = j.count_in(u + k, v) + i.count_in(v, u);
      }
      out.push_back(e);
    }
  }
  return out;
}

inline ExtDecomposition ext_even(const Rim& i, const Rim& j, int degree, int max_degree = kDefaultMaxDegree) {
  require_same_parameters(i, j);
  if (degree % 2 != 0) throw Error(ErrorCode::OddDegree, "degree " + std::to_string(degree) + " is odd");
  detail::check_degree(degree, max_degree);
  const Rim shifted = shift(i, static_cast<long long>(degree / 2 - 1) * i.k());
  ExtDecomposition e{degree, ExtShape::Zero, {}, 0, 0, shifted};
  if (is_projective(shifted)) return e;
  const auto table = even_offset_table(shifted, j);
  e.a = std::min_element(table.begin(), table.end(), [](const auto& x, const auto& y) { return x.value < y.value; })->value;
  e.dimension = e.a;
  if (e.a > 0) e.shape = ExtShape::EvenCyclic;
  return e;
}

inline ExtDecomposition ext(const Rim& i, const Rim& j, int degree, int max_degree = kDefaultMaxDegree) {
  detail::check_degree(degree, max_degree);
  if (degree == 1) return ext1(i, j);
  return degree % 2 ? ext_odd(i, j, degree, max_degree) : ext_even(i, j, degree, max_degree);
}

struct Ext2Witness {
  bool vanishes = false;
  int valley = 0;     // witnessing valley v_i
  int condition = 0;  // 1: J misses (u_i - (n-k), v_i];  2: J fills (v_i, u_{i-1} + k]
};

/// Combinatorial test for Ext^2(L_I, L_J) = 0 looking only at each valley and
/// its two neighbouring peaks.
inline Ext2Witness ext2_vanishes(const Rim& i, const Rim& j) {
  require_same_parameters(i, j);
  if (is_projective(i)) throw Error(ErrorCode::ProjectiveModule, i.to_string() + " is projective");
  const int n = i.n(), k = i.k();
  const auto us = peaks(i);
  for (int v : valleys(i)) {
    int after = us.front(), before = us.front();
    for (int u : us) {
      if (forward_distance(v, u, n) < forward_distance(v, after, n)) after = u;
      if (forward_distance(u, v, n) < forward_distance(before, v, n)) before = u;
    }
    if (j.count_in(after + k, v) == 0) return {true, v, 1};
    if (j.count_in(v, before + k) == k - forward_distance(before, v, n)) return {true, v, 2};
  }
  return {};
}

struct DimensionTable {
  int n = 0;
  int k = 0;
  std::vector<Rim> rims;                // lexicographic order
  std::vector<std::vector<int>> dims;   // dims[a][b] = dim Ext^1(L_{rims[a]}, L_{rims[b]})
};

inline DimensionTable ext1_dimension_table(int n, int k, int cap = kDefaultTableCap) {
  if (n > cap) throw Error(ErrorCode::TooLarge, "n=" + std::to_string(n) + " exceeds the enumeration cap " + std::to_string(cap));
  DimensionTable t;
  t.n = n;
  t.k = k;
  t.rims = all_rims(n, k);
  if (t.rims.empty()) throw Error(ErrorCode::InvalidRim, "need 1 <= k <= n-1");
  const std::size_t m = t.rims.size();
  t.dims.assign(m, std::vector<int>(m, 0));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) t.dims[a][b] = ext1(t.rims[a], t.rims[b]).dimension;
  return t;
}

}  // namespace gext
