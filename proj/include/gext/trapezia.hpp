#pragma once

// Geometry of two rims drawn one above the other: the LR trapezium word,
// its reduction to (LR)^s boxes, the matrix D* and canonical offsets.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gext/error.hpp"
#include "gext/monomial_matrix.hpp"
#include "gext/resolution.hpp"
#include "gext/rim.hpp"

namespace gext {

enum class Side : char { L = 'L', R = 'R' };

// Mismatch letter of a single edge: L where J descends and I ascends, R where
// I descends and J ascends. Parallel edges have no letter.
inline std::optional<Side> edge_letter(const Rim& i, const Rim& j, int edge) {
  const bool in_i = i.contains(edge), in_j = j.contains(edge);
  if (in_j && !in_i) return Side::L;
  if (in_i && !in_j) return Side::R;
  return std::nullopt;
}

/// One trapezium: a maximal run of consecutive mismatch edges of one kind.
struct Trapezium {
  Side side;
  int length;      // lateral length, one t-step per edge
  int first_edge;  // edges first_edge, first_edge+1, ... (mod n)
  friend bool operator==(const Trapezium&, const Trapezium&) = default;
};

struct Box {
  int left;   // summed lateral length of the L letters
  int right;  // summed lateral length of the R letters
  friend bool operator==(const Box&, const Box&) = default;
};

struct TrapeziumWord {
  std::vector<Trapezium> letters;  // rotated to start with L and end with R
  int rotation = 0;                // how many runs were moved from front to back
  std::vector<Box> boxes;

  std::string raw() const {
    std::string s;
    for (const auto& t : letters) s += static_cast<char>(t.side);
    return s;
  }
  std::string reduced() const {
    std::string s;
    for (std::size_t i = 0; i < boxes.size(); ++i) s += "LR";
    return s;
  }
  int s() const { return static_cast<int>(boxes.size()); }
};

inline TrapeziumWord build_word(const Rim& i, const Rim& j) {
  require_same_parameters(i, j);
  const int n = i.n();
  TrapeziumWord word;
  if (i == j) return word;

  std::vector<Trapezium> runs;
  for (int e = 1; e <= n; ++e) {
    const auto here = edge_letter(i, j, e);
    if (!here || edge_letter(i, j, e - 1) == here) continue;
    Trapezium t{*here, 0, e};
    while (edge_letter(i, j, t.first_edge + t.length) == here) ++t.length;
    runs.push_back(t);
  }

  const std::size_t count = runs.size();
  std::size_t rot = 0;
  while (!(runs[rot].side == Side::L && runs[(rot + count - 1) % count].side == Side::R)) ++rot;
  std::rotate(runs.begin(), runs.begin() + static_cast<std::ptrdiff_t>(rot), runs.end());
  word.rotation = static_cast<int>(rot);
  word.letters = runs;

  for (const auto& t : runs) {
    if (t.side == Side::L) {
      if (word.boxes.empty() || word.boxes.back().right > 0) word.boxes.push_back({0, 0});
      word.boxes.back().left += t.length;
    } else {
      word.boxes.back().right += t.length;
    }
  }
  return word;
}

/// True when the reduced word has at most one box.
inline bool is_noncrossing(const Rim& i, const Rim& j) { return build_word(i, j).s() <= 1; }

/// Image of the presentation matrix under Hom(-, L_J). Rows are the valleys
/// v_1..v_p and columns the peaks u_1..u_p of I (v_i just before u_i). The
/// diagonal holds -t^{a_i}, a_i = #(J on v_i -> u_i); the cyclic subdiagonal
/// holds +t^{b_i} at (v_{i+1}, u_i), b_i = #(edges of u_i -> v_{i+1} not in J).
inline MonomialMatrix build_Dstar(const Rim& i, const Rim& j) {
  require_same_parameters(i, j);
  const auto order = peak_valley_order(i);
  const std::size_t p = order.peaks.size();
  if (p < 2) throw Error(ErrorCode::ProjectiveModule, "D* needs at least two peaks; " + i.to_string() + " is an interval");
  MonomialMatrix m(order.valleys, order.peaks);
  for (std::size_t c = 0; c < p; ++c) {
    const std::size_t next = (c + 1) % p;
    m.set(c, c, {-1, j.count_in(order.valleys[c], order.peaks[c])});
    m.set(next, c, {1, j.count_not_in(order.peaks[c], order.valleys[next])});
  }
  return m;
}

// delta(v) = h_I(v) - h_J(v) for v = 0..n
inline std::vector<int> height_difference(const Rim& i, const Rim& j) {
  const auto hi = height_profile(i), hj = height_profile(j);
  std::vector<int> d(hi.heights.size());
  for (std::size_t v = 0; v < d.size(); ++v) d[v] = hi.heights[v] - hj.heights[v];
  return d;
}

/// t-degree of the canonical generator of Hom(L_I, L_J): how far the lattice
/// of L_I has to be pushed down to sit inside L_J.
inline int canonical_hom_offset(const Rim& i, const Rim& j) {
  require_same_parameters(i, j);
  const auto d = height_difference(i, j);
  return *std::max_element(d.begin(), d.end()) / 2;
}

struct KernelCoefficients {
  std::vector<int> peaks;
  std::vector<int> alphas;  // alpha for each peak, min is 0
};

/// Coefficients t^{alpha_u} of the column relation of D*. Peaks sitting on the
/// rim of J after the canonical placement get alpha = 0. The relation is
/// checked before returning.
inline KernelCoefficients kernel_coefficients(const Rim& i, const Rim& j) {
  require_same_parameters(i, j);
  const auto dstar = build_Dstar(i, j);
  const auto delta = height_difference(i, j);
  const int top = *std::max_element(delta.begin(), delta.end());

  KernelCoefficients kc;
  kc.peaks = dstar.col_labels();
  for (int u : kc.peaks) kc.alphas.push_back((top - delta[u % i.n()]) / 2);

  for (std::size_t r = 0; r < dstar.rows(); ++r) {
    std::map<int, int> row_sum;
    for (std::size_t c = 0; c < dstar.cols(); ++c)
      if (const Monomial* m = dstar.at(r, c)) row_sum[m->exponent + kc.alphas[c]] += m->sign;
    for (const auto& [e, coef] : row_sum)
      if (coef != 0)
        throw Error(ErrorCode::KernelRelationFailed, "row " + std::to_string(dstar.row_labels()[r]) +
                                                         " of D* does not cancel for " + i.to_string() + ", " + j.to_string());
  }
  return kc;
}

}  // namespace gext
