#pragma once

// Invariant factors of signed monomial matrices over F[t].
//
// Two independent routes:
//  * reduce_units + box_merge_invariants work on the cyclic bidiagonal shape
//    of D* and only ever touch exponents;
//  * snf_oracle computes determinantal divisors (gcds of all minors) with
//    exact integer polynomial arithmetic and works for any monomial matrix.

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "gext/error.hpp"
#include "gext/monomial_matrix.hpp"
#include "gext/polynomial.hpp"

namespace gext {

struct InvariantFactorList {
  int unit_count = 0;
  std::vector<int> exponents;  // strictly positive, ascending
  int zero_count = 0;

  int size() const { return unit_count + static_cast<int>(exponents.size()) + zero_count; }
  friend bool operator==(const InvariantFactorList&, const InvariantFactorList&) = default;

  std::string to_string() const {
    std::string s = "units=" + std::to_string(unit_count) + " exponents=(";
    for (std::size_t i = 0; i < exponents.size(); ++i) s += (i ? "," : "") + std::to_string(exponents[i]);
    return s + ") zeros=" + std::to_string(zero_count);
  }
};

// Column i of a cyclic bidiagonal matrix: -t^a on the diagonal, +t^b one row
// below (wrapping to the top row for the last column).
struct ExponentPair {
  int a;
  int b;
  friend bool operator==(const ExponentPair&, const ExponentPair&) = default;
};

struct BoxOffsets {
  std::vector<ExponentPair> pairs;
  bool empty() const { return pairs.empty(); }
  std::size_t size() const { return pairs.size(); }
};

/// Reads the (a_i, b_i) exponents off a matrix in D* form. Throws
/// MalformedMatrix for anything that is not square cyclic bidiagonal with the
/// sign pattern of D*.
inline std::vector<ExponentPair> cyclic_exponents(const MonomialMatrix& m) {
  const std::size_t p = m.cols();
  if (m.rows() != p || p < 2) throw Error(ErrorCode::MalformedMatrix, "expected a square matrix of size at least 2");
  if (m.entries().size() != 2 * p) throw Error(ErrorCode::MalformedMatrix, "expected exactly two entries per column");
  std::vector<ExponentPair> out;
  for (std::size_t c = 0; c < p; ++c) {
    const Monomial* diag = m.at(c, c);
    const Monomial* sub = m.at((c + 1) % p, c);
    if (!diag || !sub || diag->sign != -1 || sub->sign != 1)
      throw Error(ErrorCode::MalformedMatrix, "column " + std::to_string(c) + " breaks the cyclic bidiagonal pattern");
    out.push_back({diag->exponent, sub->exponent});
  }
  return out;
}

inline MonomialMatrix cyclic_bidiagonal(const std::vector<ExponentPair>& cols) {
  const std::size_t p = cols.size();
  auto m = MonomialMatrix::zeros(p, p);
  if (p == 1) throw Error(ErrorCode::MalformedMatrix, "a single column cannot hold both entries in one cell");
  for (std::size_t c = 0; c < p; ++c) {
    m.set(c, c, {-1, cols[c].a});
    m.set((c + 1) % p, c, {1, cols[c].b});
  }
  return m;
}

namespace detail {

// Pulls out t^{a_j} (take_a) or t^{b_j} and removes column j, merging the
// neighbouring exponent by the sum-minus-min rule. Valid whenever the chosen
// exponent is no larger than the entries it is used to clear.
inline int extract_column(std::vector<ExponentPair>& cols, std::size_t j, bool take_a) {
  const std::size_t p = cols.size();
  const int h = take_a ? cols[j].a : cols[j].b;
  if (take_a) {
    auto& prev = cols[(j + p - 1) % p];
    prev.b = prev.b + cols[j].b - h;
  } else {
    auto& next = cols[(j + 1) % p];
    next.a = next.a + cols[j].a - h;
  }
  cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(j));
  return h;
}

// Lowest exponent; ties go to the lowest column index, a before b.
inline std::pair<std::size_t, bool> argmin_exponent(const std::vector<ExponentPair>& cols) {
  std::size_t best = 0;
  bool take_a = true;
  int value = cols[0].a;
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].a < value) best = c, take_a = true, value = cols[c].a;
    if (cols[c].b < value) best = c, take_a = false, value = cols[c].b;
  }
  return {best, take_a};
}

// The last column of a corank-1 cyclic matrix is the 1x1 entry t^b - t^a.
inline void require_dependent(const ExponentPair& last) {
  if (last.a != last.b)
    throw Error(ErrorCode::MalformedMatrix, "residual entry t^" + std::to_string(last.b) + " - t^" +
                                                std::to_string(last.a) + " is nonzero; matrix is not of corank 1");
}

}  // namespace detail

struct UnitReduction {
  int unit_count = 0;
  BoxOffsets boxes;  // empty when nothing but units and the dependent column remain
};

/// Eliminates every column carrying an exponent 0, each contributing a unit
/// invariant factor, until all remaining exponents are positive.
inline UnitReduction reduce_units(std::vector<ExponentPair> cols) {
  if (cols.empty()) throw Error(ErrorCode::EmptyInput, "no columns");
  UnitReduction out;
  while (cols.size() > 1) {
    auto [j, take_a] = detail::argmin_exponent(cols);
    if ((take_a ? cols[j].a : cols[j].b) != 0) break;
    detail::extract_column(cols, j, take_a);
    ++out.unit_count;
  }
  if (cols.size() == 1) {
    detail::require_dependent(cols[0]);
    if (cols[0].a == 0) return out;
  }
  out.boxes.pairs = std::move(cols);
  return out;
}

inline UnitReduction reduce_units(const MonomialMatrix& m) { return reduce_units(cyclic_exponents(m)); }

/// Invariant factors of the reduced (LR)^s matrix: repeatedly take the
/// smallest exponent as a factor and merge its neighbours; the last box is the
/// dependent column and gives the single zero factor.
inline InvariantFactorList box_merge_invariants(const BoxOffsets& boxes) {
  if (boxes.empty()) throw Error(ErrorCode::EmptyInput, "no LR boxes");
  for (const auto& p : boxes.pairs)
    if (p.a < 1 || p.b < 1) throw Error(ErrorCode::MalformedMatrix, "box offsets must be positive");
  auto cols = boxes.pairs;
  InvariantFactorList out;
  while (cols.size() > 1) {
    auto [j, take_a] = detail::argmin_exponent(cols);
    out.exponents.push_back(detail::extract_column(cols, j, take_a));
  }
  detail::require_dependent(cols[0]);
  out.zero_count = 1;
  std::sort(out.exponents.begin(), out.exponents.end());
  return out;
}

/// reduce_units followed by box_merge_invariants.
inline InvariantFactorList invariant_factors(const MonomialMatrix& m) {
  const auto reduced = reduce_units(m);
  InvariantFactorList out;
  if (reduced.boxes.empty()) {
    out.zero_count = 1;
  } else {
    out = box_merge_invariants(reduced.boxes);
  }
  out.unit_count += reduced.unit_count;
  return out;
}

inline constexpr std::size_t kOracleMaxDimension = 12;

namespace detail {

inline Polynomial as_polynomial(const Monomial& m) { return Polynomial::monomial(m.sign, m.exponent); }

// Laplace expansion along the first remaining row.
inline Polynomial minor_determinant(const MonomialMatrix& m, const std::vector<std::size_t>& rows,
                                    std::size_t row_pos, std::vector<std::size_t>& cols, std::vector<bool>& used) {
  if (row_pos == rows.size()) return Polynomial::constant(1);
  Polynomial total;
  int sign = 1;
  for (std::size_t ci = 0; ci < cols.size(); ++ci) {
    if (used[ci]) continue;
    if (const Monomial* e = m.at(rows[row_pos], cols[ci])) {
      used[ci] = true;
      Polynomial sub = minor_determinant(m, rows, row_pos + 1, cols, used);
      used[ci] = false;
      if (!sub.is_zero()) {
        Polynomial term = as_polynomial(*e) * sub;
        total = sign > 0 ? total + term : total - term;
      }
    }
    sign = -sign;
  }
  return total;
}

template <typename Fn>
void for_each_subset(std::size_t n, std::size_t k, Fn&& fn) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (!fn(idx)) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace detail

/// d_j = gcd of all j x j minors.
inline Polynomial determinantal_divisor(const MonomialMatrix& m, std::size_t j) {
  Polynomial g;
  detail::for_each_subset(m.rows(), j, [&](const std::vector<std::size_t>& rows) {
    bool keep_going = true;
    detail::for_each_subset(m.cols(), j, [&](const std::vector<std::size_t>& cols) {
      auto c = cols;
      std::vector<bool> used(c.size(), false);
      Polynomial det = detail::minor_determinant(m, rows, 0, c, used);
      g = gcd(g, det);
      keep_going = !(g.degree() == 0);  // gcd already 1
      return keep_going;
    });
    return keep_going;
  });
  return g;
}

/// Invariant factors from determinantal divisors, f_j = d_j / d_{j-1}.
/// Throws NonMonomialFactor if some f_j is not a monomial.
inline InvariantFactorList snf_oracle(const MonomialMatrix& m) {
  if (m.rows() > kOracleMaxDimension || m.cols() > kOracleMaxDimension)
    throw Error(ErrorCode::TooLarge, "oracle is limited to " + std::to_string(kOracleMaxDimension) + " rows and columns");
  const std::size_t r = std::min(m.rows(), m.cols());
  InvariantFactorList out;
  Polynomial prev = Polynomial::constant(1);
  for (std::size_t j = 1; j <= r; ++j) {
    Polynomial d = determinantal_divisor(m, j);
    if (d.is_zero()) {
      out.zero_count = static_cast<int>(r - j + 1);
      break;
    }
    auto [f, exact] = d.divide_exact(prev);
    if (!exact || !f.is_monomial())
      throw Error(ErrorCode::NonMonomialFactor, "d_" + std::to_string(j) + " = " + d.to_string() + " over d_" +
                                                    std::to_string(j - 1) + " = " + prev.to_string() +
                                                    " is not a monomial");
    const int e = f.valuation();
    if (e == 0) {
      ++out.unit_count;
    } else {
      out.exponents.push_back(e);
    }
    prev = std::move(d);
  }
  std::sort(out.exponents.begin(), out.exponents.end());
  return out;
}

}  // namespace gext
