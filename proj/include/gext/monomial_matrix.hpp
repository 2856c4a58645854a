#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gext/error.hpp"

namespace gext {

// sign * t^exponent
struct Monomial {
  int sign = 1;
  int exponent = 0;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// A matrix over F[t] whose entries are 0 or a signed monomial. Rows and
/// columns carry integer labels (valleys and peaks for presentation matrices).
class MonomialMatrix {
 public:
  MonomialMatrix() = default;
  MonomialMatrix(std::vector<int> row_labels, std::vector<int> col_labels)
      : row_labels_(std::move(row_labels)), col_labels_(std::move(col_labels)) {}

  // Unlabelled rows x cols matrix; labels are 0-based positions.
  static MonomialMatrix zeros(std::size_t rows, std::size_t cols) {
    std::vector<int> r(rows), c(cols);
    for (std::size_t i = 0; i < rows; ++i) r[i] = static_cast<int>(i);
    for (std::size_t j = 0; j < cols; ++j) c[j] = static_cast<int>(j);
    return MonomialMatrix(std::move(r), std::move(c));
  }

  std::size_t rows() const { return row_labels_.size(); }
  std::size_t cols() const { return col_labels_.size(); }
  const std::vector<int>& row_labels() const { return row_labels_; }
  const std::vector<int>& col_labels() const { return col_labels_; }

  void set(std::size_t r, std::size_t c, Monomial m) {
    if (r >= rows() || c >= cols()) throw Error(ErrorCode::MalformedMatrix, "entry index out of range");
    if (m.sign != 1 && m.sign != -1) throw Error(ErrorCode::MalformedMatrix, "sign must be +1 or -1");
    if (m.exponent < 0) throw Error(ErrorCode::MalformedMatrix, "negative exponent");
    entries_[{r, c}] = m;
  }
  void clear(std::size_t r, std::size_t c) { entries_.erase({r, c}); }

  const Monomial* at(std::size_t r, std::size_t c) const {
    auto it = entries_.find({r, c});
    return it == entries_.end() ? nullptr : &it->second;
  }

  const std::map<std::pair<std::size_t, std::size_t>, Monomial>& entries() const { return entries_; }

  MonomialMatrix permuted(const std::vector<std::size_t>& row_perm, const std::vector<std::size_t>& col_perm) const {
    std::vector<int> r(rows()), c(cols());
    for (std::size_t i = 0; i < rows(); ++i) r[i] = row_labels_[row_perm[i]];
    for (std::size_t j = 0; j < cols(); ++j) c[j] = col_labels_[col_perm[j]];
    std::vector<std::size_t> row_inv(rows()), col_inv(cols());
    for (std::size_t i = 0; i < rows(); ++i) row_inv[row_perm[i]] = i;
    for (std::size_t j = 0; j < cols(); ++j) col_inv[col_perm[j]] = j;
    MonomialMatrix out(std::move(r), std::move(c));
    for (const auto& [pos, m] : entries_) out.set(row_inv[pos.first], col_inv[pos.second], m);
    return out;
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < rows(); ++i) {
      for (std::size_t j = 0; j < cols(); ++j) {
        if (j) s += " ";
        const Monomial* m = at(i, j);
        if (!m) {
          s += "0";
          continue;
        }
        s += m->sign < 0 ? "-" : "+";
        s += m->exponent == 0 ? "1" : (m->exponent == 1 ? "t" : "t^" + std::to_string(m->exponent));
      }
      s += "\n";
    }
    return s;
  }

  friend bool operator==(const MonomialMatrix&, const MonomialMatrix&) = default;

 private:
  std::vector<int> row_labels_;
  std::vector<int> col_labels_;
  std::map<std::pair<std::size_t, std::size_t>, Monomial> entries_;
};

}  // namespace gext
