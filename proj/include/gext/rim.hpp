#pragma once

// Rims: k-subsets of the edge set {1..n} of the circular graph, and the
// combinatorics read off from them (peaks, valleys, segments, heights).

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>
#include <vector>

#include "gext/error.hpp"

namespace gext {

// Reduce any integer into the label range {1..n}. Vertex 0 and vertex n are
// the same vertex; n is the canonical label.
constexpr int wrap_label(long long x, int n) {
  long long r = x % n;
  if (r <= 0) r += n;
  return static_cast<int>(r);
}

// Cyclic distance going forward from vertex `from` to vertex `to`, in 0..n-1.
constexpr int forward_distance(int from, int to, int n) {
  int d = (to - from) % n;
  return d < 0 ? d + n : d;
}

/// Edges {from+1, from+2, ..., to} walked clockwise, labels reduced into
/// {1..n}. An interval from a vertex to itself is empty.
///
/// This is the single reading of cyclic intervals used throughout the library:
/// a half-open vertex interval (u, v] and the arc u -> v both denote the edges
/// strictly after u up to and including v.
struct CyclicEdgeInterval {
  int from = 0;
  int to = 0;
  int n = 1;

  CyclicEdgeInterval(int from_vertex, int to_vertex, int modulus)
      : from(wrap_label(from_vertex, modulus)), to(wrap_label(to_vertex, modulus)), n(modulus) {}

  int size() const { return forward_distance(from, to, n); }

  int edge(int i) const { return wrap_label(static_cast<long long>(from) + 1 + i, n); }

  std::vector<int> edges() const {
    std::vector<int> out;
    out.reserve(size());
    for (int i = 0; i < size(); ++i) out.push_back(edge(i));
    return out;
  }
};

class Rim {
 public:
  Rim(int n, int k, std::vector<int> elements) : n_(n), k_(k), elements_(std::move(elements)) {
    if (n < 2) throw Error(ErrorCode::InvalidRim, "n must be at least 2, got " + std::to_string(n));
    if (k < 1 || k > n - 1)
      throw Error(ErrorCode::InvalidRim,
                  "k must satisfy 1 <= k <= n-1, got k=" + std::to_string(k) + " n=" + std::to_string(n));
    if (static_cast<int>(elements_.size()) != k)
      throw Error(ErrorCode::InvalidRim, "expected " + std::to_string(k) + " elements, got " +
                                             std::to_string(elements_.size()));
    member_.assign(n + 1, 0);
    for (int e : elements_) {
      if (e < 1 || e > n) throw Error(ErrorCode::InvalidRim, "label " + std::to_string(e) + " outside 1.." + std::to_string(n));
      if (member_[e]) throw Error(ErrorCode::InvalidRim, "duplicate label " + std::to_string(e));
      member_[e] = 1;
    }
    std::sort(elements_.begin(), elements_.end());
  }

  // k is taken from the element count.
  Rim(int n, const std::vector<int>& elements) : Rim(n, static_cast<int>(elements.size()), elements) {}

  int n() const { return n_; }
  int k() const { return k_; }
  const std::vector<int>& elements() const { return elements_; }

  // Membership of an edge label; any integer is reduced mod n first.
  bool contains(long long label) const { return member_[wrap_label(label, n_)] != 0; }

  int count_in(const CyclicEdgeInterval& iv) const {
    int c = 0;
    for (int i = 0; i < iv.size(); ++i) c += contains(iv.edge(i)) ? 1 : 0;
    return c;
  }
  int count_not_in(const CyclicEdgeInterval& iv) const { return iv.size() - count_in(iv); }

  // Number of edges of from -> to that belong to the rim.
  int count_in(int from, int to) const { return count_in(CyclicEdgeInterval(from, to, n_)); }
  int count_not_in(int from, int to) const { return count_not_in(CyclicEdgeInterval(from, to, n_)); }

  bool same_parameters(const Rim& other) const { return n_ == other.n_ && k_ == other.k_; }

  friend bool operator==(const Rim& a, const Rim& b) {
    return a.n_ == b.n_ && a.k_ == b.k_ && a.elements_ == b.elements_;
  }
  friend bool operator!=(const Rim& a, const Rim& b) { return !(a == b); }
  friend bool operator<(const Rim& a, const Rim& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    if (a.k_ != b.k_) return a.k_ < b.k_;
    return a.elements_ < b.elements_;
  }

  std::string to_string() const {
    std::string s = "{";
    for (size_t i = 0; i < elements_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(elements_[i]);
    }
    return s + "}";
  }

  friend std::ostream& operator<<(std::ostream& os, const Rim& r) {
    return os << r.to_string() << "/n=" << r.n_;
  }

 private:
  int n_;
  int k_;
  std::vector<int> elements_;
  std::vector<std::uint8_t> member_;  // indexed 1..n
};

inline void require_same_parameters(const Rim& a, const Rim& b) {
  if (!a.same_parameters(b))
    throw Error(ErrorCode::MismatchedParameters,
                "rims have (n,k)=(" + std::to_string(a.n()) + "," + std::to_string(a.k()) + ") and (" +
                    std::to_string(b.n()) + "," + std::to_string(b.k()) + ")");
}

// The interval rim {j+1, ..., j+k}: the projective indecomposable P_j.
inline Rim projective_rim(int vertex, int n, int k) {
  std::vector<int> e;
  for (int i = 1; i <= k; ++i) e.push_back(wrap_label(static_cast<long long>(vertex) + i, n));
  return Rim(n, k, std::move(e));
}

/// Peaks u with u not in I and u+1 in I, increasing label order.
inline std::vector<int> peaks(const Rim& rim) {
  std::vector<int> out;
  for (int u = 1; u <= rim.n(); ++u)
    if (!rim.contains(u) && rim.contains(u + 1)) out.push_back(u);
  return out;
}

/// Valleys v with v in I and v+1 not in I, increasing label order.
inline std::vector<int> valleys(const Rim& rim) {
  std::vector<int> out;
  for (int v = 1; v <= rim.n(); ++v)
    if (rim.contains(v) && !rim.contains(v + 1)) out.push_back(v);
  return out;
}

inline int peak_count(const Rim& rim) { return static_cast<int>(peaks(rim).size()); }

inline bool is_projective(const Rim& rim) { return peak_count(rim) == 1; }

struct Segment {
  int start;   // first edge label of the run
  int length;  // d_i
  friend bool operator==(const Segment&, const Segment&) = default;
};

/// Maximal runs A_i of consecutive elements with the gap l_i following each.
struct SegmentDecomposition {
  int n = 0;
  std::vector<Segment> segments;
  std::vector<int> gaps;

  int peak_count() const { return static_cast<int>(segments.size()); }

  std::vector<int> downs() const {
    std::vector<int> d;
    for (const auto& s : segments) d.push_back(s.length);
    return d;
  }

  Rim reconstruct() const {
    std::vector<int> e;
    for (const auto& s : segments)
      for (int i = 0; i < s.length; ++i) e.push_back(wrap_label(static_cast<long long>(s.start) + i, n));
    return Rim(n, std::move(e));
  }
};

// The first segment is the one starting right after the largest-labelled
// valley, so an unwrapped rim containing 1 starts at 1.
inline SegmentDecomposition decompose(const Rim& rim) {
  const int n = rim.n();
  const auto vs = valleys(rim);
  int cursor = vs.back() + 1;
  while (!rim.contains(cursor)) ++cursor;

  SegmentDecomposition out;
  out.n = n;
  for (size_t i = 0; i < vs.size(); ++i) {
    Segment seg{wrap_label(cursor, n), 0};
    while (rim.contains(cursor)) {
      ++seg.length;
      ++cursor;
    }
    int gap = 0;
    while (!rim.contains(cursor)) {
      ++gap;
      ++cursor;
    }
    out.segments.push_back(seg);
    out.gaps.push_back(gap);
  }
  return out;
}

struct HeightProfile {
  std::vector<int> heights;  // h(0..n)

  int operator()(int vertex) const { return heights.at(vertex); }
  int n() const { return static_cast<int>(heights.size()) - 1; }
};

// h(0) = 0; every edge in the rim steps down, every other edge steps up.
inline HeightProfile height_profile(const Rim& rim) {
  HeightProfile hp;
  hp.heights.resize(rim.n() + 1);
  hp.heights[0] = 0;
  for (int i = 1; i <= rim.n(); ++i) hp.heights[i] = hp.heights[i - 1] + (rim.contains(i) ? -1 : 1);
  return hp;
}

inline Rim shift(const Rim& rim, long long delta) {
  std::vector<int> e;
  e.reserve(rim.k());
  for (int x : rim.elements()) e.push_back(wrap_label(x + delta, rim.n()));
  return Rim(rim.n(), rim.k(), std::move(e));
}

/// Every k-subset of {1..n} in lexicographic order.
inline std::vector<Rim> all_rims(int n, int k) {
  std::vector<Rim> out;
  if (k < 1 || k > n - 1) return out;
  std::vector<int> cur(k);
  std::iota(cur.begin(), cur.end(), 1);
  while (true) {
    out.emplace_back(n, k, cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + 1 + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

}  // namespace gext
