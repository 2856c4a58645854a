#pragma once

// Dense univariate polynomials in t with exact integer coefficients. Only what
// the determinantal-divisor computation needs: ring operations, exact
// division and a primitive gcd.

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gext/error.hpp"

namespace gext {

using BigInt = boost::multiprecision::cpp_int;

class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Polynomial monomial(const BigInt& coef, int exponent) {
    std::vector<BigInt> c(exponent + 1);
    c[exponent] = coef;
    return Polynomial(std::move(c));
  }
  static Polynomial constant(const BigInt& v) { return monomial(v, 0); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const BigInt& lead() const { return c_.back(); }
  const std::vector<BigInt>& coeffs() const { return c_; }
  BigInt coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : BigInt(0); }

  // Lowest exponent with a nonzero coefficient; -1 for the zero polynomial.
  int valuation() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (c_[i] != 0) return static_cast<int>(i);
    return -1;
  }

  // Exactly one nonzero coefficient.
  bool is_monomial() const {
    if (is_zero()) return false;
    return std::count_if(c_.begin(), c_.end(), [](const BigInt& x) { return x != 0; }) == 1;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    return Polynomial(std::move(c));
  }
  friend Polynomial operator-(const Polynomial& a) {
    auto c = a.c_;
    for (auto& x : c) x = -x;
    return Polynomial(std::move(c));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(c));
  }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  BigInt content() const {
    BigInt g = 0;
    for (const auto& x : c_) g = boost::multiprecision::gcd(g, boost::multiprecision::abs(x));
    return g;
  }

  // Content removed and leading coefficient made positive.
  Polynomial primitive() const {
    if (is_zero()) return {};
    BigInt g = content();
    if (lead() < 0) g = -g;
    auto c = c_;
    for (auto& x : c) x /= g;
    return Polynomial(std::move(c));
  }

  /// Long division over Z. The flag is false unless `divisor` divides *this
  /// with an integral quotient and zero remainder.
  std::pair<Polynomial, bool> divide_exact(const Polynomial& divisor) const {
    if (divisor.is_zero()) throw Error(ErrorCode::MalformedMatrix, "division by the zero polynomial");
    if (is_zero()) return {{}, true};
    auto rem = c_;
    const int dd = divisor.degree();
    if (degree() < dd) return {{}, false};
    std::vector<BigInt> q(degree() - dd + 1);
    for (int i = degree(); i >= dd; --i) {
      const BigInt& top = rem[i];
      if (top == 0) continue;
      if (top % divisor.lead() != 0) return {{}, false};
      BigInt f = top / divisor.lead();
      q[i - dd] = f;
      for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= f * divisor.c_[j];
    }
    for (const auto& x : rem)
      if (x != 0) return {{}, false};
    return {Polynomial(std::move(q)), true};
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
      if (c_[i] == 0) continue;
      std::string coef = c_[i].str();
      if (!s.empty()) s += coef[0] == '-' ? " - " : " + ";
      else if (coef[0] == '-') s += "-";
      if (coef[0] == '-') coef.erase(0, 1);
      if (i == 0 || coef != "1") s += coef;
      if (i > 0) s += i == 1 ? "t" : "t^" + std::to_string(i);
    }
    return s;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<BigInt> c_;  // c_[i] is the coefficient of t^i
};

namespace detail {

// a, scaled by a power of lead(b), reduced modulo b.
inline Polynomial pseudo_remainder(Polynomial a, const Polynomial& b) {
  const int db = b.degree();
  while (!a.is_zero() && a.degree() >= db) {
    const int shift = a.degree() - db;
    Polynomial scaled_a = a * Polynomial::constant(b.lead());
    Polynomial sub = Polynomial::monomial(a.lead(), shift) * b;
    a = scaled_a - sub;
  }
  return a;
}

}  // namespace detail

/// gcd over Q[t] normalised to a primitive integer polynomial with positive
/// leading coefficient. gcd(0, 0) = 0.
inline Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a.primitive(), y = b.primitive();
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    Polynomial r = detail::pseudo_remainder(x, y).primitive();
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

}  // namespace gext
