#ifndef MMLAB_POLYNOMIAL_HPP
#define MMLAB_POLYNOMIAL_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

#include "mmlab/error.hpp"

namespace mmlab {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Exact "p/q" or integer; anything else (floats, exponents, junk) is rejected.
inline Rational parse_rational(const std::string& text) {
  auto is_int = [](const std::string& s) {
    std::size_t i = (s.size() > 0 && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  const auto slash = text.find('/');
  const std::string num = text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!is_int(num) || !is_int(den) || den[0] == '-' || den[0] == '+')
    fail(ErrorCode::InvalidArgument, "expected an exact rational 'p/q' or integer, got '" + text + "'");
  Rational q(BigInt(num[0] == '+' ? num.substr(1) : num), BigInt(den));
  require(q.get_den() != 0, ErrorCode::InvalidArgument, "zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

inline std::string to_string(const BigInt& z) { return z.get_str(); }
inline std::string to_string(const Rational& q) {
  return q.get_den() == 1 ? q.get_num().get_str() : q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline BigInt ipow(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}
inline Rational qpow(const Rational& base, unsigned long e) {
  Rational r = 1;
  for (unsigned long i = 0; i < e; ++i) r *= base;
  return r;
}

/// Univariate polynomial in y, coefficient i multiplying y^i. Never has a
/// trailing zero coefficient; the zero polynomial has no coefficients.
template <typename T>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Polynomial constant(const T& v) { return Polynomial(std::vector<T>{v}); }
  static Polynomial monomial(const T& v, std::size_t degree) {
    std::vector<T> c(degree + 1, T(0));
    c[degree] = v;
    return Polynomial(std::move(c));
  }

  /// sum_j counts[j] * (y + shift)^j, expanded in powers of y.
  static Polynomial from_shifted_counts(const std::vector<T>& counts, const T& shift) {
    Polynomial out;
    Polynomial power = constant(T(1));
    const Polynomial lin(std::vector<T>{shift, T(1)});
    for (std::size_t j = 0; j < counts.size(); ++j) {
      if (counts[j] != 0) out += power * counts[j];
      power = power * lin;
    }
    return out;
  }

  const std::vector<T>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }

  template <typename V>
  V evaluate(const V& y) const {
    V acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * y + V(c_[i]);
    return acc;
  }

  T coefficient_sum() const {
    T s = 0;
    for (const auto& v : c_) s += v;
    return s;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const T& s) {
    std::vector<T> c = a.c_;
    for (auto& v : c) v *= s;
    return Polynomial(std::move(c));
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> c(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(c));
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  std::vector<std::string> coefficient_strings() const {
    std::vector<std::string> out;
    for (const auto& v : c_) out.push_back(mmlab::to_string(v));
    if (out.empty()) out.emplace_back("0");
    return out;
  }

  std::string to_string() const {
    if (c_.empty()) return "0";
    std::string s;
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (c_[i] == 0) continue;
      if (!s.empty()) s += " + ";
      s += "(" + mmlab::to_string(c_[i]) + ")";
      if (i > 0) s += i == 1 ? "y" : "y^" + std::to_string(i);
    }
    return s;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<T> c_;
};

using IntPolynomial = Polynomial<BigInt>;
using RatPolynomial = Polynomial<Rational>;

}  // namespace mmlab

#endif  // MMLAB_POLYNOMIAL_HPP
