#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <utility>
#include <vector>

#include "pqfib/scalar.hpp"

namespace pqfib {

/// Dense polynomial in x.  coeffs()[i] is the coefficient of x^i; trailing
/// zeros are always stripped, so the zero polynomial has no coefficients.
template <Scalar S>
class XPolynomial {
 public:
  XPolynomial() = default;
  XPolynomial(std::initializer_list<S> cs) : coeffs_(cs) { normalize(); }
  explicit XPolynomial(std::vector<S> cs) : coeffs_(std::move(cs)) { normalize(); }

  static XPolynomial constant(const S& c) { return XPolynomial(std::vector<S>{c}); }

  static XPolynomial monomial(const S& c, std::size_t power) {
    std::vector<S> cs(power + 1, S(0));
    cs[power] = c;
    return XPolynomial(std::move(cs));
  }

  const std::vector<S>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  S coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : S(0); }

  S leading_coefficient() const { return coeffs_.empty() ? S(0) : coeffs_.back(); }

  /// Horner evaluation in any ring T that S converts into (e.g. complex
  /// arguments for real coefficients).
  template <class T>
  T evaluate(const T& x) const {
    T acc = T(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc = acc * x + T(*it);
    }
    return acc;
  }

  /// Multiplication by x^k.
  XPolynomial shifted(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<S> cs(k, S(0));
    cs.insert(cs.end(), coeffs_.begin(), coeffs_.end());
    return XPolynomial(std::move(cs));
  }

  /// p(-x).
  XPolynomial reflected() const {
    std::vector<S> cs = coeffs_;
    for (std::size_t i = 1; i < cs.size(); i += 2) cs[i] = -cs[i];
    return XPolynomial(std::move(cs));
  }

  XPolynomial& operator+=(const XPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), S(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] + o.coeffs_[i];
    normalize();
    return *this;
  }

  XPolynomial& operator-=(const XPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), S(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] - o.coeffs_[i];
    normalize();
    return *this;
  }

  XPolynomial& operator*=(const S& c) {
    for (auto& v : coeffs_) v = v * c;
    normalize();
    return *this;
  }

  friend XPolynomial operator+(XPolynomial a, const XPolynomial& b) { return a += b; }
  friend XPolynomial operator-(XPolynomial a, const XPolynomial& b) { return a -= b; }
  friend XPolynomial operator*(XPolynomial a, const S& c) { return a *= c; }
  friend XPolynomial operator*(const S& c, XPolynomial a) { return a *= c; }

  friend XPolynomial operator*(const XPolynomial& a, const XPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<S> cs(a.coeffs_.size() + b.coeffs_.size() - 1, S(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        cs[i + j] = cs[i + j] + a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return XPolynomial(std::move(cs));
  }

  friend bool operator==(const XPolynomial& a, const XPolynomial& b) { return a.coeffs_ == b.coeffs_; }

  friend std::ostream& operator<<(std::ostream& os, const XPolynomial& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (std::size_t i = p.coeffs_.size(); i-- > 0;) {
      if (pqfib::is_zero(p.coeffs_[i])) continue;
      if (!first) os << " + ";
      first = false;
      os << "(" << p.coeffs_[i] << ")";
      if (i > 0) os << "*x";
      if (i > 1) os << "^" << i;
    }
    return os;
  }

 private:
  void normalize() {
    while (!coeffs_.empty() && pqfib::is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<S> coeffs_;
};

}  // namespace pqfib
