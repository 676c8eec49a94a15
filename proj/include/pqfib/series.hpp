#pragma once

#include <algorithm>
#include <climits>
#include <cstddef>
#include <ostream>
#include <vector>

#include "pqfib/scalar.hpp"

namespace pqfib {

/// Formal power series in t truncated at `order` (coefficients are known
/// for m <= order).  A series built from a scalar or a finite polynomial
/// with no explicit order is exact at every order (`kExact`); mixing it
/// with a truncated operand yields the smaller order.
///
/// Models `Scalar`, so the hypergeometric evaluator can run over series
/// coefficients directly.
template <Scalar S>
class TruncatedSeries {
 public:
  static constexpr int kExact = INT_MAX;

  TruncatedSeries() : order_(kExact) {}
  TruncatedSeries(int c) : TruncatedSeries(S(c)) {}  // NOLINT: scalar promotion
  TruncatedSeries(const S& c) : coeffs_{c}, order_(kExact) { normalize(); }  // NOLINT
  TruncatedSeries(std::vector<S> cs, int order) : coeffs_(std::move(cs)), order_(order) { normalize(); }

  /// An exact polynomial in t.
  static TruncatedSeries polynomial(std::vector<S> cs) { return TruncatedSeries(std::move(cs), kExact); }

  /// 1 / (1 - c t) through `order`.
  static TruncatedSeries geometric(const S& c, int order) {
    std::vector<S> cs;
    S v(1);
    for (int m = 0; m <= order; ++m) {
      cs.push_back(v);
      v = v * c;
    }
    return TruncatedSeries(std::move(cs), order);
  }

  int order() const { return order_; }
  bool exact() const { return order_ == kExact; }

  S coeff(int m) const {
    return (m >= 0 && static_cast<std::size_t>(m) < coeffs_.size()) ? coeffs_[m] : S(0);
  }

  /// Coefficients 0..order (requires a finite order).
  std::vector<S> coefficients() const {
    std::vector<S> out;
    for (int m = 0; m <= order_; ++m) out.push_back(coeff(m));
    return out;
  }

  bool is_zero() const { return coeffs_.empty(); }

  TruncatedSeries truncated(int order) const {
    TruncatedSeries r = *this;
    r.order_ = std::min(order_, order);
    r.normalize();
    return r;
  }

  /// Multiplication by t^k.
  TruncatedSeries shifted(int k) const {
    std::vector<S> cs(k, S(0));
    cs.insert(cs.end(), coeffs_.begin(), coeffs_.end());
    return TruncatedSeries(std::move(cs), order_ == kExact ? kExact : order_ + k);
  }

  /// Multiplicative inverse; needs a nonzero constant term and, unless the
  /// series is a constant, a finite order.
  TruncatedSeries inverse() const {
    if (coeffs_.empty() || pqfib::is_zero(coeffs_[0])) {
      throw domain_error("TruncatedSeries::inverse: constant term is zero");
    }
    if (coeffs_.size() == 1) return TruncatedSeries(S(1) / coeffs_[0]);
    if (exact()) throw domain_error("TruncatedSeries::inverse: non-constant series needs a finite order");
    const S inv0 = S(1) / coeffs_[0];
    std::vector<S> r(order_ + 1, S(0));
    r[0] = inv0;
    for (int m = 1; m <= order_; ++m) {
      S acc(0);
      const int top = std::min<int>(m, static_cast<int>(coeffs_.size()) - 1);
      for (int j = 1; j <= top; ++j) acc = acc + coeffs_[j] * r[m - j];
      r[m] = -acc * inv0;
    }
    return TruncatedSeries(std::move(r), order_);
  }

  TruncatedSeries operator-() const {
    TruncatedSeries r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    return combine(a, b, [](const S& x, const S& y) { return x + y; });
  }
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    return combine(a, b, [](const S& x, const S& y) { return x - y; });
  }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int order = std::min(a.order_, b.order_);
    if (a.is_zero() || b.is_zero()) return TruncatedSeries({}, order);
    std::size_t len = a.coeffs_.size() + b.coeffs_.size() - 1;
    if (order != kExact) len = std::min<std::size_t>(len, static_cast<std::size_t>(order) + 1);
    std::vector<S> cs(len, S(0));
    for (std::size_t i = 0; i < a.coeffs_.size() && i < len; ++i) {
      for (std::size_t j = 0; j < b.coeffs_.size() && i + j < len; ++j) {
        cs[i + j] = cs[i + j] + a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return TruncatedSeries(std::move(cs), order);
  }

  friend TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (b.exact() && b.coeffs_.size() > 1) {
      // Carry the numerator's order into the divisor so it can be inverted.
      return a * b.truncated(a.order_).inverse();
    }
    return a * b.inverse();
  }

  /// Equal on every coefficient both operands know.
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int order = std::min(a.order_, b.order_);
    const std::size_t len = std::max(a.coeffs_.size(), b.coeffs_.size());
    for (std::size_t m = 0; m < len && (order == kExact || static_cast<int>(m) <= order); ++m) {
      if (!(a.coeff(static_cast<int>(m)) == b.coeff(static_cast<int>(m)))) return false;
    }
    return true;
  }

  friend std::ostream& operator<<(std::ostream& os, const TruncatedSeries& s) {
    os << "[";
    for (std::size_t m = 0; m < s.coeffs_.size(); ++m) os << (m ? ", " : "") << s.coeffs_[m];
    os << "]";
    if (!s.exact()) os << " + O(t^" << s.order_ + 1 << ")";
    return os;
  }

 private:
  template <class Op>
  static TruncatedSeries combine(const TruncatedSeries& a, const TruncatedSeries& b, Op op) {
    const int order = std::min(a.order_, b.order_);
    std::vector<S> cs(std::max(a.coeffs_.size(), b.coeffs_.size()), S(0));
    for (std::size_t m = 0; m < cs.size(); ++m) {
      cs[m] = op(a.coeff(static_cast<int>(m)), b.coeff(static_cast<int>(m)));
    }
    return TruncatedSeries(std::move(cs), order);
  }

  void normalize() {
    if (order_ != kExact && coeffs_.size() > static_cast<std::size_t>(order_) + 1) {
      coeffs_.resize(static_cast<std::size_t>(order_) + 1);
    }
    while (!coeffs_.empty() && pqfib::is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<S> coeffs_;
  int order_;
};

template <Scalar S>
bool is_zero(const TruncatedSeries<S>& s) {
  return s.is_zero();
}

}  // namespace pqfib
