#pragma once

// Generating functions f_F(x,s;t|p,q) = sum_n F_n(x, s p^{-n}) t^n and
// f_L(x,s;t|p,q) = sum_n L_n(x, s p^{-n}) t^n as truncated series in t,
// from the definition and from the 2phi2 closed forms.

#include <cmath>
#include <stdexcept>
#include <vector>

#include "pqfib/hypergeometric.hpp"
#include "pqfib/polynomials.hpp"
#include "pqfib/scalar.hpp"
#include "pqfib/series.hpp"

namespace pqfib {

inline constexpr int kDefaultSeriesOrder = 12;

namespace detail {

inline void require_order(int order) {
  if (order < 0) throw std::invalid_argument("generating function: order must be nonnegative");
}

template <Scalar S>
TruncatedSeries<S> definitional(Family family, const S& x, const S& s, const PQParams<S>& params, int order) {
  require_order(order);
  BinomialTable<S> B(params);
  const S inv_p = S(1) / params.p();
  std::vector<S> cs;
  S shift(1);  // p^{-n}
  for (int n = 0; n <= order; ++n) {
    const S arg = s * shift;
    auto poly = family == Family::fibonacci ? fibonacci_poly(n, arg, B) : lucas_poly(n, arg, B);
    cs.push_back(poly.evaluate(x));
    shift = shift * inv_p;
  }
  return TruncatedSeries<S>(std::move(cs), order);
}

// sum_k (q/p)^{C(k,2)} (q s t^2)^k / (((p, c x t q^0);(p,q))_k p^{C(k+1,2)})
// with every k-th denominator expanded as a polynomial in t and inverted.
// c = q gives the Fibonacci 2phi2, c = pq the Lucas one.
template <Scalar S>
TruncatedSeries<S> two_phi_two(const S& x, const S& s, const S& c, const PQParams<S>& params, int order) {
  const S& p = params.p();
  const S& q = params.q();
  TruncatedSeries<S> total(std::vector<S>{}, order);
  TruncatedSeries<S> den = TruncatedSeries<S>::polynomial({S(1)});
  S p_pow(1);  // p^{j+1}
  S q_pow(1);  // q^j
  for (int k = 0; 2 * k <= order; ++k) {
    if (k > 0) {
      // factor j = k-1: (p p^j - c x t q^j), times p^{j+1} from (p, 0)
      p_pow = p_pow * p;
      den = den * TruncatedSeries<S>::polynomial({p_pow * p_pow, -p_pow * c * x * q_pow});
      q_pow = q_pow * q;
    }
    const S coef = power(q / p, binom2(k)) * power(q * s, k);
    total = total + (den.truncated(order - 2 * k).inverse() * TruncatedSeries<S>(coef)).shifted(2 * k);
  }
  return total.truncated(order);
}

}  // namespace detail

/// Coefficient of t^n is F_n(x, s p^{-n} | p, q).
template <Scalar S>
TruncatedSeries<S> fib_genfunc_definitional(const S& x, const S& s, const PQParams<S>& params,
                                            int order = kDefaultSeriesOrder) {
  return detail::definitional(Family::fibonacci, x, s, params, order);
}

/// Coefficient of t^n is L_n(x, s p^{-n} | p, q).
template <Scalar S>
TruncatedSeries<S> lucas_genfunc_definitional(const S& x, const S& s, const PQParams<S>& params,
                                              int order = kDefaultSeriesOrder) {
  return detail::definitional(Family::lucas, x, s, params, order);
}

/// t / (1 - x t) * 2phi2((p,q), 0; (p, x t q), (p, 0) | (p,q); -q s t^2).
template <Scalar S>
TruncatedSeries<S> fib_genfunc_closed(const S& x, const S& s, const PQParams<S>& params,
                                      int order = kDefaultSeriesOrder) {
  detail::require_order(order);
  const auto pre = TruncatedSeries<S>::geometric(x, order).shifted(1).truncated(order);
  return pre * detail::two_phi_two(x, s, params.q(), params, order);
}

/// (1 + s p t^2) / (1 - x p t) * 2phi2((p,q), 0; (p, x t p q), (p, 0) | (p,q); -q s t^2).
///
/// Agrees with lucas_genfunc_definitional only at p = 1: for p != 1 the
/// t^1 coefficient is already x p instead of L_1 = x.  See
/// lucas_genfunc_closed_split for a closed form valid for all p.
template <Scalar S>
TruncatedSeries<S> lucas_genfunc_closed(const S& x, const S& s, const PQParams<S>& params,
                                        int order = kDefaultSeriesOrder) {
  detail::require_order(order);
  const S& p = params.p();
  const auto pre = TruncatedSeries<S>::polynomial({S(1), S(0), s * p}) * TruncatedSeries<S>::geometric(x * p, order);
  return pre * detail::two_phi_two(x, s, p * params.q(), params, order);
}

/// f_L(x,s;t) = f_F(x,s;t) / t + (s t / p) f_F(x, s/p^2; t), obtained by
/// summing L_n(x,s) = F_{n+1}(x,s/p) + s p^{n-1} F_{n-1}(x,s/p) over n;
/// both f_F factors use the 2phi2 closed form.
template <Scalar S>
TruncatedSeries<S> lucas_genfunc_closed_split(const S& x, const S& s, const PQParams<S>& params,
                                              int order = kDefaultSeriesOrder) {
  detail::require_order(order);
  const S& p = params.p();
  const auto head = fib_genfunc_closed(x, s, params, order + 1);
  const auto tail = fib_genfunc_closed(x, s / (p * p), params, order);
  std::vector<S> cs;
  for (int m = 0; m <= order; ++m) {
    cs.push_back(head.coeff(m + 1) + (m >= 1 ? S(s / p * tail.coeff(m - 1)) : S(0)));
  }
  return TruncatedSeries<S>(std::move(cs), order);
}

/// The number generating functions: the closed forms at x = s = 1.
template <Scalar S>
TruncatedSeries<S> number_genfunc(Family family, const PQParams<S>& params, int order = kDefaultSeriesOrder) {
  return family == Family::fibonacci ? fib_genfunc_closed(S(1), S(1), params, order)
                                     : lucas_genfunc_closed(S(1), S(1), params, order);
}

/// q-generating function t/(1 - x t) * 1phi1(q; q x t | q; -q s t^2),
/// evaluated by running the general series evaluator with truncated
/// series as its scalar field (p = 1).
template <Scalar S>
TruncatedSeries<S> q_fib_genfunc_1phi1(const S& x, const S& s, const S& q, int order = kDefaultSeriesOrder) {
  detail::require_order(order);
  using T = TruncatedSeries<S>;
  PQParams<T> params(T(S(1)), T(q));
  HypergeometricSpec<T> spec{{ParamPair<T>::explicit_pair(T(S(1)), T(q))},
                             {ParamPair<T>::explicit_pair(T(S(1)), T(std::vector<S>{S(0), q * x}, order))},
                             params};
  const T z(std::vector<S>{S(0), S(0), -q * s}, order);
  SeriesControl ctrl;
  ctrl.max_terms = order + 2;
  const T phi = evaluate_rphi_s(spec, z, ctrl);
  return (T::geometric(x, order).shifted(1) * phi).truncated(order);
}

/// Numeric value of f_F or f_L at a concrete t by summing the definitional
/// series until the partial sum changes by less than `tolerance`
/// (relative) for five consecutive terms.
template <Scalar S>
S evaluate_genfunc_numeric(Family family, const S& x, const S& s, const PQParams<S>& params, const S& t,
                           double tolerance = 1e-14, int max_terms = 2000) {
  using std::abs;
  BinomialTable<S> B(params);
  const S inv_p = S(1) / params.p();
  S sum(0);
  S shift(1);
  S t_pow(1);
  int quiet = 0;
  for (int n = 0; n < max_terms; ++n) {
    const S arg = s * shift;
    auto poly = family == Family::fibonacci ? detail::fibonacci_poly(n, arg, B) : detail::lucas_poly(n, arg, B);
    const S term = poly.evaluate(x) * t_pow;
    const S next = sum + term;
    if (abs(next - sum) <= S(tolerance) * abs(next)) {
      if (++quiet >= 5) return next;
    } else {
      quiet = 0;
    }
    sum = next;
    shift = shift * inv_p;
    t_pow = t_pow * t;
  }
  throw convergence_error("evaluate_genfunc_numeric: no convergence within " + std::to_string(max_terms) + " terms");
}

}  // namespace pqfib
