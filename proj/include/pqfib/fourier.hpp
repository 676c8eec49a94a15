#pragma once

// Gaussian-windowed Fourier transforms of F_{n+1}(a e^{i kappa x}, s | p, q)
// and L_n(b e^{i kappa x}, s | p, q) under the constraint
// q = p^{-1} exp(-2 kappa^2), computed three ways: by quadrature, by the
// closed Gaussian-shift sum, and through the (p^-1, q^-1) family.

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "pqfib/gauss_hermite.hpp"
#include "pqfib/polynomials.hpp"

namespace pqfib {

inline constexpr int kDefaultQuadratureNodes = 128;

template <class Real = double>
struct FourierParams {
  Real p;
  Real kappa;
  Real amplitude;  // a for Fibonacci, b for Lucas
  Real s;
  int n;

  FourierParams(Real p_, Real kappa_, Real amplitude_, Real s_, int n_)
      : p(p_), kappa(kappa_), amplitude(amplitude_), s(s_), n(n_) {
    if (!(p > Real(0))) throw std::invalid_argument("FourierParams: p must be positive");
    if (kappa == Real(0)) throw std::invalid_argument("FourierParams: kappa must be nonzero");
    if (n < 0) throw std::invalid_argument("FourierParams: n must be nonnegative");
  }

  Real q() const {
    using std::exp;
    return exp(Real(-2) * kappa * kappa) / p;
  }
  PQParams<Real> params() const { return PQParams<Real>(p, q()); }
};

/// (1/sqrt(2 pi)) * integral g(x) e^{i x y - x^2/2} dx, via x = sqrt(2) u:
/// (1/sqrt(pi)) sum_j w_j g(sqrt(2) u_j) e^{i sqrt(2) u_j y}.
template <class Real, class G>
std::complex<Real> weighted_fourier_quadrature(G&& g, Real y, const QuadratureRule<Real>& rule) {
  using std::sqrt;
  const Real root2 = sqrt(Real(2));
  const Real pi = Real(3.14159265358979323846264338327950288419716939937510582097494459L);
  std::complex<Real> acc(0);
  for (std::size_t j = 0; j < rule.size(); ++j) {
    const Real x = root2 * rule.nodes[j];
    acc += rule.weights[j] * std::complex<Real>(g(x)) * std::polar(Real(1), x * y);
  }
  return acc / sqrt(pi);
}

namespace detail {

template <class Real>
XPolynomial<Real> transform_polynomial(Family family, const FourierParams<Real>& fp) {
  const auto params = fp.params();
  return family == Family::fibonacci ? fibonacci_poly(fp.n + 1, params, fp.s) : lucas_poly(fp.n, params, fp.s);
}

template <class Real>
std::complex<Real> transform_lhs(Family family, const FourierParams<Real>& fp, Real y, const QuadratureRule<Real>& rule) {
  const auto poly = transform_polynomial(family, fp);
  auto g = [&](Real x) {
    return poly.evaluate(std::complex<Real>(fp.amplitude) * std::polar(Real(1), fp.kappa * x));
  };
  return weighted_fourier_quadrature(g, y, rule);
}

// The polynomial is sum_m c_m X^m, each e^{i kappa m x} transforming to
// exp(-(kappa m + y)^2 / 2).
template <class Real>
std::complex<Real> transform_analytic(Family family, const FourierParams<Real>& fp, Real y) {
  using std::exp;
  const auto poly = transform_polynomial(family, fp);
  Real acc(0);
  Real a_pow(1);
  for (std::size_t m = 0; m < poly.coeffs().size(); ++m) {
    const Real shift = fp.kappa * Real(m) + y;
    acc += poly.coeffs()[m] * a_pow * exp(-shift * shift / Real(2));
    a_pow *= fp.amplitude;
  }
  return {acc, Real(0)};
}

template <class Real>
Real quarter_square_power(const FourierParams<Real>& fp) {
  using std::exp;
  using std::log;
  const Real n = Real(fp.n);
  return exp(n * n / Real(4) * log(fp.params().pq()));
}

template <class Real>
std::complex<Real> transform_rhs(Family family, const FourierParams<Real>& fp, Real y, Real s_rhs) {
  using std::exp;
  const int index = family == Family::fibonacci ? fp.n + 1 : fp.n;
  const auto poly = inverse_param_poly(family, index, fp.params(), s_rhs);
  const Real arg = fp.amplitude * exp(-fp.kappa * y);
  return {quarter_square_power(fp) * poly.evaluate(arg) * exp(-y * y / Real(2)), Real(0)};
}

}  // namespace detail

/// Quadrature of x -> F_{n+1}(a e^{i kappa x}, s | p, q).
template <class Real>
std::complex<Real> fibonacci_transform_lhs(const FourierParams<Real>& fp, Real y, const QuadratureRule<Real>& rule) {
  return detail::transform_lhs(Family::fibonacci, fp, y, rule);
}

/// sum_k c^{(F)}_{n,k} s^k a^{n-2k} exp(-(kappa (n-2k) + y)^2 / 2).
template <class Real>
std::complex<Real> fibonacci_transform_analytic(const FourierParams<Real>& fp, Real y) {
  return detail::transform_analytic(Family::fibonacci, fp, y);
}

/// (pq)^{n^2/4} F_{n+1}(a e^{-kappa y}, pq s | p^-1, q^-1) e^{-y^2/2}.
template <class Real>
std::complex<Real> fibonacci_transform_rhs(const FourierParams<Real>& fp, Real y) {
  return detail::transform_rhs(Family::fibonacci, fp, y, fp.params().pq() * fp.s);
}

/// Quadrature of x -> L_n(b e^{i kappa x}, s | p, q).
template <class Real>
std::complex<Real> lucas_transform_lhs(const FourierParams<Real>& fp, Real y, const QuadratureRule<Real>& rule) {
  return detail::transform_lhs(Family::lucas, fp, y, rule);
}

template <class Real>
std::complex<Real> lucas_transform_analytic(const FourierParams<Real>& fp, Real y) {
  return detail::transform_analytic(Family::lucas, fp, y);
}

/// (pq)^{n^2/4} L_n(b e^{-kappa y}, (pq)^{-1} s | p^-1, q^-1) e^{-y^2/2}.
///
/// Does not match the transform for n >= 2: the k-th term carries an
/// extra (pq)^{-k}.  lucas_transform_rhs_unscaled keeps s unchanged and
/// does match.
template <class Real>
std::complex<Real> lucas_transform_rhs(const FourierParams<Real>& fp, Real y) {
  return detail::transform_rhs(Family::lucas, fp, y, fp.s / fp.params().pq());
}

/// (pq)^{n^2/4} L_n(b e^{-kappa y}, s | p^-1, q^-1) e^{-y^2/2}.
template <class Real>
std::complex<Real> lucas_transform_rhs_unscaled(const FourierParams<Real>& fp, Real y) {
  return detail::transform_rhs(Family::lucas, fp, y, fp.s);
}

/// Which transform the outer y-integral runs over.
enum class RecoverySource { analytic_lhs, rhs };

/// (1/sqrt(2 pi)) * integral T(y) dy, where T is the transform of the
/// polynomial; this recovers F_{n+1}(a, s) or L_n(b, s).  The integrand
/// is written as [T(y) e^{y^2/2}] e^{-y^2/2} and handed to the same
/// Gauss-Hermite rule, the bracket being a polynomial in e^{-kappa y}.
/// With RecoverySource::rhs the bracket comes from the (p^-1, q^-1)
/// family (the unscaled Lucas form).
template <class Real>
std::complex<Real> recovery_double_integral(Family family, const FourierParams<Real>& fp,
                                            const QuadratureRule<Real>& rule,
                                            RecoverySource source = RecoverySource::analytic_lhs) {
  using std::exp;
  std::vector<Real> weights;  // bracket = sum_m weights[m] e^{-kappa m y}
  if (source == RecoverySource::analytic_lhs) {
    const auto poly = detail::transform_polynomial(family, fp);
    Real a_pow(1);
    for (std::size_t m = 0; m < poly.coeffs().size(); ++m) {
      const Real km = fp.kappa * Real(m);
      weights.push_back(poly.coeffs()[m] * a_pow * exp(-km * km / Real(2)));
      a_pow *= fp.amplitude;
    }
  } else {
    const int index = family == Family::fibonacci ? fp.n + 1 : fp.n;
    const Real s_rhs = family == Family::fibonacci ? fp.params().pq() * fp.s : fp.s;
    const auto poly = inverse_param_poly(family, index, fp.params(), s_rhs);
    const Real scale = detail::quarter_square_power(fp);
    Real a_pow(1);
    for (std::size_t m = 0; m < poly.coeffs().size(); ++m) {
      weights.push_back(scale * poly.coeffs()[m] * a_pow);
      a_pow *= fp.amplitude;
    }
  }
  auto bracket = [&](Real y) {
    Real acc(0);
    for (std::size_t m = 0; m < weights.size(); ++m) acc += weights[m] * exp(-fp.kappa * Real(m) * y);
    return acc;
  };
  return weighted_fourier_quadrature(bracket, Real(0), rule);
}

/// Direct value F_{n+1}(a, s | p, q) or L_n(b, s | p, q) at the derived q.
template <class Real>
Real transform_direct_value(Family family, const FourierParams<Real>& fp) {
  return detail::transform_polynomial(family, fp).evaluate(fp.amplitude);
}

/// 13 equally spaced points on [-3, 3].
template <class Real = double>
std::vector<Real> default_y_grid() {
  std::vector<Real> ys;
  for (int i = 0; i <= 12; ++i) ys.push_back(Real(-3) + Real(i) / Real(2));
  return ys;
}

}  // namespace pqfib
