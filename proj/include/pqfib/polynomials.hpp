#pragma once

// (p,q)-deformed Fibonacci and Lucas polynomials.
//
// Index convention: the `n` of fibonacci_poly / lucas_poly is the
// subscript, F_n and L_n.  The coefficient functions keep the natural
// indexing of the sums: fib_coefficient(n, k) is the coefficient of
// s^k x^{n-2k} in F_{n+1}, lucas_coefficient(n, k) that of s^k x^{n-2k}
// in L_n.

#include <map>
#include <stdexcept>
#include <tuple>
#include <utility>

#include "pqfib/polynomial.hpp"
#include "pqfib/pq_arithmetic.hpp"
#include "pqfib/scalar.hpp"

namespace pqfib {

enum class Family { fibonacci, lucas };

inline constexpr std::string_view family_name(Family f) {
  return f == Family::fibonacci ? "fibonacci" : "lucas";
}

/// The three three-term recursions for F_{n+1}(x, s):
///   q_shift:    x F_n(x, qs)  + s q p^{n-1} F_{n-1}(x, q p^{-1} s)
///   p_shift:    x F_n(x, ps)  + s p q^{n-1} F_{n-1}(x, p q^{-1} s)
///   derivative: (x + s p (q - p) D_{(p,q)}) F_n(x, ps) + s p^n F_{n-1}(x, s)
enum class FibonacciRecursion { q_shift, p_shift, derivative };

/// Assemblies of L_n from Fibonacci polynomials:
///   direct:   L_n(x, s)       = F_{n+1}(x, s/p) + s p^{n-1} F_{n-1}(x, s/p)
///   rescaled: L_n(x, s q / p) = F_{n+1}(x, s/p) + s p^{-1} q^n F_{n-1}(x, s/p)
enum class LucasAssembly { direct, rescaled };

template <Scalar S>
struct DeformedPolynomial {
  Family family;
  int n;
  PQParams<S> params;
  S s;
  XPolynomial<S> poly;
};

namespace detail {

inline long long binom2(long long k) { return k * (k - 1) / 2; }

// [n]_{p,q} / [n-k]_{p,q} * [n-k;k]_{p,q}, with the k = 0 ratio fixed to 1.
// Falls back to the division-free form p^k [n-k;k] + q^{n-k} [n-1-k;k-1]
// when [n-k]_{p,q} vanishes.
template <Scalar S>
S lucas_ratio_binomial(int n, int k, BinomialTable<S>& B) {
  if (k == 0) return S(1);
  const auto& params = B.params();
  const S den = pq_number(n - k, params);
  if (!pqfib::is_zero(den)) {
    return pq_number(n, params) / den * B(n - k, k);
  }
  return B.p_pow(k) * B(n - k, k) + B.q_pow(n - k) * B(n - 1 - k, k - 1);
}

template <Scalar S>
S fib_coefficient(int n, int k, BinomialTable<S>& B) {
  if (k < 0 || 2 * k > n) return S(0);
  return power(B.params().pq(), static_cast<long long>(k) * (k + 1) / 2) * B(n - k, k);
}

template <Scalar S>
S lucas_coefficient(int n, int k, BinomialTable<S>& B) {
  if (k < 0 || 2 * k > n) return S(0);
  return power(B.params().pq(), binom2(k)) * lucas_ratio_binomial(n, k, B);
}

template <Scalar S>
XPolynomial<S> fibonacci_poly(int n, const S& s, BinomialTable<S>& B) {
  if (n <= 0) return {};
  const int m = n - 1;
  std::vector<S> cs(m + 1, S(0));
  S sk(1);
  for (int k = 0; 2 * k <= m; ++k) {
    cs[m - 2 * k] = fib_coefficient(m, k, B) * sk;
    sk = sk * s;
  }
  return XPolynomial<S>(std::move(cs));
}

template <Scalar S>
XPolynomial<S> lucas_poly(int n, const S& s, BinomialTable<S>& B) {
  std::vector<S> cs(n + 1, S(0));
  S sk(1);
  for (int k = 0; 2 * k <= n; ++k) {
    cs[n - 2 * k] = lucas_coefficient(n, k, B) * sk;
    sk = sk * s;
  }
  return XPolynomial<S>(std::move(cs));
}

}  // namespace detail

inline void require_nonnegative(int n, const char* what) {
  if (n < 0) throw std::invalid_argument(std::string(what) + ": n must be nonnegative");
}

/// c^{(F)}_{n,k}(p,q) = (pq)^{k(k+1)/2} [n-k;k]_{p,q}, zero outside 0 <= 2k <= n.
template <Scalar S>
S fib_coefficient(int n, int k, const PQParams<S>& params) {
  BinomialTable<S> B(params);
  return detail::fib_coefficient(n, k, B);
}

/// c^{(L)}_{n,k}(p,q) = (pq)^{k(k-1)/2} [n]/[n-k] [n-k;k], zero outside 0 <= 2k <= n.
template <Scalar S>
S lucas_coefficient(int n, int k, const PQParams<S>& params) {
  BinomialTable<S> B(params);
  return detail::lucas_coefficient(n, k, B);
}

/// F_n(x, s | p, q) by the defining sum.  F_0 = 0, F_1 = 1.
template <Scalar S>
XPolynomial<S> fibonacci_poly(int n, const PQParams<S>& params, const S& s) {
  require_nonnegative(n, "fibonacci_poly");
  BinomialTable<S> B(params);
  return detail::fibonacci_poly(n, s, B);
}

/// L_n(x, s | p, q) by the defining sum.  L_0 = 1, L_1 = x.
template <Scalar S>
XPolynomial<S> lucas_poly(int n, const PQParams<S>& params, const S& s) {
  require_nonnegative(n, "lucas_poly");
  BinomialTable<S> B(params);
  return detail::lucas_poly(n, s, B);
}

template <Scalar S>
DeformedPolynomial<S> make_deformed(Family family, int n, const PQParams<S>& params, const S& s) {
  auto poly = family == Family::fibonacci ? fibonacci_poly(n, params, s) : lucas_poly(n, params, s);
  return {family, n, params, s, std::move(poly)};
}

/// F_n built purely from F_0 = 0, F_1 = 1 by one of the three recursions.
///
/// Each level asks for neighbours at rescaled s, so subproblems are keyed
/// by (level, a, b) with s_level = s * p^a * q^b.
template <Scalar S>
XPolynomial<S> fibonacci_poly_recursive(int n, const PQParams<S>& params, const S& s,
                                        FibonacciRecursion variant) {
  require_nonnegative(n, "fibonacci_poly_recursive");
  using Key = std::tuple<int, int, int>;
  std::map<Key, XPolynomial<S>> memo;
  const S& p = params.p();
  const S& q = params.q();

  auto scaled_s = [&](int a, int b) { return s * power(p, a) * power(q, b); };

  auto solve = [&](auto&& self, int level, int a, int b) -> XPolynomial<S> {
    if (level == 0) return {};
    if (level == 1) return XPolynomial<S>::constant(S(1));
    const Key key{level, a, b};
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    const int m = level - 1;  // computing F_{m+1}
    const S sigma = scaled_s(a, b);
    XPolynomial<S> result;
    switch (variant) {
      case FibonacciRecursion::q_shift:
        result = self(self, m, a, b + 1).shifted(1) +
                 self(self, m - 1, a - 1, b + 1) * (sigma * q * power(p, m - 1));
        break;
      case FibonacciRecursion::p_shift:
        result = self(self, m, a + 1, b).shifted(1) +
                 self(self, m - 1, a + 1, b - 1) * (sigma * p * power(q, m - 1));
        break;
      case FibonacciRecursion::derivative: {
        const XPolynomial<S> prev = self(self, m, a + 1, b);
        result = prev.shifted(1) + jackson_derivative(prev, params) * (sigma * p * (q - p)) +
                 self(self, m - 1, a, b) * (sigma * power(p, m));
        break;
      }
    }
    memo.emplace(key, result);
    return result;
  };
  return solve(solve, n, 0, 0);
}

/// L_n(x, s) assembled from Fibonacci polynomials (n >= 1).  The rescaled
/// relation is evaluated at s' = s p / q, so both variants return L_n(x, s).
template <Scalar S>
XPolynomial<S> lucas_from_fibonacci(int n, const PQParams<S>& params, const S& s, LucasAssembly variant) {
  if (n < 1) throw std::invalid_argument("lucas_from_fibonacci: n must be >= 1");
  const S& p = params.p();
  const S& q = params.q();
  BinomialTable<S> B(params);
  if (variant == LucasAssembly::direct) {
    const S arg = s / p;
    return detail::fibonacci_poly(n + 1, arg, B) + detail::fibonacci_poly(n - 1, arg, B) * (s * power(p, n - 1));
  }
  const S sp = s * p / q;
  const S arg = sp / p;
  return detail::fibonacci_poly(n + 1, arg, B) +
         detail::fibonacci_poly(n - 1, arg, B) * (sp / p * power(q, n));
}

/// The (p^-1, q^-1) family built through the coefficient maps
///   c^{(F)}_{n,k}(p^-1,q^-1) = (pq)^{-k(n+1-k)} c^{(F)}_{n,k}(p,q),
///   c^{(L)}_{n,k}(p^-1,q^-1) = (pq)^{k(k-n)}    c^{(L)}_{n,k}(p,q).
/// `n` is the subscript, as for fibonacci_poly / lucas_poly.
template <Scalar S>
XPolynomial<S> inverse_param_poly(Family family, int n, const PQParams<S>& params, const S& s) {
  require_nonnegative(n, "inverse_param_poly");
  BinomialTable<S> B(params);
  const S pq = params.pq();
  if (family == Family::fibonacci) {
    if (n == 0) return {};
    const int m = n - 1;
    std::vector<S> cs(m + 1, S(0));
    S sk(1);
    for (int k = 0; 2 * k <= m; ++k) {
      cs[m - 2 * k] = power(pq, -static_cast<long long>(k) * (m + 1 - k)) * detail::fib_coefficient(m, k, B) * sk;
      sk = sk * s;
    }
    return XPolynomial<S>(std::move(cs));
  }
  std::vector<S> cs(n + 1, S(0));
  S sk(1);
  for (int k = 0; 2 * k <= n; ++k) {
    cs[n - 2 * k] = power(pq, static_cast<long long>(k) * (k - n)) * detail::lucas_coefficient(n, k, B) * sk;
    sk = sk * s;
  }
  return XPolynomial<S>(std::move(cs));
}

/// F_n(1, 1 | p, q).
template <Scalar S>
S fibonacci_number(int n, const PQParams<S>& params) {
  return fibonacci_poly(n, params, S(1)).evaluate(S(1));
}

/// L_n(1, 1 | p, q).
template <Scalar S>
S lucas_number(int n, const PQParams<S>& params) {
  return lucas_poly(n, params, S(1)).evaluate(S(1));
}

inline BigInt classical_binomial(int n, int k) {
  if (k < 0 || k > n) return BigInt(0);
  BigInt r(1);
  for (int i = 1; i <= k; ++i) {
    r = r * (n - k + i);
    r = r / i;
  }
  return r;
}

/// Closed binomial sums for the undeformed numbers:
///   F_n = 2^{1-n} sum_k C(n, 2k+1) 5^k,   L_n = 2^{1-n} sum_k C(n, 2k) 5^k.
/// The Lucas sum evaluates to 2 at n = 0, disagreeing with L_0 = 1, so it is
/// only offered for n >= 1.
inline Rational classical_number_formula(Family family, int n) {
  require_nonnegative(n, "classical_number_formula");
  if (family == Family::lucas && n < 1) {
    throw std::invalid_argument("classical_number_formula: Lucas closed form requires n >= 1");
  }
  const int offset = family == Family::fibonacci ? 1 : 0;
  BigInt sum(0);
  BigInt five_k(1);
  for (int k = 0; 2 * k + offset <= n; ++k) {
    sum += classical_binomial(n, 2 * k + offset) * five_k;
    five_k *= 5;
  }
  return Rational(sum) * power(Rational(2), 1 - n);
}

/// D_{(p,q)} L_n(x, s) == [n]_{p,q} F_n(x, s), exactly as written.  This
/// only holds when pq == 1 (or for n < 3); see derivative_relation_rescaled.
template <Scalar S>
bool check_derivative_relation(int n, const PQParams<S>& params, const S& s) {
  return jackson_derivative(lucas_poly(n, params, s), params) ==
         fibonacci_poly(n, params, s) * pq_number(n, params);
}

/// D_{(p,q)} L_n(x, s) == [n]_{p,q} F_n(x, s / (pq)), which holds for all
/// parameters: the x^{n-1-2k} coefficients on both sides reduce to
/// (pq)^{k(k-1)/2} [n] [n-1-k;k].
template <Scalar S>
bool derivative_relation_rescaled(int n, const PQParams<S>& params, const S& s) {
  return jackson_derivative(lucas_poly(n, params, s), params) ==
         fibonacci_poly(n, params, s / params.pq()) * pq_number(n, params);
}

}  // namespace pqfib
