#pragma once

// (p,q)-calculus primitives: numbers, shifted factorials, binomial
// coefficients and the Jackson derivative, all evaluated at concrete
// parameter values.

#include <algorithm>
#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "pqfib/polynomial.hpp"
#include "pqfib/scalar.hpp"

namespace pqfib {

/// The deformation parameters.  Both must be nonzero; p == q is allowed.
template <Scalar S>
class PQParams {
 public:
  PQParams(S p, S q) : p_(std::move(p)), q_(std::move(q)) {
    if (pqfib::is_zero(p_) || pqfib::is_zero(q_)) {
      throw domain_error("PQParams: p and q must be nonzero");
    }
  }

  const S& p() const { return p_; }
  const S& q() const { return q_; }
  S pq() const { return p_ * q_; }

  /// (p^-1, q^-1).
  PQParams inverse() const { return PQParams(S(1) / p_, S(1) / q_); }

  friend bool operator==(const PQParams& a, const PQParams& b) { return a.p_ == b.p_ && a.q_ == b.q_; }

 private:
  S p_;
  S q_;
};

/// [n]_{p,q} = sum_{k<n} p^{n-1-k} q^k.
template <Scalar S>
S pq_number(int n, const PQParams<S>& params) {
  S sum(0);
  S pp = power(params.p(), n - 1 < 0 ? 0 : n - 1);
  S inv_p = S(1) / params.p();
  S qq(1);
  for (int k = 0; k < n; ++k) {
    sum = sum + pp * qq;
    pp = pp * inv_p;
    qq = qq * params.q();
  }
  return sum;
}

/// ((a,b);(p,q))_n = prod_{k<n} (a p^k - b q^k); 1 for n = 0.
template <Scalar S>
S pq_shifted_factorial(const S& a, const S& b, const PQParams<S>& params, int n) {
  S prod(1);
  S pk(1);
  S qk(1);
  for (int k = 0; k < n; ++k) {
    prod = prod * (a * pk - b * qk);
    pk = pk * params.p();
    qk = qk * params.q();
  }
  return prod;
}

/// Pascal-style table of (p,q)-binomial coefficients built with
/// [m;k] = q^k [m-1;k] + p^{m-k} [m-1;k-1].  Division-free, so it is valid
/// at p == q where the factorial quotient is 0/0.  Rows are grown on
/// demand; the table is not thread-safe.
template <Scalar S>
class BinomialTable {
 public:
  explicit BinomialTable(PQParams<S> params) : params_(std::move(params)) {
    rows_.push_back({S(1)});
    p_pow_.push_back(S(1));
    q_pow_.push_back(S(1));
  }

  const PQParams<S>& params() const { return params_; }

  /// Zero outside 0 <= k <= n (including n < 0).
  S operator()(int n, int k) {
    if (n < 0 || k < 0 || k > n) return S(0);
    extend(n);
    return rows_[n][k];
  }

  /// p^i for 0 <= i; cached.
  const S& p_pow(int i) {
    extend_powers(i);
    return p_pow_[i];
  }
  const S& q_pow(int i) {
    extend_powers(i);
    return q_pow_[i];
  }

 private:
  void extend_powers(int i) {
    while (static_cast<int>(p_pow_.size()) <= i) {
      p_pow_.push_back(p_pow_.back() * params_.p());
      q_pow_.push_back(q_pow_.back() * params_.q());
    }
  }

  void extend(int n) {
    extend_powers(n);
    while (static_cast<int>(rows_.size()) <= n) {
      const int m = static_cast<int>(rows_.size());
      const auto& prev = rows_.back();
      std::vector<S> row(m + 1, S(0));
      row[0] = S(1);
      row[m] = S(1);
      for (int k = 1; k < m; ++k) {
        row[k] = q_pow_[k] * prev[k] + p_pow_[m - k] * prev[k - 1];
      }
      rows_.push_back(std::move(row));
    }
  }

  PQParams<S> params_;
  std::vector<std::vector<S>> rows_;
  std::vector<S> p_pow_;
  std::vector<S> q_pow_;
};

/// [n choose k]_{p,q}; zero when k < 0 or k > n.
template <Scalar S>
S pq_binomial(int n, int k, const PQParams<S>& params) {
  if (n < 0 || k < 0 || k > n) return S(0);
  BinomialTable<S> table(params);
  return table(n, k);
}

/// D_{(p,q)} applied termwise: x^n -> [n]_{p,q} x^{n-1}.  Agrees with
/// (f(px) - f(qx)) / ((p - q) x) whenever p != q.
template <Scalar S>
XPolynomial<S> jackson_derivative(const XPolynomial<S>& f, const PQParams<S>& params) {
  if (f.degree() < 1) return {};
  std::vector<S> cs(f.coeffs().size() - 1, S(0));
  for (std::size_t i = 1; i < f.coeffs().size(); ++i) {
    cs[i - 1] = f.coeffs()[i] * pq_number(static_cast<int>(i), params);
  }
  return XPolynomial<S>(std::move(cs));
}

enum class BinomialIdentity {
  pascal_q,            // [n-k;k] = q^k [n-1-k;k] + p^{n-2k} [n-1-k;k-1]
  pascal_p,            // [n-k;k] = p^k [n-1-k;k] + q^{n-2k} [n-1-k;k-1]
  mixed,               // [n-k;k] = p^k [n-1-k;k] + p^{n-k} q^{-k} [n-1-k;k-1]
                       //           - (p^{n-2k+1} - q^{n-2k+1}) q^{-k} [n-k;k-1]
  factorial_quotient,  // table value equals the shifted-factorial quotient
};

inline std::string_view identity_name(BinomialIdentity id) {
  switch (id) {
    case BinomialIdentity::pascal_q: return "pascal_q";
    case BinomialIdentity::pascal_p: return "pascal_p";
    case BinomialIdentity::mixed: return "mixed";
    case BinomialIdentity::factorial_quotient: return "factorial_quotient";
  }
  return "unknown";
}

inline std::string_view identity_statement(BinomialIdentity id) {
  switch (id) {
    case BinomialIdentity::pascal_q:
      return "[n-k;k] = q^k [n-1-k;k] + p^(n-2k) [n-1-k;k-1]";
    case BinomialIdentity::pascal_p:
      return "[n-k;k] = p^k [n-1-k;k] + q^(n-2k) [n-1-k;k-1]";
    case BinomialIdentity::mixed:
      return "[n-k;k] = p^k [n-1-k;k] + p^(n-k) q^(-k) [n-1-k;k-1] - (p^(n-2k+1) - q^(n-2k+1)) q^(-k) [n-k;k-1]";
    case BinomialIdentity::factorial_quotient:
      return "[m;k] = ((p,q);(p,q))_m / (((p,q);(p,q))_k ((p,q);(p,q))_(m-k))";
  }
  return "";
}

struct IdentityFailure {
  int n;
  int k;
  BinomialIdentity identity;
};

struct IdentityReport {
  std::array<std::size_t, 4> cases{};  // indexed by BinomialIdentity
  std::vector<IdentityFailure> failures;

  std::size_t checks() const { return cases[0] + cases[1] + cases[2] + cases[3]; }
  std::size_t failures_of(BinomialIdentity id) const {
    return static_cast<std::size_t>(
        std::count_if(failures.begin(), failures.end(), [id](const IdentityFailure& f) { return f.identity == id; }));
  }
  bool passed() const { return failures.empty(); }
};

/// Checks the three binomial recursions for every 1 <= n <= n_max and
/// 0 <= 2k <= n (at n = 0 the right-hand sides reference row -1, which the
/// zero-outside-range convention leaves empty, so n = 0 is not a case).
/// The recursion table is additionally compared with the factorial
/// quotient wherever the quotient is nonsingular, so pascal_q is not
/// merely checking the table against its own construction.
template <Scalar S>
IdentityReport verify_binomial_identities(int n_max, const PQParams<S>& params) {
  IdentityReport report;
  BinomialTable<S> B(params);
  const S& p = params.p();
  const S& q = params.q();

  for (int n = 1; n <= n_max; ++n) {
    for (int k = 0; 2 * k <= n; ++k) {
      const S lhs = B(n - k, k);
      const S inv_qk = S(1) / B.q_pow(k);
      auto check = [&](BinomialIdentity id, const S& rhs) {
        ++report.cases[static_cast<std::size_t>(id)];
        if (!(lhs == rhs)) report.failures.push_back({n, k, id});
      };
      check(BinomialIdentity::pascal_q, B.q_pow(k) * B(n - 1 - k, k) + B.p_pow(n - 2 * k) * B(n - 1 - k, k - 1));
      check(BinomialIdentity::pascal_p, B.p_pow(k) * B(n - 1 - k, k) + B.q_pow(n - 2 * k) * B(n - 1 - k, k - 1));
      check(BinomialIdentity::mixed,
            B.p_pow(k) * B(n - 1 - k, k) + B.p_pow(n - k) * inv_qk * B(n - 1 - k, k - 1) -
                (p * B.p_pow(n - 2 * k) - q * B.q_pow(n - 2 * k)) * inv_qk * B(n - k, k - 1));
    }
  }

  // Factorial quotient cross-check over the full triangle.
  const S one(1);
  std::vector<S> fact{one};
  for (int m = 1; m <= n_max; ++m) {
    fact.push_back(fact.back() * (B.p_pow(m) - B.q_pow(m)));
  }
  for (int m = 0; m <= n_max; ++m) {
    if (pqfib::is_zero(fact[m])) break;
    for (int k = 0; k <= m; ++k) {
      ++report.cases[static_cast<std::size_t>(BinomialIdentity::factorial_quotient)];
      if (!(B(m, k) == fact[m] / (fact[k] * fact[m - k]))) {
        report.failures.push_back({m, k, BinomialIdentity::factorial_quotient});
      }
    }
  }
  return report;
}

}  // namespace pqfib
