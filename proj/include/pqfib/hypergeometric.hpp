#pragma once

// The (p,q)-hypergeometric series
//
//   rphi_s = sum_n  prod_i ((a_i,b_i);(p,q))_n / prod_j ((c_j,d_j);(p,q))_n
//                   * [(-1)^n (q/p)^{n(n-1)/2}]^{1+s-r} / ((p,q);(p,q))_n * z^n
//
// and the terminating representations of the deformed polynomials built
// on it.

#include <cmath>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pqfib/polynomials.hpp"
#include "pqfib/pq_arithmetic.hpp"
#include "pqfib/scalar.hpp"
#include "pqfib/series.hpp"

namespace pqfib {

/// One entry of a parameter list: either an explicit pair (a, b), giving
/// the factor ((a,b);(p,q))_n, or a unit placeholder that contributes 1 to
/// every term but still counts toward r or s in the prefactor exponent.
template <Scalar S>
class ParamPair {
 public:
  static ParamPair explicit_pair(S a, S b) { return ParamPair(std::make_pair(std::move(a), std::move(b))); }
  static ParamPair unit() { return ParamPair(std::nullopt); }

  bool is_placeholder() const { return !pair_.has_value(); }
  const S& a() const { return pair_->first; }
  const S& b() const { return pair_->second; }

  /// a p^k - b q^k given p^k and q^k.
  S factor(const S& pk, const S& qk) const { return is_placeholder() ? S(1) : a() * pk - b() * qk; }

  std::string describe() const {
    if (is_placeholder()) return "0";
    std::ostringstream os;
    os << "(" << a() << ", " << b() << ")";
    return os.str();
  }

 private:
  explicit ParamPair(std::optional<std::pair<S, S>> p) : pair_(std::move(p)) {}
  std::optional<std::pair<S, S>> pair_;
};

template <Scalar S>
struct HypergeometricSpec {
  std::vector<ParamPair<S>> numerator;
  std::vector<ParamPair<S>> denominator;
  PQParams<S> params;

  int r() const { return static_cast<int>(numerator.size()); }
  int s() const { return static_cast<int>(denominator.size()); }
  int prefactor_exponent() const { return 1 + s() - r(); }
};

enum class SeriesMode { exact_terminating, numeric_truncated };

struct SeriesControl {
  int max_terms = 1000;
  /// numeric_truncated stops once |term| <= tolerance * |partial sum|.
  long double relative_tolerance = 0.0L;
  SeriesMode mode = SeriesMode::exact_terminating;
};

template <Scalar S>
struct SeriesEvaluation {
  S value;
  int terms = 0;           // number of terms summed, index 0 included
  bool terminated = false;  // a numerator factor (or z) annihilated the tail
};

namespace detail {

template <class S>
constexpr bool is_floating_v = std::numeric_limits<S>::is_specialized && !std::numeric_limits<S>::is_exact;

template <Scalar S>
bool factor_vanishes(const ParamPair<S>& pair, const S& f, const S& pk, const S& qk, bool numeric) {
  if (pqfib::is_zero(f)) return true;
  if constexpr (is_floating_v<S>) {
    if (numeric) {
      using std::abs;
      const S scale = abs(pair.a() * pk) + abs(pair.b() * qk);
      return abs(f) <= S(64) * std::numeric_limits<S>::epsilon() * scale;
    }
  }
  return false;
}

}  // namespace detail

/// Sums the series term by term, each term obtained from the previous one
/// by multiplying in one new factor per pair.
///
/// A numerator factor vanishing at index j ends the series after j + 1
/// terms; this is checked before the denominators, so a simultaneous
/// numerator/denominator zero terminates instead of raising.  In numeric
/// mode a factor cancelling to rounding level counts as vanishing.
template <Scalar S>
SeriesEvaluation<S> evaluate_rphi_s_detailed(const HypergeometricSpec<S>& spec, const S& z, const SeriesControl& ctrl) {
  const bool numeric = ctrl.mode == SeriesMode::numeric_truncated;
  if constexpr (!detail::is_floating_v<S>) {
    if (numeric) throw std::invalid_argument("evaluate_rphi_s: numeric mode needs a floating scalar type");
  }
  const S& p = spec.params.p();
  const S& q = spec.params.q();
  const int e = spec.prefactor_exponent();

  SeriesEvaluation<S> out{S(1), 1, false};
  S term(1);
  S pk(1);
  S qk(1);
  for (int j = 0;; ++j) {
    S ratio(1);
    for (const auto& pair : spec.numerator) {
      if (pair.is_placeholder()) continue;
      const S f = pair.factor(pk, qk);
      if (detail::factor_vanishes(pair, f, pk, qk, numeric)) {
        out.terminated = true;
        return out;
      }
      ratio = ratio * f;
    }
    if (out.terms >= ctrl.max_terms) break;
    for (std::size_t i = 0; i < spec.denominator.size(); ++i) {
      const auto& pair = spec.denominator[i];
      if (pair.is_placeholder()) continue;
      const S f = pair.factor(pk, qk);
      if (pqfib::is_zero(f)) {
        throw domain_error("evaluate_rphi_s: denominator pair #" + std::to_string(i) + " " + pair.describe() +
                           " vanishes at index " + std::to_string(j));
      }
      ratio = ratio / f;
    }
    const S base = p * pk - q * qk;
    if (pqfib::is_zero(base)) {
      throw domain_error("evaluate_rphi_s: ((p,q);(p,q)) vanishes at index " + std::to_string(j));
    }
    // [(-1)^{j+1} (q/p)^{C(j+1,2)}] / [(-1)^j (q/p)^{C(j,2)}] = -(q/p)^j
    const S sign_ratio = -(qk / pk);
    term = term * ratio * power(sign_ratio, e) / base * z;
    if (pqfib::is_zero(term)) {
      out.terminated = true;
      return out;
    }
    out.value = out.value + term;
    ++out.terms;
    if constexpr (detail::is_floating_v<S>) {
      if (numeric) {
        using std::abs;
        if (abs(term) <= S(ctrl.relative_tolerance) * abs(out.value)) return out;
      }
    }
    pk = pk * p;
    qk = qk * q;
  }
  if (numeric) {
    throw convergence_error("evaluate_rphi_s: no convergence within " + std::to_string(ctrl.max_terms) + " terms");
  }
  throw convergence_error("evaluate_rphi_s: series did not terminate within " + std::to_string(ctrl.max_terms) +
                          " terms");
}

template <Scalar S>
S evaluate_rphi_s(const HypergeometricSpec<S>& spec, const S& z, const SeriesControl& ctrl) {
  return evaluate_rphi_s_detailed(spec, z, ctrl).value;
}

/// Default control: exact termination for exact scalars, numeric for
/// floating types with a tolerance a few ulps above machine epsilon.
template <Scalar S>
SeriesControl default_control() {
  SeriesControl c;
  if constexpr (detail::is_floating_v<S>) {
    c.mode = SeriesMode::numeric_truncated;
    c.relative_tolerance = static_cast<long double>(std::numeric_limits<S>::epsilon()) * 16.0L;
    if (c.relative_tolerance == 0.0L) c.relative_tolerance = std::numeric_limits<long double>::min();
  }
  return c;
}

/// sqrt(p), sqrt(q) alongside the parameters; half-integer powers
/// p^{m/2} are sqrt(p)^m.
template <Scalar S>
struct RootParams {
  PQParams<S> params;
  S sqrt_p;
  S sqrt_q;

  S half_power_p(long long m) const { return power(sqrt_p, m); }
  S half_power_q(long long m) const { return power(sqrt_q, m); }
};

/// Throws domain_error when sqrt(p) or sqrt(q) is not representable (for
/// Rational: not a perfect square; for floating types: negative).
template <Scalar S>
RootParams<S> root_params(const PQParams<S>& params) {
  auto sp = square_root(params.p());
  auto sq = square_root(params.q());
  if (!sp || !sq) {
    throw domain_error("hypergeometric representation: sqrt(p) and sqrt(q) must be representable in the scalar type");
  }
  return {params, *sp, *sq};
}

/// A representation value = prefactor * rphi_s(spec; argument).
template <Scalar S>
struct Representation {
  HypergeometricSpec<S> spec;
  S argument;
  S prefactor;

  SeriesEvaluation<S> evaluate_detailed(const SeriesControl& ctrl = default_control<S>()) const {
    auto r = evaluate_rphi_s_detailed(spec, argument, ctrl);
    r.value = prefactor * r.value;
    return r;
  }
  S evaluate(const SeriesControl& ctrl = default_control<S>()) const { return evaluate_detailed(ctrl).value; }
};

namespace detail {

// (p^{-n/2}, q^{-n/2}), (p^{(1-n)/2}, q^{(1-n)/2}), (p^{-n/2}, -q^{-n/2}), (p^{(1-n)/2}, -q^{(1-n)/2})
template <Scalar S>
std::vector<ParamPair<S>> quadratic_split_pairs(int n, const RootParams<S>& roots) {
  const S pa = roots.half_power_p(-n);
  const S qa = roots.half_power_q(-n);
  const S pb = roots.half_power_p(1 - n);
  const S qb = roots.half_power_q(1 - n);
  return {ParamPair<S>::explicit_pair(pa, qa), ParamPair<S>::explicit_pair(pb, qb),
          ParamPair<S>::explicit_pair(pa, -qa), ParamPair<S>::explicit_pair(pb, -qb)};
}

template <Scalar S>
void require_nonzero_x(const S& x) {
  if (pqfib::is_zero(x)) throw domain_error("hypergeometric representation: x must be nonzero");
}

template <Scalar S>
Representation<S> eight_phi_five(Family family, int n, const S& x, const S& s, const RootParams<S>& roots) {
  require_nonnegative(n, "8phi5 representation");
  require_nonzero_x(x);
  const auto& pr = roots.params;
  const S& p = pr.p();
  const S& q = pr.q();
  auto num = quadratic_split_pairs(n, roots);
  for (int i = 0; i < 4; ++i) num.push_back(ParamPair<S>::unit());
  const int shift = family == Family::fibonacci ? -n : 1 - n;
  std::vector<ParamPair<S>> den{ParamPair<S>::explicit_pair(power(p, shift), power(q, shift))};
  for (int i = 0; i < 4; ++i) den.push_back(ParamPair<S>::explicit_pair(p, S(0)));
  const S arg = -s * power(q, n) * power(p, 4 + n) / (x * x);
  return {HypergeometricSpec<S>{std::move(num), std::move(den), pr}, arg, power(x, n)};
}

template <Scalar S>
Representation<S> four_phi_three(Family family, int n, const S& x, const S& s, const RootParams<S>& roots) {
  require_nonnegative(n, "4phi3 representation");
  require_nonzero_x(x);
  const auto& pr = roots.params;
  const S& p = pr.p();
  const S& q = pr.q();
  auto num = quadratic_split_pairs(n, roots);
  const int shift = family == Family::fibonacci ? -n : 1 - n;
  std::vector<ParamPair<S>> den{ParamPair<S>::explicit_pair(power(p, shift), power(q, shift)), ParamPair<S>::unit(),
                                ParamPair<S>::unit()};
  const S arg = family == Family::fibonacci ? S(-s / (x * x)) : S(-s * p * q / (x * x));
  return {HypergeometricSpec<S>{std::move(num), std::move(den), pr}, arg, power(x, n)};
}

template <Scalar S>
Representation<S> four_phi_one(Family family, int n, const S& x, const S& s, const S& q) {
  require_nonnegative(n, "4phi1 representation");
  require_nonzero_x(x);
  auto sq = square_root(q);
  if (!sq) throw domain_error("q-limit representation: sqrt(q) must be representable in the scalar type");
  PQParams<S> params(S(1), q);
  RootParams<S> roots{params, S(1), *sq};
  auto num = quadratic_split_pairs(n, roots);
  const int shift = family == Family::fibonacci ? -n : 1 - n;
  std::vector<ParamPair<S>> den{ParamPair<S>::explicit_pair(S(1), power(q, shift))};
  const S arg = -power(q, n) * s / (x * x);
  return {HypergeometricSpec<S>{std::move(num), std::move(den), params}, arg, power(x, n)};
}

}  // namespace detail

/// x^n 8phi5(...; -s q^n p^{4+n} / x^2) = F_{n+1}(x, s | p, q).
template <Scalar S>
Representation<S> fibonacci_8phi5(int n, const S& x, const S& s, const PQParams<S>& params) {
  return detail::eight_phi_five(Family::fibonacci, n, x, s, root_params(params));
}

/// The same with denominator pair (p^{1-n}, q^{1-n}): L_n(x, s | p, q).
template <Scalar S>
Representation<S> lucas_8phi5(int n, const S& x, const S& s, const PQParams<S>& params) {
  return detail::eight_phi_five(Family::lucas, n, x, s, root_params(params));
}

/// x^n 4phi3(...; (p^{-n}, q^{-n}), 0, 0; -s/x^2) = F_{n+1}(x, s | p^-1, q^-1).
template <Scalar S>
Representation<S> inverse_fibonacci_4phi3(int n, const S& x, const S& s, const PQParams<S>& params) {
  return detail::four_phi_three(Family::fibonacci, n, x, s, root_params(params));
}

/// x^n 4phi3(...; (p^{1-n}, q^{1-n}), 0, 0; -s p q/x^2) = L_n(x, s | p^-1, q^-1).
template <Scalar S>
Representation<S> inverse_lucas_4phi3(int n, const S& x, const S& s, const PQParams<S>& params) {
  return detail::four_phi_three(Family::lucas, n, x, s, root_params(params));
}

/// F_{n+1}(x, s | p, q) evaluated through its 8phi5 representation.
template <Scalar S>
S fibonacci_as_hypergeometric(int n, const S& x, const S& s, const PQParams<S>& params) {
  return fibonacci_8phi5(n, x, s, params).evaluate();
}

/// L_n(x, s | p, q) evaluated through its 8phi5 representation.
template <Scalar S>
S lucas_as_hypergeometric(int n, const S& x, const S& s, const PQParams<S>& params) {
  return lucas_8phi5(n, x, s, params).evaluate();
}

template <Scalar S>
S inverse_fibonacci_as_4phi3(int n, const S& x, const S& s, const PQParams<S>& params) {
  return inverse_fibonacci_4phi3(n, x, s, params).evaluate();
}

template <Scalar S>
S inverse_lucas_as_4phi3(int n, const S& x, const S& s, const PQParams<S>& params) {
  return inverse_lucas_4phi3(n, x, s, params).evaluate();
}

/// The q-forms (p = 1): x^n 4phi1(q^{-n/2}, q^{(1-n)/2}, -q^{-n/2}, -q^{(1-n)/2}; q^{-n} | q; -q^n s/x^2)
/// for F_{n+1}(x, s | q); the Lucas form has q^{1-n} in the denominator.
template <Scalar S>
Representation<S> q_fibonacci_4phi1(int n, const S& x, const S& s, const S& q) {
  return detail::four_phi_one(Family::fibonacci, n, x, s, q);
}

template <Scalar S>
Representation<S> q_lucas_4phi1(int n, const S& x, const S& s, const S& q) {
  return detail::four_phi_one(Family::lucas, n, x, s, q);
}

/// Value of the q-limit representation: F_{n+1}(x, s | q) or L_n(x, s | q).
template <Scalar S>
S q_limit_representation(Family family, int n, const S& x, const S& s, const S& q) {
  return detail::four_phi_one(family, n, x, s, q).evaluate();
}

}  // namespace pqfib
