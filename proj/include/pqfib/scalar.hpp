#pragma once

// Scalar carriers and the small set of generic helpers the rest of the
// library is written against.  Every algorithm is a template over a
// type modelling `Scalar`; the exact instantiation is `Rational`.

#include <cctype>
#include <cmath>
#include <concepts>
#include <cstdint>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/gmp.hpp>

namespace pqfib {

namespace mp = boost::multiprecision;

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator (GMP canonicalises after every operation).
using Rational = mp::number<mp::gmp_rational, mp::et_off>;
using BigInt = mp::number<mp::gmp_int, mp::et_off>;

/// 80 significant decimal digits.
using HighPrecision = mp::number<mp::cpp_bin_float<80>, mp::et_off>;

/// Raised when an operation is evaluated outside its domain (vanishing
/// denominator, missing square root, x = 0 where a representation
/// divides by x, ...).
class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when a numerically truncated series fails to settle.
class convergence_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <class S>
concept Scalar = std::copyable<S> && requires(S a, S b) {
  { a + b } -> std::convertible_to<S>;
  { a - b } -> std::convertible_to<S>;
  { a * b } -> std::convertible_to<S>;
  { a / b } -> std::convertible_to<S>;
  { -a } -> std::convertible_to<S>;
  { a == b } -> std::convertible_to<bool>;
  S(1);
};

template <class S>
constexpr bool is_exact_v = std::is_same_v<S, Rational>;

template <class S>
bool is_zero(const S& v) {
  return v == S(0);
}

/// base^e for any integer e; negative e inverts (base must be nonzero).
template <Scalar S>
S power(const S& base, long long e) {
  if (e < 0) {
    return S(1) / power(base, -e);
  }
  S result(1);
  S b = base;
  while (e > 0) {
    if (e & 1) result = result * b;
    e >>= 1;
    if (e > 0) b = b * b;
  }
  return result;
}

/// (-1)^e as a scalar.
template <Scalar S>
S sign_power(long long e) {
  return (e % 2 == 0) ? S(1) : S(-1);
}

inline std::optional<BigInt> exact_isqrt(const BigInt& v) {
  if (v < 0) return std::nullopt;
  BigInt r = mp::sqrt(v);
  if (r * r != v) return std::nullopt;
  return r;
}

/// Square root when it is representable in S: rationals need perfect
/// square numerator and denominator; floating types need v >= 0.
template <class S>
std::optional<S> square_root(const S& v) {
  if constexpr (std::is_same_v<S, Rational>) {
    auto num = exact_isqrt(mp::numerator(v));
    auto den = exact_isqrt(mp::denominator(v));
    if (!num || !den) return std::nullopt;
    return Rational(*num) / Rational(*den);
  } else {
    if (v < S(0)) return std::nullopt;
    using std::sqrt;
    return S(sqrt(v));
  }
}

template <class S>
std::string to_string(const S& v) {
  std::ostringstream os;
  if constexpr (std::is_floating_point_v<S>) {
    os.precision(std::numeric_limits<S>::max_digits10);
  } else if constexpr (mp::is_number<S>::value && !std::is_same_v<S, Rational> &&
                       !std::is_same_v<S, BigInt>) {
    os.precision(std::numeric_limits<S>::digits10);
  }
  os << v;
  return os.str();
}

/// Parses "N" or "N/D" (optional leading '-', D > 0).  Anything else,
/// including decimals, yields nullopt.
inline std::optional<Rational> parse_rational(std::string_view text) {
  auto digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
  };
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!digits(num) || !digits(den)) return std::nullopt;
  const BigInt d{std::string(den)};
  if (d == 0) return std::nullopt;
  const Rational r(BigInt{std::string(num)}, d);
  return negative ? Rational(-r) : r;
}

/// Parses a plain decimal literal ("1.5", "-2", "3e-2").  Rejects "a/b".
inline std::optional<double> parse_decimal(std::string_view text) {
  if (text.empty() || text.find('/') != std::string_view::npos) return std::nullopt;
  std::string s(text);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    return std::nullopt;
  }
  if (used != s.size() || !std::isfinite(v)) return std::nullopt;
  return v;
}

}  // namespace pqfib
