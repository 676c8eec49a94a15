#include <cstdio>
#include <iostream>

#include "pqfib/pqfib.hpp"

using pqfib::Family;
using pqfib::PQParams;
using pqfib::Rational;

int main() {
  const PQParams<Rational> pr(Rational(2), Rational(3));
  const Rational s(1);

  std::cout << "F_5(x, 1 | 2, 3) = " << pqfib::fibonacci_poly(5, pr, s) << "\n";
  std::cout << "L_4(x, 1 | 2, 3) = " << pqfib::lucas_poly(4, pr, s) << "\n";
  std::cout << "D L_4            = " << pqfib::jackson_derivative(pqfib::lucas_poly(4, pr, s), pr) << "\n";

  std::cout << "F_n(2, 3):";
  for (int n = 0; n <= 6; ++n) std::cout << " " << pqfib::fibonacci_number(n, pr);
  std::cout << "\n";

  const PQParams<Rational> squares(Rational(4), Rational(9));
  std::cout << "8phi5 form of F_7(1/2, 3 | 4, 9) = "
            << pqfib::fibonacci_as_hypergeometric(6, Rational(1, 2), Rational(3), squares) << "\n";
  std::cout << "direct sum                       = "
            << pqfib::fibonacci_poly(7, squares, Rational(3)).evaluate(Rational(1, 2)) << "\n";

  const auto series = pqfib::fib_genfunc_closed(Rational(1), s, pr, 6);
  std::cout << "closed genfunc coefficients:";
  for (int m = 0; m <= 6; ++m) std::cout << " " << series.coeff(m);
  std::cout << "\n";

  const auto rule = pqfib::gauss_hermite_rule(pqfib::kDefaultQuadratureNodes);
  const pqfib::FourierParams<double> fp(1.5, 0.3, 1.0, 1.0, 4);
  for (double y : {-1.0, 0.0, 1.0}) {
    const auto lhs = pqfib::fibonacci_transform_lhs(fp, y, rule);
    const auto rhs = pqfib::fibonacci_transform_rhs(fp, y);
    std::printf("transform at y=%+.1f: quadrature %.15f, inverse family %.15f\n", y, lhs.real(), rhs.real());
  }
  std::printf("recovered F_5(1, 1) = %.15f, direct %.15f\n",
              pqfib::recovery_double_integral(Family::fibonacci, fp, rule).real(),
              pqfib::transform_direct_value(Family::fibonacci, fp));
}
