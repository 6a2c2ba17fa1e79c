#include "doctest.h"

#include "nodal/linalg.hpp"
#include "nodal/polynomial.hpp"
#include "nodal/rational.hpp"
#include "nodal/sampling.hpp"

using namespace nodal;

TEST_SUITE("arithmetic") {
  TEST_CASE("rational parsing normalizes and rejects junk") {
    CHECK(parse_rational("-10/4") == Rational(-5) / 2);
    CHECK(to_string(parse_rational("-10/4")) == "-5/2");
    CHECK(to_string(parse_rational("7")) == "7");
    CHECK(numerator_of(parse_rational("6/8")) == 3);
    CHECK(denominator_of(parse_rational("6/8")) == 4);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK(power(Rational(2) / 3, -2) == Rational(9) / 4);
  }

  TEST_CASE("prime field agrees with 128-bit arithmetic") {
    Engine rng = make_engine(11, 1);
    const unsigned __int128 p = ModPrime::modulus;
    for (int k = 0; k < 2000; ++k) {
      const std::uint64_t a = rng() % ModPrime::modulus, b = rng() % ModPrime::modulus;
      const auto x = ModPrime::from_raw(a), y = ModPrime::from_raw(b);
      CHECK((x * y).raw() == static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p));
      CHECK((x + y).raw() == static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) + b) % p));
      if (b != 0) CHECK((x / y) * y == x);
    }
    CHECK(ModPrime(-1).raw() == ModPrime::modulus - 1);
    const auto half = ModPrime::from_rational(Rational(1) / 2);
    REQUIRE(half.has_value());
    CHECK(*half * ModPrime(2) == ModPrime(1));
  }

  TEST_CASE("three rank routes agree on random low-rank integer matrices") {
    Engine rng = make_engine(5, 2);
    for (int trial = 0; trial < 200; ++trial) {
      const int rows = uniform_int(rng, 1, 7), cols = uniform_int(rng, 1, 7), inner = uniform_int(rng, 1, 5);
      // rank <= inner by construction
      Matrix<Rational> a(rows, inner), b(inner, cols);
      for (int i = 0; i < rows; ++i)
        for (int j = 0; j < inner; ++j) a(i, j) = Rational(uniform_int(rng, -3, 3)) / uniform_int(rng, 1, 4);
      for (int i = 0; i < inner; ++i)
        for (int j = 0; j < cols; ++j) b(i, j) = Rational(uniform_int(rng, -3, 3));
      const Matrix<Rational> m = a * b;
      const auto r = rank(m);
      CHECK(r <= inner);
      CHECK(exact_rank(m) == r);
      Matrix<ModPrime> mp(rows, cols);
      for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) mp(i, j) = *ModPrime::from_rational(m(i, j));
      // reduction can only lose rank
      CHECK(rank(mp) <= r);
      const Matrix<Rational> k = kernel_basis(m);
      CHECK(k.cols() == cols - r);
      if (k.cols() > 0) {
        const Matrix<Rational> prod = m * k;
        bool zero = true;
        for (Eigen::Index i = 0; i < prod.rows(); ++i)
          for (Eigen::Index j = 0; j < prod.cols(); ++j) zero = zero && prod(i, j) == 0;
        CHECK(zero);
        CHECK(rank(k) == k.cols());
      }
    }
  }

  TEST_CASE("clearing denominators keeps the row space") {
    Matrix<Rational> m(2, 3);
    m << Rational(1) / 2, Rational(1) / 3, 1, Rational(2) / 5, 0, Rational(-7) / 4;
    const Matrix<Integer> z = clear_denominators(m);
    CHECK(z(0, 0) == 3);
    CHECK(z(0, 1) == 2);
    CHECK(z(0, 2) == 6);
    CHECK(z(1, 0) == 8);
    CHECK(z(1, 2) == -35);
    CHECK(bareiss_rank(z) == 2);
  }

  TEST_CASE("polynomial helpers") {
    // (x - 1/2)(x + 3)(x^2 + 1)
    const Polynomial<Rational> p{Rational(-3) / 2, Rational(5) / 2, Rational(-1) / 2, Rational(5) / 2, Rational(1)};
    CHECK(degree(p) == 4);
    CHECK(evaluate(p, Rational(1) / 2) == 0);
    const auto roots = rational_roots(p);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0] == -3);
    CHECK(roots[1] == Rational(1) / 2);
    Rational rem;
    const auto q = divide_by_root(p, Rational(-3), rem);
    CHECK(rem == 0);
    CHECK(degree(q) == 3);
    const Polynomial<Rational> r{Rational(1), Rational(0), Rational(1)};  // x^2 + 1
    const auto g = gcd(p, r);
    CHECK(degree(g) == 2);
    CHECK(format_polynomial(r) == format_polynomial(g));
    Polynomial<Rational> z{Rational(0), Rational(0)};
    trim(z);
    CHECK(degree(z) < 0);
  }
}
