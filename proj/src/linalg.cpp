#include "nodal/linalg.hpp"

#include <boost/integer/common_factor_rt.hpp>

namespace nodal {

std::optional<ModPrime> ModPrime::from_rational(const Rational& r) {
  const mpq_srcptr q = r.backend().data();
  const unsigned long den = mpz_fdiv_ui(mpq_denref(q), modulus);
  if (den == 0) return std::nullopt;
  const unsigned long num = mpz_fdiv_ui(mpq_numref(q), modulus);
  if (den == 1) return from_raw(num);
  return from_raw(num) / from_raw(den);
}

ModPrime ModPrime::inverse() const {
  // Extended Euclid; every intermediate fits in 64 signed bits since p < 2^61.
  std::int64_t r0 = static_cast<std::int64_t>(modulus), r1 = static_cast<std::int64_t>(value_);
  std::int64_t t0 = 0, t1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::int64_t tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  return ModPrime(t0);
}

Matrix<Integer> clear_denominators(const Matrix<Rational>& m) {
  Matrix<Integer> out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Integer scale = 1;
    for (Eigen::Index j = 0; j < m.cols(); ++j) scale = boost::multiprecision::lcm(scale, denominator_of(m(i, j)));
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      out(i, j) = numerator_of(m(i, j)) * (scale / denominator_of(m(i, j)));
  }
  return out;
}

}  // namespace nodal
