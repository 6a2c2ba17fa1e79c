#pragma once

#include "nodal/rational.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <optional>
#include <vector>

namespace nodal {

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

// Element of the prime field F_p with p = 2^61 - 1.
class ModPrime {
 public:
  static constexpr std::uint64_t modulus = (std::uint64_t{1} << 61) - 1;

  constexpr ModPrime() = default;
  constexpr ModPrime(std::int64_t v)  // NOLINT(google-explicit-constructor)
      : value_(reduce_signed(v)) {}

  static constexpr ModPrime from_raw(std::uint64_t v) {
    ModPrime m;
    m.value_ = v;
    return m;
  }
  // nullopt when the denominator vanishes mod p.
  static std::optional<ModPrime> from_rational(const Rational& r);

  constexpr std::uint64_t raw() const { return value_; }

  friend constexpr ModPrime operator+(ModPrime a, ModPrime b) {
    std::uint64_t s = a.value_ + b.value_;
    return from_raw(s >= modulus ? s - modulus : s);
  }
  friend constexpr ModPrime operator-(ModPrime a, ModPrime b) {
    return from_raw(a.value_ >= b.value_ ? a.value_ - b.value_ : a.value_ + modulus - b.value_);
  }
  friend constexpr ModPrime operator-(ModPrime a) { return from_raw(a.value_ == 0 ? 0 : modulus - a.value_); }
  friend constexpr ModPrime operator*(ModPrime a, ModPrime b) {
    unsigned __int128 p = static_cast<unsigned __int128>(a.value_) * b.value_;
    std::uint64_t lo = static_cast<std::uint64_t>(p) & modulus;
    std::uint64_t hi = static_cast<std::uint64_t>(p >> 61);
    std::uint64_t s = lo + hi;
    return from_raw(s >= modulus ? s - modulus : s);
  }
  ModPrime inverse() const;
  friend ModPrime operator/(ModPrime a, ModPrime b) { return a * b.inverse(); }
  ModPrime& operator+=(ModPrime o) { return *this = *this + o; }
  ModPrime& operator-=(ModPrime o) { return *this = *this - o; }
  ModPrime& operator*=(ModPrime o) { return *this = *this * o; }
  ModPrime& operator/=(ModPrime o) { return *this = *this / o; }
  friend constexpr bool operator==(ModPrime a, ModPrime b) { return a.value_ == b.value_; }
  friend constexpr bool operator!=(ModPrime a, ModPrime b) { return a.value_ != b.value_; }

 private:
  static constexpr std::uint64_t reduce_signed(std::int64_t v) {
    std::int64_t m = v % static_cast<std::int64_t>(modulus);
    return static_cast<std::uint64_t>(m < 0 ? m + static_cast<std::int64_t>(modulus) : m);
  }
  std::uint64_t value_ = 0;
};

template <class Field>
inline bool is_zero(const Field& x) {
  return x == Field(0);
}

// Row echelon rank over a field.
template <class Field>
Eigen::Index rank(Matrix<Field> m) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index pivot = r;
    while (pivot < rows && is_zero(m(pivot, c))) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r) m.row(pivot).swap(m.row(r));
    const Field inv = Field(1) / m(r, c);
    for (Eigen::Index i = r + 1; i < rows; ++i) {
      if (is_zero(m(i, c))) continue;
      const Field f = m(i, c) * inv;
      for (Eigen::Index j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return r;
}

// Reduced row echelon form in place; returns the pivot column of each pivot row.
template <class Field>
std::vector<Eigen::Index> reduce_to_rref(Matrix<Field>& m) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  std::vector<Eigen::Index> pivots;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index pivot = r;
    while (pivot < rows && is_zero(m(pivot, c))) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r) m.row(pivot).swap(m.row(r));
    const Field inv = Field(1) / m(r, c);
    for (Eigen::Index j = c; j < cols; ++j) m(r, j) *= inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      const Field f = m(i, c);
      for (Eigen::Index j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

// Columns form a basis of {x : m x = 0}.
template <class Field>
Matrix<Field> kernel_basis(Matrix<Field> m) {
  const Eigen::Index cols = m.cols();
  const auto pivots = reduce_to_rref(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (auto c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  Matrix<Field> basis(cols, cols - static_cast<Eigen::Index>(pivots.size()));
  basis.setConstant(Field(0));
  Eigen::Index k = 0;
  for (Eigen::Index free = 0; free < cols; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    basis(free, k) = Field(1);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      basis(pivots[r], k) = -m(static_cast<Eigen::Index>(r), free);
    ++k;
  }
  return basis;
}

// Fraction-free (Bareiss) rank over an integral domain; every division is exact.
template <class Ring>
Eigen::Index bareiss_rank(Matrix<Ring> m) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  Ring previous(1);
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index pivot = r;
    while (pivot < rows && is_zero(m(pivot, c))) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r) m.row(pivot).swap(m.row(r));
    for (Eigen::Index i = r + 1; i < rows; ++i) {
      for (Eigen::Index j = c + 1; j < cols; ++j)
        m(i, j) = (m(r, c) * m(i, j) - m(i, c) * m(r, j)) / previous;
      m(i, c) = Ring(0);
    }
    previous = m(r, c);
    ++r;
  }
  return r;
}

// Scales each row by the lcm of its denominators.
Matrix<Integer> clear_denominators(const Matrix<Rational>& m);

inline Eigen::Index exact_rank(const Matrix<Rational>& m) { return bareiss_rank(clear_denominators(m)); }

}  // namespace nodal

namespace Eigen {
template <>
struct NumTraits<nodal::ModPrime> : GenericNumTraits<nodal::ModPrime> {
  using Real = nodal::ModPrime;
  using NonInteger = nodal::ModPrime;
  using Nested = nodal::ModPrime;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 0,
    RequireInitialization = 0,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 4
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};
}  // namespace Eigen
