#pragma once

#include "nodal/rational.hpp"

#include <vector>

namespace nodal {

// Dense univariate polynomial, coefficients from the constant term up.
template <class Field>
using Polynomial = std::vector<Field>;

template <class Field>
void trim(Polynomial<Field>& p) {
  while (!p.empty() && p.back() == Field(0)) p.pop_back();
}

// -1 for the zero polynomial.
template <class Field>
int degree(const Polynomial<Field>& p) {
  int d = static_cast<int>(p.size()) - 1;
  while (d >= 0 && p[static_cast<std::size_t>(d)] == Field(0)) --d;
  return d;
}

template <class Field>
Field evaluate(const Polynomial<Field>& p, const Field& x) {
  Field acc(0);
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

template <class Field>
Polynomial<Field> remainder(Polynomial<Field> a, const Polynomial<Field>& b) {
  trim(a);
  const int db = degree(b);
  const Field lead_inv = Field(1) / b[static_cast<std::size_t>(db)];
  while (degree(a) >= db) {
    const int da = degree(a);
    const Field f = a[static_cast<std::size_t>(da)] * lead_inv;
    for (int i = 0; i <= db; ++i)
      a[static_cast<std::size_t>(da - db + i)] -= f * b[static_cast<std::size_t>(i)];
    trim(a);
  }
  return a;
}

// Monic gcd; the zero polynomial when both inputs vanish.
template <class Field>
Polynomial<Field> gcd(Polynomial<Field> a, Polynomial<Field> b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Polynomial<Field> r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const Field lead_inv = Field(1) / a.back();
    for (auto& c : a) c *= lead_inv;
  }
  return a;
}

// Synthetic division by (x - root); the remainder is p(root).
template <class Field>
Polynomial<Field> divide_by_root(const Polynomial<Field>& p, const Field& root, Field& rem) {
  const int d = degree(p);
  if (d <= 0) {
    rem = d < 0 ? Field(0) : p[0];
    return {};
  }
  Polynomial<Field> q(static_cast<std::size_t>(d));
  Field carry(0);
  for (int i = d; i >= 1; --i) {
    carry = carry * root + p[static_cast<std::size_t>(i)];
    q[static_cast<std::size_t>(i - 1)] = carry;
  }
  rem = carry * root + p[0];
  return q;
}

// Distinct rational roots in increasing order. Searches the rational-root-theorem
// candidates when the cleared constant and leading coefficients are below 10^12;
// otherwise returns only the roots found by exact linear factors.
std::vector<Rational> rational_roots(Polynomial<Rational> p);

std::string format_polynomial(const Polynomial<Rational>& p, const std::string& var = "x");

}  // namespace nodal
