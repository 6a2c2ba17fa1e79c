#include "nodal/polynomial.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>

namespace nodal {

namespace {

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t i = 1; i * i <= n; ++i) {
    if (n % i) continue;
    small.push_back(i);
    if (i != n / i) large.push_back(n / i);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

std::vector<Rational> rational_roots(Polynomial<Rational> p) {
  trim(p);
  std::vector<Rational> roots;
  if (p.size() <= 1) return roots;
  // Zero is handled apart so the constant term below is nonzero.
  while (p.size() > 1 && p[0] == 0) {
    p.erase(p.begin());
    if (std::find(roots.begin(), roots.end(), Rational(0)) == roots.end()) roots.push_back(0);
  }
  auto peel = [&](const Rational& r) {
    Rational rem;
    for (;;) {
      auto q = divide_by_root(p, r, rem);
      if (rem != 0) break;
      p = std::move(q);
      if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
      if (degree(p) <= 0) break;
    }
  };
  if (degree(p) == 1) peel(-p[0] / p[1]);
  if (degree(p) >= 1) {
    Integer scale = 1;
    for (const auto& c : p) scale = boost::multiprecision::lcm(scale, denominator_of(c));
    Integer a0 = abs(numerator_of(p.front() * scale)), an = abs(numerator_of(p.back() * scale));
    const Integer limit(1000000000000LL);
    if (a0 < limit && an < limit) {
      for (auto num : divisors(a0.convert_to<std::uint64_t>())) {
        for (auto den : divisors(an.convert_to<std::uint64_t>())) {
          if (degree(p) < 1) break;
          const Rational cand = Rational(Integer(num)) / Rational(Integer(den));
          peel(cand);
          if (degree(p) >= 1) peel(-cand);
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::string format_polynomial(const Polynomial<Rational>& p, const std::string& var) {
  std::string out;
  for (int i = degree(p); i >= 0; --i) {
    const Rational& c = p[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    std::string coeff = to_string(abs(c));
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    if (i == 0)
      out += coeff;
    else {
      if (abs(c) != 1) out += coeff + "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace nodal
