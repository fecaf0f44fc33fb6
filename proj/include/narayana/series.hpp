#pragma once

#include "narayana/counting.hpp"

#include <compare>
#include <map>
#include <string>

namespace narayana {

using Rational = boost::multiprecision::cpp_rational;

// Exponent triple for x^n y^i z^j, ordered lexicographically by (n, i, j).
struct Monomial {
  int n = 0;
  int i = 0;
  int j = 0;
  auto operator<=>(const Monomial&) const = default;
};

// Truncated trivariate formal power series with exact rational coefficients.
// Truncation is by x-degree only; stored terms never exceed it and zero
// coefficients are never stored.
class Series3 {
 public:
  explicit Series3(int truncation_order);

  static Series3 constant(const Rational& c, int order);
  static Series3 monomial(const Rational& c, Monomial m, int order);

  int truncation_order() const { return order_; }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  Rational coefficient(Monomial m) const;
  Rational coefficient(int n, int i, int j) const { return coefficient(Monomial{n, i, j}); }

  // Accumulates c into the (possibly absent) coefficient of m; silently
  // drops terms beyond the truncation order and erases cancellations.
  void add_term(Monomial m, const Rational& c);

  bool operator==(const Series3&) const = default;

  friend Series3 operator+(const Series3& a, const Series3& b);
  friend Series3 operator-(const Series3& a, const Series3& b);
  friend Series3 operator*(const Series3& a, const Series3& b);
  friend Series3 operator*(const Series3& a, const Rational& c);

 private:
  int order_ = 0;
  std::map<Monomial, Rational> terms_;
};

// Square root with constant term 1, solved layer by layer in the x-degree;
// exact in rationals. Rejects series whose constant term is not 1.
Series3 sqrt_series(const Series3& a);

// Multiplicative inverse; rejects series with zero constant term.
Series3 inverse_series(const Series3& a);

// Interchange form: one line "n i j numerator/denominator" per term, ordered
// by (n, i, j).
std::string serialize_series(const Series3& s);

inline constexpr int kDefaultGfBound = 12;

// Expansion of 2 / (2 - y (1 - x(1-z) - sqrt(1 - 2x(1+z) + x^2 (1-z)^2)))
// to the given x-degree. Every retained coefficient is checked to be a
// nonnegative integer with y- and z-degrees bounded by the x-degree.
Series3 gf_expand(int order, int bound = kDefaultGfBound);

// The (n, i, j) coefficient of the expansion to order n.
Integer gf_coefficient(int n, int i, int j, int bound = kDefaultGfBound);

}  // namespace narayana
