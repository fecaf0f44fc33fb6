#include "narayana/series.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace narayana {

namespace {

// Terms of one x-degree layer, keyed by the (i, j) exponents.
using Layer = std::map<std::pair<int, int>, Rational>;

std::vector<Layer> layers_of(const Series3& s, int order) {
  std::vector<Layer> layers(order + 1);
  for (const auto& [m, c] : s.terms()) {
    if (m.n <= order) layers[m.n][{m.i, m.j}] += c;
  }
  return layers;
}

void accumulate_product(Layer& into, const Layer& a, const Layer& b, const Rational& scale) {
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      const std::pair<int, int> e{ea.first + eb.first, ea.second + eb.second};
      Rational& slot = into[e];
      slot += scale * ca * cb;
      if (slot == 0) into.erase(e);
    }
  }
}

Series3 from_layers(const std::vector<Layer>& layers, int order) {
  Series3 s(order);
  for (int n = 0; n < static_cast<int>(layers.size()); ++n) {
    for (const auto& [e, c] : layers[n]) {
      s.add_term(Monomial{n, e.first, e.second}, c);
    }
  }
  return s;
}

}  // namespace

Series3::Series3(int truncation_order) : order_(truncation_order) {
  if (truncation_order < 0) {
    throw std::domain_error("Series3: truncation order must be nonnegative");
  }
}

Series3 Series3::constant(const Rational& c, int order) {
  Series3 s(order);
  s.add_term(Monomial{0, 0, 0}, c);
  return s;
}

Series3 Series3::monomial(const Rational& c, Monomial m, int order) {
  Series3 s(order);
  s.add_term(m, c);
  return s;
}

Rational Series3::coefficient(Monomial m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Series3::add_term(Monomial m, const Rational& c) {
  if (m.n > order_ || c == 0) return;
  if (m.n < 0 || m.i < 0 || m.j < 0) {
    throw std::domain_error("Series3: negative exponent");
  }
  Rational& slot = terms_[m];
  slot += c;
  if (slot == 0) terms_.erase(m);
}

Series3 operator+(const Series3& a, const Series3& b) {
  const int order = std::min(a.order_, b.order_);
  Series3 result(order);
  for (const auto& [m, c] : a.terms_) result.add_term(m, c);
  for (const auto& [m, c] : b.terms_) result.add_term(m, c);
  return result;
}

Series3 operator-(const Series3& a, const Series3& b) {
  const int order = std::min(a.order_, b.order_);
  Series3 result(order);
  for (const auto& [m, c] : a.terms_) result.add_term(m, c);
  for (const auto& [m, c] : b.terms_) result.add_term(m, -c);
  return result;
}

Series3 operator*(const Series3& a, const Series3& b) {
  const int order = std::min(a.order_, b.order_);
  Series3 result(order);
  for (const auto& [ma, ca] : a.terms_) {
    if (ma.n > order) continue;
    for (const auto& [mb, cb] : b.terms_) {
      if (ma.n + mb.n > order) continue;
      result.add_term(Monomial{ma.n + mb.n, ma.i + mb.i, ma.j + mb.j}, ca * cb);
    }
  }
  return result;
}

Series3 operator*(const Series3& a, const Rational& c) {
  Series3 result(a.order_);
  for (const auto& [m, coeff] : a.terms_) result.add_term(m, coeff * c);
  return result;
}

namespace {

// Layered solves grade by x-degree, so the x^0 layer must be the constant
// alone: 1/(1+y) or sqrt(1+y) has unbounded y-degree at x-degree 0 and is
// not representable under x-truncation.
void require_constant_x0_layer(const Series3& a, const char* op) {
  for (const auto& [m, c] : a.terms()) {
    if (m.n == 0 && (m.i != 0 || m.j != 0)) {
      throw std::domain_error(std::string(op) + ": x^0 layer must be constant");
    }
  }
}

}  // namespace

Series3 sqrt_series(const Series3& a) {
  if (a.coefficient(0, 0, 0) != 1) {
    throw std::domain_error("sqrt_series: constant term must be 1");
  }
  require_constant_x0_layer(a, "sqrt_series");
  const int order = a.truncation_order();
  const std::vector<Layer> arg = layers_of(a, order);

  // r^2 = a layer by layer: 2 r_d = a_d - sum_{e=1}^{d-1} r_e r_{d-e}.
  std::vector<Layer> r(order + 1);
  r[0][{0, 0}] = 1;
  for (int d = 1; d <= order; ++d) {
    Layer need = arg[d];
    for (int e = 1; e < d; ++e) {
      accumulate_product(need, r[e], r[d - e], Rational(-1));
    }
    for (auto& [exp, c] : need) c /= 2;
    r[d] = std::move(need);
  }
  return from_layers(r, order);
}

Series3 inverse_series(const Series3& a) {
  const Rational c0 = a.coefficient(0, 0, 0);
  if (c0 == 0) {
    throw std::domain_error("inverse_series: constant term must be nonzero");
  }
  require_constant_x0_layer(a, "inverse_series");
  const int order = a.truncation_order();
  const std::vector<Layer> arg = layers_of(a, order);

  // a r = 1 layer by layer: c0 r_d = - sum_{e=1}^{d} a_e r_{d-e}.
  std::vector<Layer> r(order + 1);
  r[0][{0, 0}] = Rational(1) / c0;
  for (int d = 1; d <= order; ++d) {
    Layer acc;
    for (int e = 1; e <= d; ++e) {
      accumulate_product(acc, arg[e], r[d - e], Rational(-1));
    }
    for (auto& [exp, c] : acc) c /= c0;
    r[d] = std::move(acc);
  }
  return from_layers(r, order);
}

std::string serialize_series(const Series3& s) {
  std::ostringstream out;
  for (const auto& [m, c] : s.terms()) {
    out << m.n << ' ' << m.i << ' ' << m.j << ' ' << boost::multiprecision::numerator(c)
        << '/' << boost::multiprecision::denominator(c) << '\n';
  }
  return out.str();
}

Series3 gf_expand(int order, int bound) {
  if (order < 0) throw std::domain_error("gf_expand: order must be nonnegative");
  if (order > bound) {
    throw std::domain_error("gf_expand refused: order " + std::to_string(order) +
                            " exceeds the configured bound " + std::to_string(bound));
  }

  // 1 - 2x(1+z) + x^2 (1-z)^2
  Series3 radicand(order);
  radicand.add_term({0, 0, 0}, 1);
  radicand.add_term({1, 0, 0}, -2);
  radicand.add_term({1, 0, 1}, -2);
  radicand.add_term({2, 0, 0}, 1);
  radicand.add_term({2, 0, 1}, -2);
  radicand.add_term({2, 0, 2}, 1);

  // 1 - x(1-z) - sqrt(...), a series with zero constant term
  Series3 inner(order);
  inner.add_term({0, 0, 0}, 1);
  inner.add_term({1, 0, 0}, -1);
  inner.add_term({1, 0, 1}, 1);
  inner = inner - sqrt_series(radicand);

  Series3 denominator = Series3::constant(2, order) -
                        Series3::monomial(1, Monomial{0, 1, 0}, order) * inner;
  Series3 g = inverse_series(denominator) * Rational(2);

  for (const auto& [m, c] : g.terms()) {
    if (boost::multiprecision::denominator(c) != 1 || c < 0) {
      throw std::logic_error("gf_expand: coefficient at (" + std::to_string(m.n) + "," +
                             std::to_string(m.i) + "," + std::to_string(m.j) +
                             ") is not a nonnegative integer");
    }
    if (m.i > m.n || m.j > m.n) {
      throw std::logic_error("gf_expand: term (" + std::to_string(m.n) + "," +
                             std::to_string(m.i) + "," + std::to_string(m.j) +
                             ") exceeds its x-degree in y or z");
    }
  }
  if (g.coefficient(0, 0, 0) != 1) {
    throw std::logic_error("gf_expand: constant term is not 1");
  }
  return g;
}

Integer gf_coefficient(int n, int i, int j, int bound) {
  if (n < 0 || i < 0 || j < 0) {
    throw std::domain_error("gf_coefficient: exponents must be nonnegative");
  }
  const Series3 g = gf_expand(n, bound);
  return boost::multiprecision::numerator(g.coefficient(n, i, j));
}

}  // namespace narayana
