#include "narayana/counting.hpp"

#include <string>
#include <utility>

namespace narayana {

namespace {
const Integer kZero{0};

std::string cell_string(int i, int n, int j) {
  return "(i=" + std::to_string(i) + ", n=" + std::to_string(n) +
         ", j=" + std::to_string(j) + ")";
}
}  // namespace

const Integer& CountTable::at(int i, int n, int j) const {
  auto it = entries_.find(CellKey{i, n, j});
  return it == entries_.end() ? kZero : it->second;
}

void CountTable::set(int i, int n, int j, Integer value) {
  if (value < 0) {
    throw std::domain_error("CountTable: negative count at " + cell_string(i, n, j));
  }
  if (value == 0) {
    entries_.erase(CellKey{i, n, j});
    return;
  }
  if (!cell_in_domain(i, n, j)) {
    throw std::domain_error("CountTable: key " + cell_string(i, n, j) +
                            " outside 1 <= i <= j <= n");
  }
  entries_[CellKey{i, n, j}] = std::move(value);
}

void CountTable::add(int i, int n, int j, const Integer& delta) {
  set(i, n, j, at(i, n, j) + delta);
}

Integer CountTable::total() const {
  Integer sum = 0;
  for (const auto& [key, value] : entries_) sum += value;
  return sum;
}

Integer binomial(long long m, long long k) {
  if (k == 0) return 1;
  if (k < 0 || m < k) return 0;
  if (m - k < k) k = m - k;  // symmetry, m >= 0 here
  Integer result = 1;
  for (long long t = 1; t <= k; ++t) {
    result *= m - k + t;
    result /= t;  // exact: result is C(m-k+t, t) after each step
  }
  return result;
}

Integer catalan(int n) {
  if (n < 0) throw std::domain_error("catalan: n must be nonnegative");
  Integer c = binomial(2LL * n, n);
  Integer q, r;
  boost::multiprecision::divide_qr(c, Integer(n + 1), q, r);
  if (r != 0) throw std::logic_error("catalan: C(2n,n) not divisible by n+1");
  return q;
}

Integer narayana_classic(int n, int k) {
  if (!(1 <= k && k <= n)) {
    throw std::domain_error("narayana_classic: need 1 <= k <= n, got k=" +
                            std::to_string(k) + ", n=" + std::to_string(n));
  }
  Integer product = binomial(n, k) * binomial(n, k - 1);
  Integer q, r;
  boost::multiprecision::divide_qr(product, Integer(n), q, r);
  if (r != 0) throw std::logic_error("narayana_classic: product not divisible by n");
  return q;
}

Integer gen_narayana(int i, int n, int j) {
  if (!cell_in_domain(i, n, j)) {
    throw std::domain_error("gen_narayana: cell " + cell_string(i, n, j) +
                            " outside 1 <= i <= j <= n");
  }
  Integer product = Integer(i) * binomial(n, j) * binomial(n - i - 1LL, j - i);
  Integer q, r;
  boost::multiprecision::divide_qr(product, Integer(n), q, r);
  if (r != 0) {
    throw std::logic_error("gen_narayana: i*C(n,j)*C(n-i-1,j-i) not divisible by n at " +
                           cell_string(i, n, j));
  }
  return q;
}

CellEndpoints cell_endpoints(int i, int n, int j) {
  if (!cell_in_domain(i, n, j)) {
    throw std::domain_error("cell_endpoints: cell " + cell_string(i, n, j) +
                            " outside 1 <= i <= j <= n");
  }
  return CellEndpoints{
      .a1 = {1, i},
      .b1 = {n - j, j},
      .a2 = {1, 0},
      .b2 = {n + 1 - j, j - 1},
  };
}

bool endpoints_feasible(const CellEndpoints& e) {
  auto reachable = [](GridPoint a, GridPoint b) {
    return b.x >= a.x && b.y >= a.y;
  };
  return reachable(e.a1, e.b1) && reachable(e.a2, e.b2);
}

Integer lattice_path_count(GridPoint a, GridPoint b) {
  const long long dx = b.x - a.x;
  const long long dy = b.y - a.y;
  return binomial(dx + dy, dy);
}

Integer lgv_count(int i, int n, int j) {
  const CellEndpoints e = cell_endpoints(i, n, j);
  return lattice_path_count(e.a1, e.b1) * lattice_path_count(e.a2, e.b2) -
         lattice_path_count(e.a1, e.b2) * lattice_path_count(e.a2, e.b1);
}

}  // namespace narayana
