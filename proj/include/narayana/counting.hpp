#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <map>
#include <stdexcept>

namespace narayana {

using Integer = boost::multiprecision::cpp_int;

// One cell of the generalized Narayana array: n = semilength, i = returns,
// j = peaks. Nonzero counts live in 1 <= i <= j <= n.
struct CellKey {
  int i = 0;
  int n = 0;
  int j = 0;
  auto operator<=>(const CellKey&) const = default;
};

inline bool cell_in_domain(int i, int n, int j) {
  return 1 <= i && i <= j && j <= n;
}

// Sparse exact table keyed by (i, n, j); an absent key means zero.
class CountTable {
 public:
  const Integer& at(int i, int n, int j) const;
  void set(int i, int n, int j, Integer value);
  void add(int i, int n, int j, const Integer& delta);
  std::size_t size() const { return entries_.size(); }
  Integer total() const;
  bool operator==(const CountTable&) const = default;
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

 private:
  std::map<CellKey, Integer> entries_;
};

// C(m, k) with the conventions fixed across this library: k = 0 gives 1 for
// every m including negative m, k < 0 gives 0, m < k gives 0. The polynomial
// extension to negative m is not used.
Integer binomial(long long m, long long k);

Integer catalan(int n);

// (1/n) C(n,k) C(n,k-1) for 1 <= k <= n.
Integer narayana_classic(int n, int k);

// N_i(n,j) = (i/n) C(n,j) C(n-i-1, j-i) for 1 <= i <= j <= n. The division
// by n is checked exact.
Integer gen_narayana(int i, int n, int j);

struct GridPoint {
  long long x = 0;
  long long y = 0;
  auto operator<=>(const GridPoint&) const = default;
};

// Source and sink pairs of the nonintersecting-path configuration attached
// to cell (i, n, j): A1 = (1,i), B1 = (n-j,j), A2 = (1,0), B2 = (n+1-j,j-1).
struct CellEndpoints {
  GridPoint a1, b1, a2, b2;
};

CellEndpoints cell_endpoints(int i, int n, int j);

// True when both segments admit monotone North/East paths (sink weakly
// above-right of its source). False at j = n and at the zero cells.
bool endpoints_feasible(const CellEndpoints& e);

// Monotone North/East path count from a to b, evaluated algebraically as
// C(dx+dy, dy) under the binomial conventions above. Equals the geometric
// count whenever dx, dy >= 0.
Integer lattice_path_count(GridPoint a, GridPoint b);

// 2x2 determinant over the cell endpoints:
//   #(A1->B1) #(A2->B2) - #(A1->B2) #(A2->B1).
Integer lgv_count(int i, int n, int j);

}  // namespace narayana
