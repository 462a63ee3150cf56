#pragma once

#include <algorithm>
#include <array>
#include <vector>

#include "modcone/rational.hpp"

namespace modcone {

// C(n, k), exact; 0 when k > n.
inline Integer binomial(unsigned long n, unsigned long k) {
  if (k > n) return Integer(0);
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

// All k-subsets of {0, ..., n-1} in lexicographic order.
inline std::vector<std::vector<unsigned>> subsets(unsigned n, unsigned k) {
  std::vector<std::vector<unsigned>> out;
  if (k > n) return out;
  std::vector<unsigned> cur(k);
  for (unsigned i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    int i = static_cast<int>(k) - 1;
    while (i >= 0 && cur[i] == n - k + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (unsigned j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

// Sorts a triple and returns the permutation sign; 0 if two indices coincide.
inline int sort3(std::array<unsigned, 3>& t) {
  int sign = 1;
  if (t[0] > t[1]) { std::swap(t[0], t[1]); sign = -sign; }
  if (t[1] > t[2]) { std::swap(t[1], t[2]); sign = -sign; }
  if (t[0] > t[1]) { std::swap(t[0], t[1]); sign = -sign; }
  if (t[0] == t[1] || t[1] == t[2]) return 0;
  return sign;
}

}  // namespace modcone
