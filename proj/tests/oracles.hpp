#pragma once

// Independent reference computations used only by the tests. None of them
// goes through the engine's Fock basis or state-tree evaluator.

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "modvir/virasoro.hpp"

namespace oracle {

/// Number of sets of distinct positive numbers from {first, first+2, ...}
/// (given doubled) whose doubled sum is `twice_sum` and whose size has the
/// given parity. first = 1 gives half-odd-integers, first = 2 positive integers.
inline std::size_t count_distinct_sets(int first, int twice_sum, int parity) {
  // table[s][k%2]: subsets with doubled sum s and size parity k%2.
  std::vector<std::array<std::size_t, 2>> table(twice_sum + 1, {0, 0});
  table[0][0] = 1;
  for (int part = first; part <= twice_sum; part += 2) {
    for (int s = twice_sum; s >= part; --s) {
      table[s][0] += table[s - part][1];
      table[s][1] += table[s - part][0];
    }
  }
  return table[twice_sum][parity];
}

/// Graded dimensions of L(1/2, h) for h in {0, 1/2, 1/16}, read off from the
/// fermionic realization: h = 0 even NS sets, h = 1/2 odd NS sets, h = 1/16
/// Ramond sets of either parity. In the Ramond sector a(0) can always be
/// appended to fix the parity, so each parity sees every set of distinct
/// positive integers exactly once.
inline std::vector<std::size_t> ising_dims(int sixteen_h, int max_degree) {
  std::vector<std::size_t> out;
  for (int n = 0; n <= max_degree; ++n) {
    switch (sixteen_h) {
      case 0: out.push_back(count_distinct_sets(1, 2 * n, 0)); break;
      case 8: out.push_back(count_distinct_sets(1, 2 * n + 1, 1)); break;
      default:
        // sets of distinct positive integers summing to n, any size
        out.push_back(count_distinct_sets(2, 2 * n, 0) + count_distinct_sets(2, 2 * n, 1));
    }
  }
  return out;
}

/// Components of the vacuum-module state L(word[0]) ... L(word[k-1]) 1 acting
/// on a Verma vector, computed straight from the Borcherds iterate formula
///   (w_p b)_m = sum_i (-1)^i binom(p,i) [ w_{p-i} b_{m+i} - (-1)^p b_{p+m-i} w_i ]
/// with w = omega, p = 1 - k, together with (L(-1)b)_m = -m b_{m-1} and
/// 1_m = delta_{m,-1}. Only finitely many i contribute on a given target.
class IterateOracle {
 public:
  explicit IterateOracle(const modvir::VermaModule& module) : module_(module) {}

  modvir::VermaVector apply(std::span<const int> word, int m, const modvir::VermaVector& t) const {
    using namespace modvir;
    const Ring& ring = module_.ring();
    if (t.is_zero()) return VermaVector(ring);
    const int dt = *t.degree();
    int kb = 0;
    for (int w : word) kb -= w;
    if (dt + kb - m - 1 < 0) return VermaVector(ring);
    if (word.empty()) return m == -1 ? t : VermaVector(ring);

    const int k = -word.front();
    const auto rest = word.subspan(1);
    if (k == 1) {
      VermaVector out = apply(rest, m - 1, t);
      out *= ring.from_int(-m);
      return out;
    }
    const int p = 1 - k;
    int rest_degree = kb - k;
    VermaVector out(ring);
    // omega_{p-i} b_{m+i}: b_{m+i} t vanishes once m + i > dt + rest_degree - 1.
    for (int i = 0; m + i <= dt + rest_degree - 1; ++i) {
      VermaVector inner = apply(rest, m + i, t);
      if (inner.is_zero()) continue;
      Scalar coeff = ring.from_rational(binomial(p, i) * (i % 2 ? -1 : 1));
      out.add_scaled(module_.apply_mode(p - i - 1, inner), coeff);
    }
    // b_{p+m-i} omega_i: omega_i = L(i-1) kills t once i - 1 > dt.
    const int sign_p = (p % 2 == 0) ? 1 : -1;
    for (int i = 0; i <= dt + 1; ++i) {
      VermaVector inner = module_.apply_mode(i - 1, t);
      if (inner.is_zero()) continue;
      Scalar coeff = ring.from_rational(binomial(p, i) * (i % 2 ? -1 : 1) * -sign_p);
      out.add_scaled(apply(rest, p + m - i, inner), coeff);
    }
    return out;
  }

 private:
  const modvir::VermaModule& module_;
};

}  // namespace oracle
