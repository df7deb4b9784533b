#pragma once

/// @file symfun.hpp
/// @brief Symmetric functions of series values and Chern-class symbols.
///
/// elementary_symmetric and complete_homogeneous are built by direct
/// prefix-DP over the value list (no reliance on the e/h recurrences — those
/// are verified as identities in the tests).  chern_symbol(i) is a formal
/// variable "ci" of weighted degree i, standing for the i-th Chern class of a
/// bundle of a given rank (so it vanishes above the rank and c_0 = 1).
///
/// p_series(l, rank, zs) is the alternating mix of the two:
///     P_l = sum_{j=0}^{l} (-1)^j c_{l-j} h_j(zs),
/// the polynomial that expresses, on a symplectic projective bundle, the
/// Chern classes of the rank-(2n-2) quotient L_perp/L through the first Chern
/// class of L and its formal inverse.

#include "fgls/series.hpp"

#include <vector>

namespace fgls {

/// e_k(vals): elementary symmetric function of the given series values.
/// e_0 = 1; e_k = 0 for k > vals.size() or k < 0.
inline Series elementary_symmetric(int k, const std::vector<Series>& vals,
                                   const CoeffRing& ring, int trunc) {
  if (k < 0 || k > static_cast<int>(vals.size()))
    return Series::zero(ring, trunc);
  std::vector<Series> e(static_cast<std::size_t>(k) + 1,
                        Series::zero(ring, trunc));
  e[0] = Series::constant(ring, trunc, Rational(1));
  for (const Series& v : vals) {
    detail::require(v.ring() == ring && v.trunc() == trunc,
                    "elementary_symmetric: value ring/trunc mismatch");
    for (int j = k; j >= 1; --j) e[j] += e[j - 1] * v;
  }
  return e[static_cast<std::size_t>(k)];
}

/// h_k(vals): complete homogeneous symmetric function of the series values,
/// sum of all degree-k products.  h_0 = 1; h_k = 0 for k < 0.
inline Series complete_homogeneous(int k, const std::vector<Series>& vals,
                                   const CoeffRing& ring, int trunc) {
  if (k < 0) return Series::zero(ring, trunc);
  std::vector<Series> h(static_cast<std::size_t>(k) + 1,
                        Series::zero(ring, trunc));
  h[0] = Series::constant(ring, trunc, Rational(1));
  for (const Series& v : vals) {
    detail::require(v.ring() == ring && v.trunc() == trunc,
                    "complete_homogeneous: value ring/trunc mismatch");
    // After adding value v:  h'_j = h_j + v * h'_{j-1}  (geometric sum in v).
    for (int j = 1; j <= k; ++j) h[j] += h[j - 1] * v;
  }
  return h[static_cast<std::size_t>(k)];
}

/// The i-th Chern class of a rank-`rank` bundle as a formal symbol: a
/// variable "ci" of weighted degree i; c_0 = 1 and c_i = 0 for i > rank.
inline Series chern_symbol(const CoeffRing& ring, int trunc, int i, int rank) {
  detail::require(rank >= 0, "chern_symbol: rank must be >= 0");
  if (i < 0 || i > rank) return Series::zero(ring, trunc);
  if (i == 0) return Series::constant(ring, trunc, Rational(1));
  return Series::variable(ring, trunc, indexed_var("c", i, i));
}

/// P_l = sum_{j=0}^{l} (-1)^j c_{l-j}(E) h_j(zs) for a rank-`rank` bundle E.
inline Series p_series(int l, int rank, const std::vector<Series>& zs,
                       const CoeffRing& ring, int trunc) {
  detail::require(l >= 0, "p_series: index must be >= 0");
  Series out = Series::zero(ring, trunc);
  for (int j = 0; j <= l; ++j) {
    Series term = chern_symbol(ring, trunc, l - j, rank) *
                  complete_homogeneous(j, zs, ring, trunc);
    out += (j % 2 == 0) ? term : -term;
  }
  return out;
}

}  // namespace fgls
