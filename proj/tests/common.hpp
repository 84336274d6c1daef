// Helpers shared by the unit tests.

#pragma once

#include <cstdint>
#include <vector>

#include "edcurve/exactnum.hpp"
#include "edcurve/scene.hpp"

namespace edtest {

using edcurve::Rat;
using edcurve::UniPoly;

/// Polynomial with integer coefficients in [-bound, bound] and exact degree d.
inline UniPoly random_poly(edcurve::Rng& rng, int d, std::int64_t bound = 9) {
  std::vector<Rat> c(static_cast<std::size_t>(d) + 1);
  for (auto& x : c) x = Rat(static_cast<long>(rng.uniform_int(-bound, bound)));
  while (c.back() == 0) c.back() = Rat(static_cast<long>(rng.uniform_int(-bound, bound)));
  return UniPoly(c);
}

/// prod (t - r_i)
inline UniPoly from_roots(const std::vector<Rat>& roots) {
  UniPoly p = UniPoly::constant(1);
  for (const auto& r : roots) p = p * UniPoly::linear_root(r);
  return p;
}

}  // namespace edtest
