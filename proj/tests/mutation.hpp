#pragma once

// Corrupted component-group data for mutation tests.

#include <numeric>
#include <vector>

#include "plectic/actions.hpp"

namespace mutation {

/// Single-entry perturbations of a homomorphism by the smallest well-defined step.
inline std::vector<plectic::AbHom> perturbations(const plectic::AbHom& h) {
  std::vector<plectic::AbHom> out;
  const auto& dom = h.domain().moduli();
  const auto& cod = h.codomain().moduli();
  for (std::size_t i = 0; i < cod.size(); ++i)
    for (std::size_t j = 0; j < dom.size(); ++j) {
      const plectic::Int step = cod[i] / std::gcd(dom[j], cod[i]);
      if (step % cod[i] == 0) continue;
      plectic::Matrix m = h.matrix();
      m(i, j) += step;
      out.emplace_back(h.domain(), h.codomain(), m);
    }
  return out;
}

/// Whether corrupted maps break mu(quot(0, chi_F P(a))) == P(a) for some
/// member a, evaluated directly from the maps.
inline bool visible(const plectic::PointContext& ctx, const std::vector<plectic::PlecticElement>& alphas,
                    const plectic::AbHom& quot, const plectic::AbHom& mu) {
  const auto& t = ctx.torus;
  const auto inj = plectic::second_injection(t.vz().group, t.i_r().group);
  for (const auto& a : alphas) {
    if (!plectic::in_cm_group(ctx, a)) continue;
    const plectic::Vec pa = plectic::product_map(a);
    const auto coords = t.i_r().coordinates(ctx.split.chi_f(pa));
    if (mu(quot(inj(*coords))) != pa) return true;
  }
  return false;
}

}  // namespace mutation
