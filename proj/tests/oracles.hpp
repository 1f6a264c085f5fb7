#pragma once

// Brute-force oracles. They only use plain integer vectors, permutations and
// the multiplication table of a group; nothing here calls the Smith-form or
// coset machinery under test.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "plectic/cm.hpp"

namespace oracle {

using Int = std::int64_t;
using Vec = std::vector<Int>;

// ------------------------------------------------------------ abelian groups

/// All elements of Z/m_1 + ... + Z/m_k in mixed-radix order.
inline std::vector<Vec> elements(const Vec& moduli) {
  std::vector<Vec> out{Vec(moduli.size(), 0)};
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    std::vector<Vec> next;
    for (const auto& v : out)
      for (Int a = 0; a < moduli[i]; ++a) {
        Vec w = v;
        w[i] = a;
        next.push_back(std::move(w));
      }
    out = std::move(next);
  }
  return out;
}

inline Int mod(Int a, Int m) { return ((a % m) + m) % m; }

/// A homomorphism given by the images of the domain basis vectors.
struct Hom {
  Vec dom, cod;
  std::vector<Vec> images;

  Vec operator()(const Vec& x) const {
    Vec y(cod.size(), 0);
    for (std::size_t j = 0; j < dom.size(); ++j)
      for (std::size_t i = 0; i < cod.size(); ++i) y[i] = mod(y[i] + x[j] * images[j][i], cod[i]);
    return y;
  }
};

inline bool well_defined(const Vec& dom, const Vec& cod, const std::vector<Vec>& images) {
  for (std::size_t j = 0; j < dom.size(); ++j)
    for (std::size_t i = 0; i < cod.size(); ++i)
      if (mod(dom[j] * images[j][i], cod[i]) != 0) return false;
  return true;
}

/// Every homomorphism dom -> cod.
inline std::vector<Hom> all_homs(const Vec& dom, const Vec& cod) {
  const auto targets = elements(cod);
  std::vector<Hom> out;
  std::vector<std::size_t> idx(dom.size(), 0);
  while (true) {
    std::vector<Vec> images;
    for (std::size_t j = 0; j < dom.size(); ++j) images.push_back(targets[idx[j]]);
    if (well_defined(dom, cod, images)) out.push_back(Hom{dom, cod, images});
    std::size_t j = idx.size();
    while (j > 0 && ++idx[j - 1] == targets.size()) idx[--j] = 0;
    if (j == 0) break;
  }
  return out;
}

/// Pointwise comparison over every element of the domain.
template <class F, class G>
bool same_function(const Vec& dom, F&& f, G&& g) {
  for (const auto& x : elements(dom))
    if (f(x) != g(x)) return false;
  return true;
}

inline std::vector<Vec> preimages(const Hom& f, const Vec& b) {
  std::vector<Vec> out;
  for (const auto& x : elements(f.dom))
    if (f(x) == b) out.push_back(x);
  return out;
}

inline std::size_t image_size(const Hom& f) {
  std::set<Vec> s;
  for (const auto& x : elements(f.dom)) s.insert(f(x));
  return s.size();
}

inline Int order(const Vec& moduli) {
  return std::accumulate(moduli.begin(), moduli.end(), Int{1}, std::multiplies<>());
}

/// Sections s of f (f o s == id) by exhaustive search.
inline std::vector<Hom> all_sections(const Hom& f) {
  std::vector<Hom> out;
  for (auto& s : all_homs(f.cod, f.dom)) {
    bool ok = true;
    for (const auto& y : elements(f.cod)) ok = ok && f(s(y)) == y;
    if (ok) out.push_back(std::move(s));
  }
  return out;
}

/// Pairs (a, b) with f(a) == g(b).
inline std::vector<std::pair<Vec, Vec>> fiber_pairs(const Hom& f, const Hom& g) {
  std::vector<std::pair<Vec, Vec>> out;
  for (const auto& a : elements(f.dom))
    for (const auto& b : elements(g.dom))
      if (f(a) == g(b)) out.emplace_back(a, b);
  return out;
}

/// Invariant factors (> 1) of a finite abelian group from its element orders:
/// the number of elements of order dividing k determines the isomorphism type.
inline std::vector<std::size_t> order_profile(const Vec& moduli) {
  const Int n = order(moduli);
  std::vector<std::size_t> prof;
  for (Int k = 1; k <= n; ++k) {
    if (n % k) continue;
    std::size_t c = 0;
    for (const auto& x : elements(moduli)) {
      bool killed = true;
      for (std::size_t i = 0; i < x.size(); ++i) killed = killed && mod(k * x[i], moduli[i]) == 0;
      c += killed;
    }
    prof.push_back(c);
  }
  return prof;
}

// ------------------------------------------------------------ plectic maps

/// Right-H-equivariant bijections of the group, by permutation search.
inline std::vector<std::vector<plectic::Elem>> equivariant_bijections(const plectic::FiniteGroup& g,
                                                                      const std::vector<plectic::Elem>& h) {
  const std::size_t n = g.order();
  std::vector<plectic::Elem> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<plectic::Elem>> out;
  do {
    bool ok = true;
    for (std::size_t x = 0; ok && x < n; ++x)
      for (plectic::Elem d : h)
        if (perm[static_cast<std::size_t>(g.mul(static_cast<plectic::Elem>(x), d))] != g.mul(perm[x], d)) {
          ok = false;
          break;
        }
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

/// Left H-cosets as sorted member lists, found by brute force.
inline std::vector<std::vector<plectic::Elem>> cosets(const plectic::FiniteGroup& g, const std::vector<plectic::Elem>& h) {
  std::set<std::vector<plectic::Elem>> s;
  for (std::size_t x = 0; x < g.order(); ++x) {
    std::vector<plectic::Elem> c;
    for (plectic::Elem d : h) c.push_back(g.mul(static_cast<plectic::Elem>(x), d));
    std::sort(c.begin(), c.end());
    s.insert(c);
  }
  return {s.begin(), s.end()};
}

/// Sets of cosets of H_K meeting each c-pair exactly once.
inline std::set<std::set<std::vector<plectic::Elem>>> cm_types(const plectic::FiniteGroup& g,
                                                               const std::vector<plectic::Elem>& h_k, plectic::Elem c) {
  const auto cs = cosets(g, h_k);
  auto cmul = [&](const std::vector<plectic::Elem>& coset) {
    std::vector<plectic::Elem> out;
    for (auto x : coset) out.push_back(g.mul(c, x));
    std::sort(out.begin(), out.end());
    return out;
  };
  std::set<std::set<std::vector<plectic::Elem>>> out;
  const std::size_t n = cs.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::set<std::vector<plectic::Elem>> phi;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) phi.insert(cs[i]);
    bool ok = true;
    for (const auto& co : cs) ok = ok && (phi.count(co) + phi.count(cmul(co)) == 1);
    if (ok) out.insert(phi);
  }
  return out;
}

/// Image of a set of cosets under a bijection of the group.
inline std::set<std::vector<plectic::Elem>> image_of(const std::vector<plectic::Elem>& map,
                                                      const std::set<std::vector<plectic::Elem>>& phi) {
  std::set<std::vector<plectic::Elem>> out;
  for (const auto& co : phi) {
    std::vector<plectic::Elem> im;
    for (auto x : co) im.push_back(map[static_cast<std::size_t>(x)]);
    std::sort(im.begin(), im.end());
    out.insert(im);
  }
  return out;
}

}  // namespace oracle
