#pragma once

// Randomized comparison of the Smith-form solvers against exhaustive search
// over every abelian group of order <= 64 (each isomorphism type, in
// invariant-factor order and in a shuffled coordinate order).

#include <random>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "plectic/abelian.hpp"
#include "plectic/error.hpp"

namespace sweep {

struct Result {
  std::size_t groups = 0;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  void fail(const std::string& what) {
    if (failures++ == 0) first_failure = what;
  }
};

/// Every d_1 | d_2 | ... | d_k with d_1 > 1 and product <= max_order.
inline std::vector<oracle::Vec> abelian_types(oracle::Int max_order) {
  std::vector<oracle::Vec> out{{}};
  std::function<void(oracle::Vec, oracle::Int)> extend = [&](oracle::Vec v, oracle::Int prod) {
    const oracle::Int last = v.empty() ? 1 : v.back();
    for (oracle::Int d = std::max<oracle::Int>(2, last); prod * d <= max_order; d += last) {
      if (d % last) continue;
      oracle::Vec w = v;
      w.push_back(d);
      out.push_back(w);
      extend(w, prod * d);
    }
  };
  extend({}, 1);
  return out;
}

inline std::string show(const oracle::Vec& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ']';
  return os.str();
}

/// A uniformly random homomorphism (entries scaled to be well defined).
inline oracle::Hom random_hom(std::mt19937_64& rng, const oracle::Vec& dom, const oracle::Vec& cod) {
  oracle::Hom h{dom, cod, {}};
  for (std::size_t j = 0; j < dom.size(); ++j) {
    oracle::Vec img(cod.size());
    for (std::size_t i = 0; i < cod.size(); ++i) {
      const oracle::Int step = cod[i] / std::gcd(dom[j], cod[i]);
      img[i] = oracle::mod(static_cast<oracle::Int>(rng() % 64) * step, cod[i]);
    }
    h.images.push_back(img);
  }
  return h;
}

inline plectic::AbHom to_lib(const oracle::Hom& h) {
  return plectic::AbHom::from_images(plectic::FinAb(h.dom), plectic::FinAb(h.cod), h.images);
}

inline void check_solve(Result& r, const oracle::Hom& f) {
  const plectic::AbHom lf = to_lib(f);
  const auto cod_elems = oracle::elements(f.cod);
  const std::size_t kernel_size = oracle::preimages(f, oracle::Vec(f.cod.size(), 0)).size();
  ++r.cases;
  if (lf.kernel_order() != static_cast<oracle::Int>(kernel_size) ||
      lf.image_order() != static_cast<oracle::Int>(oracle::image_size(f)))
    r.fail("kernel/image order of " + show(f.dom) + "->" + show(f.cod));
  for (const auto& b : cod_elems) {
    ++r.cases;
    const auto pre = oracle::preimages(f, b);
    const auto got = plectic::try_solve_hom(lf, b);
    if (pre.empty() != !got.has_value()) {
      r.fail("solvability of " + show(b) + " for " + show(f.dom) + "->" + show(f.cod));
      continue;
    }
    if (!got) {
      try {
        (void)plectic::solve_hom(lf, b);
        r.fail("solve_hom did not throw NoSolution");
      } catch (const plectic::Error& e) {
        if (e.code() != plectic::Errc::NoSolution) r.fail("wrong error code from solve_hom");
      }
      continue;
    }
    if (f(got->x) != b) r.fail("solution is not a preimage of " + show(b));
    const auto ker = plectic::subgroup_generated(plectic::FinAb(f.dom), got->kernel_generators);
    bool in_kernel = true;
    for (const auto& k : got->kernel_generators) in_kernel = in_kernel && f(k) == oracle::Vec(f.cod.size(), 0);
    if (!in_kernel || ker.order() != static_cast<oracle::Int>(kernel_size))
      r.fail("kernel generators wrong for " + show(f.dom) + "->" + show(f.cod));
  }
}

inline void check_sections(Result& r, const oracle::Hom& f) {
  ++r.cases;
  const plectic::AbHom lf = to_lib(f);
  const bool surjective = oracle::image_size(f) == static_cast<std::size_t>(oracle::order(f.cod));
  // Sections split coordinatewise: s(e_i) ranges over {a : f(a) = e_i, m_i a = 0}.
  std::size_t count = surjective ? 1 : 0;
  if (surjective)
    for (std::size_t i = 0; i < f.cod.size(); ++i) {
      oracle::Vec e(f.cod.size(), 0);
      e[i] = 1 % f.cod[i];
      std::size_t c = 0;
      for (const auto& a : oracle::preimages(f, e)) {
        bool killed = true;
        for (std::size_t j = 0; j < a.size(); ++j) killed = killed && oracle::mod(f.cod[i] * a[j], f.dom[j]) == 0;
        c += killed;
      }
      count *= c;
    }
  const std::string where = show(f.dom) + "->" + show(f.cod);
  try {
    const plectic::AbHom s = plectic::section_of_surjection(lf);
    if (count == 0) {
      r.fail("section returned where none exists: " + where);
      return;
    }
    if (!oracle::same_function(f.cod, [&](const oracle::Vec& y) { return f(s(y)); }, [](const oracle::Vec& y) { return y; }))
      r.fail("not a section: " + where);
    if (plectic::all_sections(lf).size() != count) r.fail("section count differs: " + where);
  } catch (const plectic::Error& e) {
    const auto expected = !surjective ? plectic::Errc::NotSurjective : plectic::Errc::NotSplit;
    if (count != 0 || e.code() != expected) r.fail(std::string("unexpected ") + e.what() + " at " + where);
  }
}

inline void check_fiber(Result& r, const oracle::Hom& f, const oracle::Hom& g) {
  ++r.cases;
  const auto pairs = oracle::fiber_pairs(f, g);
  const auto fp = plectic::fiber_product(to_lib(f), to_lib(g));
  const std::string where = show(f.dom) + "," + show(g.dom) + "->" + show(f.cod);
  if (fp.group.order() != static_cast<oracle::Int>(pairs.size())) {
    r.fail("fiber product order at " + where);
    return;
  }
  std::set<std::pair<oracle::Vec, oracle::Vec>> seen;
  for (const auto& x : fp.group.elements()) seen.emplace(fp.to_a(x), fp.to_b(x));
  const std::set<std::pair<oracle::Vec, oracle::Vec>> want(pairs.begin(), pairs.end());
  if (seen != want) r.fail("fiber product projections at " + where);
}

inline Result run(std::uint64_t seed = 20260101, int homs_per_group = 3) {
  std::mt19937_64 rng(seed);
  auto types = abelian_types(64);
  // shuffled coordinate orders exercise non-invariant presentations
  const std::size_t base = types.size();
  for (std::size_t i = 0; i < base; ++i)
    if (types[i].size() > 1) {
      auto v = types[i];
      std::shuffle(v.begin(), v.end(), rng);
      types.push_back(v);
    }
  std::vector<oracle::Vec> small;
  for (const auto& t : types)
    if (oracle::order(t) <= 16) small.push_back(t);

  Result r;
  for (const auto& a : types) {
    ++r.groups;
    for (int k = 0; k < homs_per_group; ++k) {
      const auto& b = types[rng() % types.size()];
      check_solve(r, random_hom(rng, a, b));
      const auto& q = small[rng() % small.size()];
      check_sections(r, random_hom(rng, a, q));
      // a surjection onto a cyclic quotient of the largest factor
      if (!a.empty()) {
        const oracle::Int top = *std::max_element(a.begin(), a.end());
        oracle::Int d = 1;
        for (oracle::Int c = 2; c <= top; ++c)
          if (top % c == 0 && rng() % 2) d = c;
        oracle::Hom proj{a, {d}, {}};
        for (oracle::Int m : a) proj.images.push_back({m == top ? 1 % d : 0});
        if (oracle::well_defined(proj.dom, proj.cod, proj.images)) check_sections(r, proj);
      }
      const auto& c = small[rng() % small.size()];
      const auto& b2 = small[rng() % small.size()];
      if (oracle::order(a) * oracle::order(b2) <= 1024) check_fiber(r, random_hom(rng, a, c), random_hom(rng, b2, c));
    }
  }
  return r;
}

}  // namespace sweep
