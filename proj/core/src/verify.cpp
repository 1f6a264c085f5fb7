#include "plectic/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "plectic/error.hpp"

namespace plectic {

std::string_view to_string(Status s) noexcept {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skip: return "skipped";
  }
  return "unknown";
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"prodmap", "halftransfer", "taniyama", "cmaction", "pi0"};
  return names;
}

namespace {

constexpr std::size_t kMaxStoredCounterexamples = 10;

std::string vstr(const Vec& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

/// Accumulates cases for one named check.
class Checker {
 public:
  Checker(std::string suite, std::string name) {
    c_.suite = std::move(suite);
    c_.name = std::move(name);
  }

  void expect(bool ok, const std::function<std::string()>& describe) {
    ++c_.cases;
    if (ok) return;
    c_.status = Status::Fail;
    if (c_.counterexamples.size() < kMaxStoredCounterexamples) c_.counterexamples.push_back(describe());
  }
  void add_cases(std::size_t n) { c_.cases += n; }
  void fail(std::string why) { expect(false, [&] { return why; }); }
  void detail(std::string d) { c_.detail = std::move(d); }

  Check done() && { return std::move(c_); }

 private:
  Check c_;
};

Check skipped(const std::string& suite, const std::string& name, const std::string& flag, const std::string& why) {
  Check c;
  c.suite = suite;
  c.name = name;
  c.status = Status::Skip;
  c.flag = flag;
  c.detail = why;
  return c;
}

std::vector<std::vector<Elem>> all_shifts(const GaloisContext& ctx) {
  const auto& hm = ctx.h_f().members();
  std::vector<std::vector<Elem>> out;
  std::vector<std::size_t> idx(ctx.r(), 0);
  while (true) {
    std::vector<Elem> t(ctx.r());
    for (std::size_t x = 0; x < t.size(); ++x) t[x] = hm[idx[x]];
    out.push_back(std::move(t));
    std::size_t x = idx.size();
    while (x > 0 && ++idx[x - 1] == hm.size()) idx[--x] = 0;
    if (x == 0) break;
  }
  return out;
}

std::vector<Elem> all_elements(const FiniteGroup& g) {
  std::vector<Elem> out(g.order());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<Elem>(i);
  return out;
}

/// Coset action on Sigma_K computed from the bijection of Gamma; every member must agree.
std::optional<std::size_t> coset_image(const CMContext& cm, const PlecticElement& a, std::size_t rho) {
  std::optional<std::size_t> image;
  for (Elem g : cm.sigma_k().coset(rho)) {
    const std::size_t y = cm.sigma_k().coset_of(a.apply(g));
    if (image && *image != y) return std::nullopt;
    image = y;
  }
  return image;
}

Vec tate_half_transfer(const CMContext& cm, Elem gamma, const CMType& phi, const EquivariantSection& w) {
  const FiniteGroup& g = cm.group();
  Vec acc = cm.hk_ab().group().zero();
  for (std::size_t rho : phi.members()) {
    const Elem gw = g.mul(gamma, w[rho]);
    const std::size_t moved = cm.sigma_k().coset_of(gw);
    acc = cm.hk_ab().group().add(acc, cm.hk_ab().project(g.mul(g.inv(w[moved]), gw)));
  }
  return acc;
}

// ---------------------------------------------------------------- prodmap

std::vector<Check> suite_prodmap(const Model& m) {
  const std::string S = "prodmap";
  std::vector<Check> out;
  const ContextPtr& ctx = m.base;
  const FiniteGroup& g = *m.gamma;
  const auto group = enumerate_plectic(ctx);
  const auto gammas = all_elements(g);

  {
    Checker c(S, "plectic_group_axioms");
    const auto id = PlecticElement::identity(ctx);
    for (const auto& a : group) {
      c.expect(id * a == a && a * id == a, [&] { return "identity law fails at " + a.to_string(); });
      c.expect(a * a.inverse() == id && a.inverse() * a == id, [&] { return "inverse fails at " + a.to_string(); });
    }
    if (group.size() <= 64) {
      for (const auto& a : group)
        for (const auto& b : group)
          for (const auto& d : group)
            c.expect((a * b) * d == a * (b * d),
                     [&] { return "associativity fails at " + a.to_string() + b.to_string() + d.to_string(); });
    } else {
      for (std::size_t i = 0; i < group.size(); ++i) {
        const auto& a = group[i];
        const auto& b = group[(7 * i + 3) % group.size()];
        const auto& d = group[(13 * i + 5) % group.size()];
        c.expect((a * b) * d == a * (b * d), [&] { return "associativity fails at " + a.to_string(); });
      }
    }
    c.detail("order " + std::to_string(group.size()));
    out.push_back(std::move(c).done());
  }
  {
    Checker c(S, "map_presentation_roundtrip");
    for (const auto& a : group) {
      const auto map = a.as_map();
      bool equivariant = true;
      for (Elem x : gammas)
        for (Elem d : ctx->h_f().members())
          equivariant = equivariant && map[static_cast<std::size_t>(g.mul(x, d))] == g.mul(map[static_cast<std::size_t>(x)], d);
      c.expect(equivariant, [&] { return "not right-H_F-equivariant: " + a.to_string(); });
      c.expect(PlecticElement::from_map(ctx, map) == a, [&] { return "round trip fails at " + a.to_string(); });
    }
    for (const auto& a : group)
      for (const auto& b : group) {
        const auto ab = (a * b).as_map();
        const auto am = a.as_map(), bm = b.as_map();
        bool ok = true;
        for (Elem x : gammas) ok = ok && ab[static_cast<std::size_t>(x)] == am[static_cast<std::size_t>(bm[static_cast<std::size_t>(x)])];
        c.expect(ok, [&] { return "composition is not composition of maps: " + a.to_string() + " " + b.to_string(); });
      }
    out.push_back(std::move(c).done());
  }
  {
    Checker c(S, "galois_embedding_homomorphism");
    for (Elem x : gammas) {
      const auto ex = PlecticElement::embed(ctx, x);
      const auto map = ex.as_map();
      bool left = true;
      for (Elem y : gammas) left = left && map[static_cast<std::size_t>(y)] == g.mul(x, y);
      c.expect(left, [&] { return "embed(" + g.name(x) + ") is not left translation"; });
      for (Elem y : gammas)
        c.expect(ex * PlecticElement::embed(ctx, y) == PlecticElement::embed(ctx, g.mul(x, y)),
                 [&] { return "embed(" + g.name(x) + ")embed(" + g.name(y) + ") != embed(product)"; });
    }
    out.push_back(std::move(c).done());
  }
  {
    Checker c(S, "P_section_independent");
    for (const auto& t : all_shifts(*ctx)) {
      const ContextPtr shifted = ctx->shifted(t);
      for (const auto& a : group) {
        const auto b = a.rebase(shifted);
        c.expect(b.as_map() == a.as_map(), [&] { return "rebase changes the map of " + a.to_string(); });
        c.expect(product_map(b) == product_map(a), [&] { return "P changes under rebase at " + a.to_string(); });
      }
    }
    out.push_back(std::move(c).done());
  }
  {
    Checker c(S, "P_homomorphism");
    const FinAb& ab = ctx->hf_ab().group();
    for (const auto& a : group)
      for (const auto& b : group)
        c.expect(product_map(a * b) == ab.add(product_map(a), product_map(b)),
                 [&] { return "P not multiplicative at " + a.to_string() + " " + b.to_string(); });
    out.push_back(std::move(c).done());
  }
  {
    Checker c(S, "P_equals_transfer");
    const auto shifts = all_shifts(*ctx);
    for (Elem x : gammas) {
      const Vec v = transfer(ctx->sigma(), ctx->hf_ab(), x);
      c.expect(product_map(PlecticElement::embed(ctx, x)) == v, [&] { return "P(embed " + g.name(x) + ") != transfer"; });
      c.expect(ctx->transfer_f()(ctx->gamma_ab().project(x)) == v, [&] { return "transfer hom disagrees at " + g.name(x); });
      for (const auto& t : shifts) {
        std::vector<Elem> s = ctx->section();
        for (std::size_t i = 0; i < s.size(); ++i) s[i] = g.mul(s[i], t[i]);
        c.expect(transfer(ctx->sigma(), ctx->hf_ab(), x, std::span<const Elem>(s)) == v,
                 [&] { return "transfer of " + g.name(x) + " depends on the section"; });
      }
      if (g.is_abelian())
        c.expect(ctx->hf_ab().project(g.pow(x, static_cast<std::int64_t>(ctx->r()))) == v,
                 [&] { return "transfer of " + g.name(x) + " differs from the power map"; });
    }
    c.detail(g.is_abelian() ? "power-map oracle applied" : "Gamma non-abelian: power-map oracle not applicable");
    out.push_back(std::move(c).done());
  }
  return out;
}

// ---------------------------------------------------------------- halftransfer

std::vector<Check> suite_halftransfer(const Model& m) {
  const std::string S = "halftransfer";
  std::vector<Check> out;
  const ContextPtr& ctx = m.base;
  const CMContext& cm = *m.cm;
  const FiniteGroup& g = *m.gamma;
  const auto group = enumerate_plectic(ctx);
  const auto types = enumerate_cm_types(m.cm);
  const FinAb& kab = cm.hk_ab().group();
  const FinAb& fab = cm.hf_ab().group();

  {
    Checker c(S, "sigma_k_action_matches_cosets");
    for (const auto& a : group)
      for (std::size_t rho = 0; rho < cm.sigma_k().index(); ++rho) {
        const auto img = coset_image(cm, a, rho);
        c.expect(img && *img == act_on_sigma_k(cm, a, rho),
                 [&] { return a.to_string() + " on " + cm.sigma_k().coset_name(rho); });
      }
    out.push_back(std::move(c).done());
  }
  {
    Checker c(S, "cm_type_action_law");
    for (const auto& a : group)
      for (const auto& b : group)
        for (const auto& phi : types)
          c.expect(act_on_cm_type(a * b, phi) == act_on_cm_type(a, act_on_cm_type(b, phi)),
                   [&] { return a.to_string() + " " + b.to_string() + " on " + phi.to_string(); });
    out.push_back(std::move(c).done());
  }
  {
    Checker c(S, "conjugations_section_independent");
    for (const auto& t : all_shifts(*ctx)) {
      std::vector<Elem> s = ctx->section();
      for (std::size_t i = 0; i < s.size(); ++i) s[i] = g.mul(s[i], t[i]);
      c.expect(conjugations_for_section(cm, s) == cm.conjugations(), [&] { return std::string("c_x depends on the section"); });
    }
    c.detail("conjugation subgroup of order " + std::to_string(cm.conjugation_subgroup().order()));
    out.push_back(std::move(c).done());
  }
  {
    Checker c(S, "w_independence");
    const auto sections = enumerate_equivariant_sections(m.cm);
    for (const auto& a : group)
      for (const auto& phi : types) {
        const Vec ref = half_transfer(a, phi, sections.front());
        for (const auto& w : sections)
          c.expect(half_transfer(a, phi, w) == ref, [&] { return a.to_string() + " " + phi.to_string(); });
      }
    c.detail(std::to_string(sections.size()) + " equivariant sections");
    out.push_back(std::move(c).done());
  }
  {
    Checker c(S, "cocycle");
    std::map<std::pair<std::size_t, std::size_t>, Vec> cache;
    std::map<std::vector<std::size_t>, std::size_t> type_index;
    for (std::size_t i = 0; i < types.size(); ++i) type_index[types[i].members()] = i;
    auto F = [&](std::size_t ai, std::size_t ti) -> const Vec& {
      auto key = std::make_pair(ai, ti);
      auto it = cache.find(key);
      if (it == cache.end()) it = cache.emplace(key, half_transfer(group[ai], types[ti])).first;
      return it->second;
    };
    for (std::size_t ai = 0; ai < group.size(); ++ai)
      for (std::size_t bi = 0; bi < group.size(); ++bi) {
        const auto ab = group[ai] * group[bi];
        for (std::size_t ti = 0; ti < types.size(); ++ti) {
          const std::size_t moved = type_index.at(act_on_cm_type(group[bi], types[ti]).members());
          c.expect(half_transfer(ab, types[ti]) == kab.add(F(ai, moved), F(bi, ti)), [&] {
            return group[ai].to_string() + " " + group[bi].to_string() + " on " + types[ti].to_string();
          });
        }
      }
    out.push_back(std::move(c).done());
  }
  {
    Checker c(S, "restriction_formula");
    for (const auto& a : group)
      for (const auto& phi : types) {
        const CMType moved = act_on_cm_type(a, phi);
        Vec rhs = product_map(a);
        for (std::size_t x = 0; x < cm.r(); ++x)
          if (phi.at(x) != moved.at(x)) rhs = fab.add(rhs, cm.conjugations()[x]);
        const Vec lhs = cm.res()(half_transfer(a, phi));
        c.expect(lhs == rhs, [&] { return a.to_string() + " " + phi.to_string() + ": " + vstr(lhs) + " vs " + vstr(rhs); });
      }
    out.push_back(std::move(c).done());
  }
  {
    Checker c(S, "galois_matches_tate_formula");
    const auto sections = enumerate_equivariant_sections(m.cm);
    for (Elem x : all_elements(g))
      for (const auto& phi : types)
        for (const auto& w : sections)
          c.expect(half_transfer(PlecticElement::embed(ctx, x), phi, w) == tate_half_transfer(cm, x, phi, w),
                   [&] { return g.name(x) + " " + phi.to_string(); });
    out.push_back(std::move(c).done());
  }
  return out;
}

// ---------------------------------------------------------------- shared setup

struct Prepared {
  std::optional<Splitting> split;
  std::string split_error;
};

Prepared prepare_split(const Model& m) {
  Prepared p;
  try {
    p.split = make_splitting(m.recip);
  } catch (const Error& e) {
    p.split_error = e.what();
  }
  return p;
}

std::optional<Check> cartesian_gate(const std::string& suite, const Model& m, const Prepared& p, bool need_sign) {
  const RecipFlags& f = m.recip->flags();
  if (!f.top_cartesian)
    return skipped(suite, "all", "top_cartesian", "the norm square of the model is not Cartesian");
  if (!p.split) return skipped(suite, "all", "splitting", "no admissible splitting: " + p.split_error);
  if (need_sign && !f.sign_compatible)
    return skipped(suite, "all", "sign_compatible", "sign_F does not map e_x to c_x");
  if (need_sign && !f.sign_dies_in_k)
    return skipped(suite, "all", "sign_dies_in_k", "i_KF o sign_F is not zero");
  return std::nullopt;
}

// ---------------------------------------------------------------- taniyama

std::vector<Check> suite_taniyama(const Model& m) {
  const std::string S = "taniyama";
  std::vector<Check> out;
  const RecipModel& r = *m.recip;
  const RecipFlags& fl = r.flags();
  const Prepared prep = prepare_split(m);
  if (auto gate = cartesian_gate(S, m, prep, false)) return {*gate};
  const Splitting& split = *prep.split;
  const ContextPtr& ctx = m.base;
  const FiniteGroup& g = *m.gamma;
  const auto group = enumerate_plectic(ctx);
  const auto types = enumerate_cm_types(m.cm);

  {
    Checker c(S, "splitting_constraints");
    c.expect(compose(r.rec_f(), split.chi_f) == AbHom::identity(r.rec_f().codomain()),
             [] { return std::string("rec_F o chi_F != id"); });
    if (split.conjugation_applied)
      for (std::size_t x = 0; x < m.cm->r(); ++x)
        c.expect(split.chi_f(m.cm->conjugations()[x]) == r.sign_f()(r.sign_group().basis(x)),
                 [&] { return "chi_F(c_x) != sign_F(e_x) at x = " + std::to_string(x); });
    c.expect(compose(split.chi_f, ctx->transfer_f()) == compose(r.i_fq(), r.chi_cyc()),
             [] { return std::string("chi_F o V_F/Q != i_FQ o chi_cyc"); });
    c.detail(split.conjugation_applied ? "conjugation and cyclotomic conditions"
                                       : "cyclotomic condition only (sign_compatible is false)");
    out.push_back(std::move(c).done());
  }
  {
    Checker c(S, "existence_uniqueness");
    const HomSolver both(pairing(r.n_kf(), r.rec_k()));
    c.expect(both.injective(), [] { return std::string("(n_KF, rec_K) is not injective"); });
    for (const auto& a : group)
      for (const auto& phi : types) {
        try {
          const Vec f = taniyama(split, a, phi);
          const Vec fphi = half_transfer(a, phi);
          c.expect(r.rec_k()(f) == fphi && r.n_kf()(f) == split.chi_f(m.cm->res()(fphi)),
                   [&] { return "equations fail at " + a.to_string() + " " + phi.to_string(); });
        } catch (const Error& e) {
          c.fail(a.to_string() + " " + phi.to_string() + ": " + e.what());
        }
      }
    out.push_back(std::move(c).done());
  }
  {
    Checker c(S, "cocycle");
    for (const auto& a : group)
      for (const auto& b : group)
        for (const auto& phi : types) {
          const Vec lhs = taniyama(split, a * b, phi);
          const Vec rhs = r.i_k().add(taniyama(split, a, act_on_cm_type(b, phi)), taniyama(split, b, phi));
          c.expect(lhs == rhs, [&] { return a.to_string() + " " + b.to_string() + " " + phi.to_string(); });
        }
    out.push_back(std::move(c).done());
  }

  const bool lemma_ready = split.conjugation_applied && split.cyclotomic_applied && fl.sign_dies_in_k;
  if (!lemma_ready) {
    out.push_back(skipped(S, "galois_restriction", fl.sign_compatible ? "sign_dies_in_k" : "sign_compatible",
                          "the chi_F-free characterization needs the sign conditions"));
    return out;
  }
  {
    Checker c(S, "galois_restriction");
    std::size_t unique = 0;
    for (Elem x : all_elements(g))
      for (const auto& phi : types) {
        const Vec f = taniyama(split, PlecticElement::embed(ctx, x), phi);
        const GaloisTaniyama gt = taniyama_galois(r, x, phi);
        const bool member = std::find(gt.solutions.begin(), gt.solutions.end(), f) != gt.solutions.end();
        c.expect(member, [&] { return g.name(x) + " " + phi.to_string() + ": plectic value " + vstr(f) + " violates"; });
        if (fl.tate_cartesian) c.expect(gt.unique, [&] { return g.name(x) + " " + phi.to_string() + ": not unique"; });
        if (gt.unique) ++unique;
      }
    c.detail(fl.tate_cartesian ? "unique solutions, compared exactly"
                               : "membership only; " + std::to_string(unique) + " cases unique");
    out.push_back(std::move(c).done());
  }
  if (!fl.tate_cartesian)
    out.push_back(skipped(S, "galois_restriction_uniqueness", "tate_cartesian",
                          "(i_KF n_KF, rec_K) does not determine elements of I_K"));
  return out;
}

// ---------------------------------------------------------------- CM action

bool is_full(const TorusModel& t) { return t.i_r().order() == t.model()->i_f().order(); }
bool is_minimal(const TorusModel& t) { return t.i_r().order() == image(t.model()->i_fq()).order(); }

PointContext point_context(const Model& m, const Splitting& split, const TorusModel& t) {
  return PointContext{split, t, m.class_group};
}

std::vector<Check> suite_cmaction(const Model& m) {
  const std::string S = "cmaction";
  std::vector<Check> out;
  const Prepared prep = prepare_split(m);
  if (auto gate = cartesian_gate(S, m, prep, true)) return {*gate};
  const Splitting& split = *prep.split;
  const ContextPtr& ctx = m.base;
  const FiniteGroup& g = *m.gamma;
  const auto group = enumerate_plectic(ctx);
  const SubAb v_image = image(ctx->transfer_f());

  for (const TorusModel& t : m.tori) {
    const PointContext pc = point_context(m, split, t);
    const auto points = sample_cm_points(pc);
    std::vector<PlecticElement> members;
    for (const auto& a : group)
      if (in_cm_group(pc, a)) members.push_back(a);
    const std::string tag = "[" + t.name() + "]";

    {
      Checker c(S, "membership_subgroup" + tag);
      auto member = [&](const PlecticElement& a) { return in_cm_group(pc, a); };
      for (const auto& a : members) {
        c.expect(member(a.inverse()), [&] { return "inverse leaves the group: " + a.to_string(); });
        for (const auto& b : members) c.expect(member(a * b), [&] { return a.to_string() + " " + b.to_string(); });
      }
      for (Elem x : all_elements(g))
        c.expect(member(PlecticElement::embed(ctx, x)), [&] { return "embed(" + g.name(x) + ") is not a member"; });
      c.detail(std::to_string(members.size()) + " of " + std::to_string(group.size()) + " elements");
      out.push_back(std::move(c).done());
    }
    if (is_full(t)) {
      Checker c(S, "full_torus_everything" + tag);
      for (const auto& a : group) c.expect(in_cm_group(pc, a), [&] { return a.to_string(); });
      out.push_back(std::move(c).done());
    }
    if (is_minimal(t)) {
      Checker c(S, "minimal_torus_predicate" + tag);
      for (const auto& a : group)
        c.expect(in_cm_group(pc, a) == v_image.contains(product_map(a)), [&] { return a.to_string(); });
      out.push_back(std::move(c).done());
    }
    {
      Checker c(S, "action_law" + tag);
      std::map<std::pair<std::size_t, std::size_t>, CMPoint> cache;
      auto act = [&](std::size_t ai, std::size_t pi) -> const CMPoint& {
        auto key = std::make_pair(ai, pi);
        auto it = cache.find(key);
        if (it == cache.end()) it = cache.emplace(key, plectic_act(pc, members[ai], points[pi]).point).first;
        return it->second;
      };
      try {
        const auto id = PlecticElement::identity(ctx);
        for (const auto& p : points) c.expect(plectic_act(pc, id, p).point == p, [&] { return "identity moves " + p.to_string(); });
        for (std::size_t ai = 0; ai < members.size(); ++ai)
          for (std::size_t bi = 0; bi < members.size(); ++bi) {
            const auto ab = members[ai] * members[bi];
            for (std::size_t pi = 0; pi < points.size(); ++pi) {
              const CMPoint lhs = plectic_act(pc, ab, points[pi]).point;
              const CMPoint mid = act(bi, pi);
              const CMPoint rhs = plectic_act(pc, members[ai], mid).point;
              c.expect(lhs == rhs, [&] {
                return members[ai].to_string() + " " + members[bi].to_string() + " on " + points[pi].to_string();
              });
            }
          }
      } catch (const Error& e) {
        c.fail(e.what());
      }
      c.detail(std::to_string(points.size()) + " points");
      out.push_back(std::move(c).done());
    }
    {
      Checker c(S, "galois_extension" + tag);
      for (Elem x : all_elements(g))
        for (const auto& p : points) {
          try {
            const CMPoint lhs = plectic_act(pc, PlecticElement::embed(ctx, x), p).point;
            const CMPoint rhs = galois_act(pc, x, p).point;
            c.expect(lhs == rhs, [&] { return g.name(x) + " on " + p.to_string() + ": " + lhs.to_string() + " vs " + rhs.to_string(); });
          } catch (const Error& e) {
            c.fail(g.name(x) + " on " + p.to_string() + ": " + e.what());
          }
        }
      c.detail(m.recip->flags().tate_cartesian ? "Galois side from the chi_F-free characterization"
                                               : "Galois side from the plectic Taniyama element");
      out.push_back(std::move(c).done());
    }
    {
      Checker c(S, "sign_bookkeeping" + tag);
      const CMContext& cm = *m.cm;
      for (const auto& a : members)
        for (const auto& phi : enumerate_cm_types(m.cm)) {
          const CMPoint p = make_cm_point(pc, phi, m.class_group.group.zero(), m.recip->i_f().zero(), m.recip->i_k().zero());
          try {
            const ActionResult res = plectic_act(pc, a, p);
            // m_x recomputed from the coset action on Sigma_K
            std::vector<int> expect(cm.r());
            for (std::size_t x = 0; x < cm.r(); ++x) {
              const auto moved = coset_image(cm, a, phi.at(a.inverse().pi(x)));
              expect[x] = moved && *moved == phi.at(x) ? 0 : 1;
            }
            c.expect(res.m == expect, [&] { return "m-vector differs at " + a.to_string() + " " + phi.to_string(); });
          } catch (const Error& e) {
            c.fail(a.to_string() + " " + phi.to_string() + ": " + e.what());
          }
        }
      out.push_back(std::move(c).done());
    }
  }
  return out;
}

// ---------------------------------------------------------------- pi0

std::vector<Check> suite_pi0(const Model& m) {
  const std::string S = "pi0";
  std::vector<Check> out;
  const Prepared prep = prepare_split(m);
  if (auto gate = cartesian_gate(S, m, prep, true)) return {*gate};
  const Splitting& split = *prep.split;
  const ContextPtr& ctx = m.base;
  const FiniteGroup& g = *m.gamma;
  const auto group = enumerate_plectic(ctx);

  for (const TorusModel& t : m.tori) {
    const PointContext pc = point_context(m, split, t);
    const auto points = sample_cm_points(pc);
    std::vector<PlecticElement> members;
    for (const auto& a : group)
      if (in_cm_group(pc, a)) members.push_back(a);
    const std::string tag = "[" + t.name() + "]";

    {
      Checker c(S, "equivariance" + tag);
      const EquivarianceReport rep = check_pi0_equivariance(pc, members, points);
      c.add_cases(rep.checked);
      for (const auto& ce : rep.counterexamples) c.fail(ce.alpha + " on " + ce.point + ": " + ce.reason);
      c.detail(std::string(t.derived() ? "derived" : "explicit") + " component group " + t.p_r().to_string());
      out.push_back(std::move(c).done());
    }
    {
      Checker c(S, "galois_multiplication_rule" + tag);
      const FinAb& pr = t.p_r();
      for (Elem x : all_elements(g)) {
        const Vec u = t.iota_q()(m.recip->chi_cyc()(ctx->gamma_ab().project(x)));
        const Vec via_iota = t.quot()(second_injection(t.vz().group, t.i_r().group)(u));
        try {
          const Vec lam = pi0_lambda(pc, PlecticElement::embed(ctx, x));
          c.expect(lam == via_iota, [&] { return g.name(x) + ": " + vstr(lam) + " vs " + vstr(via_iota); });
          for (const Vec& q : pr.elements())
            c.expect(pi0_act(pc, PlecticElement::embed(ctx, x), q) == pr.add(via_iota, q), [&] { return g.name(x); });
        } catch (const Error& e) {
          c.fail(g.name(x) + ": " + e.what());
        }
      }
      out.push_back(std::move(c).done());
    }
    {
      Checker c(S, "cm_group_embeds" + tag);
      for (const auto& a : members) {
        try {
          const Vec lam = pi0_lambda(pc, a);
          c.expect(pi0_act(pc, Pi0Member{a, lam}, t.p_r().zero()) == lam, [&] { return a.to_string(); });
        } catch (const Error& e) {
          c.fail(a.to_string() + ": " + e.what());
        }
      }
      out.push_back(std::move(c).done());
    }
    if (is_full(t)) {
      Checker c(S, "full_torus_every_element_acts" + tag);
      for (const auto& a : group) {
        try {
          (void)pi0_lambda(pc, a);
          c.expect(true, [] { return std::string(); });
        } catch (const Error& e) {
          c.fail(a.to_string() + ": " + e.what());
        }
      }
      out.push_back(std::move(c).done());
    }
  }
  return out;
}

}  // namespace

std::vector<Check> run_suite(const Model& model, std::string_view suite) {
  if (suite == "prodmap") return suite_prodmap(model);
  if (suite == "halftransfer") return suite_halftransfer(model);
  if (suite == "taniyama") return suite_taniyama(model);
  if (suite == "cmaction") return suite_cmaction(model);
  if (suite == "pi0") return suite_pi0(model);
  throw Error(Errc::InvalidArgument, "unknown suite '" + std::string(suite) + "'");
}

// ---------------------------------------------------------------- orbits

std::vector<std::size_t> OrbitTable::sizes() const {
  std::vector<std::size_t> out;
  for (const auto& o : orbits) out.push_back(o.size());
  return out;
}

OrbitTable compute_orbits(const Model& model, std::string_view group) {
  std::vector<PlecticElement> gens;
  if (group == "galois") gens = galois_generators(model.base);
  else if (group == "plectic") gens = plectic_generators(model.base);
  else if (group != "none") throw Error(Errc::InvalidArgument, "group must be galois, plectic or none");
  const auto types = enumerate_cm_types(model.cm);
  OrbitTable t;
  t.group = std::string(group);
  for (const auto& orbit : orbit_decomposition(gens, types)) {
    std::vector<CMType> o;
    for (std::size_t i : orbit) o.push_back(types[i]);
    t.orbits.push_back(std::move(o));
  }
  return t;
}

// ---------------------------------------------------------------- chi dependence

bool ChiDependence::ok() const {
  return std::all_of(tori.begin(), tori.end(), [](const TorusSummary& t) { return t.pi0_invariant; });
}

ChiDependence chi_dependence(const Model& model) {
  ChiDependence out;
  const auto splits = all_splittings(model.recip);
  out.splittings = splits.size();
  if (splits.empty()) return out;
  out.conjugation_applied = splits.front().conjugation_applied;
  out.cyclotomic_applied = splits.front().cyclotomic_applied;
  const auto group = enumerate_plectic(model.base);
  const auto types = enumerate_cm_types(model.cm);
  const bool cartesian = model.recip->flags().top_cartesian;

  for (const auto& s : splits) {
    ChiDependence::PerChi pc;
    pc.fingerprint = s.fingerprint();
    if (cartesian)
      for (const auto& a : group)
        for (const auto& phi : types) pc.taniyama.push_back(vstr(taniyama(s, a, phi)));
    for (const auto& t : model.tori) {
      std::vector<bool> bits;
      for (const auto& a : group) bits.push_back(in_cm_group(s, t.i_r(), a));
      pc.members.push_back(std::move(bits));
    }
    out.per_chi.push_back(std::move(pc));
  }
  for (std::size_t i = 1; i < out.per_chi.size(); ++i)
    for (std::size_t j = 0; j < out.per_chi[i].taniyama.size(); ++j)
      if (out.per_chi[i].taniyama[j] != out.per_chi[0].taniyama[j]) ++out.taniyama_differences;
  out.taniyama_varies = out.taniyama_differences > 0;

  const bool point_actions = cartesian && model.recip->flags().sign_compatible && model.recip->flags().sign_dies_in_k;
  for (std::size_t ti = 0; ti < model.tori.size(); ++ti) {
    const TorusModel& t = model.tori[ti];
    ChiDependence::TorusSummary sum;
    sum.name = t.name();
    std::vector<std::size_t> common;
    for (std::size_t ai = 0; ai < group.size(); ++ai) {
      bool all = true, any = false;
      for (const auto& pc : out.per_chi) {
        all = all && pc.members[ti][ai];
        any = any || pc.members[ti][ai];
      }
      if (all != any) sum.membership_varies = true;
      if (all) common.push_back(ai);
    }
    sum.common_members = common.size();

    std::vector<PointContext> ctxs;
    for (const auto& s : splits) ctxs.push_back(PointContext{s, t, model.class_group});
    const auto points = point_actions ? sample_cm_points(ctxs.front()) : std::vector<CMPoint>{};
    for (std::size_t ai : common) {
      std::optional<Vec> ref;
      for (const auto& pc : ctxs) {
        std::optional<Vec> lam;
        try {
          lam = pi0_lambda(pc, group[ai]);
        } catch (const Error&) {
          sum.pi0_invariant = false;
        }
        ++sum.pi0_compared;
        if (!lam) continue;
        if (!ref) ref = lam;
        else if (*ref != *lam) sum.pi0_invariant = false;
      }
      for (const auto& p : points) {
        std::optional<CMPoint> first;
        for (const auto& pc : ctxs) {
          ++sum.point_compared;
          const CMPoint q = plectic_act(pc, group[ai], p).point;
          if (!first) first = q;
          else if (!(*first == q)) ++sum.point_differences;
        }
      }
    }
    sum.point_action_varies = sum.point_differences > 0;
    out.tori.push_back(std::move(sum));
  }
  return out;
}

}  // namespace plectic
