#include "plectic/actions.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "plectic/error.hpp"

namespace plectic {

namespace {

FinAb sign_group(const RecipModel& m) { return m.sign_group(); }

Vec concat(const Vec& a, const Vec& b) {
  Vec out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

std::string vec_string(const Vec& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

}  // namespace

// ---------------------------------------------------------------- torus

TorusModel TorusModel::make(RecipPtr model, std::string name, const std::vector<Vec>& vz_generators,
                            const std::vector<Vec>& i_r_generators, std::optional<ComponentData> explicit_data) {
  const RecipModel& m = *model;
  TorusModel t;
  t.name_ = std::move(name);
  t.vz_ = subgroup_generated(sign_group(m), vz_generators);
  t.i_r_ = subgroup_generated(m.i_f(), i_r_generators);

  std::vector<Vec> iq_images;
  for (std::size_t j = 0; j < m.i_q().rank(); ++j) {
    auto coords = t.i_r_.coordinates(m.i_fq()(m.i_q().basis(j)));
    if (!coords) throw Error(Errc::InvalidArgument, "torus '" + t.name_ + "': image of i_FQ is not inside I_R");
    iq_images.push_back(*coords);
  }
  t.iota_q_ = AbHom::from_images(m.i_q(), t.i_r_.group, iq_images);

  const FinAb dom = direct_sum(t.vz_.group, t.i_r_.group);
  const AbHom rec_r = compose(m.rec_f(), t.i_r_.inclusion);
  const AbHom c_map = AbHom::from_images(sign_group(m), m.cm()->hf_ab().group(), m.cm()->conjugations());
  const AbHom vz_r = compose(c_map, t.vz_.inclusion);

  if (explicit_data) {
    if (!(explicit_data->quot.domain() == dom) || !(explicit_data->quot.codomain() == explicit_data->p_r) ||
        !(explicit_data->mu.domain() == explicit_data->p_r) ||
        !(explicit_data->mu.codomain() == m.cm()->hf_ab().group()))
      throw Error(Errc::InvalidArgument, "torus '" + t.name_ + "': component maps have the wrong signature");
    t.quot_ = explicit_data->quot;
    t.mu_ = explicit_data->mu;
  } else {
    std::vector<Vec> relations;
    for (const Vec& s : t.vz_.group.elements()) {
      const Vec amb = t.vz_.inclusion(s);
      if (auto u = t.i_r_.coordinates(m.sign_f()(amb))) relations.push_back(concat(s, t.i_r_.group.neg(*u)));
    }
    for (const Vec& k : kernel(rec_r).ambient_elements()) relations.push_back(concat(t.vz_.group.zero(), k));
    QuotAb q = quotient(dom, relations);
    t.quot_ = q.projection;
    t.mu_ = factor_through(t.quot_, copairing(vz_r, rec_r));
    t.derived_ = true;
  }

  if (!t.quot_.is_surjective()) throw Error(Errc::NotSurjective, "torus '" + t.name_ + "': quot is not surjective");
  const AbHom lower = compose(t.mu_, compose(t.quot_, second_injection(t.vz_.group, t.i_r_.group)));
  if (!(lower == rec_r))
    throw Error(Errc::DiagramNotCommuting, "torus '" + t.name_ + "': mu o quot(0, u) differs from rec_F(u)");
  t.model_ = std::move(model);
  return t;
}

TorusModel TorusModel::minimal(RecipPtr model) {
  const RecipModel& m = *model;
  std::vector<Vec> gens;
  for (std::size_t j = 0; j < m.i_q().rank(); ++j) gens.push_back(m.i_fq()(m.i_q().basis(j)));
  return make(std::move(model), "minimal", {Vec(m.cm()->r(), 1)}, gens);
}

TorusModel TorusModel::full(RecipPtr model) {
  const RecipModel& m = *model;
  std::vector<Vec> vz, ir;
  for (std::size_t x = 0; x < m.cm()->r(); ++x) vz.push_back(m.sign_group().basis(x));
  for (std::size_t i = 0; i < m.i_f().rank(); ++i) ir.push_back(m.i_f().basis(i));
  return make(std::move(model), "full", vz, ir);
}

TorusModel TorusModel::with_maps(AbHom quot, AbHom mu) const {
  TorusModel t = *this;
  t.quot_ = std::move(quot);
  t.mu_ = std::move(mu);
  return t;
}

Vec TorusModel::component_of(const Vec& u) const {
  auto coords = i_r_.coordinates(u);
  if (!coords) throw Error(Errc::DeltaOutsideModel, "element " + vec_string(u) + " of I_F is not in I_R");
  return quot_(concat(vz_.group.zero(), *coords));
}

QuotAb class_group_model(const RecipModel& model, const std::vector<Vec>& relations) {
  return quotient(model.i_k(), relations);
}

// ---------------------------------------------------------------- points

std::string CMPoint::to_string() const {
  std::ostringstream os;
  os << "{phi=" << phi.to_string() << ", a=" << vec_string(a) << ", delta=" << vec_string(delta)
     << ", e=" << vec_string(e) << '}';
  return os.str();
}

CMPoint make_cm_point(const PointContext& ctx, CMType phi, Vec a, Vec delta, Vec e) {
  const RecipModel& m = ctx.model();
  if (phi.context() != m.cm()) throw Error(Errc::ContextMismatch, "CM type from another model");
  CMPoint p;
  p.phi = std::move(phi);
  p.a = ctx.class_group.group.reduce(std::move(a));
  p.sgn.assign(m.cm()->r(), 1);
  p.delta = m.i_f().reduce(std::move(delta));
  if (!ctx.torus.i_r().contains(p.delta))
    throw Error(Errc::DeltaOutsideModel, "delta " + vec_string(p.delta) + " is not in I_R");
  p.e = m.i_k().reduce(std::move(e));
  return p;
}

std::vector<CMPoint> sample_cm_points(const PointContext& ctx, std::size_t delta_limit) {
  const RecipModel& m = ctx.model();
  const FinAb& cl = ctx.class_group.group;
  std::vector<Vec> as{cl.zero()}, es{m.i_k().zero()};
  for (std::size_t i = 0; i < cl.rank(); ++i)
    if (!cl.is_zero(cl.basis(i))) as.push_back(cl.basis(i));
  for (std::size_t i = 0; i < m.i_k().rank(); ++i)
    if (!m.i_k().is_zero(m.i_k().basis(i))) es.push_back(m.i_k().basis(i));
  std::set<Vec> deltas;
  for (const Vec& d : ctx.torus.i_r().ambient_elements()) {
    if (deltas.size() >= delta_limit) break;
    deltas.insert(d);
  }
  const SubAb& ir = ctx.torus.i_r();
  for (std::size_t i = 0; i < ir.group.rank(); ++i) deltas.insert(ir.inclusion(ir.group.basis(i)));

  std::vector<CMPoint> out;
  for (const CMType& phi : enumerate_cm_types(m.cm()))
    for (const Vec& a : as)
      for (const Vec& d : deltas)
        for (const Vec& e : es) out.push_back(make_cm_point(ctx, phi, a, d, e));
  return out;
}

bool in_cm_group(const PointContext& ctx, const PlecticElement& a) {
  return in_cm_group(ctx.split, ctx.torus.i_r(), a);
}

// ---------------------------------------------------------------- actions

ActionResult plectic_act(const PointContext& ctx, const PlecticElement& a, const CMPoint& p) {
  const RecipModel& m = ctx.model();
  if (!in_cm_group(ctx, a)) throw Error(Errc::NotInCMGroup, a.to_string() + " is not in the CM group of the torus");
  ActionResult res;
  res.f = taniyama(ctx.split, a, p.phi);
  const Vec u = ctx.split.chi_f(product_map(a));
  res.m = sign_vector(a, p.phi);
  res.chi = m.i_f().sub(u, m.n_kf()(res.f));
  Vec m_vec(res.m.begin(), res.m.end());
  if (res.chi != m.sign_f()(m_vec))
    throw Error(Errc::SignViolation, "chi-class " + vec_string(res.chi) + " is not the sign class of m for " +
                                         a.to_string());

  res.point.phi = act_on_cm_type(a, p.phi);
  res.point.a = ctx.class_group.group.add(ctx.class_group.projection(res.f), p.a);
  res.point.sgn.assign(p.sgn.size(), 1);
  res.point.e = m.i_k().add(res.f, p.e);
  res.point.delta = m.i_f().add(u, p.delta);
  return res;
}

ActionResult galois_act(const PointContext& ctx, Elem gamma, const CMPoint& p) {
  const RecipModel& m = ctx.model();
  if (!m.flags().top_cartesian) throw Error(Errc::NotCartesian, "the norm square of the model is not Cartesian");
  const PlecticElement a = PlecticElement::embed(m.base(), gamma);
  ActionResult res;
  if (m.flags().tate_cartesian) {
    const GaloisTaniyama g = taniyama_galois(m, gamma, p.phi);
    if (!g.unique) throw Error(Errc::InternalError, "Galois Taniyama element is not unique in a Cartesian model");
    res.f = g.solutions.front();
  } else {
    res.f = taniyama(ctx.split, a, p.phi);
  }
  const Vec u = cyclotomic_class(m, gamma);
  res.m = sign_vector(a, p.phi);
  res.chi = m.i_f().sub(u, m.n_kf()(res.f));

  res.point.phi = act_on_cm_type(a, p.phi);
  res.point.a = ctx.class_group.group.add(ctx.class_group.projection(res.f), p.a);
  res.point.sgn.assign(p.sgn.size(), 1);
  res.point.e = m.i_k().add(res.f, p.e);
  res.point.delta = m.i_f().add(u, p.delta);
  return res;
}

Vec pi0_of_cm_point(const TorusModel& torus, const CMPoint& p) { return torus.component_of(p.delta); }

Vec pi0_lambda(const PointContext& ctx, const PlecticElement& a) {
  const Vec pa = product_map(a);
  const Vec u = ctx.split.chi_f(pa);
  if (!ctx.torus.i_r().contains(u)) throw Error(Errc::NotInPi0Group, a.to_string() + ": chi_F(P) is outside I_R");
  const Vec lambda = ctx.torus.component_of(u);
  if (ctx.torus.mu()(lambda) != pa)
    throw Error(Errc::NotInPi0Group, a.to_string() + ": mu(lambda) " + vec_string(ctx.torus.mu()(lambda)) +
                                         " differs from P " + vec_string(pa));
  return lambda;
}

Vec pi0_act(const PointContext& ctx, const PlecticElement& a, const Vec& q) {
  return ctx.torus.p_r().add(pi0_lambda(ctx, a), q);
}

Vec pi0_act(const PointContext& ctx, const Pi0Member& member, const Vec& q) {
  const Vec pa = product_map(member.alpha);
  if (ctx.torus.mu()(member.p) != pa)
    throw Error(Errc::NotInPi0Group, member.alpha.to_string() + ": mu(p) differs from P");
  return ctx.torus.p_r().add(member.p, q);
}

EquivarianceReport check_pi0_equivariance(const PointContext& ctx, std::span<const PlecticElement> alphas,
                                          std::span<const CMPoint> points) {
  EquivarianceReport rep;
  const TorusModel& t = ctx.torus;
  const HomSolver mu_solver(t.mu());
  for (const PlecticElement& a : alphas) {
    if (!in_cm_group(ctx, a)) continue;
    std::optional<Vec> lambda;
    std::string failure;
    try {
      lambda = pi0_lambda(ctx, a);
    } catch (const Error& err) {
      failure = err.what();
    }
    if (lambda && mu_solver.injective()) {
      const auto p = mu_solver.solve(product_map(a));
      if (!p || t.p_r().reduce(*p) != *lambda) failure = "lambda differs from the unique p with mu(p) = P";
    }
    if (!failure.empty() && points.empty()) rep.counterexamples.push_back({a.to_string(), "-", failure});
    for (const CMPoint& pt : points) {
      ++rep.checked;
      if (!failure.empty()) {
        rep.counterexamples.push_back({a.to_string(), pt.to_string(), failure});
        continue;
      }
      try {
        const Vec lhs = pi0_of_cm_point(t, plectic_act(ctx, a, pt).point);
        const Vec rhs = t.p_r().add(*lambda, pi0_of_cm_point(t, pt));
        if (lhs != rhs)
          rep.counterexamples.push_back(
              {a.to_string(), pt.to_string(), "pi0(aP) = " + vec_string(lhs) + " but a pi0(P) = " + vec_string(rhs)});
      } catch (const Error& err) {
        rep.counterexamples.push_back({a.to_string(), pt.to_string(), err.what()});
      }
    }
  }
  return rep;
}

}  // namespace plectic
