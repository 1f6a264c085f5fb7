#include "plectic/recip.hpp"

#include <algorithm>
#include <sstream>

#include "plectic/error.hpp"

namespace plectic {

std::vector<std::pair<std::string, bool>> RecipFlags::named() const {
  return {{"top_cartesian", top_cartesian},     {"bottom_cartesian", bottom_cartesian},
          {"tate_cartesian", tate_cartesian},   {"sign_compatible", sign_compatible},
          {"sign_bijection", sign_bijection},   {"sign_dies_in_k", sign_dies_in_k}};
}

namespace {

void expect_signature(const AbHom& f, const FinAb& dom, const FinAb& cod, const char* name) {
  if (!(f.domain() == dom) || !(f.codomain() == cod))
    throw Error(Errc::InvalidArgument, std::string(name) + " has signature " + f.domain().to_string() + " -> " +
                                           f.codomain().to_string() + ", expected " + dom.to_string() + " -> " +
                                           cod.to_string());
}

void expect_commutes(const AbHom& lhs, const AbHom& rhs, const char* square) {
  if (!(lhs == rhs)) throw Error(Errc::DiagramNotCommuting, std::string("square does not commute: ") + square);
}

FinAb sign_group_of(const CMContext& cm) { return FinAb(Vec(cm.r(), 2)); }

}  // namespace

RecipPtr RecipModel::make(CMPtr cm, RecipData d) {
  const FinAb& g_ab = cm->base()->gamma_ab().group();
  const FinAb& f_ab = cm->hf_ab().group();
  const FinAb& k_ab = cm->hk_ab().group();
  expect_signature(d.rec_q, d.i_q, g_ab, "rec_Q");
  expect_signature(d.rec_f, d.i_f, f_ab, "rec_F");
  expect_signature(d.rec_k, d.i_k, k_ab, "rec_K");
  expect_signature(d.n_kf, d.i_k, d.i_f, "n_KF");
  expect_signature(d.i_kf, d.i_f, d.i_k, "i_KF");
  expect_signature(d.i_fq, d.i_q, d.i_f, "i_FQ");
  expect_signature(d.sign_f, sign_group_of(*cm), d.i_f, "sign_F");

  if (!d.rec_q.is_surjective()) throw Error(Errc::NotSurjective, "rec_Q is not surjective");
  if (!d.rec_f.is_surjective()) throw Error(Errc::NotSurjective, "rec_F is not surjective");
  if (!d.rec_k.is_surjective()) throw Error(Errc::NotSurjective, "rec_K is not surjective");
  if (!d.rec_q.is_injective()) throw Error(Errc::InvalidArgument, "rec_Q must be an isomorphism");

  expect_commutes(compose(d.rec_f, d.n_kf), compose(cm->res(), d.rec_k), "rec_F o n_KF = res o rec_K");
  expect_commutes(compose(d.rec_k, d.i_kf), compose(cm->transfer_k(), d.rec_f), "rec_K o i_KF = V_K/F o rec_F");
  expect_commutes(compose(d.rec_f, d.i_fq), compose(cm->base()->transfer_f(), d.rec_q), "rec_F o i_FQ = V_F/Q o rec_Q");

  std::shared_ptr<RecipModel> m(new RecipModel());
  m->cm_ = cm;
  m->d_ = std::move(d);
  const RecipData& x = m->d_;

  std::vector<Vec> images;
  for (std::size_t i = 0; i < g_ab.rank(); ++i) images.push_back(solve_hom(x.rec_q, g_ab.basis(i)).x);
  m->chi_cyc_ = AbHom::from_images(g_ab, x.i_q, images);

  RecipFlags& fl = m->flags_;
  fl.top_cartesian = is_cartesian_square(x.n_kf, x.rec_k, x.rec_f, cm->res()).cartesian;
  fl.bottom_cartesian = is_cartesian_square(x.rec_f, x.i_kf, cm->transfer_k(), x.rec_k).cartesian;
  fl.tate_cartesian = is_cartesian_square(compose(x.i_kf, x.n_kf), x.rec_k, x.rec_k,
                                          compose(cm->transfer_k(), cm->res()))
                          .cartesian;
  const AbHom c_map = AbHom::from_images(sign_group_of(*cm), f_ab, cm->conjugations());
  fl.sign_compatible = compose(x.rec_f, x.sign_f) == c_map;
  fl.sign_bijection = fl.sign_compatible && x.sign_f.is_injective();
  fl.sign_dies_in_k = compose(x.i_kf, x.sign_f) == AbHom::zero(x.sign_f.domain(), x.i_k);
  return m;
}

RecipPtr synthesize_cartesian_model(CMPtr cm, FinAb i_f, AbHom rec_f, const SynthesisHints& hints) {
  const FinAb& g_ab = cm->base()->gamma_ab().group();
  const FinAb& f_ab = cm->hf_ab().group();
  expect_signature(rec_f, i_f, f_ab, "rec_F");
  if (!rec_f.is_surjective()) throw Error(Errc::NotSurjective, "rec_F is not surjective");

  RecipData d;
  d.i_q = g_ab;
  d.rec_q = AbHom::identity(g_ab);
  d.i_f = i_f;
  d.rec_f = rec_f;

  const FiberProduct fp = fiber_product(rec_f, cm->res());
  d.i_k = fp.group;
  d.n_kf = fp.to_a;
  d.rec_k = fp.to_b;

  const AbHom psi = hints.psi ? *hints.psi : AbHom::from_images(i_f, i_f, [&] {
    std::vector<Vec> im;
    for (std::size_t i = 0; i < i_f.rank(); ++i) im.push_back(i_f.scale(2, i_f.basis(i)));
    return im;
  }());
  expect_signature(psi, i_f, i_f, "psi");
  const AbHom v_rec = compose(cm->transfer_k(), rec_f);
  if (!(compose(rec_f, psi) == compose(cm->res(), v_rec)))
    throw Error(Errc::IncompatibleInclusion, "no inclusion I_F -> I_K: rec_F o psi differs from res o V_K/F o rec_F");
  // (psi, V rec_F) lands in the fiber product; solve for its coordinates there.
  const AbHom fp_incl = pairing(fp.to_a, fp.to_b);
  const AbHom target = pairing(psi, v_rec);
  std::vector<Vec> images;
  for (std::size_t i = 0; i < i_f.rank(); ++i) images.push_back(solve_hom(fp_incl, target(i_f.basis(i))).x);
  d.i_kf = AbHom::from_images(i_f, d.i_k, images);

  if (hints.i_fq) {
    d.i_fq = *hints.i_fq;
  } else {
    auto lift = lift_through(rec_f, cm->base()->transfer_f());
    if (!lift) throw Error(Errc::IncompatibleInclusion, "V_F/Q does not lift through rec_F");
    d.i_fq = *lift;
  }

  if (hints.sign_f) {
    d.sign_f = *hints.sign_f;
  } else {
    const AbHom c_map = AbHom::from_images(sign_group_of(*cm), f_ab, cm->conjugations());
    auto lift = lift_through(rec_f, c_map);
    if (!lift) throw Error(Errc::IncompatibleInclusion, "the conjugations do not lift to a sign map");
    d.sign_f = *lift;
  }
  return RecipModel::make(std::move(cm), std::move(d));
}

// ---------------------------------------------------------------- splittings

std::string Splitting::fingerprint() const {
  std::ostringstream os;
  const Matrix& m = chi_f.matrix();
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? ";" : "");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? "," : "") << m(r, c);
  }
  os << ']';
  return os.str();
}

namespace {

std::vector<ValueConstraint> conjugation_constraints(const RecipModel& m) {
  std::vector<ValueConstraint> out;
  for (std::size_t x = 0; x < m.cm()->r(); ++x)
    out.push_back({m.cm()->conjugations()[x], m.sign_f()(m.sign_group().basis(x))});
  return out;
}

std::vector<ValueConstraint> cyclotomic_constraints(const RecipModel& m) {
  std::vector<ValueConstraint> out;
  const FinAb& g_ab = m.base()->gamma_ab().group();
  for (std::size_t j = 0; j < g_ab.rank(); ++j) {
    const Vec b = g_ab.basis(j);
    out.push_back({m.base()->transfer_f()(b), m.i_fq()(m.chi_cyc()(b))});
  }
  return out;
}

struct Request {
  std::vector<ValueConstraint> constraints;
  bool conjugation = false;
  bool cyclotomic = false;
};

Request build_request(const RecipModel& m, const SplittingOptions& opts) {
  Request req;
  req.conjugation = opts.conjugation && m.flags().sign_compatible;
  req.cyclotomic = opts.cyclotomic;
  section_of_surjection(m.rec_f());  // NotSurjective / NotSplit
  auto check = [&](std::vector<ValueConstraint> cs, const char* what) {
    if (all_lifts(m.rec_f(), AbHom::identity(m.rec_f().codomain()), cs).empty())
      throw Error(Errc::ConstraintInfeasible, std::string("no splitting satisfies ") + what);
    req.constraints.insert(req.constraints.end(), cs.begin(), cs.end());
  };
  if (req.conjugation) check(conjugation_constraints(m), "chi_F(c_x) = sign_F(e_x)");
  if (req.cyclotomic) check(cyclotomic_constraints(m), "chi_F o V_F/Q = i_FQ o chi_cyc");
  if (req.conjugation && req.cyclotomic &&
      all_lifts(m.rec_f(), AbHom::identity(m.rec_f().codomain()), req.constraints).empty())
    throw Error(Errc::ConstraintInfeasible, "the conjugation and cyclotomic conditions are jointly infeasible");
  return req;
}

}  // namespace

std::vector<Splitting> all_splittings(const RecipPtr& model, const SplittingOptions& opts) {
  const Request req = build_request(*model, opts);
  std::vector<Splitting> out;
  for (auto& s : all_sections(model->rec_f(), req.constraints))
    out.push_back(Splitting{model, std::move(s), req.conjugation, req.cyclotomic});
  return out;
}

Splitting make_splitting(const RecipPtr& model, const SplittingOptions& opts) {
  const Request req = build_request(*model, opts);
  return Splitting{model, section_of_surjection(model->rec_f(), req.constraints), req.conjugation, req.cyclotomic};
}

// ---------------------------------------------------------------- Taniyama

Vec taniyama(const Splitting& split, const PlecticElement& a, const CMType& phi) {
  const RecipModel& m = *split.model;
  if (!m.flags().top_cartesian) throw Error(Errc::NotCartesian, "the norm square of the model is not Cartesian");
  if (phi.context() != m.cm()) throw Error(Errc::ContextMismatch, "CM type from another model");
  const Vec f_phi = half_transfer(a, phi);
  const Vec norm = split.chi_f(m.cm()->res()(f_phi));
  const AbHom both = pairing(m.n_kf(), m.rec_k());
  Vec target = norm;
  target.insert(target.end(), f_phi.begin(), f_phi.end());
  auto sol = try_solve_hom(both, target);
  if (!sol) throw Error(Errc::NoSolution, "model defect: no Taniyama element exists");
  if (!sol->kernel_generators.empty() && !subgroup_generated(m.i_k(), sol->kernel_generators).group.is_trivial())
    throw Error(Errc::InternalError, "Taniyama element is not unique in a Cartesian model");
  return m.i_k().reduce(sol->x);
}

Vec cyclotomic_class(const RecipModel& model, Elem gamma) {
  return model.i_fq()(model.chi_cyc()(model.base()->gamma_ab().project(gamma)));
}

GaloisTaniyama taniyama_galois(const RecipModel& model, Elem gamma, const CMType& phi) {
  const Vec f_phi = half_transfer(PlecticElement::embed(model.base(), gamma), phi);
  const Vec lhs = model.i_kf()(cyclotomic_class(model, gamma));
  const AbHom both = pairing(compose(model.i_kf(), model.n_kf()), model.rec_k());
  Vec target = lhs;
  target.insert(target.end(), f_phi.begin(), f_phi.end());

  GaloisTaniyama out;
  auto sol = try_solve_hom(both, target);
  if (!sol) return out;
  const SubAb ker = subgroup_generated(model.i_k(), sol->kernel_generators);
  for (const Vec& k : ker.ambient_elements()) out.solutions.push_back(model.i_k().add(sol->x, k));
  std::sort(out.solutions.begin(), out.solutions.end());
  out.unique = out.solutions.size() == 1;
  return out;
}

bool in_cm_group(const Splitting& split, const SubAb& i_r, const PlecticElement& a) {
  return i_r.contains(split.chi_f(product_map(a)));
}

}  // namespace plectic
