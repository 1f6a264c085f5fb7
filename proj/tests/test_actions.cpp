#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "mutation.hpp"
#include "plectic/actions.hpp"
#include "plectic/error.hpp"

using namespace plectic;

namespace {

PointContext point_context(const Model& m, const std::string& torus, std::size_t chi = 0) {
  return PointContext{all_splittings(m.recip).at(chi), m.torus(torus), m.class_group};
}

CMType type_named(const CMPtr& cm, const std::vector<std::string>& members) {
  std::vector<std::size_t> rho;
  for (const auto& n : members) rho.push_back(cm->sigma_k().coset_of(cm->group().element(n)));
  return CMType(cm, rho);
}

const char* const kCartesian[] = {"sextic", "sextic-synthetic", "zeta15-synthetic", "zeta24-synthetic"};

}  // namespace

TEST(CMPoints, DeltaMustLieInIR) {
  const auto m = fixtures::model("zeta24-synthetic");
  const auto ctx = point_context(m, "minimal");
  const auto phi = enumerate_cm_types(m.cm).front();
  try {
    make_cm_point(ctx, phi, m.class_group.group.zero(), {0, 0, 1}, m.recip->i_k().zero());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::DeltaOutsideModel);
  }
}

TEST(GaloisAct, Zeta15Examples) {
  const auto m = fixtures::model("zeta15-synthetic");
  const auto ctx = point_context(m, "full");
  const auto& g = *m.gamma;
  const CMType phi = type_named(m.cm, {"1", "2"});
  const CMPoint p = make_cm_point(ctx, phi, m.class_group.group.zero(), m.recip->i_f().zero(), m.recip->i_k().zero());
  EXPECT_EQ(galois_act(ctx, g.identity(), p).point, p);

  const auto res = galois_act(ctx, g.element("2"), p);
  EXPECT_EQ(res.point.phi, type_named(m.cm, {"2", "4"}));
  EXPECT_EQ(res.point.delta, m.recip->i_fq()(m.recip->chi_cyc()(m.base->gamma_ab().project(g.element("2")))));
  EXPECT_EQ(res.point.e, res.f);
  EXPECT_EQ(res.point.a, m.class_group.projection(res.f));

  // 11 lies in H_K, so it fixes every CM type; only the ideal and level parts move
  const auto fixed = galois_act(ctx, g.element("11"), p);
  EXPECT_EQ(fixed.point.phi, phi);
  EXPECT_EQ(fixed.m, (std::vector<int>{0, 0}));
}

TEST(PlecticAct, ExtendsGaloisAction) {
  for (const char* id : kCartesian) {
    const auto m = fixtures::model(id);
    for (const auto& t : m.tori) {
      const PointContext ctx{make_splitting(m.recip), t, m.class_group};
      for (const auto& p : sample_cm_points(ctx))
        for (Elem x = 0; x < static_cast<Elem>(m.gamma->order()); ++x)
          ASSERT_EQ(plectic_act(ctx, PlecticElement::embed(m.base, x), p).point, galois_act(ctx, x, p).point)
              << id << " " << t.name();
    }
  }
}

TEST(PlecticAct, IdentityAndNonMembers) {
  const auto m = fixtures::model("zeta15-synthetic");
  const auto ctx = point_context(m, "minimal");
  const auto points = sample_cm_points(ctx);
  for (const auto& p : points) EXPECT_EQ(plectic_act(ctx, PlecticElement::identity(m.base), p).point, p);
  std::size_t rejected = 0;
  for (const auto& a : enumerate_plectic(m.base)) {
    if (in_cm_group(ctx, a)) continue;
    ++rejected;
    try {
      plectic_act(ctx, a, points.front());
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::NotInCMGroup);
    }
  }
  EXPECT_EQ(rejected, 16u);
}

TEST(Pi0, ComponentOfPoints) {
  const auto m = fixtures::model("zeta24-synthetic");
  const auto ctx = point_context(m, "full");
  const auto& t = ctx.torus;
  EXPECT_EQ(t.component_of(m.recip->i_f().zero()), t.p_r().zero());
  // (0,0,1) lies in ker rec_F, so it does not change the component
  const auto phi = enumerate_cm_types(m.cm).front();
  const Vec delta{1, 0, 0};
  const auto p = make_cm_point(ctx, phi, m.class_group.group.zero(), delta, m.recip->i_k().zero());
  const auto q = make_cm_point(ctx, phi, m.class_group.group.zero(), {1, 0, 1}, m.recip->i_k().zero());
  EXPECT_EQ(pi0_of_cm_point(t, p), pi0_of_cm_point(t, q));
  EXPECT_EQ(t.mu()(pi0_of_cm_point(t, p)), m.recip->rec_f()(delta));
}

TEST(Pi0, GaloisMultiplicationRule) {
  for (const char* id : kCartesian) {
    const auto m = fixtures::model(id);
    for (const auto& t : m.tori) {
      const PointContext ctx{make_splitting(m.recip), t, m.class_group};
      for (Elem x = 0; x < static_cast<Elem>(m.gamma->order()); ++x) {
        const Vec u = t.iota_q()(m.recip->chi_cyc()(m.base->gamma_ab().project(x)));
        const Vec via = t.quot()(second_injection(t.vz().group, t.i_r().group)(u));
        for (const Vec& q : t.p_r().elements())
          EXPECT_EQ(pi0_act(ctx, PlecticElement::embed(m.base, x), q), t.p_r().add(via, q)) << id;
      }
    }
  }
}

TEST(Pi0, EquivarianceOnEveryCartesianModel) {
  for (const char* id : kCartesian) {
    const auto m = fixtures::model(id);
    const auto alphas = enumerate_plectic(m.base);
    for (const auto& t : m.tori) {
      const PointContext ctx{make_splitting(m.recip), t, m.class_group};
      const auto rep = check_pi0_equivariance(ctx, alphas, sample_cm_points(ctx));
      EXPECT_GT(rep.checked, 0u);
      EXPECT_TRUE(rep.ok()) << id << " " << t.name() << ": " << rep.counterexamples.front().reason;
    }
  }
}

TEST(Pi0, FullTorusAdmitsEveryElement) {
  const auto m = fixtures::model("zeta15-synthetic");
  const auto ctx = point_context(m, "full");
  for (const auto& a : enumerate_plectic(m.base)) {
    const Vec lam = pi0_lambda(ctx, a);
    EXPECT_EQ(ctx.torus.mu()(lam), product_map(a));
    EXPECT_EQ(pi0_act(ctx, Pi0Member{a, lam}, ctx.torus.p_r().zero()), lam);
  }
}

TEST(Pi0, MutationsAreReported) {
  for (const char* id : kCartesian) {
    const auto m = fixtures::model(id);
    const auto alphas = enumerate_plectic(m.base);
    std::size_t detected = 0;
    for (const auto& t : m.tori) {
      const PointContext ctx{make_splitting(m.recip), t, m.class_group};
      const auto points = sample_cm_points(ctx);
      auto run = [&](const AbHom& quot, const AbHom& mu) {
        const PointContext bad{ctx.split, t.with_maps(quot, mu), ctx.class_group};
        const bool reported = !check_pi0_equivariance(bad, alphas, points).ok();
        // reported exactly when the corruption changes the fiber condition on some member
        EXPECT_EQ(reported, mutation::visible(ctx, alphas, quot, mu)) << id << " " << t.name();
        detected += reported;
      };
      for (const auto& mu : mutation::perturbations(t.mu())) run(t.quot(), mu);
      for (const auto& quot : mutation::perturbations(t.quot())) run(quot, t.mu());
    }
    EXPECT_GT(detected, 0u) << id;
  }
}
