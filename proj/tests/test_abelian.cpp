#include <gtest/gtest.h>

#include "abelian_sweep.hpp"
#include "oracles.hpp"
#include "plectic/abelian.hpp"
#include "plectic/error.hpp"

using namespace plectic;

namespace {

AbHom hom(Vec dom, Vec cod, std::vector<Vec> rows) {
  const std::size_t cols = dom.size();
  return AbHom(FinAb(std::move(dom)), FinAb(std::move(cod)), Matrix::from_rows(rows, cols));
}

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return Errc::InternalError;
}

bool unimodular_identity(const Matrix& a, const Matrix& a_inv) { return a * a_inv == Matrix::identity(a.rows()); }

}  // namespace

TEST(Smith, Diag2And3) {
  const Matrix m = Matrix::from_rows({{2, 0}, {0, 3}}, 2);
  const SmithForm s = smith_normal_form(m);
  EXPECT_EQ(s.diagonal(), (Vec{1, 6}));
  EXPECT_EQ(s.u * m * s.v, s.d);
  EXPECT_TRUE(unimodular_identity(s.u, s.u_inv));
  EXPECT_TRUE(unimodular_identity(s.v, s.v_inv));
}

TEST(Smith, IdentityAndZero) {
  EXPECT_EQ(smith_normal_form(Matrix::identity(3)).d, Matrix::identity(3));
  const SmithForm z = smith_normal_form(Matrix::from_rows({{0}}, 1));
  EXPECT_EQ(z.d, Matrix::from_rows({{0}}, 1));
  EXPECT_EQ(z.rank, 0u);
}

TEST(Smith, RandomMatricesSatisfyTheInvariants) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 300; ++t) {
    const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = static_cast<Int>(rng() % 19) - 9;
    const SmithForm s = smith_normal_form(m);
    ASSERT_EQ(s.u * m * s.v, s.d);
    ASSERT_TRUE(unimodular_identity(s.u, s.u_inv));
    ASSERT_TRUE(unimodular_identity(s.v, s.v_inv));
    const Vec d = s.diagonal();
    for (std::size_t i = 0; i + 1 < d.size(); ++i)
      if (d[i] != 0) EXPECT_EQ(d[i + 1] % d[i], 0);
      else EXPECT_EQ(d[i + 1], 0);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (i != j) EXPECT_EQ(s.d(i, j), 0);
  }
}

TEST(FinAbTest, BasicArithmetic) {
  const FinAb a(Vec{4, 6});
  EXPECT_EQ(a.order(), 24);
  EXPECT_EQ(a.reduce({5, -1}), (Vec{1, 5}));
  EXPECT_EQ(a.invariant_factors(), (Vec{2, 12}));
  EXPECT_EQ(a.element_order({1, 2}), 12);
  EXPECT_EQ(a.element_order({2, 3}), 2);
  for (std::size_t i = 0; i < 24; ++i) EXPECT_EQ(a.index_of(a.element_at(i)), i);
  EXPECT_EQ(code_of([] { AbHom h = hom({2}, {4}, {{1}}); }), Errc::IllDefinedHom);
}

TEST(SolveHom, Examples) {
  {
    const auto f = hom({4}, {2}, {{1}});
    const auto p = solve_hom(f, {1});
    EXPECT_EQ(f(p.x), (Vec{1}));
    EXPECT_EQ(subgroup_generated(f.domain(), p.kernel_generators).ambient_elements(),
              (std::vector<Vec>{{0}, {2}}));
  }
  EXPECT_EQ(code_of([] { solve_hom(hom({2}, {4}, {{2}}), {1}); }), Errc::NoSolution);
  {
    const auto f = hom({6}, {6}, {{2}});
    const auto p = solve_hom(f, {4});
    EXPECT_EQ(f(p.x), (Vec{4}));
    const auto pre = oracle::preimages(oracle::Hom{{6}, {6}, {{2}}}, {4});
    EXPECT_EQ(pre, (std::vector<Vec>{{2}, {5}}));
    EXPECT_EQ(subgroup_generated(f.domain(), p.kernel_generators).ambient_elements(),
              (std::vector<Vec>{{0}, {3}}));
  }
}

TEST(Sections, Examples) {
  {
    const auto s = section_of_surjection(hom({6}, {2}, {{1}}));
    EXPECT_EQ(s({1}), (Vec{3}));
  }
  EXPECT_EQ(code_of([] { section_of_surjection(hom({4}, {2}, {{1}})); }), Errc::NotSplit);
  EXPECT_EQ(code_of([] { section_of_surjection(hom({2}, {4}, {{2}})); }), Errc::NotSurjective);
  {
    const auto id = AbHom::identity(FinAb(Vec{2, 4}));
    EXPECT_EQ(section_of_surjection(id), id);
  }
  {
    // Z/2 + Z/2 -> Z/2, (a, b) -> a + b: sections e -> (1,0) or (0,1); fix the first.
    const auto f = hom({2, 2}, {2}, {{1, 1}});
    const ValueConstraint c{{1}, {0, 1}};
    EXPECT_EQ(section_of_surjection(f, std::span(&c, 1))({1}), (Vec{0, 1}));
    const ValueConstraint bad{{1}, {1, 1}};
    EXPECT_EQ(code_of([&] { section_of_surjection(f, std::span(&bad, 1)); }), Errc::ConstraintInfeasible);
    EXPECT_EQ(all_sections(f).size(), 2u);
  }
}

TEST(HomFromValues, DeterminedAndUnderdetermined) {
  const FinAb z2z2(Vec{2, 2}), z4(Vec{4});
  const std::vector<ValueConstraint> vals{{{1, 0}, {2}}, {{1, 1}, {0}}};
  const AbHom h = hom_from_values(z2z2, z4, vals);
  EXPECT_EQ(h({0, 1}), (Vec{2}));
  const std::vector<ValueConstraint> half{{{1, 0}, {2}}};
  EXPECT_EQ(code_of([&] { hom_from_values(z2z2, z4, half); }), Errc::NoSolution);
  const std::vector<ValueConstraint> ill{{{1, 0}, {1}}};
  EXPECT_EQ(code_of([&] { hom_from_values(z2z2, z4, ill); }), Errc::IllDefinedHom);
}

TEST(FiberProduct, Examples) {
  {
    const auto id = AbHom::identity(FinAb::cyclic(2));
    const auto fp = fiber_product(id, id);
    EXPECT_EQ(fp.group.order(), 2);
    for (const auto& x : fp.group.elements()) EXPECT_EQ(fp.to_a(x), fp.to_b(x));
  }
  EXPECT_EQ(fiber_product(hom({4}, {2}, {{1}}), AbHom::identity(FinAb::cyclic(2))).group.order(), 4);
  {
    const auto f = hom({4, 2}, {2}, {{1, 1}});
    const auto g = AbHom::zero(FinAb(Vec{3}), FinAb::cyclic(2));
    const auto fp = fiber_product(f, g);
    EXPECT_EQ(fp.group.order(), kernel(f).order() * 3);
  }
}

TEST(Cartesian, Examples) {
  {
    const auto f = hom({4}, {2}, {{1}});
    const auto g = AbHom::identity(FinAb::cyclic(2));
    const auto fp = fiber_product(f, g);
    EXPECT_TRUE(is_cartesian_square(fp.to_a, fp.to_b, f, g).cartesian);
  }
  {
    // Z/4 -> Z/2 twice over the trivial group: (p, q) has kernel {0, 2}.
    const auto p = hom({4}, {2}, {{1}});
    const auto f = AbHom::zero(FinAb::cyclic(2), FinAb{});
    const auto chk = is_cartesian_square(p, p, f, f);
    EXPECT_FALSE(chk.cartesian);
    EXPECT_EQ(chk.failure, CartesianCheck::Failure::NotInjective);
    EXPECT_EQ(chk.witness, (Vec{2}));
  }
  {
    // Z/2 diagonal into Z/2 x Z/2 over the trivial group misses (1, 0).
    const auto id = AbHom::identity(FinAb::cyclic(2));
    const auto f = AbHom::zero(FinAb::cyclic(2), FinAb{});
    const auto chk = is_cartesian_square(id, id, f, f);
    EXPECT_FALSE(chk.cartesian);
    EXPECT_EQ(chk.failure, CartesianCheck::Failure::NotSurjective);
    ASSERT_EQ(chk.witness.size(), 2u);
    EXPECT_NE(chk.witness[0], chk.witness[1]);
  }
  {
    const FinAb t{};
    const auto z = AbHom::zero(t, t);
    EXPECT_TRUE(is_cartesian_square(z, z, z, z).cartesian);
  }
}

TEST(FactorThrough, QuotientMaps) {
  const auto q = hom({4}, {2}, {{1}});
  const auto phi = hom({4}, {4}, {{2}});
  const auto mu = factor_through(q, phi);
  EXPECT_EQ(compose(mu, q), phi);
  EXPECT_EQ(code_of([&] { factor_through(q, AbHom::identity(FinAb::cyclic(4))); }), Errc::IllDefinedHom);
}

TEST(OracleSweep, AllGroupsOfOrderAtMost64) {
  const sweep::Result r = sweep::run();
  EXPECT_GT(r.groups, 100u);
  EXPECT_EQ(r.failures, 0u) << r.first_failure;
}
