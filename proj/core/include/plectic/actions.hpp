#pragma once

// Torus data, model CM points, and the plectic and Galois actions on CM
// points and on connected components.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "plectic/recip.hpp"

namespace plectic {

/// Explicit component group: quot: vz + I_R -> P_R and mu: P_R -> H_F^ab,
/// in the coordinates of the subgroups' abstract groups.
struct ComponentData {
  FinAb p_r;
  AbHom quot;
  AbHom mu;
};

class TorusModel {
 public:
  TorusModel() = default;

  /// vz is generated inside (Z/2)^Sigma, I_R inside I_F. Without explicit
  /// component data, P_R is (vz + I_R) modulo the images of rational points:
  /// (s, sign_F s) for sign_F s in I_R, and (0, k) for k in ker rec_F.
  /// Throws DiagramNotCommuting unless mu(quot(0, u)) == rec_F(u), NotSurjective
  /// unless quot is onto, and InvalidArgument if image(i_FQ) is not inside I_R.
  static TorusModel make(RecipPtr model, std::string name, const std::vector<Vec>& vz_generators,
                         const std::vector<Vec>& i_r_generators, std::optional<ComponentData> explicit_data = {});
  /// I_R = image(i_FQ), vz = diagonal.
  static TorusModel minimal(RecipPtr model);
  /// I_R = I_F, vz = (Z/2)^Sigma.
  static TorusModel full(RecipPtr model);

  /// Replaces the structure maps without validation (for mutation tests).
  TorusModel with_maps(AbHom quot, AbHom mu) const;

  const std::string& name() const noexcept { return name_; }
  const RecipPtr& model() const noexcept { return model_; }
  const SubAb& vz() const noexcept { return vz_; }
  const SubAb& i_r() const noexcept { return i_r_; }
  const FinAb& p_r() const noexcept { return quot_.codomain(); }
  const AbHom& quot() const noexcept { return quot_; }
  const AbHom& mu() const noexcept { return mu_; }
  /// i_FQ corestricted to I_R.
  const AbHom& iota_q() const noexcept { return iota_q_; }
  bool derived() const noexcept { return derived_; }

  /// quot(0, u) for u in I_F; throws DeltaOutsideModel if u is not in I_R.
  Vec component_of(const Vec& u) const;

 private:
  std::string name_;
  RecipPtr model_;
  SubAb vz_;
  SubAb i_r_;
  AbHom quot_;
  AbHom mu_;
  AbHom iota_q_;
  bool derived_ = false;
};

/// Finite ideal-class model Cl_K as a quotient of I_K.
QuotAb class_group_model(const RecipModel& model, const std::vector<Vec>& relations = {});

struct CMPoint {
  CMType phi;
  Vec a;                  ///< in Cl_K
  std::vector<int> sgn;   ///< normalized to all +1
  Vec delta;              ///< in I_F, lies in I_R
  Vec e;                  ///< in I_K

  std::string to_string() const;
  friend bool operator==(const CMPoint& x, const CMPoint& y) {
    return x.phi == y.phi && x.a == y.a && x.sgn == y.sgn && x.delta == y.delta && x.e == y.e;
  }
};

/// Everything the actions need: a splitting, a torus, and Cl_K.
struct PointContext {
  Splitting split;
  TorusModel torus;
  QuotAb class_group;

  const RecipModel& model() const { return *split.model; }
};

/// Throws DeltaOutsideModel if delta is not in I_R.
CMPoint make_cm_point(const PointContext& ctx, CMType phi, Vec a, Vec delta, Vec e);

/// Every CM type, with a in {0, basis of Cl_K}, delta over I_R (first
/// `delta_limit` elements), and e in {0, basis of I_K}.
std::vector<CMPoint> sample_cm_points(const PointContext& ctx, std::size_t delta_limit = 8);

bool in_cm_group(const PointContext& ctx, const PlecticElement& a);

struct ActionResult {
  CMPoint point;
  std::vector<int> m;  ///< sign twist, m_x = 0 iff phi and a(phi) agree over x
  Vec chi;             ///< chi_F(P(a)) - n_KF(f) in I_F
  Vec f;               ///< Taniyama element used
};

/// Throws NotInCMGroup, NotCartesian, or SignViolation.
ActionResult plectic_act(const PointContext& ctx, const PlecticElement& a, const CMPoint& p);

/// Uses the characterization by rec_K and i_KF n_KF when it determines f
/// uniquely, the plectic Taniyama element otherwise. Throws NotCartesian.
ActionResult galois_act(const PointContext& ctx, Elem gamma, const CMPoint& p);

/// quot(0, delta).
Vec pi0_of_cm_point(const TorusModel& torus, const CMPoint& p);

/// An element of the plectic group together with its component-group image.
struct Pi0Member {
  PlecticElement alpha;
  Vec p;
};

/// lambda(a) = quot(0, chi_F(P(a))). Throws NotInPi0Group if chi_F(P(a)) is
/// outside I_R or mu(lambda(a)) != P(a).
Vec pi0_lambda(const PointContext& ctx, const PlecticElement& a);
Vec pi0_act(const PointContext& ctx, const PlecticElement& a, const Vec& q);
/// Throws NotInPi0Group unless mu(member.p) == P(member.alpha).
Vec pi0_act(const PointContext& ctx, const Pi0Member& member, const Vec& q);

struct EquivarianceReport {
  struct Counterexample {
    std::string alpha;
    std::string point;
    std::string reason;
  };
  std::size_t checked = 0;
  std::vector<Counterexample> counterexamples;

  bool ok() const { return counterexamples.empty(); }
};

/// pi0(a P) == a pi0(P) for every a in `alphas` inside the CM group and every
/// point; also the fiber condition for lambda and, when mu is injective,
/// agreement with the unique p over P(a).
EquivarianceReport check_pi0_equivariance(const PointContext& ctx, std::span<const PlecticElement> alphas,
                                          std::span<const CMPoint> points);

}  // namespace plectic
