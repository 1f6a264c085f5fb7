#pragma once

// Finite models of the reciprocity diagram
//
//   I_K --rec_K--> H_K^ab        I_F --rec_F--> H_F^ab        I_Q --rec_Q--> Gamma^ab
//    | n_KF          | res        | i_KF          | V_{K/F}      | i_FQ          | V_{F/Q}
//   I_F --rec_F--> H_F^ab        I_K --rec_K--> H_K^ab        I_F --rec_F--> H_F^ab
//
// together with sign_F: (Z/2)^Sigma -> I_F, splittings chi_F of rec_F and the
// plectic Taniyama element.

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "plectic/cm.hpp"

namespace plectic {

struct RecipFlags {
  bool top_cartesian = false;     ///< (n_KF, rec_K) identifies I_K with I_F x_{H_F^ab} H_K^ab
  bool bottom_cartesian = false;  ///< (rec_F, i_KF) identifies I_F with H_F^ab x_{H_K^ab} I_K
  bool tate_cartesian = false;    ///< (i_KF n_KF, rec_K) determines elements of I_K uniquely
  bool sign_compatible = false;   ///< rec_F(sign_F(e_x)) == c_x for every x
  bool sign_bijection = false;    ///< sign_F maps (Z/2)^Sigma isomorphically onto the conjugation subgroup
  bool sign_dies_in_k = false;    ///< i_KF o sign_F == 0

  std::vector<std::pair<std::string, bool>> named() const;
};

/// Raw arrows of a model; every map is validated by RecipModel::make.
struct RecipData {
  FinAb i_q, i_f, i_k;
  AbHom rec_q, rec_f, rec_k;
  AbHom n_kf, i_kf, i_fq;
  AbHom sign_f;
};

class RecipModel;
using RecipPtr = std::shared_ptr<const RecipModel>;

class RecipModel {
 public:
  /// Throws NotSurjective for a non-surjective rec map, DiagramNotCommuting
  /// naming the failing square, InvalidArgument for mismatched shapes.
  static RecipPtr make(CMPtr cm, RecipData data);

  const CMPtr& cm() const noexcept { return cm_; }
  const ContextPtr& base() const noexcept { return cm_->base(); }
  const FinAb& i_q() const noexcept { return d_.i_q; }
  const FinAb& i_f() const noexcept { return d_.i_f; }
  const FinAb& i_k() const noexcept { return d_.i_k; }
  const AbHom& rec_q() const noexcept { return d_.rec_q; }
  const AbHom& rec_f() const noexcept { return d_.rec_f; }
  const AbHom& rec_k() const noexcept { return d_.rec_k; }
  const AbHom& n_kf() const noexcept { return d_.n_kf; }
  const AbHom& i_kf() const noexcept { return d_.i_kf; }
  const AbHom& i_fq() const noexcept { return d_.i_fq; }
  const AbHom& sign_f() const noexcept { return d_.sign_f; }
  /// Inverse of rec_Q.
  const AbHom& chi_cyc() const noexcept { return chi_cyc_; }
  const FinAb& sign_group() const noexcept { return d_.sign_f.domain(); }
  const RecipFlags& flags() const noexcept { return flags_; }

 private:
  RecipModel() = default;

  CMPtr cm_;
  RecipData d_;
  AbHom chi_cyc_;
  RecipFlags flags_;
};

/// Optional overrides for synthesize_cartesian_model.
struct SynthesisHints {
  std::optional<AbHom> psi;     ///< n_KF o i_KF on I_F; defaults to doubling
  std::optional<AbHom> i_fq;    ///< Gamma^ab -> I_F; defaults to the canonical lift of V_{F/Q}
  std::optional<AbHom> sign_f;  ///< defaults to the canonical lift of e_x -> c_x
};

/// I_K := I_F x_{H_F^ab} H_K^ab with rec_K, n_KF the projections,
/// I_Q := Gamma^ab with rec_Q = id, and i_KF(u) = (psi(u), V_{K/F}(rec_F u)).
/// Throws IncompatibleInclusion if rec_F o psi != res o V_{K/F} o rec_F.
RecipPtr synthesize_cartesian_model(CMPtr cm, FinAb i_f, AbHom rec_f, const SynthesisHints& hints = {});

struct SplittingOptions {
  bool conjugation = true;  ///< chi_F(c_x) == sign_F(e_x); only applied when sign_compatible
  bool cyclotomic = true;   ///< chi_F o V_{F/Q} == i_FQ o chi_cyc
};

struct Splitting {
  RecipPtr model;
  AbHom chi_f;
  bool conjugation_applied = false;
  bool cyclotomic_applied = false;

  std::string fingerprint() const;
};

/// Throws NotSurjective, NotSplit, or ConstraintInfeasible naming the
/// condition that cannot be met.
Splitting make_splitting(const RecipPtr& model, const SplittingOptions& opts = {});
std::vector<Splitting> all_splittings(const RecipPtr& model, const SplittingOptions& opts = {});

/// The unique f in I_K with rec_K(f) == F_Phi(a) and n_KF(f) == chi_F(res F_Phi(a)).
/// Throws NotCartesian unless the top square is Cartesian; NoSolution on a defective model.
Vec taniyama(const Splitting& split, const PlecticElement& a, const CMType& phi);

struct GaloisTaniyama {
  std::vector<Vec> solutions;  ///< all f with rec_K(f) == F_Phi(g), i_KF n_KF f == i_KF i_FQ chi_cyc(g)
  bool unique = false;
};

/// Solutions of the characterization that does not involve chi_F.
GaloisTaniyama taniyama_galois(const RecipModel& model, Elem gamma, const CMType& phi);

/// Image of gamma in I_F: i_FQ(chi_cyc(proj gamma)).
Vec cyclotomic_class(const RecipModel& model, Elem gamma);

/// chi_F(P(a)) lies in the subgroup i_r of I_F.
bool in_cm_group(const Splitting& split, const SubAb& i_r, const PlecticElement& a);

}  // namespace plectic
