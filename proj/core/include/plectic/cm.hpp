#pragma once

// CM contexts: an index-2 subgroup H_K of H_F with a complex conjugation c,
// the embeddings Sigma_K = Gamma/H_K, CM types, and the plectic half transfer.

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "plectic/plectic.hpp"

namespace plectic {

class CMContext;
using CMPtr = std::shared_ptr<const CMContext>;

class CMContext {
 public:
  /// Throws BadIndex unless [H_F : H_K] == 2 and BadConjugation unless c^2 == 1
  /// and g^-1 c g lies in H_F \ H_K for every g.
  static CMPtr make(ContextPtr base, Subgroup h_k, Elem c);

  const ContextPtr& base() const noexcept { return base_; }
  const FiniteGroup& group() const noexcept { return base_->group(); }
  std::size_t r() const noexcept { return base_->r(); }
  const Subgroup& h_k() const noexcept { return h_k_; }
  Elem c() const noexcept { return c_; }
  const CosetSpace& sigma_k() const noexcept { return sigma_k_; }
  std::size_t pair(std::size_t rho) const { return pairing_.at(rho); }
  std::size_t over(std::size_t rho) const { return over_.at(rho); }
  /// phi_x = s_x H_K.
  std::size_t phi(std::size_t x) const { return phi_.at(x); }
  /// c^b phi_x for b in {0, 1}.
  std::size_t embedding(std::size_t x, int b) const { return b % 2 ? pairing_[phi_[x]] : phi_[x]; }
  /// b with rho == c^b phi_{over(rho)}.
  int conj_bit(std::size_t rho) const { return rho == phi_[over_.at(rho)] ? 0 : 1; }

  const AbelianQuotient& hk_ab() const noexcept { return hk_ab_; }
  const AbelianQuotient& hf_ab() const noexcept { return base_->hf_ab(); }
  /// H_K^ab -> H_F^ab induced by inclusion.
  const AbHom& res() const noexcept { return res_; }
  /// V_{K/F}: H_F^ab -> H_K^ab.
  const AbHom& transfer_k() const noexcept { return transfer_k_; }
  /// c_x = proj(s_x^-1 c s_x) in H_F^ab.
  const std::vector<Vec>& conjugations() const noexcept { return c_x_; }
  const SubAb& conjugation_subgroup() const noexcept { return frak_c_; }

 private:
  CMContext() = default;

  ContextPtr base_;
  Subgroup h_k_;
  Elem c_ = 0;
  CosetSpace sigma_k_;
  std::vector<std::size_t> pairing_, over_, phi_;
  AbelianQuotient hk_ab_;
  AbHom res_, transfer_k_;
  std::vector<Vec> c_x_;
  SubAb frak_c_;
};

/// c_x recomputed for an arbitrary section of Gamma/H_F.
std::vector<Vec> conjugations_for_section(const CMContext& cm, std::span<const Elem> section);

class CMType {
 public:
  CMType() = default;
  /// Throws InvalidArgument unless phi meets every conjugate pair exactly once.
  CMType(CMPtr cm, std::vector<std::size_t> phi);
  /// Bit x selects c^{bit} phi_x.
  static CMType from_bits(CMPtr cm, const std::vector<int>& bits);

  const CMPtr& context() const noexcept { return cm_; }
  const std::vector<std::size_t>& members() const noexcept { return members_; }
  /// The member over x.
  std::size_t at(std::size_t x) const { return by_place_.at(x); }
  std::vector<std::string> names() const;
  std::string to_string() const;

  friend bool operator==(const CMType& a, const CMType& b) { return a.cm_ == b.cm_ && a.members_ == b.members_; }
  friend bool operator<(const CMType& a, const CMType& b) { return a.members_ < b.members_; }

 private:
  CMPtr cm_;
  std::vector<std::size_t> members_;  // sorted
  std::vector<std::size_t> by_place_;
};

/// All 2^r CM types, sorted by member list.
std::vector<CMType> enumerate_cm_types(const CMPtr& cm);

/// alpha(c^b phi_x) = c^{b + hbar_x} phi_{pi(x)}.
std::size_t act_on_sigma_k(const CMContext& cm, const PlecticElement& a, std::size_t rho);
CMType act_on_cm_type(const PlecticElement& a, const CMType& phi);

/// m_x = 0 iff phi and a(phi) agree over x.
std::vector<int> sign_vector(const PlecticElement& a, const CMType& phi);

/// w_rho in rho with w_{c rho} = c w_rho.
class EquivariantSection {
 public:
  EquivariantSection() = default;
  /// Throws InvalidArgument if w fails either condition.
  EquivariantSection(CMPtr cm, std::vector<Elem> w);
  /// w_{phi_x} = s_x.
  static EquivariantSection canonical(CMPtr cm);

  Elem operator[](std::size_t rho) const { return w_.at(rho); }
  const std::vector<Elem>& values() const noexcept { return w_; }

 private:
  CMPtr cm_;
  std::vector<Elem> w_;
};

/// Every equivariant section (|H_K|^r of them). Throws GroupTooLarge above cap.
std::vector<EquivariantSection> enumerate_equivariant_sections(const CMPtr& cm, std::size_t cap = 100'000);

/// sum_{phi} proj_K(w_{a(phi)}^-1 a(w_phi)) in H_K^ab.
Vec half_transfer(const PlecticElement& a, const CMType& phi, const EquivariantSection& w);
Vec half_transfer(const PlecticElement& a, const CMType& phi);

/// Orbits of the group generated by `generators` on `types`, as index lists
/// into `types`. Orbits are sorted and ordered by least index.
std::vector<std::vector<std::size_t>> orbit_decomposition(std::span<const PlecticElement> generators,
                                                          std::span<const CMType> types);

}  // namespace plectic
