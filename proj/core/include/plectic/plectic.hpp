#pragma once

// The plectic group S_Sigma x| H_F^Sigma over a finite Galois model, stored
// in (pi, h) coordinates relative to a fixed section of Gamma/H_F.

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "plectic/group.hpp"

namespace plectic {

class GaloisContext;
using ContextPtr = std::shared_ptr<const GaloisContext>;

class GaloisContext {
 public:
  /// Uses the canonical section (least member of each coset) unless one is given.
  static ContextPtr make(GroupPtr gamma, Subgroup h_f, std::vector<Elem> section = {});
  /// Same model with s'_x = s_x t_x; requires t_x in H_F.
  ContextPtr shifted(std::span<const Elem> t) const;

  const GroupPtr& gamma() const noexcept { return gamma_; }
  const FiniteGroup& group() const noexcept { return *gamma_; }
  const Subgroup& h_f() const noexcept { return h_f_; }
  const CosetSpace& sigma() const noexcept { return sigma_; }
  std::size_t r() const noexcept { return sigma_.index(); }
  const std::vector<Elem>& section() const noexcept { return section_; }
  Elem s(std::size_t x) const { return section_.at(x); }

  const AbelianQuotient& gamma_ab() const noexcept { return gamma_ab_; }
  const AbelianQuotient& hf_ab() const noexcept { return hf_ab_; }
  /// V_{F/Q}: Gamma^ab -> H_F^ab.
  const AbHom& transfer_f() const noexcept { return transfer_f_; }

  /// True iff both contexts model the same Gamma and H_F (sections may differ).
  bool same_model(const GaloisContext& other) const { return gamma_ == other.gamma_ && h_f_ == other.h_f_; }

 private:
  GaloisContext() = default;

  GroupPtr gamma_;
  Subgroup h_f_;
  CosetSpace sigma_;
  std::vector<Elem> section_;
  AbelianQuotient gamma_ab_;
  AbelianQuotient hf_ab_;
  AbHom transfer_f_;
};

class PlecticElement {
 public:
  PlecticElement() = default;
  /// Throws InvalidArgument unless pi is a permutation of Sigma and every h_x lies in H_F.
  PlecticElement(ContextPtr ctx, std::vector<std::size_t> pi, std::vector<Elem> h);

  static PlecticElement identity(ContextPtr ctx);
  /// Left translation by gamma, factored through the section.
  static PlecticElement embed(ContextPtr ctx, Elem gamma);
  /// Factors a right-H_F-equivariant bijection of Gamma (indexed by element).
  static PlecticElement from_map(ContextPtr ctx, std::span<const Elem> map);

  const ContextPtr& context() const noexcept { return ctx_; }
  const std::vector<std::size_t>& pi() const noexcept { return pi_; }
  const std::vector<Elem>& h() const noexcept { return h_; }
  std::size_t pi(std::size_t x) const { return pi_.at(x); }
  Elem h(std::size_t x) const { return h_.at(x); }

  /// alpha(s_x delta) = s_{pi(x)} h_x delta.
  Elem apply(Elem g) const;
  std::vector<Elem> as_map() const;

  PlecticElement inverse() const;
  /// The same bijection of Gamma in the coordinates of another section.
  PlecticElement rebase(const ContextPtr& target) const;

  std::string to_string() const;

  friend bool operator==(const PlecticElement& a, const PlecticElement& b) {
    return a.ctx_ == b.ctx_ && a.pi_ == b.pi_ && a.h_ == b.h_;
  }

 private:
  ContextPtr ctx_;
  std::vector<std::size_t> pi_;
  std::vector<Elem> h_;
};

/// (pi, h)(pi', h') = (pi pi', (h_{pi'(x)} h'_x)_x). Throws ContextMismatch.
PlecticElement compose(const PlecticElement& a, const PlecticElement& b);
inline PlecticElement operator*(const PlecticElement& a, const PlecticElement& b) { return compose(a, b); }

/// sum_x proj(h_x) in H_F^ab.
Vec product_map(const PlecticElement& a);

/// r! |H_F|^r, saturating at SIZE_MAX.
std::size_t plectic_order(const GaloisContext& ctx);

/// Every element, in lexicographic order of (pi, h). Throws GroupTooLarge above cap.
std::vector<PlecticElement> enumerate_plectic(const ContextPtr& ctx, std::size_t cap = 100'000);

/// Adjacent transpositions together with (id, g at one place) for g generating H_F.
std::vector<PlecticElement> plectic_generators(const ContextPtr& ctx);
std::vector<PlecticElement> galois_generators(const ContextPtr& ctx);

}  // namespace plectic
