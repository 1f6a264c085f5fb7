#pragma once

// Finite groups given by multiplication tables, subgroups, left coset
// spaces, abelianizations and the transfer (Verlagerung).

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "plectic/abelian.hpp"

namespace plectic {

/// Elements are opaque indices into the multiplication table.
using Elem = std::int32_t;

inline constexpr std::size_t kDefaultOrderCap = 10'000;

class FiniteGroup {
 public:
  /// Validates the table: two-sided identity, inverses, associativity
  /// (exhaustive over all triples).
  static FiniteGroup from_table(std::vector<std::string> names, const std::vector<std::vector<Elem>>& table,
                                std::size_t cap = kDefaultOrderCap);
  /// (Z/n)^x with elements listed in increasing residue order.
  static FiniteGroup units_mod(std::int64_t n, std::size_t cap = kDefaultOrderCap);

  std::size_t order() const noexcept { return names_.size(); }
  Elem identity() const noexcept { return identity_; }
  Elem mul(Elem a, Elem b) const { return table_[static_cast<std::size_t>(a) * order() + static_cast<std::size_t>(b)]; }
  Elem inv(Elem a) const { return inverse_[static_cast<std::size_t>(a)]; }
  Elem pow(Elem a, std::int64_t k) const;
  Elem conj(Elem g, Elem x) const { return mul(mul(inv(g), x), g); }  ///< g^-1 x g
  Elem commutator(Elem a, Elem b) const { return mul(mul(inv(a), inv(b)), mul(a, b)); }

  const std::string& name(Elem a) const { return names_.at(static_cast<std::size_t>(a)); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<Elem> find(std::string_view name) const;
  /// Throws InvalidArgument for unknown names.
  Elem element(std::string_view name) const;

  bool is_abelian() const;

 private:
  FiniteGroup() = default;

  std::vector<std::string> names_;
  std::vector<Elem> table_;
  std::vector<Elem> inverse_;
  Elem identity_ = 0;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

class Subgroup {
 public:
  Subgroup() = default;

  /// Throws NotASubgroup unless the members form a subgroup.
  static Subgroup from_members(GroupPtr group, std::vector<Elem> members);
  static Subgroup generated_by(GroupPtr group, std::span<const Elem> generators);
  static Subgroup whole(GroupPtr group);
  static Subgroup trivial(GroupPtr group);

  const GroupPtr& group() const noexcept { return group_; }
  const std::vector<Elem>& members() const noexcept { return members_; }
  std::size_t order() const noexcept { return members_.size(); }
  bool contains(Elem a) const { return a >= 0 && static_cast<std::size_t>(a) < mask_.size() && mask_[static_cast<std::size_t>(a)]; }
  bool is_subset_of(const Subgroup& other) const;
  bool is_abelian() const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.group_ == b.group_ && a.members_ == b.members_;
  }

 private:
  GroupPtr group_;
  std::vector<Elem> members_;  // sorted
  std::vector<bool> mask_;
};

/// Left cosets gH of H inside an ambient subgroup A, each sorted, ordered by
/// least member index.
class CosetSpace {
 public:
  const Subgroup& ambient() const noexcept { return ambient_; }
  const Subgroup& subgroup() const noexcept { return sub_; }
  std::size_t index() const noexcept { return cosets_.size(); }
  const std::vector<Elem>& coset(std::size_t x) const { return cosets_.at(x); }
  const std::vector<std::vector<Elem>>& cosets() const noexcept { return cosets_; }
  /// Coset containing a (which must lie in the ambient subgroup).
  std::size_t coset_of(Elem a) const;
  /// Least member of each coset.
  std::vector<Elem> canonical_section() const;
  /// True iff s[x] lies in coset x for every x.
  bool is_section(std::span<const Elem> s) const;
  std::string coset_name(std::size_t x) const;

 private:
  friend CosetSpace left_cosets(const Subgroup& ambient, const Subgroup& h);

  Subgroup ambient_;
  Subgroup sub_;
  std::vector<std::vector<Elem>> cosets_;
  std::vector<std::int64_t> coset_of_;  // -1 outside the ambient subgroup
};

/// Throws NotASubgroup if h is not contained in ambient.
CosetSpace left_cosets(const Subgroup& ambient, const Subgroup& h);
CosetSpace left_cosets(const GroupPtr& g, const Subgroup& h);

/// H -> H/[H,H] in invariant-factor form.
class AbelianQuotient {
 public:
  const Subgroup& source() const noexcept { return source_; }
  const Subgroup& commutator() const noexcept { return commutator_; }
  const FinAb& group() const noexcept { return group_; }
  /// Image of a member of the source subgroup.
  const Vec& project(Elem a) const;
  /// A member of the source projecting onto the i-th basis vector.
  Elem basis_lift(std::size_t i) const { return lifts_.at(i); }
  /// A member of the source projecting onto v.
  Elem lift(const Vec& v) const;

 private:
  friend AbelianQuotient abelianization(const Subgroup& h);

  Subgroup source_;
  Subgroup commutator_;
  FinAb group_;
  std::vector<Vec> proj_;  // indexed by group element; empty outside the source
  std::vector<Elem> lifts_;
};

AbelianQuotient abelianization(const Subgroup& h);

/// Transfer from the ambient subgroup A to H <= A of finite index:
/// prod_x proj(s_{a x}^-1 a s_x). Uses the canonical section unless one is given.
Vec transfer(const CosetSpace& cosets, const AbelianQuotient& h_ab, Elem a,
             std::optional<std::span<const Elem>> section = std::nullopt);

/// The homomorphism A^ab -> H^ab induced by the transfer.
AbHom transfer_hom(const CosetSpace& cosets, const AbelianQuotient& a_ab, const AbelianQuotient& h_ab);

/// The homomorphism A^ab -> B^ab induced by `map`, which must be a group
/// homomorphism A -> B given elementwise.
template <class F>
AbHom induced_hom(const AbelianQuotient& from, const AbelianQuotient& to, F&& map) {
  std::vector<Vec> images;
  for (std::size_t i = 0; i < from.group().rank(); ++i) images.push_back(to.project(map(from.basis_lift(i))));
  return AbHom::from_images(from.group(), to.group(), images);
}

}  // namespace plectic
