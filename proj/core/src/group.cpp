#include "plectic/group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "plectic/error.hpp"

namespace plectic {

// ---------------------------------------------------------------- FiniteGroup

FiniteGroup FiniteGroup::from_table(std::vector<std::string> names, const std::vector<std::vector<Elem>>& table,
                                    std::size_t cap) {
  const std::size_t n = names.size();
  if (n == 0) throw Error(Errc::NoIdentity, "empty multiplication table");
  if (n > cap) throw Error(Errc::GroupTooLarge, "group of order " + std::to_string(n) + " exceeds the cap");
  if (table.size() != n) throw Error(Errc::InvalidArgument, "table must be square");
  {
    std::vector<std::string> sorted = names;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw Error(Errc::InvalidArgument, "duplicate element names");
  }

  FiniteGroup g;
  g.names_ = std::move(names);
  g.table_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n) throw Error(Errc::InvalidArgument, "table must be square");
    for (std::size_t b = 0; b < n; ++b) {
      const Elem v = table[a][b];
      if (v < 0 || static_cast<std::size_t>(v) >= n) throw Error(Errc::InvalidArgument, "table entry out of range");
      g.table_[a * n + b] = v;
    }
  }

  std::optional<Elem> e;
  for (std::size_t c = 0; c < n && !e; ++c) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x)
      ok = g.table_[c * n + x] == static_cast<Elem>(x) && g.table_[x * n + c] == static_cast<Elem>(x);
    if (ok) e = static_cast<Elem>(c);
  }
  if (!e) throw Error(Errc::NoIdentity, "no two-sided identity in the table");
  g.identity_ = *e;

  g.inverse_.assign(n, -1);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b)
      if (g.table_[a * n + b] == *e && g.table_[b * n + a] == *e) {
        g.inverse_[a] = static_cast<Elem>(b);
        break;
      }
    if (g.inverse_[a] < 0) throw Error(Errc::NotInvertible, "element '" + g.names_[a] + "' has no inverse");
  }

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t ab = static_cast<std::size_t>(g.table_[a * n + b]);
      for (std::size_t c = 0; c < n; ++c) {
        const std::size_t bc = static_cast<std::size_t>(g.table_[b * n + c]);
        if (g.table_[ab * n + c] != g.table_[a * n + bc])
          throw Error(Errc::NonAssociative, "(" + g.names_[a] + "*" + g.names_[b] + ")*" + g.names_[c] +
                                                " differs from " + g.names_[a] + "*(" + g.names_[b] + "*" +
                                                g.names_[c] + ")");
      }
    }
  return g;
}

FiniteGroup FiniteGroup::units_mod(std::int64_t n, std::size_t cap) {
  if (n < 2) throw Error(Errc::InvalidArgument, "units_mod requires n >= 2");
  std::vector<std::int64_t> residues;
  for (std::int64_t k = 1; k < n; ++k)
    if (std::gcd(k, n) == 1) residues.push_back(k);
  if (residues.size() > cap)
    throw Error(Errc::GroupTooLarge, "(Z/" + std::to_string(n) + ")^x exceeds the group order cap");

  const std::size_t m = residues.size();
  std::vector<Elem> index_of(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < m; ++i) index_of[static_cast<std::size_t>(residues[i])] = static_cast<Elem>(i);

  FiniteGroup g;
  for (auto r : residues) g.names_.push_back(std::to_string(r));
  g.table_.resize(m * m);
  g.inverse_.resize(m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      const Elem p = index_of[static_cast<std::size_t>((residues[a] * residues[b]) % n)];
      g.table_[a * m + b] = p;
      if (p == 0) g.inverse_[a] = static_cast<Elem>(b);
    }
  g.identity_ = 0;  // residue 1
  return g;
}

Elem FiniteGroup::pow(Elem a, std::int64_t k) const {
  if (k < 0) return pow(inv(a), -k);
  Elem result = identity_;
  Elem base = a;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

std::optional<Elem> FiniteGroup::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<Elem>(i);
  return std::nullopt;
}

Elem FiniteGroup::element(std::string_view name) const {
  if (auto e = find(name)) return *e;
  throw Error(Errc::InvalidArgument, "unknown group element '" + std::string(name) + "'");
}

bool FiniteGroup::is_abelian() const {
  const auto n = static_cast<Elem>(order());
  for (Elem a = 0; a < n; ++a)
    for (Elem b = a + 1; b < n; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

// ---------------------------------------------------------------- Subgroup

Subgroup Subgroup::from_members(GroupPtr group, std::vector<Elem> members) {
  if (!group) throw Error(Errc::InvalidArgument, "subgroup of a null group");
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  const std::size_t n = group->order();
  std::vector<bool> mask(n, false);
  for (Elem a : members) {
    if (a < 0 || static_cast<std::size_t>(a) >= n) throw Error(Errc::NotASubgroup, "member out of range");
    mask[static_cast<std::size_t>(a)] = true;
  }
  if (!mask[static_cast<std::size_t>(group->identity())])
    throw Error(Errc::NotASubgroup, "subset does not contain the identity");
  for (Elem a : members) {
    if (!mask[static_cast<std::size_t>(group->inv(a))])
      throw Error(Errc::NotASubgroup, "not closed under inverses at '" + group->name(a) + "'");
    for (Elem b : members)
      if (!mask[static_cast<std::size_t>(group->mul(a, b))])
        throw Error(Errc::NotASubgroup,
                    "not closed under products: " + group->name(a) + "*" + group->name(b));
  }
  Subgroup s;
  s.group_ = std::move(group);
  s.members_ = std::move(members);
  s.mask_ = std::move(mask);
  return s;
}

Subgroup Subgroup::generated_by(GroupPtr group, std::span<const Elem> generators) {
  if (!group) throw Error(Errc::InvalidArgument, "subgroup of a null group");
  const std::size_t n = group->order();
  std::vector<bool> seen(n, false);
  std::deque<Elem> queue{group->identity()};
  seen[static_cast<std::size_t>(group->identity())] = true;
  std::vector<Elem> members;
  while (!queue.empty()) {
    const Elem a = queue.front();
    queue.pop_front();
    members.push_back(a);
    for (Elem g : generators) {
      const Elem b = group->mul(a, g);
      if (!seen[static_cast<std::size_t>(b)]) {
        seen[static_cast<std::size_t>(b)] = true;
        queue.push_back(b);
      }
    }
  }
  std::sort(members.begin(), members.end());
  Subgroup s;
  s.group_ = std::move(group);
  s.members_ = std::move(members);
  s.mask_ = std::move(seen);
  return s;
}

Subgroup Subgroup::whole(GroupPtr group) {
  std::vector<Elem> all(group->order());
  std::iota(all.begin(), all.end(), Elem{0});
  Subgroup s;
  s.mask_.assign(all.size(), true);
  s.members_ = std::move(all);
  s.group_ = std::move(group);
  return s;
}

Subgroup Subgroup::trivial(GroupPtr group) {
  Subgroup s;
  if (group) {
    s.members_ = {group->identity()};
    s.mask_.assign(group->order(), false);
    s.mask_[static_cast<std::size_t>(group->identity())] = true;
  }
  s.group_ = std::move(group);
  return s;
}

bool Subgroup::is_subset_of(const Subgroup& other) const {
  if (group_ != other.group_) return false;
  return std::all_of(members_.begin(), members_.end(), [&](Elem a) { return other.contains(a); });
}

bool Subgroup::is_abelian() const {
  for (Elem a : members_)
    for (Elem b : members_)
      if (group_->mul(a, b) != group_->mul(b, a)) return false;
  return true;
}

// ---------------------------------------------------------------- cosets

CosetSpace left_cosets(const Subgroup& ambient, const Subgroup& h) {
  if (!h.is_subset_of(ambient)) throw Error(Errc::NotASubgroup, "subgroup is not contained in the ambient group");
  const FiniteGroup& g = *ambient.group();
  CosetSpace cs;
  cs.ambient_ = ambient;
  cs.sub_ = h;
  cs.coset_of_.assign(g.order(), -1);
  for (Elem a : ambient.members()) {
    if (cs.coset_of_[static_cast<std::size_t>(a)] >= 0) continue;
    std::vector<Elem> coset;
    coset.reserve(h.order());
    for (Elem x : h.members()) coset.push_back(g.mul(a, x));
    std::sort(coset.begin(), coset.end());
    const auto id = static_cast<std::int64_t>(cs.cosets_.size());
    for (Elem b : coset) cs.coset_of_[static_cast<std::size_t>(b)] = id;
    cs.cosets_.push_back(std::move(coset));
  }
  return cs;
}

CosetSpace left_cosets(const GroupPtr& g, const Subgroup& h) { return left_cosets(Subgroup::whole(g), h); }

std::size_t CosetSpace::coset_of(Elem a) const {
  const std::int64_t id = (a >= 0 && static_cast<std::size_t>(a) < coset_of_.size()) ? coset_of_[static_cast<std::size_t>(a)] : -1;
  if (id < 0) throw Error(Errc::InvalidArgument, "element outside the ambient group of the coset space");
  return static_cast<std::size_t>(id);
}

std::vector<Elem> CosetSpace::canonical_section() const {
  std::vector<Elem> s;
  s.reserve(cosets_.size());
  for (const auto& c : cosets_) s.push_back(c.front());
  return s;
}

bool CosetSpace::is_section(std::span<const Elem> s) const {
  if (s.size() != cosets_.size()) return false;
  for (std::size_t x = 0; x < s.size(); ++x) {
    if (s[x] < 0 || static_cast<std::size_t>(s[x]) >= coset_of_.size()) return false;
    if (coset_of_[static_cast<std::size_t>(s[x])] != static_cast<std::int64_t>(x)) return false;
  }
  return true;
}

std::string CosetSpace::coset_name(std::size_t x) const {
  std::ostringstream os;
  os << '{';
  const auto& c = cosets_.at(x);
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << ambient_.group()->name(c[i]);
  os << '}';
  return os.str();
}

// ---------------------------------------------------------------- abelianization

namespace {

std::vector<Elem> greedy_generators(const Subgroup& h) {
  std::vector<Elem> gens;
  Subgroup span = Subgroup::trivial(h.group());
  for (Elem a : h.members()) {
    if (span.contains(a)) continue;
    gens.push_back(a);
    span = Subgroup::generated_by(h.group(), gens);
    if (span.order() == h.order()) break;
  }
  return gens;
}

Subgroup commutator_subgroup(const Subgroup& h) {
  const FiniteGroup& g = *h.group();
  const std::vector<Elem> gens = greedy_generators(h);
  std::vector<Elem> normal_gens;
  for (Elem a : gens)
    for (Elem b : gens) {
      const Elem c = g.commutator(a, b);
      if (c != g.identity()) normal_gens.push_back(c);
    }
  Subgroup c = Subgroup::generated_by(h.group(), normal_gens);
  // normal closure under conjugation by the generators of h
  for (bool grew = true; grew;) {
    grew = false;
    for (Elem x : std::vector<Elem>(c.members()))
      for (Elem a : gens) {
        const Elem y = g.conj(a, x);
        if (!c.contains(y)) {
          normal_gens.push_back(y);
          c = Subgroup::generated_by(h.group(), normal_gens);
          grew = true;
        }
      }
  }
  return c;
}

}  // namespace

AbelianQuotient abelianization(const Subgroup& h) {
  const FiniteGroup& g = *h.group();
  AbelianQuotient q;
  q.source_ = h;
  q.commutator_ = commutator_subgroup(h);
  const CosetSpace cosets = left_cosets(h, q.commutator_);

  // Polycyclic presentation of h/[h,h]: each new generator a_i has relative
  // order n_i with a_i^{n_i} in the span of the previous ones.
  std::map<std::size_t, Vec> coord;  // coset id -> coordinates
  std::map<std::size_t, Elem> rep;
  coord[cosets.coset_of(g.identity())] = {};
  rep[cosets.coset_of(g.identity())] = g.identity();
  std::vector<Vec> relations;
  std::size_t k = 0;
  for (Elem a : h.members()) {
    if (coord.count(cosets.coset_of(a))) continue;
    Int n = 1;
    Elem p = a;
    while (!coord.count(cosets.coset_of(p))) {
      p = g.mul(p, a);
      ++n;
    }
    Vec rel(k + 1, 0);
    const Vec& pc = coord[cosets.coset_of(p)];
    for (std::size_t j = 0; j < pc.size(); ++j) rel[j] = -pc[j];
    rel[k] = n;
    relations.push_back(std::move(rel));

    const auto old = coord;
    for (const auto& [id, v] : old) {
      Elem x = rep[id];
      for (Int t = 1; t < n; ++t) {
        x = g.mul(x, a);
        Vec w = v;
        w.resize(k + 1, 0);
        w[k] = t;
        const std::size_t cid = cosets.coset_of(x);
        coord[cid] = std::move(w);
        rep[cid] = x;
      }
    }
    ++k;
  }
  for (auto& r : relations) r.resize(k, 0);

  const SmithForm s = smith_normal_form(Matrix::from_rows(relations, k));
  std::vector<std::size_t> kept;
  Vec moduli;
  for (std::size_t i = 0; i < k; ++i)
    if (s.d(i, i) != 1) {
      kept.push_back(i);
      moduli.push_back(s.d(i, i));
    }
  q.group_ = FinAb(moduli);

  q.proj_.assign(g.order(), Vec{});
  for (Elem a : h.members()) {
    Vec x = coord.at(cosets.coset_of(a));
    x.resize(k, 0);
    Vec y(kept.size(), 0);
    for (std::size_t t = 0; t < kept.size(); ++t)
      for (std::size_t j = 0; j < k; ++j) y[t] += x[j] * s.v(j, kept[t]);
    q.proj_[static_cast<std::size_t>(a)] = q.group_.reduce(std::move(y));
  }
  for (std::size_t i = 0; i < q.group_.rank(); ++i) q.lifts_.push_back(q.lift(q.group_.basis(i)));
  return q;
}

const Vec& AbelianQuotient::project(Elem a) const {
  if (!source_.contains(a)) throw Error(Errc::InvalidArgument, "projection of an element outside the subgroup");
  return proj_[static_cast<std::size_t>(a)];
}

Elem AbelianQuotient::lift(const Vec& v) const {
  const Vec target = group_.reduce(v);
  for (Elem a : source_.members())
    if (proj_[static_cast<std::size_t>(a)] == target) return a;
  throw Error(Errc::InternalError, "abelianization projection is not surjective");
}

// ---------------------------------------------------------------- transfer

Vec transfer(const CosetSpace& cosets, const AbelianQuotient& h_ab, Elem a, std::optional<std::span<const Elem>> section) {
  if (!(h_ab.source() == cosets.subgroup()))
    throw Error(Errc::NotASubgroup, "transfer target does not match the coset space");
  const FiniteGroup& g = *cosets.ambient().group();
  if (!cosets.ambient().contains(a)) throw Error(Errc::InvalidArgument, "transfer of an element outside the ambient group");
  const std::vector<Elem> canonical = cosets.canonical_section();
  const std::span<const Elem> s = section ? *section : std::span<const Elem>(canonical);
  if (!cosets.is_section(s)) throw Error(Errc::InvalidArgument, "not a section of the coset space");

  Vec acc = h_ab.group().zero();
  for (std::size_t x = 0; x < cosets.index(); ++x) {
    const Elem as = g.mul(a, s[x]);
    const std::size_t y = cosets.coset_of(as);
    const Elem term = g.mul(g.inv(s[y]), as);
    acc = h_ab.group().add(acc, h_ab.project(term));
  }
  return acc;
}

AbHom transfer_hom(const CosetSpace& cosets, const AbelianQuotient& a_ab, const AbelianQuotient& h_ab) {
  if (!(a_ab.source() == cosets.ambient())) throw Error(Errc::InvalidArgument, "transfer source does not match");
  std::vector<Vec> images;
  for (std::size_t i = 0; i < a_ab.group().rank(); ++i) images.push_back(transfer(cosets, h_ab, a_ab.basis_lift(i)));
  return AbHom::from_images(a_ab.group(), h_ab.group(), images);
}

}  // namespace plectic
