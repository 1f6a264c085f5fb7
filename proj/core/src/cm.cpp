#include "plectic/cm.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

#include "plectic/error.hpp"

namespace plectic {

CMPtr CMContext::make(ContextPtr base, Subgroup h_k, Elem c) {
  const FiniteGroup& g = base->group();
  const Subgroup& h_f = base->h_f();
  if (!h_k.is_subset_of(h_f) || h_k.order() * 2 != h_f.order())
    throw Error(Errc::BadIndex, "H_K must be a subgroup of index 2 in H_F");
  if (c < 0 || static_cast<std::size_t>(c) >= g.order()) throw Error(Errc::BadConjugation, "c is not an element of Gamma");
  if (g.mul(c, c) != g.identity()) throw Error(Errc::BadConjugation, "c does not square to the identity");
  for (std::size_t a = 0; a < g.order(); ++a) {
    const Elem cc = g.conj(static_cast<Elem>(a), c);
    if (!h_f.contains(cc) || h_k.contains(cc))
      throw Error(Errc::BadConjugation, "conjugate of c by " + g.name(static_cast<Elem>(a)) + " is not in H_F \\ H_K");
  }

  std::shared_ptr<CMContext> cm(new CMContext());
  cm->base_ = base;
  cm->h_k_ = h_k;
  cm->c_ = c;
  cm->sigma_k_ = left_cosets(base->gamma(), h_k);
  const std::size_t n = cm->sigma_k_.index();
  cm->pairing_.resize(n);
  cm->over_.resize(n);
  for (std::size_t rho = 0; rho < n; ++rho) {
    const Elem rep = cm->sigma_k_.coset(rho).front();
    cm->pairing_[rho] = cm->sigma_k_.coset_of(g.mul(c, rep));
    cm->over_[rho] = base->sigma().coset_of(rep);
  }
  for (std::size_t x = 0; x < base->r(); ++x) cm->phi_.push_back(cm->sigma_k_.coset_of(base->s(x)));

  cm->hk_ab_ = abelianization(h_k);
  cm->res_ = induced_hom(cm->hk_ab_, base->hf_ab(), [](Elem a) { return a; });
  cm->transfer_k_ = transfer_hom(left_cosets(h_f, h_k), base->hf_ab(), cm->hk_ab_);
  cm->c_x_ = conjugations_for_section(*cm, base->section());
  cm->frak_c_ = subgroup_generated(base->hf_ab().group(), cm->c_x_);
  return cm;
}

std::vector<Vec> conjugations_for_section(const CMContext& cm, std::span<const Elem> section) {
  const FiniteGroup& g = cm.group();
  std::vector<Vec> out;
  for (Elem s : section) out.push_back(cm.hf_ab().project(g.conj(s, cm.c())));
  return out;
}

// ---------------------------------------------------------------- CM types

CMType::CMType(CMPtr cm, std::vector<std::size_t> phi) : cm_(std::move(cm)), members_(std::move(phi)) {
  std::sort(members_.begin(), members_.end());
  const std::size_t r = cm_->r();
  if (members_.size() != r) throw Error(Errc::InvalidArgument, "a CM type has exactly one embedding over each place");
  by_place_.assign(r, cm_->sigma_k().index());
  for (std::size_t rho : members_) {
    if (rho >= cm_->sigma_k().index()) throw Error(Errc::InvalidArgument, "CM type member out of range");
    const std::size_t x = cm_->over(rho);
    if (by_place_[x] != cm_->sigma_k().index())
      throw Error(Errc::InvalidArgument, "CM type contains both members of a conjugate pair");
    by_place_[x] = rho;
  }
}

CMType CMType::from_bits(CMPtr cm, const std::vector<int>& bits) {
  std::vector<std::size_t> phi;
  for (std::size_t x = 0; x < cm->r(); ++x) phi.push_back(cm->embedding(x, bits.at(x)));
  return CMType(std::move(cm), std::move(phi));
}

std::vector<std::string> CMType::names() const {
  std::vector<std::string> out;
  for (std::size_t rho : members_) out.push_back(cm_->sigma_k().coset_name(rho));
  return out;
}

std::string CMType::to_string() const {
  std::ostringstream os;
  os << '[';
  const auto n = names();
  for (std::size_t i = 0; i < n.size(); ++i) os << (i ? " " : "") << n[i];
  os << ']';
  return os.str();
}

std::vector<CMType> enumerate_cm_types(const CMPtr& cm) {
  const std::size_t r = cm->r();
  if (r >= 24) throw Error(Errc::GroupTooLarge, "too many CM types to enumerate");
  std::vector<CMType> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << r); ++mask) {
    std::vector<int> bits(r);
    for (std::size_t x = 0; x < r; ++x) bits[x] = static_cast<int>((mask >> x) & 1);
    out.push_back(CMType::from_bits(cm, bits));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t act_on_sigma_k(const CMContext& cm, const PlecticElement& a, std::size_t rho) {
  if (a.context() != cm.base()) throw Error(Errc::ContextMismatch, "plectic element from another context");
  const std::size_t x = cm.over(rho);
  const int hbar = cm.h_k().contains(a.h(x)) ? 0 : 1;
  return cm.embedding(a.pi(x), cm.conj_bit(rho) + hbar);
}

CMType act_on_cm_type(const PlecticElement& a, const CMType& phi) {
  std::vector<std::size_t> image;
  for (std::size_t rho : phi.members()) image.push_back(act_on_sigma_k(*phi.context(), a, rho));
  return CMType(phi.context(), std::move(image));
}

std::vector<int> sign_vector(const PlecticElement& a, const CMType& phi) {
  const CMType moved = act_on_cm_type(a, phi);
  std::vector<int> m(phi.context()->r());
  for (std::size_t x = 0; x < m.size(); ++x) m[x] = phi.at(x) == moved.at(x) ? 0 : 1;
  return m;
}

// ---------------------------------------------------------------- half transfer

EquivariantSection::EquivariantSection(CMPtr cm, std::vector<Elem> w) : cm_(std::move(cm)), w_(std::move(w)) {
  const auto& sk = cm_->sigma_k();
  if (!sk.is_section(w_)) throw Error(Errc::InvalidArgument, "w_rho must lie in rho");
  for (std::size_t rho = 0; rho < w_.size(); ++rho)
    if (w_[cm_->pair(rho)] != cm_->group().mul(cm_->c(), w_[rho]))
      throw Error(Errc::InvalidArgument, "w is not conjugation-equivariant");
}

EquivariantSection EquivariantSection::canonical(CMPtr cm) {
  std::vector<Elem> w(cm->sigma_k().index());
  for (std::size_t x = 0; x < cm->r(); ++x) {
    const Elem s = cm->base()->s(x);
    w[cm->phi(x)] = s;
    w[cm->pair(cm->phi(x))] = cm->group().mul(cm->c(), s);
  }
  return EquivariantSection(std::move(cm), std::move(w));
}

std::vector<EquivariantSection> enumerate_equivariant_sections(const CMPtr& cm, std::size_t cap) {
  const std::size_t r = cm->r();
  const std::size_t k = cm->h_k().order();
  std::size_t total = 1;
  for (std::size_t x = 0; x < r; ++x) {
    if (total > cap / k) throw Error(Errc::GroupTooLarge, "too many equivariant sections");
    total *= k;
  }
  const FiniteGroup& g = cm->group();
  std::vector<EquivariantSection> out;
  std::vector<std::size_t> idx(r, 0);
  while (true) {
    std::vector<Elem> w(cm->sigma_k().index());
    for (std::size_t x = 0; x < r; ++x) {
      const Elem v = cm->sigma_k().coset(cm->phi(x))[idx[x]];
      w[cm->phi(x)] = v;
      w[cm->pair(cm->phi(x))] = g.mul(cm->c(), v);
    }
    out.emplace_back(cm, std::move(w));
    std::size_t x = r;
    while (x > 0 && ++idx[x - 1] == k) idx[--x] = 0;
    if (x == 0) break;
  }
  return out;
}

Vec half_transfer(const PlecticElement& a, const CMType& phi, const EquivariantSection& w) {
  const CMContext& cm = *phi.context();
  const FiniteGroup& g = cm.group();
  Vec acc = cm.hk_ab().group().zero();
  for (std::size_t rho : phi.members()) {
    const std::size_t moved = act_on_sigma_k(cm, a, rho);
    const Elem factor = g.mul(g.inv(w[moved]), a.apply(w[rho]));
    if (!cm.h_k().contains(factor)) throw Error(Errc::InternalError, "half-transfer factor escapes H_K");
    acc = cm.hk_ab().group().add(acc, cm.hk_ab().project(factor));
  }
  return acc;
}

Vec half_transfer(const PlecticElement& a, const CMType& phi) {
  return half_transfer(a, phi, EquivariantSection::canonical(phi.context()));
}

std::vector<std::vector<std::size_t>> orbit_decomposition(std::span<const PlecticElement> generators,
                                                          std::span<const CMType> types) {
  std::map<std::vector<std::size_t>, std::size_t> index;
  for (std::size_t i = 0; i < types.size(); ++i) index.emplace(types[i].members(), i);
  std::vector<bool> seen(types.size(), false);
  std::vector<std::vector<std::size_t>> orbits;
  for (std::size_t start = 0; start < types.size(); ++start) {
    if (seen[start]) continue;
    std::vector<std::size_t> orbit;
    std::deque<std::size_t> queue{start};
    seen[start] = true;
    while (!queue.empty()) {
      const std::size_t i = queue.front();
      queue.pop_front();
      orbit.push_back(i);
      for (const auto& a : generators) {
        const auto it = index.find(act_on_cm_type(a, types[i]).members());
        if (it == index.end()) throw Error(Errc::InvalidArgument, "type set is not stable under the generators");
        if (!seen[it->second]) {
          seen[it->second] = true;
          queue.push_back(it->second);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

}  // namespace plectic
