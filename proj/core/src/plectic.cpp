#include "plectic/plectic.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

#include "plectic/error.hpp"

namespace plectic {

ContextPtr GaloisContext::make(GroupPtr gamma, Subgroup h_f, std::vector<Elem> section) {
  if (!gamma || h_f.group() != gamma) throw Error(Errc::NotASubgroup, "H_F is not a subgroup of Gamma");
  std::shared_ptr<GaloisContext> ctx(new GaloisContext());
  ctx->gamma_ = gamma;
  ctx->h_f_ = h_f;
  ctx->sigma_ = left_cosets(gamma, h_f);
  ctx->section_ = section.empty() ? ctx->sigma_.canonical_section() : std::move(section);
  if (!ctx->sigma_.is_section(ctx->section_)) throw Error(Errc::InvalidArgument, "section does not meet every coset once");
  ctx->gamma_ab_ = abelianization(Subgroup::whole(gamma));
  ctx->hf_ab_ = abelianization(h_f);
  ctx->transfer_f_ = transfer_hom(ctx->sigma_, ctx->gamma_ab_, ctx->hf_ab_);
  return ctx;
}

ContextPtr GaloisContext::shifted(std::span<const Elem> t) const {
  if (t.size() != r()) throw Error(Errc::InvalidArgument, "shift must have one entry per coset");
  std::shared_ptr<GaloisContext> ctx(new GaloisContext(*this));
  for (std::size_t x = 0; x < r(); ++x) {
    if (!h_f_.contains(t[x])) throw Error(Errc::InvalidArgument, "section shift must lie in H_F");
    ctx->section_[x] = gamma_->mul(section_[x], t[x]);
  }
  return ctx;
}

// ---------------------------------------------------------------- elements

PlecticElement::PlecticElement(ContextPtr ctx, std::vector<std::size_t> pi, std::vector<Elem> h)
    : ctx_(std::move(ctx)), pi_(std::move(pi)), h_(std::move(h)) {
  if (!ctx_) throw Error(Errc::InvalidArgument, "plectic element without a context");
  const std::size_t r = ctx_->r();
  if (pi_.size() != r || h_.size() != r) throw Error(Errc::InvalidArgument, "plectic element has the wrong length");
  std::vector<bool> hit(r, false);
  for (std::size_t x = 0; x < r; ++x) {
    if (pi_[x] >= r || hit[pi_[x]]) throw Error(Errc::InvalidArgument, "pi is not a permutation of Sigma");
    hit[pi_[x]] = true;
    if (!ctx_->h_f().contains(h_[x])) throw Error(Errc::InvalidArgument, "h_x outside H_F");
  }
}

PlecticElement PlecticElement::identity(ContextPtr ctx) {
  const std::size_t r = ctx->r();
  std::vector<std::size_t> pi(r);
  std::iota(pi.begin(), pi.end(), std::size_t{0});
  std::vector<Elem> h(r, ctx->group().identity());
  return PlecticElement(std::move(ctx), std::move(pi), std::move(h));
}

PlecticElement PlecticElement::embed(ContextPtr ctx, Elem gamma) {
  const FiniteGroup& g = ctx->group();
  const std::size_t r = ctx->r();
  std::vector<std::size_t> pi(r);
  std::vector<Elem> h(r);
  for (std::size_t x = 0; x < r; ++x) {
    const Elem gs = g.mul(gamma, ctx->s(x));
    pi[x] = ctx->sigma().coset_of(gs);
    h[x] = g.mul(g.inv(ctx->s(pi[x])), gs);
  }
  return PlecticElement(std::move(ctx), std::move(pi), std::move(h));
}

PlecticElement PlecticElement::from_map(ContextPtr ctx, std::span<const Elem> map) {
  const FiniteGroup& g = ctx->group();
  if (map.size() != g.order()) throw Error(Errc::InvalidArgument, "map must be defined on all of Gamma");
  std::vector<bool> hit(g.order(), false);
  for (Elem v : map) {
    if (v < 0 || static_cast<std::size_t>(v) >= g.order() || hit[static_cast<std::size_t>(v)])
      throw Error(Errc::InvalidArgument, "map is not a bijection of Gamma");
    hit[static_cast<std::size_t>(v)] = true;
  }
  for (std::size_t a = 0; a < g.order(); ++a)
    for (Elem d : ctx->h_f().members())
      if (map[static_cast<std::size_t>(g.mul(static_cast<Elem>(a), d))] != g.mul(map[a], d))
        throw Error(Errc::InvalidArgument, "map is not right-H_F-equivariant");

  const std::size_t r = ctx->r();
  std::vector<std::size_t> pi(r);
  std::vector<Elem> h(r);
  for (std::size_t x = 0; x < r; ++x) {
    const Elem image = map[static_cast<std::size_t>(ctx->s(x))];
    pi[x] = ctx->sigma().coset_of(image);
    h[x] = g.mul(g.inv(ctx->s(pi[x])), image);
  }
  return PlecticElement(std::move(ctx), std::move(pi), std::move(h));
}

Elem PlecticElement::apply(Elem a) const {
  const FiniteGroup& g = ctx_->group();
  const std::size_t x = ctx_->sigma().coset_of(a);
  const Elem delta = g.mul(g.inv(ctx_->s(x)), a);
  return g.mul(g.mul(ctx_->s(pi_[x]), h_[x]), delta);
}

std::vector<Elem> PlecticElement::as_map() const {
  std::vector<Elem> m(ctx_->group().order());
  for (std::size_t a = 0; a < m.size(); ++a) m[a] = apply(static_cast<Elem>(a));
  return m;
}

PlecticElement PlecticElement::inverse() const {
  const FiniteGroup& g = ctx_->group();
  const std::size_t r = ctx_->r();
  std::vector<std::size_t> pinv(r);
  for (std::size_t x = 0; x < r; ++x) pinv[pi_[x]] = x;
  std::vector<Elem> h(r);
  for (std::size_t x = 0; x < r; ++x) h[x] = g.inv(h_[pinv[x]]);
  return PlecticElement(ctx_, std::move(pinv), std::move(h));
}

PlecticElement PlecticElement::rebase(const ContextPtr& target) const {
  if (!target->same_model(*ctx_)) throw Error(Errc::ContextMismatch, "rebase across different models");
  const FiniteGroup& g = ctx_->group();
  const std::size_t r = ctx_->r();
  std::vector<Elem> t(r);
  for (std::size_t x = 0; x < r; ++x) t[x] = g.mul(g.inv(ctx_->s(x)), target->s(x));
  std::vector<Elem> h(r);
  for (std::size_t x = 0; x < r; ++x) h[x] = g.mul(g.mul(g.inv(t[pi_[x]]), h_[x]), t[x]);
  return PlecticElement(target, pi_, std::move(h));
}

std::string PlecticElement::to_string() const {
  std::ostringstream os;
  os << "(pi=[";
  for (std::size_t x = 0; x < pi_.size(); ++x) os << (x ? "," : "") << pi_[x];
  os << "], h=[";
  for (std::size_t x = 0; x < h_.size(); ++x) os << (x ? "," : "") << ctx_->group().name(h_[x]);
  os << "])";
  return os.str();
}

PlecticElement compose(const PlecticElement& a, const PlecticElement& b) {
  if (a.context() != b.context()) throw Error(Errc::ContextMismatch, "composing plectic elements of different contexts");
  const FiniteGroup& g = a.context()->group();
  const std::size_t r = a.context()->r();
  std::vector<std::size_t> pi(r);
  std::vector<Elem> h(r);
  for (std::size_t x = 0; x < r; ++x) {
    pi[x] = a.pi(b.pi(x));
    h[x] = g.mul(a.h(b.pi(x)), b.h(x));
  }
  return PlecticElement(a.context(), std::move(pi), std::move(h));
}

Vec product_map(const PlecticElement& a) {
  const AbelianQuotient& q = a.context()->hf_ab();
  Vec acc = q.group().zero();
  for (Elem hx : a.h()) acc = q.group().add(acc, q.project(hx));
  return acc;
}

std::size_t plectic_order(const GaloisContext& ctx) {
  constexpr std::size_t kMax = std::numeric_limits<std::size_t>::max();
  std::size_t n = 1;
  auto mul = [&](std::size_t k) { n = (k != 0 && n > kMax / k) ? kMax : n * k; };
  for (std::size_t i = 2; i <= ctx.r(); ++i) mul(i);
  for (std::size_t i = 0; i < ctx.r(); ++i) mul(ctx.h_f().order());
  return n;
}

std::vector<PlecticElement> enumerate_plectic(const ContextPtr& ctx, std::size_t cap) {
  const std::size_t n = plectic_order(*ctx);
  if (n > cap) throw Error(Errc::GroupTooLarge, "plectic group of order " + std::to_string(n) + " exceeds the cap");
  const std::size_t r = ctx->r();
  const auto& hm = ctx->h_f().members();
  std::vector<PlecticElement> out;
  out.reserve(n);
  std::vector<std::size_t> pi(r);
  std::iota(pi.begin(), pi.end(), std::size_t{0});
  do {
    std::vector<std::size_t> idx(r, 0);
    while (true) {
      std::vector<Elem> h(r);
      for (std::size_t x = 0; x < r; ++x) h[x] = hm[idx[x]];
      out.emplace_back(ctx, pi, std::move(h));
      std::size_t x = r;
      while (x > 0 && ++idx[x - 1] == hm.size()) idx[--x] = 0;
      if (x == 0) break;
    }
  } while (std::next_permutation(pi.begin(), pi.end()));
  return out;
}

namespace {

std::vector<Elem> generating_set(const Subgroup& h) {
  std::vector<Elem> gens;
  Subgroup span = Subgroup::trivial(h.group());
  for (Elem a : h.members()) {
    if (span.contains(a)) continue;
    gens.push_back(a);
    span = Subgroup::generated_by(h.group(), gens);
  }
  return gens;
}

}  // namespace

std::vector<PlecticElement> plectic_generators(const ContextPtr& ctx) {
  const std::size_t r = ctx->r();
  const Elem e = ctx->group().identity();
  std::vector<PlecticElement> gens;
  for (std::size_t x = 0; x + 1 < r; ++x) {
    std::vector<std::size_t> pi(r);
    std::iota(pi.begin(), pi.end(), std::size_t{0});
    std::swap(pi[x], pi[x + 1]);
    gens.emplace_back(ctx, std::move(pi), std::vector<Elem>(r, e));
  }
  for (Elem g : generating_set(ctx->h_f())) {
    PlecticElement id = PlecticElement::identity(ctx);
    std::vector<Elem> h = id.h();
    h[0] = g;
    gens.emplace_back(ctx, id.pi(), std::move(h));
  }
  return gens;
}

std::vector<PlecticElement> galois_generators(const ContextPtr& ctx) {
  std::vector<PlecticElement> gens;
  for (Elem g : generating_set(Subgroup::whole(ctx->gamma()))) gens.push_back(PlecticElement::embed(ctx, g));
  return gens;
}

}  // namespace plectic
