#pragma once

#include <string>
#include <vector>

#include "plectic/config.hpp"

namespace fixtures {

inline plectic::Model model(const std::string& id) {
  return plectic::load_model(std::string(PLECTIC_TEST_MODEL_DIR) + "/" + id + ".toml");
}

inline plectic::GroupPtr units(std::int64_t n) {
  return std::make_shared<const plectic::FiniteGroup>(plectic::FiniteGroup::units_mod(n));
}

inline std::vector<plectic::Elem> elems(const plectic::FiniteGroup& g, const std::vector<std::string>& names) {
  std::vector<plectic::Elem> out;
  for (const auto& n : names) out.push_back(g.element(n));
  return out;
}

inline plectic::Subgroup sub(const plectic::GroupPtr& g, const std::vector<std::string>& names) {
  return plectic::Subgroup::from_members(g, elems(*g, names));
}

/// Gamma = (Z/15)^x, H_F = {1,4,11,14}, section (1, 2).
inline plectic::ContextPtr zeta15_base() {
  auto g = units(15);
  return plectic::GaloisContext::make(g, sub(g, {"1", "4", "11", "14"}));
}

inline plectic::CMPtr zeta15_cm() {
  auto base = zeta15_base();
  return plectic::CMContext::make(base, sub(base->gamma(), {"1", "11"}), base->group().element("14"));
}

/// The symmetric group on three letters, as permutations in lexicographic order.
inline plectic::GroupPtr s3() {
  std::vector<std::vector<int>> perms{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  auto index = [&](const std::vector<int>& p) {
    for (std::size_t i = 0; i < perms.size(); ++i)
      if (perms[i] == p) return static_cast<plectic::Elem>(i);
    return plectic::Elem{-1};
  };
  std::vector<std::vector<plectic::Elem>> table(6, std::vector<plectic::Elem>(6));
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) {
      std::vector<int> c(3);
      for (int i = 0; i < 3; ++i) c[static_cast<std::size_t>(i)] = perms[a][static_cast<std::size_t>(perms[b][static_cast<std::size_t>(i)])];
      table[a][b] = index(c);
    }
  return std::make_shared<const plectic::FiniteGroup>(
      plectic::FiniteGroup::from_table({"e", "(12)", "(01)", "(012)", "(021)", "(02)"}, table));
}

/// S3 x C2 with elements (s, 0) named as in s3() and (s, 1) with a trailing "c".
inline plectic::GroupPtr s3xc2() {
  const auto s3g = s3();
  std::vector<std::string> names;
  for (int k = 0; k < 2; ++k)
    for (const auto& n : s3g->names()) names.push_back(k ? n + "c" : n);
  std::vector<std::vector<plectic::Elem>> table(12, std::vector<plectic::Elem>(12));
  for (plectic::Elem a = 0; a < 12; ++a)
    for (plectic::Elem b = 0; b < 12; ++b)
      table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
          static_cast<plectic::Elem>(((a / 6 + b / 6) % 2) * 6 + s3g->mul(a % 6, b % 6));
  return std::make_shared<const plectic::FiniteGroup>(plectic::FiniteGroup::from_table(names, table));
}

/// Non-abelian CM model: Gamma = S3 x C2, H_F = <(01)> x C2, H_K = <(01)>, c = ec.
inline plectic::CMPtr s3xc2_cm() {
  auto g = s3xc2();
  const auto base = plectic::GaloisContext::make(g, sub(g, {"e", "(01)", "ec", "(01)c"}));
  return plectic::CMContext::make(base, sub(g, {"e", "(01)"}), g->element("ec"));
}

}  // namespace fixtures
