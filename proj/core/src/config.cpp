#include "plectic/config.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include <toml.hpp>

#include "plectic/error.hpp"

#ifndef PLECTIC_CM_DEFAULT_MODEL_DIR
#define PLECTIC_CM_DEFAULT_MODEL_DIR "models"
#endif

namespace plectic {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw Error(Errc::ConfigError, where + ": " + what);
}

void allow_keys(const toml::table& t, const std::string& where, std::initializer_list<std::string_view> keys) {
  const std::set<std::string_view> ok(keys);
  for (const auto& [k, v] : t)
    if (!ok.count(k.str())) fail(where, "unknown key '" + std::string(k.str()) + "'");
}

const toml::table& table_at(const toml::table& t, std::string_view key, const std::string& where) {
  const auto* sub = t.get_as<toml::table>(key);
  if (!sub) fail(where, "missing table [" + std::string(key) + "]");
  return *sub;
}

Int integer(const toml::node& n, const std::string& where) {
  if (auto v = n.value<std::int64_t>()) return *v;
  fail(where, "expected an integer");
}

std::string element_name(const toml::node& n, const std::string& where) {
  if (auto s = n.value<std::string>()) return *s;
  if (auto i = n.value<std::int64_t>()) return std::to_string(*i);
  fail(where, "expected an element name");
}

const toml::array& array_at(const toml::table& t, std::string_view key, const std::string& where) {
  const auto* a = t.get_as<toml::array>(key);
  if (!a) fail(where, "missing array '" + std::string(key) + "'");
  return *a;
}

Vec int_vector(const toml::node& n, const std::string& where) {
  const auto* a = n.as_array();
  if (!a) fail(where, "expected an integer array");
  Vec out;
  for (const auto& x : *a) out.push_back(integer(x, where));
  return out;
}

std::vector<Vec> int_rows(const toml::node& n, const std::string& where) {
  const auto* a = n.as_array();
  if (!a) fail(where, "expected an array of integer arrays");
  std::vector<Vec> out;
  for (const auto& row : *a) out.push_back(int_vector(row, where));
  return out;
}

std::vector<Elem> elements(const FiniteGroup& g, const toml::node& n, const std::string& where) {
  const auto* a = n.as_array();
  if (!a) fail(where, "expected an array of element names");
  std::vector<Elem> out;
  for (const auto& x : *a) {
    const std::string name = element_name(x, where);
    auto e = g.find(name);
    if (!e) fail(where, "unknown element '" + name + "'");
    out.push_back(*e);
  }
  return out;
}

Elem element(const FiniteGroup& g, const toml::node& n, const std::string& where) {
  const std::string name = element_name(n, where);
  auto e = g.find(name);
  if (!e) fail(where, "unknown element '" + name + "'");
  return *e;
}

/// Row-major matrix with one row per codomain coordinate.
AbHom matrix_hom(const toml::table& t, std::string_view key, const FinAb& dom, const FinAb& cod,
                 const std::string& where) {
  const std::string at = where + "." + std::string(key);
  const auto* node = t.get(key);
  if (!node) fail(where, "missing matrix '" + std::string(key) + "'");
  const std::vector<Vec> rows = int_rows(*node, at);
  if (rows.size() != cod.rank())
    fail(at, "expected " + std::to_string(cod.rank()) + " rows, got " + std::to_string(rows.size()));
  for (const Vec& r : rows)
    if (r.size() != dom.rank()) fail(at, "expected rows of length " + std::to_string(dom.rank()));
  return AbHom(dom, cod, Matrix::from_rows(rows, dom.rank()));
}

/// Images of the basis of `dom` given as elements projected into q.
AbHom images_hom(const toml::table& t, std::string_view key, const FinAb& dom, const AbelianQuotient& q,
                 const std::string& where) {
  const std::string at = where + "." + std::string(key);
  const auto* node = t.get(key);
  if (!node) fail(where, "missing '" + std::string(key) + "'");
  const auto elems = elements(*q.source().group(), *node, at);
  if (elems.size() != dom.rank()) fail(at, "expected one image per basis vector of " + dom.to_string());
  std::vector<Vec> images;
  for (Elem e : elems) {
    if (!q.source().contains(e)) fail(at, "element '" + q.source().group()->name(e) + "' is outside the subgroup");
    images.push_back(q.project(e));
  }
  return AbHom::from_images(dom, q.group(), images);
}

FinAb moduli(const toml::table& t, std::string_view key, const std::string& where) {
  const auto* node = t.get(key);
  if (!node) fail(where, "missing '" + std::string(key) + "'");
  const Vec m = int_vector(*node, where + "." + std::string(key));
  for (Int x : m)
    if (x < 1) fail(where + "." + std::string(key), "moduli must be positive");
  return FinAb(m);
}

GroupPtr parse_group(const toml::table& t) {
  const std::string where = "[group]";
  allow_keys(t, where, {"units_mod", "elements", "table"});
  if (const auto* n = t.get("units_mod")) {
    if (t.contains("elements") || t.contains("table")) fail(where, "give either units_mod or an explicit table");
    return std::make_shared<const FiniteGroup>(FiniteGroup::units_mod(integer(*n, where + ".units_mod")));
  }
  const auto& names_arr = array_at(t, "elements", where);
  std::vector<std::string> names;
  for (const auto& x : names_arr) names.push_back(element_name(x, where + ".elements"));
  const auto& rows = array_at(t, "table", where);
  std::vector<std::vector<Elem>> table;
  for (const auto& row : rows) {
    const auto* r = row.as_array();
    if (!r) fail(where + ".table", "rows must be arrays");
    std::vector<Elem> out;
    for (const auto& x : *r) {
      const std::string name = element_name(x, where + ".table");
      const auto it = std::find(names.begin(), names.end(), name);
      if (it == names.end()) fail(where + ".table", "unknown element '" + name + "'");
      out.push_back(static_cast<Elem>(it - names.begin()));
    }
    table.push_back(std::move(out));
  }
  return std::make_shared<const FiniteGroup>(FiniteGroup::from_table(std::move(names), table));
}

RecipPtr parse_recip(const toml::table& t, const CMPtr& cm, bool& synthetic) {
  const std::string where = "[recip]";
  const auto kind = t["kind"].value<std::string>();
  if (!kind) fail(where, "missing 'kind' (explicit or synthetic)");
  const ContextPtr& base = cm->base();

  if (*kind == "synthetic") {
    synthetic = true;
    allow_keys(t, where, {"kind", "i_f", "rec_f", "psi", "sign_f"});
    FinAb i_f = cm->hf_ab().group();
    AbHom rec_f = AbHom::identity(i_f);
    if (t.contains("i_f") != t.contains("rec_f")) fail(where, "give both i_f and rec_f or neither");
    if (t.contains("i_f")) {
      i_f = moduli(t, "i_f", where);
      rec_f = images_hom(t, "rec_f", i_f, cm->hf_ab(), where);
    }
    SynthesisHints hints;
    if (t.contains("psi")) hints.psi = matrix_hom(t, "psi", i_f, i_f, where);
    if (t.contains("sign_f")) hints.sign_f = matrix_hom(t, "sign_f", FinAb(Vec(cm->r(), 2)), i_f, where);
    return synthesize_cartesian_model(cm, i_f, rec_f, hints);
  }
  if (*kind != "explicit") fail(where, "kind must be 'explicit' or 'synthetic'");

  synthetic = false;
  allow_keys(t, where,
             {"kind", "i_q", "rec_q", "i_f", "rec_f", "i_k", "rec_k", "n_kf", "i_kf", "i_fq", "sign_f"});
  RecipData d;
  d.i_q = moduli(t, "i_q", where);
  d.i_f = moduli(t, "i_f", where);
  d.i_k = moduli(t, "i_k", where);
  d.rec_q = images_hom(t, "rec_q", d.i_q, base->gamma_ab(), where);
  d.rec_f = images_hom(t, "rec_f", d.i_f, cm->hf_ab(), where);
  d.rec_k = images_hom(t, "rec_k", d.i_k, cm->hk_ab(), where);
  d.n_kf = matrix_hom(t, "n_kf", d.i_k, d.i_f, where);
  d.i_kf = matrix_hom(t, "i_kf", d.i_f, d.i_k, where);
  d.i_fq = matrix_hom(t, "i_fq", d.i_q, d.i_f, where);
  d.sign_f = matrix_hom(t, "sign_f", FinAb(Vec(cm->r(), 2)), d.i_f, where);
  return RecipModel::make(cm, std::move(d));
}

TorusModel parse_torus(const toml::table& t, const RecipPtr& recip, std::size_t index) {
  const std::string where = "[[torus]] #" + std::to_string(index + 1);
  allow_keys(t, where, {"name", "vz", "i_r", "p_r", "quot_vz", "quot_ir", "mu"});
  const auto name = t["name"].value<std::string>();
  if (!name) fail(where, "missing 'name'");
  const bool custom = t.contains("vz") || t.contains("i_r");
  if (!custom) {
    if (t.size() != 1) fail(where, "builtin tori take no further keys");
    if (*name == "minimal") return TorusModel::minimal(recip);
    if (*name == "full") return TorusModel::full(recip);
    fail(where, "unknown builtin torus '" + *name + "'");
  }
  std::vector<Vec> vz;
  if (t.contains("vz")) vz = int_rows(*t.get("vz"), where + ".vz");
  if (!t.contains("i_r")) fail(where, "missing 'i_r'");
  const std::vector<Vec> i_r = int_rows(*t.get("i_r"), where + ".i_r");

  std::optional<ComponentData> data;
  if (t.contains("p_r") || t.contains("quot_vz") || t.contains("quot_ir") || t.contains("mu")) {
    if (!t.contains("p_r") || !t.contains("quot_vz") || !t.contains("quot_ir") || !t.contains("mu"))
      fail(where, "explicit component data needs p_r, quot_vz, quot_ir and mu");
    // Subgroups are rebuilt exactly as TorusModel::make builds them.
    const SubAb vz_sub = subgroup_generated(recip->sign_group(), vz);
    const SubAb ir_sub = subgroup_generated(recip->i_f(), i_r);
    ComponentData cd;
    cd.p_r = moduli(t, "p_r", where);
    const std::vector<Vec> qv = int_rows(*t.get("quot_vz"), where + ".quot_vz");
    const std::vector<Vec> qi = int_rows(*t.get("quot_ir"), where + ".quot_ir");
    if (qv.size() != vz.size() || qi.size() != i_r.size())
      fail(where, "quot_vz and quot_ir need one image per listed generator");
    std::vector<ValueConstraint> values;
    const FinAb dom = direct_sum(vz_sub.group, ir_sub.group);
    for (std::size_t j = 0; j < vz.size(); ++j) {
      Vec at = *vz_sub.coordinates(recip->sign_group().reduce(vz[j]));
      at.resize(dom.rank(), 0);
      values.push_back({at, qv[j]});
    }
    for (std::size_t j = 0; j < i_r.size(); ++j) {
      Vec at = vz_sub.group.zero();
      const Vec c = *ir_sub.coordinates(recip->i_f().reduce(i_r[j]));
      at.insert(at.end(), c.begin(), c.end());
      values.push_back({at, qi[j]});
    }
    try {
      cd.quot = hom_from_values(dom, cd.p_r, values);
    } catch (const Error& e) {
      fail(where, std::string("quot: ") + e.what());
    }
    cd.mu = images_hom(t, "mu", cd.p_r, recip->cm()->hf_ab(), where);
    data = std::move(cd);
  }
  return TorusModel::make(recip, *name, vz, i_r, std::move(data));
}

Model build(const toml::table& root, std::string id) {
  allow_keys(root, "model file", {"model", "group", "fields", "recip", "class_group", "torus"});
  Model m;
  m.id = std::move(id);
  if (const auto* meta = root.get_as<toml::table>("model")) {
    allow_keys(*meta, "[model]", {"id", "description"});
    if (auto v = (*meta)["id"].value<std::string>()) m.id = *v;
    if (auto v = (*meta)["description"].value<std::string>()) m.description = *v;
  }

  m.gamma = parse_group(table_at(root, "group", "model file"));
  const FiniteGroup& g = *m.gamma;

  const toml::table& f = table_at(root, "fields", "model file");
  allow_keys(f, "[fields]", {"h_f", "h_k", "c", "section"});
  if (!f.contains("h_f") || !f.contains("h_k") || !f.contains("c")) fail("[fields]", "need h_f, h_k and c");
  Subgroup h_f = Subgroup::from_members(m.gamma, elements(g, *f.get("h_f"), "[fields].h_f"));
  Subgroup h_k = Subgroup::from_members(m.gamma, elements(g, *f.get("h_k"), "[fields].h_k"));
  std::vector<Elem> section;
  if (f.contains("section")) section = elements(g, *f.get("section"), "[fields].section");
  m.base = GaloisContext::make(m.gamma, h_f, section);
  m.cm = CMContext::make(m.base, h_k, element(g, *f.get("c"), "[fields].c"));

  m.recip = parse_recip(table_at(root, "recip", "model file"), m.cm, m.synthetic);

  std::vector<Vec> relations;
  if (const auto* cg = root.get_as<toml::table>("class_group")) {
    allow_keys(*cg, "[class_group]", {"relations"});
    if (cg->contains("relations")) relations = int_rows(*cg->get("relations"), "[class_group].relations");
  }
  m.class_group = class_group_model(*m.recip, relations);

  if (const auto* tori = root.get_as<toml::array>("torus")) {
    std::size_t i = 0;
    for (const auto& node : *tori) {
      const auto* t = node.as_table();
      if (!t) fail("[[torus]]", "entries must be tables");
      m.tori.push_back(parse_torus(*t, m.recip, i++));
    }
  } else {
    m.tori.push_back(TorusModel::minimal(m.recip));
    m.tori.push_back(TorusModel::full(m.recip));
  }
  std::set<std::string> names;
  for (const auto& t : m.tori)
    if (!names.insert(t.name()).second) fail("[[torus]]", "duplicate torus name '" + t.name() + "'");
  return m;
}

}  // namespace

const TorusModel& Model::torus(std::string_view name) const {
  for (const auto& t : tori)
    if (t.name() == name) return t;
  throw Error(Errc::InvalidArgument, "model '" + id + "' has no torus '" + std::string(name) + "'");
}

Model parse_model(std::string_view toml_text, std::string id) {
  toml::table root;
  try {
    root = toml::parse(toml_text);
  } catch (const toml::parse_error& e) {
    std::ostringstream os;
    os << e.description() << " (line " << e.source().begin.line << ")";
    throw Error(Errc::ConfigError, os.str());
  }
  return build(root, std::move(id));
}

Model load_model(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw Error(Errc::ConfigError, "cannot open model file " + file.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_model(buf.str(), file.stem().string());
}

std::filesystem::path model_directory() {
  if (const char* env = std::getenv("PLECTIC_CM_MODEL_DIR"); env && *env) return env;
  return PLECTIC_CM_DEFAULT_MODEL_DIR;
}

std::filesystem::path resolve_model(std::string_view id_or_path, const std::filesystem::path& dir) {
  const std::filesystem::path direct(id_or_path);
  if (std::filesystem::is_regular_file(direct)) return direct;
  const std::filesystem::path named = dir / (std::string(id_or_path) + ".toml");
  if (std::filesystem::is_regular_file(named)) return named;
  throw Error(Errc::ConfigError, "no model '" + std::string(id_or_path) + "' (looked in " + dir.string() + ")");
}

}  // namespace plectic
