#include "plectic/abelian.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <utility>

#include "plectic/error.hpp"

namespace plectic {

namespace {

Int checked_mul(Int a, Int b) {
  Int r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(Errc::Overflow, "integer product overflows int64");
  return r;
}

Int checked_add(Int a, Int b) {
  Int r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw Error(Errc::Overflow, "integer sum overflows int64");
  return r;
}

Int floor_mod(Int a, Int m) {
  if (m == 0) return a;
  Int r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

// ---------------------------------------------------------------- Matrix

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(Errc::InvalidArgument, "ragged matrix row");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& columns, std::size_t rows) {
  Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw Error(Errc::InvalidArgument, "ragged matrix column");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Vec Matrix::row(std::size_t r) const {
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
             data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vec Matrix::column(std::size_t c) const {
  Vec out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

Vec Matrix::apply(const Vec& x) const {
  if (x.size() != cols_) throw Error(Errc::InvalidArgument, "matrix/vector size mismatch");
  Vec out(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    Int acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) acc = checked_add(acc, checked_mul((*this)(r, c), x[c]));
    out[r] = acc;
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw Error(Errc::InvalidArgument, "matrix product size mismatch");
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Int aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        out(i, j) = checked_add(out(i, j), checked_mul(aik, b(k, j)));
    }
  return out;
}

// ---------------------------------------------------------------- Smith form

Vec SmithForm::diagonal() const {
  Vec out(std::min(d.rows(), d.cols()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = d(i, i);
  return out;
}

SmithForm smith_normal_form(const Matrix& m) {
  const std::size_t nr = m.rows();
  const std::size_t nc = m.cols();
  Matrix a = m;
  Matrix u = Matrix::identity(nr), ui = Matrix::identity(nr);
  Matrix v = Matrix::identity(nc), vi = Matrix::identity(nc);

  // row i += k * row j
  auto row_add = [&](std::size_t i, std::size_t j, Int k) {
    for (std::size_t c = 0; c < nc; ++c) a(i, c) = checked_add(a(i, c), checked_mul(k, a(j, c)));
    for (std::size_t c = 0; c < nr; ++c) u(i, c) = checked_add(u(i, c), checked_mul(k, u(j, c)));
    for (std::size_t r = 0; r < nr; ++r) ui(r, j) = checked_add(ui(r, j), checked_mul(-k, ui(r, i)));
  };
  auto row_swap = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < nc; ++c) std::swap(a(i, c), a(j, c));
    for (std::size_t c = 0; c < nr; ++c) std::swap(u(i, c), u(j, c));
    for (std::size_t r = 0; r < nr; ++r) std::swap(ui(r, i), ui(r, j));
  };
  auto row_neg = [&](std::size_t i) {
    for (std::size_t c = 0; c < nc; ++c) a(i, c) = -a(i, c);
    for (std::size_t c = 0; c < nr; ++c) u(i, c) = -u(i, c);
    for (std::size_t r = 0; r < nr; ++r) ui(r, i) = -ui(r, i);
  };
  // column i += k * column j
  auto col_add = [&](std::size_t i, std::size_t j, Int k) {
    for (std::size_t r = 0; r < nr; ++r) a(r, i) = checked_add(a(r, i), checked_mul(k, a(r, j)));
    for (std::size_t r = 0; r < nc; ++r) v(r, i) = checked_add(v(r, i), checked_mul(k, v(r, j)));
    for (std::size_t c = 0; c < nc; ++c) vi(j, c) = checked_add(vi(j, c), checked_mul(-k, vi(i, c)));
  };
  auto col_swap = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < nr; ++r) std::swap(a(r, i), a(r, j));
    for (std::size_t r = 0; r < nc; ++r) std::swap(v(r, i), v(r, j));
    for (std::size_t c = 0; c < nc; ++c) std::swap(vi(i, c), vi(j, c));
  };

  std::size_t rank = 0;
  const std::size_t diag = std::min(nr, nc);
  for (std::size_t t = 0; t < diag; ++t) {
    bool empty = false;
    for (;;) {
      // pivot: nonzero entry of least absolute value in the trailing block
      std::size_t pr = nr, pc = nc;
      Int best = 0;
      for (std::size_t i = t; i < nr; ++i)
        for (std::size_t j = t; j < nc; ++j) {
          const Int x = std::llabs(a(i, j));
          if (x != 0 && (best == 0 || x < best)) {
            best = x;
            pr = i;
            pc = j;
          }
        }
      if (best == 0) {
        empty = true;
        break;
      }
      row_swap(t, pr);
      col_swap(t, pc);

      bool clean = true;
      for (std::size_t i = t + 1; i < nr; ++i) {
        if (a(i, t) == 0) continue;
        row_add(i, t, -(a(i, t) / a(t, t)));
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < nc; ++j) {
        if (a(t, j) == 0) continue;
        col_add(j, t, -(a(t, j) / a(t, t)));
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      bool divides = true;
      for (std::size_t i = t + 1; i < nr && divides; ++i)
        for (std::size_t j = t + 1; j < nc; ++j)
          if (a(i, j) % a(t, t) != 0) {
            row_add(t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (empty) break;
    if (a(t, t) < 0) row_neg(t);
    ++rank;
  }

  SmithForm out;
  out.u = std::move(u);
  out.u_inv = std::move(ui);
  out.d = std::move(a);
  out.v = std::move(v);
  out.v_inv = std::move(vi);
  out.rank = rank;
  return out;
}

// ---------------------------------------------------------------- FinAb

FinAb::FinAb(Vec moduli) : moduli_(std::move(moduli)) {
  for (Int m : moduli_)
    if (m < 1) throw Error(Errc::InvalidArgument, "cyclic factor moduli must be >= 1");
}

FinAb FinAb::invariant(Vec factors) {
  for (std::size_t i = 0; i + 1 < factors.size(); ++i)
    if (factors[i] < 1 || factors[i + 1] % factors[i] != 0)
      throw Error(Errc::InvalidArgument, "invariant factors must satisfy d_i | d_{i+1}");
  return FinAb(std::move(factors));
}

Int FinAb::order() const {
  Int o = 1;
  for (Int m : moduli_) o = checked_mul(o, m);
  return o;
}

bool FinAb::is_invariant_form() const {
  for (std::size_t i = 0; i + 1 < moduli_.size(); ++i)
    if (moduli_[i + 1] % moduli_[i] != 0) return false;
  return true;
}

Vec FinAb::invariant_factors() const {
  Matrix d(rank(), rank());
  for (std::size_t i = 0; i < rank(); ++i) d(i, i) = moduli_[i];
  Vec out;
  for (Int x : smith_normal_form(d).diagonal())
    if (x != 1) out.push_back(x);
  return out;
}

Vec FinAb::basis(std::size_t i) const {
  Vec e = zero();
  e.at(i) = 1;
  return reduce(std::move(e));
}

Vec FinAb::reduce(Vec a) const {
  if (a.size() != moduli_.size()) throw Error(Errc::InvalidArgument, "element has wrong rank for " + to_string());
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = floor_mod(a[i], moduli_[i]);
  return a;
}

Vec FinAb::add(const Vec& a, const Vec& b) const {
  Vec out(rank());
  for (std::size_t i = 0; i < rank(); ++i) out[i] = checked_add(a.at(i), b.at(i));
  return reduce(std::move(out));
}

Vec FinAb::sub(const Vec& a, const Vec& b) const { return add(a, neg(b)); }

Vec FinAb::neg(const Vec& a) const {
  Vec out(rank());
  for (std::size_t i = 0; i < rank(); ++i) out[i] = -a.at(i);
  return reduce(std::move(out));
}

Vec FinAb::scale(Int k, const Vec& a) const {
  Vec out(rank());
  for (std::size_t i = 0; i < rank(); ++i) out[i] = checked_mul(floor_mod(k, moduli_[i]), a.at(i));
  return reduce(std::move(out));
}

bool FinAb::is_zero(const Vec& a) const {
  const Vec r = reduce(a);
  return std::all_of(r.begin(), r.end(), [](Int x) { return x == 0; });
}

bool FinAb::contains(const Vec& a) const {
  if (a.size() != rank()) return false;
  for (std::size_t i = 0; i < rank(); ++i)
    if (a[i] < 0 || a[i] >= moduli_[i]) return false;
  return true;
}

Int FinAb::element_order(const Vec& a) const {
  const Vec r = reduce(a);
  Int o = 1;
  for (std::size_t i = 0; i < rank(); ++i) {
    const Int oi = moduli_[i] / std::gcd(moduli_[i], r[i]);
    o = std::lcm(o, oi);
  }
  return o;
}

std::size_t FinAb::index_of(const Vec& a) const {
  const Vec r = reduce(a);
  std::size_t idx = 0;
  for (std::size_t i = 0; i < rank(); ++i) idx = idx * static_cast<std::size_t>(moduli_[i]) + static_cast<std::size_t>(r[i]);
  return idx;
}

Vec FinAb::element_at(std::size_t index) const {
  Vec out(rank(), 0);
  for (std::size_t i = rank(); i-- > 0;) {
    const auto m = static_cast<std::size_t>(moduli_[i]);
    out[i] = static_cast<Int>(index % m);
    index /= m;
  }
  return out;
}

std::vector<Vec> FinAb::elements() const {
  const auto n = static_cast<std::size_t>(order());
  std::vector<Vec> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(element_at(i));
  return out;
}

std::string FinAb::to_string() const {
  if (moduli_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < moduli_.size(); ++i) os << (i ? " x " : "") << "Z/" << moduli_[i];
  return os.str();
}

FinAb direct_sum(const FinAb& a, const FinAb& b) {
  Vec m = a.moduli();
  m.insert(m.end(), b.moduli().begin(), b.moduli().end());
  return FinAb(std::move(m));
}

// ---------------------------------------------------------------- AbHom

AbHom::AbHom(FinAb domain, FinAb codomain, Matrix m)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), m_(std::move(m)) {
  if (m_.rows() != codomain_.rank() || m_.cols() != domain_.rank())
    throw Error(Errc::IllDefinedHom, "matrix shape does not match " + domain_.to_string() + " -> " +
                                         codomain_.to_string());
  for (std::size_t i = 0; i < m_.rows(); ++i)
    for (std::size_t j = 0; j < m_.cols(); ++j) {
      m_(i, j) = floor_mod(m_(i, j), codomain_.modulus(i));
      if (floor_mod(checked_mul(domain_.modulus(j), m_(i, j)), codomain_.modulus(i)) != 0)
        throw Error(Errc::IllDefinedHom, "column " + std::to_string(j) + " does not respect the order of Z/" +
                                             std::to_string(domain_.modulus(j)));
    }
}

AbHom AbHom::zero(FinAb domain, FinAb codomain) {
  Matrix m(codomain.rank(), domain.rank());
  return AbHom(std::move(domain), std::move(codomain), std::move(m));
}

AbHom AbHom::identity(const FinAb& a) { return AbHom(a, a, Matrix::identity(a.rank())); }

AbHom AbHom::from_images(FinAb domain, FinAb codomain, const std::vector<Vec>& images) {
  if (images.size() != domain.rank()) throw Error(Errc::IllDefinedHom, "need one image per domain generator");
  Matrix m = Matrix::from_columns(images, codomain.rank());
  return AbHom(std::move(domain), std::move(codomain), std::move(m));
}

Vec AbHom::operator()(const Vec& x) const { return codomain_.reduce(m_.apply(domain_.reduce(x))); }

Int AbHom::image_order() const {
  // |B / im f| is the product of the Smith invariants of [M | diag(e)].
  const std::size_t m = codomain_.rank(), n = domain_.rank();
  Matrix big(m, n + m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) big(i, j) = m_(i, j);
    big(i, n + i) = codomain_.modulus(i);
  }
  Int coker = 1;
  for (Int d : smith_normal_form(big).diagonal()) coker = checked_mul(coker, d);
  return codomain_.order() / coker;
}

Int AbHom::kernel_order() const { return domain_.order() / image_order(); }

AbHom compose(const AbHom& g, const AbHom& f) {
  if (!(f.codomain() == g.domain())) throw Error(Errc::InvalidArgument, "compose: codomain/domain mismatch");
  return AbHom(f.domain(), g.codomain(), g.matrix() * f.matrix());
}

AbHom add(const AbHom& f, const AbHom& g) {
  if (!(f.domain() == g.domain()) || !(f.codomain() == g.codomain()))
    throw Error(Errc::InvalidArgument, "add: homomorphisms have different signatures");
  Matrix m(f.matrix().rows(), f.matrix().cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = f.matrix()(i, j) + g.matrix()(i, j);
  return AbHom(f.domain(), f.codomain(), std::move(m));
}

AbHom negate(const AbHom& f) {
  Matrix m(f.matrix().rows(), f.matrix().cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = -f.matrix()(i, j);
  return AbHom(f.domain(), f.codomain(), std::move(m));
}

AbHom pairing(const AbHom& f, const AbHom& g) {
  if (!(f.domain() == g.domain())) throw Error(Errc::InvalidArgument, "pairing: domains differ");
  const FinAb cod = direct_sum(f.codomain(), g.codomain());
  Matrix m(cod.rank(), f.domain().rank());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    for (std::size_t i = 0; i < f.codomain().rank(); ++i) m(i, j) = f.matrix()(i, j);
    for (std::size_t i = 0; i < g.codomain().rank(); ++i) m(f.codomain().rank() + i, j) = g.matrix()(i, j);
  }
  return AbHom(f.domain(), cod, std::move(m));
}

AbHom copairing(const AbHom& f, const AbHom& g) {
  if (!(f.codomain() == g.codomain())) throw Error(Errc::InvalidArgument, "copairing: codomains differ");
  const FinAb dom = direct_sum(f.domain(), g.domain());
  Matrix m(f.codomain().rank(), dom.rank());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < f.domain().rank(); ++j) m(i, j) = f.matrix()(i, j);
    for (std::size_t j = 0; j < g.domain().rank(); ++j) m(i, f.domain().rank() + j) = g.matrix()(i, j);
  }
  return AbHom(dom, f.codomain(), std::move(m));
}

AbHom first_projection(const FinAb& a, const FinAb& b) {
  Matrix m(a.rank(), a.rank() + b.rank());
  for (std::size_t i = 0; i < a.rank(); ++i) m(i, i) = 1;
  return AbHom(direct_sum(a, b), a, std::move(m));
}

AbHom second_projection(const FinAb& a, const FinAb& b) {
  Matrix m(b.rank(), a.rank() + b.rank());
  for (std::size_t i = 0; i < b.rank(); ++i) m(i, a.rank() + i) = 1;
  return AbHom(direct_sum(a, b), b, std::move(m));
}

AbHom first_injection(const FinAb& a, const FinAb& b) {
  Matrix m(a.rank() + b.rank(), a.rank());
  for (std::size_t i = 0; i < a.rank(); ++i) m(i, i) = 1;
  return AbHom(a, direct_sum(a, b), std::move(m));
}

AbHom second_injection(const FinAb& a, const FinAb& b) {
  Matrix m(a.rank() + b.rank(), b.rank());
  for (std::size_t i = 0; i < b.rank(); ++i) m(a.rank() + i, i) = 1;
  return AbHom(b, direct_sum(a, b), std::move(m));
}

// ---------------------------------------------------------------- solving

HomSolver::HomSolver(AbHom f) : f_(std::move(f)) {
  const FinAb& dom = f_.domain();
  const FinAb& cod = f_.codomain();
  const std::size_t m = cod.rank(), n = dom.rank();
  Matrix big(m, n + m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) big(i, j) = f_.matrix()(i, j);
    big(i, n + i) = cod.modulus(i);
  }
  snf_ = smith_normal_form(big);
  for (std::size_t c = snf_.rank; c < n + m; ++c) {
    Vec x(n);
    for (std::size_t j = 0; j < n; ++j) x[j] = snf_.v(j, c);
    x = dom.reduce(std::move(x));
    if (!dom.is_zero(x)) kernel_.push_back(std::move(x));
  }
  injective_ = kernel_.empty();
}

std::optional<Vec> HomSolver::solve(const Vec& b) const {
  const FinAb& dom = f_.domain();
  const FinAb& cod = f_.codomain();
  const std::size_t m = cod.rank(), n = dom.rank();
  const Vec c = snf_.u.apply(cod.reduce(b));
  Vec y(n + m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    if (i < snf_.rank) {
      const Int d = snf_.d(i, i);
      if (c[i] % d != 0) return std::nullopt;
      y[i] = c[i] / d;
    } else if (c[i] != 0) {
      return std::nullopt;
    }
  }
  const Vec z = snf_.v.apply(y);
  Vec x(z.begin(), z.begin() + static_cast<std::ptrdiff_t>(n));
  return dom.reduce(std::move(x));
}

std::optional<Preimage> try_solve_hom(const AbHom& f, const Vec& b) {
  HomSolver solver(f);
  auto x = solver.solve(b);
  if (!x) return std::nullopt;
  return Preimage{std::move(*x), solver.kernel_generators()};
}

Preimage solve_hom(const AbHom& f, const Vec& b) {
  auto p = try_solve_hom(f, b);
  if (!p) throw Error(Errc::NoSolution, "target element is not in the image");
  return std::move(*p);
}

// ---------------------------------------------------------------- subgroups and quotients

SubAb subgroup_generated(const FinAb& ambient, std::span<const Vec> generators) {
  const std::size_t k = generators.size();
  const std::size_t m = ambient.rank();
  if (k == 0) return SubAb{FinAb{}, AbHom::zero(FinAb{}, ambient)};

  std::vector<Vec> gens;
  gens.reserve(k);
  for (const Vec& g : generators) gens.push_back(ambient.reduce(g));

  // relation lattice {c in Z^k : sum c_i g_i == 0}
  Matrix big(m, k + m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < k; ++j) big(i, j) = gens[j][i];
    big(i, k + i) = ambient.modulus(i);
  }
  const SmithForm s = smith_normal_form(big);
  std::vector<Vec> relations;
  for (std::size_t c = s.rank; c < k + m; ++c) {
    Vec r(k);
    for (std::size_t j = 0; j < k; ++j) r[j] = s.v(j, c);
    relations.push_back(std::move(r));
  }
  const Matrix rel = Matrix::from_rows(relations, k);
  const SmithForm t = smith_normal_form(rel);

  Vec moduli;
  std::vector<Vec> images;
  for (std::size_t i = 0; i < k; ++i) {
    const Int d = i < std::min(rel.rows(), rel.cols()) ? t.d(i, i) : 0;
    if (d == 0) throw Error(Errc::InternalError, "relation lattice of a finite group is not of full rank");
    if (d == 1) continue;
    moduli.push_back(d);
    // y = e_i corresponds to c = row i of V^{-1}
    Vec img = ambient.zero();
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t a = 0; a < m; ++a) img[a] = checked_add(img[a], checked_mul(t.v_inv(i, j), gens[j][a]));
    images.push_back(ambient.reduce(std::move(img)));
  }
  FinAb group(std::move(moduli));
  AbHom incl = AbHom::from_images(group, ambient, images);
  return SubAb{std::move(group), std::move(incl)};
}

bool SubAb::contains(const Vec& ambient_element) const { return coordinates(ambient_element).has_value(); }

std::optional<Vec> SubAb::coordinates(const Vec& ambient_element) const {
  return HomSolver(inclusion).solve(ambient_element);
}

std::vector<Vec> SubAb::ambient_elements() const {
  std::vector<Vec> out;
  for (const Vec& x : group.elements()) out.push_back(inclusion(x));
  std::sort(out.begin(), out.end());
  return out;
}

SubAb kernel(const AbHom& f) {
  HomSolver solver(f);
  return subgroup_generated(f.domain(), solver.kernel_generators());
}

SubAb image(const AbHom& f) {
  std::vector<Vec> cols;
  for (std::size_t j = 0; j < f.domain().rank(); ++j) cols.push_back(f.matrix().column(j));
  return subgroup_generated(f.codomain(), cols);
}

QuotAb quotient(const FinAb& a, std::span<const Vec> relations) {
  const std::size_t m = a.rank();
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < m; ++i) {
    Vec r(m, 0);
    r[i] = a.modulus(i);
    rows.push_back(std::move(r));
  }
  for (const Vec& r : relations) rows.push_back(a.reduce(r));
  const SmithForm s = smith_normal_form(Matrix::from_rows(rows, m));

  Vec moduli;
  std::vector<Vec> proj_rows;
  for (std::size_t i = 0; i < m; ++i) {
    const Int d = s.d(i, i);
    if (d == 1) continue;
    moduli.push_back(d);
    proj_rows.push_back(s.v.column(i));
  }
  FinAb group(std::move(moduli));
  AbHom proj(a, group, Matrix::from_rows(proj_rows, m));
  return QuotAb{std::move(group), std::move(proj)};
}

// ---------------------------------------------------------------- lifts and sections

namespace {

struct LiftSystem {
  FinAb unknowns;
  AbHom phi;
  Vec rhs;
  std::size_t n = 0;  // rank of f.domain
  std::size_t k = 0;  // rank of target.domain
};

LiftSystem build_lift_system(const AbHom& f, const AbHom& target, std::span<const ValueConstraint> constraints) {
  if (!(f.codomain() == target.codomain()))
    throw Error(Errc::InvalidArgument, "lift: f and target have different codomains");
  const FinAb& a = f.domain();
  const FinAb& x = target.domain();
  const FinAb& c = f.codomain();
  const std::size_t n = a.rank(), k = x.rank(), m = c.rank(), nc = constraints.size();

  Vec unk;
  for (std::size_t j = 0; j < k; ++j) unk.insert(unk.end(), a.moduli().begin(), a.moduli().end());
  Vec codm;
  for (std::size_t j = 0; j < k; ++j) codm.insert(codm.end(), a.moduli().begin(), a.moduli().end());
  for (std::size_t j = 0; j < k; ++j) codm.insert(codm.end(), c.moduli().begin(), c.moduli().end());
  for (std::size_t l = 0; l < nc; ++l) codm.insert(codm.end(), a.moduli().begin(), a.moduli().end());
  FinAb unknowns(std::move(unk));
  FinAb cod(std::move(codm));

  Matrix mat(cod.rank(), unknowns.rank());
  Vec rhs(cod.rank(), 0);
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < n; ++i) mat(j * n + i, j * n + i) = x.modulus(j);
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t i = 0; i < n; ++i) mat(k * n + j * m + r, j * n + i) = f.matrix()(r, i);
    const Vec t = target.matrix().column(j);
    for (std::size_t r = 0; r < m; ++r) rhs[k * n + j * m + r] = t[r];
  }
  for (std::size_t l = 0; l < nc; ++l) {
    const Vec at = x.reduce(constraints[l].at);
    const Vec val = a.reduce(constraints[l].value);
    const std::size_t base = k * n + k * m + l * n;
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t i = 0; i < n; ++i) mat(base + i, j * n + i) = at[j];
    for (std::size_t i = 0; i < n; ++i) rhs[base + i] = val[i];
  }
  return LiftSystem{unknowns, AbHom(unknowns, cod, std::move(mat)), cod.reduce(std::move(rhs)), n, k};
}

AbHom lift_from_solution(const AbHom& f, const AbHom& target, const Vec& sol, std::size_t n, std::size_t k) {
  std::vector<Vec> images(k);
  for (std::size_t j = 0; j < k; ++j)
    images[j] = Vec(sol.begin() + static_cast<std::ptrdiff_t>(j * n), sol.begin() + static_cast<std::ptrdiff_t>((j + 1) * n));
  return AbHom::from_images(target.domain(), f.domain(), images);
}

}  // namespace

std::vector<AbHom> all_lifts(const AbHom& f, const AbHom& target, std::span<const ValueConstraint> constraints,
                             std::size_t limit) {
  const LiftSystem sys = build_lift_system(f, target, constraints);
  HomSolver solver(sys.phi);
  const auto x0 = solver.solve(sys.rhs);
  if (!x0) return {};
  const SubAb ker = subgroup_generated(sys.unknowns, solver.kernel_generators());
  const auto count = static_cast<std::size_t>(ker.order());
  if (count > limit) throw Error(Errc::InvalidArgument, "lift enumeration exceeds limit");

  std::vector<std::pair<Vec, AbHom>> keyed;
  keyed.reserve(count);
  for (std::size_t idx = 0; idx < count; ++idx) {
    const Vec sol = sys.unknowns.add(*x0, ker.inclusion(ker.group.element_at(idx)));
    AbHom s = lift_from_solution(f, target, sol, sys.n, sys.k);
    keyed.emplace_back(s.matrix().data(), std::move(s));
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
  std::vector<AbHom> out;
  out.reserve(keyed.size());
  for (auto& [key, s] : keyed) out.push_back(std::move(s));
  return out;
}

std::optional<AbHom> lift_through(const AbHom& f, const AbHom& target, std::span<const ValueConstraint> constraints) {
  auto lifts = all_lifts(f, target, constraints);
  if (lifts.empty()) return std::nullopt;
  return std::move(lifts.front());
}

AbHom hom_from_values(const FinAb& domain, const FinAb& codomain, std::span<const ValueConstraint> values) {
  const FinAb point;
  auto homs = all_lifts(AbHom::zero(codomain, point), AbHom::zero(domain, point), values);
  if (homs.empty()) throw Error(Errc::IllDefinedHom, "prescribed values do not define a homomorphism");
  if (homs.size() > 1) throw Error(Errc::NoSolution, "prescribed points do not generate the domain");
  return std::move(homs.front());
}

AbHom section_of_surjection(const AbHom& f, std::span<const ValueConstraint> constraints) {
  auto all = all_sections(f, constraints);
  return std::move(all.front());
}

std::vector<AbHom> all_sections(const AbHom& f, std::span<const ValueConstraint> constraints, std::size_t limit) {
  if (!f.is_surjective()) throw Error(Errc::NotSurjective, "homomorphism is not surjective");
  const AbHom id = AbHom::identity(f.codomain());
  auto sections = all_lifts(f, id, constraints, limit);
  if (!sections.empty()) return sections;
  if (constraints.empty() || all_lifts(f, id, {}, limit).empty())
    throw Error(Errc::NotSplit, "the surjection " + f.domain().to_string() + " -> " + f.codomain().to_string() +
                                    " has no homomorphic section");
  throw Error(Errc::ConstraintInfeasible, "no section satisfies the prescribed values");
}

AbHom factor_through(const AbHom& surjection, const AbHom& phi) {
  if (!(surjection.domain() == phi.domain())) throw Error(Errc::InvalidArgument, "factor_through: domains differ");
  HomSolver solver(surjection);
  const FinAb& q = surjection.codomain();
  std::vector<Vec> images;
  for (std::size_t i = 0; i < q.rank(); ++i) {
    const auto x = solver.solve(q.basis(i));
    if (!x) throw Error(Errc::NotSurjective, "factor_through: map is not surjective");
    images.push_back(phi(*x));
  }
  AbHom mu = AbHom::from_images(q, phi.codomain(), images);
  if (!(compose(mu, surjection) == phi))
    throw Error(Errc::IllDefinedHom, "map does not vanish on the kernel of the surjection");
  return mu;
}

// ---------------------------------------------------------------- fiber products

FiberProduct fiber_product(const AbHom& f, const AbHom& g) {
  if (!(f.codomain() == g.codomain())) throw Error(Errc::InvalidArgument, "fiber_product: codomains differ");
  const AbHom diff = copairing(f, negate(g));
  SubAb k = kernel(diff);
  AbHom to_a = compose(first_projection(f.domain(), g.domain()), k.inclusion);
  AbHom to_b = compose(second_projection(f.domain(), g.domain()), k.inclusion);
  return FiberProduct{std::move(k.group), std::move(to_a), std::move(to_b)};
}

CartesianCheck is_cartesian_square(const AbHom& p, const AbHom& q, const AbHom& f, const AbHom& g) {
  if (!(p.domain() == q.domain()) || !(p.codomain() == f.domain()) || !(q.codomain() == g.domain()) ||
      !(f.codomain() == g.codomain()))
    throw Error(Errc::InvalidArgument, "square: signatures do not fit together");
  if (!(compose(f, p) == compose(g, q))) throw Error(Errc::NotCommuting, "square does not commute");

  const AbHom canon = pairing(p, q);
  HomSolver solver(canon);
  CartesianCheck out;
  if (!solver.injective()) {
    out.failure = CartesianCheck::Failure::NotInjective;
    out.witness = solver.kernel_generators().front();
    return out;
  }
  const FiberProduct fp = fiber_product(f, g);
  if (fp.group.order() == p.domain().order()) {
    out.cartesian = true;
    return out;
  }
  const AbHom fp_incl = pairing(fp.to_a, fp.to_b);
  for (const Vec& y : fp.group.elements()) {
    const Vec pair = fp_incl(y);
    if (!solver.solve(pair)) {
      out.failure = CartesianCheck::Failure::NotSurjective;
      out.witness = pair;
      return out;
    }
  }
  throw Error(Errc::InternalError, "fiber product order mismatch without a witness");
}

}  // namespace plectic
