#pragma once

// Integer linear algebra for finite abelian groups: Smith normal form,
// homomorphism solving, lifts and sections, fiber products.
//
// A FinAb is a direct sum Z/m_1 + ... + Z/m_k; elements are integer vectors
// reduced componentwise. Homomorphisms act on column vectors, so the matrix
// of f: A -> B has rank(B) rows and rank(A) columns.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace plectic {

using Int = std::int64_t;
using Vec = std::vector<Int>;

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static Matrix identity(std::size_t n);
  /// Rows given explicitly; every row must have `cols` entries.
  static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols);
  static Matrix from_columns(const std::vector<Vec>& columns, std::size_t rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Int operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec row(std::size_t r) const;
  Vec column(std::size_t c) const;
  Vec apply(const Vec& x) const;
  Matrix transpose() const;
  const std::vector<Int>& data() const noexcept { return data_; }

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

/// U * M * V == D with U, V unimodular and D diagonal, d_1 | d_2 | ... >= 0.
struct SmithForm {
  Matrix u, u_inv, d, v, v_inv;
  std::size_t rank = 0;

  Vec diagonal() const;
};

SmithForm smith_normal_form(const Matrix& m);

class FinAb {
 public:
  FinAb() = default;
  explicit FinAb(Vec moduli);

  static FinAb cyclic(Int n) { return FinAb(Vec{n}); }
  /// Requires d_i | d_{i+1}; factors equal to 1 are kept as trivial coordinates.
  static FinAb invariant(Vec factors);

  std::size_t rank() const noexcept { return moduli_.size(); }
  const Vec& moduli() const noexcept { return moduli_; }
  Int modulus(std::size_t i) const { return moduli_[i]; }
  Int order() const;
  bool is_trivial() const { return order() == 1; }
  bool is_invariant_form() const;
  /// Canonical invariant factors of the abstract group (units dropped).
  Vec invariant_factors() const;

  Vec zero() const { return Vec(moduli_.size(), 0); }
  Vec basis(std::size_t i) const;
  Vec reduce(Vec a) const;
  Vec add(const Vec& a, const Vec& b) const;
  Vec sub(const Vec& a, const Vec& b) const;
  Vec neg(const Vec& a) const;
  Vec scale(Int k, const Vec& a) const;
  bool is_zero(const Vec& a) const;
  bool contains(const Vec& a) const;  ///< right length and already reduced
  Int element_order(const Vec& a) const;

  std::size_t index_of(const Vec& a) const;
  Vec element_at(std::size_t index) const;
  std::vector<Vec> elements() const;

  std::string to_string() const;

  friend bool operator==(const FinAb&, const FinAb&) = default;

 private:
  Vec moduli_;
};

FinAb direct_sum(const FinAb& a, const FinAb& b);

class AbHom {
 public:
  AbHom() = default;
  /// Throws IllDefinedHom unless d_j * m(i, j) == 0 mod e_i for every entry.
  AbHom(FinAb domain, FinAb codomain, Matrix m);

  static AbHom zero(FinAb domain, FinAb codomain);
  static AbHom identity(const FinAb& a);
  /// images[j] is the image of the j-th basis vector of the domain.
  static AbHom from_images(FinAb domain, FinAb codomain, const std::vector<Vec>& images);

  const FinAb& domain() const noexcept { return domain_; }
  const FinAb& codomain() const noexcept { return codomain_; }
  const Matrix& matrix() const noexcept { return m_; }

  Vec operator()(const Vec& x) const;

  Int kernel_order() const;
  Int image_order() const;
  bool is_injective() const { return kernel_order() == 1; }
  bool is_surjective() const { return image_order() == codomain_.order(); }

  friend bool operator==(const AbHom&, const AbHom&) = default;

 private:
  FinAb domain_;
  FinAb codomain_;
  Matrix m_;
};

AbHom compose(const AbHom& g, const AbHom& f);  ///< g after f
AbHom add(const AbHom& f, const AbHom& g);
AbHom negate(const AbHom& f);
/// x -> (f(x), g(x)) into f.codomain + g.codomain.
AbHom pairing(const AbHom& f, const AbHom& g);
/// (a, b) -> f(a) + g(b) from f.domain + g.domain.
AbHom copairing(const AbHom& f, const AbHom& g);
AbHom first_projection(const FinAb& a, const FinAb& b);
AbHom second_projection(const FinAb& a, const FinAb& b);
AbHom first_injection(const FinAb& a, const FinAb& b);
AbHom second_injection(const FinAb& a, const FinAb& b);

/// Subgroup of an ambient group, presented abstractly with its inclusion.
struct SubAb {
  FinAb group;
  AbHom inclusion;

  const FinAb& ambient() const { return inclusion.codomain(); }
  Int order() const { return group.order(); }
  bool contains(const Vec& ambient_element) const;
  /// Coordinates of an ambient element in `group`, if it lies in the subgroup.
  std::optional<Vec> coordinates(const Vec& ambient_element) const;
  std::vector<Vec> ambient_elements() const;
};

SubAb subgroup_generated(const FinAb& ambient, std::span<const Vec> generators);
SubAb kernel(const AbHom& f);
SubAb image(const AbHom& f);

struct QuotAb {
  FinAb group;
  AbHom projection;
};

QuotAb quotient(const FinAb& a, std::span<const Vec> relations);

struct Preimage {
  Vec x;
  std::vector<Vec> kernel_generators;
};

/// Caches the Smith form of a homomorphism for repeated preimage queries.
class HomSolver {
 public:
  explicit HomSolver(AbHom f);

  const AbHom& hom() const noexcept { return f_; }
  std::optional<Vec> solve(const Vec& b) const;
  const std::vector<Vec>& kernel_generators() const noexcept { return kernel_; }
  bool injective() const noexcept { return injective_; }

 private:
  AbHom f_;
  SmithForm snf_;
  std::vector<Vec> kernel_;
  bool injective_ = false;
};

std::optional<Preimage> try_solve_hom(const AbHom& f, const Vec& b);
/// Throws NoSolution when b is not in the image.
Preimage solve_hom(const AbHom& f, const Vec& b);

/// Requires s(at) == value of a lift or section s.
struct ValueConstraint {
  Vec at;
  Vec value;
};

/// Homomorphisms s: target.domain -> f.domain with f o s == target and all
/// constraints satisfied. The canonical choice is the lexicographically
/// smallest matrix (row-major, entries reduced).
std::optional<AbHom> lift_through(const AbHom& f, const AbHom& target,
                                  std::span<const ValueConstraint> constraints = {});
std::vector<AbHom> all_lifts(const AbHom& f, const AbHom& target,
                             std::span<const ValueConstraint> constraints = {},
                             std::size_t limit = std::size_t{1} << 20);

/// The homomorphism domain -> codomain taking each `at` to its `value`.
/// Throws IllDefinedHom if none exists and NoSolution if the points do not
/// generate the domain.
AbHom hom_from_values(const FinAb& domain, const FinAb& codomain, std::span<const ValueConstraint> values);

/// Throws NotSurjective, NotSplit, or ConstraintInfeasible.
AbHom section_of_surjection(const AbHom& f, std::span<const ValueConstraint> constraints = {});
std::vector<AbHom> all_sections(const AbHom& f, std::span<const ValueConstraint> constraints = {},
                                std::size_t limit = std::size_t{1} << 20);

/// The unique mu with mu o surjection == phi. Throws NotSurjective or
/// IllDefinedHom (phi does not vanish on the kernel).
AbHom factor_through(const AbHom& surjection, const AbHom& phi);

struct FiberProduct {
  FinAb group;
  AbHom to_a;
  AbHom to_b;
};

FiberProduct fiber_product(const AbHom& f, const AbHom& g);

/// Square  X --p--> A, X --q--> B, A --f--> C, B --g--> C.
struct CartesianCheck {
  enum class Failure { None, NotInjective, NotSurjective };

  bool cartesian = false;
  Failure failure = Failure::None;
  /// NotInjective: a nonzero corner element in the kernel of (p, q).
  /// NotSurjective: a pair (a, b) with f(a) == g(b) outside the image.
  Vec witness;
};

CartesianCheck is_cartesian_square(const AbHom& p, const AbHom& q, const AbHom& f, const AbHom& g);

}  // namespace plectic
