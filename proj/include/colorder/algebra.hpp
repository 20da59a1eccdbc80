#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "colorder/grading.hpp"
#include "colorder/linalg.hpp"

namespace colorder {

struct BasisElement {
  std::string name;
  GroupElement degree;

  friend bool operator==(const BasisElement&, const BasisElement&) = default;
};

/// Finite-dimensional Lie color algebra given by structure constants on a
/// homogeneous basis: [e_i, e_j] = sum_k c[i][j][k] e_k.
///
/// The constants for every ordered pair are stored; nothing is symmetrized.
/// Construction checks only shapes and fields. Grading support, antisymmetry
/// and the Jacobi identity are reported by check_color_axioms().
class ColorAlgebra {
 public:
  ColorAlgebra() = default;
  /// `products[i * d + j]` is the coordinate vector of [e_i, e_j].
  ColorAlgebra(Bicharacter bichar, std::vector<BasisElement> basis, std::vector<Vector> products);

  const GradingGroup& group() const { return bichar_.group(); }
  const Bicharacter& bicharacter() const { return bichar_; }
  int conductor() const { return bichar_.conductor(); }
  std::size_t dim() const { return basis_.size(); }

  const std::vector<BasisElement>& basis() const { return basis_; }
  const GroupElement& degree(std::size_t i) const { return basis_[i].degree; }
  const std::string& name(std::size_t i) const { return basis_[i].name; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  const Vector& product(std::size_t i, std::size_t j) const { return products_[i * dim() + j]; }
  const CycloScalar& constant(std::size_t i, std::size_t j, std::size_t k) const {
    return product(i, j)[k];
  }

  const CycloScalar& eps(const GroupElement& a, const GroupElement& b) const {
    return bichar_.eps(a, b);
  }
  CycloScalar zero() const { return CycloScalar(conductor()); }
  CycloScalar one() const { return CycloScalar(1, conductor()); }
  CycloScalar scalar(const Rational& q) const { return CycloScalar(q, conductor()); }

  Vector zero_vector() const { return colorder::zero_vector(dim(), conductor()); }
  Vector basis_vector(std::size_t i) const;

  /// Indices of basis elements of degree g, ascending.
  std::vector<std::size_t> indices_of_degree(const GroupElement& g) const;

  /// Degree of a homogeneous nonzero vector; nullopt for zero. Throws
  /// NonHomogeneous when the support spans several degrees.
  std::optional<GroupElement> degree_of(std::span<const CycloScalar> v) const;

  friend bool operator==(const ColorAlgebra& a, const ColorAlgebra& b) {
    return a.bichar_ == b.bichar_ && a.basis_ == b.basis_ && a.products_ == b.products_;
  }

 private:
  Bicharacter bichar_;
  std::vector<BasisElement> basis_;
  std::vector<Vector> products_;
};

/// Accumulates brackets by basis index. bracket() also writes the partner
/// [e_j, e_i] = -eps(deg j, deg i) [e_i, e_j] unless told not to.
class AlgebraBuilder {
 public:
  AlgebraBuilder(Bicharacter bichar, std::vector<BasisElement> basis);

  AlgebraBuilder& bracket(std::size_t i, std::size_t j,
                          const std::vector<std::pair<std::size_t, CycloScalar>>& result,
                          bool fill_partner = true);
  AlgebraBuilder& bracket(std::size_t i, std::size_t j,
                          const std::vector<std::pair<std::size_t, long>>& result,
                          bool fill_partner = true);
  AlgebraBuilder& set_product(std::size_t i, std::size_t j, Vector v);

  const Vector& product(std::size_t i, std::size_t j) const { return products_[i * dim_ + j]; }
  ColorAlgebra build() const;

 private:
  Bicharacter bichar_;
  std::vector<BasisElement> basis_;
  std::size_t dim_;
  std::vector<Vector> products_;
};

struct AxiomViolation {
  enum class Kind { GradingSupport, Antisymmetry, Jacobi };
  Kind kind;
  std::vector<std::size_t> indices;
  std::string message;
};

struct AxiomReport {
  std::vector<AxiomViolation> violations;
  bool ok() const { return violations.empty(); }
  std::size_t count(AxiomViolation::Kind k) const;
};

const char* to_string(AxiomViolation::Kind k);

/// Exhaustive check over basis indices of grading support, eps-antisymmetry
/// and the eps-Jacobi identity
///   eps(z,x)[x,[y,z]] + eps(x,y)[y,[z,x]] + eps(y,z)[z,[x,y]] = 0.
/// Violations are listed in lexicographic index order.
AxiomReport check_color_axioms(const ColorAlgebra& a);

Vector bracket(const ColorAlgebra& a, std::span<const CycloScalar> u, std::span<const CycloScalar> v);

/// [[...[[x1, x2], x3], ...], xn]; needs at least two arguments.
Vector left_normed_bracket(const ColorAlgebra& a, std::span<const Vector> xs);

Subspace derived_subalgebra(const ColorAlgebra& a);
bool is_perfect(const ColorAlgebra& a);
Subspace center(const ColorAlgebra& a);
Subspace centralizer(const ColorAlgebra& a, std::span<const Vector> s);

}  // namespace colorder
