#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "colorder/algebra.hpp"
#include "colorder/errors.hpp"

namespace colorder {

/// Homogeneous linear endomorphism of a color algebra. matrix()(k, j) is the
/// coefficient of e_k in D(e_j); entries vanish unless
/// deg e_k = degree + deg e_j.
///
/// Holds a non-owning pointer to its algebra, which must outlive the map.
class GradedMap {
 public:
  /// Throws NonHomogeneous when the matrix leaves the block support of
  /// `degree`.
  GradedMap(const ColorAlgebra& a, GroupElement degree, Matrix m);

  static GradedMap zero(const ColorAlgebra& a, GroupElement degree);
  static GradedMap identity(const ColorAlgebra& a);

  const ColorAlgebra& algebra() const { return *algebra_; }
  const GroupElement& degree() const { return degree_; }
  const Matrix& matrix() const { return matrix_; }

  Vector apply(std::span<const CycloScalar> v) const { return matrix_.apply(v); }
  bool is_zero() const;

  GradedMap& operator+=(const GradedMap& o);
  GradedMap scaled(const CycloScalar& c) const;

  friend bool operator==(const GradedMap& a, const GradedMap& b) {
    return a.matrix_ == b.matrix_ && (a.degree_ == b.degree_ || a.is_zero());
  }

 private:
  const ColorAlgebra* algebra_;
  GroupElement degree_;
  Matrix matrix_;
};

/// Matrix positions (k, j) with deg e_k = degree + deg e_j, in row-major
/// order. These are the unknowns of a homogeneous map of that degree.
std::vector<std::pair<std::size_t, std::size_t>> block_support(const ColorAlgebra& a,
                                                               const GroupElement& degree);

/// y -> [x, y]. The degree is read off x (the zero vector gets degree 0).
GradedMap ad(const ColorAlgebra& a, std::span<const CycloScalar> x);
GradedMap ad(const ColorAlgebra& a, std::span<const CycloScalar> x, const GroupElement& degree);

/// [D1, D2] = D1 D2 - eps(deg D1, deg D2) D2 D1.
GradedMap map_bracket(const GradedMap& d1, const GradedMap& d2);

struct DerivationBlock {
  GroupElement degree;
  std::vector<std::pair<std::size_t, std::size_t>> support;
  Subspace space;  // in coordinates indexed by `support`
};

/// Direct sum over all degrees of a space of homogeneous maps. n is the
/// derivation arity, or nullopt for the inner derivations ad(L).
class DerivationSpace {
 public:
  DerivationSpace(const ColorAlgebra& a, std::optional<int> n, std::vector<DerivationBlock> blocks);

  const ColorAlgebra& algebra() const { return *algebra_; }
  std::optional<int> n() const { return n_; }
  const std::vector<DerivationBlock>& blocks() const { return blocks_; }
  const DerivationBlock& block(const GroupElement& degree) const;
  std::size_t total_dim() const;

  /// Block bases reassembled as maps, blocks in group enumeration order.
  std::vector<GradedMap> basis_maps() const;
  GradedMap block_map(const DerivationBlock& b, std::span<const CycloScalar> coords) const;
  Vector block_coordinates(const DerivationBlock& b, const GradedMap& d) const;

  bool contains(const GradedMap& d) const;
  /// Coordinates of d in the concatenated basis of basis_maps().
  std::optional<Vector> coordinates(const GradedMap& d) const;

 private:
  const ColorAlgebra* algebra_;
  std::optional<int> n_;
  std::vector<DerivationBlock> blocks_;
};

/// Per-degree equality of two spaces over the same algebra.
bool same_space(const DerivationSpace& s, const DerivationSpace& t);

struct Limits {
  /// Largest n accepted without an override. A constraint system costs
  /// d^n tuples times d equations per degree.
  int max_n = 4;
};

class LimitExceeded : public Error {
 public:
  using Error::Error;
};

/// Solves the n-derivation identity
///   D[[..[x1,x2],..],xn] = sum_i eps(D, x1+..+x_{i-1}) [[..[x1,..,D xi,..],..],xn]
/// degree by degree over all basis n-tuples and returns the kernels. n = 2
/// gives Der(L).
DerivationSpace n_derivation_space(const ColorAlgebra& a, int n, const Limits& limits = {});

/// ad(L) split by degree.
DerivationSpace inner_derivation_space(const ColorAlgebra& a);

/// Brute-force evaluation of the n-derivation identity on every basis tuple.
bool is_n_derivation(const ColorAlgebra& a, const GradedMap& d, int n);

/// The map delta_D with [D, ad x] = ad(delta_D(x)). Requires a perfect
/// algebra with zero center.
GradedMap delta(const ColorAlgebra& a, const GradedMap& d, int n);

/// The derivation space as a color algebra under map_bracket. Basis element
/// p is basis_maps()[p], named "D<p>".
ColorAlgebra derivation_color_algebra(const ColorAlgebra& a, const DerivationSpace& space);

struct DegreeComparison {
  GroupElement degree;
  std::size_t left_dim = 0;
  std::size_t right_dim = 0;
  bool equal = false;
};

struct NDerEqualsDerReport {
  int n = 0;
  bool perfect = false;
  std::size_t center_dim = 0;
  bool preconditions_hold = false;
  std::vector<DegreeComparison> per_degree;  // left = Der, right = nDer
  std::size_t der_dim = 0;
  std::size_t nder_dim = 0;
  bool equal = false;
  /// delta(D) = D on every basis D of nDer; only evaluated when the
  /// preconditions hold.
  std::optional<bool> delta_fixed_point;
  bool passed() const;
};

NDerEqualsDerReport verify_nder_equals_der(const ColorAlgebra& a, int n, const Limits& limits = {});

struct SecondStatementReport {
  int n = 0;
  std::size_t der_dim = 0;
  bool part_one_equal = false;
  bool derivation_algebra_axioms_ok = false;
  std::vector<DegreeComparison> per_degree;  // left = nDer(Der L), right = ad(Der L)
  std::size_t nder_dim = 0;
  std::size_t inner_dim = 0;
  bool equal = false;
  bool preserves_inner = false;     // D(ad L) in ad L
  bool realized_by_derivation = false;  // D(ad x) = ad(d(x)), d in Der L, D = ad(d)
  std::vector<std::string> realizing_maps;  // d for each basis D, as text
  std::vector<std::string> failures;
  bool passed() const;
};

/// Requires a perfect algebra with zero center; throws PreconditionFailed
/// otherwise.
SecondStatementReport verify_second_statement(const ColorAlgebra& a, int n, const Limits& limits = {});

struct LemmaReport {
  std::string check;
  std::size_t checked = 0;
  std::vector<std::string> failures;
  std::vector<std::pair<std::string, std::int64_t>> values;
  bool passed() const { return failures.empty(); }
};

LemmaReport verify_closure(const ColorAlgebra& a, int n, int trials, std::uint64_t seed = 2024,
                           const Limits& limits = {});
LemmaReport verify_inner_ideal(const ColorAlgebra& a, int n, const Limits& limits = {});
LemmaReport verify_centralizer_trivial(const ColorAlgebra& a, int n, const Limits& limits = {});
LemmaReport verify_delta_membership(const ColorAlgebra& a, int n, const Limits& limits = {});
LemmaReport verify_ad_compat(const ColorAlgebra& a);

/// "[[a, b], [c, d]]" with scalars in canonical text form.
std::string matrix_to_string(const Matrix& m);

}  // namespace colorder
