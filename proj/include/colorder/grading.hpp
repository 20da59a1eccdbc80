#pragma once

#include <compare>
#include <string>
#include <vector>

#include "colorder/scalars.hpp"

namespace colorder {

/// Degree in Z_{n1} x ... x Z_{nr}; residues are always reduced.
struct GroupElement {
  std::vector<int> residues;

  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
  std::string to_string() const;
};

/// Finite abelian group Z_{n1} x ... x Z_{nr}. The empty product is the
/// trivial group.
class GradingGroup {
 public:
  GradingGroup() = default;
  explicit GradingGroup(std::vector<int> orders);

  const std::vector<int>& orders() const { return orders_; }
  std::size_t rank() const { return orders_.size(); }
  /// lcm of the cyclic orders; 1 for the trivial group.
  int exponent() const { return exponent_; }
  long size() const;

  GroupElement zero() const;
  /// Reduces arbitrary integers into canonical residues.
  GroupElement element(std::vector<int> residues) const;
  GroupElement generator(std::size_t i) const;

  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement neg(const GroupElement& a) const;
  GroupElement sub(const GroupElement& a, const GroupElement& b) const { return add(a, neg(b)); }

  /// All elements, lexicographic in residues.
  std::vector<GroupElement> enumerate() const;

  bool contains(const GroupElement& a) const;

  friend bool operator==(const GradingGroup&, const GradingGroup&) = default;

 private:
  void require_member(const GroupElement& a) const;

  std::vector<int> orders_;
  int exponent_ = 1;
};

/// Bicharacter given by its generator table: eps(g_i, g_j) = zeta_m^K[i][j]
/// with m the group exponent, extended biadditively.
class Bicharacter {
 public:
  Bicharacter() : Bicharacter(GradingGroup{}, {}) {}
  Bicharacter(GradingGroup group, std::vector<std::vector<int>> exponents);

  static Bicharacter trivial(GradingGroup group);

  const GradingGroup& group() const { return group_; }
  const std::vector<std::vector<int>>& exponents() const { return exponents_; }
  int conductor() const { return group_.exponent(); }

  /// Exponent k in [0, m) with eps(a, c) = zeta_m^k.
  int exponent(const GroupElement& a, const GroupElement& c) const;
  const CycloScalar& eps(const GroupElement& a, const GroupElement& c) const;

  friend bool operator==(const Bicharacter& a, const Bicharacter& b) {
    return a.group_ == b.group_ && a.exponents_ == b.exponents_;
  }

 private:
  GradingGroup group_;
  std::vector<std::vector<int>> exponents_;
  std::vector<CycloScalar> powers_;
};

struct BicharacterViolation {
  enum class Kind { Skew, WellDefined };
  Kind kind;
  std::size_t i;
  std::size_t j;
  std::string message;
};

struct BicharacterReport {
  std::vector<BicharacterViolation> violations;
  bool valid() const { return violations.empty(); }
};

/// Checks skewness K[i][j] + K[j][i] = 0 and compatibility of every entry
/// with the orders of both generators, modulo the exponent.
BicharacterReport validate_bicharacter(const Bicharacter& b);

}  // namespace colorder
