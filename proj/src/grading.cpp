#include "colorder/grading.hpp"

#include <numeric>

#include "colorder/errors.hpp"

namespace colorder {

namespace {

int mod(long a, int n) {
  long r = a % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

}  // namespace

std::string GroupElement::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < residues.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(residues[i]);
  }
  return s + ")";
}

GradingGroup::GradingGroup(std::vector<int> orders) : orders_(std::move(orders)) {
  for (int n : orders_) {
    if (n < 1) throw Error("cyclic order must be positive, got " + std::to_string(n));
    exponent_ = std::lcm(exponent_, n);
  }
}

long GradingGroup::size() const {
  long s = 1;
  for (int n : orders_) s *= n;
  return s;
}

GroupElement GradingGroup::zero() const { return {std::vector<int>(orders_.size(), 0)}; }

GroupElement GradingGroup::element(std::vector<int> residues) const {
  if (residues.size() != orders_.size())
    throw ArityMismatch("expected " + std::to_string(orders_.size()) + " residues, got " +
                        std::to_string(residues.size()));
  for (std::size_t i = 0; i < residues.size(); ++i) residues[i] = mod(residues[i], orders_[i]);
  return {std::move(residues)};
}

GroupElement GradingGroup::generator(std::size_t i) const {
  GroupElement g = zero();
  g.residues.at(i) = orders_[i] == 1 ? 0 : 1;
  return g;
}

void GradingGroup::require_member(const GroupElement& a) const {
  if (a.residues.size() != orders_.size())
    throw ArityMismatch("group element " + a.to_string() + " has wrong arity for rank " +
                        std::to_string(orders_.size()));
}

bool GradingGroup::contains(const GroupElement& a) const {
  if (a.residues.size() != orders_.size()) return false;
  for (std::size_t i = 0; i < orders_.size(); ++i)
    if (a.residues[i] < 0 || a.residues[i] >= orders_[i]) return false;
  return true;
}

GroupElement GradingGroup::add(const GroupElement& a, const GroupElement& b) const {
  require_member(a);
  require_member(b);
  GroupElement out = a;
  for (std::size_t i = 0; i < orders_.size(); ++i)
    out.residues[i] = mod(a.residues[i] + b.residues[i], orders_[i]);
  return out;
}

GroupElement GradingGroup::neg(const GroupElement& a) const {
  require_member(a);
  GroupElement out = a;
  for (std::size_t i = 0; i < orders_.size(); ++i) out.residues[i] = mod(-a.residues[i], orders_[i]);
  return out;
}

std::vector<GroupElement> GradingGroup::enumerate() const {
  std::vector<GroupElement> out;
  out.reserve(size());
  GroupElement cur = zero();
  while (true) {
    out.push_back(cur);
    // Odometer increment, last component fastest.
    std::size_t i = orders_.size();
    while (i > 0) {
      --i;
      if (++cur.residues[i] < orders_[i]) break;
      cur.residues[i] = 0;
      if (i == 0) return out;
    }
    if (orders_.empty()) return out;
  }
}

Bicharacter::Bicharacter(GradingGroup group, std::vector<std::vector<int>> exponents)
    : group_(std::move(group)), exponents_(std::move(exponents)) {
  const std::size_t r = group_.rank();
  const int m = group_.exponent();
  if (exponents_.size() != r)
    throw ArityMismatch("bicharacter table needs " + std::to_string(r) + " rows");
  for (auto& row : exponents_) {
    if (row.size() != r)
      throw ArityMismatch("bicharacter table needs " + std::to_string(r) + " columns");
    for (int& k : row) k = mod(k, m);
  }
  powers_.reserve(m);
  for (int k = 0; k < m; ++k) powers_.push_back(CycloScalar::root(m, k));
}

Bicharacter Bicharacter::trivial(GradingGroup group) {
  const std::size_t r = group.rank();
  return Bicharacter(std::move(group), std::vector<std::vector<int>>(r, std::vector<int>(r, 0)));
}

int Bicharacter::exponent(const GroupElement& a, const GroupElement& c) const {
  const std::size_t r = group_.rank();
  if (a.residues.size() != r || c.residues.size() != r)
    throw ArityMismatch("degree arity does not match the grading group");
  const int m = group_.exponent();
  long acc = 0;
  for (std::size_t i = 0; i < r; ++i) {
    if (a.residues[i] == 0) continue;
    for (std::size_t j = 0; j < r; ++j)
      acc = (acc + static_cast<long>(a.residues[i]) * c.residues[j] % m * exponents_[i][j]) % m;
  }
  return mod(acc, m);
}

const CycloScalar& Bicharacter::eps(const GroupElement& a, const GroupElement& c) const {
  return powers_[exponent(a, c)];
}

BicharacterReport validate_bicharacter(const Bicharacter& b) {
  BicharacterReport report;
  const auto& orders = b.group().orders();
  const auto& k = b.exponents();
  const int m = b.conductor();
  for (std::size_t i = 0; i < orders.size(); ++i) {
    for (std::size_t j = 0; j < orders.size(); ++j) {
      if (i <= j && (k[i][j] + k[j][i]) % m != 0) {
        report.violations.push_back(
            {BicharacterViolation::Kind::Skew, i, j,
             "K[" + std::to_string(i) + "][" + std::to_string(j) + "] + K[" + std::to_string(j) +
                 "][" + std::to_string(i) + "] = " + std::to_string(k[i][j] + k[j][i]) +
                 " is not 0 mod " + std::to_string(m)});
      }
      const long lhs = static_cast<long>(orders[i]) * k[i][j];
      const long rhs = static_cast<long>(orders[j]) * k[i][j];
      if (lhs % m != 0 || rhs % m != 0) {
        report.violations.push_back(
            {BicharacterViolation::Kind::WellDefined, i, j,
             "K[" + std::to_string(i) + "][" + std::to_string(j) + "] = " +
                 std::to_string(k[i][j]) + " is incompatible with orders " +
                 std::to_string(orders[i]) + ", " + std::to_string(orders[j])});
      }
    }
  }
  return report;
}

}  // namespace colorder
