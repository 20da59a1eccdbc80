#include "colorder/algebra.hpp"

#include <algorithm>

#include "colorder/errors.hpp"

namespace colorder {

namespace {

std::string index_tuple(std::initializer_list<std::size_t> idx) {
  std::string s = "(";
  bool first = true;
  for (auto i : idx) {
    if (!first) s += ",";
    first = false;
    s += std::to_string(i);
  }
  return s + ")";
}

void add_scaled(Vector& acc, const CycloScalar& c, std::span<const CycloScalar> v) {
  for (std::size_t k = 0; k < acc.size(); ++k)
    if (!v[k].is_zero()) acc[k].add_product(c, v[k]);
}

}  // namespace

ColorAlgebra::ColorAlgebra(Bicharacter bichar, std::vector<BasisElement> basis,
                           std::vector<Vector> products)
    : bichar_(std::move(bichar)), basis_(std::move(basis)), products_(std::move(products)) {
  const std::size_t d = basis_.size();
  if (products_.size() != d * d)
    throw DimensionMismatch("expected " + std::to_string(d * d) + " products, got " +
                            std::to_string(products_.size()));
  for (const auto& b : basis_) {
    if (!group().contains(b.degree))
      throw ArityMismatch("basis element '" + b.name + "' has degree " + b.degree.to_string() +
                          " outside the grading group");
  }
  for (const auto& p : products_) {
    if (p.size() != d) throw DimensionMismatch("product vector has wrong length");
    for (const auto& x : p)
      if (x.conductor() != conductor()) throw ConductorMismatch("structure constant field");
  }
}

std::optional<std::size_t> ColorAlgebra::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i].name == name) return i;
  return std::nullopt;
}

Vector ColorAlgebra::basis_vector(std::size_t i) const {
  Vector v = zero_vector();
  v.at(i) = one();
  return v;
}

std::vector<std::size_t> ColorAlgebra::indices_of_degree(const GroupElement& g) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < dim(); ++i)
    if (basis_[i].degree == g) out.push_back(i);
  return out;
}

std::optional<GroupElement> ColorAlgebra::degree_of(std::span<const CycloScalar> v) const {
  if (v.size() != dim()) throw DimensionMismatch("vector length does not match algebra");
  std::optional<GroupElement> deg;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (v[i].is_zero()) continue;
    if (!deg) {
      deg = basis_[i].degree;
    } else if (*deg != basis_[i].degree) {
      throw NonHomogeneous("vector has components in degrees " + deg->to_string() + " and " +
                           basis_[i].degree.to_string());
    }
  }
  return deg;
}

AlgebraBuilder::AlgebraBuilder(Bicharacter bichar, std::vector<BasisElement> basis)
    : bichar_(std::move(bichar)), basis_(std::move(basis)), dim_(basis_.size()) {
  products_.assign(dim_ * dim_, colorder::zero_vector(dim_, bichar_.conductor()));
}

AlgebraBuilder& AlgebraBuilder::set_product(std::size_t i, std::size_t j, Vector v) {
  if (i >= dim_ || j >= dim_ || v.size() != dim_)
    throw DimensionMismatch("bracket index or vector out of range");
  products_[i * dim_ + j] = std::move(v);
  return *this;
}

AlgebraBuilder& AlgebraBuilder::bracket(
    std::size_t i, std::size_t j, const std::vector<std::pair<std::size_t, CycloScalar>>& result,
    bool fill_partner) {
  Vector v = colorder::zero_vector(dim_, bichar_.conductor());
  for (const auto& [k, c] : result) v.at(k) = c;
  if (fill_partner && i != j) {
    const CycloScalar f = -bichar_.eps(basis_.at(j).degree, basis_.at(i).degree);
    Vector w = v;
    for (auto& x : w) x *= f;
    set_product(j, i, std::move(w));
  }
  return set_product(i, j, std::move(v));
}

AlgebraBuilder& AlgebraBuilder::bracket(std::size_t i, std::size_t j,
                                        const std::vector<std::pair<std::size_t, long>>& result,
                                        bool fill_partner) {
  std::vector<std::pair<std::size_t, CycloScalar>> r;
  for (const auto& [k, c] : result) r.emplace_back(k, CycloScalar(c, bichar_.conductor()));
  return bracket(i, j, r, fill_partner);
}

ColorAlgebra AlgebraBuilder::build() const { return ColorAlgebra(bichar_, basis_, products_); }

std::size_t AxiomReport::count(AxiomViolation::Kind k) const {
  return static_cast<std::size_t>(std::count_if(violations.begin(), violations.end(),
                                                [k](const auto& v) { return v.kind == k; }));
}

const char* to_string(AxiomViolation::Kind k) {
  switch (k) {
    case AxiomViolation::Kind::GradingSupport: return "grading_support";
    case AxiomViolation::Kind::Antisymmetry: return "antisymmetry";
    case AxiomViolation::Kind::Jacobi: return "jacobi";
  }
  return "unknown";
}

AxiomReport check_color_axioms(const ColorAlgebra& a) {
  using Kind = AxiomViolation::Kind;
  AxiomReport report;
  const std::size_t d = a.dim();
  const auto& g = a.group();

  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const auto target = g.add(a.degree(i), a.degree(j));
      for (std::size_t k = 0; k < d; ++k) {
        if (!a.constant(i, j, k).is_zero() && a.degree(k) != target) {
          report.violations.push_back(
              {Kind::GradingSupport, {i, j, k},
               "c" + index_tuple({i, j, k}) + " = " + a.constant(i, j, k).to_string() +
                   " but deg " + a.name(k) + " != deg " + a.name(i) + " + deg " + a.name(j)});
        }
      }
    }
  }

  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i; j < d; ++j) {
      // [e_i, e_j] + eps(i, j) [e_j, e_i] must vanish.
      const auto& e = a.eps(a.degree(i), a.degree(j));
      Vector sum = a.product(i, j);
      add_scaled(sum, e, a.product(j, i));
      if (!is_zero(sum)) {
        report.violations.push_back({Kind::Antisymmetry, {i, j},
                                     "[" + a.name(i) + "," + a.name(j) + "] != -eps [" +
                                         a.name(j) + "," + a.name(i) + "]"});
      }
    }
  }

  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t k = 0; k < d; ++k) {
        const auto& x = a.degree(i);
        const auto& y = a.degree(j);
        const auto& z = a.degree(k);
        const Vector ei = a.basis_vector(i);
        const Vector ej = a.basis_vector(j);
        const Vector ek = a.basis_vector(k);
        Vector sum = a.zero_vector();
        add_scaled(sum, a.eps(z, x), bracket(a, ei, a.product(j, k)));
        add_scaled(sum, a.eps(x, y), bracket(a, ej, a.product(k, i)));
        add_scaled(sum, a.eps(y, z), bracket(a, ek, a.product(i, j)));
        if (!is_zero(sum)) {
          report.violations.push_back({Kind::Jacobi, {i, j, k},
                                       "eps-Jacobi fails on (" + a.name(i) + "," + a.name(j) +
                                           "," + a.name(k) + ")"});
        }
      }
    }
  }
  return report;
}

Vector bracket(const ColorAlgebra& a, std::span<const CycloScalar> u,
               std::span<const CycloScalar> v) {
  const std::size_t d = a.dim();
  if (u.size() != d || v.size() != d)
    throw DimensionMismatch("bracket operand length does not match algebra dimension");
  Vector out = a.zero_vector();
  for (std::size_t i = 0; i < d; ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (v[j].is_zero()) continue;
      const auto& p = a.product(i, j);
      if (is_zero(p)) continue;
      const CycloScalar c = u[i] * v[j];
      add_scaled(out, c, p);
    }
  }
  return out;
}

Vector left_normed_bracket(const ColorAlgebra& a, std::span<const Vector> xs) {
  if (xs.size() < 2)
    throw TooFewArguments("left-normed bracket needs at least 2 arguments, got " +
                          std::to_string(xs.size()));
  Vector acc = bracket(a, xs[0], xs[1]);
  for (std::size_t i = 2; i < xs.size(); ++i) acc = bracket(a, acc, xs[i]);
  return acc;
}

Subspace derived_subalgebra(const ColorAlgebra& a) {
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) gens.push_back(a.product(i, j));
  return Subspace::span(gens, a.dim(), a.conductor());
}

bool is_perfect(const ColorAlgebra& a) { return derived_subalgebra(a).dim() == a.dim(); }

Subspace centralizer(const ColorAlgebra& a, std::span<const Vector> s) {
  const std::size_t d = a.dim();
  // Row (s, k): coefficient of v_i in the k-th coordinate of [v, s].
  Matrix m(0, d, a.conductor());
  for (const auto& w : s) {
    if (w.size() != d) throw DimensionMismatch("centralizer element has wrong length");
    std::vector<Vector> cols;
    for (std::size_t i = 0; i < d; ++i) cols.push_back(bracket(a, a.basis_vector(i), w));
    for (std::size_t k = 0; k < d; ++k) {
      Vector row;
      row.reserve(d);
      for (std::size_t i = 0; i < d; ++i) row.push_back(cols[i][k]);
      m.append_row(row);
    }
  }
  return kernel(m);
}

Subspace center(const ColorAlgebra& a) {
  std::vector<Vector> basis;
  for (std::size_t j = 0; j < a.dim(); ++j) basis.push_back(a.basis_vector(j));
  return centralizer(a, basis);
}

}  // namespace colorder
