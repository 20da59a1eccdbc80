#include "colorder/linalg.hpp"

#include <algorithm>
#include <string>

#include "colorder/errors.hpp"

namespace colorder {

namespace {

void require_ambient(const Subspace& s, const Subspace& t) {
  if (s.ambient_dim() != t.ambient_dim())
    throw AmbientMismatch("ambient dimensions " + std::to_string(s.ambient_dim()) + " and " +
                          std::to_string(t.ambient_dim()));
  if (s.conductor() != t.conductor()) throw ConductorMismatch("subspaces over different fields");
}

// v -= c * w, entrywise.
void axpy(std::span<CycloScalar> v, const CycloScalar& c, std::span<const CycloScalar> w) {
  const CycloScalar neg = -c;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!w[i].is_zero()) v[i].add_product(neg, w[i]);
  }
}

void scale(std::span<CycloScalar> v, const CycloScalar& c) {
  for (auto& x : v)
    if (!x.is_zero()) x *= c;
}

}  // namespace

Vector zero_vector(std::size_t n, int conductor) { return Vector(n, CycloScalar(conductor)); }

bool is_zero(std::span<const CycloScalar> v) {
  return std::all_of(v.begin(), v.end(), [](const CycloScalar& x) { return x.is_zero(); });
}

Matrix::Matrix(std::size_t rows, std::size_t cols, int conductor)
    : rows_(rows), cols_(cols), conductor_(conductor), data_(rows * cols, CycloScalar(conductor)) {}

Matrix Matrix::identity(std::size_t n, int conductor) {
  Matrix m(n, n, conductor);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = CycloScalar(1, conductor);
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols, int conductor) {
  Matrix m(0, cols, conductor);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

Vector Matrix::row_vector(std::size_t r) const {
  auto s = row(r);
  return Vector(s.begin(), s.end());
}

Vector Matrix::column(std::size_t c) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

void Matrix::append_row(std::span<const CycloScalar> v) {
  if (v.size() != cols_)
    throw DimensionMismatch("row of length " + std::to_string(v.size()) + " for " +
                            std::to_string(cols_) + " columns");
  for (const auto& x : v) {
    if (x.conductor() != conductor_) throw ConductorMismatch("row entry from another field");
  }
  data_.insert(data_.end(), v.begin(), v.end());
  ++rows_;
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  std::swap_ranges(data_.begin() + a * cols_, data_.begin() + (a + 1) * cols_,
                   data_.begin() + b * cols_);
}

Vector Matrix::apply(std::span<const CycloScalar> v) const {
  if (v.size() != cols_) throw DimensionMismatch("matrix-vector size mismatch");
  Vector out = zero_vector(rows_, conductor_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      const auto& a = (*this)(r, c);
      if (!a.is_zero() && !v[c].is_zero()) out[r].add_product(a, v[c]);
    }
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_, conductor_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("matrix product size mismatch");
  Matrix out(a.rows(), b.cols(), a.conductor());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (!b(k, j).is_zero()) out(i, j).add_product(x, b(k, j));
      }
    }
  }
  return out;
}

Matrix rref(Matrix m, std::vector<std::size_t>* pivots) {
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(r, p);
    scale(m.row(r), m(r, c).inverse());
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const CycloScalar f = m(i, c);
      axpy(m.row(i), f, m.row(r));
    }
    piv.push_back(c);
    ++r;
  }
  Matrix out(0, m.cols(), m.conductor());
  for (std::size_t i = 0; i < r; ++i) out.append_row(m.row(i));
  if (pivots) *pivots = std::move(piv);
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m).rows(); }

RowReducer::RowReducer(std::size_t cols, int conductor) : cols_(cols), conductor_(conductor) {}

void RowReducer::reduce(Vector& v) const {
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const auto& c = v[pivots_[i]];
    if (c.is_zero()) continue;
    const CycloScalar f = c;
    axpy(v, f, basis_[i]);
  }
}

bool RowReducer::add_row(Vector v) {
  if (v.size() != cols_) throw DimensionMismatch("row length does not match reducer");
  if (full()) return false;
  reduce(v);
  auto lead = std::find_if(v.begin(), v.end(), [](const CycloScalar& x) { return !x.is_zero(); });
  if (lead == v.end()) return false;
  const std::size_t p = static_cast<std::size_t>(lead - v.begin());
  scale(v, lead->inverse());
  for (auto& row : basis_) {
    if (row[p].is_zero()) continue;
    const CycloScalar f = row[p];
    axpy(row, f, v);
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p);
  const auto idx = pos - pivots_.begin();
  pivots_.insert(pos, p);
  basis_.insert(basis_.begin() + idx, std::move(v));
  return true;
}

Matrix RowReducer::basis() const { return Matrix::from_rows(basis_, cols_, conductor_); }

Subspace::Subspace(std::size_t ambient_dim, int conductor)
    : ambient_(ambient_dim), basis_(0, ambient_dim, conductor) {}

Subspace::Subspace(Matrix reduced, std::vector<std::size_t> pivots, std::size_t ambient)
    : ambient_(ambient), basis_(std::move(reduced)), pivots_(std::move(pivots)) {}

Subspace Subspace::span(const std::vector<Vector>& vectors, std::size_t ambient_dim,
                        int conductor) {
  RowReducer red(ambient_dim, conductor);
  for (const auto& v : vectors) red.add_row(v);
  return Subspace(red.basis(), red.pivots(), ambient_dim);
}

Subspace Subspace::row_space(const Matrix& m) {
  std::vector<std::size_t> piv;
  Matrix r = rref(m, &piv);
  return Subspace(std::move(r), std::move(piv), m.cols());
}

Subspace Subspace::full(std::size_t ambient_dim, int conductor) {
  return row_space(Matrix::identity(ambient_dim, conductor));
}

std::vector<Vector> Subspace::basis_vectors() const {
  std::vector<Vector> out;
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_.row_vector(i));
  return out;
}

std::optional<Vector> Subspace::coordinates(std::span<const CycloScalar> v) const {
  if (v.size() != ambient_) throw AmbientMismatch("vector length does not match ambient space");
  Vector coeffs;
  coeffs.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i) coeffs.push_back(v[pivots_[i]]);
  const Vector back = combine(coeffs);
  for (std::size_t i = 0; i < ambient_; ++i)
    if (!(back[i] == v[i])) return std::nullopt;
  return coeffs;
}

bool Subspace::contains(std::span<const CycloScalar> v) const { return coordinates(v).has_value(); }

Vector Subspace::combine(std::span<const CycloScalar> coeffs) const {
  if (coeffs.size() != dim()) throw DimensionMismatch("coefficient count does not match dim");
  Vector out = zero_vector(ambient_, conductor());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (coeffs[i].is_zero()) continue;
    auto row = basis_.row(i);
    for (std::size_t c = 0; c < ambient_; ++c)
      if (!row[c].is_zero()) out[c].add_product(coeffs[i], row[c]);
  }
  return out;
}

Subspace kernel(const Matrix& m) {
  std::vector<std::size_t> piv;
  const Matrix r = rref(m, &piv);
  const int cond = m.conductor();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : piv) is_pivot[p] = true;
  std::vector<Vector> vecs;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v = zero_vector(m.cols(), cond);
    v[f] = CycloScalar(1, cond);
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -r(i, f);
    vecs.push_back(std::move(v));
  }
  return Subspace::span(vecs, m.cols(), cond);
}

std::optional<Vector> solve(const Matrix& m, std::span<const CycloScalar> b) {
  if (b.size() != m.rows()) throw DimensionMismatch("right-hand side length does not match rows");
  Matrix aug(m.rows(), m.cols() + 1, m.conductor());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  std::vector<std::size_t> piv;
  const Matrix red = rref(std::move(aug), &piv);
  if (!piv.empty() && piv.back() == m.cols()) return std::nullopt;
  Vector x = zero_vector(m.cols(), m.conductor());
  for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = red(i, m.cols());
  return x;
}

Subspace subspace_sum(const Subspace& s, const Subspace& t) {
  require_ambient(s, t);
  auto vecs = s.basis_vectors();
  auto more = t.basis_vectors();
  vecs.insert(vecs.end(), more.begin(), more.end());
  return Subspace::span(vecs, s.ambient_dim(), s.conductor());
}

Subspace subspace_intersect(const Subspace& s, const Subspace& t) {
  require_ambient(s, t);
  const std::size_t n = s.ambient_dim();
  const std::size_t k = s.dim();
  const std::size_t l = t.dim();
  const int cond = s.conductor();
  // Columns: basis of s, then negated basis of t. Kernel vectors (a, b)
  // give sum a_i s_i = sum b_j t_j.
  Matrix stacked(n, k + l, cond);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t c = 0; c < n; ++c) stacked(c, i) = s.basis()(i, c);
  for (std::size_t j = 0; j < l; ++j)
    for (std::size_t c = 0; c < n; ++c) stacked(c, k + j) = -t.basis()(j, c);
  const Subspace ker = kernel(stacked);
  std::vector<Vector> vecs;
  for (std::size_t r = 0; r < ker.dim(); ++r) {
    auto row = ker.basis().row(r);
    vecs.push_back(s.combine(row.first(k)));
  }
  return Subspace::span(vecs, n, cond);
}

bool subspace_contains(const Subspace& s, const Subspace& t) {
  require_ambient(s, t);
  for (std::size_t i = 0; i < t.dim(); ++i)
    if (!s.contains(t.basis().row(i))) return false;
  return true;
}

bool subspace_equal(const Subspace& s, const Subspace& t) {
  require_ambient(s, t);
  return s.basis() == t.basis();
}

}  // namespace colorder
