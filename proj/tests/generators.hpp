#pragma once

#include <random>

#include "colorder/algebra.hpp"
#include "colorder/linalg.hpp"
#include "oracles.hpp"

namespace colorder::testing {

/// Random vector whose entries are zero with probability `sparsity`.
inline Vector random_vector(std::mt19937_64& rng, std::size_t n, int m, double sparsity = 0.3) {
  std::bernoulli_distribution zero(sparsity);
  Vector v = zero_vector(n, m);
  for (auto& x : v)
    if (!zero(rng)) x = random_scalar(rng, m);
  return v;
}

/// Span of k random vectors, some of them forced to be combinations of the
/// others so that rank deficits actually occur.
inline Subspace random_subspace(std::mt19937_64& rng, std::size_t n, int m) {
  std::uniform_int_distribution<std::size_t> count(0, n + 1);
  std::bernoulli_distribution dependent(0.3);
  const std::size_t k = count(rng);
  std::vector<Vector> vs;
  for (std::size_t i = 0; i < k; ++i) {
    if (!vs.empty() && dependent(rng)) {
      Vector v = zero_vector(n, m);
      for (const auto& w : vs) {
        const auto c = random_scalar(rng, m);
        for (std::size_t j = 0; j < n; ++j) v[j] += c * w[j];
      }
      vs.push_back(std::move(v));
    } else {
      vs.push_back(random_vector(rng, n, m));
    }
  }
  return Subspace::span(vs, n, m);
}

inline Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int m) {
  Matrix a(rows, cols, m);
  for (std::size_t r = 0; r < rows; ++r) {
    const auto v = random_vector(rng, cols, m, 0.4);
    for (std::size_t c = 0; c < cols; ++c) a(r, c) = v[c];
  }
  return a;
}

}  // namespace colorder::testing

namespace colorder::testing {

/// Copy of a with the single structure constant c[i][j][k] replaced.
inline ColorAlgebra with_constant(const ColorAlgebra& a, std::size_t i, std::size_t j,
                                  std::size_t k, const CycloScalar& value) {
  const std::size_t d = a.dim();
  std::vector<Vector> products;
  for (std::size_t p = 0; p < d; ++p)
    for (std::size_t q = 0; q < d; ++q) products.push_back(a.product(p, q));
  products[i * d + j][k] = value;
  return ColorAlgebra(a.bicharacter(), a.basis(), std::move(products));
}

/// Random homogeneous vector of the given degree (zero if the component is
/// empty).
inline Vector random_homogeneous(std::mt19937_64& rng, const ColorAlgebra& a,
                                 const GroupElement& degree) {
  Vector v = a.zero_vector();
  for (auto i : a.indices_of_degree(degree)) v[i] = random_scalar(rng, a.conductor());
  return v;
}

inline Vector random_element(std::mt19937_64& rng, const ColorAlgebra& a) {
  Vector v = a.zero_vector();
  for (auto& x : v) x = random_scalar(rng, a.conductor());
  return v;
}

}  // namespace colorder::testing
