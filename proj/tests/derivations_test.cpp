#include <doctest.h>

#include <random>

#include "colorder/catalog.hpp"
#include "colorder/derivations.hpp"
#include "colorder/errors.hpp"
#include "generators.hpp"

using namespace colorder;
using namespace colorder::testing;

namespace {

struct Expected {
  ColorAlgebra a;
  std::size_t inner;
  std::size_t nder[3];  // n = 2, 3, 4
};

// Independently obtained with oracle_nder_dim (floating point residual
// nullity); the exact solver must reproduce them.
std::vector<Expected> expected_dims() {
  return {
      {catalog::sl2(), 3, {3, 3, 3}},      {catalog::heis3(), 2, {6, 9, 9}},
      {catalog::aff2(), 2, {2, 2, 2}},     {catalog::abelian(2), 0, {4, 4, 4}},
      {catalog::color_sl2(), 3, {3, 3, 3}}, {catalog::osp12(), 5, {5, 5, 5}},
  };
}

GradedMap random_block_map(std::mt19937_64& rng, const ColorAlgebra& a, const GroupElement& g) {
  Matrix m(a.dim(), a.dim(), a.conductor());
  std::bernoulli_distribution zero(0.3);
  for (const auto& [k, j] : block_support(a, g))
    if (!zero(rng)) m(k, j) = random_scalar(rng, a.conductor());
  return GradedMap(a, g, std::move(m));
}

std::vector<std::size_t> block_dims(const DerivationSpace& s) {
  std::vector<std::size_t> out;
  for (const auto& b : s.blocks()) out.push_back(b.space.dim());
  return out;
}

}  // namespace

TEST_CASE("ad examples") {
  const auto sl2 = catalog::sl2();
  const auto adh = ad(sl2, sl2.basis_vector(1));
  Matrix diag(3, 3, 1);
  diag(0, 0) = CycloScalar(2, 1);
  diag(2, 2) = CycloScalar(-2, 1);
  CHECK(adh.matrix() == diag);
  CHECK(adh.degree() == sl2.group().zero());

  const auto heis = catalog::heis3();
  CHECK(ad(heis, heis.basis_vector(2)).is_zero());

  const auto c = catalog::color_sl2();
  const auto adx = ad(c, c.basis_vector(0));
  CHECK(adx.degree() == c.degree(0));
  using P = std::pair<std::size_t, std::size_t>;
  CHECK(block_support(c, c.degree(0)) == std::vector<P>{{1, 2}, {2, 1}});
  Vector mixed = c.basis_vector(0);
  mixed[1] = c.one();
  CHECK_THROWS_AS(ad(c, mixed), NonHomogeneous);

  Matrix off(3, 3, 2);
  off(0, 0) = c.one();
  CHECK_THROWS_AS(GradedMap(c, c.degree(0), off), NonHomogeneous);
}

TEST_CASE("derivation dimensions match the oracle values") {
  for (const auto& e : expected_dims()) {
    CAPTURE(e.a.dim());
    CHECK(inner_derivation_space(e.a).total_dim() == e.inner);
    for (int n = 2; n <= 4; ++n) CHECK(n_derivation_space(e.a, n).total_dim() == e.nder[n - 2]);
  }
  const auto c = catalog::color_sl2();
  CHECK(block_dims(n_derivation_space(c, 3)) == std::vector<std::size_t>{0, 1, 1, 1});
  CHECK(block_dims(n_derivation_space(catalog::osp12(), 3)) == std::vector<std::size_t>{3, 2});
  const auto p = color_pauli3();
  CHECK(block_dims(n_derivation_space(p, 2)) == std::vector<std::size_t>{0, 1, 1, 1, 1, 1, 1, 1, 1});
  CHECK(same_space(n_derivation_space(p, 3), n_derivation_space(p, 2)));
}

TEST_CASE("exact dimensions agree with the floating-point oracle") {
  std::vector<ColorAlgebra> algebras = {catalog::sl2(), catalog::heis3(), catalog::color_sl2(),
                                        catalog::osp12(), catalog::aff2()};
  for (const auto& a : algebras)
    for (int n : {2, 3}) CHECK(n_derivation_space(a, n).total_dim() == oracle_nder_dim(a, n));
  const auto p = color_pauli3();
  CHECK(n_derivation_space(p, 2).total_dim() == oracle_nder_dim(p, 2));
}

TEST_CASE("n-derivation spaces") {
  const auto sl2 = catalog::sl2();
  CHECK(same_space(n_derivation_space(sl2, 3), n_derivation_space(sl2, 2)));
  CHECK(same_space(n_derivation_space(sl2, 2), inner_derivation_space(sl2)));
  CHECK_THROWS_AS(n_derivation_space(sl2, 1), BadArity);
  CHECK_THROWS_AS(n_derivation_space(sl2, 5), LimitExceeded);
  CHECK(n_derivation_space(sl2, 5, Limits{5}).total_dim() == 3);

  // Abelian algebras: every endomorphism.
  CHECK(n_derivation_space(catalog::abelian(2), 3).total_dim() == 4);
  CHECK(inner_derivation_space(catalog::abelian(2)).total_dim() == 0);
}

TEST_CASE("is_n_derivation examples") {
  const auto sl2 = catalog::sl2();
  CHECK(is_n_derivation(sl2, ad(sl2, sl2.basis_vector(1)), 3));
  CHECK_FALSE(is_n_derivation(sl2, GradedMap::identity(sl2), 3));
  const auto ab = catalog::abelian(2);
  CHECK(is_n_derivation(ab, GradedMap::identity(ab), 3));
  CHECK_THROWS_AS(is_n_derivation(sl2, GradedMap::identity(sl2), 1), BadArity);
}

TEST_CASE("kernel maps pass the brute-force check and membership agrees") {
  std::vector<ColorAlgebra> algebras;
  for (const auto& n : catalog::names()) algebras.push_back(catalog::by_name(n));
  std::mt19937_64 rng(606);
  for (const auto& a : algebras) {
    for (int n : {2, 3, 4}) {
      const auto space = n_derivation_space(a, n);
      for (const auto& m : space.basis_maps()) CHECK(is_n_derivation(a, m, n));
      const auto degrees = a.group().enumerate();
      std::uniform_int_distribution<std::size_t> pick(0, degrees.size() - 1);
      for (int t = 0; t < 10; ++t) {
        const auto m = random_block_map(rng, a, degrees[pick(rng)]);
        CHECK(space.contains(m) == is_n_derivation(a, m, n));
      }
    }
  }
}

TEST_CASE("map_bracket examples") {
  const auto sl2 = catalog::sl2();
  const auto ade = ad(sl2, sl2.basis_vector(0));
  const auto adf = ad(sl2, sl2.basis_vector(2));
  CHECK(map_bracket(ade, adf) == ad(sl2, sl2.basis_vector(1)));
  CHECK(map_bracket(ade, ade).is_zero());
  CHECK(map_bracket(ade, GradedMap::zero(sl2, sl2.group().zero())).is_zero());

  const auto other = catalog::abelian(3);
  CHECK_THROWS_AS(map_bracket(ade, GradedMap::identity(other)), AlgebraMismatch);
}

TEST_CASE("ad is a homomorphism") {
  std::vector<ColorAlgebra> algebras = {catalog::sl2(), catalog::heis3(), catalog::color_sl2(),
                                        catalog::osp12(), color_pauli3()};
  for (const auto& a : algebras) {
    for (std::size_t i = 0; i < a.dim(); ++i) {
      for (std::size_t j = 0; j < a.dim(); ++j) {
        const auto lhs = map_bracket(ad(a, a.basis_vector(i)), ad(a, a.basis_vector(j)));
        const auto deg = a.group().add(a.degree(i), a.degree(j));
        CHECK(lhs == ad(a, a.product(i, j), deg));
      }
    }
    if (is_perfect(a) && center(a).dim() == 0) CHECK(inner_derivation_space(a).total_dim() == a.dim());
  }
}

TEST_CASE("delta") {
  const auto sl2 = catalog::sl2();
  const auto adx = ad(sl2, sl2.basis_vector(0));
  CHECK(delta(sl2, adx, 3) == adx);
  const auto zero = GradedMap::zero(sl2, sl2.group().zero());
  CHECK(delta(sl2, zero, 3).is_zero());

  std::vector<ColorAlgebra> algebras = {sl2, catalog::color_sl2(), catalog::osp12(), color_pauli3()};
  for (const auto& a : algebras)
    for (int n : {3, 4}) {
      if (a.dim() > 5 && n == 4) continue;
      for (const auto& d : n_derivation_space(a, n).basis_maps()) CHECK(delta(a, d, n) == d);
    }

  const auto heis = catalog::heis3();
  CHECK_THROWS_AS(delta(heis, GradedMap::identity(heis), 3), PreconditionFailed);
}

TEST_CASE("derivation_color_algebra") {
  const auto sl2 = catalog::sl2();
  const auto der = derivation_color_algebra(sl2, n_derivation_space(sl2, 2));
  CHECK(der.dim() == 3);
  CHECK(check_color_axioms(der).ok());
  CHECK(is_perfect(der));
  CHECK(center(der).dim() == 0);
  CHECK(der.name(0) == "D0");

  const auto ab = catalog::abelian(1);
  const auto dab = derivation_color_algebra(ab, n_derivation_space(ab, 2));
  CHECK(dab.dim() == 1);
  CHECK(is_zero(dab.product(0, 0)));

  for (const auto& a : {catalog::color_sl2(), catalog::osp12()}) {
    const auto d = derivation_color_algebra(a, n_derivation_space(a, 2));
    CHECK(check_color_axioms(d).ok());
  }

  // span{ad e, ad f} is not closed: [ad e, ad f] = ad h.
  const auto inner = inner_derivation_space(sl2);
  const auto& block = inner.blocks()[0];
  const std::vector<Vector> gens = {
      inner.block_coordinates(block, ad(sl2, sl2.basis_vector(0))),
      inner.block_coordinates(block, ad(sl2, sl2.basis_vector(2)))};
  DerivationBlock open{block.degree, block.support,
                       Subspace::span(gens, block.support.size(), 1)};
  const DerivationSpace not_closed(sl2, 2, {open});
  CHECK_THROWS_AS(derivation_color_algebra(sl2, not_closed), NotClosed);
}

TEST_CASE("first statement reports") {
  for (const auto& a : {catalog::sl2(), catalog::color_sl2()}) {
    const auto rep = verify_nder_equals_der(a, 3);
    CHECK(rep.preconditions_hold);
    CHECK(rep.equal);
    CHECK(rep.der_dim == 3);
    CHECK(rep.nder_dim == 3);
    CHECK(rep.delta_fixed_point == std::optional<bool>(true));
    for (const auto& pd : rep.per_degree) CHECK(pd.left_dim == pd.right_dim);
    CHECK(rep.passed());
  }
  const auto heis = verify_nder_equals_der(catalog::heis3(), 3);
  CHECK_FALSE(heis.perfect);
  CHECK(heis.center_dim == 1);
  CHECK_FALSE(heis.preconditions_hold);
  CHECK_FALSE(heis.delta_fixed_point.has_value());
  CHECK(heis.der_dim == 6);
  CHECK(heis.nder_dim == 9);
  CHECK_FALSE(heis.equal);
}

TEST_CASE("second statement reports") {
  for (const auto& a : {catalog::sl2(), catalog::color_sl2()}) {
    const auto rep = verify_second_statement(a, 3);
    CHECK(rep.equal);
    CHECK(rep.nder_dim == 3);
    CHECK(rep.inner_dim == 3);
    CHECK(rep.part_one_equal);
    CHECK(rep.derivation_algebra_axioms_ok);
    CHECK(rep.preserves_inner);
    CHECK(rep.realized_by_derivation);
    CHECK(rep.realizing_maps.size() == 3);
    CHECK(rep.failures.empty());
    CHECK(rep.passed());
  }
  CHECK_THROWS_AS(verify_second_statement(catalog::heis3(), 3), PreconditionFailed);
}

TEST_CASE("lemma reports") {
  CHECK(verify_closure(catalog::sl2(), 3, 100).passed());
  CHECK(verify_closure(catalog::abelian(2), 3, 10).passed());
  CHECK(verify_closure(catalog::color_sl2(), 4, 100).passed());
  CHECK(verify_closure(catalog::heis3(), 3, 20).passed());
  CHECK(verify_closure(catalog::sl2(), 3, 7).checked == 7);

  CHECK(verify_inner_ideal(catalog::sl2(), 3).passed());
  CHECK(verify_inner_ideal(catalog::color_sl2(), 3).passed());
  CHECK_THROWS_AS(verify_inner_ideal(catalog::aff2(), 3), PreconditionFailed);

  const auto cent = verify_centralizer_trivial(catalog::color_sl2(), 4);
  CHECK(cent.passed());
  REQUIRE(cent.values.size() == 1);
  CHECK(cent.values[0] == std::pair<std::string, std::int64_t>{"centralizer_dim", 0});
  CHECK(verify_centralizer_trivial(catalog::sl2(), 3).passed());
  CHECK_THROWS_AS(verify_centralizer_trivial(catalog::abelian(2), 3), PreconditionFailed);

  CHECK(verify_delta_membership(catalog::sl2(), 3).passed());
  CHECK(verify_delta_membership(catalog::sl2(), 4).passed());
  CHECK_THROWS_AS(verify_delta_membership(catalog::heis3(), 3), PreconditionFailed);
  CHECK_THROWS_AS(verify_delta_membership(catalog::sl2(), 2), BadArity);

  CHECK(verify_ad_compat(catalog::sl2()).passed());
  CHECK(verify_ad_compat(catalog::abelian(3)).passed());
  CHECK(verify_ad_compat(catalog::color_sl2()).passed());

  const auto p = color_pauli3();
  CHECK(verify_inner_ideal(p, 3).passed());
  CHECK(verify_centralizer_trivial(p, 3).passed());
  CHECK(verify_delta_membership(p, 3).passed());
  CHECK(verify_ad_compat(p).passed());
}

TEST_CASE("closure is deterministic for a fixed seed") {
  const auto a = verify_closure(catalog::color_sl2(), 3, 20, 99);
  const auto b = verify_closure(catalog::color_sl2(), 3, 20, 99);
  CHECK(a.checked == b.checked);
  CHECK(a.failures == b.failures);
}

TEST_CASE("inner derivations lie in every nDer") {
  std::mt19937_64 rng(707);
  std::vector<ColorAlgebra> algebras = {catalog::sl2(),   catalog::heis3(), catalog::aff2(),
                                        catalog::color_sl2(), catalog::osp12(), color_pauli3()};
  for (const auto& a : algebras) {
    for (int n : {2, 3}) {
      const auto space = n_derivation_space(a, n);
      for (const auto& g : a.group().enumerate()) {
        const auto m = ad(a, random_homogeneous(rng, a, g), g);
        CHECK(space.contains(m));
        CHECK(is_n_derivation(a, m, n));
      }
    }
  }
}
