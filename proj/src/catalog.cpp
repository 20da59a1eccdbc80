#include "colorder/catalog.hpp"

#include <charconv>

#include "colorder/errors.hpp"

namespace colorder::catalog {

namespace {

Bicharacter trivial_grading() { return Bicharacter::trivial(GradingGroup{}); }

std::vector<BasisElement> ungraded(std::initializer_list<const char*> names) {
  std::vector<BasisElement> out;
  for (const char* n : names) out.push_back({n, GroupElement{}});
  return out;
}

}  // namespace

ColorAlgebra sl2() {
  enum { E, H, F };
  AlgebraBuilder b(trivial_grading(), ungraded({"e", "h", "f"}));
  b.bracket(H, E, {{E, 2}});
  b.bracket(H, F, {{F, -2}});
  b.bracket(E, F, {{H, 1}});
  return b.build();
}

ColorAlgebra heis3() {
  AlgebraBuilder b(trivial_grading(), ungraded({"e1", "e2", "e3"}));
  b.bracket(0, 1, {{2, 1}});
  return b.build();
}

ColorAlgebra aff2() {
  AlgebraBuilder b(trivial_grading(), ungraded({"e1", "e2"}));
  b.bracket(0, 1, {{1, 1}});
  return b.build();
}

ColorAlgebra abelian(std::size_t d) {
  std::vector<BasisElement> basis;
  for (std::size_t i = 1; i <= d; ++i) basis.push_back({"a" + std::to_string(i), GroupElement{}});
  return AlgebraBuilder(trivial_grading(), std::move(basis)).build();
}

ColorAlgebra color_sl2() {
  GradingGroup g({2, 2});
  Bicharacter eps(g, {{0, 1}, {1, 0}});
  enum { X, Y, Z };
  AlgebraBuilder b(eps, {{"x", g.element({1, 0})}, {"y", g.element({0, 1})}, {"z", g.element({1, 1})}});
  b.bracket(X, Y, {{Z, 1}});
  b.bracket(Y, Z, {{X, 1}});
  b.bracket(Z, X, {{Y, 1}});
  return b.build();
}

ColorAlgebra osp12() {
  GradingGroup g({2});
  Bicharacter eps(g, {{1}});
  const auto even = g.element({0});
  const auto odd = g.element({1});
  enum { E, H, F, X, Y };
  AlgebraBuilder b(eps, {{"e", even}, {"h", even}, {"f", even}, {"x", odd}, {"y", odd}});
  b.bracket(H, E, {{E, 2}});
  b.bracket(H, F, {{F, -2}});
  b.bracket(E, F, {{H, 1}});
  b.bracket(H, X, {{X, 1}});
  b.bracket(H, Y, {{Y, -1}});
  b.bracket(E, Y, {{X, -1}});
  b.bracket(F, X, {{Y, -1}});
  b.bracket(X, X, {{E, 2}});
  b.bracket(Y, Y, {{F, -2}});
  b.bracket(X, Y, {{H, 1}});
  return b.build();
}

std::vector<std::string> names() { return {"sl2", "heis3", "aff2", "abelian(2)", "colorSl2", "osp12"}; }

ColorAlgebra by_name(std::string_view name) {
  if (name == "sl2") return sl2();
  if (name == "heis3") return heis3();
  if (name == "aff2") return aff2();
  if (name == "colorSl2") return color_sl2();
  if (name == "osp12") return osp12();
  if (name == "abelian") return abelian(2);
  if (name.starts_with("abelian(") && name.ends_with(")")) {
    const auto digits = name.substr(8, name.size() - 9);
    std::size_t d = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), d);
    if (ec == std::errc{} && ptr == digits.data() + digits.size() && !digits.empty())
      return abelian(d);
  }
  throw Error("unknown catalog algebra '" + std::string(name) + "'");
}

}  // namespace colorder::catalog
