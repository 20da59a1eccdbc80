#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "colorder/algebra.hpp"

namespace colorder::catalog {

/// sl(2) on basis (e, h, f): [h,e]=2e, [h,f]=-2f, [e,f]=h. Trivial grading.
ColorAlgebra sl2();
/// Heisenberg algebra: [e1,e2]=e3.
ColorAlgebra heis3();
/// Two-dimensional non-abelian Lie algebra: [e1,e2]=e2.
ColorAlgebra aff2();
ColorAlgebra abelian(std::size_t d);
/// Z2 x Z2-graded color sl(2): x, y, z of degrees (1,0), (0,1), (1,1) with
/// [x,y]=z, [y,z]=x, [z,x]=y and eps = -1 between distinct generators.
ColorAlgebra color_sl2();
/// Orthosymplectic superalgebra osp(1|2): even e, h, f and odd x, y.
ColorAlgebra osp12();

/// Names accepted by by_name(): sl2, heis3, aff2, abelian(d), colorSl2, osp12.
/// `abelian` alone means abelian(2).
std::vector<std::string> names();
ColorAlgebra by_name(std::string_view name);

}  // namespace colorder::catalog
