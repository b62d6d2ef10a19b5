#pragma once

#include <string>
#include <vector>

#include "qmono/algebra.hpp"

namespace qmono::fixtures {

// Two loops x, y on one vertex; x.x, y.y, y.x forbidden. Dimension 4.
inline MonomialPresentation two_loops_presentation() {
  MonomialPresentation p;
  p.quiver = Quiver({"v"}, {Arrow{"x", "v", "v"}, Arrow{"y", "v", "v"}});
  p.forbidden = {LengthTwoPath{"x", "x"}, LengthTwoPath{"y", "y"}, LengthTwoPath{"x", "y"}};
  return p;
}
inline AlgebraPtr two_loops() { return MonomialAlgebra::validate(two_loops_presentation()); }

// Four vertices, five arrows, five relations; one perfect and one defect
// component in the relation quiver.
inline MonomialPresentation crossed_cycles_presentation() {
  MonomialPresentation p;
  p.quiver = Quiver({"v1", "v2", "v3", "v4"},
                    {Arrow{"alpha", "v1", "v2"}, Arrow{"beta", "v2", "v1"}, Arrow{"gamma", "v2", "v3"},
                     Arrow{"delta", "v3", "v2"}, Arrow{"xi", "v4", "v3"}});
  p.forbidden = {LengthTwoPath{"alpha", "beta"}, LengthTwoPath{"beta", "alpha"},
                 LengthTwoPath{"gamma", "delta"}, LengthTwoPath{"delta", "gamma"},
                 LengthTwoPath{"xi", "delta"}};
  return p;
}
inline AlgebraPtr crossed_cycles() { return MonomialAlgebra::validate(crossed_cycles_presentation()); }

// k[x]/(x^2): one loop with the square forbidden.
inline AlgebraPtr dual_numbers() {
  MonomialPresentation p;
  p.quiver = Quiver({"v"}, {Arrow{"x", "v", "v"}});
  p.forbidden = {LengthTwoPath{"x", "x"}};
  return MonomialAlgebra::validate(p);
}

// Chain 1 -> 2 -> 3 with the composite forbidden; A.b is projective.
inline AlgebraPtr chain3() {
  MonomialPresentation p;
  p.quiver = Quiver({"w1", "w2", "w3"}, {Arrow{"a", "w1", "w2"}, Arrow{"b", "w2", "w3"}});
  p.forbidden = {LengthTwoPath{"a", "b"}};
  return MonomialAlgebra::validate(p);
}

// Hereditary: no relations at all, every arrow module projective.
inline AlgebraPtr hereditary_chain() {
  MonomialPresentation p;
  p.quiver = Quiver({"w1", "w2", "w3"}, {Arrow{"a", "w1", "w2"}, Arrow{"b", "w2", "w3"}});
  return MonomialAlgebra::validate(p);
}

// Basic n-cycle as a plain quiver: c1 -> c2 -> ... -> cn -> c1.
inline Quiver cycle_quiver(int n) {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;
  for (int i = 1; i <= n; ++i) vertices.push_back("c" + std::to_string(i));
  for (int i = 1; i <= n; ++i) {
    const int next = i == n ? 1 : i + 1;
    arrows.push_back(Arrow{"e" + std::to_string(i), "c" + std::to_string(i), "c" + std::to_string(next)});
  }
  return Quiver(std::move(vertices), std::move(arrows));
}

}  // namespace qmono::fixtures
