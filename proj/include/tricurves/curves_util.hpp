#pragma once
// Constructions of explicit curves: primitive (m,n) torus geodesics.

#include <boost/rational.hpp>
#include <numeric>

#include "tricurves/surface.hpp"

namespace tricurves {

// The primitive torus curve of homology class m[a1] + n[b1], realized as the
// straight line of direction (m,n) on the unit square (bottom/top edge = a1
// oriented +x, left/right = b1 oriented +y), started off the vertex.
// Crossing the a1 circle moving +y is sign +1; crossing b1 moving +x is -1.
inline Curve torus_curve(const Surface& s, long long m, long long n) {
  if (s.genus() != 1) throw invalid_input("torus_curve needs a genus-1 surface");
  if (m == 0 && n == 0) throw invalid_input("torus_curve(0,0)");
  if (std::gcd(std::abs(m), std::abs(n)) != 1)
    throw invalid_input("torus_curve: class not primitive");
  int a1 = s.edge_index("a1"), b1 = s.edge_index("b1");
  if (m == 0) return Curve{{{a1, n > 0 ? +1 : -1, 0}}};
  if (n == 0) return Curve{{{b1, m > 0 ? -1 : +1, 0}}};
  using rat = boost::rational<long long>;
  rat ex(1, 2), ey(1, 2 * std::abs(m) + 3);
  struct Ev {
    rat t;
    int edge, sign;
    rat pos;  // position along the edge
  };
  std::vector<Ev> evs;
  auto mod1 = [](rat v) {
    long long f = v.numerator() >= 0 ? v.numerator() / v.denominator()
                                     : -((-v.numerator() + v.denominator() - 1) /
                                         v.denominator());
    return v - f;
  };
  // vertical lines (b1): x(t) = m t + ex integer
  for (long long k = (m > 0 ? 1 : 0);; k += (m > 0 ? 1 : -1)) {
    rat t = (rat(k) - ex) / m;
    if (!(t > 0 && t < 1)) break;
    evs.push_back({t, b1, m > 0 ? -1 : +1, mod1(rat(n) * t + ey)});
  }
  // horizontal lines (a1): y(t) = n t + ey integer
  for (long long k = (n > 0 ? 1 : 0);; k += (n > 0 ? 1 : -1)) {
    rat t = (rat(k) - ey) / n;
    if (!(t > 0 && t < 1)) break;
    evs.push_back({t, a1, n > 0 ? +1 : -1, mod1(rat(m) * t + ex)});
  }
  std::sort(evs.begin(), evs.end(), [](const Ev& a, const Ev& b) {
    return a.t < b.t;
  });
  for (size_t i = 1; i < evs.size(); i++)
    if (evs[i].t == evs[i - 1].t)
      throw std::logic_error("torus_curve: coincident events");
  // slots: rank of position along each edge
  Curve c;
  c.xs.resize(evs.size());
  for (int e : {a1, b1}) {
    std::vector<int> idx;
    for (int i = 0; i < (int)evs.size(); i++)
      if (evs[i].edge == e) idx.push_back(i);
    std::sort(idx.begin(), idx.end(),
              [&](int i, int j) { return evs[i].pos < evs[j].pos; });
    for (int r = 0; r < (int)idx.size(); r++)
      c.xs[idx[r]] = {e, evs[idx[r]].sign, r};
  }
  return c;
}

}  // namespace tricurves
