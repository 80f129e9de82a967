#include <catch2/catch_amalgamated.hpp>

#include "tricurves/curves_util.hpp"
#include "tricurves/io.hpp"
#include "tricurves/tighten.hpp"

using namespace tricurves;

namespace {
Curve dual(const Surface& s, const std::string& edge, std::int64_t slot = 0) {
  return Curve{{{s.edge_index(edge), +1, slot}}};
}
}  // namespace

TEST_CASE("torus_curve basics") {
  auto s = Surface::standard(1);
  for (auto [m, n] : std::vector<std::pair<long long, long long>>{
           {1, 0}, {0, 1}, {1, 1}, {2, 1}, {1, 2}, {3, 2}, {-2, 3}, {5, -3},
           {-1, -1}, {7, 4}}) {
    auto c = torus_curve(s, m, n);
    INFO("(m,n)=(" << m << "," << n << ")");
    CHECK(validate_curve(s, c).empty());
    CHECK(homology_class(s, c) == std::vector<long long>{m, n});
  }
}

TEST_CASE("wiggle pair straightens") {
  auto s = Surface::standard(1);
  Curve c{{{s.edge_index("b1"), +1, 1}}};
  Curve w{{{s.edge_index("b1"), +1, 0}, {s.edge_index("b1"), -1, 2}}};
  auto r = tighten_pair(s, c, w);
  CHECK(r.resolved);
  CHECK(r.moves == 1);
  CHECK(r.crossings == 0);
  CHECK(r.a.xs.size() == 1);  // untouched up to slot scaling
  CHECK(r.b.xs.size() <= 2);  // wiggle pushed off c
  CHECK(validate_curve(s, r.b).empty());
  CHECK(homology_class(s, r.b) == std::vector<long long>{0, 0});
  CHECK(geometric_int(s, c, w) == 0);
}

TEST_CASE("already minimal pair is a fixpoint") {
  auto s = Surface::standard(2);
  auto r = tighten_pair(s, dual(s, "b1"), dual(s, "a1"));
  CHECK(r.moves == 0);
  CHECK(r.crossings == 1);
}

TEST_CASE("torus (1,0) vs (m,n)") {
  auto s = Surface::standard(1);
  auto a = dual(s, "b1");  // class -[a1]
  for (auto [m, n] : std::vector<std::pair<long long, long long>>{
           {0, 1}, {1, 1}, {2, 1}, {1, 2}, {3, 2}, {-2, 3}, {5, -3}}) {
    std::vector<Curve> cs{a, torus_curve(s, m, n)};
    separate_slots(cs);
    INFO("(m,n)=(" << m << "," << n << ")");
    CHECK(geometric_int(s, cs[0], cs[1]) == std::abs(n));
    CHECK(algebraic_int(s, cs[0], cs[1]) == -n);
  }
}

TEST_CASE("two torus geodesics intersect |det|") {
  auto s = Surface::standard(1);
  for (auto [p, q] : std::vector<std::pair<long long, long long>>{
           {1, 0}, {1, 1}, {2, 1}, {1, 2}}) {
    for (auto [m, n] : std::vector<std::pair<long long, long long>>{
             {0, 1}, {3, 2}, {-2, 3}}) {
      std::vector<Curve> cs{torus_curve(s, p, q), torus_curve(s, m, n)};
      separate_slots(cs);
      INFO("(p,q)=(" << p << "," << q << ") (m,n)=(" << m << "," << n << ")");
      CHECK(algebraic_int(s, cs[0], cs[1]) == p * n - q * m);
      CHECK(geometric_int(s, cs[0], cs[1]) == std::abs(p * n - q * m));
    }
  }
}

TEST_CASE("bigon moves preserve class and validity, drop 2 crossings") {
  auto s = Surface::standard(1);
  // heavily wiggled pair: (1,1) curve vs zigzag crossing it several times
  auto c = torus_curve(s, 1, 1);
  std::vector<Curve> cs{c,
                        Curve{{{s.edge_index("a1"), +1, 5},
                               {s.edge_index("a1"), -1, 6},
                               {s.edge_index("a1"), +1, 7}}}};
  scale_slots(cs, 16);
  REQUIRE(validate_curve(s, cs[1]).empty());
  auto h0 = homology_class(s, cs[0]);
  auto h1 = homology_class(s, cs[1]);
  long long before = (long long)crossings(s, cs[0], cs[1]).size();
  while (true) {
    std::vector<Curve> prev = cs;
    if (!remove_one_bigon(s, cs)) break;
    long long now = cs[0].xs.empty() || cs[1].xs.empty()
                        ? 0
                        : (long long)crossings(s, cs[0], cs[1]).size();
    CHECK(now == before - 2);
    before = now;
    for (auto& cc : cs)
      if (!cc.xs.empty()) CHECK(validate_curve(s, cc).empty());
    CHECK(homology_class(s, cs[0]) == h0);
    CHECK(homology_class(s, cs[1]) == h1);
  }
  // zigzag has class (0,1); minimal position with (1,1) is one crossing
  CHECK(before == 1);
}

TEST_CASE("intersection matrix of standard genus-2 diagram") {
  auto s = Surface::standard(2);
  std::vector<Curve> alpha{dual(s, "b1"), dual(s, "b2")};
  std::vector<Curve> beta{dual(s, "a1"), dual(s, "a2")};
  auto M = intersection_matrix(s, alpha, beta);
  CHECK(std::abs(M[0][0]) == 1);
  CHECK(std::abs(M[1][1]) == 1);
  CHECK(M[0][1] == 0);
  CHECK(M[1][0] == 0);
  CHECK(M[0][0] == M[1][1]);
}

TEST_CASE("tighten_all reaches a bigon-free state") {
  auto s = Surface::standard(1);
  std::vector<Curve> cs{torus_curve(s, 1, 0), torus_curve(s, 0, 1),
                        Curve{{{s.edge_index("b1"), +1, 7},
                               {s.edge_index("b1"), -1, 8}}}};
  CHECK(tighten_all(s, cs));
  CHECK(!remove_one_bigon(s, cs));
}
