#include <catch2/catch_amalgamated.hpp>

#include "tricurves/io.hpp"
#include "tricurves/surface.hpp"

using namespace tricurves;

TEST_CASE("standard surfaces") {
  auto s1 = Surface::standard(1);
  CHECK(s1.num_sides() == 4);
  CHECK(s1.num_edges() == 2);
  CHECK(s1.num_vertices() == 1);
  CHECK(s1.euler_characteristic() == 0);
  CHECK(s1.genus() == 1);

  auto s2 = Surface::standard(2);
  CHECK(s2.num_vertices() == 1);
  CHECK(s2.genus() == 2);

  auto s3 = Surface::standard(3);
  CHECK(s3.num_sides() == 12);
  CHECK(s3.num_edges() == 6);
  CHECK(s3.euler_characteristic() == -4);
  CHECK(s3.genus() == 3);
  CHECK(s3.is_standard());
}

TEST_CASE("bad gluings rejected") {
  Surface s;
  s.edge_names = {"a1"};
  s.faces.push_back({{{0, +1}, {0, +1}}});  // same orientation twice
  CHECK_THROWS_AS(s.finalize(), invalid_input);

  Surface t;  // sphere: a a^-1, valid gluing but genus 0
  t.edge_names = {"a1"};
  t.faces.push_back({{{0, +1}, {0, -1}}});
  t.finalize();
  CHECK(t.euler_characteristic() == 2);
  CHECK(t.genus() == 0);
  CHECK_FALSE(t.is_standard());
}

TEST_CASE("homology classes of dual curves") {
  auto s = Surface::standard(2);
  Curve dual_b1{{{1, +1, 0}}};  // crosses b1 once
  auto h = homology_class(s, dual_b1);
  CHECK(h == std::vector<long long>{-1, 0, 0, 0});
  Curve dual_a1{{{0, +1, 0}}};
  CHECK(homology_class(s, dual_a1) == std::vector<long long>{0, 1, 0, 0});
}

TEST_CASE("tri round trip") {
  std::string text =
      "surface genus 2\n"
      "curve alpha.1 : b1+@0\n"
      "curve alpha.2 : b2+@0\n"
      "cutsystem alpha\n";
  auto d = parse_tri(text);
  CHECK(d.surface.genus() == 2);
  REQUIRE(d.curves.size() == 2);
  CHECK(d.curves[0].family == "alpha");
  CHECK(d.curves[0].curve.xs == std::vector<Crossing>{{1, +1, 0}});
  CHECK(d.cutsystems == std::vector<std::string>{"alpha"});
  CHECK(to_tri(d) == text);

  auto d2 = parse_tri(to_tri(d));
  CHECK(to_tri(d2) == text);
}

TEST_CASE("tri format errors") {
  CHECK_THROWS_AS(parse_tri("curve x.1 : a1+@0\n"), invalid_input);
  CHECK_THROWS_AS(parse_tri("surface genus 0\n"), invalid_input);
  CHECK_THROWS_AS(parse_tri("surface genus 1\ncurve x.1 : a9+@0\n"),
                  invalid_input);
  CHECK_THROWS_AS(parse_tri("surface genus 1\ncurve x.1 :\n"), invalid_input);
  CHECK_THROWS_AS(parse_tri("surface genus 1\ncurve x.1 : a1+@0 b1+@0\n"
                            "curve x.2 : a1-@0\n"),
                  invalid_input);  // duplicate slot on a1
  // minus sign variants
  auto d = parse_tri("surface genus 1\ncurve x.1 : a1−@0 b1-@1\n");
  CHECK(d.curves[0].curve.xs[0].sign == -1);
  CHECK(d.curves[0].curve.xs[1].sign == -1);
}

TEST_CASE("renormalize slots") {
  auto d = parse_tri(
      "surface genus 1\n"
      "curve x.1 : a1+@7 b1+@100\n"
      "curve y.1 : a1+@3\n");
  renormalize_slots(d);
  CHECK(d.curves[0].curve.xs[0].slot == 1);
  CHECK(d.curves[0].curve.xs[1].slot == 0);
  CHECK(d.curves[1].curve.xs[0].slot == 0);
}

TEST_CASE("curve reversal and rotation") {
  Curve c{{{0, +1, 0}, {1, -1, 2}, {0, +1, 5}}};
  auto r = c.reversed();
  CHECK(r.xs == std::vector<Crossing>{{0, -1, 5}, {1, +1, 2}, {0, -1, 0}});
  CHECK(r.reversed() == c);
  Curve rot{{{1, -1, 2}, {0, +1, 5}, {0, +1, 0}}};
  CHECK(rot.canonical_rotation() == c.canonical_rotation());
}
