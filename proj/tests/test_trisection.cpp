#include <catch2/catch_amalgamated.hpp>

#include "tricurves/trisection.hpp"
#include "tricurves/curves_util.hpp"

using namespace tricurves;

namespace {

Diagram make_diagram(const Surface& s,
                     std::array<std::vector<Curve>, 3> fams) {
  Diagram d;
  d.surface = s;
  std::vector<Curve> all;
  std::vector<std::pair<int, int>> tags;
  for (int f = 0; f < 3; f++)
    for (int i = 0; i < (int)fams[f].size(); i++) {
      all.push_back(fams[f][i]);
      tags.push_back({f, i + 1});
    }
  separate_slots(all);
  for (size_t i = 0; i < all.size(); i++) {
    NamedCurve nc;
    nc.family = kTriFamilies[tags[i].first];
    nc.index = tags[i].second;
    nc.curve = all[i];
    d.curves.push_back(nc);
  }
  d.cutsystems = {"alpha", "beta", "gamma"};
  return d;
}

}  // namespace

TEST_CASE("genus-1 S1xS3: alpha=beta=gamma") {
  Surface s = Surface::standard(1);
  Curve dual{{{0, +1, 0}}};  // crosses a1 once: parallel to b1
  auto d = make_diagram(s, {{{dual}, {dual}, {dual}}});
  auto p = validate_trisection(d);
  REQUIRE(p.g == 1);
  REQUIRE(p.k == std::array<int, 3>{1, 1, 1});
  for (auto& l : p.level) REQUIRE(l == "certified");
  auto inv = fundamental_invariants(d, p);
  REQUIRE(inv.chi == 0);
  REQUIRE(inv.free_rank == 1);
  REQUIRE(inv.torsion.empty());
  REQUIRE(inv.genus_bound_ok);
  // reducing curve certificate
  auto certs = find_certificates(d, {"reducing-curve"});
  REQUIRE(certs.size() == 1);
  REQUIRE(verify_certificate(d, certs[0]));
  // no five-chain at genus 1
  REQUIRE(!find_five_chain(d));
}

TEST_CASE("genus-1 CP2: slopes 0, 1, infinity") {
  Surface s = Surface::standard(1);
  Curve slope_inf = torus_curve(s, 1, 0);   // a1-parallel
  Curve slope_zero = torus_curve(s, 0, 1);  // b1-parallel
  Curve slope_one = torus_curve(s, 1, 1);
  auto d = make_diagram(s, {{{slope_zero}, {slope_one}, {slope_inf}}});
  auto p = validate_trisection(d);
  REQUIRE(p.g == 1);
  REQUIRE(p.k == std::array<int, 3>{0, 0, 0});
  auto inv = fundamental_invariants(d, p);
  REQUIRE(inv.chi == 3);
  REQUIRE(inv.min_generators == 0);
  REQUIRE(inv.genus_bound_ok);
}

TEST_CASE("genus-2 S2xS2") {
  Surface s = Surface::standard(2);
  // alpha parallel to the a-edges, beta to the b-edges, gamma the two
  // cross-handle curves: classes b1+a2 and b2+a1.
  Curve al1{{{1, +1, 0}}}, al2{{{3, +1, 0}}};
  Curve be1{{{0, +1, 0}}}, be2{{{2, +1, 0}}};
  Curve ga1{{{0, +1, 0}, {3, +1, 0}}}, ga2{{{2, +1, 0}, {1, +1, 0}}};
  auto d = make_diagram(s, {{{al1, al2}, {be1, be2}, {ga1, ga2}}});
  auto p = validate_trisection(d);
  REQUIRE(p.g == 2);
  REQUIRE(p.k == std::array<int, 3>{0, 0, 0});
  auto inv = fundamental_invariants(d, p);
  REQUIRE(inv.chi == 4);
  REQUIRE(inv.min_generators == 0);
  REQUIRE(inv.genus_bound_ok);
}

TEST_CASE("torsion pairing is a hard rejection") {
  Surface s = Surface::standard(1);
  Curve m = torus_curve(s, 1, 0);
  Curve lens = torus_curve(s, 1, 2);  // L(2,1) pairing with m
  auto d = make_diagram(s, {{{m}, {lens}, {m}}});
  REQUIRE_THROWS_AS(validate_trisection(d), invalid_input);
}

TEST_CASE("loop surgery on a winding-two decomposed curve") {
  // Genus-one diagram with the three families as parallel duals, arranged
  // alpha, gamma, beta along the a1 direction; the loop winds twice around
  // a1 and each arc crosses exactly the two families it is allowed to.
  Surface s = Surface::standard(1);
  Diagram d;
  d.surface = s;
  d.curves = {{"alpha", 1, Curve{{{0, +1, 10}}}},
              {"beta", 1, Curve{{{0, +1, 30}}}},
              {"gamma", 1, Curve{{{0, +1, 20}}}}};
  d.cutsystems = {"alpha", "beta", "gamma"};
  DecomposedCurve dc;
  dc.ell = Curve{{{1, -1, 60}, {0, +1, 25}, {1, -1, 40}, {0, -1, 14},
                  {0, +1, 16}}};
  dc.j_ab = 0;
  dc.j_bc = 1;
  dc.j_ca = 4;
  REQUIRE(validate_decomposed(d, dc).empty());

  // Misplacing a junction puts a forbidden crossing on some arc.
  DecomposedCurve bad = dc;
  bad.j_bc = 2;  // moves a beta crossing onto arc b
  REQUIRE(!validate_decomposed(d, bad).empty());

  auto out = loop_surgery(d, dc);
  REQUIRE(out.surface.genus() == 3);
  auto p = validate_trisection(out);
  REQUIRE(p.g == 3);
  REQUIRE(p.k == std::array<int, 3>{1, 1, 1});
  auto inv = fundamental_invariants(out, p);
  REQUIRE(inv.chi == 2);
  REQUIRE(inv.free_rank == 0);
  REQUIRE(inv.torsion == std::vector<bigint>{2});
  REQUIRE(inv.genus_bound_ok);
  REQUIRE(find_five_chain(out).has_value());
}
