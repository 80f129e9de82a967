#include <catch2/catch_amalgamated.hpp>

#include "tricurves/curves_util.hpp"
#include "tricurves/handlebody.hpp"
#include "tricurves/rewrite.hpp"
#include "tricurves/tighten.hpp"

using namespace tricurves;

namespace {

Curve one(const Surface& s, const std::string& edge, std::int64_t slot,
          int sign = +1) {
  return Curve{{{s.edge_index(edge), sign, slot}}};
}

std::vector<std::vector<long long>> alg_matrix(const RewriteState& st) {
  int n = (int)st.curves.size();
  std::vector<std::vector<long long>> m(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; i++)
    for (int j = i + 1; j < n; j++) {
      m[i][j] = algebraic_int(st.s, st.curves[i], st.curves[j]);
      m[j][i] = -m[i][j];
    }
  return m;
}

}  // namespace

TEST_CASE("cut then merge along the diagonal is the identity") {
  RewriteState st;
  st.s = Surface::standard(2);
  Surface t1 = Surface::standard(1);
  st.curves = {one(st.s, "a1", 0), one(st.s, "b1", 0), one(st.s, "a2", 0),
               one(st.s, "b2", 0), torus_curve(t1, 1, 1)};
  separate_slots(st.curves);
  auto before = st.curves;
  auto sides_before = st.s.faces[0].sides;
  cut_face(st, 0, 1, 5, "d");
  REQUIRE(st.s.faces.size() == 2);
  REQUIRE(st.s.genus() == 2);
  for (auto& c : st.curves) REQUIRE(validate_curve(st.s, c).empty());
  merge_faces(st, st.s.edge_index("d"));
  REQUIRE(st.s.faces.size() == 1);
  REQUIRE(st.s.genus() == 2);
  REQUIRE(st.curves == before);
  // merged word is a rotation of the original
  auto rot = st.s.faces[0].sides;
  bool match = false;
  for (size_t r = 0; r < rot.size() && !match; r++) {
    std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    match = rot == sides_before;
  }
  REQUIRE(match);
}

TEST_CASE("cut crossings are ordered and signed consistently") {
  RewriteState st;
  st.s = Surface::standard(1);
  st.curves = {torus_curve(st.s, 1, 0), torus_curve(st.s, 0, 1),
               torus_curve(st.s, 2, 3)};
  separate_slots(st.curves);
  auto m0 = alg_matrix(st);
  cut_face(st, 0, 0, 2, "d");
  for (auto& c : st.curves) REQUIRE(validate_curve(st.s, c).empty());
  REQUIRE(st.s.genus() == 1);
  REQUIRE(alg_matrix(st) == m0);
  // both faces are triangles with the diagonal
  for (auto& f : st.s.faces) REQUIRE(f.sides.size() == 3);
}

TEST_CASE("fold cancels an adjacent pair") {
  // hexagon a d d^-1 b a^-1 b^-1: folding the d pair leaves the torus square
  Surface s;
  s.edge_names = {"a", "b", "d"};
  Face f;
  f.sides = {{0, +1}, {2, +1}, {2, -1}, {1, +1}, {0, -1}, {1, -1}};
  s.faces = {f};
  s.finalize();
  REQUIRE(s.genus() == 1);
  RewriteState st{s, {Curve{{{0, +1, 0}, {2, -1, 0}}}, Curve{{{1, +1, 0}}}}};
  for (auto& c : st.curves) REQUIRE(validate_curve(st.s, c).empty());
  auto m0 = alg_matrix(st);
  fold(st, 0, 1);
  REQUIRE(st.s.genus() == 1);
  REQUIRE(st.s.faces[0].sides.size() == 4);
  for (auto& c : st.curves) REQUIRE(validate_curve(st.s, c).empty());
  REQUIRE(alg_matrix(st) == m0);
}

TEST_CASE("canonicalize a two-face torus") {
  Surface s;
  s.edge_names = {"a", "b", "d"};
  Face f1, f2;
  f1.sides = {{0, +1}, {1, +1}, {2, +1}};
  f2.sides = {{2, -1}, {0, -1}, {1, -1}};
  s.faces = {f1, f2};
  s.finalize();
  REQUIRE(s.genus() == 1);
  RewriteState st{
      s,
      {Curve{{{0, +1, 0}, {2, -1, 0}}}, Curve{{{1, +1, 0}, {2, -1, 1}}}}};
  for (auto& c : st.curves) REQUIRE(validate_curve(st.s, c).empty());
  long long i0 = algebraic_int(st.s, st.curves[0], st.curves[1]);
  REQUIRE(std::abs(i0) == 1);
  canonicalize(st);
  REQUIRE(st.s.is_standard());
  REQUIRE(st.s.genus() == 1);
  REQUIRE(algebraic_int(st.s, st.curves[0], st.curves[1]) == i0);
}

TEST_CASE("canonicalize the interleaved octagon") {
  // word x1 x2 x3 x4 x1^-1 x2^-1 x3^-1 x4^-1: genus 2, one vertex
  Surface s;
  s.edge_names = {"x1", "x2", "x3", "x4"};
  Face f;
  for (int e = 0; e < 4; e++) f.sides.push_back({e, +1});
  for (int e = 0; e < 4; e++) f.sides.push_back({e, -1});
  s.faces = {f};
  s.finalize();
  REQUIRE(s.genus() == 2);
  RewriteState st{s,
                  {one(s, "x1", 0), one(s, "x2", 0), one(s, "x3", 0),
                   one(s, "x4", 0)}};
  for (auto& c : st.curves) REQUIRE(validate_curve(st.s, c).empty());
  auto m0 = alg_matrix(st);
  canonicalize(st);
  REQUIRE(st.s.is_standard());
  REQUIRE(st.s.genus() == 2);
  for (auto& c : st.curves) REQUIRE(validate_curve(st.s, c).empty());
  REQUIRE(alg_matrix(st) == m0);
}

TEST_CASE("canonicalize a dodecagon with several vertices") {
  // word x1 x2 x1^-1 x3 x2^-1 x4 x3^-1 x5 x4^-1 x6 x5^-1 x6^-1
  Surface s;
  Face f;
  for (int e = 0; e < 6; e++) s.edge_names.push_back("x" + std::to_string(e));
  int word[12][2] = {{0, 1}, {1, 1}, {0, -1}, {2, 1},  {1, -1}, {3, 1},
                     {2, -1}, {4, 1}, {3, -1}, {5, 1}, {4, -1}, {5, -1}};
  for (auto& w : word) f.sides.push_back({w[0], w[1]});
  s.faces = {f};
  s.finalize();
  int g = s.genus();
  RewriteState st{s, {one(s, "x0", 0), one(s, "x5", 0)}};
  for (auto& c : st.curves) REQUIRE(validate_curve(st.s, c).empty());
  auto m0 = alg_matrix(st);
  canonicalize(st);
  REQUIRE(st.s.is_standard());
  REQUIRE(st.s.genus() == g);
  for (auto& c : st.curves) REQUIRE(validate_curve(st.s, c).empty());
  REQUIRE(alg_matrix(st) == m0);
}

TEST_CASE("canonicalize preserves a full dual system") {
  RewriteState st;
  st.s = Surface::standard(3);
  for (int i = 1; i <= 3; i++) {
    st.curves.push_back(one(st.s, "a" + std::to_string(i), 0));
    st.curves.push_back(one(st.s, "b" + std::to_string(i), 0));
  }
  Surface t1 = Surface::standard(1);
  st.curves.push_back(torus_curve(t1, 1, 2));
  separate_slots(st.curves);
  auto m0 = alg_matrix(st);
  // scramble: cut twice, merge old edges away, then canonicalize back
  cut_face(st, 0, 2, 9, "d1");
  merge_faces(st, st.s.edge_index("a1"));
  canonicalize(st);
  REQUIRE(st.s.is_standard());
  REQUIRE(st.s.genus() == 3);
  for (auto& c : st.curves) REQUIRE(validate_curve(st.s, c).empty());
  REQUIRE(alg_matrix(st) == m0);
}

TEST_CASE("compress_along drops the genus and keeps disjoint curves") {
  RewriteState st;
  st.s = Surface::standard(2);
  Surface t1 = Surface::standard(1);
  std::vector<Curve> all = {torus_curve(t1, 1, 0), torus_curve(t1, 0, 1),
                            torus_curve(t1, 2, 3),
                            Curve{{{st.s.edge_index("a2"), +1, 7}}},
                            Curve{{{st.s.edge_index("a2"), +1, 0}}}};
  separate_slots(all);
  Curve C = all.back();
  all.pop_back();
  st.curves = all;
  auto m0 = alg_matrix(st);
  compress_along(st, C);
  REQUIRE(st.s.genus() == 1);
  for (auto& c : st.curves) REQUIRE(validate_curve(st.s, c).empty());
  // the parallel copy of C now bounds a disk over the cap
  auto rs = Arrangement(st.s, {st.curves[3]}).regions({0});
  bool disk = false;
  for (auto& r : rs) disk = disk || (r.chi == 1);
  REQUIRE(disk);
  st.curves.pop_back();
  m0.pop_back();
  for (auto& row : m0) row.pop_back();
  canonicalize(st);
  REQUIRE(st.s.is_standard());
  REQUIRE(st.s.genus() == 1);
  REQUIRE(alg_matrix(st) == m0);
}

TEST_CASE("compress_along rejects bad compressing curves") {
  RewriteState st;
  st.s = Surface::standard(2);
  // null-homotopic: two cancelling crossings on a1
  REQUIRE_THROWS_AS(compress_along(st, Curve{{{0, +1, 100}, {0, -1, 101}}}),
                    invalid_input);
  // meets a kept curve
  st.curves = {Curve{{{st.s.edge_index("b2"), +1, 5}}}};
  REQUIRE_THROWS_AS(compress_along(st, Curve{{{st.s.edge_index("a2"), +1, 0}}}),
                    invalid_input);
}
