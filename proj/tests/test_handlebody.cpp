#include <catch2/catch_amalgamated.hpp>

#include "tricurves/handlebody.hpp"

using namespace tricurves;

namespace {

Curve one(const Surface& s, const std::string& e, std::int64_t slot = 0) {
  return Curve{{{s.edge_index(e), +1, slot}}};
}

std::vector<Curve> duals(const Surface& s, char fam) {
  std::vector<Curve> A;
  for (int i = 1; i <= s.genus(); i++)
    A.push_back(one(s, std::string(1, fam) + std::to_string(i)));
  return A;
}

Word word_of(const Surface& s, const Curve& c, const std::vector<Curve>& A) {
  return disk_word(s, c, A);
}

long long alg(const Surface& s, Curve c, Curve d) {
  std::vector<Curve> both{c, d};
  separate_slots(both);
  return algebraic_int(s, both[0], both[1]);
}

long long det_alg(const Surface& s, const std::vector<Curve>& A,
                  const std::vector<Curve>& B) {
  int n = (int)A.size();
  std::vector<std::vector<long long>> M(n, std::vector<long long>(n));
  for (int i = 0; i < n; i++)
    for (int j = 0; j < n; j++) M[i][j] = alg(s, A[i], B[j]);
  if (n == 1) return M[0][0];
  if (n == 2) return M[0][0] * M[1][1] - M[0][1] * M[1][0];
  long long d = 0;
  for (int j = 0; j < 3; j++)
    d += M[0][j] * (M[1][(j + 1) % 3] * M[2][(j + 2) % 3] -
                    M[1][(j + 2) % 3] * M[2][(j + 1) % 3]);
  return d;
}

}  // namespace

TEST_CASE("dual curves form valid cut systems") {
  for (int g = 1; g <= 3; g++) {
    Surface s = Surface::standard(g);
    CHECK(validate_cut_system(s, duals(s, 'a')).empty());
    CHECK(validate_cut_system(s, duals(s, 'b')).empty());
  }
}

TEST_CASE("cut system rejects wrong count and dependent classes") {
  Surface s = Surface::standard(2);
  auto A = duals(s, 'a');
  CHECK_FALSE(validate_cut_system(s, {A[0]}).empty());
  // two parallel copies of the same curve: disjoint but dependent
  std::vector<Curve> P{one(s, "a1", 0), one(s, "a1", 1)};
  CHECK_FALSE(validate_cut_system(s, P).empty());
}

TEST_CASE("disk bounding and primitivity against a cut system") {
  Surface s = Surface::standard(2);
  auto A = duals(s, 'a');
  Curve b1 = one(s, "b1");
  Word w = word_of(s, b1, A);
  REQUIRE(w.size() == 1);
  CHECK_FALSE(bounds_disk(s, b1, A));
  CHECK(is_primitive(s, b1, A));
  // a parallel copy of A_1 misses every A-curve: bounds a disk, not primitive
  Curve par = one(s, "a1", 7);
  CHECK(word_of(s, par, A).empty());
  CHECK(bounds_disk(s, par, A));
  CHECK_FALSE(is_primitive(s, par, A));
}

TEST_CASE("handleslide acts as a homology row operation") {
  Surface s = Surface::standard(2);
  auto A = duals(s, 'a');
  auto h0 = homology_class(s, A[0]), h1 = homology_class(s, A[1]);
  int o = handleslide(s, A, 0, 1);
  CHECK((o == 1 || o == -1));
  auto hn = homology_class(s, A[0]);
  for (size_t t = 0; t < hn.size(); t++) CHECK(hn[t] == h0[t] + o * h1[t]);
  CHECK(homology_class(s, A[1]) == h1);
  CHECK(validate_cut_system(s, A).empty());
}

TEST_CASE("handleslides preserve disk bounding, primitivity, |det|") {
  Surface s = Surface::standard(2);
  auto A = duals(s, 'a');
  auto B = duals(s, 'b');
  Curve b1 = one(s, "b1");
  Curve par = one(s, "a1", 7);
  long long d0 = std::abs(det_alg(s, A, B));
  REQUIRE(d0 == 1);
  handleslide(s, A, 0, 1);
  CHECK_FALSE(bounds_disk(s, b1, A));
  CHECK(word_of(s, b1, A).size() >= 1);
  CHECK(bounds_disk(s, par, A));
  CHECK(is_primitive(s, b1, A));
  CHECK(std::abs(det_alg(s, A, B)) == d0);
  handleslide(s, A, 1, 0);
  CHECK(validate_cut_system(s, A).empty());
  CHECK(std::abs(det_alg(s, A, B)) == d0);
  CHECK(bounds_disk(s, par, A));
}

TEST_CASE("genus-three slide chain stays a cut system") {
  Surface s = Surface::standard(3);
  auto A = duals(s, 'a');
  auto B = duals(s, 'b');
  REQUIRE(std::abs(det_alg(s, A, B)) == 1);
  handleslide(s, A, 0, 1);
  handleslide(s, A, 1, 2);
  handleslide(s, A, 0, 2);
  CHECK(validate_cut_system(s, A).empty());
  CHECK(std::abs(det_alg(s, A, B)) == 1);
}

TEST_CASE("general slide of disjoint curves") {
  Surface s = Surface::standard(2);
  std::vector<Curve> cs{one(s, "a1"), one(s, "b2")};
  REQUIRE(crossings(s, cs[0], cs[1]).empty());
  auto h0 = homology_class(s, cs[0]), h1 = homology_class(s, cs[1]);
  int o = slide_over(s, cs, 0, 1);
  CHECK(validate_curve(s, cs[0]).empty());
  CHECK(crossings(s, cs[0], cs[1]).empty());
  auto hn = homology_class(s, cs[0]);
  for (size_t t = 0; t < hn.size(); t++) CHECK(hn[t] == h0[t] + o * h1[t]);
}
