#pragma once
// Cut systems, disk-bounding and primitivity tests, handleslides and
// general curve slides.
//
// A slide replaces c_i by the band sum of c_i with a push-off of c_j along
// a guide arc whose interior avoids a given set of curves.  Guides are
// found automatically: BFS over the faces of the full arrangement, crossing
// complex-edge segments (and chords of non-avoided curves), starting from
// faces bordering c_i's chords and ending at c_j's.  Slot values for the
// band are allocated in the exact gaps of the x16-scaled slot space:
// mid-gap +-1 for the two band strands, +-1 next to c_j for the push-off.

#include <deque>
#include <optional>

#include "tricurves/tighten.hpp"
#include "tricurves/words.hpp"

namespace tricurves {

inline void renormalize_slots(const Surface& s, std::vector<Curve>& cs) {
  std::vector<std::vector<std::pair<std::int64_t, Crossing*>>> per_edge(
      s.num_edges());
  for (auto& c : cs)
    for (auto& x : c.xs) per_edge[x.edge].push_back({x.slot, &x});
  for (auto& v : per_edge) {
    std::stable_sort(v.begin(), v.end(),
                     [](auto& a, auto& b) { return a.first < b.first; });
    for (size_t i = 1; i < v.size(); i++)
      if (v[i].first == v[i - 1].first)
        throw invalid_input("duplicate slot on edge");
    for (size_t i = 0; i < v.size(); i++) v[i].second->slot = (std::int64_t)i;
  }
}

// --- cut-system predicates ---

inline std::vector<std::string> validate_cut_system(
    const Surface& s, const std::vector<Curve>& A) {
  std::vector<std::string> bad;
  int g = s.genus();
  if ((int)A.size() != g)
    bad.push_back("expected " + std::to_string(g) + " curves, got " +
                  std::to_string(A.size()));
  for (size_t i = 0; i < A.size(); i++) {
    auto r = validate_curve(s, A[i]);
    for (auto& m : r)
      bad.push_back("curve " + std::to_string(i + 1) + ": " + m);
  }
  if (!bad.empty()) return bad;
  Arrangement ar(s, A);
  if (!ar.crossings().empty()) bad.push_back("curves are not pairwise disjoint");
  // mod-2 independence of homology classes
  std::vector<std::vector<int>> M;
  for (auto& c : A) {
    auto h = homology_class(s, c);
    std::vector<int> r;
    for (auto v : h) r.push_back((int)(((v % 2) + 2) % 2));
    M.push_back(r);
  }
  int rank = 0;
  for (int col = 0; col < 2 * g && rank < (int)M.size(); col++) {
    int piv = -1;
    for (int i = rank; i < (int)M.size(); i++)
      if (M[i][col]) { piv = i; break; }
    if (piv < 0) continue;
    std::swap(M[piv], M[rank]);
    for (int i = 0; i < (int)M.size(); i++)
      if (i != rank && M[i][col])
        for (int j = 0; j < 2 * g; j++) M[i][j] ^= M[rank][j];
    rank++;
  }
  if (rank != (int)M.size())
    bad.push_back("homology classes dependent mod 2");
  if (!bad.empty()) return bad;
  // cross-check: complement is one planar region with 2g boundary circles
  auto regs = ar.regions(ar.all_curve_ids());
  if (regs.size() != 1 || regs[0].chi != 2 - 2 * g ||
      (int)regs[0].circles.size() != 2 * g)
    bad.push_back("complement is not a 2g-holed sphere");
  return bad;
}

// Word of c read against the disks dual to A, with slot spaces separated
// so independently built curves can be combined directly.
inline Word disk_word(const Surface& s, const Curve& c,
                      const std::vector<Curve>& A) {
  std::vector<Curve> all{c};
  for (auto& a : A) all.push_back(a);
  separate_slots(all);
  return intersection_word(s, all[0], {all.begin() + 1, all.end()});
}

inline bool bounds_disk(const Surface& s, const Curve& c,
                        const std::vector<Curve>& A) {
  return is_trivial_free(disk_word(s, c, A));
}

inline bool is_primitive(const Surface& s, const Curve& c,
                         const std::vector<Curve>& A) {
  return is_primitive_free(disk_word(s, c, A), s.genus());
}

// --- guides and band sums ---

struct GuidePath {
  int from_chord = 0, to_chord = 0;
  int from_side = 0, to_side = 0;  // 0 = left of curve travel, 1 = right
  std::vector<Crossing> mid;       // interior crossings, mid-gap slot values
};

// Curves must already be x16-scaled so gaps have room.  `avoid` lists curve
// ids the guide interior may not cross (c_i, c_j always avoided).
inline std::optional<GuidePath> find_guide(const Surface& s,
                                           const std::vector<Curve>& curves,
                                           int ci, int cj,
                                           std::vector<int> avoid) {
  avoid.push_back(ci);
  avoid.push_back(cj);
  std::vector<char> av(curves.size(), 0);
  for (int a : avoid) av[a] = 1;
  Arrangement ar(s, curves);
  auto& D = ar.darts();
  int nf = ar.num_faces();
  // per-face: lowest bordering chord dart of ci (seed) / cj (target)
  std::vector<int> seed(nf, -1), target(nf, -1);
  for (int d = 0; d < (int)D.size(); d++) {
    if (!D[d].is_chord) continue;
    int f = ar.face_left(d);
    if (D[d].curve == ci && seed[f] < 0) seed[f] = d;
    if (D[d].curve == cj && target[f] < 0) target[f] = d;
  }
  std::vector<int> par(nf, -2);  // crossed dart, or -1 for seeds
  std::deque<int> q;
  for (int f = 0; f < nf; f++)
    if (seed[f] >= 0) {
      par[f] = -1;
      q.push_back(f);
    }
  int goal = -1;
  while (!q.empty()) {
    int f = q.front();
    q.pop_front();
    if (target[f] >= 0) {
      goal = f;
      break;
    }
    // expand in dart order for determinism
    for (int d = 0; d < (int)D.size(); d++) {
      if (ar.face_left(d) != f) continue;
      if (D[d].is_chord && av[D[d].curve]) continue;
      int g = ar.face_left(D[d].twin);
      if (par[g] != -2) continue;
      par[g] = d;
      q.push_back(g);
    }
  }
  if (goal < 0) return std::nullopt;
  // reconstruct crossed darts from goal back to a seed
  std::vector<int> path;
  int f = goal;
  while (par[f] != -1) {
    path.push_back(par[f]);
    f = ar.face_left(par[f]);
  }
  std::reverse(path.begin(), path.end());
  GuidePath gp;
  int sd = seed[f], td = target[goal];
  gp.from_chord = D[sd].chord;
  gp.from_side = D[sd].along ? 0 : 1;
  gp.to_chord = D[td].chord;
  gp.to_side = D[td].along ? 0 : 1;
  // slot values per edge
  std::vector<std::vector<std::int64_t>> vals(s.num_edges());
  for (auto& c : curves)
    for (auto& x : c.xs) vals[x.edge].push_back(x.slot);
  for (auto& v : vals) std::sort(v.begin(), v.end());
  for (int d : path) {
    if (D[d].is_chord) continue;  // crossing a non-avoided curve: implicit
    int e = D[d].edge, j = D[d].seg;
    auto& v = vals[e];
    std::int64_t val;
    if (v.empty())
      val = 0;
    else if (j == 0)
      val = v.front() - 8;
    else if (j == (int)v.size())
      val = v.back() + 8;
    else
      val = (v[j - 1] + v[j]) / 2;
    int sgn = D[d].along ? -1 : +1;  // entering the face of copy (e, sgn)
    gp.mid.push_back({e, sgn, val});
  }
  return gp;
}

// Band sum of curves[ci] with a push-off of curves[cj] along gp; curves
// already x16-scaled.  `o` = traversal direction of the push-off loop.
inline Curve band_sum_raw(const std::vector<Curve>& curves, int ci, int cj,
                          const GuidePath& gp, int o) {
  const Curve& A = curves[ci];
  const Curve& B = curves[cj];
  int m = (int)A.xs.size(), n = (int)B.xs.size();
  Curve out;
  // full loop of A ending at the attachment chord
  for (int t = 1; t <= m; t++) out.xs.push_back(A.xs[(gp.from_chord + t) % m]);
  // out-strand on side S_i of the guide travel
  int so = gp.from_side;  // 0 left, 1 right
  for (auto& x : gp.mid)
    out.xs.push_back({x.edge, x.sign,
                      x.slot + (so == 0 ? -x.sign : +x.sign)});
  // push-off of B on side to_side, traversed in direction o
  auto delta = [&](const Crossing& x) {
    return gp.to_side == 0 ? -(std::int64_t)x.sign : +(std::int64_t)x.sign;
  };
  if (o > 0) {
    for (int t = 1; t <= n; t++) {
      const Crossing& x = B.xs[(gp.to_chord + t) % n];
      out.xs.push_back({x.edge, x.sign, x.slot + delta(x)});
    }
  } else {
    for (int t = 0; t < n; t++) {
      const Crossing& x = B.xs[((gp.to_chord - t) % n + n) % n];
      out.xs.push_back({x.edge, -x.sign, x.slot + delta(x)});
    }
  }
  // return strand (other side), reversed, inverted
  int sr = 1 - so;
  for (auto it = gp.mid.rbegin(); it != gp.mid.rend(); ++it)
    out.xs.push_back({it->edge, -it->sign,
                      it->slot + (sr == 0 ? -it->sign : +it->sign)});
  return out;
}

// Slides curves[ci] over curves[cj]; curves modified in place and
// renormalized.  Returns the homology sign o with [new] = [c_i] + o [c_j].
inline int slide_over(const Surface& s, std::vector<Curve>& curves, int ci,
                      int cj, std::vector<int> avoid = {}) {
  if (ci == cj) throw invalid_input("cannot slide a curve over itself");
  if (avoid.empty())
    for (int i = 0; i < (int)curves.size(); i++) avoid.push_back(i);
  std::vector<Curve> work = curves;
  scale_slots(work, 16);
  auto gp = find_guide(s, work, ci, cj, avoid);
  if (!gp) throw invalid_input("no guide arc found");
  int o_first = gp->from_side == gp->to_side ? +1 : -1;
  for (int o : {o_first, -o_first}) {
    Curve cand = band_sum_raw(work, ci, cj, *gp, o);
    if (!validate_curve(s, cand).empty()) continue;
    if (!crossings(s, cand, work[cj]).empty()) continue;
    // report the sign actually achieved in homology when visible there
    auto hn = homology_class(s, cand), hi = homology_class(s, work[ci]),
         hj = homology_class(s, work[cj]);
    for (int sg : {+1, -1}) {
      bool ok = true;
      for (size_t t = 0; t < hn.size(); t++)
        if (hn[t] != hi[t] + sg * hj[t]) ok = false;
      if (ok) { o = sg; break; }
    }
    work[ci] = std::move(cand);
    renormalize_slots(s, work);
    curves = std::move(work);
    return o;
  }
  throw std::logic_error("band sum failed both orientations");
}

// Handleslide inside a cut system: slide A_i over A_j with the guide
// avoiding all of A; validity of the result is re-checked.
inline int handleslide(const Surface& s, std::vector<Curve>& A, int i, int j) {
  std::vector<int> avoid;
  for (int k = 0; k < (int)A.size(); k++) avoid.push_back(k);
  int o = slide_over(s, A, i, j, avoid);
  auto rep = validate_cut_system(s, A);
  if (!rep.empty())
    throw std::logic_error("handleslide produced invalid cut system: " +
                           rep[0]);
  return o;
}

}  // namespace tricurves
