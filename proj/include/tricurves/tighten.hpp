#pragma once
// Minimal-position engine.  A bigon between two curves is an innermost disk
// region of their arrangement whose boundary consists of exactly two arcs,
// one of each curve (this intrinsically covers bigons that cross complex
// edges or contain the cell-structure vertex).  Removing it pushes one
// curve across the bigon past the other: the rerouted arc copies the fixed
// curve's crossing run at adjacent slots on the far side.

#include "tricurves/arrangement.hpp"

namespace tricurves {

inline void scale_slots(std::vector<Curve>& cs, std::int64_t f) {
  for (auto& c : cs)
    for (auto& x : c.xs) x.slot *= f;
}

// Applies the first available bigon move between distinct curves accepted by
// `allow` (move_curve-to-be, fixed_curve); the higher curve id is rerouted.
// Slots of *all* curves are scaled x4 to make room.  Returns false if no
// bigon exists.  Curves with an empty crossing sequence are skipped.
inline bool remove_one_bigon(
    const Surface& s, std::vector<Curve>& curves,
    const std::function<bool(int, int)>& allow = {}) {
  std::vector<int> live;
  for (int i = 0; i < (int)curves.size(); i++)
    if (!curves[i].xs.empty()) live.push_back(i);
  if (live.size() < 2) return false;
  std::vector<Curve> lc;
  for (int i : live) lc.push_back(curves[i]);
  scale_slots(lc, 4);
  Arrangement a(s, lc);
  // Bigons are detected pairwise: a bigon of (u,v) may be crossed
  // corner-to-corner by other curves and then spans several faces of the
  // full arrangement.  Rerouting across such a bigon cannot increase any
  // other pairwise count.
  for (int cu = 0; cu < (int)lc.size(); cu++)
  for (int cv = cu + 1; cv < (int)lc.size(); cv++) {
  auto regs = a.regions({cu, cv});
  for (auto& R : regs) {
    if (R.chi != 1 || R.circles.size() != 1) continue;
    auto& tr = R.tr_[0];
    if (tr.size() != 2 || tr[0].second != 1 || tr[1].second != 1) continue;
    int mv = std::max(cu, cv), fx = std::min(cu, cv);
    if (allow && !allow(live[mv], live[fx])) continue;
    // split the boundary circle into the two runs
    auto& darts = a.darts();
    auto& bd = R.circles[0].darts;
    int n = (int)bd.size();
    int start = -1;
    for (int i = 0; i < n; i++) {
      if (darts[bd[i]].curve == mv &&
          darts[bd[(i + n - 1) % n]].curve != mv) {
        start = i;
        break;
      }
    }
    if (start < 0) throw std::logic_error("bigon runs not split");
    std::vector<int> run_m, run_f;
    for (int i = 0; i < n; i++) {
      int d = bd[(start + i) % n];
      (darts[d].curve == mv ? run_m : run_f).push_back(d);
    }
    // a true bigon has two distinct corners with opposite crossing signs
    auto corner = [&](int d) { return darts[darts[d].twin].tail; };
    int v1 = corner(run_m.back()), v2 = corner(run_f.back());
    if (v1 == v2) continue;
    auto& vs = a.vertices();
    if (vs[v1].kind != Arrangement::Vertex::kCross ||
        vs[v2].kind != Arrangement::Vertex::kCross)
      throw std::logic_error("bigon corner is not a crossing");
    if (a.crossings()[vs[v1].cross].sign == a.crossings()[vs[v2].cross].sign)
      continue;
    bool A_m = darts[run_m[0]].along;
    bool A_f = darts[run_f[0]].along;
    std::vector<char> in_region(a.num_faces(), 0);
    for (int f : R.faces) in_region[f] = 1;
    // interior vertices of a run sit between consecutive darts
    auto head = [&](int d) { return darts[darts[d].twin].tail; };
    auto interior = [&](const std::vector<int>& run) {
      std::vector<int> xs;
      for (size_t i = 0; i + 1 < run.size(); i++) {
        int v = head(run[i]);
        if (a.vertices()[v].kind == Arrangement::Vertex::kSlot)
          xs.push_back(a.vertices()[v].xi);
      }
      return xs;
    };
    std::vector<int> rem = interior(run_m);  // move curve crossings to drop
    std::vector<int> cp = interior(run_f);   // fixed curve crossings to copy
    const Curve& U = a.curves()[mv];
    const Curve& V = a.curves()[fx];
    int m = (int)U.xs.size();
    int signf = (A_m == A_f) ? -1 : +1;
    std::vector<Crossing> block;
    for (int xi : cp) {
      const Crossing& x = V.xs[xi];
      int seg_up = a.first_dart(a.slot_vertex(fx, xi));
      bool up_in_region = in_region[a.face_left(seg_up)];
      block.push_back({x.edge, signf * x.sign,
                       x.slot + (up_in_region ? -1 : +1)});
    }
    if (A_m) std::reverse(block.begin(), block.end());
    std::vector<Crossing> nu;
    if (!rem.empty()) {
      std::vector<int> fw = rem;
      if (!A_m) std::reverse(fw.begin(), fw.end());
      for (int i = (fw.back() + 1) % m; i != fw.front(); i = (i + 1) % m)
        nu.push_back(U.xs[i]);
    } else {
      int k = darts[run_m[0]].chord;  // insertion inside chord k
      for (int i = (k + 1) % m, cnt = 0; cnt < m; cnt++, i = (i + 1) % m)
        nu.push_back(U.xs[i]);
    }
    nu.insert(nu.end(), block.begin(), block.end());
    // verify: rerouted curve embedded, pair count down by exactly 2
    Curve nuc{nu};
    if (!validate_curve(s, nuc).empty())
      throw std::logic_error("bigon reroute broke embedding");
    long long before = (long long)crossings(s, U, V).size();
    long long after = (long long)crossings(s, nuc, V).size();
    // straightening may remove further incidental bigons of the same pair
    if (after > before - 2 || ((before - after) & 1))
      throw std::logic_error("bigon reroute did not reduce the pair");
    // write back (all live curves carry the x4 scaled slots now)
    for (size_t i = 0; i < live.size(); i++) curves[live[i]] = lc[i];
    curves[live[mv]].xs = std::move(nu);
    return true;
  }
  }
  return false;
}

struct TightenResult {
  Curve a, b;
  bool resolved = true;
  long long crossings = 0;
  int moves = 0;
};

inline TightenResult tighten_pair(const Surface& s, Curve c, Curve cp,
                                  long long budget = 100000) {
  TightenResult r;
  std::vector<Curve> cs{std::move(c), std::move(cp)};
  while (!cs[0].xs.empty() && !cs[1].xs.empty()) {
    if (r.moves >= budget) {
      r.resolved = false;
      break;
    }
    if (!remove_one_bigon(s, cs)) break;
    r.moves++;
  }
  if (r.resolved && !cs[0].xs.empty() && !cs[1].xs.empty())
    r.crossings = (long long)crossings(s, cs[0], cs[1]).size();
  r.a = std::move(cs[0]);
  r.b = std::move(cs[1]);
  return r;
}

inline long long geometric_int(const Surface& s, const Curve& c,
                               const Curve& cp, long long budget = 100000) {
  auto r = tighten_pair(s, c, cp, budget);
  if (!r.resolved) throw invalid_input("tighten_pair: unresolved within budget");
  return r.crossings;
}

// Tightens all pairs accepted by `allow` to a bigon-free state in place.
inline bool tighten_all(const Surface& s, std::vector<Curve>& curves,
                        const std::function<bool(int, int)>& allow = {},
                        long long budget = 100000) {
  for (long long i = 0; i < budget; i++)
    if (!remove_one_bigon(s, curves, allow)) return true;
  return false;
}

// entry (i,j) = algebraic intersection of A_i with B_j
inline std::vector<std::vector<long long>> intersection_matrix(
    const Surface& s, const std::vector<Curve>& A,
    const std::vector<Curve>& B) {
  std::vector<std::vector<long long>> M(A.size(),
                                        std::vector<long long>(B.size(), 0));
  for (size_t i = 0; i < A.size(); i++)
    for (size_t j = 0; j < B.size(); j++)
      M[i][j] = algebraic_int(s, A[i], B[j]);
  return M;
}

}  // namespace tricurves
