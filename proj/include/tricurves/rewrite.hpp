#pragma once
// Polygon-complex rewriting with curve transport.  Three local moves --
// merging two faces along an edge, cutting a face along a corner-to-corner
// diagonal, and folding an adjacent cancelling side pair -- each carry the
// curve system along.  `canonicalize` chains them to bring any oriented
// complex to the standard 4g-gon, preserving genus, curve validity and all
// pairwise algebraic intersection numbers (curves may only get tighter:
// straightening chords inside merged faces can cancel bigons).

#include <algorithm>
#include <cstdint>
#include <map>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include "arrangement.hpp"
#include "surface.hpp"

namespace tricurves {

struct RewriteState {
  Surface s;
  std::vector<Curve> curves;
};

namespace detail {

// Drop edge `e` from the complex and renumber the remaining edges.
inline void remove_edge(RewriteState& st, int e) {
  for (auto& c : st.curves)
    for (auto& x : c.xs)
      if (x.edge == e) throw std::logic_error("removing edge still crossed");
  st.s.edge_names.erase(st.s.edge_names.begin() + e);
  for (auto& f : st.s.faces)
    for (auto& sd : f.sides)
      if (sd.edge > e) sd.edge--;
  for (auto& c : st.curves)
    for (auto& x : c.xs)
      if (x.edge > e) x.edge--;
}

inline void erase_edge_crossings(RewriteState& st, int e) {
  for (auto& c : st.curves) {
    std::erase_if(c.xs, [&](const Crossing& x) { return x.edge == e; });
    if (c.xs.empty())
      throw invalid_input("curve is isotopic into the deleted edge");
  }
}

}  // namespace detail

// Delete edge `e` (whose two copies must lie in distinct faces) and
// concatenate the faces.  Curve chords through `e` join up.
inline void merge_faces(RewriteState& st, int e) {
  SideRef r1 = st.s.copy(e, +1), r2 = st.s.copy(e, -1);
  if (r1.face == r2.face)
    throw invalid_input("merge_faces: both copies in one face");
  const auto& s1 = st.s.faces[r1.face].sides;
  const auto& s2 = st.s.faces[r2.face].sides;
  Face merged;
  for (int t = 1; t < (int)s1.size(); t++)
    merged.sides.push_back(s1[(r1.index + t) % s1.size()]);
  for (int t = 1; t < (int)s2.size(); t++)
    merged.sides.push_back(s2[(r2.index + t) % s2.size()]);
  int fa = std::min(r1.face, r2.face), fb = std::max(r1.face, r2.face);
  st.s.faces.erase(st.s.faces.begin() + fb);
  st.s.faces.erase(st.s.faces.begin() + fa);
  st.s.faces.push_back(merged);
  detail::erase_edge_crossings(st, e);
  detail::remove_edge(st, e);
  st.s.finalize();
}

// Cut face `f` along a diagonal from corner `ci` to corner `cj` (corner i
// precedes side i).  A new edge runs ci -> cj; the face splits into
// sides[ci..cj-1] + (d,-1) and sides[cj..ci-1] + (d,+1).  Every curve chord
// joining the two groups picks up a crossing with the new edge, ordered
// along the diagonal by the boundary position of its group-one endpoint
// (disjoint chords meet a diagonal of a convex disk in that order).
inline void cut_face(RewriteState& st, int f, int ci, int cj,
                     const std::string& name) {
  const auto& sides = st.s.faces[f].sides;
  int n = (int)sides.size();
  if (ci == cj || ci < 0 || cj < 0 || ci >= n || cj >= n)
    throw invalid_input("cut_face: bad corners");
  // Boundary points of face f in cyclic order: per side, the slots of all
  // crossings on that edge, walked in the direction the face traverses it.
  std::vector<std::vector<std::int64_t>> edge_slots(st.s.num_edges());
  for (auto& c : st.curves)
    for (auto& x : c.xs) edge_slots[x.edge].push_back(x.slot);
  for (auto& v : edge_slots) {
    std::sort(v.begin(), v.end());
    if (std::adjacent_find(v.begin(), v.end()) != v.end())
      throw invalid_input("cut_face: duplicate slot on an edge");
  }
  std::map<std::pair<int, std::int64_t>, long long> ord;  // (side idx, slot)
  long long next_ord = 0;
  for (int t0 = 0; t0 < n; t0++) {
    int t = (ci + t0) % n;  // start counting at corner ci
    auto& v = edge_slots[sides[t].edge];
    for (size_t r = 0; r < v.size(); r++) {
      std::int64_t slot = sides[t].sign > 0 ? v[r] : v[v.size() - 1 - r];
      ord[{t, slot}] = next_ord++;
    }
  }
  auto group = [&](int t) {
    return ((t - ci + n) % n) < ((cj - ci + n) % n) ? 1 : 2;
  };
  struct Hit {
    int curve, k, dir;
    long long key;
  };
  std::vector<Hit> hits;
  for (int c = 0; c < (int)st.curves.size(); c++) {
    auto& xs = st.curves[c].xs;
    int m = (int)xs.size();
    for (int k = 0; k < m; k++) {
      const Crossing& a = xs[k];
      const Crossing& b = xs[(k + 1) % m];
      SideRef from = st.s.copy(a.edge, a.sign);
      if (from.face != f) continue;
      SideRef to = st.s.copy(b.edge, -b.sign);
      if (to.face != f)
        throw invalid_input("cut_face: inconsistent chord");
      int g1 = group(from.index), g2 = group(to.index);
      if (g1 == g2) continue;
      long long key = g1 == 1 ? ord.at({from.index, a.slot})
                              : ord.at({to.index, b.slot});
      hits.push_back({c, k, g1 == 1 ? +1 : -1, key});
    }
  }
  std::sort(hits.begin(), hits.end(),
            [](const Hit& a, const Hit& b) { return a.key < b.key; });
  int d = st.s.num_edges();
  for (size_t r = 0; r + 1 < hits.size(); r++)
    if (hits[r].key == hits[r + 1].key)
      throw std::logic_error("cut_face: tied boundary points");
  // Insert back-to-front per curve so chord indices stay valid.
  std::vector<std::vector<std::pair<int, Crossing>>> ins(st.curves.size());
  for (size_t r = 0; r < hits.size(); r++)
    ins[hits[r].curve].push_back(
        {hits[r].k, Crossing{d, hits[r].dir, (std::int64_t)r}});
  for (int c = 0; c < (int)st.curves.size(); c++) {
    auto& v = ins[c];
    std::sort(v.begin(), v.end(),
              [](auto& a, auto& b) { return a.first > b.first; });
    for (auto& [k, x] : v)
      st.curves[c].xs.insert(st.curves[c].xs.begin() + k + 1, x);
  }
  Face f1, f2;
  for (int t = ci; t != cj; t = (t + 1) % n) f1.sides.push_back(sides[t]);
  f1.sides.push_back({d, -1});
  for (int t = cj; t != ci; t = (t + 1) % n) f2.sides.push_back(sides[t]);
  f2.sides.push_back({d, +1});
  st.s.edge_names.push_back(name);
  st.s.faces[f] = f1;
  st.s.faces.push_back(f2);
  st.s.finalize();
}

// Cancel the adjacent side pair (t, t+1) of face `f`: the two sides must be
// opposite copies of one edge.  Zipping them is a homeomorphism of the
// surface; curve crossings of that edge simply drop out.
inline void fold(RewriteState& st, int f, int t) {
  auto& sides = st.s.faces[f].sides;
  int n = (int)sides.size();
  int u = (t + 1) % n;
  if (n <= 2) throw invalid_input("fold: face too small");
  if (sides[t].edge != sides[u].edge || sides[t].sign != -sides[u].sign)
    throw invalid_input("fold: sides do not cancel");
  int e = sides[t].edge;
  Face nf;
  for (int i = 0; i < n; i++)
    if (i != t && i != u) nf.sides.push_back(sides[i]);
  st.s.faces[f] = nf;
  detail::erase_edge_crossings(st, e);
  detail::remove_edge(st, e);
  st.s.finalize();
}

// Reverse the intrinsic direction of edge `e`: copy signs swap, crossing
// signs flip, and slot order along the edge reverses.
inline void flip_edge(RewriteState& st, int e) {
  for (auto& f : st.s.faces)
    for (auto& sd : f.sides)
      if (sd.edge == e) sd.sign = -sd.sign;
  for (auto& c : st.curves)
    for (auto& x : c.xs)
      if (x.edge == e) {
        x.sign = -x.sign;
        x.slot = -x.slot;
      }
  st.s.finalize();
}

namespace detail {

// --- word-level planner for canonicalize ---------------------------------
// A single face is a cyclic word of signed letters (edge index + 1).  The
// planner searches cheap word copies for cut+merge choices and the executor
// replays them on the full complex; the two stay in lockstep.

using PolyWord = std::vector<int>;

inline int word_vertices(const PolyWord& w) {
  int n = (int)w.size();
  std::vector<int> cls(n, -1);
  int k = 0;
  for (int c0 = 0; c0 < n; c0++) {
    if (cls[c0] != -1) continue;
    int c = c0;
    do {
      cls[c] = k;
      int p = -1;
      for (int i = 0; i < n; i++)
        if (w[i] == -w[c]) p = i;
      c = (p + 1) % n;
    } while (cls[c] == -1);
    k++;
  }
  return k;
}

// First adjacent cancelling pair, scanning from index 0 (cyclically).
inline int first_cancel(const PolyWord& w) {
  int n = (int)w.size();
  if (n <= 2) return -1;
  for (int i = 0; i < n; i++)
    if (w[i] == -w[(i + 1) % n]) return i;
  return -1;
}

inline void word_fold_all(PolyWord& w) {
  for (int t; (t = first_cancel(w)) != -1;) {
    int n = (int)w.size(), u = (t + 1) % n;
    PolyWord v;
    for (int i = 0; i < n; i++)
      if (i != t && i != u) v.push_back(w[i]);
    w = v;
  }
}

// Cut at corners (i, j) introducing letter d, then re-merge along `letter`;
// empty result means the merge edge did not separate.
inline PolyWord word_cutmerge(const PolyWord& w, int i, int j, int letter,
                              int d) {
  int n = (int)w.size();
  PolyWord f1, f2;
  for (int t = i; t != j; t = (t + 1) % n) f1.push_back(w[t]);
  f1.push_back(-d);
  for (int t = j; t != i; t = (t + 1) % n) f2.push_back(w[t]);
  f2.push_back(d);
  auto find = [](const PolyWord& fc, int lit) {
    for (int t = 0; t < (int)fc.size(); t++)
      if (fc[t] == lit) return t;
    return -1;
  };
  int p1 = find(f1, letter), p2 = find(f2, -letter);
  if (p1 < 0 || p2 < 0) {
    p1 = find(f2, letter);
    p2 = find(f1, -letter);
    if (p1 < 0 || p2 < 0) return {};
    std::swap(f1, f2);
  }
  PolyWord out;
  for (int t = 1; t < (int)f1.size(); t++)
    out.push_back(f1[(p1 + t) % f1.size()]);
  for (int t = 1; t < (int)f2.size(); t++)
    out.push_back(f2[(p2 + t) % f2.size()]);
  return out;
}

// Best rotation offset reading complete [x,y,x^-1,y^-1] blocks, and the
// number of letters outside those blocks.
inline std::pair<int, int> block_rotation(const PolyWord& w) {
  int n = (int)w.size(), best = 0, best_r = 0;
  for (int r = 0; r < n; r++) {
    int blocks = 0;
    for (int t = 0; t + 3 < n; t += 4) {
      int a = w[(r + t) % n], b = w[(r + t + 1) % n];
      if (w[(r + t + 2) % n] == -a && w[(r + t + 3) % n] == -b)
        blocks++;
      else
        break;
    }
    if (blocks > best) {
      best = blocks;
      best_r = r;
    }
  }
  return {best_r, n - 4 * best};
}

inline long long word_potential(const PolyWord& w) {
  return (long long)(word_vertices(w) - 1) * 1000000 +
         (long long)w.size() * 1000 + block_rotation(w).second;
}

// One planned cut+merge: cut corners (i, j), then merge along the edge
// whose letter sits at position `lpos` of the word the move applies to.
struct WordMove {
  int i = 0, j = 0, lpos = 0;
};

// Dedup key: canonical under rotation and letter renaming.
inline std::string word_key(const PolyWord& w) {
  int n = (int)w.size();
  std::string best;
  for (int r = 0; r < n; r++) {
    std::map<int, int> ren;
    int next = 1;
    std::string k;
    for (int t = 0; t < n; t++) {
      int x = w[(r + t) % n];
      auto it = ren.find(std::abs(x));
      if (it == ren.end()) it = ren.insert({std::abs(x), next++}).first;
      k += std::to_string(x > 0 ? it->second : -it->second) + ",";
    }
    if (best.empty() || k < best) best = k;
  }
  return best;
}

// Bounded best-first search for a cut+merge sequence that strictly lowers
// the word potential.  Handle collection walks plateaus of equal-potential
// words, so single-move greed is not enough; the search explores the
// plateau (never above the start potential) until it finds a descent.
inline std::vector<WordMove> plan_word_moves(const PolyWord& w0) {
  long long cur = word_potential(w0);
  struct Node {
    PolyWord w;
    std::vector<WordMove> seq;
    long long pot = 0;
  };
  auto worse = [](const Node& x, const Node& y) {
    return x.pot != y.pot ? x.pot > y.pot : x.seq.size() > y.seq.size();
  };
  std::priority_queue<Node, std::vector<Node>, decltype(worse)> q(worse);
  std::set<std::string> seen;
  q.push({w0, {}, cur});
  seen.insert(word_key(w0));
  for (int expansions = 0; !q.empty() && expansions < 400; expansions++) {
    Node nd = q.top();
    q.pop();
    int n = (int)nd.w.size(), dmax = 0;
    for (int x : nd.w) dmax = std::max(dmax, std::abs(x));
    std::map<int, int> lpos;  // letter -> a position carrying it
    for (int t = n - 1; t >= 0; t--) lpos[std::abs(nd.w[t])] = t;
    for (int i = 0; i < n; i++)
      for (int j = 0; j < n; j++) {
        if (i == j) continue;
        for (auto& [e, lp] : lpos) {
          PolyWord r = word_cutmerge(nd.w, i, j, e, dmax + 1);
          if (r.empty()) continue;
          word_fold_all(r);
          long long p = word_potential(r);
          if (p > cur) continue;
          std::vector<WordMove> seq = nd.seq;
          seq.push_back({i, j, lp});
          if (p < cur) return seq;
          if ((int)seq.size() >= 8) continue;
          if (!seen.insert(word_key(r)).second) continue;
          q.push({std::move(r), std::move(seq), p});
        }
      }
  }
  throw std::logic_error("canonicalize: planner is stuck");
}

inline PolyWord face_word(const Surface& s) {
  PolyWord w;
  for (auto& sd : s.faces[0].sides) w.push_back((sd.edge + 1) * sd.sign);
  return w;
}

}  // namespace detail

// Compress the surface along `C`: cut along the curve and cap the two scar
// circles with disks.  `C` must be embedded, essential, non-separating and
// disjoint from every curve of the state (which ride along untouched).  The
// genus drops by one; the result is generally a non-standard complex, so
// callers usually follow with canonicalize.
inline void compress_along(RewriteState& st, const Curve& C) {
  int g0 = st.s.genus();
  // Disjointness check against every kept curve.
  for (auto& u : st.curves) {
    std::vector<Curve> pair{u, C};
    separate_slots(pair);
    if (!crossings(st.s, pair[0], pair[1]).empty())
      throw invalid_input("compress_along: curve meets the compressing curve");
  }
  if (!validate_curve(st.s, C).empty())
    throw invalid_input("compress_along: compressing curve is not embedded");
  Arrangement a(st.s, {C});
  int m = (int)C.xs.size();
  // C's slot points subdivide their edges into segments.
  std::vector<std::vector<std::int64_t>> cut_slots(st.s.num_edges());
  for (auto& x : C.xs) cut_slots[x.edge].push_back(x.slot);
  for (auto& v : cut_slots) std::sort(v.begin(), v.end());
  Surface ns;
  std::vector<std::vector<int>> seg_id(st.s.num_edges());
  for (int e = 0; e < st.s.num_edges(); e++) {
    int parts = (int)cut_slots[e].size() + 1;
    for (int i = 0; i < parts; i++) {
      seg_id[e].push_back((int)ns.edge_names.size());
      ns.edge_names.push_back(st.s.edge_names[e] +
                              (parts > 1 ? "." + std::to_string(i) : ""));
    }
  }
  std::vector<int> chordL(m), chordR(m);
  for (int k = 0; k < m; k++) {
    chordL[k] = (int)ns.edge_names.size();
    ns.edge_names.push_back("scarL" + std::to_string(k));
    chordR[k] = (int)ns.edge_names.size();
    ns.edge_names.push_back("scarR" + std::to_string(k));
  }
  // Faces of the cut-open surface: the arrangement faces, with chord darts
  // resolved to the scar copy on the dart's left.
  auto& darts = a.darts();
  std::vector<char> seen(darts.size(), 0);
  for (int d0 = 0; d0 < (int)darts.size(); d0++) {
    if (seen[d0]) continue;
    Face f;
    int d = d0;
    do {
      seen[d] = 1;
      const auto& dt = darts[d];
      if (dt.is_chord)
        f.sides.push_back({dt.along ? chordL[dt.chord] : chordR[dt.chord],
                           dt.along ? +1 : -1});
      else
        f.sides.push_back({seg_id[dt.edge][dt.seg], dt.along ? +1 : -1});
      d = a.next_left(d);
    } while (d != d0);
    ns.faces.push_back(f);
  }
  Face capL, capR;
  for (int k = m - 1; k >= 0; k--) capL.sides.push_back({chordL[k], -1});
  for (int k = 0; k < m; k++) capR.sides.push_back({chordR[k], +1});
  ns.faces.push_back(capL);
  ns.faces.push_back(capR);
  try {
    ns.finalize();
  } catch (const invalid_input&) {
    throw invalid_input("compress_along: compressing curve is inessential");
  }
  for (auto& c : st.curves)
    for (auto& x : c.xs) {
      auto& v = cut_slots[x.edge];
      auto it = std::lower_bound(v.begin(), v.end(), x.slot);
      if (it != v.end() && *it == x.slot)
        throw invalid_input("compress_along: slot collision with the curve");
      x.edge = seg_id[x.edge][(int)(it - v.begin())];
    }
  st.s = ns;
  if (st.s.genus() != g0 - 1)
    throw std::logic_error("compress_along: genus did not drop");
  for (auto& c : st.curves)
    if (!validate_curve(st.s, c).empty())
      throw std::logic_error("compress_along: curve broke");
}

// Bring the complex to the standard 4g-gon, transporting the curves.  The
// result satisfies Surface::is_standard(); curve validity, genus and all
// pairwise algebraic intersection numbers are preserved.
inline void canonicalize(RewriteState& st) {
  using namespace detail;
  int g0 = st.s.genus();
  int nc = (int)st.curves.size();
  std::vector<std::vector<long long>> alg0(nc, std::vector<long long>(nc, 0));
  for (int i = 0; i < nc; i++)
    for (int j = i + 1; j < nc; j++)
      alg0[i][j] = algebraic_int(st.s, st.curves[i], st.curves[j]);
  if (g0 < 1) throw invalid_input("canonicalize: genus must be >= 1");

  // One face.
  while (st.s.faces.size() > 1) {
    int pick = -1;
    for (int e = 0; e < st.s.num_edges() && pick < 0; e++)
      if (st.s.copy(e, +1).face != st.s.copy(e, -1).face) pick = e;
    if (pick < 0) throw std::logic_error("disconnected complex");
    merge_faces(st, pick);
  }
  for (int t; (t = first_cancel(face_word(st.s))) != -1;) fold(st, 0, t);

  // One vertex, then collected handles, by planned cut+merge rounds: the
  // word-level search plans a potential-lowering move sequence and the
  // executor replays it on the full complex.  The simulated and executed
  // words stay positionally aligned; merges and folds renumber edges, so
  // the letters match only up to a sign-consistent bijection, which also
  // maps planned merge letters to complex edges.
  int fresh = 0;
  for (int round = 0; round < 1000; round++) {
    PolyWord w = face_word(st.s);
    if (word_vertices(w) == 1 && block_rotation(w).second == 0) break;
    auto seq = plan_word_moves(w);
    PolyWord sim = w;
    for (auto& mv : seq) {
      PolyWord wexec = face_word(st.s);
      int dmax = 0;
      for (int x : sim) dmax = std::max(dmax, std::abs(x));
      PolyWord next = word_cutmerge(sim, mv.i, mv.j,
                                    std::abs(sim[mv.lpos]), dmax + 1);
      word_fold_all(next);
      std::string name = "cut" + std::to_string(fresh++);
      cut_face(st, 0, mv.i, mv.j, name);
      merge_faces(st, std::abs(wexec[mv.lpos]) - 1);
      for (int t; (t = first_cancel(face_word(st.s))) != -1;) fold(st, 0, t);
      PolyWord got = face_word(st.s);
      bool same = got.size() == next.size();
      std::map<int, int> s2g;
      std::set<int> images;
      for (size_t t = 0; same && t < got.size(); t++) {
        int p = next[t] > 0 ? next[t] : -next[t];
        int gl = next[t] > 0 ? got[t] : -got[t];
        auto [it, ins] = s2g.insert({p, gl});
        if (!ins && it->second != gl) same = false;
        if (ins && !images.insert(gl).second) same = false;
      }
      if (!same) throw std::logic_error("canonicalize: planner diverged");
      sim = next;
    }
  }

  // Orient block letters positively at their first block position.
  for (bool again = true; again;) {
    again = false;
    PolyWord w = face_word(st.s);
    auto [r, rest] = block_rotation(w);
    if (rest != 0) throw std::logic_error("canonicalize: not in block form");
    int n = (int)w.size();
    for (int t = 0; t < n && !again; t += 4)
      for (int q = 0; q < 2 && !again; q++) {
        int x = w[(r + t + q) % n];
        if (x < 0) {
          flip_edge(st, -x - 1);
          again = true;
        }
      }
  }

  // Rename edges to the standard a1,b1,... order and rebuild as standard(g).
  PolyWord w = face_word(st.s);
  int r = block_rotation(w).first;
  int n = (int)w.size(), g = n / 4;
  if (g != g0) throw std::logic_error("canonicalize: genus changed");
  std::vector<int> to_new(st.s.num_edges(), -1);
  for (int t = 0; t < n; t += 4) {
    int x = w[(r + t) % n], y = w[(r + t + 1) % n];
    to_new[x - 1] = 2 * (t / 4);      // a_{t/4+1}
    to_new[y - 1] = 2 * (t / 4) + 1;  // b_{t/4+1}
  }
  Surface std_s = Surface::standard(g);
  for (auto& c : st.curves)
    for (auto& x : c.xs) {
      if (to_new[x.edge] < 0)
        throw std::logic_error("canonicalize: unmapped edge");
      x.edge = to_new[x.edge];
    }
  st.s = std_s;

  if (!st.s.is_standard()) throw std::logic_error("canonicalize: not standard");
  for (auto& c : st.curves)
    if (!validate_curve(st.s, c).empty())
      throw std::logic_error("canonicalize: curve broke");
  for (int i = 0; i < nc; i++)
    for (int j = i + 1; j < nc; j++)
      if (algebraic_int(st.s, st.curves[i], st.curves[j]) != alg0[i][j])
        throw std::logic_error("canonicalize: intersection pairing changed");
}

}  // namespace tricurves
