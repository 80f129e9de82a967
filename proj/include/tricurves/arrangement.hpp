#pragma once
// Exact arrangement of a curve collection on a polygon complex.
//
// Each curve is a cyclic crossing sequence; between consecutive crossings it
// runs as a chord through the interior of one face.  Boundary points of a
// face are realized on the parabola y = x^2 at irregular integer abscissae
// (convex position preserving the cyclic boundary order), so chord-chord
// crossing order along a chord is decided by exact rational comparison.
// Exact ties (three concurrent chords) are perturbed by re-salting the
// abscissae; a persistent tie is reported as a degenerate arrangement.
//
// The glued 1-skeleton (complex edges subdivided at slot points, chords
// subdivided at crossings) carries a rotation system; its faces are disks,
// and complement regions of any sub-collection of the curves are obtained
// by merging faces across non-cutting segments.

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <functional>
#include <map>
#include <tuple>

#include "tricurves/surface.hpp"

namespace tricurves {

using bigint = boost::multiprecision::cpp_int;

struct CrossingPoint {
  int curve_a = -1, chord_a = -1;  // (curve id, chord index), curve_a <= curve_b
  int curve_b = -1, chord_b = -1;
  int sign = 0;  // sign of det(dir_a, dir_b): curve_b crossing curve_a
};

class Arrangement {
 public:
  Arrangement(const Surface& s, std::vector<Curve> curves)
      : s_(&s), curves_(std::move(curves)) {
    for (int salt = 0; salt < 64; salt++) {
      if (try_build(salt)) return;
      clear();
    }
    throw invalid_input("degenerate arrangement: persistent chord tie");
  }

  const Surface& surface() const { return *s_; }
  const std::vector<Curve>& curves() const { return curves_; }

  // --- planar graph ---
  struct Vertex {
    enum Kind { kCorner, kSlot, kCross } kind;
    int curve = -1, xi = -1;        // kSlot: curve crossing
    int cross = -1;                 // kCross: index into crossings()
  };
  struct Dart {
    int tail = -1;
    int twin = -1;
    int rot_next = -1;   // next dart ccw around tail
    bool is_chord = false;
    int curve = -1, chord = -1;  // chord segments
    bool along = false;          // agrees with curve / edge orientation
    int edge = -1, seg = -1;     // complex-edge segments
  };

  const std::vector<Vertex>& vertices() const { return verts_; }
  const std::vector<Dart>& darts() const { return darts_; }
  const std::vector<CrossingPoint>& crossings() const { return cross_; }
  int num_faces() const { return num_faces_; }
  int face_left(int d) const { return face_of_[d]; }
  int rot_prev(int d) const { return rot_prev_[d]; }
  // First dart of a vertex's rotation; for slot vertices this is the
  // edge segment toward larger slots ("seg up").
  int first_dart(int v) const { return first_dart_[v]; }
  // Next dart along the boundary of the face to the left.
  int next_left(int d) const { return rot_prev_[darts_[d].twin]; }

  int slot_vertex(int curve, int xi) const { return slot_vert_[curve][xi]; }

  // Crossing point ids in traversal order along curve c (chord by chord).
  const std::vector<int>& along_curve(int c) const { return along_[c]; }

  // All crossing points between two given curve ids (a <= b order in record).
  std::vector<CrossingPoint> crossings_between(int ca, int cb) const {
    int lo = std::min(ca, cb), hi = std::max(ca, cb);
    std::vector<CrossingPoint> out;
    for (auto& x : cross_)
      if (x.curve_a == lo && x.curve_b == hi && (lo != hi || ca == cb))
        out.push_back(x);
    return out;
  }

  // --- complement regions of a sub-collection of the curves ---
  struct BoundaryCircle {
    std::vector<int> darts;  // cutting darts, region on the left
  };
  struct Region {
    int chi = 0;
    std::vector<int> faces;
    std::vector<BoundaryCircle> circles;
    // (curve id, number of maximal boundary arcs of that curve) per circle,
    // sorted by curve id.
    std::vector<std::vector<std::pair<int, int>>> traces() const { return tr_; }
    std::vector<std::vector<std::pair<int, int>>> tr_;
  };

  std::vector<Region> regions(const std::vector<int>& cutting_curves) const {
    std::vector<char> cut(curves_.size(), 0);
    for (int c : cutting_curves) cut[c] = 1;
    auto cutting = [&](int d) {
      return darts_[d].is_chord && cut[darts_[d].curve];
    };
    // Union faces across non-cutting segments.
    std::vector<int> uf(num_faces_);
    for (int i = 0; i < num_faces_; i++) uf[i] = i;
    std::function<int(int)> find = [&](int x) {
      while (uf[x] != x) x = uf[x] = uf[uf[x]];
      return x;
    };
    for (int d = 0; d < (int)darts_.size(); d++)
      if (!cutting(d)) uf[find(face_of_[d])] = find(face_of_[darts_[d].twin]);
    std::map<int, int> region_id;
    std::vector<Region> regs;
    std::vector<int> rof(num_faces_);
    for (int f = 0; f < num_faces_; f++) {
      int r = find(f);
      auto [it, fresh] = region_id.try_emplace(r, (int)regs.size());
      if (fresh) regs.emplace_back();
      rof[f] = it->second;
      regs[it->second].faces.push_back(f);
    }
    // chi = V' - E' + F over the cut-open region.
    std::vector<int> V(regs.size(), 0), E(regs.size(), 0);
    for (int d = 0; d < (int)darts_.size(); d++) {
      if (cutting(d)) {
        E[rof[face_of_[d]]]++;  // one boundary edge per side
      } else if (d < darts_[d].twin) {
        E[rof[face_of_[d]]]++;  // interior edge, once
      }
    }
    // Vertex copies: maximal ccw runs of sectors not separated by a cutting
    // dart.  The sector between darts d and rot_next(d) lies in face_left(d).
    for (int v = 0; v < (int)verts_.size(); v++) {
      int d0 = first_dart_[v];
      int ncut = 0;
      for (int d = d0;;) {
        if (cutting(d) || cutting(darts_[d].twin)) ncut++;
        d = darts_[d].rot_next;
        if (d == d0) break;
      }
      if (ncut == 0) {
        V[rof[face_of_[d0]]]++;
        continue;
      }
      for (int d = d0;;) {  // one copy per cutting dart's following run
        if (cutting(d) || cutting(darts_[d].twin)) V[rof[face_of_[d]]]++;
        d = darts_[d].rot_next;
        if (d == d0) break;
      }
    }
    for (size_t r = 0; r < regs.size(); r++)
      regs[r].chi = V[r] - E[r] + (int)regs[r].faces.size();
    // Boundary circles: trace cutting darts with region on the left.
    std::vector<char> seen(darts_.size(), 0);
    for (int d0 = 0; d0 < (int)darts_.size(); d0++) {
      if (!cutting(d0) || seen[d0]) continue;
      Region& R = regs[rof[face_of_[d0]]];
      BoundaryCircle circ;
      int d = d0;
      do {
        seen[d] = 1;
        circ.darts.push_back(d);
        int k = next_left(d);
        while (!cutting(k)) k = next_left(darts_[k].twin);
        d = k;
      } while (d != d0);
      R.circles.push_back(std::move(circ));
    }
    for (auto& R : regs) {
      for (auto& c : R.circles) {
        // maximal runs of the same curve around the circle
        std::map<int, int> runs;
        int n = (int)c.darts.size();
        for (int i = 0; i < n; i++) {
          int cur = darts_[c.darts[i]].curve;
          int prev = darts_[c.darts[(i + n - 1) % n]].curve;
          if (cur != prev || n == 0) runs[cur]++;
        }
        if (runs.empty() && n > 0)  // whole circle one curve
          runs[darts_[c.darts[0]].curve] = 1;
        R.tr_.push_back({runs.begin(), runs.end()});
      }
    }
    return regs;
  }

  std::vector<int> all_curve_ids() const {
    std::vector<int> v(curves_.size());
    for (size_t i = 0; i < v.size(); i++) v[i] = (int)i;
    return v;
  }

 private:
  const Surface* s_;
  std::vector<Curve> curves_;
  std::vector<Vertex> verts_;
  std::vector<Dart> darts_;
  std::vector<int> rot_prev_, face_of_, first_dart_;
  std::vector<std::vector<int>> slot_vert_;
  std::vector<std::vector<int>> along_;
  std::vector<CrossingPoint> cross_;
  int num_faces_ = 0;

  void clear() {
    verts_.clear();
    darts_.clear();
    rot_prev_.clear();
    face_of_.clear();
    first_dart_.clear();
    slot_vert_.clear();
    along_.clear();
    cross_.clear();
    num_faces_ = 0;
  }

  static std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
  }

  struct BPt {
    int curve, xi, copy_sign;
  };

  bool try_build(int salt) {
    const Surface& s = *s_;
    int nc = (int)curves_.size();
    // Per-edge crossing order.
    std::vector<std::vector<std::pair<std::int64_t, std::pair<int, int>>>>
        per_edge(s.num_edges());
    for (int c = 0; c < nc; c++) {
      if (curves_[c].xs.empty()) throw invalid_input("curve with zero crossings");
      for (int k = 0; k < (int)curves_[c].xs.size(); k++) {
        auto& x = curves_[c].xs[k];
        per_edge[x.edge].push_back({x.slot, {c, k}});
      }
    }
    std::vector<std::vector<int>> rank(nc);
    for (int c = 0; c < nc; c++) rank[c].resize(curves_[c].xs.size());
    for (auto& v : per_edge) {
      std::sort(v.begin(), v.end());
      for (size_t i = 0; i < v.size(); i++) {
        if (i && v[i].first == v[i - 1].first)
          throw invalid_input("duplicate slot on edge");
        rank[v[i].second.first][v[i].second.second] = (int)i;
      }
    }
    // Boundary points of each face, in ccw boundary order.
    int nf = (int)s.faces.size();
    std::vector<std::vector<BPt>> fpts(nf);
    // position of crossing point on the +1 / -1 copy of its edge
    std::vector<std::vector<std::array<std::pair<int, int>, 2>>> ppos(nc);
    for (int c = 0; c < nc; c++) ppos[c].resize(curves_[c].xs.size());
    for (int f = 0; f < nf; f++) {
      for (auto& sd : s.faces[f].sides) {
        auto& xs = per_edge[sd.edge];
        int n = (int)xs.size();
        for (int j = 0; j < n; j++) {
          int r = sd.sign > 0 ? j : n - 1 - j;
          auto [c, k] = xs[r].second;
          ppos[c][k][sd.sign > 0 ? 0 : 1] = {f, (int)fpts[f].size()};
          fpts[f].push_back({c, k, sd.sign});
        }
      }
    }
    auto coord_x = [&](int pos) -> std::int64_t {
      return (std::int64_t)pos * (1 << 21) +
             (std::int64_t)(mix((std::uint64_t)pos * 1315423911ull + salt) &
                            0xFFFFF);
    };
    // Chords: chord k of curve c runs from the exit point of crossing k
    // (copy (e_k, sign_k)) to the entry point of crossing k+1 (copy
    // (e_{k+1}, -sign_{k+1})); both must lie in the same face.
    struct ChordGeo {
      int face, p_from, p_to;
      bigint x1, y1, x2, y2;
    };
    std::vector<std::vector<ChordGeo>> chords(nc);
    for (int c = 0; c < nc; c++) {
      int m = (int)curves_[c].xs.size();
      chords[c].resize(m);
      for (int k = 0; k < m; k++) {
        auto& a = curves_[c].xs[k];
        auto& b = curves_[c].xs[(k + 1) % m];
        auto [f1, p1] = ppos[c][k][a.sign > 0 ? 0 : 1];
        auto [f2, p2] = ppos[c][(k + 1) % m][b.sign > 0 ? 1 : 0];
        if (f1 != f2)
          throw invalid_input("inconsistent chord: crossing sequence not closed");
        bigint x1 = coord_x(p1), x2 = coord_x(p2);
        chords[c][k] = {f1, p1, p2, x1, x1 * x1, x2, x2 * x2};
      }
    }
    // Chord-chord crossings, grouped per face; interleaving test by position.
    struct XOnChord {
      bigint num, den;  // parameter along this chord, den > 0
      int cross_id;
    };
    std::vector<std::vector<std::vector<XOnChord>>> on_chord(nc);
    for (int c = 0; c < nc; c++)
      on_chord[c].resize(curves_[c].xs.size());
    std::vector<std::vector<std::pair<int, int>>> face_chords(nf);
    for (int c = 0; c < nc; c++)
      for (int k = 0; k < (int)chords[c].size(); k++)
        face_chords[chords[c][k].face].push_back({c, k});
    auto interleave = [](int a1, int a2, int b1, int b2) {
      int lo = std::min(a1, a2), hi = std::max(a1, a2);
      bool i1 = b1 > lo && b1 < hi, i2 = b2 > lo && b2 < hi;
      return i1 != i2;
    };
    for (int f = 0; f < nf; f++) {
      auto& fc = face_chords[f];
      for (size_t i = 0; i < fc.size(); i++) {
        for (size_t j = i + 1; j < fc.size(); j++) {
          auto [ca, ka] = fc[i];
          auto [cb, kb] = fc[j];
          auto& A = chords[ca][ka];
          auto& B = chords[cb][kb];
          if (!interleave(A.p_from, A.p_to, B.p_from, B.p_to)) continue;
          // P + t (Q - P) meets segment R-S:  t = cross(R-P, S-R)/cross(Q-P, S-R)
          bigint dax = A.x2 - A.x1, day = A.y2 - A.y1;
          bigint dbx = B.x2 - B.x1, dby = B.y2 - B.y1;
          bigint den = dax * dby - day * dbx;
          if (den == 0) return false;  // parallel yet interleaved: resalt
          bigint rx = B.x1 - A.x1, ry = B.y1 - A.y1;
          bigint ta_num = rx * dby - ry * dbx;  // / den
          bigint tb_num = rx * day - ry * dax;  // / den  (param along B)
          int sgn = den > 0 ? +1 : -1;
          int id = (int)cross_.size();
          cross_.push_back({ca, ka, cb, kb, sgn});
          bigint aden = den, anum = ta_num, bden = den, bnum = tb_num;
          if (aden < 0) { aden = -aden; anum = -anum; }
          if (bden < 0) { bden = -bden; bnum = -bnum; }
          on_chord[ca][ka].push_back({anum, aden, id});
          on_chord[cb][kb].push_back({bnum, bden, id});
        }
      }
    }
    // Sort crossings along each chord; exact ties force a resalt.
    bool tie = false;
    for (int c = 0; c < nc && !tie; c++) {
      for (auto& v : on_chord[c]) {
        std::sort(v.begin(), v.end(), [](const XOnChord& a, const XOnChord& b) {
          return a.num * b.den < b.num * a.den;
        });
        for (size_t i = 1; i < v.size(); i++)
          if (v[i].num * v[i - 1].den == v[i - 1].num * v[i].den) tie = true;
      }
    }
    if (tie) {
      cross_.clear();
      return false;
    }
    along_.assign(nc, {});
    for (int c = 0; c < nc; c++)
      for (auto& v : on_chord[c])
        for (auto& x : v) along_[c].push_back(x.cross_id);
    // --- vertices ---
    int vc = s.num_vertices();
    for (int i = 0; i < vc; i++) verts_.push_back({Vertex::kCorner});
    slot_vert_.resize(nc);
    for (int c = 0; c < nc; c++) {
      for (int k = 0; k < (int)curves_[c].xs.size(); k++) {
        slot_vert_[c].push_back((int)verts_.size());
        verts_.push_back({Vertex::kSlot, c, k});
      }
    }
    std::vector<int> cross_vert(cross_.size());
    for (int i = 0; i < (int)cross_.size(); i++) {
      cross_vert[i] = (int)verts_.size();
      Vertex v{Vertex::kCross};
      v.cross = i;
      verts_.push_back(v);
    }
    // --- darts ---
    auto new_pair = [&](int tail, int head) {
      int d = (int)darts_.size();
      darts_.push_back({});
      darts_.push_back({});
      darts_[d].tail = tail;
      darts_[d].twin = d + 1;
      darts_[d + 1].tail = head;
      darts_[d + 1].twin = d;
      return d;
    };
    // complex-edge segments; seg j runs point j-1 -> point j (point -1 and
    // point n are the corner vertices at the edge ends)
    std::vector<std::vector<int>> eseg(s.num_edges());  // forward darts
    for (int e = 0; e < s.num_edges(); e++) {
      SideRef pr = s.copy(e, +1);
      int n = (int)s.faces[pr.face].sides.size();
      int v_start = s.vertex_of(pr.face, pr.index);
      int v_end = s.vertex_of(pr.face, (pr.index + 1) % n);
      auto& xs = per_edge[e];
      int prev = v_start;
      for (int j = 0; j <= (int)xs.size(); j++) {
        int head = j < (int)xs.size()
                       ? slot_vert_[xs[j].second.first][xs[j].second.second]
                       : v_end;
        int d = new_pair(prev, head);
        darts_[d].edge = darts_[d + 1].edge = e;
        darts_[d].seg = darts_[d + 1].seg = j;
        darts_[d].along = true;
        eseg[e].push_back(d);
        prev = head;
      }
    }
    // chord segments; along each chord: slot -> crossings (sorted) -> slot
    std::vector<std::vector<std::vector<int>>> cseg(nc);  // forward darts
    for (int c = 0; c < nc; c++) {
      int m = (int)curves_[c].xs.size();
      cseg[c].resize(m);
      for (int k = 0; k < m; k++) {
        int prev = slot_vert_[c][k];
        for (size_t j = 0; j <= on_chord[c][k].size(); j++) {
          int head = j < on_chord[c][k].size()
                         ? cross_vert[on_chord[c][k][j].cross_id]
                         : slot_vert_[c][(k + 1) % m];
          int d = new_pair(prev, head);
          darts_[d].is_chord = darts_[d + 1].is_chord = true;
          darts_[d].curve = darts_[d + 1].curve = c;
          darts_[d].chord = darts_[d + 1].chord = k;
          darts_[d].along = true;
          cseg[c][k].push_back(d);
          prev = head;
        }
      }
    }
    // --- rotation system (ccw) ---
    std::vector<std::vector<int>> rot(verts_.size());
    // corner vertices: one dart per corner, corners in ccw orbit order
    {
      std::vector<char> done(vc, 0);
      for (int f = 0; f < nf; f++) {
        for (int ci = 0; ci < (int)s.faces[f].sides.size(); ci++) {
          int v = s.vertex_of(f, ci);
          if (done[v]) continue;
          done[v] = 1;
          std::vector<int> seq;
          int cf = f, cc = ci;
          do {  // corner orbit (clockwise); reverse below for ccw
            const Side& sd = s.faces[cf].sides[cc];
            int d;
            if (sd.sign > 0)
              d = eseg[sd.edge].front();  // from edge start, outward
            else
              d = darts_[eseg[sd.edge].back()].twin;  // from edge end, outward
            seq.push_back(d);
            auto [nfc, ncc] = s.next_corner_ccw(cf, cc);
            cf = nfc;
            cc = ncc;
          } while (!(cf == f && cc == ci));
          std::reverse(seq.begin(), seq.end());
          rot[v] = seq;
        }
      }
    }
    // slot vertices: ccw = [seg_up, chord in +copy face, seg_down, other]
    for (int c = 0; c < nc; c++) {
      int m = (int)curves_[c].xs.size();
      for (int k = 0; k < m; k++) {
        auto& x = curves_[c].xs[k];
        int r = rank[c][k];
        int seg_up = eseg[x.edge][r + 1];
        int seg_down = darts_[eseg[x.edge][r]].twin;
        int chord_exit = cseg[c][k].front();
        int chord_enter = darts_[cseg[c][(k + m - 1) % m].back()].twin;
        int plus = x.sign > 0 ? chord_exit : chord_enter;
        int minus = x.sign > 0 ? chord_enter : chord_exit;
        rot[slot_vert_[c][k]] = {seg_up, plus, seg_down, minus};
      }
    }
    // crossing vertices
    for (int i = 0; i < (int)cross_.size(); i++) {
      auto& X = cross_[i];
      auto pos_in = [&](int c, int k) {
        auto& v = on_chord[c][k];
        for (size_t j = 0; j < v.size(); j++)
          if (v[j].cross_id == i) return (int)j;
        throw std::logic_error("crossing not on chord");
      };
      int ja = pos_in(X.curve_a, X.chord_a), jb = pos_in(X.curve_b, X.chord_b);
      int a_in = darts_[cseg[X.curve_a][X.chord_a][ja]].twin;
      int a_out = cseg[X.curve_a][X.chord_a][ja + 1];
      int b_in = darts_[cseg[X.curve_b][X.chord_b][jb]].twin;
      int b_out = cseg[X.curve_b][X.chord_b][jb + 1];
      if (X.sign > 0)
        rot[cross_vert[i]] = {a_out, b_out, a_in, b_in};
      else
        rot[cross_vert[i]] = {a_out, b_in, a_in, b_out};
    }
    // flatten
    rot_prev_.assign(darts_.size(), -1);
    first_dart_.assign(verts_.size(), -1);
    for (int v = 0; v < (int)verts_.size(); v++) {
      auto& seq = rot[v];
      if (seq.empty()) throw std::logic_error("isolated vertex");
      first_dart_[v] = seq[0];
      for (size_t i = 0; i < seq.size(); i++) {
        int d = seq[i], nd = seq[(i + 1) % seq.size()];
        darts_[d].rot_next = nd;
        rot_prev_[nd] = d;
      }
    }
    // faces by tracing next_left
    face_of_.assign(darts_.size(), -1);
    for (int d0 = 0; d0 < (int)darts_.size(); d0++) {
      if (face_of_[d0] != -1) continue;
      int f = num_faces_++;
      int d = d0;
      do {
        face_of_[d] = f;
        d = next_left(d);
      } while (d != d0);
    }
    // Euler characteristic sanity check of the whole construction.
    int chi = (int)verts_.size() - (int)darts_.size() / 2 + num_faces_;
    if (chi != s.euler_characteristic())
      throw std::logic_error("arrangement euler characteristic mismatch");
    return true;
  }
};

// All crossing points between two curves (placed alone on the surface).
inline std::vector<CrossingPoint> crossings(const Surface& s, const Curve& c,
                                            const Curve& cp) {
  Arrangement a(s, {c, cp});
  return a.crossings_between(0, 1);
}

// Signed intersection sum, isotopy invariant; computed without tightening.
inline long long algebraic_int(const Surface& s, const Curve& c,
                               const Curve& cp) {
  long long n = 0;
  for (auto& x : crossings(s, c, cp)) n += x.sign;
  return n;
}

struct ComplementRegion {
  int chi = 0;
  int boundary_circles = 0;
  // per circle: (curve index in input list, maximal arc count), sorted
  std::vector<std::vector<std::pair<int, int>>> traces;
};

inline std::vector<ComplementRegion> complement_components(
    const Surface& s, const std::vector<Curve>& curves) {
  Arrangement a(s, curves);
  std::vector<ComplementRegion> out;
  for (auto& r : a.regions(a.all_curve_ids())) {
    ComplementRegion cr;
    cr.chi = r.chi;
    cr.boundary_circles = (int)r.circles.size();
    cr.traces = r.tr_;
    out.push_back(std::move(cr));
  }
  return out;
}

// Diagnostic validation of a single curve.
inline std::vector<std::string> validate_curve(const Surface& s,
                                               const Curve& c) {
  std::vector<std::string> bad;
  if (c.xs.empty()) {
    bad.push_back("inessential or off-model: zero crossings");
    return bad;
  }
  std::set<std::pair<int, std::int64_t>> slots;
  for (auto& x : c.xs) {
    if (x.edge < 0 || x.edge >= s.num_edges()) {
      bad.push_back("unknown edge");
      return bad;
    }
    if (!slots.insert({x.edge, x.slot}).second)
      bad.push_back("duplicate slot on edge " + s.edge_names[x.edge]);
  }
  if (!bad.empty()) return bad;
  try {
    Arrangement a(s, {c});
    if (!a.crossings().empty()) bad.push_back("self-crossing");
  } catch (const invalid_input& e) {
    bad.push_back(e.what());
  }
  return bad;
}

}  // namespace tricurves
