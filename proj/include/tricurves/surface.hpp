#pragma once
// Combinatorial model of a closed orientable surface as a polygon complex:
// a set of oriented polygonal faces whose sides are glued in pairs along
// abstract edges.  The standard genus-g surface is a single 4g-gon with
// boundary word a1 b1 a1^-1 b1^-1 ... ag bg ag^-1 bg^-1.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace tricurves {

struct invalid_input : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One side of a face: an oriented copy of edge `edge` (sign = +1 for the
// copy traversed in the edge's intrinsic direction, -1 for the reverse).
struct Side {
  int edge = 0;
  int sign = +1;
  friend bool operator==(const Side&, const Side&) = default;
};

struct Face {
  std::vector<Side> sides;
};

// Location of one copy of an edge in the complex.
struct SideRef {
  int face = -1;
  int index = -1;  // position in faces[face].sides
  friend bool operator==(const SideRef&, const SideRef&) = default;
};

class Surface {
 public:
  std::vector<Face> faces;
  std::vector<std::string> edge_names;

  int num_edges() const { return (int)edge_names.size(); }

  // Both copies of each edge; copy(e, +1) first.
  const SideRef& copy(int edge, int sign) const {
    return sign > 0 ? pos_[edge] : neg_[edge];
  }
  const Side& side(const SideRef& r) const {
    return faces[r.face].sides[r.index];
  }

  // Validates the gluing and builds lookup tables.  Throws invalid_input.
  void finalize() {
    pos_.assign(num_edges(), SideRef{});
    neg_.assign(num_edges(), SideRef{});
    std::vector<int> seen_pos(num_edges(), 0), seen_neg(num_edges(), 0);
    for (int f = 0; f < (int)faces.size(); f++) {
      if (faces[f].sides.empty()) throw invalid_input("empty face");
      for (int i = 0; i < (int)faces[f].sides.size(); i++) {
        const Side& s = faces[f].sides[i];
        if (s.edge < 0 || s.edge >= num_edges())
          throw invalid_input("side references unknown edge");
        if (s.sign != 1 && s.sign != -1)
          throw invalid_input("side sign must be +-1");
        auto& cnt = s.sign > 0 ? seen_pos[s.edge] : seen_neg[s.edge];
        auto& ref = s.sign > 0 ? pos_[s.edge] : neg_[s.edge];
        cnt++;
        ref = SideRef{f, i};
      }
    }
    for (int e = 0; e < num_edges(); e++)
      if (seen_pos[e] != 1 || seen_neg[e] != 1)
        throw invalid_input("edge " + edge_names[e] +
                            " must appear exactly once with each orientation");
    build_vertices();
    if (!connected()) throw invalid_input("surface is not connected");
  }

  int num_sides() const {
    int n = 0;
    for (auto& f : faces) n += (int)f.sides.size();
    return n;
  }

  int num_vertices() const { return num_vertex_classes_; }

  int euler_characteristic() const {
    return num_vertices() - num_edges() + (int)faces.size();
  }

  int genus() const {
    int chi = euler_characteristic();
    if (chi > 2 || (chi & 1)) throw invalid_input("bad euler characteristic");
    return (2 - chi) / 2;
  }

  // Corner i of face f sits between sides i-1 and i; vertex_of(f,i) is its
  // vertex class.
  int vertex_of(int face, int corner) const {
    return corner_class_[corner_id(face, corner)];
  }

  // Next corner counterclockwise around the same vertex.
  std::pair<int, int> next_corner_ccw(int face, int corner) const {
    const Side& s = faces[face].sides[corner];
    SideRef o = copy(s.edge, -s.sign);
    int n = (int)faces[o.face].sides.size();
    return {o.face, (o.index + 1) % n};
  }

  // --- constructions ---

  // Single 4g-gon, edges a1,b1,...,ag,bg, word prod [ai,bi].
  static Surface standard(int g) {
    if (g < 1) throw invalid_input("genus must be >= 1");
    Surface s;
    for (int i = 1; i <= g; i++) {
      s.edge_names.push_back("a" + std::to_string(i));
      s.edge_names.push_back("b" + std::to_string(i));
    }
    Face f;
    for (int i = 0; i < g; i++) {
      int a = 2 * i, b = 2 * i + 1;
      f.sides.push_back({a, +1});
      f.sides.push_back({b, +1});
      f.sides.push_back({a, -1});
      f.sides.push_back({b, -1});
    }
    s.faces.push_back(f);
    s.finalize();
    return s;
  }

  bool is_standard() const {
    if (faces.size() != 1) return false;
    int g;
    try {
      g = genus();
    } catch (const invalid_input&) {
      return false;
    }
    if (g < 1) return false;
    Surface ref = standard(g);
    if (edge_names != ref.edge_names) return false;
    return faces[0].sides == ref.faces[0].sides;
  }

  int edge_index(const std::string& name) const {
    for (int e = 0; e < num_edges(); e++)
      if (edge_names[e] == name) return e;
    throw invalid_input("unknown edge name: " + name);
  }

  int corner_id(int face, int corner) const {
    return face_corner_base_[face] + corner;
  }

 private:
  std::vector<SideRef> pos_, neg_;
  std::vector<int> face_corner_base_;
  std::vector<int> corner_class_;
  int num_vertex_classes_ = 0;

  void build_vertices() {
    face_corner_base_.assign(faces.size() + 1, 0);
    for (size_t f = 0; f < faces.size(); f++)
      face_corner_base_[f + 1] = face_corner_base_[f] + (int)faces[f].sides.size();
    int total = face_corner_base_.back();
    corner_class_.assign(total, -1);
    num_vertex_classes_ = 0;
    for (int f = 0; f < (int)faces.size(); f++) {
      for (int c = 0; c < (int)faces[f].sides.size(); c++) {
        if (corner_class_[corner_id(f, c)] != -1) continue;
        int cls = num_vertex_classes_++;
        int cf = f, cc = c;
        do {
          corner_class_[corner_id(cf, cc)] = cls;
          auto [nf, nc] = next_corner_ccw(cf, cc);
          cf = nf;
          cc = nc;
        } while (corner_class_[corner_id(cf, cc)] == -1);
      }
    }
  }

  bool connected() const {
    if (faces.empty()) return false;
    std::vector<char> vis(faces.size(), 0);
    std::vector<int> stk{0};
    vis[0] = 1;
    while (!stk.empty()) {
      int f = stk.back();
      stk.pop_back();
      for (auto& s : faces[f].sides) {
        int of = copy(s.edge, -s.sign).face;
        if (!vis[of]) {
          vis[of] = 1;
          stk.push_back(of);
        }
      }
    }
    return std::all_of(vis.begin(), vis.end(), [](char c) { return c != 0; });
  }
};

// One crossing of a curve with an edge: the curve passes transversally
// through edge `edge` at slot position `slot`, travelling from the face
// containing copy (edge,-sign) into the face containing copy (edge,+sign).
struct Crossing {
  int edge = 0;
  int sign = +1;
  std::int64_t slot = 0;
  friend bool operator==(const Crossing&, const Crossing&) = default;
  friend auto operator<=>(const Crossing&, const Crossing&) = default;
};

// Closed curve: cyclic sequence of crossings.  An empty sequence is not a
// valid curve (every essential curve on our surfaces meets the edges).
struct Curve {
  std::vector<Crossing> xs;
  friend bool operator==(const Curve&, const Curve&) = default;

  Curve reversed() const {
    Curve r;
    for (auto it = xs.rbegin(); it != xs.rend(); ++it)
      r.xs.push_back({it->edge, -it->sign, it->slot});
    return r;
  }

  // Canonical rotation (for comparisons up to cyclic rotation only).
  Curve canonical_rotation() const {
    Curve best = *this;
    Curve cur = *this;
    for (size_t i = 1; i < xs.size(); i++) {
      std::rotate(cur.xs.begin(), cur.xs.begin() + 1, cur.xs.end());
      if (cur.xs < best.xs) best = cur;
    }
    return best;
  }
};

// Signed intersection count of the curve with each edge (its image in
// first homology, expressed in the dual basis of edge crossing numbers).
inline std::vector<long long> edge_crossing_vector(const Surface& s,
                                                   const Curve& c) {
  std::vector<long long> v(s.num_edges(), 0);
  for (auto& x : c.xs) v[x.edge] += x.sign;
  return v;
}

// Homology class in the basis [a1],[b1],...,[ag],[bg] of the standard
// surface: the a_i coordinate of a class is minus its signed crossing
// count with b_i, and the b_i coordinate is its signed crossing count
// with a_i (so that [a_i] and [b_i] themselves come out as unit vectors).
inline std::vector<long long> homology_class(const Surface& s, const Curve& c) {
  if (!s.is_standard())
    throw invalid_input("homology basis requires the standard surface");
  auto cross = edge_crossing_vector(s, c);
  int g = s.genus();
  std::vector<long long> h(2 * g, 0);
  for (int i = 0; i < g; i++) {
    h[2 * i] = -cross[2 * i + 1];  // [a_i] coordinate
    h[2 * i + 1] = cross[2 * i];   // [b_i] coordinate
  }
  return h;
}

struct NamedCurve {
  std::string family;
  int index = 0;  // 1-based within its family
  Curve curve;
};

struct Diagram {
  Surface surface;
  std::vector<NamedCurve> curves;
  std::vector<std::string> cutsystems;  // families declared as cut systems

  std::vector<const Curve*> family(const std::string& fam) const {
    std::vector<std::pair<int, const Curve*>> found;
    for (auto& nc : curves)
      if (nc.family == fam) found.push_back({nc.index, &nc.curve});
    std::sort(found.begin(), found.end());
    std::vector<const Curve*> out;
    for (auto& [i, c] : found) out.push_back(c);
    return out;
  }

  std::vector<std::string> family_names() const {
    std::vector<std::string> out;
    for (auto& nc : curves)
      if (std::find(out.begin(), out.end(), nc.family) == out.end())
        out.push_back(nc.family);
    return out;
  }
};

// Makes slot sets of independently built curves disjoint, preserving each
// curve's own crossing order (curve i maps slot -> slot * n + i).
inline void separate_slots(std::vector<Curve>& cs) {
  auto n = (std::int64_t)cs.size();
  for (std::int64_t i = 0; i < n; i++)
    for (auto& x : cs[i].xs) x.slot = x.slot * n + i;
}

// Reassigns slot values on every edge to 0..k-1 preserving relative order.
// Throws if two crossings share an (edge, slot) pair.
inline void renormalize_slots(Diagram& d) {
  std::vector<std::vector<std::pair<std::int64_t, Crossing*>>> per_edge(
      d.surface.num_edges());
  for (auto& nc : d.curves)
    for (auto& x : nc.curve.xs) per_edge[x.edge].push_back({x.slot, &x});
  for (auto& v : per_edge) {
    std::stable_sort(v.begin(), v.end(),
                     [](auto& a, auto& b) { return a.first < b.first; });
    for (size_t i = 1; i < v.size(); i++)
      if (v[i].first == v[i - 1].first)
        throw invalid_input("duplicate slot on edge");
    for (size_t i = 0; i < v.size(); i++) v[i].second->slot = (std::int64_t)i;
  }
}

}  // namespace tricurves
