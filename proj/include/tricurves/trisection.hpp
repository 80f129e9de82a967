#pragma once
// Trisection diagrams (Sigma; alpha, beta, gamma): validation of the
// complexity parameters (g; k1, k2, k3), fundamental invariants of the
// glued 4-manifold, certificates (reducing curves, stabilizations, weak
// reductions, dependent triples, five-chains), and the surgical
// operations: five-chain surgery, loop surgery on a decomposed curve,
// destabilization, five-chain creation, surgery-link extraction.
//
// Families are the canonical "alpha", "beta", "gamma" of a Diagram.
// Pairing order is fixed as k1 <-> (gamma, alpha), k2 <-> (alpha, beta),
// k3 <-> (beta, gamma): each pairing is a Heegaard diagram expected to
// present a connected sum of k_i copies of S^1 x S^2.

#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tricurves/handlebody.hpp"
#include "tricurves/heegaard.hpp"
#include "tricurves/rewrite.hpp"

namespace tricurves {

inline const std::array<std::string, 3> kTriFamilies{"alpha", "beta", "gamma"};

// Curves of the three families, in family order alpha, beta, gamma.
inline std::array<std::vector<Curve>, 3> trisection_families(const Diagram& d) {
  std::array<std::vector<Curve>, 3> out;
  for (int i = 0; i < 3; i++) {
    for (auto* p : d.family(kTriFamilies[i])) out[i].push_back(*p);
    if (out[i].empty())
      throw invalid_input("missing curve family " + kTriFamilies[i]);
  }
  return out;
}

// Pairing i joins families pair_left(i) and pair_right(i).
inline int pair_left(int i) { return i == 0 ? 2 : i - 1; }   // gamma alpha beta
inline int pair_right(int i) { return i == 0 ? 0 : i; }      // alpha beta gamma

struct TrisectionParams {
  int g = 0;
  std::array<int, 3> k{};            // k1 k2 k3 in the pairing order above
  std::array<std::string, 3> level{};  // certified | invariant-consistent
  std::array<std::vector<std::string>, 3> witness{};
  long long chi() const { return 2 + (long long)g - k[0] - k[1] - k[2]; }
};

// Bounded greedy slide search toward the standard pattern: accept any
// single handleslide (within either side) that strictly reduces the total
// cross-pairing crossing count, re-testing standardness after each.
inline std::optional<StandardMatch> slide_search_standard(
    const Surface& s, std::vector<Curve> A, std::vector<Curve> B,
    long long budget, std::vector<std::string>* wit) {
  int g = s.genus();
  for (long long step = 0; step < budget; step++) {
    std::vector<Curve> all = A;
    all.insert(all.end(), B.begin(), B.end());
    separate_slots(all);
    if (!tighten_renorm(s, all)) return std::nullopt;
    renormalize_slots(s, all);
    A.assign(all.begin(), all.begin() + g);
    B.assign(all.begin() + g, all.end());
    if (auto m = is_standard_pairing(s, A, B)) return m;
    std::vector<Curve> ab = A;
    ab.insert(ab.end(), B.begin(), B.end());
    long long base = detail::family_cross_total(s, ab, g);
    bool moved = false;
    for (int side = 0; side < 2 && !moved; side++) {
      auto& F = side == 0 ? A : B;
      auto& G = side == 0 ? B : A;
      for (int i = 0; i < g && !moved; i++)
        for (int j = 0; j < g && !moved; j++) {
          if (i == j) continue;
          std::vector<Curve> F2 = F;
          try {
            handleslide(s, F2, i, j);
          } catch (const invalid_input&) {
            continue;
          }
          std::vector<Curve> trial = side == 0 ? F2 : G;
          std::vector<Curve> other = side == 0 ? G : F2;
          std::vector<Curve> t2 = trial;
          t2.insert(t2.end(), other.begin(), other.end());
          separate_slots(t2);  // the slid curve may collide with `other`
          if (!tighten_renorm(s, t2)) continue;
          renormalize_slots(s, t2);
          std::vector<Curve> tA(t2.begin(), t2.begin() + g);
          std::vector<Curve> tB(t2.begin() + g, t2.end());
          if (detail::family_cross_total(s, t2, g) < base) {
            A = tA;
            B = tB;
            moved = true;
            if (wit)
              wit->push_back("slide " + std::string(side ? "B" : "A") +
                             std::to_string(i + 1) + " over " +
                             std::to_string(j + 1));
          }
        }
    }
    if (!moved) return std::nullopt;
  }
  return std::nullopt;
}

// Validates the three cut systems and certifies each pairing as a Heegaard
// diagram of a connected sum of k_i copies of S^1 x S^2; any torsion in a
// pairing's first homology is a hard rejection.
inline TrisectionParams validate_trisection(const Diagram& d,
                                            long long budget = 64) {
  auto fams = trisection_families(d);
  const Surface& s = d.surface;
  for (int i = 0; i < 3; i++) {
    auto bad = validate_cut_system(s, fams[i]);
    if (!bad.empty())
      throw invalid_input(kTriFamilies[i] + ": " + bad.front());
  }
  TrisectionParams p;
  p.g = s.genus();
  for (int i = 0; i < 3; i++) {
    auto& A = fams[pair_left(i)];
    auto& B = fams[pair_right(i)];
    auto rep = pairing_invariants(s, A, B);
    if (!rep.torsion.empty())
      throw invalid_input("pairing " + kTriFamilies[pair_left(i)] + "/" +
                          kTriFamilies[pair_right(i)] +
                          " has torsion in H1; not a #k(S1xS2) diagram");
    auto& wit = p.witness[i];
    std::optional<StandardMatch> m = is_standard_pairing(s, A, B);
    if (m) wit.push_back("standard pattern");
    if (!m) {
      auto wr = wave_reduce(s, A, B, budget);
      if (wr.report.level == "certified-standard" && wr.report.k) {
        StandardMatch sm;
        sm.k = *wr.report.k;
        m = sm;
        wit.push_back("standard after " + std::to_string(wr.waves) + " waves");
      }
    }
    if (!m) m = slide_search_standard(s, A, B, budget, &wit);
    if (m) {
      p.k[i] = m->k;
      p.level[i] = "certified";
      if (m->k != rep.free_rank)
        throw invalid_input("pairing standardness contradicts H1 rank");
    } else {
      p.k[i] = rep.free_rank;
      p.level[i] = "invariant-consistent";
      wit.push_back("k from H1 rank only");
    }
    if (p.k[i] > p.g) throw invalid_input("pairing k exceeds genus");
  }
  return p;
}

struct FundamentalInvariants {
  long long chi = 0;
  std::vector<bigint> torsion;  // invariant factors > 1 of H1(X)
  int free_rank = 0;
  int min_generators = 0;
  bool genus_bound_ok = true;
  std::string bound_report;
};

// chi and H1 of the 4-manifold: H1(X) is the cokernel of the stacked
// homology classes of all 3g diagram curves in H1(Sigma) = Z^{2g}.
inline FundamentalInvariants fundamental_invariants(const Diagram& d,
                                                    const TrisectionParams& p) {
  auto fams = trisection_families(d);
  const Surface& s = d.surface;
  int g = s.genus();
  FundamentalInvariants inv;
  inv.chi = p.chi();
  std::vector<std::vector<long long>> rows;
  for (auto& f : fams)
    for (auto& c : f) rows.push_back(homology_class(s, c));
  auto q = quotient_invariants(rows, 2 * g);
  inv.torsion = q.torsion;
  inv.free_rank = q.free_rank;
  inv.min_generators = q.free_rank + (int)q.torsion.size();
  long long bound = inv.chi - 2 + 3 * (long long)inv.min_generators;
  inv.genus_bound_ok = g >= bound;
  inv.bound_report = "g = " + std::to_string(g) +
                     " >= chi - 2 + 3t = " + std::to_string(bound) +
                     (inv.genus_bound_ok ? "" : "  VIOLATED");
  return inv;
}

// --- certificates ---

struct Certificate {
  std::string kind;  // reducing-curve | stabilization | weak-reduction |
                     // dependent-triple | five-chain
  std::vector<Curve> witness;
  std::vector<std::string> families;  // role tags parallel to witness
  std::vector<std::string> notes;
};

inline bool curve_nonseparating(const Surface& s, const Curve& c) {
  for (auto v : homology_class(s, c))
    if (v != 0) return true;
  return false;
}

// Re-verifies a certificate from its witness data alone.
inline bool verify_certificate(const Diagram& d, const Certificate& cert) {
  auto fams = trisection_families(d);
  const Surface& s = d.surface;
  auto fam_of = [&](const std::string& name) -> const std::vector<Curve>& {
    for (int i = 0; i < 3; i++)
      if (kTriFamilies[i] == name) return fams[i];
    throw invalid_input("unknown family " + name);
  };
  if (cert.kind == "reducing-curve") {
    if (cert.witness.size() != 1) return false;
    auto& c = cert.witness[0];
    if (bounds_disk_in_surface(s, c)) return false;
    for (auto& f : fams)
      if (!bounds_disk(s, c, f)) return false;
    return true;
  }
  if (cert.kind == "stabilization" || cert.kind == "weak-reduction") {
    if (cert.witness.size() != 2 || cert.families.size() != 2) return false;
    auto& c = cert.witness[0];
    auto& cp = cert.witness[1];
    if (cert.families[0] == cert.families[1]) return false;
    long long n = geo_pair(s, c, cp);
    if (cert.kind == "stabilization" && n != 1) return false;
    if (cert.kind == "weak-reduction") {
      if (n != 0) return false;
      if (!curve_nonseparating(s, c) || !curve_nonseparating(s, cp))
        return false;
    }
    if (bounds_disk_in_surface(s, c) || bounds_disk_in_surface(s, cp))
      return false;
    if (!bounds_disk(s, c, fam_of(cert.families[0]))) return false;
    // c' bounds in the two families other than the first tag.
    for (int i = 0; i < 3; i++)
      if (kTriFamilies[i] != cert.families[0] &&
          !bounds_disk(s, cp, fams[i]))
        return false;
    return true;
  }
  if (cert.kind == "dependent-triple") {
    if (cert.witness.size() != 3) return false;
    std::vector<Curve> w = cert.witness;
    separate_slots(w);
    for (int i = 0; i < 3; i++)
      for (int j = i + 1; j < 3; j++)
        if (!crossings(s, w[i], w[j]).empty()) return false;
    std::vector<std::vector<long long>> rows;
    for (auto& c : cert.witness) rows.push_back(homology_class(s, c));
    auto q = quotient_invariants(rows, 2 * s.genus());
    int rank = 2 * s.genus() - q.free_rank;
    return rank < 3;
  }
  if (cert.kind == "five-chain") {
    if (cert.witness.size() != 5) return false;
    std::vector<Curve> w = cert.witness;
    separate_slots(w);
    if (!tighten_renorm(s, w)) return false;
    auto n = [&](int i, int j) {
      return (long long)crossings(s, w[i], w[j]).size();
    };
    // chain order (gamma2, beta1, alpha1, gamma1, beta2)
    if (n(0, 1) != 1 || n(1, 2) != 1 || n(2, 3) != 1 || n(3, 4) != 1)
      return false;
    if (n(2, 4) != 0 || n(0, 2) != 0 || n(0, 4) != 0 || n(1, 3) != 0)
      return false;
    Arrangement ar(s, {w[2], w[4], w[0]});  // alpha1, beta2, gamma2
    for (auto& r : ar.regions({0, 1, 2})) {
      if (r.chi != -1 || r.circles.size() != 3) continue;
      std::vector<int> cs;
      for (auto& t : r.tr_)
        for (auto& [cid, narcs] : t) cs.push_back(cid);
      std::sort(cs.begin(), cs.end());
      if (cs == std::vector<int>{0, 1, 2}) return true;
    }
    return false;
  }
  return false;
}

struct FiveChain {
  // indices into Diagram::curves of (gamma2, beta1, alpha1, gamma1, beta2)
  std::array<int, 5> idx{};
  // families playing the compressed (a), b and c roles of the chain
  std::string fam_a, fam_b, fam_c;
};

inline Certificate five_chain_certificate(const Diagram& d,
                                          const FiveChain& ch) {
  Certificate cert;
  cert.kind = "five-chain";
  for (int i : ch.idx) cert.witness.push_back(d.curves[i].curve);
  cert.families = {ch.fam_c, ch.fam_b, ch.fam_a, ch.fam_c, ch.fam_b};
  return cert;
}

// Searches for a five-chain (gamma2, beta1, alpha1, gamma1, beta2) over all
// role assignments of the three families; first hit in index order wins.
inline std::optional<FiveChain> find_five_chain(const Diagram& d) {
  const Surface& s = d.surface;
  // tightened working copy for minimal-position intersection counts
  std::vector<Curve> work;
  for (auto& nc : d.curves) work.push_back(nc.curve);
  if (!tighten_renorm(s, work)) return std::nullopt;
  renormalize_slots(s, work);
  Arrangement ar(s, work);
  auto n = [&](int i, int j) {
    return (long long)ar.crossings_between(i, j).size();
  };
  std::array<std::vector<int>, 3> byfam;
  for (int i = 0; i < (int)d.curves.size(); i++)
    for (int f = 0; f < 3; f++)
      if (d.curves[i].family == kTriFamilies[f]) byfam[f].push_back(i);
  int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                     {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  // chains whose b1 and g1 carry the fewest crossings beyond the chain
  // pattern come first: their surgery dual loop is simplest
  std::vector<std::pair<long long, FiveChain>> found;
  int nc2 = (int)d.curves.size();
  for (auto& pm : perms) {
    int fa = pm[0], fb = pm[1], fc = pm[2];
    for (int a1 : byfam[fa])
      for (int b1 : byfam[fb])
        for (int b2 : byfam[fb]) {
          if (b1 == b2) continue;
          if (n(b1, a1) != 1 || n(a1, b2) != 0) continue;
          for (int g1 : byfam[fc])
            for (int g2 : byfam[fc]) {
              if (g1 == g2) continue;
              if (n(g2, b1) != 1 || n(a1, g1) != 1 || n(g1, b2) != 1)
                continue;
              if (n(a1, g2) != 0 || n(b2, g2) != 0 || n(b1, g1) != 0)
                continue;
              FiveChain ch;
              ch.idx = {g2, b1, a1, g1, b2};
              ch.fam_a = kTriFamilies[fa];
              ch.fam_b = kTriFamilies[fb];
              ch.fam_c = kTriFamilies[fc];
              long long extra = -4;
              for (int j = 0; j < nc2; j++) {
                if (j != b1) extra += n(b1, j);
                if (j != g1) extra += n(g1, j);
              }
              found.push_back({extra, ch});
            }
        }
  }
  std::stable_sort(found.begin(), found.end(),
                   [](auto& a, auto& b) { return a.first < b.first; });
  for (auto& [extra, ch] : found)
    if (verify_certificate(d, five_chain_certificate(d, ch))) return ch;
  return std::nullopt;
}

// Budget-bounded certificate searches over the diagram's own curves;
// every returned certificate is re-verified from its witness.
inline std::vector<Certificate> find_certificates(
    const Diagram& d, const std::vector<std::string>& kinds,
    long long budget = 64) {
  (void)budget;
  const Surface& s = d.surface;
  std::vector<Certificate> out;
  auto want = [&](const std::string& k) {
    return kinds.empty() ||
           std::find(kinds.begin(), kinds.end(), k) != kinds.end();
  };
  auto push_verified = [&](Certificate c) {
    if (verify_certificate(d, c)) {
      out.push_back(std::move(c));
      return true;
    }
    return false;
  };
  int nc = (int)d.curves.size();
  if (want("reducing-curve")) {
    for (int i = 0; i < nc; i++) {
      Certificate c;
      c.kind = "reducing-curve";
      c.witness = {d.curves[i].curve};
      c.notes = {"diagram curve " + d.curves[i].family + "." +
                 std::to_string(d.curves[i].index)};
      if (push_verified(std::move(c))) break;
    }
  }
  auto pair_kinds = {std::string("stabilization"),
                     std::string("weak-reduction")};
  for (auto& kind : pair_kinds) {
    if (!want(kind)) continue;
    bool done = false;
    for (int i = 0; i < nc && !done; i++)
      for (int j = 0; j < nc && !done; j++) {
        if (i == j || d.curves[i].family == d.curves[j].family) continue;
        Certificate c;
        c.kind = kind;
        c.witness = {d.curves[i].curve, d.curves[j].curve};
        c.families = {d.curves[i].family, d.curves[j].family};
        c.notes = {"curves " + d.curves[i].family + "." +
                   std::to_string(d.curves[i].index) + ", " +
                   d.curves[j].family + "." + std::to_string(d.curves[j].index)};
        if (push_verified(std::move(c))) done = true;
      }
  }
  if (want("dependent-triple")) {
    std::array<std::vector<int>, 3> byfam;
    for (int i = 0; i < nc; i++)
      for (int f = 0; f < 3; f++)
        if (d.curves[i].family == kTriFamilies[f]) byfam[f].push_back(i);
    bool done = false;
    for (int a : byfam[0])
      for (int b : byfam[1])
        for (int c : byfam[2]) {
          if (done) break;
          Certificate cert;
          cert.kind = "dependent-triple";
          cert.witness = {d.curves[a].curve, d.curves[b].curve,
                          d.curves[c].curve};
          cert.families = {"alpha", "beta", "gamma"};
          if (push_verified(std::move(cert))) done = true;
        }
  }
  if (want("five-chain")) {
    if (auto ch = find_five_chain(d))
      push_verified(five_chain_certificate(d, *ch));
  }
  (void)s;
  return out;
}

// --- loop surgery ---------------------------------------------------------

// An embedded loop cut into three consecutive arcs a, b, c by three marked
// edge crossings (the junctions).  Traversal order is a then b then c:
// arc a runs from junction ca to junction ab, b from ab to bc, c from bc
// to ca.  Arc a must be disjoint from family alpha, b from beta, c from
// gamma; crossings with the other two families are allowed, including on
// the chords adjacent to a junction.
struct DecomposedCurve {
  Curve ell;
  int j_ab = -1, j_bc = -1, j_ca = -1;  // indices into ell.xs

  // Arc (0 = a, 1 = b, 2 = c) owning chord i of ell.
  int arc_of_chord(int i) const {
    int n = (int)ell.xs.size();
    auto in_cyc = [&](int lo, int hi) {  // i in [lo, hi) cyclically
      return lo <= hi ? (lo <= i && i < hi) : (i >= lo || i < hi);
    };
    (void)n;
    if (in_cyc(j_ab, j_bc)) return 1;
    if (in_cyc(j_bc, j_ca)) return 2;
    return 0;
  }
};

namespace detail {

// Pairwise chord non-interleaving on a cycle of `n` boundary positions.
inline bool chords_disjoint(int n, std::pair<int, int> u,
                            std::pair<int, int> v) {
  auto between = [&](int x, int lo, int hi) {  // x in open interval (lo,hi)
    for (int p = (lo + 1) % n; p != hi; p = (p + 1) % n)
      if (p == x) return true;
    return false;
  };
  int c = (int)between(v.first, u.first, u.second) +
          (int)between(v.second, u.first, u.second);
  return c != 1;
}

}  // namespace detail

// Checks that `dc` is a decomposed curve for `d`: embedded, junctions
// distinct and in traversal order, and each arc disjoint from its family.
// Returns human-readable violations (empty = valid).
inline std::vector<std::string> validate_decomposed(const Diagram& d,
                                                    const DecomposedCurve& dc) {
  std::vector<std::string> out;
  auto fams = trisection_families(d);
  const Surface& s = d.surface;
  int n = (int)dc.ell.xs.size();
  if (n < 3) return {"decomposed curve needs at least three crossings"};
  for (int j : {dc.j_ab, dc.j_bc, dc.j_ca})
    if (j < 0 || j >= n) return {"junction index out of range"};
  if (dc.j_ab == dc.j_bc || dc.j_bc == dc.j_ca || dc.j_ca == dc.j_ab)
    return {"junctions must be distinct"};
  // Traversal order ab, bc, ca.
  for (int i = (dc.j_ab + 1) % n;; i = (i + 1) % n) {
    if (i == dc.j_bc) break;
    if (i == dc.j_ca) return {"junctions out of traversal order"};
  }
  if (!validate_curve(s, dc.ell).empty())
    out.push_back("decomposed curve is not embedded");
  // Slot distinctness against the diagram curves.
  std::set<std::pair<int, std::int64_t>> slots;
  for (auto& nc : d.curves)
    for (auto& x : nc.curve.xs) slots.insert({x.edge, x.slot});
  for (auto& x : dc.ell.xs)
    if (!slots.insert({x.edge, x.slot}).second)
      out.push_back("slot collision with a diagram curve on edge " +
                    s.edge_names[x.edge]);
  if (!out.empty()) return out;
  // Arc / family disjointness.
  std::vector<Curve> all;
  std::vector<int> fam_of;
  for (int f = 0; f < 3; f++)
    for (auto& c : fams[f]) {
      all.push_back(c);
      fam_of.push_back(f);
    }
  int lid = (int)all.size();
  all.push_back(dc.ell);
  Arrangement arr(s, all);
  for (auto& cp : arr.crossings()) {
    if ((cp.curve_a == lid) == (cp.curve_b == lid)) continue;
    int other = cp.curve_a == lid ? cp.curve_b : cp.curve_a;
    int chord = cp.curve_a == lid ? cp.chord_a : cp.chord_b;
    int arc = dc.arc_of_chord(chord);
    if (fam_of[other] == arc)
      out.push_back("arc " + std::string(1, (char)('a' + arc)) +
                    " meets family " + kTriFamilies[arc]);
  }
  return out;
}

// Surgery on a decomposed curve: excise a disk at each junction, tube the
// three resulting boundary circles to a pair-of-pants, and close the three
// severed arcs across the pants into new curves alpha0, beta0, gamma0, each
// joined by a pushoff of one pants boundary circle.  The genus rises by
// two and each family gains two curves.  The result is canonicalized.
inline Diagram loop_surgery(const Diagram& d, const DecomposedCurve& dc) {
  auto bad = validate_decomposed(d, dc);
  if (!bad.empty()) throw invalid_input("loop_surgery: " + bad[0]);
  auto fams = trisection_families(d);
  const Surface& s = d.surface;
  int g0 = s.genus();
  int n = (int)dc.ell.xs.size();
  // Junctions in construction order 0 = ab, 1 = bc, 2 = ca.
  std::array<int, 3> jidx{dc.j_ab, dc.j_bc, dc.j_ca};
  std::array<Crossing, 3> jx;
  for (int k = 0; k < 3; k++) jx[k] = dc.ell.xs[jidx[k]];

  // Split each junction edge at its junction slots.
  std::vector<std::vector<std::int64_t>> cut_slots(s.num_edges());
  std::vector<std::vector<int>> cut_junc(s.num_edges());
  for (int k = 0; k < 3; k++) cut_slots[jx[k].edge].push_back(jx[k].slot);
  for (auto& v : cut_slots) std::sort(v.begin(), v.end());
  for (int k = 0; k < 3; k++) {
    auto& v = cut_slots[jx[k].edge];
    cut_junc[jx[k].edge].resize(v.size());
    int at = (int)(std::lower_bound(v.begin(), v.end(), jx[k].slot) -
                   v.begin());
    cut_junc[jx[k].edge][at] = k;
  }
  Surface ns;
  std::vector<std::vector<int>> seg_id(s.num_edges());
  for (int e = 0; e < s.num_edges(); e++) {
    int parts = (int)cut_slots[e].size() + 1;
    for (int i = 0; i < parts; i++) {
      seg_id[e].push_back((int)ns.edge_names.size());
      ns.edge_names.push_back(s.edge_names[e] +
                              (parts > 1 ? "." + std::to_string(i) : ""));
    }
  }
  // Boundary circle of the excised disk at junction k, split into arcs.
  // The "plus" half faces the (edge,+1) copy; arcs are oriented with the
  // traversal P_lo -> P_hi on the plus half and P_hi -> P_lo on the minus
  // half, where P_lo/P_hi are the circle's meeting points with the edge
  // segments below/above the junction slot.  Tether feet subdivide: the
  // pants tether u joins circles ab and bc, v joins ab and ca.
  static const char* jn[3] = {"ab", "bc", "ca"};
  std::array<std::vector<int>, 3> plus_arcs, minus_arcs;
  auto new_edge = [&](std::string nm) {
    ns.edge_names.push_back(std::move(nm));
    return (int)ns.edge_names.size() - 1;
  };
  for (int k = 0; k < 3; k++) {
    int np = 2, nm = k == 0 ? 2 : 1;  // circle ab carries both feet
    for (int i = 0; i < np; i++)
      plus_arcs[k].push_back(new_edge(std::string("ring.") + jn[k] + ".p" +
                                      std::to_string(i)));
    for (int i = 0; i < nm; i++)
      minus_arcs[k].push_back(new_edge(std::string("ring.") + jn[k] + ".m" +
                                       std::to_string(i)));
  }
  int te_u = new_edge("tether.u"), te_v = new_edge("tether.v");
  // Faces: old faces with each split edge side detoured around its
  // junction circles.
  for (auto& f : s.faces) {
    Face nf;
    for (auto& sd : f.sides) {
      auto& cs = cut_slots[sd.edge];
      if (cs.empty()) {
        nf.sides.push_back({seg_id[sd.edge][0], sd.sign});
        continue;
      }
      int parts = (int)cs.size() + 1;
      if (sd.sign > 0) {
        for (int i = 0; i < parts; i++) {
          nf.sides.push_back({seg_id[sd.edge][i], +1});
          if (i + 1 < parts)
            for (int a : plus_arcs[cut_junc[sd.edge][i]])
              nf.sides.push_back({a, +1});
        }
      } else {
        for (int i = parts - 1; i >= 0; i--) {
          nf.sides.push_back({seg_id[sd.edge][i], -1});
          if (i > 0)
            for (int a : minus_arcs[cut_junc[sd.edge][i - 1]])
              nf.sides.push_back({a, +1});
        }
      }
    }
    ns.faces.push_back(nf);
  }
  // The pair-of-pants face: all circle arcs reversed, joined by the two
  // tethers.  Boundary positions are recorded for the seam chords below.
  Face pants;
  std::vector<int> wp;  // edge id at each pants boundary position
  auto put = [&](int e, int sgn) {
    pants.sides.push_back({e, sgn});
    wp.push_back(e);
  };
  put(te_u, +1);
  put(plus_arcs[1][0], -1);
  put(minus_arcs[1][0], -1);
  put(plus_arcs[1][1], -1);
  put(te_u, -1);
  put(plus_arcs[0][0], -1);
  put(minus_arcs[0][1], -1);
  put(te_v, +1);
  put(plus_arcs[2][0], -1);
  put(minus_arcs[2][0], -1);
  put(plus_arcs[2][1], -1);
  put(te_v, -1);
  put(minus_arcs[0][0], -1);
  put(plus_arcs[0][1], -1);
  ns.faces.push_back(pants);
  ns.finalize();
  if (ns.genus() != g0 + 2)
    throw std::logic_error("loop_surgery: genus did not rise by two");

  auto remap = [&](Crossing x) {
    auto& v = cut_slots[x.edge];
    auto it = std::lower_bound(v.begin(), v.end(), x.slot);
    x.edge = seg_id[x.edge][(int)(it - v.begin())];
    return x;
  };
  std::array<std::vector<Curve>, 3> nfams;
  for (int f = 0; f < 3; f++)
    for (auto c : fams[f]) {
      for (auto& x : c.xs) x = remap(x);
      nfams[f].push_back(c);
    }
  // Seam crossings: the severed end of an arc entering junction k attaches
  // to a circle arc on the half facing the face it arrived in; the end
  // leaving attaches on the other half.  The chords joining the three
  // in/out pairs across the pants must be pairwise non-interleaved.
  auto half = [&](int k, int want_sign) {
    return want_sign > 0 ? plus_arcs[k] : minus_arcs[k];
  };
  auto positions = [&](const std::vector<int>& arcs) {
    std::vector<int> out;
    for (int a : arcs)
      for (int p = 0; p < (int)wp.size(); p++)
        if (wp[p] == a) out.push_back(p);
    return out;
  };
  // New curve f enters at junction in_j[f] and leaves at out_j[f].
  static const int in_j[3] = {0, 1, 2}, out_j[3] = {2, 0, 1};
  std::array<std::vector<int>, 3> in_cand, out_cand;
  for (int f = 0; f < 3; f++) {
    in_cand[f] = positions(half(in_j[f], -jx[in_j[f]].sign));
    out_cand[f] = positions(half(out_j[f], +jx[out_j[f]].sign));
  }
  std::array<int, 3> in_pos{-1, -1, -1}, out_pos{-1, -1, -1};
  int m = (int)wp.size();
  bool found = false;
  for (int a0 : in_cand[0])
    for (int b0 : out_cand[0])
      for (int a1 : in_cand[1])
        for (int b1 : out_cand[1])
          for (int a2 : in_cand[2])
            for (int b2 : out_cand[2]) {
              if (found) continue;
              std::pair<int, int> s0{a0, b0}, s1{a1, b1}, s2{a2, b2};
              if (detail::chords_disjoint(m, s0, s1) &&
                  detail::chords_disjoint(m, s1, s2) &&
                  detail::chords_disjoint(m, s0, s2)) {
                in_pos = {a0, a1, a2};
                out_pos = {b0, b1, b2};
                found = true;
              }
            }
  if (!found)
    throw std::logic_error("loop_surgery: no disjoint seam layout");
  // Close each severed arc: leave the pants through the outgoing circle
  // arc, follow the old arc's interior crossings, re-enter through the
  // incoming one.  Arc a becomes part of alpha0, b of beta0, c of gamma0.
  // Arc a runs jidx[2] -> jidx[0], arc b jidx[0] -> jidx[1], arc c
  // jidx[1] -> jidx[2].
  for (int f = 0; f < 3; f++) {
    Curve c;
    c.xs.push_back({wp[out_pos[f]], +1, 0});
    int j_start = jidx[(f + 2) % 3], j_end = jidx[f];
    for (int i = (j_start + 1) % n; i != j_end; i = (i + 1) % n)
      c.xs.push_back(remap(dc.ell.xs[i]));
    c.xs.push_back({wp[in_pos[f]], -1, 0});
    nfams[f].push_back(c);
  }
  // Pushoffs of the three pants boundary circles: alpha0' rings circle bc,
  // beta0' rings ca, gamma0' rings ab.
  for (int f = 0; f < 3; f++) {
    int k = (f + 1) % 3;
    auto& v = cut_slots[jx[k].edge];
    int at = (int)(std::lower_bound(v.begin(), v.end(), jx[k].slot) -
                   v.begin());
    int lo = seg_id[jx[k].edge][at], hi = seg_id[jx[k].edge][at + 1];
    Curve c;
    c.xs.push_back({lo, -1, jx[k].slot});
    c.xs.push_back({hi, +1, jx[k].slot});
    nfams[f].push_back(c);
  }
  for (int f = 0; f < 3; f++)
    for (auto& c : nfams[f])
      if (!validate_curve(ns, c).empty())
        throw std::logic_error("loop_surgery: produced a bad curve");
  // Canonicalize and reassemble.
  RewriteState st;
  st.s = ns;
  std::vector<std::pair<int, int>> tags;
  for (int f = 0; f < 3; f++)
    for (int i = 0; i < (int)nfams[f].size(); i++) {
      st.curves.push_back(nfams[f][i]);
      tags.push_back({f, i + 1});
    }
  canonicalize(st);
  Diagram out;
  out.surface = st.s;
  for (size_t i = 0; i < st.curves.size(); i++)
    out.curves.push_back(
        {kTriFamilies[tags[i].first], tags[i].second, st.curves[i]});
  out.cutsystems = {"alpha", "beta", "gamma"};
  renormalize_slots(out);
  return out;
}

// --- five-chain surgery and friends ---------------------------------------

// pi1 word of a curve on the standard 4g-gon, in the generators dual to the
// edges: every chord lives in the single face, so the crossing sequence is
// the word.
inline Word curve_pi1_word(const Surface& s, const Curve& c) {
  if (!s.is_standard())
    throw invalid_input("pi1 words require the standard surface");
  Word w;
  for (auto& x : c.xs) w.push_back((x.edge + 1) * x.sign);
  return w;
}

// Family-wise comparison of two diagrams up to per-curve free homotopy:
// each family must admit a bijection matching curves with freely homotopic
// (conjugate or inverse-conjugate) pi1 words.
inline bool diagrams_freely_homotopic(const Diagram& d1, const Diagram& d2) {
  if (d1.surface.genus() != d2.surface.genus()) return false;
  int g = d1.surface.genus();
  for (auto& fam : kTriFamilies) {
    auto f1 = d1.family(fam), f2 = d2.family(fam);
    if (f1.size() != f2.size()) return false;
    int n = (int)f1.size();
    std::vector<int> perm(n);
    for (int i = 0; i < n; i++) perm[i] = i;
    bool ok = false;
    do {
      bool all = true;
      for (int i = 0; i < n && all; i++)
        if (!surface_conjugacy_equal(curve_pi1_word(d1.surface, *f1[i]),
                                     curve_pi1_word(d2.surface, *f2[perm[i]]),
                                     g))
          all = false;
      if (all) ok = true;
    } while (!ok && std::next_permutation(perm.begin(), perm.end()));
    if (!ok) return false;
  }
  return true;
}

namespace detail {

// Normalization defect of a five-chain on a tightened arrangement of the
// diagram curves: crossings of any curve other than b1, g1 with a1, of
// b-family curves other than b1 with g2, and of c-family curves other than
// g1 with b2.
inline long long five_chain_violations(const Diagram& d, const FiveChain& ch,
                                       const Arrangement& ar) {
  int G2 = ch.idx[0], B1 = ch.idx[1], A1 = ch.idx[2], G1 = ch.idx[3],
      B2 = ch.idx[4];
  auto n = [&](int i, int j) {
    return (long long)ar.crossings_between(std::min(i, j), std::max(i, j))
        .size();
  };
  long long v = 0;
  for (int u = 0; u < (int)d.curves.size(); u++) {
    const auto& fam = d.curves[u].family;
    if (u != A1 && u != B1 && u != G1) v += n(u, A1);
    if (fam == ch.fam_b && u != B1) v += n(u, G2);
    if (fam == ch.fam_c && u != G1) v += n(u, B2);
  }
  return v;
}

}  // namespace detail

// Greedy handleslides of b-family curves over b1 and c-family curves over
// g1 until the chain is normalized: only b1 and g1 meet a1, the b family
// meets g2 only in b1, and the c family meets b2 only in g1.  Accepts any
// slide that lexicographically lowers (defect, total crossings).
inline Diagram normalize_five_chain(const Diagram& d, const FiveChain& ch,
                                    long long budget = 64) {
  Diagram out = d;
  const Surface& s = out.surface;
  int B1 = ch.idx[1], G1 = ch.idx[3];
  int n = (int)out.curves.size();
  auto settle = [&](std::vector<Curve>& w) {
    separate_slots(w);
    if (!tighten_renorm(s, w))
      throw invalid_input("five-chain normalization: tightening failed");
    renormalize_slots(s, w);
  };
  auto score = [&](const std::vector<Curve>& w) {
    Diagram t = out;
    for (int i = 0; i < n; i++) t.curves[i].curve = w[i];
    Arrangement ar(s, w);
    return std::pair<long long, long long>(
        detail::five_chain_violations(t, ch, ar),
        (long long)ar.crossings().size());
  };
  std::vector<Curve> w;
  for (auto& nc : out.curves) w.push_back(nc.curve);
  settle(w);
  auto cur = score(w);
  for (long long step = 0; cur.first > 0 && step < budget; step++) {
    bool moved = false;
    for (int u = 0; u < n && !moved; u++) {
      int pivot = -1;
      if (out.curves[u].family == ch.fam_b && u != B1) pivot = B1;
      if (out.curves[u].family == ch.fam_c && u != G1) pivot = G1;
      if (pivot < 0) continue;
      std::vector<int> avoid;
      for (int i = 0; i < n; i++)
        if (out.curves[i].family == out.curves[u].family) avoid.push_back(i);
      std::vector<Curve> w2 = w;
      try {
        slide_over(s, w2, u, pivot, avoid);
        settle(w2);
      } catch (const std::exception&) {
        continue;
      }
      auto sc = score(w2);
      if (sc < cur) {
        w = std::move(w2);
        cur = sc;
        moved = true;
      }
    }
    if (!moved) break;
  }
  if (cur.first != 0)
    throw invalid_input("failed to normalize the five-chain within budget");
  for (int i = 0; i < n; i++) out.curves[i].curve = w[i];
  renormalize_slots(out);
  return out;
}

// Surgery on a normalized five-chain: drop a1, b1, g1 and compress the
// surface along a1.  The genus drops by one and the fam_b/fam_c pairing
// gains a parallel pair (an S^1 x S^2 summand).  When `induced` is given
// it receives the dual loop of the surgery: the band sum of b1 and g1
// along a1, transported to the output surface (it crosses the images of
// b2 and g2 once each and misses every other output curve).
inline Diagram five_chain_surgery(const Diagram& d, const FiveChain& ch,
                                  Curve* induced = nullptr) {
  if (!verify_certificate(d, five_chain_certificate(d, ch)))
    throw invalid_input("five_chain_surgery: invalid five-chain");
  int B1 = ch.idx[1], A1 = ch.idx[2], G1 = ch.idx[3];
  const Surface& s = d.surface;
  int n = (int)d.curves.size();
  std::vector<Curve> w;
  for (auto& nc : d.curves) w.push_back(nc.curve);
  separate_slots(w);
  if (!tighten_renorm(s, w))
    throw invalid_input("five_chain_surgery: tightening failed");
  renormalize_slots(s, w);
  {
    Diagram t = d;
    for (int i = 0; i < n; i++) t.curves[i].curve = w[i];
    Arrangement ar(s, w);
    if (detail::five_chain_violations(t, ch, ar) != 0)
      throw invalid_input("five_chain_surgery: chain is not normalized");
  }
  // kept curves, plus a1 and the passenger loop at the end
  std::vector<Curve> ts;
  std::vector<std::string> tagfam;
  for (int i = 0; i < n; i++) {
    if (i == A1 || i == B1 || i == G1) continue;
    ts.push_back(w[i]);
    tagfam.push_back(d.curves[i].family);
  }
  int nk = (int)ts.size();
  ts.push_back(w[A1]);
  if (induced) {
    // the dual loop: b1 and g1 banded together along a1, so that the two
    // a1 crossings cancel across the band
    std::vector<Curve> work = w;
    scale_slots(work, 16);
    const Curve &Ac = work[A1], &Bc = work[B1], &Gc = work[G1];
    auto xb = crossings(s, Ac, Bc);
    auto xg = crossings(s, Ac, Gc);
    if (xb.size() != 1 || xg.size() != 1)
      throw std::logic_error("five_chain_surgery: chain crossing pattern lost");
    int pa = xb[0].chord_a, pb = xb[0].chord_b;
    int qa = xg[0].chord_a, qg = xg[0].chord_b;
    int ma = (int)Ac.xs.size(), mb = (int)Bc.xs.size(), mg = (int)Gc.xs.size();
    auto off = [](const Crossing& x, int side, int k) {
      return Crossing{x.edge, x.sign,
                      x.slot + (side == 0 ? -x.sign : +x.sign) * k};
    };
    // a1 crossings passed walking from chord pa to chord qa (unflipped)
    auto band_path = [&](int dirn) {
      std::vector<Crossing> p;
      if (dirn > 0)
        for (int i = (pa + 1) % ma; ; i = (i + 1) % ma) {
          p.push_back(Ac.xs[i]);
          if (i == qa) break;
        }
      else
        for (int i = pa; ; i = (i - 1 + ma) % ma) {
          p.push_back(Ac.xs[i]);
          if (i == (qa + 1) % ma) break;
        }
      return p;
    };
    bool have = false;
    for (int sb : {0, 1})
      for (int sg : {0, 1})
        for (int dirn : {+1, -1})
          for (int sband : {0, 1})
            for (int og : {+1, -1})
              for (int k1 : {1, 2}) {
                if (have) continue;
                int k2 = 3 - k1;
                Curve cand;
                for (int t = 1; t <= mb; t++)
                  cand.xs.push_back(off(Bc.xs[(pb + t) % mb], sb, 1));
                auto bp = band_path(dirn);
                for (auto& x : bp)
                  cand.xs.push_back({x.edge, dirn * x.sign,
                                     off(x, sband, k1).slot});
                if (og > 0)
                  for (int t = 1; t <= mg; t++)
                    cand.xs.push_back(off(Gc.xs[(qg + t) % mg], sg, 1));
                else
                  for (int t = 0; t < mg; t++) {
                    Crossing x = Gc.xs[((qg - t) % mg + mg) % mg];
                    x.sign = -x.sign;
                    cand.xs.push_back(off(x, sg, 1));
                  }
                // the return strand runs on the other side of a1
                for (auto it = bp.rbegin(); it != bp.rend(); ++it)
                  cand.xs.push_back({it->edge, -dirn * it->sign,
                                     off(*it, 1 - sband, k2).slot});
                if (!validate_curve(s, cand).empty()) continue;
                if (!crossings(s, cand, Ac).empty()) continue;
                ts.push_back(cand);
                have = true;
              }
    if (!have)
      throw invalid_input("five_chain_surgery: induced loop construction failed");
  }
  separate_slots(ts);
  if (!tighten_renorm(s, ts))
    throw invalid_input("five_chain_surgery: tightening failed");
  renormalize_slots(s, ts);
  if (induced && !crossings(s, ts[nk], ts.back()).empty())
    throw invalid_input("five_chain_surgery: induced loop still meets a1");
  RewriteState st;
  st.s = s;
  for (int i = 0; i < nk; i++) st.curves.push_back(ts[i]);
  if (induced) st.curves.push_back(ts.back());
  compress_along(st, ts[nk]);
  canonicalize(st);
  if (induced) {
    *induced = st.curves.back();
    st.curves.pop_back();
  }
  Diagram out;
  out.surface = st.s;
  std::array<int, 3> cnt{};
  for (size_t i = 0; i < st.curves.size(); i++) {
    int f = 0;
    while (kTriFamilies[f] != tagfam[i]) f++;
    out.curves.push_back({tagfam[i], ++cnt[f], st.curves[i]});
  }
  out.cutsystems = d.cutsystems;
  {  // retighten on the compressed surface and renormalize jointly
    std::vector<Curve> all;
    for (auto& nc : out.curves) all.push_back(nc.curve);
    if (induced) all.push_back(*induced);
    if (!tighten_renorm(out.surface, all))
      throw std::logic_error("five_chain_surgery: output tightening failed");
    renormalize_slots(out.surface, all);
    for (size_t i = 0; i < out.curves.size(); i++)
      out.curves[i].curve = all[i];
    if (induced) *induced = all.back();
  }
  return out;
}

// Candidate arc decompositions of a loop on a diagram, one per way of
// distributing the loop's few family crossings over the three arcs;
// junction positions within a crossing-free stretch are interchangeable
// up to isotopy, so one representative per distribution suffices.
inline std::vector<DecomposedCurve> induced_decompositions(const Diagram& d,
                                                           const Curve& ell) {
  const Surface& s = d.surface;
  int m = (int)ell.xs.size();
  std::vector<Curve> w;
  for (auto& nc : d.curves) w.push_back(nc.curve);
  w.push_back(ell);
  Arrangement ar(s, w);
  int ne = (int)d.curves.size();
  // chords of ell carrying a crossing with each family
  std::array<std::set<int>, 3> hit;
  for (int i = 0; i < ne; i++) {
    int f = 0;
    while (kTriFamilies[f] != d.curves[i].family) f++;
    for (auto& cpt : ar.crossings_between(i, ne))
      hit[f].insert(cpt.curve_a == ne ? cpt.chord_a : cpt.chord_b);
  }
  std::vector<DecomposedCurve> out;
  std::set<std::vector<int>> seen;  // arc signature of each family chord
  for (int j1 = 0; j1 < m; j1++)
    for (int j2 = 0; j2 < m; j2++)
      for (int j3 = 0; j3 < m; j3++) {
        if (j1 == j2 || j1 == j3 || j2 == j3) continue;
        DecomposedCurve dc;
        dc.ell = ell;
        dc.j_ab = j1;
        dc.j_bc = j2;
        dc.j_ca = j3;
        // traversal order a, b, c requires j_ca, j_ab, j_bc cyclic
        int r1 = (j1 - j3 + m) % m, r2 = (j2 - j3 + m) % m;
        if (!(r1 < r2)) continue;
        bool ok = true;
        for (int f = 0; f < 3 && ok; f++)
          for (int c : hit[f])
            if (dc.arc_of_chord(c) == f) ok = false;
        if (!ok) continue;
        std::vector<int> sig{(j2 - j1 + m) % m == 1, (j3 - j2 + m) % m == 1,
                             (j1 - j3 + m) % m == 1};
        for (int f = 0; f < 3; f++)
          for (int c : hit[f]) {
            sig.push_back(f);
            sig.push_back(dc.arc_of_chord(c));
          }
        if (!seen.insert(sig).second) continue;
        if (!validate_decomposed(d, dc).empty()) continue;
        out.push_back(dc);
      }
  return out;
}

// Splits off the genus-one summand of a verified stabilization witness
// (c, c'): diagram curves meeting c' are swept off by handleslides over c
// or over the same-family copy parallel to c', then c and the two parallel
// copies are removed and the surface is compressed along c'.
inline Diagram destabilize(const Diagram& d, const Certificate& cert,
                           long long budget = 64) {
  if (cert.kind != "stabilization" || !verify_certificate(d, cert))
    throw invalid_input("destabilize: witness does not verify");
  const Surface& s = d.surface;
  int n = (int)d.curves.size();
  int ic = -1;
  for (int i = 0; i < n; i++)
    if (d.curves[i].family == cert.families[0] &&
        d.curves[i].curve.xs == cert.witness[0].xs)
      ic = i;
  if (ic < 0)
    throw invalid_input("destabilize: witness c must be a diagram curve");
  std::vector<Curve> w;
  for (auto& nc : d.curves) w.push_back(nc.curve);
  w.push_back(cert.witness[1]);
  int cp = n;  // index of c' in the working set
  auto settle = [&]() {
    separate_slots(w);
    if (!tighten_renorm(s, w))
      throw invalid_input("destabilize: tightening failed");
    renormalize_slots(s, w);
  };
  settle();
  auto cnt = [&](int i, int j) {
    return (long long)crossings(s, w[i], w[j]).size();
  };
  // parallel copy of c' in each family: meets c once, misses c'
  auto copy_in = [&](const std::string& fam) {
    for (int i = 0; i < n; i++)
      if (i != ic && d.curves[i].family == fam && cnt(i, cp) == 0 &&
          cnt(i, ic) == 1)
        return i;
    return -1;
  };
  auto defect = [&]() {
    long long v = 0;
    for (int i = 0; i < n; i++)
      if (i != ic) v += cnt(i, cp);
    return v;
  };
  long long cur = defect();
  for (long long step = 0; cur > 0 && step < budget; step++) {
    bool moved = false;
    for (int u = 0; u < n && !moved; u++) {
      if (u == ic || cnt(u, cp) == 0) continue;
      int pivot = d.curves[u].family == cert.families[0]
                      ? ic
                      : copy_in(d.curves[u].family);
      if (pivot < 0) continue;
      std::vector<int> avoid;
      for (int i = 0; i < n; i++)
        if (d.curves[i].family == d.curves[u].family) avoid.push_back(i);
      avoid.push_back(cp);
      std::vector<Curve> w2 = w;
      try {
        slide_over(s, w2, u, pivot, avoid);
        separate_slots(w2);
        if (!tighten_renorm(s, w2)) continue;
        renormalize_slots(s, w2);
      } catch (const std::exception&) {
        continue;
      }
      std::swap(w, w2);
      long long v = defect();
      if (v < cur) {
        cur = v;
        moved = true;
      } else {
        std::swap(w, w2);
      }
    }
    if (!moved) break;
  }
  if (cur != 0)
    throw invalid_input("destabilize: could not sweep curves off the summand");
  std::set<int> drop{ic};
  for (int f = 0; f < 3; f++) {
    if (kTriFamilies[f] == cert.families[0]) continue;
    int v = copy_in(kTriFamilies[f]);
    if (v < 0)
      throw invalid_input("destabilize: missing parallel copy in " +
                          kTriFamilies[f]);
    drop.insert(v);
  }
  RewriteState st;
  st.s = s;
  std::vector<std::string> tagfam;
  for (int i = 0; i < n; i++) {
    if (drop.count(i)) continue;
    st.curves.push_back(w[i]);
    tagfam.push_back(d.curves[i].family);
  }
  compress_along(st, w[cp]);
  canonicalize(st);
  Diagram out;
  out.surface = st.s;
  std::array<int, 3> fc{};
  for (size_t i = 0; i < st.curves.size(); i++) {
    int f = 0;
    while (kTriFamilies[f] != tagfam[i]) f++;
    out.curves.push_back({tagfam[i], ++fc[f], st.curves[i]});
  }
  out.cutsystems = d.cutsystems;
  renormalize_slots(out);
  return out;
}

// Five-chain creation: loop surgery on a decomposed curve meeting one
// parallel beta/gamma pair once, followed by destabilization of the
// stabilization this reveals.  The output has genus g+1 and contains a
// five-chain.
inline Diagram five_chain_create(const Diagram& d, const DecomposedCurve& dc,
                                 long long budget = 64) {
  const Surface& s = d.surface;
  auto bad = validate_decomposed(d, dc);
  if (!bad.empty()) throw invalid_input("five_chain_create: " + bad.front());
  int n = (int)d.curves.size();
  {  // hypotheses: ell meets beta u gamma in one parallel pair, once each
    std::vector<Curve> w;
    for (auto& nc : d.curves) w.push_back(nc.curve);
    w.push_back(dc.ell);
    Arrangement ar(s, w);
    int b1 = -1, g1 = -1;
    for (int i = 0; i < n; i++) {
      long long c = (long long)ar.crossings_between(i, n).size();
      const auto& fam = d.curves[i].family;
      if (fam == "alpha") continue;
      if (c == 0) continue;
      int& at = fam == "beta" ? b1 : g1;
      if (c != 1 || at >= 0)
        throw invalid_input("five_chain_create: loop meets " + fam +
                            " more than once");
      at = i;
    }
    if (b1 < 0 || g1 < 0)
      throw invalid_input("five_chain_create: loop must meet one beta and "
                          "one gamma curve");
    if (!ar.crossings_between(std::min(b1, g1), std::max(b1, g1)).empty() ||
        !surface_conjugacy_equal(curve_pi1_word(s, d.curves[b1].curve),
                                 curve_pi1_word(s, d.curves[g1].curve),
                                 s.genus()))
      throw invalid_input(
          "five_chain_create: the met beta and gamma curves are not a "
          "parallel pair");
  }
  Diagram e2 = loop_surgery(d, dc);
  auto attempt = [&](const Diagram& d2) -> std::optional<Diagram> {
    auto certs = find_certificates(d2, {"stabilization"});
    for (auto& c : certs) {
      try {
        Diagram out = destabilize(d2, c, budget);
        auto p = validate_trisection(out, budget);
        if (p.g != s.genus() + 1) continue;
        if (!find_five_chain(out)) continue;
        return out;
      } catch (const std::exception&) {
      }
    }
    return std::nullopt;
  };
  if (auto r = attempt(e2)) return *r;
  // slide the new pants boundary curves over the parallel-pair images
  auto slid = [&](const Diagram& d2, const std::string& fam, int i, int j)
      -> std::optional<Diagram> {
    Diagram t = d2;
    std::vector<Curve> w;
    std::vector<int> famidx;
    for (int u = 0; u < (int)t.curves.size(); u++) {
      w.push_back(t.curves[u].curve);
      if (t.curves[u].family == fam) famidx.push_back(u);
    }
    try {
      slide_over(t.surface, w, famidx[i], famidx[j], famidx);
      separate_slots(w);
      if (!tighten_renorm(t.surface, w)) return std::nullopt;
      renormalize_slots(t.surface, w);
    } catch (const std::exception&) {
      return std::nullopt;
    }
    for (int u = 0; u < (int)t.curves.size(); u++) t.curves[u].curve = w[u];
    return t;
  };
  int ng = (int)e2.family("beta").size();
  for (int bj = 0; bj < ng - 1; bj++) {
    auto t1 = slid(e2, "beta", ng - 1, bj);
    if (!t1) continue;
    for (int gj = 0; gj < ng - 1; gj++) {
      auto t2 = slid(*t1, "gamma", ng - 1, gj);
      if (!t2) continue;
      if (auto r = attempt(*t2)) return *r;
    }
  }
  throw invalid_input(
      "five_chain_create: no destabilization found within budget");
}

// Surgery description of the 3-manifold spanned by a standard (alpha,
// gamma) pairing: the gamma curves not matched as parallel form the link,
// each carrying the framing induced by the surface.
struct FramedComponent {
  Curve curve;
  int gamma_index = 0;
  std::string framing = "surface framing";
};

inline std::vector<FramedComponent> surgery_link(const Diagram& d) {
  auto fams = trisection_families(d);
  const Surface& s = d.surface;
  auto m = is_standard_pairing(s, fams[0], fams[2]);
  if (!m)
    throw invalid_input("surgery_link: (alpha, gamma) pairing is not standard");
  std::vector<Curve> all = fams[0];
  all.insert(all.end(), fams[2].begin(), fams[2].end());
  separate_slots(all);
  if (!tighten_renorm(s, all))
    throw invalid_input("surgery_link: tightening failed");
  renormalize_slots(s, all);
  int g = s.genus();
  Arrangement ar(s, all);
  std::vector<FramedComponent> out;
  for (int i = 0; i < g; i++) {
    int j = m->matching[i];
    if (ar.crossings_between(i, g + j).empty()) continue;  // parallel pair
    out.push_back({all[g + j], j + 1, "surface framing"});
  }
  if ((int)out.size() != g - m->k)
    throw std::logic_error("surgery_link: component count mismatch");
  return out;
}


}  // namespace tricurves
