#pragma once
// Analysis of a pair of cut systems (A, B) on the same surface: first
// homology and intersection determinant of the glued 3-manifold,
// standardness detection, waves and wave surgery, wave reduction to a
// standard fixpoint, Whitehead-graph slope/winding for genus-2 triples,
// and budgeted searches for reducing curves and stabilizing pairs.
//
// All curves of a pair are expected in a common slot coordinate system
// (as stored in one diagram).  Ad-hoc comparisons between independently
// built curves go through separate_slots + tightening internally.

#include "tricurves/handlebody.hpp"

namespace tricurves {

// --- small exact helpers ---

// Bigon removal with slot renormalization after every move: repeated moves
// can otherwise collide in the +-1 slot offsets they allocate.
inline bool tighten_renorm(const Surface& s, std::vector<Curve>& cs,
                           long long budget = 100000) {
  renormalize_slots(s, cs);
  for (long long i = 0; i < budget; i++) {
    if (!remove_one_bigon(s, cs)) return true;
    renormalize_slots(s, cs);
  }
  return false;
}

inline bigint det_bigint(std::vector<std::vector<bigint>> m) {
  int n = (int)m.size();
  for (auto& r : m)
    if ((int)r.size() != n) throw invalid_input("det of non-square matrix");
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  bigint prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; k++) {
    if (m[k][k] == 0) {
      int p = -1;
      for (int i = k + 1; i < n; i++)
        if (m[i][k] != 0) { p = i; break; }
      if (p < 0) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; i++)
      for (int j = k + 1; j < n; j++)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

// Geometric intersection number of two independently built curves.
inline long long geo_pair(const Surface& s, const Curve& c, const Curve& cp,
                          long long budget = 100000) {
  std::vector<Curve> cs{c, cp};
  separate_slots(cs);
  return geometric_int(s, cs[0], cs[1], budget);
}

// Does c bound a disk in the surface itself (null-homotopic)?
inline bool bounds_disk_in_surface(const Surface& s, const Curve& c) {
  Arrangement ar(s, {c});
  for (auto& r : ar.regions({0}))
    if (r.chi == 1 && r.circles.size() == 1) return true;
  return false;
}

// Are c1 and c2 isotopic?  Tightens a copy of the pair; parallel curves
// become disjoint and cobound an annulus complement region.
inline bool parallel_curves(const Surface& s, const Curve& c1,
                            const Curve& c2) {
  auto h1 = homology_class(s, c1), h2 = homology_class(s, c2);
  auto neg = h2;
  for (auto& v : neg) v = -v;
  if (h1 != h2 && h1 != neg) return false;
  std::vector<Curve> cs{c1, c2};
  separate_slots(cs);
  auto r = tighten_pair(s, cs[0], cs[1]);
  if (!r.resolved || r.crossings != 0) return false;
  if (r.a.xs.empty() || r.b.xs.empty()) return false;
  Arrangement ar(s, {r.a, r.b});
  for (auto& reg : ar.regions({0, 1})) {
    if (reg.chi != 0 || reg.circles.size() != 2) continue;
    auto tr = reg.traces();
    if (tr.size() == 2 && tr[0].size() == 1 && tr[1].size() == 1 &&
        tr[0][0].first != tr[1][0].first)
      return true;
  }
  return false;
}

// --- pairing invariants ---

struct PairingReport {
  std::vector<bigint> torsion;  // invariant factors > 1 of H1
  int free_rank = 0;
  bigint det = 0;  // det of the algebraic intersection matrix
  std::optional<int> k;         // standardness: number of parallel pairs
  std::vector<int> matching;    // B-index paired with A_i
  std::string level = "unknown";  // certified-standard | invariant-consistent
                                  // | unknown
  std::vector<std::string> witness;
};

// H1 of the closed 3-manifold glued from the two handlebodies: cokernel of
// the 2g x 2g matrix stacking the homology classes of A and B.
inline PairingReport pairing_invariants(const Surface& s,
                                        const std::vector<Curve>& A,
                                        const std::vector<Curve>& B) {
  int g = s.genus();
  if ((int)A.size() != g || (int)B.size() != g)
    throw invalid_input("pairing: need g curves per side");
  std::vector<std::vector<long long>> rows;
  for (auto& c : A) rows.push_back(homology_class(s, c));
  for (auto& c : B) rows.push_back(homology_class(s, c));
  PairingReport rep;
  auto q = quotient_invariants(rows, 2 * g);
  rep.torsion = q.torsion;
  rep.free_rank = q.free_rank;
  auto M = intersection_matrix(s, A, B);
  std::vector<std::vector<bigint>> Mb;
  for (auto& r : M) Mb.push_back({r.begin(), r.end()});
  rep.det = det_bigint(std::move(Mb));
  return rep;
}

// --- standardness ---

struct StandardMatch {
  int k = 0;                 // number of parallel pairs
  std::vector<int> matching; // matching[i] = B index paired with A_i
};

// Detects the standard pattern: a matching of A- and B-curves so that each
// matched pair meets 0 or 1 times, unmatched pairs are disjoint, and
// 0-pairs are parallel curves.  k = number of parallel pairs.
inline std::optional<StandardMatch> is_standard_pairing(
    const Surface& s, std::vector<Curve> A, std::vector<Curve> B) {
  int g = s.genus();
  if ((int)A.size() != g || (int)B.size() != g)
    throw invalid_input("pairing: need g curves per side");
  std::vector<Curve> all = A;
  all.insert(all.end(), B.begin(), B.end());
  if (!tighten_renorm(s, all)) throw invalid_input("tightening did not resolve");
  renormalize_slots(s, all);
  for (int i = 0; i < g; i++) A[i] = all[i];
  for (int i = 0; i < g; i++) B[i] = all[g + i];
  Arrangement ar(s, all);
  std::vector<std::vector<long long>> N(g, std::vector<long long>(g, 0));
  for (int i = 0; i < g; i++)
    for (int j = 0; j < g; j++)
      N[i][j] = (long long)ar.crossings_between(i, g + j).size();
  std::vector<int> perm(g);
  for (int i = 0; i < g; i++) perm[i] = i;
  do {
    bool ok = true;
    for (int i = 0; i < g && ok; i++)
      for (int j = 0; j < g && ok; j++)
        if (N[i][perm[j]] != 0 && !(i == j && N[i][perm[j]] == 1)) ok = false;
    if (!ok) continue;
    StandardMatch m;
    m.matching = perm;
    for (int i = 0; i < g && ok; i++)
      if (N[i][perm[i]] == 0) {
        if (parallel_curves(s, A[i], B[perm[i]]))
          m.k++;
        else
          ok = false;
      }
    if (ok) return m;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

// Genus-2 lens block pattern: one matched pair meeting |p| >= 2 times with
// coherent signs, the other parallel, cross pairs disjoint.
inline std::optional<long long> lens_block_pattern(const Surface& s,
                                                   std::vector<Curve> A,
                                                   std::vector<Curve> B) {
  if (s.genus() != 2 || A.size() != 2 || B.size() != 2) return std::nullopt;
  std::vector<Curve> all = A;
  all.insert(all.end(), B.begin(), B.end());
  if (!tighten_renorm(s, all)) return std::nullopt;
  renormalize_slots(s, all);
  Arrangement ar(s, all);
  for (int j0 = 0; j0 < 2; j0++) {
    int j1 = 1 - j0;
    long long p = (long long)ar.crossings_between(0, 2 + j0).size();
    if (p < 2) continue;
    if (!ar.crossings_between(0, 2 + j1).empty()) continue;
    if (!ar.crossings_between(1, 2 + j0).empty()) continue;
    if (!ar.crossings_between(1, 2 + j1).empty()) continue;
    if (std::abs(algebraic_int(s, all[0], all[2 + j0])) != p) continue;
    if (!parallel_curves(s, all[1], all[2 + j1])) continue;
    return p;
  }
  return std::nullopt;
}

// --- waves ---

struct WaveMove {
  int curve = 0;  // index into A followed by B
  int side = 0;   // 0 = left of curve travel, 1 = right
  int from_chord = 0, to_chord = 0;
  std::vector<Crossing> arc;  // interior crossings, x16-scaled slot space
  Curve replacement;          // x16-scaled
};

namespace detail {

inline long long family_cross_total(const Surface& s,
                                    const std::vector<Curve>& w, int g) {
  long long t = 0;
  for (int i = 0; i < g; i++)
    for (int j = g; j < 2 * g; j++)
      t += (long long)crossings(s, w[i], w[j]).size();
  return t;
}

// Checks that substituting `cand` for curve `c` keeps both cut systems
// valid and strictly reduces the total crossing count.
inline bool wave_accepts(const Surface& s, const std::vector<Curve>& work,
                         int c, const Curve& cand, long long before) {
  if (cand.xs.empty() || !validate_curve(s, cand).empty()) return false;
  int g = s.genus();
  std::vector<Curve> nw = work;
  nw[c] = cand;
  int base = c < g ? 0 : g;
  std::vector<Curve> fam(nw.begin() + base, nw.begin() + base + g);
  if (!validate_cut_system(s, fam).empty()) return false;
  return family_cross_total(s, nw, g) < before;
}

}  // namespace detail

// Searches the complement regions of the full diagram for an arc with both
// endpoints on the same side of one curve whose surgery strictly reduces
// the total crossing count.  Deterministic: first acceptable candidate in
// (region, dart, dart) order.
inline std::optional<WaveMove> find_wave(const Surface& s,
                                         const std::vector<Curve>& A,
                                         const std::vector<Curve>& B) {
  int g = s.genus();
  std::vector<Curve> work = A;
  work.insert(work.end(), B.begin(), B.end());
  scale_slots(work, 16);
  long long before = detail::family_cross_total(s, work, g);
  Arrangement ar(s, work);
  auto& D = ar.darts();
  // sorted per-edge slot values for mid-gap allocation
  std::vector<std::vector<std::int64_t>> vals(s.num_edges());
  for (auto& c : work)
    for (auto& x : c.xs) vals[x.edge].push_back(x.slot);
  for (auto& v : vals) std::sort(v.begin(), v.end());
  auto regs = ar.regions(ar.all_curve_ids());
  for (auto& reg : regs) {
    std::vector<char> in_reg(ar.num_faces(), 0);
    for (int f : reg.faces) in_reg[f] = 1;
    std::vector<int> chords;  // chord darts bordering this region
    for (int d = 0; d < (int)D.size(); d++)
      if (D[d].is_chord && in_reg[ar.face_left(d)]) chords.push_back(d);
    for (int d1 : chords) {
      // BFS inside the region from d1's face across edge segments only
      std::vector<int> par(ar.num_faces(), -2);
      par[ar.face_left(d1)] = -1;
      std::deque<int> q{ar.face_left(d1)};
      while (!q.empty()) {
        int f = q.front();
        q.pop_front();
        for (int d = 0; d < (int)D.size(); d++) {
          if (ar.face_left(d) != f || D[d].is_chord) continue;
          int h = ar.face_left(D[d].twin);
          if (!in_reg[h] || par[h] != -2) continue;
          par[h] = d;
          q.push_back(h);
        }
      }
      for (int d2 : chords) {
        if (d2 == d1) continue;
        if (D[d2].curve != D[d1].curve) continue;
        if (D[d2].along != D[d1].along) continue;  // same side of the curve
        if (par[ar.face_left(d2)] == -2) continue;
        // reconstruct the arc
        std::vector<Crossing> arc;
        for (int f = ar.face_left(d2); par[f] != -1; f = ar.face_left(par[f])) {
          int d = par[f];
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
          arc.push_back({e, D[d].along ? -1 : +1, val});
        }
        std::reverse(arc.begin(), arc.end());
        int c = D[d1].curve;
        const Curve& base = work[c];
        int m = (int)base.xs.size();
        int k1 = D[d1].chord, k2 = D[d2].chord;
        int len = ((k2 - k1) % m + m) % m;
        // candidate 1: forward sub-arc k1 -> k2, then the wave reversed
        Curve r1;
        for (int t = 1; t <= len; t++) r1.xs.push_back(base.xs[(k1 + t) % m]);
        for (auto it = arc.rbegin(); it != arc.rend(); ++it)
          r1.xs.push_back({it->edge, -it->sign, it->slot});
        // candidate 2: forward sub-arc k2 -> k1, then the wave forward
        Curve r2;
        for (int t = 1; t <= m - len; t++)
          r2.xs.push_back(base.xs[(k2 + t) % m]);
        r2.xs.insert(r2.xs.end(), arc.begin(), arc.end());
        for (const Curve& r : {r1, r2}) {
          if (!detail::wave_accepts(s, work, c, r, before)) continue;
          WaveMove w;
          w.curve = c;
          w.side = D[d1].along ? 0 : 1;
          w.from_chord = k1;
          w.to_chord = k2;
          w.arc = arc;
          w.replacement = r;
          return w;
        }
      }
    }
  }
  return std::nullopt;
}

// Applies a wave move, replacing the base curve.  Re-verifies the move on
// the given diagram; rejects degenerate waves.
inline std::pair<std::vector<Curve>, std::vector<Curve>> wave_surgery(
    const Surface& s, const std::vector<Curve>& A, const std::vector<Curve>& B,
    const WaveMove& w) {
  int g = s.genus();
  std::vector<Curve> work = A;
  work.insert(work.end(), B.begin(), B.end());
  scale_slots(work, 16);
  long long before = detail::family_cross_total(s, work, g);
  if (w.curve < 0 || w.curve >= 2 * g) throw invalid_input("bad wave curve id");
  if (!detail::wave_accepts(s, work, w.curve, w.replacement, before))
    throw invalid_input("degenerate wave: surgery does not reduce");
  work[w.curve] = w.replacement;
  renormalize_slots(s, work);
  return {{work.begin(), work.begin() + g}, {work.begin() + g, work.end()}};
}

struct WaveReduceResult {
  PairingReport report;
  std::vector<Curve> A, B;
  int waves = 0;
};

// Iterates tighten + find_wave + wave_surgery to a fixpoint.  A fixpoint
// matching the standard pattern (or the genus-2 lens block pattern) is
// certified; a wave-free non-standard fixpoint reports the invariants only.
inline WaveReduceResult wave_reduce(const Surface& s, std::vector<Curve> A,
                                    std::vector<Curve> B,
                                    long long budget = 64) {
  int g = s.genus();
  WaveReduceResult res;
  std::vector<std::string> wit;
  for (;;) {
    std::vector<Curve> all = A;
    all.insert(all.end(), B.begin(), B.end());
    if (!tighten_renorm(s, all)) throw invalid_input("tightening did not resolve");
    renormalize_slots(s, all);
    A.assign(all.begin(), all.begin() + g);
    B.assign(all.begin() + g, all.end());
    res.report = pairing_invariants(s, A, B);
    res.report.witness = wit;
    if (auto m = is_standard_pairing(s, A, B)) {
      res.report.k = m->k;
      res.report.matching = m->matching;
      res.report.level = "certified-standard";
      res.report.witness.push_back("fixpoint matches the standard pattern");
      break;
    }
    if (auto p = lens_block_pattern(s, A, B)) {
      res.report.level = "certified-standard";
      res.report.witness.push_back("fixpoint matches the lens block pattern p=" +
                                   std::to_string(*p));
      break;
    }
    if (res.waves >= budget) {
      res.report.level = "unknown";
      res.report.witness.push_back("wave budget exhausted");
      break;
    }
    auto w = find_wave(s, A, B);
    if (!w) {
      res.report.level = "invariant-consistent";
      res.report.witness.push_back("wave-free non-standard fixpoint");
      break;
    }
    std::tie(A, B) = wave_surgery(s, A, B, *w);
    res.waves++;
    wit.push_back("wave on curve " + std::to_string(w->curve) + " side " +
                  std::to_string(w->side));
  }
  res.A = std::move(A);
  res.B = std::move(B);
  return res;
}

// --- Whitehead graph slope and winding ---

struct SlopeWinding {
  long long m = 1, n = 0;  // slope m/n, n = 0 means 1/0
  long long W1 = 0, W2 = 0;
};

// For a genus-2 triple where (Sigma;A,B) and (Sigma;A,C) are standard
// genus-2 diagrams of S^3 and A is the one-crossing dual system, computes
// the common slope of the B-arcs in the cut-open 4-holed sphere (C-arcs
// normalized to slope 1/0) and the signed windings W_i of B_i against C_i.
// Orientations are normalized so each matched pair has algebraic
// intersection +1 with its A-curve.
inline SlopeWinding whitehead_slope_winding(const Surface& s,
                                            std::vector<Curve> A,
                                            std::vector<Curve> B,
                                            std::vector<Curve> C) {
  if (s.genus() != 2) throw invalid_input("slope/winding needs genus 2");
  if (A.size() != 2 || B.size() != 2 || C.size() != 2)
    throw invalid_input("slope/winding: need 2 curves per system");
  for (auto& a : A)
    if (a.xs.size() != 1)
      throw invalid_input("slope/winding: first system must be one-crossing duals");
  auto mb = is_standard_pairing(s, A, B);
  auto mc = is_standard_pairing(s, A, C);
  if (!mb || mb->k != 0 || !mc || mc->k != 0)
    throw invalid_input("slope/winding: systems do not pair standardly");
  std::vector<Curve> rb(2), rc(2);
  for (int i = 0; i < 2; i++) {
    rb[i] = B[mb->matching[i]];
    rc[i] = C[mc->matching[i]];
    if (algebraic_int(s, A[i], rb[i]) < 0) rb[i] = rb[i].reversed();
    if (algebraic_int(s, A[i], rc[i]) < 0) rc[i] = rc[i].reversed();
  }
  std::vector<Curve> all = rb;
  all.insert(all.end(), rc.begin(), rc.end());
  if (!tighten_renorm(s, all)) throw invalid_input("tightening did not resolve");
  renormalize_slots(s, all);
  Arrangement ar(s, all);
  SlopeWinding out;
  long long diag[2], cross01, cross10;
  for (int i = 0; i < 2; i++) {
    long long cnt = (long long)ar.crossings_between(i, 2 + i).size();
    diag[i] = algebraic_int(s, all[i], all[2 + i]);
    if (std::abs(diag[i]) != cnt)
      throw invalid_input("slope/winding: incoherent matched-pair crossings");
  }
  cross01 = (long long)ar.crossings_between(0, 3).size();
  cross10 = (long long)ar.crossings_between(1, 2).size();
  out.W1 = diag[0];
  out.W2 = diag[1];
  long long n = cross01 + cross10;
  if (n == 0) {
    out.m = 1;
    out.n = 0;
    return out;
  }
  if (n != 2)
    throw invalid_input("slope/winding: unsupported essential crossing count");
  long long s01 = algebraic_int(s, all[0], all[3]);
  long long s10 = algebraic_int(s, all[1], all[2]);
  if (std::abs(s01) != 1 || s01 != s10)
    throw invalid_input("slope/winding: incoherent cross-pair signs");
  out.m = s01;
  out.n = 2;
  return out;
}

// --- reducing curves and stabilization ---

namespace detail {

// Candidate compressing-curve boundaries for one handlebody side: the cut
// system members plus curves obtained by up to `depth` handleslides; each
// candidate bounds a disk on that side by construction.
inline std::vector<Curve> disk_candidates(const Surface& s,
                                          const std::vector<Curve>& A,
                                          int depth, long long& budget) {
  std::vector<Curve> out = A;
  int g = (int)A.size();
  std::vector<std::vector<Curve>> frontier{A};
  for (int d = 0; d < depth; d++) {
    std::vector<std::vector<Curve>> next;
    for (auto& sys : frontier)
      for (int i = 0; i < g && budget > 0; i++)
        for (int j = 0; j < g && budget > 0; j++) {
          if (i == j) continue;
          budget--;
          auto cp = sys;
          try {
            handleslide(s, cp, i, j);
          } catch (const invalid_input&) {
            continue;
          }
          out.push_back(cp[i]);
          next.push_back(std::move(cp));
        }
    frontier = std::move(next);
    if (budget <= 0) break;
  }
  return out;
}

}  // namespace detail

// Budgeted certificate search for a curve bounding disks on both sides.
// Absence within budget is not a proof of nonexistence.
inline std::optional<Curve> find_reducing_curve(const Surface& s,
                                                const std::vector<Curve>& A,
                                                const std::vector<Curve>& B,
                                                long long budget = 16) {
  long long ba = budget, bb = budget;
  for (auto& c : detail::disk_candidates(s, A, 2, ba))
    if (!bounds_disk_in_surface(s, c) && bounds_disk(s, c, B)) return c;
  for (auto& c : detail::disk_candidates(s, B, 2, bb))
    if (!bounds_disk_in_surface(s, c) && bounds_disk(s, c, A)) return c;
  return std::nullopt;
}

// Budgeted search for a stabilizing pair: c bounding a disk on the A side,
// c' on the B side, meeting exactly once.
inline std::optional<std::pair<Curve, Curve>> is_stabilized_pair(
    const Surface& s, const std::vector<Curve>& A, const std::vector<Curve>& B,
    long long budget = 16) {
  long long ba = budget, bb = budget;
  auto ca = detail::disk_candidates(s, A, 1, ba);
  auto cb = detail::disk_candidates(s, B, 1, bb);
  for (auto& c : ca)
    for (auto& cp : cb)
      if (geo_pair(s, c, cp) == 1) return std::make_pair(c, cp);
  return std::nullopt;
}

}  // namespace tricurves
