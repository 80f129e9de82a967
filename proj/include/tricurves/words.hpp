#pragma once
// Free-group and surface-group word toolkit plus exact integer linear
// algebra: free/cyclic reduction, Whitehead primitivity (rank <= 3), Dehn
// conjugacy for surface groups, Smith normal form.
//
// Letters are nonzero ints: +k is the k-th generator, -k its inverse.

#include <cstdlib>

#include "tricurves/arrangement.hpp"

namespace tricurves {

using Word = std::vector<int>;

inline Word free_reduce(const Word& w) {
  Word out;
  for (int g : w) {
    if (!out.empty() && out.back() == -g)
      out.pop_back();
    else
      out.push_back(g);
  }
  return out;
}

inline Word cyclic_reduce(Word w) {
  w = free_reduce(w);
  while (w.size() >= 2 && w.front() == -w.back()) {
    w.erase(w.begin());
    w.pop_back();
  }
  return w;
}

inline bool is_trivial_free(const Word& w) { return cyclic_reduce(w).empty(); }

inline Word inverse_word(const Word& w) {
  Word out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
  return out;
}

// Lexicographically least cyclic rotation (for canonical comparison).
inline Word least_rotation(const Word& w) {
  if (w.empty()) return w;
  Word best = w, cur = w;
  for (size_t i = 1; i < w.size(); i++) {
    std::rotate(cur.begin(), cur.begin() + 1, cur.end());
    if (cur < best) best = cur;
  }
  return best;
}

// --- Whitehead's algorithm ---

// All type-II Whitehead automorphisms for rank r: multiplier letter a and a
// subset of the other letters that get a multiplied on the right.
// phi(x) for positive generator x: (x in A, -x in A) -> a^-1 x a;
// (x in A) -> x a; (-x in A) -> a^-1 x; else x.  phi(a) = a.
struct WhiteheadAuto {
  int a;                 // multiplier letter (signed)
  std::vector<int> in;   // membership bitmask over signed letters
  int rank;
  bool member(int letter) const {
    int idx = letter > 0 ? letter - 1 : rank + (-letter) - 1;
    return in[idx] != 0;
  }
};

inline std::vector<WhiteheadAuto> whitehead_autos(int rank) {
  std::vector<WhiteheadAuto> out;
  std::vector<int> letters;
  for (int i = 1; i <= rank; i++) {
    letters.push_back(i);
    letters.push_back(-i);
  }
  for (int a : letters) {
    std::vector<int> others;
    for (int l : letters)
      if (std::abs(l) != std::abs(a)) others.push_back(l);
    for (int mask = 0; mask < (1 << others.size()); mask++) {
      WhiteheadAuto w;
      w.a = a;
      w.rank = rank;
      w.in.assign(2 * rank, 0);
      for (size_t j = 0; j < others.size(); j++)
        if (mask & (1 << j)) {
          int l = others[j];
          w.in[l > 0 ? l - 1 : rank + (-l) - 1] = 1;
        }
      out.push_back(std::move(w));
    }
  }
  return out;
}

inline Word apply_auto(const WhiteheadAuto& wa, const Word& w) {
  Word out;
  for (int g : w) {
    // phi(x^-1) = phi(x)^-1: x in A, -x in A -> a^-1 x a;
    // only x in A -> x a;  only -x in A -> a^-1 x.
    int x = std::abs(g);
    if (x == std::abs(wa.a)) {
      out.push_back(g);
      continue;
    }
    bool pa = wa.member(x), na = wa.member(-x);
    Word im;
    if (pa && na)
      im = {-wa.a, x, wa.a};
    else if (pa)
      im = {x, wa.a};
    else if (na)
      im = {-wa.a, x};
    else
      im = {x};
    if (g < 0) im = inverse_word(im);
    out.insert(out.end(), im.begin(), im.end());
  }
  return cyclic_reduce(out);
}

// Minimal cyclic length of the automorphism orbit, by greedy Whitehead
// length reduction (correct by the peak-reduction theorem).
inline Word whitehead_minimize(Word w, int rank) {
  if (rank > 3) throw invalid_input("rank > 3 not supported");
  w = cyclic_reduce(std::move(w));
  auto autos = whitehead_autos(rank);
  bool improved = true;
  while (improved && !w.empty()) {
    improved = false;
    for (auto& wa : autos) {
      Word v = apply_auto(wa, w);
      if (v.size() < w.size()) {
        w = std::move(v);
        improved = true;
        break;
      }
    }
  }
  return w;
}

inline bool is_primitive_free(const Word& w, int rank) {
  return whitehead_minimize(w, rank).size() == 1;
}

// --- surface-group conjugacy (Dehn's algorithm) ---

inline Word surface_relator(int g) {
  Word r;
  for (int i = 0; i < g; i++) {
    int a = 2 * i + 1, b = 2 * i + 2;
    r.insert(r.end(), {a, b, -a, -b});
  }
  return r;
}

// One pass of cyclic Dehn reduction: replace any cyclic subword that is
// more than half of a (cyclic rotation of a) relator or its inverse by the
// shorter complement.  Returns true if a replacement happened.
inline bool dehn_step(Word& w, const std::vector<Word>& sym, int half) {
  int n = (int)w.size();
  if (n == 0) return false;
  for (auto& r : sym) {
    int rl = (int)r.size();
    for (int len = std::min(n, rl - 1); len > half; len--) {
      // subword of w (cyclic) of length len matching a prefix of r
      for (int st = 0; st < n && len <= n; st++) {
        bool ok = true;
        for (int i = 0; i < len && ok; i++)
          if (w[(st + i) % n] != r[i]) ok = false;
        if (!ok) continue;
        // replace by inverse of the rest of r
        Word rest(r.begin() + len, r.end());
        Word repl = inverse_word(rest);
        Word nw;
        for (int i = len; i < n; i++) nw.push_back(w[(st + i) % n]);
        nw.insert(nw.end(), repl.begin(), repl.end());
        w = cyclic_reduce(nw);
        return true;
      }
    }
  }
  return false;
}

inline std::vector<Word> symmetrized_relators(int g) {
  std::vector<Word> sym;
  Word r = surface_relator(g);
  for (Word base : {r, inverse_word(r)}) {
    Word cur = base;
    for (size_t i = 0; i < base.size(); i++) {
      sym.push_back(cur);
      std::rotate(cur.begin(), cur.begin() + 1, cur.end());
    }
  }
  std::sort(sym.begin(), sym.end());
  sym.erase(std::unique(sym.begin(), sym.end()), sym.end());
  return sym;
}

inline Word dehn_reduce(Word w, int genus) {
  auto sym = symmetrized_relators(genus);
  int half = 2 * genus;
  w = cyclic_reduce(std::move(w));
  while (dehn_step(w, sym, half)) {
  }
  return w;
}

// Orbit of a Dehn-reduced word under replacing exact-half-relator subwords
// by their complements (these keep the length; needed for exact conjugacy
// comparison at the half-length boundary).
inline std::set<Word> half_swap_orbit(const Word& w0, int genus,
                                      size_t cap = 4096) {
  auto sym = symmetrized_relators(genus);
  int half = 2 * genus;
  std::set<Word> seen;
  std::vector<Word> queue{least_rotation(w0)};
  seen.insert(queue[0]);
  while (!queue.empty() && seen.size() < cap) {
    Word w = queue.back();
    queue.pop_back();
    int n = (int)w.size();
    if (n < half) continue;
    for (auto& r : sym) {
      for (int st = 0; st < n; st++) {
        bool ok = true;
        for (int i = 0; i < half && ok; i++)
          if (w[(st + i) % n] != r[i]) ok = false;
        if (!ok) continue;
        Word rest(r.begin() + half, r.end());
        Word repl = inverse_word(rest);
        Word nw;
        for (int i = half; i < n; i++) nw.push_back(w[(st + i) % n]);
        nw.insert(nw.end(), repl.begin(), repl.end());
        nw = least_rotation(cyclic_reduce(nw));
        if (seen.insert(nw).second) queue.push_back(nw);
      }
    }
  }
  return seen;
}

// Free-homotopy equality of unoriented loops on the closed genus-g surface:
// conjugate or inverse-conjugate in pi_1.
inline bool surface_conjugacy_equal(const Word& w1, const Word& w2, int genus) {
  if (genus == 1) {  // abelian: compare exponent sums up to sign
    long long a1 = 0, b1 = 0, a2 = 0, b2 = 0;
    for (int g : w1) (std::abs(g) == 1 ? a1 : b1) += g > 0 ? 1 : -1;
    for (int g : w2) (std::abs(g) == 1 ? a2 : b2) += g > 0 ? 1 : -1;
    return (a1 == a2 && b1 == b2) || (a1 == -a2 && b1 == -b2);
  }
  Word r1 = dehn_reduce(w1, genus);
  Word r2 = dehn_reduce(w2, genus);
  if (r1.empty() || r2.empty()) return r1.empty() && r2.empty();
  auto o1 = half_swap_orbit(r1, genus);
  auto o2 = half_swap_orbit(r2, genus);
  auto o2i = half_swap_orbit(least_rotation(inverse_word(r2)), genus);
  for (auto& w : o1)
    if (o2.count(w) || o2i.count(w)) return true;
  return false;
}

// --- intersection words ---

// Reads the signed crossings of curve c with the curves A_1..A_k in
// traversal order along c; returns the cyclically reduced word over x_1..x_k.
// c is placed as curve 0 and A_i as curve i in one arrangement, so all
// slot sets must be disjoint.
inline Word intersection_word(const Surface& s, const Curve& c,
                              const std::vector<Curve>& A) {
  std::vector<Curve> all{c};
  for (auto& a : A) all.push_back(a);
  Arrangement ar(s, all);
  Word w;
  for (int id : ar.along_curve(0)) {
    auto& X = ar.crossings()[id];
    int other, sgn;
    if (X.curve_a == 0 && X.curve_b == 0) continue;  // self-crossing: invalid c
    if (X.curve_a == 0) {
      other = X.curve_b;
      sgn = X.sign;
    } else {
      other = X.curve_a;
      sgn = -X.sign;
    }
    w.push_back(sgn * other);  // letter x_other^{sgn}
  }
  return cyclic_reduce(w);
}

// --- Smith normal form ---

struct SNFResult {
  std::vector<bigint> factors;  // nonzero invariant factors d1 | d2 | ...
  int rank = 0;                 // number of nonzero factors
  int rows = 0, cols = 0;
};

inline SNFResult smith_normal_form(std::vector<std::vector<bigint>> M) {
  SNFResult res;
  res.rows = (int)M.size();
  res.cols = res.rows ? (int)M[0].size() : 0;
  int n = res.rows, m = res.cols;
  int t = 0;
  while (t < n && t < m) {
    // find pivot: smallest nonzero |entry| in submatrix
    int pi = -1, pj = -1;
    bigint best = 0;
    for (int i = t; i < n; i++)
      for (int j = t; j < m; j++) {
        if (M[i][j] == 0) continue;
        bigint a = abs(M[i][j]);
        if (pi < 0 || a < best) {
          best = a;
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;
    std::swap(M[pi], M[t]);
    for (int i = 0; i < n; i++) std::swap(M[i][pj], M[i][t]);
    bool again = true;
    while (again) {
      again = false;
      for (int i = t + 1; i < n; i++) {
        if (M[i][t] == 0) continue;
        bigint q = M[i][t] / M[t][t];
        for (int j = t; j < m; j++) M[i][j] -= q * M[t][j];
        if (M[i][t] != 0) {
          std::swap(M[i], M[t]);
          again = true;
        }
      }
      for (int j = t + 1; j < m; j++) {
        if (M[t][j] == 0) continue;
        bigint q = M[t][j] / M[t][t];
        for (int i = t; i < n; i++) M[i][j] -= q * M[i][t];
        if (M[t][j] != 0) {
          for (int i = 0; i < n; i++) std::swap(M[i][j], M[i][t]);
          again = true;
        }
      }
    }
    // divisibility: fold any entry not divisible by the pivot into row t
    for (int i = t + 1; i < n; i++)
      for (int j = t + 1; j < m; j++)
        if (M[i][j] % M[t][t] != 0) {
          for (int k = t; k < m; k++) M[t][k] += M[i][k];
          again = true;
          i = n;
          break;
        }
    if (again) continue;  // redo elimination at the same t
    t++;
  }
  for (int i = 0; i < std::min(n, m); i++) {
    if (i < n && i < m && M[i][i] != 0) res.factors.push_back(abs(M[i][i]));
  }
  res.rank = (int)res.factors.size();
  return res;
}

// Invariant factors > 1 (torsion) and free rank of Z^ambient / rowspan(M).
struct QuotientInvariants {
  std::vector<bigint> torsion;
  int free_rank = 0;
};

inline QuotientInvariants quotient_invariants(
    const std::vector<std::vector<long long>>& rows, int ambient) {
  std::vector<std::vector<bigint>> M;
  for (auto& r : rows) {
    if ((int)r.size() != ambient) throw invalid_input("row size mismatch");
    M.push_back({r.begin(), r.end()});
  }
  QuotientInvariants q;
  if (M.empty()) {
    q.free_rank = ambient;
    return q;
  }
  auto snf = smith_normal_form(std::move(M));
  for (auto& d : snf.factors)
    if (d > 1) q.torsion.push_back(d);
  q.free_rank = ambient - snf.rank;
  return q;
}

}  // namespace tricurves
