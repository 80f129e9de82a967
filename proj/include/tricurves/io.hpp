#pragma once
// Line-oriented ".tri" diagram format:
//   surface genus <g>
//   curve <family>.<index> : <edge><sign>@<slot> ...
//   cutsystem <family>
// '#' starts a comment; blank lines ignored.

#include <istream>
#include <ostream>
#include <sstream>

#include "tricurves/surface.hpp"

namespace tricurves {

inline Diagram parse_tri(std::istream& in) {
  Diagram d;
  bool have_surface = false;
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& msg) {
    throw invalid_input("line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    lineno++;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    if (kw == "surface") {
      std::string g_kw;
      int g;
      if (!(ls >> g_kw >> g) || g_kw != "genus") fail("expected: surface genus <g>");
      if (g < 1 || g > 64) fail("genus out of range");
      if (have_surface) fail("duplicate surface line");
      d.surface = Surface::standard(g);
      have_surface = true;
    } else if (kw == "curve") {
      if (!have_surface) fail("curve before surface line");
      std::string name, colon;
      if (!(ls >> name >> colon) || colon != ":")
        fail("expected: curve <family>.<index> : ...");
      auto dot = name.rfind('.');
      if (dot == std::string::npos || dot == 0 || dot + 1 == name.size())
        fail("curve name must be <family>.<index>");
      NamedCurve nc;
      nc.family = name.substr(0, dot);
      try {
        size_t used = 0;
        nc.index = std::stoi(name.substr(dot + 1), &used);
        if (used != name.size() - dot - 1) fail("bad curve index");
      } catch (const std::logic_error&) {
        fail("bad curve index");
      }
      if (nc.index < 1) fail("curve index must be >= 1");
      for (auto& existing : d.curves)
        if (existing.family == nc.family && existing.index == nc.index)
          fail("duplicate curve name " + name);
      std::string tok;
      while (ls >> tok) {
        // <edge><sign>@<slot>, e.g. a1+@3 or b2-@0 (also accepts U+2212).
        auto at = tok.find('@');
        if (at == std::string::npos || at + 1 == tok.size())
          fail("bad crossing token: " + tok);
        std::string head = tok.substr(0, at), slot_s = tok.substr(at + 1);
        Crossing x;
        if (head.size() >= 4 && head.substr(head.size() - 3) == "−") {
          x.sign = -1;
          head.resize(head.size() - 3);
        } else if (!head.empty() && (head.back() == '+' || head.back() == '-')) {
          x.sign = head.back() == '+' ? +1 : -1;
          head.pop_back();
        } else {
          fail("bad crossing token: " + tok);
        }
        try {
          x.edge = d.surface.edge_index(head);
        } catch (const invalid_input& e) {
          fail(e.what());
        }
        try {
          size_t used = 0;
          x.slot = std::stoll(slot_s, &used);
          if (used != slot_s.size()) fail("bad slot: " + slot_s);
        } catch (const std::logic_error&) {
          fail("bad slot: " + slot_s);
        }
        if (x.slot < 0) fail("slot must be nonnegative");
        nc.curve.xs.push_back(x);
      }
      if (nc.curve.xs.empty()) fail("curve with zero crossings");
      d.curves.push_back(std::move(nc));
    } else if (kw == "cutsystem") {
      if (!have_surface) fail("cutsystem before surface line");
      std::string fam;
      if (!(ls >> fam)) fail("expected: cutsystem <family>");
      if (std::find(d.cutsystems.begin(), d.cutsystems.end(), fam) ==
          d.cutsystems.end())
        d.cutsystems.push_back(fam);
    } else {
      fail("unknown keyword: " + kw);
    }
  }
  if (!have_surface) throw invalid_input("missing surface line");
  // No two crossings may occupy the same (edge, slot) pair.
  std::set<std::pair<int, std::int64_t>> used;
  for (auto& nc : d.curves)
    for (auto& x : nc.curve.xs)
      if (!used.insert({x.edge, x.slot}).second)
        throw invalid_input("duplicate slot " + std::to_string(x.slot) +
                            " on edge " + d.surface.edge_names[x.edge]);
  return d;
}

inline Diagram parse_tri(const std::string& text) {
  std::istringstream in(text);
  return parse_tri(in);
}

inline void print_tri(std::ostream& out, const Diagram& d) {
  out << "surface genus " << d.surface.genus() << "\n";
  for (auto& nc : d.curves) {
    out << "curve " << nc.family << "." << nc.index << " :";
    for (auto& x : nc.curve.xs)
      out << " " << d.surface.edge_names[x.edge] << (x.sign > 0 ? '+' : '-')
          << "@" << x.slot;
    out << "\n";
  }
  for (auto& fam : d.cutsystems) out << "cutsystem " << fam << "\n";
}

inline std::string to_tri(const Diagram& d) {
  std::ostringstream out;
  print_tri(out, d);
  return out.str();
}

}  // namespace tricurves
