#include "curveforge/moves.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace curveforge {

namespace {

// Removes the given occurrences; arcs flanking a removed run merge.  A dot
// lands on the merged arc that begins at the last surviving occurrence
// before it; two dots meeting on one arc make the removal inadmissible.
DottedCurve delete_occurrences(const DottedCurve& c, std::vector<int> kill) {
  int n = c.size();
  std::vector<char> dead(n, 0);
  for (int p : kill) dead[p] = 1;
  DottedCurve out;
  std::vector<int> newpos(n, -1);
  for (int i = 0; i < n; ++i) {
    if (dead[i]) continue;
    newpos[i] = out.size();
    out.tokens.push_back(c.tokens[i]);
  }
  for (int t : c.dots) {
    if (out.tokens.empty()) {
      if (!out.dots.insert(0).second)
        throw CurveError("InvalidSite", "removal would merge two dotted arcs");
      continue;
    }
    int u = t;
    while (dead[u]) u = (u - 1 + n) % n;
    if (!out.dots.insert(newpos[u]).second)
      throw CurveError("InvalidSite", "removal would merge two dotted arcs");
  }
  return out;
}

// Splices token runs into arcs; the run on arc i sits between occurrences i
// and i+1, and a dot on arc i stays on the piece before the run.
DottedCurve insert_on_arcs(const DottedCurve& c,
                           const std::map<int, std::vector<Token>>& ins) {
  int n = c.size();
  DottedCurve out;
  if (n == 0) {
    auto it = ins.find(0);
    if (it != ins.end()) out.tokens = it->second;
    if (!c.dots.empty()) {
      // the dot stays behind the insertion point, i.e. on the wrap arc
      out.dots.insert(out.tokens.empty() ? 0 : static_cast<int>(out.tokens.size()) - 1);
    }
    return out;
  }
  std::vector<int> newpos(n);
  for (int i = 0; i < n; ++i) {
    newpos[i] = out.size();
    out.tokens.push_back(c.tokens[i]);
    auto it = ins.find(i);
    if (it != ins.end())
      for (const Token& t : it->second) out.tokens.push_back(t);
  }
  for (int t : c.dots) out.dots.insert(newpos[t]);
  return out;
}

std::vector<int> r3_block_positions(const DottedCurve& c, const MoveSite& s) {
  int n = c.size();
  return {s.a, (s.a + 1) % n, s.b, (s.b + 1) % n, s.c, (s.c + 1) % n};
}

// The three corner crossings own exactly the six occurrences at the ends of
// the triangle's edge arcs.
std::set<int> r3_corner_labels(const DottedCurve& c, const MoveSite& s) {
  std::set<int> out;
  for (int p : r3_block_positions(c, s)) out.insert(c.tokens[p].label);
  return out;
}

MoveSite normalize_triangle(std::vector<int> arcs) {
  // rotate the walk-ordered triple so the least arc leads
  int lead = 0;
  for (int i = 1; i < 3; ++i)
    if (arcs[i] < arcs[lead]) lead = i;
  MoveSite s;
  s.a = arcs[lead];
  s.b = arcs[(lead + 1) % 3];
  s.c = arcs[(lead + 2) % 3];
  return s;
}

}  // namespace

std::string move_kind_name(MoveKind k) {
  switch (k) {
    case MoveKind::R1Plus: return "r1+";
    case MoveKind::R1Minus: return "r1-";
    case MoveKind::R2Plus: return "r2+";
    case MoveKind::R2Minus: return "r2-";
    case MoveKind::R3: return "r3";
    case MoveKind::AlphaPlus: return "alpha+";
    case MoveKind::AlphaMinus: return "alpha-";
    case MoveKind::BetaPlus: return "beta+";
    case MoveKind::BetaMinus: return "beta-";
  }
  return "?";
}

// --- Reidemeister I ---

std::vector<MoveSite> sites_r1_minus(const DottedCurve& c) {
  std::vector<MoveSite> out;
  int n = c.size();
  for (int a = 0; a < n; ++a)
    if (c.tokens[a].label == c.tokens[(a + 1) % n].label && !c.dots.count(a)) {
      MoveSite s;
      s.a = a;
      out.push_back(s);
    }
  return out;
}

DottedCurve apply_r1_minus(const DottedCurve& c, const MoveSite& s) {
  int n = c.size();
  if (s.a < 0 || s.a >= n) throw CurveError("InvalidSite", "no such arc");
  int b = (s.a + 1) % n;
  if (c.tokens[s.a].label != c.tokens[b].label)
    throw CurveError("InvalidSite", "arc is not a kink loop");
  if (c.dots.count(s.a)) throw CurveError("InvalidSite", "1-gon is dotted");
  return delete_occurrences(c, {s.a, b});
}

std::vector<MoveSite> sites_r1_plus(const DottedCurve& c) {
  std::vector<MoveSite> out;
  for (int a = 0; a < c.arc_count(); ++a)
    for (int side = 0; side < 2; ++side) {
      MoveSite s;
      s.a = a;
      s.b = side;
      out.push_back(s);
    }
  return out;
}

DottedCurve apply_r1_plus(const DottedCurve& c, int arc, int side) {
  if (arc < 0 || arc >= c.arc_count()) throw CurveError("InvalidSite", "no such arc");
  if (side != 0 && side != 1) throw CurveError("InvalidSite", "side must be 0 or 1");
  int label = max_label(c) + 1;
  int sg = side == 0 ? +1 : -1;
  return insert_on_arcs(c, {{arc, {{label, sg}, {label, -sg}}}});
}

// --- Reidemeister II ---

std::vector<MoveSite> sites_r2_minus(const DottedCurve& c) {
  std::vector<MoveSite> out;
  CurveMap mp = build_map(c);
  for (const Face& f : mp.face_list) {
    if (f.degree() != 2) continue;
    if (f.corners[0] == f.corners[1]) continue;
    int p = f.arcs[0], q = f.arcs[1];
    if (p == q || c.dots.count(p) || c.dots.count(q)) continue;
    MoveSite s;
    s.a = std::min(p, q);
    s.b = std::max(p, q);
    out.push_back(s);
  }
  std::sort(out.begin(), out.end(),
            [](const MoveSite& l, const MoveSite& r) { return l.a < r.a || (l.a == r.a && l.b < r.b); });
  return out;
}

DottedCurve apply_r2_minus(const DottedCurve& c, const MoveSite& s) {
  for (const MoveSite& cand : sites_r2_minus(c))
    if (cand.a == s.a && cand.b == s.b) {
      int n = c.size();
      std::vector<int> kill = {s.a, (s.a + 1) % n, s.b, (s.b + 1) % n};
      // the four positions are the two corner crossings, twice each
      std::map<int, int> cnt;
      for (int p : kill) ++cnt[c.tokens[p].label];
      if (cnt.size() != 2 || cnt.begin()->second != 2)
        throw CurveError("InvalidSite", "2-gon ends are not two crossings");
      return delete_occurrences(c, kill);
    }
  throw CurveError("InvalidSite", "no such 2-gon");
}

std::vector<MoveSite> sites_r2_plus(const DottedCurve& c) {
  std::vector<MoveSite> out;
  if (c.tokens.empty()) {
    MoveSite s;  // the poke on the bare circle
    out.push_back(s);
    return out;
  }
  CurveMap mp = build_map(c);
  for (const Face& f : mp.face_list)
    for (int i = 0; i < f.degree(); ++i)
      for (int j = 0; j < f.degree(); ++j) {
        if (i == j) continue;
        MoveSite s;
        s.a = f.darts[i];
        s.b = f.darts[j];
        out.push_back(s);
      }
  return out;
}

DottedCurve apply_r2_plus(const DottedCurve& c, const MoveSite& s) {
  if (c.tokens.empty()) {
    if (s.a != -1 || s.b != -1) throw CurveError("InvalidSite", "trivial curve has one poke site");
    DottedCurve out = parse("1+ 1- 2+ 2-");
    if (!c.dots.empty()) out.dots.insert(3);
    return out;
  }
  CurveMap mp = build_map(c);
  int nd = 4 * mp.k;
  if (s.a < 0 || s.a >= nd || s.b < 0 || s.b >= nd || s.a == s.b)
    throw CurveError("InvalidSite", "bad dart pair");
  if (mp.face_of_dart[s.a] != mp.face_of_dart[s.b])
    throw CurveError("InvalidSite", "segments not on a common face");
  int arc_p = mp.arc_of[s.a], arc_q = mp.arc_of[s.b];
  int eps_p = s.a % 2 == 0 ? +1 : -1;
  int eps_q = s.b % 2 == 0 ? +1 : -1;
  int L1 = max_label(c) + 1, L2 = L1 + 1;
  // The finger from the first segment crosses the second twice.  Curve-order
  // token blocks per side, determined against the sphericity requirement by
  // exhausting the per-parity sign tables over the small census: the finger
  // side reads L1 then L2 with signs (-eps_q, +eps_q); the crossed side
  // carries the complementary signs, in reversed label order exactly when
  // the darts agree in parity.  A dart pair on one arc never shares a face
  // on a spherical curve (the poke circle would cross the curve once), so
  // arc_p != arc_q here.
  std::vector<Token> pside = {{L1, -eps_q}, {L2, eps_q}};
  std::vector<Token> qside;
  if (eps_p == eps_q)
    qside = {{L2, -eps_q}, {L1, eps_q}};
  else
    qside = {{L1, eps_q}, {L2, -eps_q}};
  std::map<int, std::vector<Token>> ins;
  ins[arc_p] = pside;
  ins[arc_q] = qside;
  DottedCurve out = insert_on_arcs(c, ins);
  validate(out);
  return out;
}

// --- Reidemeister III ---

std::vector<MoveSite> sites_r3(const DottedCurve& c) {
  std::vector<MoveSite> out;
  CurveMap mp = build_map(c);
  for (const Face& f : mp.face_list) {
    if (f.degree() != 3) continue;
    std::set<int> corners(f.corners.begin(), f.corners.end());
    if (corners.size() != 3) continue;
    std::set<int> arcs(f.arcs.begin(), f.arcs.end());
    if (arcs.size() != 3) continue;
    bool dotted = false;
    for (int a : f.arcs) dotted = dotted || c.dots.count(a);
    if (dotted) continue;
    out.push_back(normalize_triangle(f.arcs));
  }
  std::sort(out.begin(), out.end(),
            [](const MoveSite& l, const MoveSite& r) { return l.a < r.a; });
  return out;
}

DottedCurve apply_r3(const DottedCurve& c, const MoveSite& s) {
  CurveMap mp = build_map(c);
  std::multiset<int> want = {s.a, s.b, s.c};
  const Face* hit = nullptr;
  for (const Face& f : mp.face_list) {
    if (f.degree() != 3) continue;
    if (std::multiset<int>(f.arcs.begin(), f.arcs.end()) == want) {
      hit = &f;
      break;
    }
  }
  if (!hit) throw CurveError("InvalidSite", "no 3-gon at these arcs");
  if (std::set<int>(hit->corners.begin(), hit->corners.end()).size() != 3)
    throw CurveError("DegenerateTriangle", "triangle has a repeated corner");
  for (int a : hit->arcs)
    if (c.dots.count(a)) throw CurveError("InvalidSite", "triangle edge is dotted");
  // slide each edge across the opposite corner: the occurrence pair at an
  // edge's ends swaps in place, occurrence signs riding along
  DottedCurve out = c;
  int n = c.size();
  for (int a : hit->arcs) std::swap(out.tokens[a], out.tokens[(a + 1) % n]);
  return out;
}

// --- reduction ---

bool is_ri_minimal(const DottedCurve& c) {
  for (const MoveSite& s : sites_r1_minus(c)) {
    try {
      apply_r1_minus(c, s);
      return false;
    } catch (const CurveError&) {
    }
  }
  return true;
}

DottedCurve reduce(const DottedCurve& c) {
  DottedCurve cur = c;
  for (;;) {
    bool any = false;
    for (const MoveSite& s : sites_r1_minus(cur)) {
      try {
        cur = apply_r1_minus(cur, s);
        any = true;
        break;
      } catch (const CurveError&) {
      }
    }
    if (!any) return cur;
  }
}

ReduceTrace reduce_trace(const DottedCurve& c) {
  ReduceTrace tr;
  tr.curve = c;
  tr.position_of.resize(c.size());
  for (int i = 0; i < c.size(); ++i) tr.position_of[i] = i;
  for (;;) {
    bool any = false;
    for (const MoveSite& s : sites_r1_minus(tr.curve)) {
      try {
        DottedCurve next = apply_r1_minus(tr.curve, s);
        int n = tr.curve.size();
        int p1 = s.a, p2 = (s.a + 1) % n;
        tr.killed_labels.push_back(tr.curve.tokens[p1].label);
        for (int& pos : tr.position_of) {
          if (pos < 0) continue;
          if (pos == p1 || pos == p2) {
            pos = -1;
            continue;
          }
          pos -= (pos > p1 ? 1 : 0) + (pos > p2 ? 1 : 0);
        }
        tr.curve = std::move(next);
        any = true;
        break;
      } catch (const CurveError&) {
      }
    }
    if (!any) return tr;
  }
}

// --- composition ---

DottedCurve connected_sum(const DottedCurve& p, int dotP, const DottedCurve& q,
                          int dotQ, bool reversing) {
  if (!p.dots.count(dotP)) throw CurveError("MissingDot", "first curve lacks the dot");
  if (!q.dots.count(dotQ)) throw CurveError("MissingDot", "second curve lacks the dot");
  int np = p.size(), nq = q.size();
  DottedCurve q2 = q;
  int dq = dotQ;
  if (reversing) {
    q2 = reverse_curve(q);
    dq = nq == 0 ? 0 : ((nq - 2 - dotQ) % nq + nq) % nq;
  }
  int off = max_label(p);
  for (Token& t : q2.tokens) t.label += off;
  DottedCurve out;
  for (int i = 0; i < np; ++i) out.tokens.push_back(p.tokens[(dotP + 1 + i) % np]);
  for (int i = 0; i < nq; ++i) out.tokens.push_back(q2.tokens[(dq + 1 + i) % nq]);
  for (int t : p.dots)
    if (t != dotP) out.dots.insert(((t - dotP - 1) % np + np) % np);
  for (int t : q2.dots)
    if (t != dq) out.dots.insert(np + ((t - dq - 1) % nq + nq) % nq);
  return out;
}

std::vector<DottedCurve> infinity_chain(int m, SymmetryConfig cfg) {
  if (m < 0) throw CurveError("NegativeM", "chain length must be nonnegative");
  std::vector<DottedCurve> out;
  if (m == 0) return out;
  std::vector<DottedCurve> level = {DottedCurve{}};
  for (int step = 0; step < m; ++step) {
    std::set<std::string> seen;
    std::vector<DottedCurve> next;
    for (const DottedCurve& c : level)
      for (int arc = 0; arc < c.arc_count(); ++arc)
        for (int side = 0; side < 2; ++side) {
          CanonicalForm cf = canonical_form(apply_r1_plus(c, arc, side), cfg);
          if (seen.insert(cf.text).second) next.push_back(cf.curve);
        }
    level = std::move(next);
  }
  std::set<std::string> seen;
  for (const DottedCurve& c : level) {
    CurveMap mp = build_map(c);
    std::vector<int> loops;
    for (const Face& f : mp.face_list)
      if (f.degree() == 1) loops.push_back(f.arcs[0]);
    if (loops.size() != 2) continue;  // only the linear chains carry two dots
    DottedCurve d = c;
    d.dots = {loops[0], loops[1]};
    CanonicalForm cf = canonical_form(d, cfg);
    if (seen.insert(cf.text).second) out.push_back(cf.curve);
  }
  return out;
}

DottedCurve trefoil_curve() { return parse("1+ 2- 3+ 1- 2+ 3-"); }

std::vector<DottedCurve> trefoil_3_1(SymmetryConfig cfg) {
  DottedCurve t = trefoil_curve();
  std::vector<DottedCurve> out;
  std::set<std::string> seen;
  for (int arc = 0; arc < t.arc_count(); ++arc) {
    DottedCurve d = t;
    d.dots = {arc};
    CanonicalForm cf = canonical_form(d, cfg);
    if (seen.insert(cf.text).second) out.push_back(cf.curve);
  }
  return out;
}

// --- alpha ---

std::vector<MoveSite> sites_alpha_minus(const DottedCurve& c) {
  std::vector<MoveSite> out;
  for (const MoveSite& t : sites_r3(c)) {
    DottedCurve img = apply_r3(c, t);
    int n = img.size();
    for (int v : r3_corner_labels(c, t)) {
      // v must bound a 1-gon in the image, and its removal must be legal
      int p = -1;
      for (int i = 0; i < n; ++i)
        if (img.tokens[i].label == v && img.tokens[(i + 1) % n].label == v) p = i;
      if (p < 0) continue;
      MoveSite loop;
      loop.a = p;
      try {
        apply_r1_minus(img, loop);
      } catch (const CurveError&) {
        continue;
      }
      MoveSite s = t;
      s.v = v;
      out.push_back(s);
    }
  }
  return out;
}

DottedCurve apply_alpha_minus(const DottedCurve& c, const MoveSite& s) {
  DottedCurve img = apply_r3(c, s);  // throws InvalidSite/DegenerateTriangle
  int n = img.size();
  for (int i = 0; i < n; ++i)
    if (img.tokens[i].label == s.v && img.tokens[(i + 1) % n].label == s.v) {
      MoveSite loop;
      loop.a = i;
      return apply_r1_minus(img, loop);
    }
  throw CurveError("InvalidSite", "corner does not become a kink");
}

std::vector<AlphaPlusApp> alpha_plus_applications(const DottedCurve& c,
                                                  SymmetryConfig cfg) {
  std::vector<AlphaPlusApp> out;
  int newLabel = max_label(c) + 1;
  for (int arc = 0; arc < c.arc_count(); ++arc)
    for (int side = 0; side < 2; ++side) {
      DottedCurve kinked = apply_r1_plus(c, arc, side);
      for (const MoveSite& t : sites_r3(kinked)) {
        std::set<int> corners = r3_corner_labels(kinked, t);
        if (!corners.count(newLabel)) continue;
        DottedCurve q = apply_r3(kinked, t);
        bool genuine = false;
        for (const MoveSite& back : sites_alpha_minus(q)) {
          if (is_isotopic(apply_alpha_minus(q, back), c, cfg)) {
            genuine = true;
            break;
          }
        }
        if (!genuine) continue;
        AlphaPlusApp app;
        app.result = q;
        app.site.a = arc;
        app.site.b = side;
        app.site.x = t.a;
        app.site.y = t.b;
        app.site.z = t.c;
        std::vector<int> rest;
        for (int v : corners)
          if (v != newLabel) rest.push_back(v);
        app.d1 = rest[0];
        app.d2 = rest[1];
        out.push_back(std::move(app));
      }
    }
  return out;
}

std::vector<std::pair<DottedCurve, MoveRecord>> enumerate_alpha_plus(
    const DottedCurve& c, SymmetryConfig cfg) {
  CanonicalForm base = canonical_form(c, cfg);
  std::vector<std::pair<DottedCurve, MoveRecord>> out;
  std::set<std::string> seen;
  for (const AlphaPlusApp& app : alpha_plus_applications(base.curve, cfg)) {
    CanonicalForm rf = canonical_form(app.result, cfg);
    if (!seen.insert(rf.text).second) continue;
    MoveRecord rec;
    rec.kind = MoveKind::AlphaPlus;
    rec.site = app.site;
    rec.before = base.text;
    rec.after = rf.text;
    out.emplace_back(rf.curve, std::move(rec));
  }
  return out;
}

// --- beta ---

std::vector<DottedCurve> infinity_sum_variants(int m, SymmetryConfig cfg) {
  if (m < 0) throw CurveError("NegativeM", "chain length must be nonnegative");
  std::vector<DottedCurve> out;
  std::set<std::string> seen;
  auto push = [&](const DottedCurve& w) {
    CanonicalForm cf = canonical_form(w, cfg);
    if (seen.insert(cf.text).second) out.push_back(cf.curve);
  };
  std::vector<DottedCurve> trefoils = trefoil_3_1(cfg);
  if (m == 0) {
    // the zero-length chain contributes nothing; the composite is the
    // dotted trefoil itself
    for (const DottedCurve& t : trefoils) push(t);
    return out;
  }
  for (const DottedCurve& w : infinity_chain(m, cfg)) {
    std::vector<int> ds(w.dots.begin(), w.dots.end());
    for (int role = 0; role < 2; ++role)
      for (const DottedCurve& t : trefoils)
        for (int rev = 0; rev < 2; ++rev)
          push(connected_sum(w, ds[role], t, *t.dots.begin(), rev != 0));
  }
  return out;
}

std::vector<DottedCurve> enumerate_beta_plus(const DottedCurve& c, int arc,
                                             int m, SymmetryConfig cfg) {
  if (m < 0) throw CurveError("NegativeM", "chain length must be nonnegative");
  if (arc < 0 || arc >= c.arc_count()) throw CurveError("InvalidSite", "no such arc");
  DottedCurve cd = c;
  cd.dots.insert(arc);
  std::vector<DottedCurve> out;
  std::set<std::string> seen;
  for (const DottedCurve& w : infinity_sum_variants(m, cfg))
    for (int rev = 0; rev < 2; ++rev) {
      DottedCurve r = connected_sum(cd, arc, w, *w.dots.begin(), rev != 0);
      CanonicalForm cf = canonical_form(r, cfg);
      if (seen.insert(cf.text).second) out.push_back(cf.curve);
    }
  return out;
}

namespace {

// side 0 keeps positions i+1..j, side 1 keeps j+1..i; the severed circle
// leaves an attachment dot on the closing arc
DottedCurve split_side(const DottedCurve& c, int i, int j, int side) {
  int n = c.size();
  int start = side == 0 ? (i + 1) % n : (j + 1) % n;
  int end = side == 0 ? j : i;
  int len = ((end - start + n) % n) + 1;
  DottedCurve y;
  for (int s = 0; s < len; ++s) y.tokens.push_back(c.tokens[(start + s) % n]);
  for (int t : c.dots) {
    int rel = ((t - start) % n + n) % n;
    if (rel < len - 1) y.dots.insert(rel);
  }
  y.dots.insert(len - 1);
  return y;
}

bool split_letters_disjoint(const DottedCurve& c, int i, int j) {
  int n = c.size();
  auto in_first = [&](int p) { return ((p - i - 1) % n + n) % n < ((j - i - 1) % n + n) % n + 1; };
  std::map<int, int> side_of;
  int cnt0 = 0, cnt1 = 0;
  for (int p = 0; p < n; ++p) {
    int sd = in_first(p) ? 0 : 1;
    (sd == 0 ? cnt0 : cnt1)++;
    auto [it, fresh] = side_of.try_emplace(c.tokens[p].label, sd);
    if (!fresh && it->second != sd) return false;
  }
  return cnt0 > 0 && cnt1 > 0;
}

}  // namespace

std::vector<MoveSite> sites_beta_minus(const DottedCurve& c, SymmetryConfig cfg,
                                       int mFilter) {
  std::vector<MoveSite> out;
  int n = c.size(), k = c.crossings();
  std::map<int, std::set<std::string>> variant_codes;
  auto codes_for = [&](int m) -> const std::set<std::string>& {
    auto it = variant_codes.find(m);
    if (it == variant_codes.end()) {
      std::set<std::string> s;
      for (const DottedCurve& w : infinity_sum_variants(m, cfg))
        s.insert(to_token_string(w));
      it = variant_codes.emplace(m, std::move(s)).first;
    }
    return it->second;
  };
  // the whole curve as the severed factor, leaving the dotted trivial curve
  if (k >= 3 && c.dots.empty()) {
    int m = k - 3;
    if (mFilter < 0 || m == mFilter) {
      for (int arc = 0; arc < c.arc_count(); ++arc) {
        DottedCurve y = c;
        y.dots = {arc};
        if (codes_for(m).count(canonical_text(y, cfg))) {
          MoveSite s;
          s.m = m;
          s.v = 0;
          out.push_back(s);
          break;
        }
      }
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (c.dots.count(i) || c.dots.count(j)) continue;
      if (!split_letters_disjoint(c, i, j)) continue;
      for (int side = 0; side < 2; ++side) {
        DottedCurve y = split_side(c, i, j, side);
        if (y.dots.size() != 1) continue;  // stray dots inside the factor
        int m = y.crossings() - 3;
        if (m < 0) continue;
        if (mFilter >= 0 && m != mFilter) continue;
        if (codes_for(m).count(canonical_text(y, cfg))) {
          MoveSite s;
          s.a = i;
          s.b = j;
          s.v = side;
          s.m = m;
          out.push_back(s);
        }
      }
    }
  return out;
}

DottedCurve apply_beta_minus(const DottedCurve& c, const MoveSite& s,
                             SymmetryConfig cfg) {
  if (s.a < 0) {
    // whole-curve severing
    for (const MoveSite& cand : sites_beta_minus(c, cfg, s.m))
      if (cand.a < 0) return parse(".d");
    throw CurveError("NoSuchFactor", "curve is not a chain-trefoil composite");
  }
  int n = c.size();
  if (s.a >= n || s.b < 0 || s.b >= n || s.a == s.b)
    throw CurveError("InvalidSite", "bad cut arcs");
  if (c.dots.count(s.a) || c.dots.count(s.b))
    throw CurveError("InvalidSite", "cut arc is dotted");
  if (!split_letters_disjoint(c, s.a, s.b))
    throw CurveError("InvalidSite", "arcs do not split the word");
  DottedCurve y = split_side(c, s.a, s.b, s.v);
  if (y.dots.size() != 1 || y.crossings() - 3 != s.m)
    throw CurveError("NoSuchFactor", "severed side is not a chain-trefoil composite");
  bool member = false;
  for (const DottedCurve& w : infinity_sum_variants(s.m, cfg))
    if (is_isotopic(y, w, cfg)) {
      member = true;
      break;
    }
  if (!member)
    throw CurveError("NoSuchFactor", "severed side is not a chain-trefoil composite");
  return split_side(c, s.a, s.b, s.v == 0 ? 1 : 0);
}

DottedCurve apply_move(const DottedCurve& c, MoveKind kind, const MoveSite& s,
                       SymmetryConfig cfg) {
  switch (kind) {
    case MoveKind::R1Minus: return apply_r1_minus(c, s);
    case MoveKind::R1Plus: return apply_r1_plus(c, s.a, s.b);
    case MoveKind::R2Minus: return apply_r2_minus(c, s);
    case MoveKind::R2Plus: return apply_r2_plus(c, s);
    case MoveKind::R3: return apply_r3(c, s);
    case MoveKind::AlphaMinus: return apply_alpha_minus(c, s);
    case MoveKind::AlphaPlus: {
      DottedCurve kinked = apply_r1_plus(c, s.a, s.b);
      MoveSite tri;
      tri.a = s.x;
      tri.b = s.y;
      tri.c = s.z;
      return apply_r3(kinked, tri);
    }
    case MoveKind::BetaPlus: {
      std::vector<DottedCurve> vs = infinity_sum_variants(s.m, cfg);
      int idx = s.b / 2, rev = s.b % 2;
      if (s.b < 0 || idx >= static_cast<int>(vs.size()))
        throw CurveError("InvalidSite", "no such chain-trefoil variant");
      DottedCurve cd = c;
      if (s.a < 0 || s.a >= c.arc_count()) throw CurveError("InvalidSite", "no such arc");
      cd.dots.insert(s.a);
      return connected_sum(cd, s.a, vs[idx], *vs[idx].dots.begin(), rev != 0);
    }
    case MoveKind::BetaMinus: return apply_beta_minus(c, s, cfg);
  }
  throw CurveError("InvalidSite", "unknown move kind");
}

}  // namespace curveforge
