// End-to-end acceptance gate: eight behavioral guarantees, one line each.
// Exits nonzero when any line fails.  Bounds and trial counts are pinned
// here on purpose; loosening them is a deliberate act, not a knob.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "curveforge/canonical.hpp"
#include "curveforge/census.hpp"
#include "curveforge/curve.hpp"
#include "curveforge/equivalence.hpp"
#include "curveforge/map.hpp"
#include "curveforge/moves.hpp"
#include "curveforge/structure.hpp"

using namespace curveforge;

namespace {

int failures = 0;

void report(int idx, const char* name, bool ok, const std::string& detail,
            double secs) {
  std::printf("%d. %-58s %s  (%s, %.1fs)\n", idx, name, ok ? "PASS" : "FAIL",
              detail.c_str(), secs);
  std::fflush(stdout);
  if (!ok) ++failures;
}

template <typename F>
void run(int idx, const char* name, F body) {
  std::string detail;
  auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const CurveError& e) {
    detail = std::string("threw ") + e.code;
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  report(idx, name, ok, detail, secs);
}

DottedCurve bare(DottedCurve c) {
  c.dots.erase(c.tokens.empty() ? 0 : c.size() - 1);
  return c;
}

// 1. Every alpha/beta/triangle neighbor of a small reduced curve is genuinely
//    reachable by elementary moves spending at most one triangle slide.
bool crit1(std::string& detail) {
  const int kMaxDepth = 12, kMaxR3 = 1, kSlack = 4, kMaxM = 2;
  int checked = 0;
  for (const std::string& code : enumerate_curves(4, CensusFilter::RIMinimal)) {
    DottedCurve r = parse(code);
    for (const LabeledNeighbor& nb : neighbors_reduced(r, {}, kMaxM)) {
      SearchBounds b;
      b.maxCrossings = nb.curve.crossings() + kSlack;
      b.maxDepth = kMaxDepth;
      b.maxR3 = kMaxR3;
      if (!oracle_reachable(r, nb.curve, b).has_value()) {
        detail = "unreachable neighbor of " + (code.empty() ? "trivial" : code);
        return false;
      }
      ++checked;
    }
  }
  detail = std::to_string(checked) + " neighbors certified";
  return true;
}

// 2. A random kink walk carrying exactly one triangle slide always leaves a
//    decidable single-move trace between the endpoints.
bool crit2(std::string& detail) {
  const int kTrials = 1000, kMaxRI = 6;
  std::mt19937 rng(20260816);
  auto pool = enumerate_curves(5, CensusFilter::All);
  int done = 0, attempts = 0;
  while (done < kTrials) {
    if (++attempts > kTrials * 50) {
      detail = "resampling stalled";
      return false;
    }
    DottedCurve start = parse(pool[rng() % pool.size()]);
    DottedCurve c = start;
    int nRI = static_cast<int>(rng() % (kMaxRI + 1));
    int slot = static_cast<int>(rng() % (nRI + 1));
    bool dead = false;
    for (int i = 0; i <= nRI; ++i) {
      if (i == slot) {
        auto sites = sites_r3(c);
        if (sites.empty()) {
          dead = true;
          break;
        }
        c = apply_r3(c, sites[rng() % sites.size()]);
      } else {
        auto minus = sites_r1_minus(c);
        if (!minus.empty() && rng() % 2 == 0)
          c = apply_r1_minus(c, minus[rng() % minus.size()]);
        else
          c = apply_r1_plus(c, static_cast<int>(rng() % c.arc_count()),
                            static_cast<int>(rng() % 2));
      }
    }
    if (dead) continue;
    if (!decide_single_r3(start, c).has_value()) {
      detail = "undecided: " + to_token_string(start) + " vs " + to_token_string(c);
      return false;
    }
    ++done;
  }
  detail = std::to_string(done) + " walks decided";
  return true;
}

// 3. Kink collapse order never changes the reduced curve.
bool crit3(std::string& detail) {
  const int kTrials = 1000, kOrders = 10, kMaxCrossings = 10;
  std::mt19937 rng(7);
  auto seeds = enumerate_curves(4, CensusFilter::All);
  auto collapse = [&](DottedCurve x) {
    for (;;) {
      auto sites = sites_r1_minus(x);
      if (sites.empty()) return canonical_text(x);
      x = apply_r1_minus(x, sites[rng() % sites.size()]);
    }
  };
  for (int t = 0; t < kTrials; ++t) {
    DottedCurve c = parse(seeds[rng() % seeds.size()]);
    for (int i = 0; i < 6; ++i) {
      switch (rng() % 3) {
        case 0:
          if (c.crossings() + 1 <= kMaxCrossings)
            c = apply_r1_plus(c, static_cast<int>(rng() % c.arc_count()),
                              static_cast<int>(rng() % 2));
          break;
        case 1: {
          if (c.crossings() + 2 > kMaxCrossings) break;
          auto sites = sites_r2_plus(c);
          if (!sites.empty()) c = apply_r2_plus(c, sites[rng() % sites.size()]);
          break;
        }
        case 2: {
          auto sites = sites_r3(c);
          if (!sites.empty()) c = apply_r3(c, sites[rng() % sites.size()]);
          break;
        }
      }
    }
    std::string want = canonical_text(reduce(c));
    for (int o = 0; o < kOrders; ++o)
      if (collapse(c) != want) {
        detail = "divergent collapse on " + to_token_string(c);
        return false;
      }
  }
  detail = std::to_string(kTrials) + " curves x " + std::to_string(kOrders) +
           " orders";
  return true;
}

// 4. Factor-count behavior of composite deformations, exhaustively on all
//    curves up to six crossings: (a) kink-triangle composites keep prime
//    curves prime, (b) they keep the factor count when both used corners are
//    plain, (c) a triangle slide over a nugatory corner loses one or two
//    factors.
bool crit4(std::string& detail) {
  const int kMaxCrossings = 6;
  int apps = 0, plain = 0, nugSlides = 0;
  for (const std::string& code : enumerate_curves(kMaxCrossings, CensusFilter::All)) {
    DottedCurve q = parse(code);
    if (q.tokens.empty()) continue;
    bool prime = is_prime(q);
    int fc = f_c(q);
    for (const AlphaPlusApp& app : alpha_plus_applications(q)) {
      ++apps;
      if (prime && !is_prime(app.result)) {
        detail = "prime lost on " + code;
        return false;
      }
      if (!is_nugatory(q, app.d1) && !is_nugatory(q, app.d2)) {
        ++plain;
        if (f_c(app.result) != fc) {
          detail = "factor count moved on " + code;
          return false;
        }
      }
    }
    CurveMap m = build_map(q);
    for (const Face& f : m.face_list) {
      if (f.degree() != 3) continue;
      std::set<int> corners(f.corners.begin(), f.corners.end());
      if (corners.size() != 3) continue;
      bool nug = false;
      for (int l : corners) nug |= is_nugatory(q, l);
      if (!nug) continue;
      std::vector<int> arcs = f.arcs;
      int least = static_cast<int>(
          std::min_element(arcs.begin(), arcs.end()) - arcs.begin());
      std::rotate(arcs.begin(), arcs.begin() + least, arcs.end());
      DottedCurve y = apply_r3(q, MoveSite{.a = arcs[0], .b = arcs[1], .c = arcs[2]});
      int drop = fc - f_c(y);
      ++nugSlides;
      if (drop != 1 && drop != 2) {
        detail = "drop " + std::to_string(drop) + " on " + code;
        return false;
      }
    }
  }
  detail = std::to_string(apps) + " composites, " + std::to_string(plain) +
           " plain-cornered, " + std::to_string(nugSlides) + " nugatory slides";
  return true;
}

// 5. Sliding a plain-cornered triangle commutes with collapsing the kinks:
//    the slide on the reduced curve equals the slid curve with the same
//    kinks removed.  The slide may mint new kinks of its own; those stay.
bool crit5(std::string& detail) {
  const int kTrials = 500, kMaxCrossings = 8;
  std::mt19937 rng(11);
  auto seeds = enumerate_curves(5, CensusFilter::All);
  int done = 0, attempts = 0;
  while (done < kTrials) {
    if (++attempts > kTrials * 200) {
      detail = "resampling stalled";
      return false;
    }
    DottedCurve c = parse(seeds[rng() % seeds.size()]);
    for (int i = 0; i < 4; ++i) {
      if (rng() % 2 == 0 && c.crossings() < kMaxCrossings)
        c = apply_r1_plus(c, static_cast<int>(rng() % c.arc_count()),
                          static_cast<int>(rng() % 2));
    }
    // want a triangle whose corners are all plain in the unreduced curve
    int n = c.size();
    std::vector<std::pair<MoveSite, std::set<int>>> sites;
    for (const MoveSite& s : sites_r3(c)) {
      std::set<int> labels;
      for (int a : {s.a, s.b, s.c}) {
        labels.insert(c.tokens[a].label);
        labels.insert(c.tokens[(a + 1) % n].label);
      }
      if (labels.size() != 3) continue;  // degenerate disk, not three points
      bool nug = false;
      for (int l : labels) nug |= is_nugatory(c, l);
      if (!nug) sites.push_back({s, labels});
    }
    if (sites.empty()) continue;
    auto [site, labels] = sites[rng() % sites.size()];

    ReduceTrace tr = reduce_trace(c);
    std::set<int> killed(tr.killed_labels.begin(), tr.killed_labels.end());
    for (int k : killed)
      if (labels.count(k)) {
        detail = "plain corner died in reduction of " + to_token_string(c);
        return false;
      }

    // slide first, then strip the same kinks the reduction killed
    DottedCurve slid = apply_r3(c, site);
    DottedCurve stripped;
    for (const Token& t : slid.tokens)
      if (!killed.count(t.label)) stripped.tokens.push_back(t);
    validate(stripped);

    // reduce first, then slide the surviving triangle; its edges are the
    // images of the original corner pairs, still adjacent after deletion
    std::vector<int> arcs = {tr.position_of[site.a], tr.position_of[site.b],
                             tr.position_of[site.c]};
    int lead = static_cast<int>(
        std::min_element(arcs.begin(), arcs.end()) - arcs.begin());
    std::rotate(arcs.begin(), arcs.begin() + lead, arcs.end());
    DottedCurve reducedSlid =
        apply_r3(tr.curve, MoveSite{.a = arcs[0], .b = arcs[1], .c = arcs[2]});

    if (canonical_text(stripped) != canonical_text(reducedSlid)) {
      detail = "orders disagree on " + to_token_string(c);
      return false;
    }
    ++done;
  }
  detail = std::to_string(done) + " commuting squares";
  return true;
}

// 6. Every curve with at most five crossings walks down to the trivial curve
//    by explicit elementary moves inside the pinned search box.
bool crit6(std::string& detail) {
  const int kMaxCrossings = 9, kMaxDepth = 14;
  int peakDepth = 0, peakCrossings = 0, count = 0;
  for (const std::string& code : enumerate_curves(5, CensusFilter::All)) {
    DottedCurve c = parse(code);
    int depth = 0;
    while (!c.tokens.empty()) {
      peakCrossings = std::max(peakCrossings, c.crossings());
      auto ones = sites_r1_minus(c);
      if (!ones.empty()) {
        c = apply_r1_minus(c, ones.front());
      } else {
        auto twos = sites_r2_minus(c);
        if (twos.empty()) {
          detail = "stuck on " + code;
          return false;
        }
        c = apply_r2_minus(c, twos.front());
      }
      if (++depth > kMaxDepth || c.crossings() > kMaxCrossings) {
        detail = "left the search box from " + code;
        return false;
      }
    }
    peakDepth = std::max(peakDepth, depth);
    ++count;
  }
  detail = std::to_string(count) + " curves, depth <= " +
           std::to_string(peakDepth) + ", crossings <= " +
           std::to_string(peakCrossings);
  return true;
}

// 7. The two independent enumeration strategies agree through six crossings,
//    and every move-graph edge witness replays onto its endpoints.
bool crit7(std::string& detail) {
  for (int n = 0; n <= 6; ++n) {
    auto a = enumerate_curves(n, CensusFilter::All);
    auto b = enumerate_curves_rotation(n, CensusFilter::All);
    if (a != b) {
      detail = "strategies disagree at n=" + std::to_string(n);
      return false;
    }
  }
  CensusGraph g = build_move_graph(6);
  for (size_t i = 0; i < g.edges.size(); ++i) {
    const CensusEdge& e = g.edges[i];
    const MoveRecord& w = g.witnesses[i];
    const std::string& ca = g.nodes[e.a].code;
    const std::string& cb = g.nodes[e.b].code;
    if (w.before != ca && w.before != cb) {
      detail = "witness floats free of edge " + std::to_string(i);
      return false;
    }
    DottedCurve y = apply_move(parse(w.before), w.kind, w.site);
    if (canonical_text(y) != w.after) {
      detail = "witness image mismatch on edge " + std::to_string(i);
      return false;
    }
    if (w.kind == MoveKind::BetaMinus) y = bare(y);
    if (canonical_text(y) != (w.before == ca ? cb : ca)) {
      detail = "edge endpoint mismatch on edge " + std::to_string(i);
      return false;
    }
  }
  detail = "counts agree n<=6, " + std::to_string(g.edges.size()) +
           " edges replayed";
  return true;
}

// 8. Chain-of-two trefoil attachments on the four-crossing curve: the list is
//    the frozen size, pairwise distinct, and each member severs back.
bool crit8(std::string& detail) {
  const int kArc = 0, kM = 2;
  const size_t kExpected = 4;
  DottedCurve c4 = parse("1+ 2+ 3- 1- 4+ 3+ 2- 4-");
  std::vector<DottedCurve> results = enumerate_beta_plus(c4, kArc, kM);
  if (results.size() != kExpected) {
    detail = "got " + std::to_string(results.size()) + " results";
    return false;
  }
  std::set<std::string> codes;
  for (const DottedCurve& r : results) codes.insert(canonical_text(r));
  if (codes.size() != kExpected) {
    detail = "results collide";
    return false;
  }
  for (const DottedCurve& r : results) {
    bool inverts = false;
    for (const MoveSite& s : sites_beta_minus(r)) {
      if (s.m != kM) continue;
      if (is_isotopic(bare(apply_beta_minus(r, s)), c4)) {
        inverts = true;
        break;
      }
    }
    if (!inverts) {
      detail = "no severing returns from " + canonical_text(r);
      return false;
    }
  }
  detail = std::to_string(kExpected) + " attachments, all reversible";
  return true;
}

}  // namespace

int main() {
  run(1, "single-move neighbors are elementary-reachable", crit1);
  run(2, "kink walks with one slide are always decided", crit2);
  run(3, "kink collapse is confluent", crit3);
  run(4, "composite deformations respect factor counts", crit4);
  run(5, "reduction commutes with plain triangle slides", crit5);
  run(6, "all small curves descend to the trivial curve", crit6);
  run(7, "independent censuses agree and edges replay", crit7);
  run(8, "double-chain trefoil attachments invert cleanly", crit8);
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures ? 1 : 0;
}
