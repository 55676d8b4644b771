#include "curveforge/equivalence.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>

namespace curveforge {

namespace {

MoveRecord make_record(MoveKind kind, const MoveSite& site, const std::string& before,
                       const DottedCurve& raw, SymmetryConfig cfg) {
  MoveRecord rec;
  rec.kind = kind;
  rec.site = site;
  rec.before = before;
  rec.after = canonical_text(raw, cfg);
  return rec;
}

}  // namespace

std::vector<LabeledNeighbor> neighbors_reduced(const DottedCurve& r,
                                               SymmetryConfig cfg, int maxM) {
  if (!is_ri_minimal(r)) throw CurveError("NotReduced", "curve has a removable kink");
  CanonicalForm base = canonical_form(r, cfg);
  const DottedCurve& b = base.curve;
  std::vector<LabeledNeighbor> out;
  std::set<std::tuple<int, int, std::string>> seen;  // (kind, m, reduced code)
  auto take = [&](MoveKind kind, const MoveSite& site, DottedCurve raw) {
    LabeledNeighbor nb;
    nb.record = make_record(kind, site, base.text, raw, cfg);
    // the severing move hands back the remainder with its attachment dot
    // restored; as a curve in its own right the neighbor is the bare remainder
    if (kind == MoveKind::BetaMinus)
      raw.dots.erase(raw.tokens.empty() ? 0 : static_cast<int>(raw.tokens.size()) - 1);
    if (is_ri_minimal(raw)) {
      nb.curve = canonical_form(raw, cfg).curve;
    } else {
      nb.curve = canonical_form(reduce(raw), cfg).curve;
      nb.composite = true;
    }
    auto key = std::make_tuple(static_cast<int>(kind), site.m, to_token_string(nb.curve));
    if (seen.insert(key).second) out.push_back(std::move(nb));
  };
  for (const MoveSite& s : sites_r3(b)) take(MoveKind::R3, s, apply_r3(b, s));
  for (const MoveSite& s : sites_alpha_minus(b))
    take(MoveKind::AlphaMinus, s, apply_alpha_minus(b, s));
  for (const AlphaPlusApp& app : alpha_plus_applications(b, cfg))
    take(MoveKind::AlphaPlus, app.site, app.result);
  for (const MoveSite& s : sites_beta_minus(b, cfg))
    take(MoveKind::BetaMinus, s, apply_beta_minus(b, s, cfg));
  for (int m = 0; m <= maxM; ++m) {
    std::vector<DottedCurve> vs = infinity_sum_variants(m, cfg);
    for (int arc = 0; arc < b.arc_count(); ++arc)
      for (int idx = 0; idx < static_cast<int>(vs.size()); ++idx)
        for (int rev = 0; rev < 2; ++rev) {
          MoveSite s;
          s.a = arc;
          s.m = m;
          s.b = 2 * idx + rev;
          take(MoveKind::BetaPlus, s, apply_move(b, MoveKind::BetaPlus, s, cfg));
        }
  }
  return out;
}

std::optional<MoveWitness> decide_single_r3(const DottedCurve& p,
                                            const DottedCurve& q,
                                            SymmetryConfig cfg) {
  CanonicalForm cp = canonical_form(reduce(p), cfg);
  CanonicalForm cq = canonical_form(reduce(q), cfg);
  const DottedCurve& rp = cp.curve;
  int d = cq.curve.crossings() - rp.crossings();
  auto witness = [&](MoveKind kind, const MoveSite& site) {
    MoveWitness w;
    w.kind = kind;
    w.site = site;
    w.before = cp.text;
    w.after = cq.text;
    return w;
  };
  if (d == 0) {
    for (const MoveSite& s : sites_r3(rp))
      if (canonical_text(apply_r3(rp, s), cfg) == cq.text)
        return witness(MoveKind::R3, s);
    return std::nullopt;
  }
  if (d == 1) {
    for (const AlphaPlusApp& app : alpha_plus_applications(rp, cfg))
      if (canonical_text(app.result, cfg) == cq.text)
        return witness(MoveKind::AlphaPlus, app.site);
    return std::nullopt;
  }
  if (d == -1) {
    for (const MoveSite& s : sites_alpha_minus(rp))
      if (canonical_text(apply_alpha_minus(rp, s), cfg) == cq.text)
        return witness(MoveKind::AlphaMinus, s);
    return std::nullopt;
  }
  if (d >= 3) {
    int m = d - 3;
    std::vector<DottedCurve> vs = infinity_sum_variants(m, cfg);
    for (int arc = 0; arc < rp.arc_count(); ++arc)
      for (int idx = 0; idx < static_cast<int>(vs.size()); ++idx)
        for (int rev = 0; rev < 2; ++rev) {
          MoveSite s;
          s.a = arc;
          s.m = m;
          s.b = 2 * idx + rev;
          if (canonical_text(apply_move(rp, MoveKind::BetaPlus, s, cfg), cfg) == cq.text)
            return witness(MoveKind::BetaPlus, s);
        }
    return std::nullopt;
  }
  if (d <= -3) {
    int m = -d - 3;
    for (const MoveSite& s : sites_beta_minus(rp, cfg, m)) {
      DottedCurve y = apply_beta_minus(rp, s, cfg);
      if (canonical_text(y, cfg) == cq.text) return witness(MoveKind::BetaMinus, s);
      // the restored attachment dot is bookkeeping; q may carry none
      DottedCurve bare = y;
      bare.dots.erase(bare.tokens.empty() ? 0 : bare.size() - 1);
      if (canonical_text(bare, cfg) == cq.text) return witness(MoveKind::BetaMinus, s);
    }
    return std::nullopt;
  }
  return std::nullopt;  // |d| == 2 is not a one-move delta
}

namespace {

struct SearchSide {
  // key: (canonical code, r3 moves spent); value: (parent key, depth)
  std::map<std::pair<std::string, int>, std::pair<std::pair<std::string, int>, int>> seen;
  std::vector<std::pair<std::string, int>> frontier;
  int depth = 0;
};

std::vector<std::string> walk_to_root(const SearchSide& side,
                                      std::pair<std::string, int> key) {
  std::vector<std::string> out;
  for (;;) {
    out.push_back(key.first);
    auto it = side.seen.find(key);
    if (it->second.second == 0) break;
    key = it->second.first;
  }
  return out;
}

// finds a concrete move turning `from` into a curve with canonical code
// `target`; the move kind is forced by the crossing delta, so any matching
// site is a valid witness
std::optional<MoveRecord> connect_states(const DottedCurve& from,
                                         const std::string& fromText,
                                         const std::string& target,
                                         SymmetryConfig cfg) {
  auto probe = [&](MoveKind kind, const MoveSite& s,
                   const DottedCurve& res) -> std::optional<MoveRecord> {
    if (canonical_text(res, cfg) != target) return std::nullopt;
    MoveRecord rec;
    rec.kind = kind;
    rec.site = s;
    rec.before = fromText;
    rec.after = target;
    return rec;
  };
  for (const MoveSite& s : sites_r1_minus(from)) {
    try {
      if (auto rec = probe(MoveKind::R1Minus, s, apply_r1_minus(from, s))) return rec;
    } catch (const CurveError&) {
    }
  }
  for (const MoveSite& s : sites_r1_plus(from))
    if (auto rec = probe(MoveKind::R1Plus, s, apply_r1_plus(from, s.a, s.b))) return rec;
  for (const MoveSite& s : sites_r3(from))
    if (auto rec = probe(MoveKind::R3, s, apply_r3(from, s))) return rec;
  return std::nullopt;
}

}  // namespace

std::optional<std::vector<MoveRecord>> oracle_reachable(const DottedCurve& p,
                                                        const DottedCurve& q,
                                                        const SearchBounds& bounds,
                                                        SymmetryConfig cfg) {
  std::string cp = canonical_text(p, cfg), cq = canonical_text(q, cfg);
  if (p.crossings() > bounds.maxCrossings || q.crossings() > bounds.maxCrossings)
    return std::nullopt;
  if (cp == cq) return std::vector<MoveRecord>{};
  SearchSide fwd, bwd;
  fwd.seen[{cp, 0}] = {{cp, 0}, 0};
  fwd.frontier = {{cp, 0}};
  bwd.seen[{cq, 0}] = {{cq, 0}, 0};
  bwd.frontier = {{cq, 0}};
  int best = std::numeric_limits<int>::max();
  std::pair<std::string, int> meet_f, meet_b;
  // expands one side by a layer; meets are checked on insertion
  auto expand = [&](SearchSide& mine, SearchSide& other) {
    std::vector<std::pair<std::string, int>> next;
    for (const auto& key : mine.frontier) {
      DottedCurve s = parse(key.first);
      auto visit = [&](const DottedCurve& res, int r3cost) {
        if (res.crossings() > bounds.maxCrossings) return;
        std::pair<std::string, int> nk = {canonical_text(res, cfg), key.second + r3cost};
        if (nk.second > bounds.maxR3) return;
        if (mine.seen.count(nk)) return;
        mine.seen[nk] = {key, mine.depth + 1};
        next.push_back(nk);
        for (int rb = 0; rb + nk.second <= bounds.maxR3; ++rb) {
          auto it = other.seen.find({nk.first, rb});
          if (it == other.seen.end()) continue;
          int total = mine.depth + 1 + it->second.second;
          if (total < best) {
            best = total;
            meet_f = &mine == &fwd ? nk : it->first;
            meet_b = &mine == &fwd ? it->first : nk;
          }
        }
      };
      for (const MoveSite& ms : sites_r1_minus(s)) {
        try {
          visit(apply_r1_minus(s, ms), 0);
        } catch (const CurveError&) {
        }
      }
      for (const MoveSite& ms : sites_r1_plus(s)) visit(apply_r1_plus(s, ms.a, ms.b), 0);
      if (key.second < bounds.maxR3)
        for (const MoveSite& ms : sites_r3(s)) visit(apply_r3(s, ms), 1);
    }
    mine.frontier = std::move(next);
    ++mine.depth;
  };
  while (best > fwd.depth + bwd.depth + 1 &&
         fwd.depth + bwd.depth < bounds.maxDepth &&
         (!fwd.frontier.empty() || !bwd.frontier.empty())) {
    bool pick_f = !fwd.frontier.empty() &&
                  (bwd.frontier.empty() || fwd.frontier.size() <= bwd.frontier.size());
    if (pick_f)
      expand(fwd, bwd);
    else
      expand(bwd, fwd);
  }
  if (best > bounds.maxDepth) return std::nullopt;
  // assemble the state sequence, then recover one concrete move per step
  std::vector<std::string> states = walk_to_root(fwd, meet_f);
  std::reverse(states.begin(), states.end());
  std::vector<std::string> tail = walk_to_root(bwd, meet_b);
  states.insert(states.end(), tail.begin() + 1, tail.end());
  std::vector<MoveRecord> path;
  for (size_t i = 0; i + 1 < states.size(); ++i) {
    auto rec = connect_states(parse(states[i]), states[i], states[i + 1], cfg);
    if (!rec) throw CurveError("InvalidSite", "search produced an unreplayable step");
    path.push_back(std::move(*rec));
  }
  return path;
}

std::optional<CurvePath> path_search(const DottedCurve& p, const DottedCurve& q,
                                     const SearchBounds& bounds, SymmetryConfig cfg) {
  CanonicalForm cp = canonical_form(reduce(p), cfg);
  CanonicalForm cq = canonical_form(reduce(q), cfg);
  std::map<std::string, std::pair<std::string, MoveRecord>> parent;
  parent[cp.text] = {cp.text, {}};
  std::vector<std::string> frontier = {cp.text};
  bool found = cp.text == cq.text;
  for (int depth = 0; !found && depth < bounds.maxDepth && !frontier.empty(); ++depth) {
    std::vector<std::string> next;
    for (const std::string& code : frontier) {
      if (found) break;
      DottedCurve cur = parse(code);
      for (const LabeledNeighbor& nb : neighbors_reduced(cur, cfg, bounds.maxM)) {
        if (nb.composite) continue;
        if (nb.curve.crossings() > bounds.maxCrossings) continue;
        std::string ntext = to_token_string(nb.curve);
        if (parent.count(ntext)) continue;
        parent[ntext] = {code, nb.record};
        next.push_back(ntext);
        if (ntext == cq.text) {
          found = true;
          break;
        }
      }
    }
    frontier = std::move(next);
  }
  if (!found) return std::nullopt;
  CurvePath out;
  std::string at = cq.text;
  std::vector<std::pair<std::string, MoveRecord>> rev;
  while (at != cp.text) {
    auto& pr = parent[at];
    rev.push_back({at, pr.second});
    at = pr.first;
  }
  out.nodes.push_back(cp.curve);
  for (auto it = rev.rbegin(); it != rev.rend(); ++it) {
    out.nodes.push_back(parse(it->first));
    out.edges.push_back(it->second);
  }
  return out;
}

}  // namespace curveforge
