#include "curveforge/canonical.hpp"

#include <tuple>
#include <vector>

namespace curveforge {

namespace {

using Key = std::vector<std::tuple<int, int, int>>;  // (label, sign flag, dot flag)

Key key_of(const DottedCurve& c) {
  Key k;
  k.reserve(c.size());
  for (int i = 0; i < c.size(); ++i)
    k.emplace_back(c.tokens[i].label, c.tokens[i].sign > 0 ? 0 : 1,
                   c.dots.count(i) ? 1 : 0);
  return k;
}

DottedCurve candidate(const DottedCurve& c, int r, bool backward, bool mirrored) {
  int n = c.size();
  DottedCurve out;
  out.tokens.reserve(n);
  for (int m = 0; m < n; ++m) {
    int src = backward ? ((r - m) % n + n) % n : (r + m) % n;
    Token t = c.tokens[src];
    if (mirrored) t.sign = -t.sign;
    out.tokens.push_back(t);
    // arc m of the candidate is arc src forward, arc src-1 backward
    int arc = backward ? ((r - m - 1) % n + n) % n : src;
    if (c.dots.count(arc)) out.dots.insert(m);
  }
  return relabel_fresh(out);
}

}  // namespace

CanonicalForm canonical_form(const DottedCurve& c, SymmetryConfig cfg) {
  check_structure(c);
  if (c.tokens.empty()) {
    DottedCurve t;
    t.dots = c.dots;
    return {t, to_token_string(t)};
  }
  DottedCurve best;
  Key best_key;
  bool have = false;
  for (int mir = 0; mir <= (cfg.mirror ? 1 : 0); ++mir)
    for (int dir = 0; dir < 2; ++dir)
      for (int r = 0; r < c.size(); ++r) {
        DottedCurve cand = candidate(c, r, dir == 1, mir == 1);
        Key k = key_of(cand);
        if (!have || k < best_key) {
          best = std::move(cand);
          best_key = std::move(k);
          have = true;
        }
      }
  return {best, to_token_string(best)};
}

std::string canonical_text(const DottedCurve& c, SymmetryConfig cfg) {
  return canonical_form(c, cfg).text;
}

bool is_isotopic(const DottedCurve& a, const DottedCurve& b, SymmetryConfig cfg) {
  return canonical_text(a, cfg) == canonical_text(b, cfg);
}

}  // namespace curveforge
