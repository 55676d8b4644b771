#include "curveforge/curve.hpp"

#include <map>
#include <sstream>

namespace curveforge {

DottedCurve parse(const std::string& text) {
  DottedCurve c;
  std::istringstream in(text);
  std::string tok;
  int pos = 0;
  while (in >> tok) {
    bool dotted = false;
    if (tok.size() >= 2 && tok.compare(tok.size() - 2, 2, ".d") == 0) {
      dotted = true;
      tok.erase(tok.size() - 2);
    }
    if (tok.empty() && dotted) {
      // lone ".d": only legal as the entire input (trivial curve with a dot)
      if (pos != 0 || (in >> tok))
        throw CurveError("MalformedToken", "stray .d");
      c.dots.insert(0);
      return c;
    }
    if (tok.size() < 2)
      throw CurveError("MalformedToken", "token too short: '" + tok + "'");
    char sc = tok.back();
    if (sc != '+' && sc != '-')
      throw CurveError("MalformedToken", "token lacks sign: '" + tok + "'");
    int label = 0;
    for (size_t i = 0; i + 1 < tok.size(); ++i) {
      if (tok[i] < '0' || tok[i] > '9')
        throw CurveError("MalformedToken", "bad label in '" + tok + "'");
      label = label * 10 + (tok[i] - '0');
    }
    if (label == 0)
      throw CurveError("MalformedToken", "label must be positive: '" + tok + "'");
    c.tokens.push_back({label, sc == '+' ? +1 : -1});
    if (dotted) c.dots.insert(pos);
    ++pos;
  }
  check_structure(c);
  return c;
}

std::string to_token_string(const DottedCurve& c) {
  if (c.tokens.empty()) return c.dots.empty() ? "" : ".d";
  std::string out;
  for (int i = 0; i < c.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(c.tokens[i].label);
    out += c.tokens[i].sign > 0 ? '+' : '-';
    if (c.dots.count(i)) out += ".d";
  }
  return out;
}

void check_structure(const DottedCurve& c) {
  std::map<int, std::vector<int>> occ;
  for (int i = 0; i < c.size(); ++i) {
    const Token& t = c.tokens[i];
    if (t.label <= 0 || (t.sign != 1 && t.sign != -1))
      throw CurveError("MalformedToken", "bad token at position " + std::to_string(i));
    occ[t.label].push_back(i);
  }
  for (auto& [label, where] : occ) {
    if (where.size() != 2)
      throw CurveError("LabelCountNotTwo",
                       "label " + std::to_string(label) + " occurs " +
                           std::to_string(where.size()) + " times");
    if (c.tokens[where[0]].sign == c.tokens[where[1]].sign)
      throw CurveError("OccSignMismatch",
                       "label " + std::to_string(label) + " repeats its sign");
  }
  for (int d : c.dots)
    if (d < 0 || d >= c.arc_count())
      throw CurveError("MalformedToken", "dot on nonexistent arc " + std::to_string(d));
}

DottedCurve reverse_curve(const DottedCurve& c) {
  DottedCurve r;
  int n = c.size();
  r.tokens.reserve(n);
  for (int i = n - 1; i >= 0; --i) r.tokens.push_back(c.tokens[i]);
  // occurrence i moves to n-1-i, so arc t (from occ t to t+1) becomes the
  // arc from occ n-2-t to n-1-t, i.e. arc (n-2-t) mod n
  for (int t : c.dots) r.dots.insert(n == 0 ? 0 : ((n - 2 - t) % n + n) % n);
  return r;
}

DottedCurve mirror_curve(const DottedCurve& c) {
  DottedCurve m = c;
  for (Token& t : m.tokens) t.sign = -t.sign;
  return m;
}

DottedCurve reroot(const DottedCurve& c, int r) {
  int n = c.size();
  if (n == 0) return c;
  r = ((r % n) + n) % n;
  DottedCurve out;
  out.tokens.reserve(n);
  for (int i = 0; i < n; ++i) out.tokens.push_back(c.tokens[(r + i) % n]);
  for (int t : c.dots) out.dots.insert(((t - r) % n + n) % n);
  return out;
}

DottedCurve relabel_fresh(const DottedCurve& c) {
  DottedCurve out = c;
  std::map<int, int> seen;
  int next = 1;
  for (Token& t : out.tokens) {
    auto it = seen.find(t.label);
    if (it == seen.end()) it = seen.emplace(t.label, next++).first;
    t.label = it->second;
  }
  return out;
}

int max_label(const DottedCurve& c) {
  int m = 0;
  for (const Token& t : c.tokens) m = std::max(m, t.label);
  return m;
}

}  // namespace curveforge
