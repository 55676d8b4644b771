#include "curveforge/structure.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "curveforge/map.hpp"
#include "json.hpp"

namespace curveforge {

bool is_nugatory(const DottedCurve& c, int label) {
  int n = c.size();
  int p = -1, q = -1;
  for (int i = 0; i < n; ++i)
    if (c.tokens[i].label == label) (p < 0 ? p : q) = i;
  if (p < 0 || q < 0) throw CurveError("NoSuchCrossing", "label absent");
  std::set<int> u, v;
  for (int i = (p + 1) % n; i != q; i = (i + 1) % n) u.insert(c.tokens[i].label);
  for (int i = (q + 1) % n; i != p; i = (i + 1) % n) v.insert(c.tokens[i].label);
  for (int x : u)
    if (v.count(x)) return false;
  return true;
}

NugatoryReport nugatory_report(const DottedCurve& c) {
  NugatoryReport rep;
  for (const Token& t : c.tokens) {
    if (rep.by_crossing.count(t.label)) continue;
    rep.by_crossing[t.label] = is_nugatory(c, t.label);
  }
  return rep;
}

namespace {

// severs the word at arcs i and j; side 0 keeps positions i+1..j.  A dot on
// cut arc j stays with side 0's closing arc, one on cut arc i with side 1's;
// the remap is its own inverse under reassembly.
DottedCurve split_side_raw(const DottedCurve& c, int i, int j, int side) {
  int n = c.size();
  int start = side == 0 ? (i + 1) % n : (j + 1) % n;
  int end = side == 0 ? j : i;
  int len = ((end - start + n) % n) + 1;
  DottedCurve y;
  for (int s = 0; s < len; ++s) y.tokens.push_back(c.tokens[(start + s) % n]);
  for (int t : c.dots) {
    int rel = ((t - start) % n + n) % n;
    if (rel < len) y.dots.insert(rel);
  }
  return y;
}

bool sides_letter_disjoint(const DottedCurve& c, int i, int j) {
  int n = c.size();
  int len0 = ((j - i - 1) % n + n) % n + 1;
  std::map<int, int> side_of;
  int cnt0 = 0, cnt1 = 0;
  for (int p = 0; p < n; ++p) {
    int sd = ((p - i - 1) % n + n) % n < len0 ? 0 : 1;
    (sd == 0 ? cnt0 : cnt1)++;
    auto [it, fresh] = side_of.try_emplace(c.tokens[p].label, sd);
    if (!fresh && it->second != sd) return false;
  }
  return cnt0 > 0 && cnt1 > 0;
}

int decompose_rec(DecompositionTree& tree, DottedCurve word,
                  std::vector<int> attachments) {
  int n = word.size();
  int idx = static_cast<int>(tree.nodes.size());
  tree.nodes.push_back({});
  tree.nodes[idx].word = word;
  tree.nodes[idx].attachments = std::move(attachments);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (!sides_letter_disjoint(word, i, j)) continue;
      tree.nodes[idx].cut_i = i;
      tree.nodes[idx].cut_j = j;
      int len0 = j - i;
      auto remap = [&](int start, int len) {
        std::vector<int> at = {len - 1};  // the sibling attaches on the closing arc
        for (int a : tree.nodes[idx].attachments) {
          int rel = ((a - start) % n + n) % n;
          if (rel < len) at.push_back(rel);  // arcs on the other side skip
        }
        return at;
      };
      DottedCurve s0 = split_side_raw(word, i, j, 0);
      DottedCurve s1 = split_side_raw(word, i, j, 1);
      int a = decompose_rec(tree, s0, remap((i + 1) % n, len0));
      int b = decompose_rec(tree, s1, remap((j + 1) % n, n - len0));
      tree.nodes[idx].child_a = a;
      tree.nodes[idx].child_b = b;
      return idx;
    }
  return idx;
}

}  // namespace

DottedCurve DecompNode::factor() const {
  DottedCurve f = word;
  for (int a : attachments) f.dots.insert(a);  // best effort; collisions drop
  return f;
}

std::vector<DottedCurve> DecompositionTree::factors() const {
  std::vector<DottedCurve> out;
  for (const DecompNode& nd : nodes)
    if (nd.leaf()) out.push_back(nd.factor());
  return out;
}

int DecompositionTree::factor_count() const {
  int n = 0;
  for (const DecompNode& nd : nodes) n += nd.leaf() ? 1 : 0;
  return n;
}

DecompositionTree prime_decompose(const DottedCurve& c) {
  if (c.tokens.empty()) throw CurveError("TrivialCurve", "nothing to decompose");
  DecompositionTree tree;
  decompose_rec(tree, c, {});
  return tree;
}

namespace {

DottedCurve reassemble_rec(const DecompositionTree& t, int idx) {
  const DecompNode& nd = t.nodes[idx];
  if (nd.leaf()) return nd.word;
  DottedCurve a = reassemble_rec(t, nd.child_a);
  DottedCurve b = reassemble_rec(t, nd.child_b);
  int n = nd.word.size();
  DottedCurve out;
  out.tokens.resize(n);
  int start0 = (nd.cut_i + 1) % n, start1 = (nd.cut_j + 1) % n;
  for (int p = 0; p < a.size(); ++p) out.tokens[(start0 + p) % n] = a.tokens[p];
  for (int p = 0; p < b.size(); ++p) out.tokens[(start1 + p) % n] = b.tokens[p];
  for (int d : a.dots) out.dots.insert((start0 + d) % n);
  for (int d : b.dots) out.dots.insert((start1 + d) % n);
  return out;
}

}  // namespace

DottedCurve reassemble(const DecompositionTree& t) {
  if (t.nodes.empty()) return {};
  return reassemble_rec(t, 0);
}

int f_c(const DottedCurve& c) {
  if (c.tokens.empty()) return 0;
  return prime_decompose(c).factor_count();
}

bool is_prime(const DottedCurve& c) { return !c.tokens.empty() && f_c(c) == 1; }

int r3_site_delta(const DottedCurve& c, const MoveSite& site) {
  bool found = false;
  for (const MoveSite& s : sites_r3(c))
    found = found || (s.a == site.a && s.b == site.b && s.c == site.c);
  if (!found) throw CurveError("InvalidSite", "not a 3-gon site");
  int n = c.size();
  std::vector<int> ss = {site.a, site.b, site.c};
  std::sort(ss.begin(), ss.end());
  // external intervals between the three occurrence blocks {s, s+1}
  auto interval_of = [&](int p) -> int {
    for (int t = 0; t < 3; ++t) {
      int start = (ss[t] + 2) % n;
      int len = ((ss[(t + 1) % 3] - ss[t] - 2) % n + n) % n;
      if (((p - start) % n + n) % n < len) return t;
    }
    return -1;  // p is inside a block
  };
  std::map<int, int> first_seen;
  std::vector<int> parent = {0, 1, 2};
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int p = 0; p < n; ++p) {
    int iv = interval_of(p);
    if (iv < 0) continue;
    auto [it, fresh] = first_seen.try_emplace(c.tokens[p].label, iv);
    if (!fresh) parent[find(it->second)] = find(iv);
  }
  std::set<int> roots;
  for (int t = 0; t < 3; ++t) roots.insert(find(t));
  return static_cast<int>(roots.size());
}

namespace {

nlohmann::ordered_json node_json(const DecompositionTree& t, int idx,
                                 SymmetryConfig cfg) {
  const DecompNode& nd = t.nodes[idx];
  nlohmann::ordered_json j;
  j["word"] = to_token_string(nd.word);
  if (!nd.attachments.empty()) j["attachments"] = nd.attachments;
  if (nd.leaf()) {
    j["factor"] = canonical_text(nd.factor(), cfg);
  } else {
    j["cut"] = {nd.cut_i, nd.cut_j};
    j["children"] = {node_json(t, nd.child_a, cfg), node_json(t, nd.child_b, cfg)};
  }
  return j;
}

}  // namespace

std::string decomposition_json(const DecompositionTree& t, SymmetryConfig cfg) {
  nlohmann::ordered_json j;
  j["fc"] = t.factor_count();
  std::vector<std::string> fs;
  for (const DottedCurve& f : t.factors()) fs.push_back(canonical_text(f, cfg));
  std::sort(fs.begin(), fs.end());
  j["factors"] = fs;
  j["tree"] = node_json(t, 0, cfg);
  return j.dump(2);
}

}  // namespace curveforge
