#include "curveforge/census.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <thread>
#include <tuple>

#include "curveforge/map.hpp"
#include "curveforge/moves.hpp"
#include "curveforge/structure.hpp"
#include "json.hpp"

namespace curveforge {

namespace {

// all double-occurrence words on k labels with first occurrences in
// increasing order; rotations collapse later under canonical dedupe
void gen_words(int k, std::vector<int>& word, int next_label,
               std::vector<int>& open, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(word.size()) == 2 * k) {
    if (open.empty()) out.push_back(word);
    return;
  }
  for (size_t i = 0; i < open.size(); ++i) {
    int lab = open[i];
    open.erase(open.begin() + i);
    word.push_back(lab);
    gen_words(k, word, next_label, open, out);
    word.pop_back();
    open.insert(open.begin() + i, lab);
  }
  if (next_label <= k) {
    open.push_back(next_label);
    word.push_back(next_label);
    gen_words(k, word, next_label + 1, open, out);
    word.pop_back();
    open.pop_back();
  }
}

std::vector<std::vector<int>> double_occurrence_words(int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> word, open;
  gen_words(k, word, 1, open, out);
  return out;
}

DottedCurve curve_from(const std::vector<int>& word, unsigned signs) {
  DottedCurve c;
  std::map<int, int> first;
  for (size_t i = 0; i < word.size(); ++i) {
    int lab = word[i];
    auto [it, fresh] = first.try_emplace(lab, static_cast<int>(i));
    int s = (signs >> (lab - 1)) & 1u ? -1 : +1;
    c.tokens.push_back({lab, fresh ? s : -s});
  }
  return c;
}

bool passes(const DottedCurve& c, CensusFilter filter) {
  switch (filter) {
    case CensusFilter::All: return true;
    case CensusFilter::RIMinimal: return is_ri_minimal(c);
    case CensusFilter::Prime: return is_prime(c);
  }
  return false;
}

void sort_codes(std::vector<std::string>& codes) {
  std::sort(codes.begin(), codes.end(), [](const std::string& a, const std::string& b) {
    size_t ka = std::count(a.begin(), a.end(), ' ') + (a.empty() ? 0 : 1);
    size_t kb = std::count(b.begin(), b.end(), ' ') + (b.empty() ? 0 : 1);
    return ka != kb ? ka < kb : a < b;
  });
}

}  // namespace

std::vector<std::string> enumerate_curves(int n, CensusFilter filter,
                                          SymmetryConfig cfg) {
  std::set<std::string> seen;
  for (int k = 0; k <= n; ++k)
    for (const std::vector<int>& word : double_occurrence_words(k))
      for (unsigned signs = 0; signs < (1u << k); ++signs) {
        DottedCurve c = curve_from(word, signs);
        if (build_map(c).genus() != 0) continue;
        if (!passes(c, filter)) continue;
        seen.insert(canonical_text(c, cfg));
      }
  std::vector<std::string> out(seen.begin(), seen.end());
  sort_codes(out);
  return out;
}

namespace {

// rotation-system map: alpha pairs arc darts, sigma is the vertex rotation
struct RotMap {
  int k = 0;
  std::vector<int> alpha, sigma, sigma_inv;
};

RotMap rot_map_from(const std::vector<int>& word, unsigned bits) {
  int k = 0;
  for (int lab : word) k = std::max(k, lab);
  int n = static_cast<int>(word.size());
  RotMap m;
  m.k = k;
  m.alpha.assign(2 * n, 0);
  m.sigma.assign(2 * n, 0);
  for (int i = 0; i < n; ++i) {
    m.alpha[2 * i] = 2 * ((i + 1) % n) + 1;
    m.alpha[2 * i + 1] = 2 * ((i - 1 + n) % n);
  }
  std::map<int, std::pair<int, int>> occs;
  for (int i = 0; i < n; ++i) {
    auto it = occs.find(word[i]);
    if (it == occs.end())
      occs[word[i]] = {i, -1};
    else
      it->second.second = i;
  }
  for (const auto& [lab, pq] : occs) {
    auto [p, q] = pq;
    std::vector<int> rot;
    if ((bits >> (lab - 1)) & 1u)
      rot = {2 * p, 2 * q + 1, 2 * p + 1, 2 * q};
    else
      rot = {2 * p, 2 * q, 2 * p + 1, 2 * q + 1};
    for (int t = 0; t < 4; ++t) m.sigma[rot[t]] = rot[(t + 1) % 4];
  }
  m.sigma_inv.assign(2 * n, 0);
  for (int d = 0; d < 2 * n; ++d) m.sigma_inv[m.sigma[d]] = d;
  return m;
}

int rot_face_count(const RotMap& m) {
  int nd = static_cast<int>(m.alpha.size());
  std::vector<char> done(nd, 0);
  int faces = 0;
  for (int d = 0; d < nd; ++d) {
    if (done[d]) continue;
    ++faces;
    int x = d;
    while (!done[x]) {
      done[x] = 1;
      x = m.sigma[m.alpha[x]];
    }
  }
  return faces;
}

bool rot_has_onegon(const RotMap& m) {
  int nd = static_cast<int>(m.alpha.size());
  for (int d = 0; d < nd; ++d)
    if (m.sigma[m.alpha[d]] == d) return true;
  return false;
}

// seeded propagation: an isomorphism is fixed by the image of one dart
bool rot_iso_seeded(const RotMap& a, const RotMap& b, int seed, bool mirrored) {
  int nd = static_cast<int>(a.alpha.size());
  std::vector<int> f(nd, -1), g(nd, -1);
  std::vector<int> stack = {0};
  f[0] = seed;
  g[seed] = 0;
  const std::vector<int>& bs = mirrored ? b.sigma_inv : b.sigma;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int step = 0; step < 2; ++step) {
      int y = step == 0 ? a.alpha[x] : a.sigma[x];
      int fy = step == 0 ? b.alpha[f[x]] : bs[f[x]];
      if (f[y] == -1 && g[fy] == -1) {
        f[y] = fy;
        g[fy] = y;
        stack.push_back(y);
      } else if (f[y] != fy || (f[y] != -1 && g[f[y]] != y)) {
        return false;
      }
    }
  }
  return true;
}

bool rot_iso(const RotMap& a, const RotMap& b, bool mirror) {
  if (a.k != b.k) return false;
  int nd = static_cast<int>(a.alpha.size());
  if (nd == 0) return true;
  for (int seed = 0; seed < nd; ++seed) {
    if (rot_iso_seeded(a, b, seed, false)) return true;
    if (mirror && rot_iso_seeded(a, b, seed, true)) return true;
  }
  return false;
}

std::vector<int> rot_face_degrees(const RotMap& m) {
  int nd = static_cast<int>(m.alpha.size());
  std::vector<char> done(nd, 0);
  std::vector<int> degs;
  for (int d = 0; d < nd; ++d) {
    if (done[d]) continue;
    int deg = 0, x = d;
    while (!done[x]) {
      done[x] = 1;
      ++deg;
      x = m.sigma[m.alpha[x]];
    }
    degs.push_back(deg);
  }
  std::sort(degs.begin(), degs.end());
  return degs;
}

std::string rot_code(const std::vector<int>& word, unsigned bits,
                     SymmetryConfig cfg) {
  DottedCurve c;
  std::map<int, int> first;
  for (size_t i = 0; i < word.size(); ++i) {
    auto [it, fresh] = first.try_emplace(word[i], static_cast<int>(i));
    int plus_first = (bits >> (word[i] - 1)) & 1u ? -1 : +1;
    c.tokens.push_back({word[i], fresh ? plus_first : -plus_first});
  }
  return canonical_text(c, cfg);
}

}  // namespace

std::vector<std::string> enumerate_curves_rotation(int n, CensusFilter filter,
                                                   SymmetryConfig cfg) {
  std::vector<std::string> out;
  for (int k = 0; k <= n; ++k) {
    if (k == 0) {
      // dartless embedded circle; the face-count test below cannot see its
      // two faces, so it is admitted directly (it is never prime)
      if (filter != CensusFilter::Prime) out.push_back("");
      continue;
    }
    // bucket representatives by face-degree profile before the iso search
    std::map<std::vector<int>, std::vector<RotMap>> reps;
    std::vector<std::string> codes;
    for (const std::vector<int>& word : double_occurrence_words(k))
      for (unsigned bits = 0; bits < (1u << k); ++bits) {
        RotMap m = rot_map_from(word, bits);
        if (rot_face_count(m) != k + 2) continue;  // genus > 0
        if (filter == CensusFilter::RIMinimal && rot_has_onegon(m)) continue;
        std::vector<int> profile = rot_face_degrees(m);
        bool fresh = true;
        for (const RotMap& r : reps[profile])
          if (rot_iso(m, r, cfg.mirror)) {
            fresh = false;
            break;
          }
        if (!fresh) continue;
        std::string code = rot_code(word, bits, cfg);
        if (filter == CensusFilter::Prime && !is_prime(parse(code))) continue;
        reps[profile].push_back(std::move(m));
        codes.push_back(std::move(code));
      }
    std::sort(codes.begin(), codes.end());
    out.insert(out.end(), codes.begin(), codes.end());
  }
  return out;
}

std::vector<std::vector<int>> CensusGraph::components() const {
  int n_nodes = static_cast<int>(nodes.size());
  std::vector<int> parent(n_nodes);
  for (int i = 0; i < n_nodes; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const CensusEdge& e : edges) parent[find(e.a)] = find(e.b);
  std::map<int, std::vector<int>> groups;
  for (int i = 0; i < n_nodes; ++i) groups[find(i)].push_back(i);
  std::vector<std::vector<int>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

CensusGraph build_move_graph(int n, int maxM, SymmetryConfig cfg, int workers) {
  CensusGraph g;
  g.n = n;
  g.maxM = maxM < 0 ? std::max(0, n - 3) : maxM;
  g.symmetry = cfg;
  std::map<std::string, int> index;
  for (const std::string& code : enumerate_curves(n, CensusFilter::RIMinimal, cfg)) {
    DottedCurve c = parse(code);
    CensusNode node;
    node.code = code;
    node.crossings = c.crossings();
    node.fc = f_c(c);
    node.prime = is_prime(c);
    index[code] = static_cast<int>(g.nodes.size());
    g.nodes.push_back(std::move(node));
  }
  using EdgeKey = std::tuple<int, int, int, int>;
  std::vector<std::vector<std::pair<EdgeKey, MoveRecord>>> shards(
      std::max(1, workers));
  auto work = [&](int shard, int stride) {
    for (int i = shard; i < static_cast<int>(g.nodes.size()); i += stride) {
      DottedCurve c = parse(g.nodes[i].code);
      for (const LabeledNeighbor& nb : neighbors_reduced(c, cfg, g.maxM)) {
        if (nb.composite) continue;
        if (nb.curve.crossings() > n) continue;
        auto it = index.find(to_token_string(nb.curve));
        if (it == index.end()) continue;  // dotted neighbors stay outside the census
        int j = it->second;
        EdgeKind kind = EdgeKind::R3;
        int m = -1;
        switch (nb.record.kind) {
          case MoveKind::R3: kind = EdgeKind::R3; break;
          case MoveKind::AlphaPlus:
          case MoveKind::AlphaMinus: kind = EdgeKind::Alpha; break;
          case MoveKind::BetaPlus:
          case MoveKind::BetaMinus:
            kind = EdgeKind::Beta;
            m = nb.record.site.m;
            break;
          default: continue;
        }
        EdgeKey key = {std::min(i, j), std::max(i, j), static_cast<int>(kind), m};
        shards[shard].push_back({key, nb.record});
      }
    }
  };
  int nw = std::max(1, workers);
  if (nw == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < nw; ++w) pool.emplace_back(work, w, nw);
    for (std::thread& t : pool) t.join();
  }
  std::map<EdgeKey, MoveRecord> dedup;
  for (const auto& shard : shards)
    for (const auto& [key, rec] : shard) dedup.try_emplace(key, rec);
  for (const auto& [key, rec] : dedup) {
    CensusEdge e;
    e.a = std::get<0>(key);
    e.b = std::get<1>(key);
    e.kind = static_cast<EdgeKind>(std::get<2>(key));
    e.m = std::get<3>(key);
    g.edges.push_back(e);
    g.witnesses.push_back(rec);
  }
  return g;
}

namespace {

std::string edge_kind_name(EdgeKind k) {
  switch (k) {
    case EdgeKind::R3: return "r3";
    case EdgeKind::Alpha: return "alpha";
    case EdgeKind::Beta: return "beta";
  }
  return "?";
}

EdgeKind edge_kind_from(const std::string& s) {
  if (s == "r3") return EdgeKind::R3;
  if (s == "alpha") return EdgeKind::Alpha;
  if (s == "beta") return EdgeKind::Beta;
  throw CurveError("UnsupportedFormat", "unknown edge kind " + s);
}

}  // namespace

std::string export_graph(const CensusGraph& g, const std::string& format) {
  if (format == "json") {
    nlohmann::ordered_json j;
    j["n"] = g.n;
    j["maxm"] = g.maxM;
    j["symmetry"] = {{"mirror", g.symmetry.mirror}};
    j["nodes"] = nlohmann::ordered_json::array();
    for (const CensusNode& node : g.nodes)
      j["nodes"].push_back({{"code", node.code},
                            {"crossings", node.crossings},
                            {"fc", node.fc},
                            {"prime", node.prime}});
    j["edges"] = nlohmann::ordered_json::array();
    for (const CensusEdge& e : g.edges) {
      nlohmann::ordered_json je = {{"a", e.a}, {"b", e.b}, {"kind", edge_kind_name(e.kind)}};
      if (e.kind == EdgeKind::Beta) je["m"] = e.m;
      j["edges"].push_back(je);
    }
    j["components"] = g.components();
    return j.dump(2) + "\n";
  }
  if (format == "dot") {
    std::string out = "graph census {\n";
    for (const CensusNode& node : g.nodes)
      out += "  n" + std::to_string(&node - g.nodes.data()) + " [label=\"" +
             node.code + "\"];\n";
    for (const CensusEdge& e : g.edges) {
      out += "  n" + std::to_string(e.a) + " -- n" + std::to_string(e.b) +
             " [label=\"" + edge_kind_name(e.kind);
      if (e.kind == EdgeKind::Beta) out += "(" + std::to_string(e.m) + ")";
      out += "\"];\n";
    }
    out += "}\n";
    return out;
  }
  throw CurveError("UnsupportedFormat", "format must be json or dot");
}

CensusGraph import_graph_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  CensusGraph g;
  g.n = j.at("n").get<int>();
  g.maxM = j.at("maxm").get<int>();
  g.symmetry.mirror = j.at("symmetry").at("mirror").get<bool>();
  for (const auto& jn : j.at("nodes")) {
    CensusNode node;
    node.code = jn.at("code").get<std::string>();
    node.crossings = jn.at("crossings").get<int>();
    node.fc = jn.at("fc").get<int>();
    node.prime = jn.at("prime").get<bool>();
    g.nodes.push_back(std::move(node));
  }
  for (const auto& je : j.at("edges")) {
    CensusEdge e;
    e.a = je.at("a").get<int>();
    e.b = je.at("b").get<int>();
    e.kind = edge_kind_from(je.at("kind").get<std::string>());
    if (je.contains("m")) e.m = je.at("m").get<int>();
    g.edges.push_back(e);
  }
  return g;
}

}  // namespace curveforge
