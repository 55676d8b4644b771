#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "curveforge/census.hpp"
#include "curveforge/curve.hpp"
#include "curveforge/equivalence.hpp"
#include "curveforge/map.hpp"
#include "curveforge/moves.hpp"
#include "curveforge/structure.hpp"
#include "json.hpp"

using namespace curveforge;
using nlohmann::ordered_json;

namespace {

struct Options {
  bool mirror = false;
  int maxCrossings = 12;
  int maxDepth = 12;
  int maxR3 = 1;
  int maxM = -1;  // auto: n - 3 for census, the SearchBounds default elsewhere
  int workers = 1;
  unsigned seed = 0;
  std::string format = "text";
};

SymmetryConfig sym(const Options& o) { return SymmetryConfig{o.mirror}; }

SearchBounds bounds_of(const Options& o) {
  SearchBounds b;
  b.maxCrossings = o.maxCrossings;
  b.maxDepth = o.maxDepth;
  b.maxR3 = o.maxR3;
  // a chain cap tied to maxCrossings makes the search fanout explode; keep
  // the library default unless the user asks for more
  if (o.maxM >= 0) b.maxM = o.maxM;
  return b;
}

ordered_json config_json(const Options& o) {
  return ordered_json{{"mirror", o.mirror},
                      {"max_crossings", o.maxCrossings},
                      {"max_depth", o.maxDepth},
                      {"max_r3", o.maxR3},
                      {"max_m", bounds_of(o).maxM},
                      {"workers", o.workers},
                      {"seed", o.seed},
                      {"format", o.format}};
}

// "-" reads stdin, "@path" reads a file, anything else is the code itself
std::string resolve_code(const std::string& arg) {
  if (arg == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    std::string s = ss.str();
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    return s;
  }
  if (!arg.empty() && arg[0] == '@') {
    std::ifstream in(arg.substr(1));
    if (!in) throw CurveError("UnsupportedFormat", "cannot open " + arg.substr(1));
    std::ostringstream ss;
    ss << in.rdbuf();
    std::string s = ss.str();
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    return s;
  }
  return arg;
}

ordered_json site_json(const MoveSite& s) {
  return ordered_json{{"a", s.a}, {"b", s.b}, {"c", s.c}, {"v", s.v},
                      {"m", s.m}, {"x", s.x}, {"y", s.y}, {"z", s.z}};
}

ordered_json record_json(const MoveRecord& r) {
  return ordered_json{{"kind", move_kind_name(r.kind)},
                      {"site", site_json(r.site)},
                      {"before", r.before},
                      {"after", r.after}};
}

ordered_json witness_json(const MoveWitness& w) {
  return ordered_json{{"kind", move_kind_name(w.kind)},
                      {"site", site_json(w.site)},
                      {"before", w.before},
                      {"after", w.after}};
}

void emit(const Options& o, ordered_json j) {
  j["config"] = config_json(o);
  std::cout << j.dump(2) << "\n";
}

int run_validate(const Options& o, const std::string& code) {
  DottedCurve c = parse(resolve_code(code));
  validate(c);
  if (o.format == "json") {
    emit(o, ordered_json{{"valid", true},
                         {"crossings", c.crossings()},
                         {"arcs", c.arc_count()},
                         {"dots", std::vector<int>(c.dots.begin(), c.dots.end())}});
  } else {
    std::cout << "ok crossings=" << c.crossings() << " arcs=" << c.arc_count() << "\n";
  }
  return 0;
}

int run_canon(const Options& o, const std::string& code) {
  DottedCurve c = parse(resolve_code(code));
  validate(c);
  std::string text = canonical_text(c, sym(o));
  if (o.format == "json")
    emit(o, ordered_json{{"canonical", text}});
  else
    std::cout << text << "\n";
  return 0;
}

int run_faces(const Options& o, const std::string& code) {
  DottedCurve c = parse(resolve_code(code));
  validate(c);
  CurveMap mp = build_map(c);
  if (o.format == "json") {
    ordered_json faces = ordered_json::array();
    for (const Face& f : mp.face_list)
      faces.push_back(ordered_json{{"degree", f.degree()}, {"arcs", f.arcs}, {"corners", f.corners}});
    emit(o, ordered_json{{"degrees", face_degrees(mp)}, {"genus", mp.genus()}, {"faces", faces}});
  } else {
    std::cout << "degrees:";
    for (int d : face_degrees(mp)) std::cout << " " << d;
    std::cout << "\n";
    for (const Face& f : mp.face_list) {
      std::cout << "face " << f.id << ": degree " << f.degree() << " arcs";
      for (int a : f.arcs) std::cout << " " << a;
      std::cout << "\n";
    }
  }
  return 0;
}

int run_reduce(const Options& o, const std::string& code) {
  DottedCurve c = parse(resolve_code(code));
  validate(c);
  std::string text = canonical_text(reduce(c), sym(o));
  if (o.format == "json")
    emit(o, ordered_json{{"reduced", text}});
  else
    std::cout << text << "\n";
  return 0;
}

int run_fc(const Options& o, const std::string& code) {
  DottedCurve c = parse(resolve_code(code));
  validate(c);
  int v = f_c(c);
  if (o.format == "json")
    emit(o, ordered_json{{"fc", v}, {"prime", is_prime(c)}});
  else
    std::cout << v << "\n";
  return 0;
}

int run_decompose(const Options& o, const std::string& code) {
  DottedCurve c = parse(resolve_code(code));
  validate(c);
  std::cout << decomposition_json(prime_decompose(c), sym(o)) << "\n";
  return 0;
}

int run_nugatory(const Options& o, const std::string& code) {
  DottedCurve c = parse(resolve_code(code));
  validate(c);
  NugatoryReport rep = nugatory_report(c);
  if (o.format == "json") {
    ordered_json by = ordered_json::object();
    for (const auto& [lab, val] : rep.by_crossing) by[std::to_string(lab)] = val;
    emit(o, ordered_json{{"nugatory", by}});
  } else {
    for (const auto& [lab, val] : rep.by_crossing)
      std::cout << "crossing " << lab << ": " << (val ? "nugatory" : "plain") << "\n";
  }
  return 0;
}

int run_moves(const Options& o, const std::string& code, const std::string& kind,
              int arc, int m) {
  DottedCurve c = parse(resolve_code(code));
  validate(c);
  SymmetryConfig cfg = sym(o);
  ordered_json sites = ordered_json::array();
  auto add = [&](const MoveSite& s, const DottedCurve& res) {
    sites.push_back(ordered_json{{"site", site_json(s)}, {"result", canonical_text(res, cfg)}});
  };
  if (kind == "r1-") {
    for (const MoveSite& s : sites_r1_minus(c)) {
      try {
        add(s, apply_r1_minus(c, s));
      } catch (const CurveError&) {
      }
    }
  } else if (kind == "r1+") {
    for (const MoveSite& s : sites_r1_plus(c)) add(s, apply_r1_plus(c, s.a, s.b));
  } else if (kind == "r2-") {
    for (const MoveSite& s : sites_r2_minus(c)) add(s, apply_r2_minus(c, s));
  } else if (kind == "r2+") {
    for (const MoveSite& s : sites_r2_plus(c)) add(s, apply_r2_plus(c, s));
  } else if (kind == "r3") {
    for (const MoveSite& s : sites_r3(c)) add(s, apply_r3(c, s));
  } else if (kind == "alpha-") {
    for (const MoveSite& s : sites_alpha_minus(c)) add(s, apply_alpha_minus(c, s));
  } else if (kind == "alpha+") {
    for (const auto& [res, rec] : enumerate_alpha_plus(c, cfg)) add(rec.site, res);
  } else if (kind == "beta-") {
    for (const MoveSite& s : sites_beta_minus(c, cfg)) add(s, apply_beta_minus(c, s, cfg));
  } else if (kind == "beta+") {
    if (arc < 0 || m < 0)
      throw CurveError("InvalidSite", "beta+ needs --arc and --m");
    for (const DottedCurve& res : enumerate_beta_plus(c, arc, m, cfg)) {
      MoveSite s;
      s.a = arc;
      s.m = m;
      add(s, res);
    }
  } else {
    throw CurveError("UnsupportedFormat", "unknown move kind " + kind);
  }
  if (o.format == "json") {
    emit(o, ordered_json{{"kind", kind}, {"sites", sites}});
  } else {
    for (const auto& entry : sites) {
      const auto& s = entry["site"];
      std::cout << kind << " a=" << s["a"].get<int>();
      // unused coordinates stay -1; print only what the move kind set
      if (s["b"].get<int>() >= 0) std::cout << " b=" << s["b"].get<int>();
      if (s["c"].get<int>() >= 0) std::cout << " c=" << s["c"].get<int>();
      if (s["m"].get<int>() >= 0) std::cout << " m=" << s["m"].get<int>();
      std::cout << " -> " << entry["result"].get<std::string>() << "\n";
    }
  }
  return 0;
}

int run_decide(const Options& o, const std::string& a, const std::string& b) {
  DottedCurve p = parse(resolve_code(a)), q = parse(resolve_code(b));
  validate(p);
  validate(q);
  auto w = decide_single_r3(p, q, sym(o));
  if (o.format == "json") {
    ordered_json j{{"verdict", w ? "equivalent" : "not-single-r3"}};
    if (w) j["witness"] = witness_json(*w);
    ordered_json jb{{"max_crossings", o.maxCrossings},
                    {"max_depth", o.maxDepth},
                    {"max_r3", o.maxR3},
                    {"max_m", o.maxM}};
    j["bounds"] = jb;
    emit(o, j);
  } else if (w) {
    std::cout << "equivalent " << move_kind_name(w->kind) << "\n";
  } else {
    std::cout << "not-single-r3\n";
  }
  return 0;
}

int run_oracle(const Options& o, const std::string& a, const std::string& b) {
  DottedCurve p = parse(resolve_code(a)), q = parse(resolve_code(b));
  validate(p);
  validate(q);
  auto path = oracle_reachable(p, q, bounds_of(o), sym(o));
  if (o.format == "json") {
    ordered_json j{{"verdict", path ? "equivalent" : "unknown-within-bounds"}};
    ordered_json jb{{"max_crossings", o.maxCrossings},
                    {"max_depth", o.maxDepth},
                    {"max_r3", o.maxR3},
                    {"max_m", o.maxM}};
    j["bounds"] = jb;
    if (path) {
      ordered_json steps = ordered_json::array();
      for (const MoveRecord& r : *path) steps.push_back(record_json(r));
      j["path"] = steps;
    }
    emit(o, j);
  } else if (path) {
    std::cout << "reached in " << path->size() << " moves\n";
    for (const MoveRecord& r : *path)
      std::cout << "  " << move_kind_name(r.kind) << " -> " << r.after << "\n";
  } else {
    std::cout << "unknown-within-bounds\n";
  }
  return 0;
}

int run_path(const Options& o, const std::string& a, const std::string& b) {
  DottedCurve p = parse(resolve_code(a)), q = parse(resolve_code(b));
  validate(p);
  validate(q);
  auto path = path_search(p, q, bounds_of(o), sym(o));
  if (o.format == "json") {
    ordered_json j{{"verdict", path ? "equivalent" : "unknown-within-bounds"}};
    if (path) {
      std::vector<std::string> nodes;
      for (const DottedCurve& c : path->nodes) nodes.push_back(to_token_string(c));
      ordered_json steps = ordered_json::array();
      for (const MoveRecord& r : path->edges) steps.push_back(record_json(r));
      j["nodes"] = nodes;
      j["edges"] = steps;
    }
    emit(o, j);
  } else if (path) {
    for (size_t i = 0; i < path->nodes.size(); ++i) {
      std::cout << to_token_string(path->nodes[i]) << "\n";
      if (i < path->edges.size())
        std::cout << "  --" << move_kind_name(path->edges[i].kind) << "-->\n";
    }
  } else {
    std::cout << "unknown-within-bounds\n";
  }
  return 0;
}

int run_census(const Options& o, int n) {
  CensusGraph g = build_move_graph(n, o.maxM, sym(o), o.workers);
  if (o.format == "text") {
    std::cout << "nodes=" << g.nodes.size() << " edges=" << g.edges.size()
              << " components=" << g.components().size() << "\n";
  } else {
    std::cout << export_graph(g, o.format);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  if (const char* env = std::getenv("CURVEFORGE_FORMAT")) o.format = env;
  CLI::App app{"spherical curve engine"};
  app.require_subcommand(1);
  app.add_flag("--mirror", o.mirror, "quotient by mirror symmetry");
  app.add_option("--max-crossings", o.maxCrossings, "search crossing bound");
  app.add_option("--max-depth", o.maxDepth, "search depth bound");
  app.add_option("--max-r3", o.maxR3, "oracle RIII budget");
  app.add_option("--max-m", o.maxM, "beta chain cap");
  app.add_option("--format", o.format, "output format: text, json, dot");
  app.add_option("--workers", o.workers, "worker threads");
  app.add_option("--seed", o.seed, "random seed for property commands");

  std::string codeA, codeB, moveKind;
  int censusN = 4, moveArc = -1, moveM = -1;

  CLI::App* c_validate = app.add_subcommand("validate", "check a curve code");
  c_validate->add_option("code", codeA)->required();
  CLI::App* c_canon = app.add_subcommand("canon", "canonical code");
  c_canon->add_option("code", codeA)->required();
  CLI::App* c_faces = app.add_subcommand("faces", "face census");
  c_faces->add_option("code", codeA)->required();
  CLI::App* c_reduce = app.add_subcommand("reduce", "RI-minimal form");
  c_reduce->add_option("code", codeA)->required();
  CLI::App* c_moves = app.add_subcommand("moves", "enumerate move sites");
  c_moves->add_option("code", codeA)->required();
  c_moves->add_option("kind", moveKind, "r1-, r1+, r2-, r2+, r3, alpha-, alpha+, beta-, beta+")
      ->required();
  c_moves->add_option("--arc", moveArc, "attachment arc for beta+");
  c_moves->add_option("--m", moveM, "chain length for beta+");
  CLI::App* c_fc = app.add_subcommand("fc", "prime factor count");
  c_fc->add_option("code", codeA)->required();
  CLI::App* c_decompose = app.add_subcommand("decompose", "prime decomposition");
  c_decompose->add_option("code", codeA)->required();
  CLI::App* c_nugatory = app.add_subcommand("nugatory", "nugatory crossings");
  c_nugatory->add_option("code", codeA)->required();
  CLI::App* c_decide = app.add_subcommand("decide", "single-move equivalence");
  c_decide->add_option("codeA", codeA)->required();
  c_decide->add_option("codeB", codeB)->required();
  CLI::App* c_oracle = app.add_subcommand("oracle", "bounded reachability search");
  c_oracle->add_option("codeA", codeA)->required();
  c_oracle->add_option("codeB", codeB)->required();
  CLI::App* c_census = app.add_subcommand("census", "move graph up to n crossings");
  c_census->add_option("n", censusN)->required();
  CLI::App* c_path = app.add_subcommand("path", "path in the reduced move graph");
  c_path->add_option("codeA", codeA)->required();
  c_path->add_option("codeB", codeB)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(c_validate)) return run_validate(o, codeA);
    if (app.got_subcommand(c_canon)) return run_canon(o, codeA);
    if (app.got_subcommand(c_faces)) return run_faces(o, codeA);
    if (app.got_subcommand(c_reduce)) return run_reduce(o, codeA);
    if (app.got_subcommand(c_moves)) return run_moves(o, codeA, moveKind, moveArc, moveM);
    if (app.got_subcommand(c_fc)) return run_fc(o, codeA);
    if (app.got_subcommand(c_decompose)) return run_decompose(o, codeA);
    if (app.got_subcommand(c_nugatory)) return run_nugatory(o, codeA);
    if (app.got_subcommand(c_decide)) return run_decide(o, codeA, codeB);
    if (app.got_subcommand(c_oracle)) return run_oracle(o, codeA, codeB);
    if (app.got_subcommand(c_census)) return run_census(o, censusN);
    if (app.got_subcommand(c_path)) return run_path(o, codeA, codeB);
  } catch (const CurveError& e) {
    ordered_json err{{"error", {{"code", e.code}, {"message", e.what()}}}};
    std::cout << err.dump(2) << "\n";
    return 1;
  }
  return 2;
}
