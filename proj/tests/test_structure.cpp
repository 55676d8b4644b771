#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

#include "curveforge/canonical.hpp"
#include "curveforge/census.hpp"
#include "curveforge/map.hpp"
#include "curveforge/moves.hpp"
#include "curveforge/structure.hpp"

using namespace curveforge;

namespace {

std::string error_code(const std::function<void()>& f) {
  try {
    f();
  } catch (const CurveError& e) {
    return e.code;
  }
  return "";
}

std::multiset<std::string> factor_codes(const DottedCurve& c) {
  std::multiset<std::string> out;
  for (const DottedCurve& f : prime_decompose(c).factors())
    out.insert(canonical_text(f));
  return out;
}

}  // namespace

TEST_CASE("nugatory fixtures") {
  CHECK(is_nugatory(parse("1+ 1-"), 1));
  CHECK(is_nugatory(parse("1+ 1- 2+ 2-"), 1));
  CHECK(is_nugatory(parse("1+ 1- 2+ 2-"), 2));
  for (int l = 1; l <= 3; ++l) CHECK_FALSE(is_nugatory(parse("1+ 2- 3+ 1- 2+ 3-"), l));
  CHECK(error_code([] { is_nugatory(parse("1+ 1-"), 7); }) == "NoSuchCrossing");

  NugatoryReport rep = nugatory_report(parse("1+ 1- 2- 2+"));
  REQUIRE(rep.by_crossing.size() == 2);
  CHECK(rep.by_crossing.at(1));
  CHECK(rep.by_crossing.at(2));
}

TEST_CASE("nugatory agrees with the quadrant picture") {
  // a crossing is nugatory iff a circle through two opposite quadrants can
  // close up inside a single face
  for (int n = 1; n <= 5; ++n)
    for (const std::string& code : enumerate_curves(n, CensusFilter::All)) {
      DottedCurve c = parse(code);
      if (c.crossings() != n) continue;
      CurveMap m = build_map(c);
      for (int cid = 0; cid < m.k; ++cid) {
        const auto& q = m.face_of_quadrant[cid];
        bool oracle = q[0] == q[2] || q[1] == q[3];
        CHECK(is_nugatory(c, m.crossing_labels[cid]) == oracle);
      }
    }
}

TEST_CASE("prime decomposition fixtures") {
  CHECK(error_code([] { prime_decompose(parse("")); }) == "TrivialCurve");
  CHECK(f_c(parse("")) == 0);
  CHECK_FALSE(is_prime(parse("")));

  CHECK(f_c(parse("1+ 1-")) == 1);
  CHECK(is_prime(parse("1+ 1-")));
  CHECK(is_prime(parse("1+ 2- 3+ 1- 2+ 3-")));
  CHECK(is_prime(parse("1+ 2+ 3- 1- 4+ 3+ 2- 4-")));

  // both two-crossing curves split into two dotted kinks
  std::multiset<std::string> kinks{canonical_text(parse("1+ 1-.d")),
                                   canonical_text(parse("1+ 1-.d"))};
  CHECK(factor_codes(parse("1+ 1- 2+ 2-")) == kinks);
  CHECK(factor_codes(parse("1+ 1- 2- 2+")) == kinks);
  CHECK(f_c(parse("1+ 1- 2+ 2-")) == 2);

  DottedCurve tre = parse("1+ 2- 3+ 1- 2+ 3-");
  DecompositionTree t = prime_decompose(tre);
  CHECK(t.nodes.size() == 1);
  CHECK(t.factor_count() == 1);
  CHECK(canonical_text(t.factors()[0]) == canonical_text(tre));
}

TEST_CASE("attachment dots mark where factors met") {
  DottedCurve tre = parse("1+ 2- 3+ 1- 2+ 3-");
  DottedCurve dotted = tre;
  dotted.dots = {0};
  DottedCurve w = connected_sum(dotted, 0, parse("1+.d 1-.d"), 0, false);
  // one original dot of the chain survives the splice
  CHECK(w.dots.size() == 1);
  auto fc = factor_codes(w);
  REQUIRE(fc.size() == 2);
  CHECK(fc.count(canonical_text(parse("1+.d 1-.d"))) == 1);
  DottedCurve treDot = tre;
  treDot.dots = {0};
  bool hasTre = false;
  for (const std::string& code : fc)
    hasTre |= parse(code).crossings() == 3 && parse(code).dots.size() == 1;
  CHECK(hasTre);
}

TEST_CASE("reassembly inverts decomposition exactly") {
  std::mt19937 rng(11);
  auto pool = enumerate_curves(3, CensusFilter::All);
  for (int trial = 0; trial < 60; ++trial) {
    // build a random 2- or 3-factor sum, then a few kinks
    DottedCurve acc = parse(pool[1 + rng() % (pool.size() - 1)]);
    int parts = 1 + static_cast<int>(rng() % 2);
    for (int i = 0; i < parts; ++i) {
      DottedCurve q = parse(pool[1 + rng() % (pool.size() - 1)]);
      int da = static_cast<int>(rng() % acc.arc_count());
      int dq = static_cast<int>(rng() % q.arc_count());
      acc.dots = {da};
      q.dots = {dq};
      acc = connected_sum(acc, da, q, dq, rng() % 2 == 0);
    }
    acc.dots.clear();
    DecompositionTree t = prime_decompose(acc);
    CHECK(reassemble(t) == acc);
    // factor crossing counts add up
    int total = 0;
    for (const DottedCurve& f : t.factors()) total += f.crossings();
    CHECK(total == acc.crossings());
  }
  // dotted inputs keep their dots through the roundtrip
  DottedCurve w = parse("1+ 2- 3+ 1- 2+ 3-.d 4+ 4-");
  CHECK(reassemble(prime_decompose(w)) == w);
}

TEST_CASE("factor count is additive under connected sum") {
  std::mt19937 rng(13);
  auto pool = enumerate_curves(4, CensusFilter::All);
  for (int trial = 0; trial < 60; ++trial) {
    DottedCurve p = parse(pool[1 + rng() % (pool.size() - 1)]);
    DottedCurve q = parse(pool[1 + rng() % (pool.size() - 1)]);
    int da = static_cast<int>(rng() % p.arc_count());
    int dq = static_cast<int>(rng() % q.arc_count());
    int before = f_c(p) + f_c(q);
    p.dots = {da};
    q.dots = {dq};
    DottedCurve s = connected_sum(p, da, q, dq, rng() % 2 == 0);
    s.dots.clear();
    CHECK(f_c(s) == before);
  }
}

TEST_CASE("triangle exterior components") {
  DottedCurve tre = parse("1+ 2- 3+ 1- 2+ 3-");
  auto sites = sites_r3(tre);
  REQUIRE(sites.size() == 2);
  for (const MoveSite& s : sites) CHECK(r3_site_delta(tre, s) == 3);
  CHECK(error_code([&] {
          r3_site_delta(tre, MoveSite{.a = 0, .b = 1, .c = 2});
        }) == "InvalidSite");

  // one kink on the trefoil ties two exterior strands together somewhere
  std::set<int> seen;
  for (int a = 0; a < tre.arc_count(); ++a)
    for (int side = 0; side < 2; ++side) {
      DottedCurve w = apply_r1_plus(tre, a, side);
      for (const MoveSite& s : sites_r3(w)) seen.insert(r3_site_delta(w, s));
    }
  CHECK(seen == std::set<int>{2, 3});

  // all three exterior strands reconnect on this prime six-crossing curve
  DottedCurve six = parse("1+ 2+ 3- 1- 4+ 5- 6+ 3+ 2- 4- 5+ 6-");
  CHECK(is_prime(six));
  bool delta1 = false;
  for (const MoveSite& s : sites_r3(six)) delta1 |= r3_site_delta(six, s) == 1;
  CHECK(delta1);

  // the range is always 1..3
  for (int n = 1; n <= 5; ++n)
    for (const std::string& code : enumerate_curves(n, CensusFilter::All)) {
      DottedCurve c = parse(code);
      for (const MoveSite& s : sites_r3(c)) {
        int d = r3_site_delta(c, s);
        CHECK(d >= 1);
        CHECK(d <= 3);
      }
    }
}

TEST_CASE("every double-trefoil triangle keeps its exterior apart") {
  // frozen by exhausting all sums of two trefoils: no site reaches delta 1
  DottedCurve tre = parse("1+ 2- 3+ 1- 2+ 3-");
  for (int da = 0; da < tre.arc_count(); ++da)
    for (int db = 0; db < tre.arc_count(); ++db)
      for (int rev = 0; rev < 2; ++rev) {
        DottedCurve p = tre, q = tre;
        p.dots = {da};
        q.dots = {db};
        DottedCurve w = connected_sum(p, da, q, db, rev == 1);
        w.dots.clear();
        for (const MoveSite& s : sites_r3(w)) CHECK(r3_site_delta(w, s) == 3);
      }
}

TEST_CASE("triangle slides at nugatory corners merge factors") {
  // when a triangle corner is nugatory the slide loses one or two factors
  int checked = 0;
  for (int n = 3; n <= 5; ++n)
    for (const std::string& code : enumerate_curves(n, CensusFilter::All)) {
      DottedCurve c = parse(code);
      if (c.crossings() != n) continue;
      CurveMap m = build_map(c);
      for (const Face& f : m.face_list) {
        if (f.degree() != 3) continue;
        std::set<int> corners(f.corners.begin(), f.corners.end());
        if (corners.size() != 3) continue;
        bool nug = false;
        for (int l : corners) nug |= is_nugatory(c, l);
        if (!nug) continue;
        std::vector<int> arcs = f.arcs;
        int least = static_cast<int>(std::min_element(arcs.begin(), arcs.end()) -
                                     arcs.begin());
        std::rotate(arcs.begin(), arcs.begin() + least, arcs.end());
        DottedCurve y = apply_r3(c, MoveSite{.a = arcs[0], .b = arcs[1], .c = arcs[2]});
        int drop = f_c(c) - f_c(y);
        CHECK(drop >= 1);
        CHECK(drop <= 2);
        ++checked;
      }
    }
  CHECK(checked > 0);
}

TEST_CASE("decomposition report") {
  DottedCurve lens = parse("1+ 1- 2+ 2-");
  nlohmann::json j = nlohmann::json::parse(decomposition_json(prime_decompose(lens)));
  CHECK(j.at("fc") == 2);
  REQUIRE(j.at("factors").size() == 2);
  CHECK(j.at("factors")[0] == canonical_text(parse("1+ 1-.d")));
  CHECK(j.at("tree").is_object());
}
