#pragma once

#include <optional>
#include <string>
#include <vector>

#include "curveforge/canonical.hpp"
#include "curveforge/map.hpp"

namespace curveforge {

enum class MoveKind {
  R1Plus,
  R1Minus,
  R2Plus,
  R2Minus,
  R3,
  AlphaPlus,
  AlphaMinus,
  BetaPlus,
  BetaMinus,
};

std::string move_kind_name(MoveKind k);

// Site parameters, by kind:
//   R1Minus    a = loop arc of the 1-gon
//   R1Plus     a = arc, b = side (0 = left, 1 = right)
//   R2Minus    a, b = the 2-gon's edge arcs, a < b
//   R2Plus     a, b = ordered pair of darts on one face; trivial curve: a = b = -1
//   R3         a, b, c = triangle edge arcs in walk order, least first
//   AlphaMinus a, b, c = triangle as for R3, v = corner crossing label
//   AlphaPlus  a = arc, b = side, x, y, z = triangle arcs on the kinked curve
//   BetaMinus  a, b = cut arcs (a < b), v = side (0: factor is a+1..b),
//              m = chain length; whole-curve split: a = b = -1
//   BetaPlus   a = attachment arc, m = chain length, b = variant index
struct MoveSite {
  int a = -1, b = -1, c = -1;
  int v = -1;
  int m = -1;
  int x = -1, y = -1, z = -1;

  bool operator==(const MoveSite& o) const {
    return a == o.a && b == o.b && c == o.c && v == o.v && m == o.m &&
           x == o.x && y == o.y && z == o.z;
  }
};

// Witness trail entry.  before/after are canonical codes; site coordinates
// refer to the parse of `before`, so replaying (kind, site) on parse(before)
// yields a curve isotopic to parse(after).
struct MoveRecord {
  MoveKind kind;
  MoveSite site;
  std::string before, after;
};

// --- Reidemeister I ---

std::vector<MoveSite> sites_r1_minus(const DottedCurve& c);
DottedCurve apply_r1_minus(const DottedCurve& c, const MoveSite& s);
std::vector<MoveSite> sites_r1_plus(const DottedCurve& c);
DottedCurve apply_r1_plus(const DottedCurve& c, int arc, int side);

// --- Reidemeister II ---

std::vector<MoveSite> sites_r2_minus(const DottedCurve& c);
DottedCurve apply_r2_minus(const DottedCurve& c, const MoveSite& s);
std::vector<MoveSite> sites_r2_plus(const DottedCurve& c);
DottedCurve apply_r2_plus(const DottedCurve& c, const MoveSite& s);

// --- Reidemeister III ---

std::vector<MoveSite> sites_r3(const DottedCurve& c);
DottedCurve apply_r3(const DottedCurve& c, const MoveSite& s);

// --- reduction ---

// No applicable kink removal remains (dotted 1-gons never count).
bool is_ri_minimal(const DottedCurve& c);

// Collapses 1-gons smallest-site-first until RI-minimal.  The result is
// order-independent up to isotopy; this picks a deterministic order.
DottedCurve reduce(const DottedCurve& c);

struct ReduceTrace {
  DottedCurve curve;
  std::vector<int> killed_labels;  // in removal order
  std::vector<int> position_of;    // original occurrence -> final position, -1 if deleted
};
ReduceTrace reduce_trace(const DottedCurve& c);

// --- composition ---

// Splices q into p at their dots; the two consumed dots vanish, every other
// dot persists.  reversing selects the gluing homeomorphism's effect on the
// strand direction.
DottedCurve connected_sum(const DottedCurve& p, int dotP, const DottedCurve& q,
                          int dotQ, bool reversing);

// All m-crossing curves grown from the trivial curve by m kink insertions
// that admit two dots making them RI-minimal (every 1-gon dotted).  m = 0
// yields the empty list: the doubly-dotted trivial curve would put two dots
// on one arc, so its role is folded into the beta operations directly.
std::vector<DottedCurve> infinity_chain(int m, SymmetryConfig cfg = {});

// Trefoil shadow, genus-0 signing.
DottedCurve trefoil_curve();

// Dot-inequivalent one-dotted trefoils.
std::vector<DottedCurve> trefoil_3_1(SymmetryConfig cfg = {});

// --- alpha ---

std::vector<MoveSite> sites_alpha_minus(const DottedCurve& c);
DottedCurve apply_alpha_minus(const DottedCurve& c, const MoveSite& s);

struct AlphaPlusApp {
  DottedCurve result;
  MoveSite site;  // AlphaPlus coordinates on c
  int d1 = 0, d2 = 0;  // the two non-kink corners of the triangle used
};

// Every kink-then-triangle composite that the inverse filter certifies as a
// genuine alpha move (some alpha-minus of the result returns c).  One entry
// per application; callers dedupe results as needed.
std::vector<AlphaPlusApp> alpha_plus_applications(const DottedCurve& c,
                                                  SymmetryConfig cfg = {});
std::vector<std::pair<DottedCurve, MoveRecord>> enumerate_alpha_plus(
    const DottedCurve& c, SymmetryConfig cfg = {});

// --- beta ---

// The one-dotted composites (chain of m kinks) # (dotted trefoil), over all
// chain variants, dot roles, and gluing orientations; the surviving dot is
// the outward attachment point.
std::vector<DottedCurve> infinity_sum_variants(int m, SymmetryConfig cfg = {});

// All connected sums of c (dotted at arc) with every m-chain trefoil
// composite, over both gluing orientations, canonically deduplicated.
std::vector<DottedCurve> enumerate_beta_plus(const DottedCurve& c, int arc,
                                             int m, SymmetryConfig cfg = {});

// Factor splits whose severed side is a chain-trefoil composite.  mFilter
// restricts the chain length when nonnegative.
std::vector<MoveSite> sites_beta_minus(const DottedCurve& c,
                                       SymmetryConfig cfg = {},
                                       int mFilter = -1);
DottedCurve apply_beta_minus(const DottedCurve& c, const MoveSite& s,
                             SymmetryConfig cfg = {});

// Replays any recorded move at its site; beta+ sites carry the variant as
// b = 2 * (variant index) + (gluing orientation).
DottedCurve apply_move(const DottedCurve& c, MoveKind kind, const MoveSite& s,
                       SymmetryConfig cfg = {});

}  // namespace curveforge
