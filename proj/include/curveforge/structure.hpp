#pragma once

#include <map>
#include <string>
#include <vector>

#include "curveforge/canonical.hpp"
#include "curveforge/curve.hpp"
#include "curveforge/moves.hpp"

namespace curveforge {

// A crossing d is nugatory iff the cyclic word splits as d u d v with
// letters(u) and letters(v) disjoint; equivalently a simple circle meets the
// curve transversely exactly at d.
bool is_nugatory(const DottedCurve& c, int label);

struct NugatoryReport {
  std::map<int, bool> by_crossing;
};

NugatoryReport nugatory_report(const DottedCurve& c);

// Connected-sum decomposition as a recursion tree.  Each node stands for a
// sub-curve; an internal node records the split arcs in its own word, its
// children are the two severed sides.  Leaves are the prime factors.
// Attachment arcs are tracked separately because two attachments can land on
// one arc, which the one-dot-per-arc curve model cannot carry.
struct DecompNode {
  DottedCurve word;               // carries only dots inherited from the input
  std::vector<int> attachments;   // arcs where severed siblings attach
  int cut_i = -1, cut_j = -1;     // split arcs in `word`; -1 on leaves
  int child_a = -1, child_b = -1;
  bool leaf() const { return cut_i < 0; }
  DottedCurve factor() const;     // word plus attachment dots where they fit
};

struct DecompositionTree {
  std::vector<DecompNode> nodes;  // nodes[0] is the root
  std::vector<DottedCurve> factors() const;
  int factor_count() const;
};

DecompositionTree prime_decompose(const DottedCurve& c);  // errors: TrivialCurve
DottedCurve reassemble(const DecompositionTree& t);       // exact inverse

int f_c(const DottedCurve& c);  // 0 for the trivial curve
bool is_prime(const DottedCurve& c);

// Number of components of the curve minus the open triangle disk: the three
// external strand connections, merged when they share a crossing.
int r3_site_delta(const DottedCurve& c, const MoveSite& site);

std::string decomposition_json(const DecompositionTree& t, SymmetryConfig cfg = {});

}  // namespace curveforge
