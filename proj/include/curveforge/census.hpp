#pragma once

#include <string>
#include <vector>

#include "curveforge/canonical.hpp"
#include "curveforge/curve.hpp"
#include "curveforge/equivalence.hpp"

namespace curveforge {

enum class CensusFilter { All, RIMinimal, Prime };

// Word-and-signs enumeration: every double-occurrence word on k <= n labels,
// every occurrence-sign pattern, kept when the map is spherical; canonical
// deduplication, then the filter.  Sorted by (crossings, code).
std::vector<std::string> enumerate_curves(int n, CensusFilter filter,
                                          SymmetryConfig cfg = {});

// Independent second pass: enumerates vertex rotation systems directly,
// computes genus by tracing orbits inline, and deduplicates by brute-force
// map isomorphism instead of canonical codes.
std::vector<std::string> enumerate_curves_rotation(int n, CensusFilter filter,
                                                   SymmetryConfig cfg = {});

struct CensusNode {
  std::string code;
  int crossings = 0;
  int fc = 0;
  bool prime = false;
};

enum class EdgeKind { R3, Alpha, Beta };

struct CensusEdge {
  int a = 0, b = 0;  // node indices, a <= b; polarity runs low-to-high crossings
  EdgeKind kind = EdgeKind::R3;
  int m = -1;  // beta chain length
};

struct CensusGraph {
  int n = 0;
  int maxM = 0;
  SymmetryConfig symmetry;
  std::vector<CensusNode> nodes;
  std::vector<CensusEdge> edges;
  std::vector<MoveRecord> witnesses;  // parallel to edges; not exported
  std::vector<std::vector<int>> components() const;
};

// Move graph over RI-minimal curves with <= n crossings; edges are the
// non-composite neighbors_reduced results that stay within n crossings.
// maxM < 0 means the largest beta that fits, n - 3.
CensusGraph build_move_graph(int n, int maxM = -1, SymmetryConfig cfg = {},
                             int workers = 1);

std::string export_graph(const CensusGraph& g, const std::string& format);
CensusGraph import_graph_json(const std::string& text);

}  // namespace curveforge
