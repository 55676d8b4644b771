#pragma once

#include <optional>
#include <string>
#include <vector>

#include "curveforge/canonical.hpp"
#include "curveforge/curve.hpp"
#include "curveforge/moves.hpp"

namespace curveforge {

struct SearchBounds {
  int maxCrossings = 12;
  int maxDepth = 12;
  int maxR3 = 1;
  int maxM = 2;
};

// A one-move certificate between reduced curves: applying the move at the
// site on parse(before) yields a curve isotopic to parse(after).
struct MoveWitness {
  MoveKind kind;
  MoveSite site;
  std::string before;
  std::string after;
};

struct LabeledNeighbor {
  DottedCurve curve;  // reduced canonical representative
  MoveRecord record;  // raw move; record.after is the unreduced image
  bool composite = false;  // raw image was not RI-minimal and was reduced
};

// All one-move neighbors of an RI-minimal curve: R3 images, alpha results
// both ways, beta sums for m <= maxM and beta severings for every factor.
// errors: NotReduced.
std::vector<LabeledNeighbor> neighbors_reduced(const DottedCurve& r,
                                               SymmetryConfig cfg = {},
                                               int maxM = 2);

// Decides whether reduced(q) is one R3/alpha/beta move from reduced(p); the
// move kind and beta chain length are forced by the crossing-count delta.
std::optional<MoveWitness> decide_single_r3(const DottedCurve& p,
                                            const DottedCurve& q,
                                            SymmetryConfig cfg = {});

// Breadth-first reachability over {RI+-, RIII} with an RIII budget; meets in
// the middle and returns a shortest move sequence within bounds.
std::optional<std::vector<MoveRecord>> oracle_reachable(const DottedCurve& p,
                                                        const DottedCurve& q,
                                                        const SearchBounds& bounds,
                                                        SymmetryConfig cfg = {});

struct CurvePath {
  std::vector<DottedCurve> nodes;   // reduced curves, first = reduced(p)
  std::vector<MoveRecord> edges;    // edges[i] joins nodes[i] to nodes[i+1]
};

// BFS in the reduced-curve graph whose edges are the non-composite
// neighbors_reduced moves.
std::optional<CurvePath> path_search(const DottedCurve& p, const DottedCurve& q,
                                     const SearchBounds& bounds,
                                     SymmetryConfig cfg = {});

}  // namespace curveforge
