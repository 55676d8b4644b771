#pragma once

#include <array>
#include <vector>

#include "curveforge/curve.hpp"

namespace curveforge {

// One complementary region of the curve.  darts lists the boundary walk;
// arcs[i] is the arc carrying darts[i]; corners[i] is the crossing passed
// between darts[i] and darts[i+1].
struct Face {
  int id = -1;
  std::vector<int> darts;
  std::vector<int> arcs;
  std::vector<int> corners;
  int degree() const { return static_cast<int>(darts.size()); }
};

// Oriented combinatorial map of a curve.  Each occurrence m owns two darts:
// 2m leaves along arc m, 2m+1 arrives along arc m-1.  alpha pairs the two
// darts of an arc, sigma is the counterclockwise rotation at crossings, and
// faces are orbits of sigma∘alpha.
struct CurveMap {
  int k = 0;                       // crossings
  std::vector<int> alpha, sigma;   // dart -> dart, size 4k
  std::vector<int> arc_of;         // dart -> arc position, size 4k
  std::vector<int> vertex_of;      // dart -> crossing id, size 4k

  std::vector<int> crossing_labels;          // crossing id -> label (ascending)
  std::vector<std::array<int, 2>> occ_of;    // crossing id -> {plus occ, minus occ}
  std::vector<std::array<int, 4>> rot;       // crossing id -> CCW dart cycle

  std::vector<Face> face_list;
  std::vector<int> face_of_dart;                    // size 4k
  std::vector<std::array<int, 4>> face_of_quadrant; // [crossing id][t], quadrant t
                                                    // lies between rot[t] and rot[t+1]

  int faces() const { return static_cast<int>(face_list.size()); }
  // Euler: V - E + F = k - 2k + F = 2 - 2g
  int genus() const { return k == 0 ? 0 : (2 + k - faces()) / 2; }
};

// Builds the map.  Checks word structure but not sphericity.  The trivial
// curve yields two faces of degree zero.
CurveMap build_map(const DottedCurve& c);

// Sorted face degree multiset, for fixtures.
std::vector<int> face_degrees(const CurveMap& m);

int crossing_id_of_label(const CurveMap& m, int label);

}  // namespace curveforge
