#include "curveforge/map.hpp"

#include <algorithm>
#include <map>

namespace curveforge {

CurveMap build_map(const DottedCurve& c) {
  check_structure(c);
  CurveMap m;
  m.k = c.crossings();
  int n = c.size();
  if (m.k == 0) {
    // one closed arc, two disk faces, no darts on either boundary
    m.face_list.resize(2);
    m.face_list[0].id = 0;
    m.face_list[1].id = 1;
    return m;
  }

  std::map<int, std::array<int, 2>> occ;  // label -> {plus occ, minus occ}
  for (int i = 0; i < n; ++i) {
    const Token& t = c.tokens[i];
    occ.try_emplace(t.label, std::array<int, 2>{-1, -1});
    occ[t.label][t.sign > 0 ? 0 : 1] = i;
  }
  std::vector<int> crossing_of_occ(n);
  for (auto& [label, po] : occ) {
    int id = static_cast<int>(m.crossing_labels.size());
    m.crossing_labels.push_back(label);
    m.occ_of.push_back(po);
    crossing_of_occ[po[0]] = crossing_of_occ[po[1]] = id;
  }

  int nd = 4 * m.k;
  m.alpha.resize(nd);
  m.sigma.resize(nd);
  m.arc_of.resize(nd);
  m.vertex_of.resize(nd);
  for (int occ_i = 0; occ_i < n; ++occ_i) {
    int out = 2 * occ_i, in = 2 * occ_i + 1;
    m.alpha[out] = 2 * ((occ_i + 1) % n) + 1;  // arc occ_i ends arriving at occ_i+1
    m.alpha[in] = 2 * ((occ_i - 1 + n) % n);
    m.arc_of[out] = occ_i;
    m.arc_of[in] = (occ_i - 1 + n) % n;
    m.vertex_of[out] = m.vertex_of[in] = crossing_of_occ[occ_i];
  }
  m.rot.resize(m.k);
  for (int v = 0; v < m.k; ++v) {
    int p = m.occ_of[v][0], q = m.occ_of[v][1];  // p has sign +: frame (p-tangent, q-tangent) is CCW
    m.rot[v] = {2 * p, 2 * q, 2 * p + 1, 2 * q + 1};
    for (int t = 0; t < 4; ++t) m.sigma[m.rot[v][t]] = m.rot[v][(t + 1) % 4];
  }

  m.face_of_dart.assign(nd, -1);
  m.face_of_quadrant.assign(m.k, {-1, -1, -1, -1});
  for (int start = 0; start < nd; ++start) {
    if (m.face_of_dart[start] != -1) continue;
    Face f;
    f.id = static_cast<int>(m.face_list.size());
    int d = start;
    do {
      m.face_of_dart[d] = f.id;
      f.darts.push_back(d);
      f.arcs.push_back(m.arc_of[d]);
      int a = m.alpha[d];
      int v = m.vertex_of[a];
      f.corners.push_back(m.crossing_labels[v]);
      for (int t = 0; t < 4; ++t)  // quadrant between a and sigma(a)
        if (m.rot[v][t] == a) m.face_of_quadrant[v][t] = f.id;
      d = m.sigma[a];
    } while (d != start);
    m.face_list.push_back(std::move(f));
  }
  return m;
}

std::vector<int> face_degrees(const CurveMap& m) {
  std::vector<int> d;
  d.reserve(m.face_list.size());
  for (const Face& f : m.face_list) d.push_back(f.degree());
  std::sort(d.begin(), d.end());
  return d;
}

int crossing_id_of_label(const CurveMap& m, int label) {
  auto it = std::lower_bound(m.crossing_labels.begin(), m.crossing_labels.end(), label);
  if (it == m.crossing_labels.end() || *it != label)
    throw CurveError("NoSuchCrossing", "label " + std::to_string(label));
  return static_cast<int>(it - m.crossing_labels.begin());
}

void validate(const DottedCurve& c) {
  CurveMap m = build_map(c);
  if (m.genus() != 0)
    throw CurveError("NonSpherical",
                     "curve has genus " + std::to_string(m.genus()));
}

}  // namespace curveforge
