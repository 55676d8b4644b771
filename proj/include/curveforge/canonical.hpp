#pragma once

#include <string>

#include "curveforge/curve.hpp"

namespace curveforge {

// Which ambient symmetries beyond rerooting and reversal are quotiented
// out.  Rotation and reversal of the parametrization are always modded out;
// mirror additionally identifies a curve with its opposite-orientation twin.
struct SymmetryConfig {
  bool mirror = false;
};

struct CanonicalForm {
  DottedCurve curve;  // representative with first-occurrence labels
  std::string text;   // token rendering of the representative
};

// Minimum over all rotations, both directions, and (optionally) mirror of
// the relabeled token sequence, compared as (label, sign, dot) tuples.
CanonicalForm canonical_form(const DottedCurve& c, SymmetryConfig cfg = {});

std::string canonical_text(const DottedCurve& c, SymmetryConfig cfg = {});

bool is_isotopic(const DottedCurve& a, const DottedCurve& b, SymmetryConfig cfg = {});

}  // namespace curveforge
