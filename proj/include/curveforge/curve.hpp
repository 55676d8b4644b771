#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace curveforge {

// Domain error with a stable machine-readable code (also used by the CLI's
// JSON error output).
struct CurveError : std::runtime_error {
  std::string code;
  CurveError(std::string c, const std::string& msg)
      : std::runtime_error(c + ": " + msg), code(std::move(c)) {}
};

// One passage of the curve through a crossing.  sign is the orientation of
// the ordered frame (tangent of this strand, tangent of the other strand)
// against the fixed sphere orientation; the two passages of a crossing
// always carry opposite signs.
struct Token {
  int label = 0;
  int sign = 0;  // +1 or -1

  bool operator==(const Token& o) const { return label == o.label && sign == o.sign; }
};

// A spherical curve given as an occurrence-signed Gauss code, plus dot marks
// on arcs.  tokens is the cyclic word (2 per crossing).  Arc i runs from
// occurrence i to occurrence i+1 mod size; the trivial curve has a single
// arc with index 0.  Each arc carries at most one dot.
struct DottedCurve {
  std::vector<Token> tokens;
  std::set<int> dots;

  int crossings() const { return static_cast<int>(tokens.size()) / 2; }
  int size() const { return static_cast<int>(tokens.size()); }
  int arc_count() const { return tokens.empty() ? 1 : static_cast<int>(tokens.size()); }

  bool operator==(const DottedCurve& o) const { return tokens == o.tokens && dots == o.dots; }
};

// Text form: whitespace-separated tokens "<label><sign>" with an optional
// ".d" suffix marking a dot on the arc that starts at that occurrence.
// Empty input is the trivial curve; a lone ".d" is the trivial curve with a
// dot on its single arc.
DottedCurve parse(const std::string& text);

// Literal token rendering (no canonicalization).
std::string to_token_string(const DottedCurve& c);

// Word-level invariants: labels appear exactly twice with opposite signs,
// dot indices in range.  Throws CurveError on violation.
void check_structure(const DottedCurve& c);

// check_structure plus the genus-0 test (NonSpherical otherwise).
void validate(const DottedCurve& c);

// Curve traversed backwards.  Occurrence signs are unchanged; dot arcs are
// remapped.
DottedCurve reverse_curve(const DottedCurve& c);

// Opposite sphere orientation: every occurrence sign flips.
DottedCurve mirror_curve(const DottedCurve& c);

// Same curve read from occurrence r onward.
DottedCurve reroot(const DottedCurve& c, int r);

// Labels renamed to 1..k in first-occurrence order.
DottedCurve relabel_fresh(const DottedCurve& c);

int max_label(const DottedCurve& c);

}  // namespace curveforge
