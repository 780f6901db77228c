#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "sunada/rational.hpp"
#include "sunada/words.hpp"

namespace sunada {

/// 2x2 matrix over exact rationals.
struct RationalMat2 {
  Rational a, b, c, d;  // row major: [[a,b],[c,d]]

  static RationalMat2 identity() { return {1, 0, 0, 1}; }
  Rational trace() const { Rational t = a + d; t.canonicalize(); return t; }
  Rational det() const { Rational t = a * d - b * c; t.canonicalize(); return t; }
  RationalMat2 operator*(const RationalMat2& o) const;
  RationalMat2 inverse() const;  // throws on singular

  friend bool operator==(const RationalMat2&, const RationalMat2&) = default;
};

/// Generator -> matrix assignment for the subsurface alphabet; inverses cached.
class MetricAssignment {
 public:
  MetricAssignment(Alphabet alphabet, std::vector<RationalMat2> matrices);

  const Alphabet& alphabet() const { return alphabet_; }
  const RationalMat2& matrix(int generator) const { return mats_.at(generator); }
  const RationalMat2& matrix_inverse(int generator) const { return invs_.at(generator); }

 private:
  Alphabet alphabet_;
  std::vector<RationalMat2> mats_;
  std::vector<RationalMat2> invs_;
};

/// Ordered product of assigned matrices, left to right (the global convention
/// shared with Homomorphism::evaluate).
RationalMat2 word_matrix(const MetricAssignment& m, const Word& w);

/// tr(M)^2 / det(M): invariant under conjugation, inversion, cyclic rotation
/// and rescaling M -> cM; the exact proxy for length equality.
Rational trace_invariant(const MetricAssignment& m, const Word& w);

/// 2 acosh(|tr| / (2 sqrt(det))) at the given precision. Throws
/// std::domain_error unless tr^2 > 4 det (hyperbolic element).
BigFloat hyperbolic_length(const MetricAssignment& m, const Word& w, int prec_bits = 128);

/// The built-in metric on {a,b,x}: the published matrices with the a-entry
/// 5/3 corrected to 5/4 (the calibrated transcription; see calibration_report).
MetricAssignment paper_metric();

/// Exact brute force over the plausible transcriptions of the a-matrix
/// crossed with both evaluation orders; the combination reproducing
/// tr = 109505/2048 on alpha becomes the canonical metric.
struct CalibrationCandidate {
  std::string label;
  RationalMat2 a_matrix;
  bool left_to_right = true;
  Rational trace;
  bool matched = false;
};
std::vector<CalibrationCandidate> calibrate_paper_metric();

}  // namespace sunada
