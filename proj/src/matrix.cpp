#include "sunada/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace sunada {

RationalMat2 RationalMat2::operator*(const RationalMat2& o) const {
  RationalMat2 r{a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  r.a.canonicalize(); r.b.canonicalize(); r.c.canonicalize(); r.d.canonicalize();
  return r;
}

RationalMat2 RationalMat2::inverse() const {
  Rational dt = det();
  if (dt == 0) throw std::domain_error("singular matrix");
  RationalMat2 r{d / dt, -b / dt, -c / dt, a / dt};
  r.a.canonicalize(); r.b.canonicalize(); r.c.canonicalize(); r.d.canonicalize();
  return r;
}

MetricAssignment::MetricAssignment(Alphabet alphabet, std::vector<RationalMat2> matrices)
    : alphabet_(std::move(alphabet)), mats_(std::move(matrices)) {
  if (static_cast<int>(mats_.size()) != alphabet_.size())
    throw std::invalid_argument("metric: one matrix per generator required");
  for (const auto& m : mats_) {
    if (m.det() == 0) throw std::invalid_argument("metric: singular generator matrix");
    invs_.push_back(m.inverse());
  }
}

RationalMat2 word_matrix(const MetricAssignment& m, const Word& w) {
  RationalMat2 acc = RationalMat2::identity();
  for (const Letter& l : w) {
    if (l.generator() >= m.alphabet().size())
      throw std::invalid_argument("word_matrix: generator outside the assignment");
    acc = acc * (l.inverse() ? m.matrix_inverse(l.generator()) : m.matrix(l.generator()));
  }
  return acc;
}

Rational trace_invariant(const MetricAssignment& m, const Word& w) {
  RationalMat2 M = word_matrix(m, w);
  Rational t = M.trace();
  Rational r = t * t / M.det();
  r.canonicalize();
  return r;
}

BigFloat hyperbolic_length(const MetricAssignment& m, const Word& w, int prec_bits) {
  RationalMat2 M = word_matrix(m, w);
  Rational tr = M.trace();
  Rational det = M.det();
  if (det <= 0) throw std::domain_error("hyperbolic_length: nonpositive determinant");
  // Hyperbolic iff tr^2 > 4 det; equality is parabolic, less is elliptic.
  Rational disc = tr * tr - 4 * det;
  disc.canonicalize();
  if (disc <= 0)
    throw std::domain_error(disc == 0 ? "hyperbolic_length: parabolic element"
                                      : "hyperbolic_length: elliptic element");
  BigFloat t = BigFloat::from_rational(tr, prec_bits).abs();
  BigFloat den = BigFloat::from_rational(det, prec_bits).sqrt().mul_ui(2);
  return (t / den).acosh().mul_ui(2);
}

MetricAssignment paper_metric() {
  Alphabet abx("abx");
  RationalMat2 A{Rational(5, 4), Rational(3, 4), Rational(3, 4), Rational(5, 4)};
  RationalMat2 B{Rational(4), Rational(0), Rational(0), Rational(1, 4)};
  RationalMat2 X{Rational(5, 3), Rational(-16, 3), Rational(-1, 3), Rational(5, 3)};
  return MetricAssignment(abx, {A, B, X});
}

std::vector<CalibrationCandidate> calibrate_paper_metric() {
  Alphabet abx("abx");
  const Rational target(109505, 2048);
  RationalMat2 B{Rational(4), Rational(0), Rational(0), Rational(1, 4)};
  RationalMat2 X{Rational(5, 3), Rational(-16, 3), Rational(-1, 3), Rational(5, 3)};
  std::vector<std::pair<std::string, RationalMat2>> a_options = {
      {"[[5/3,3/4],[3/4,5/4]] (as printed)",
       {Rational(5, 3), Rational(3, 4), Rational(3, 4), Rational(5, 4)}},
      {"[[5/4,3/4],[3/4,5/4]]",
       {Rational(5, 4), Rational(3, 4), Rational(3, 4), Rational(5, 4)}},
      {"[[5/3,4/3],[4/3,5/3]]",
       {Rational(5, 3), Rational(4, 3), Rational(4, 3), Rational(5, 3)}},
  };
  Word alpha = parse_word("a b x a b a^-1 b^-1 x^-1", abx);
  std::vector<CalibrationCandidate> out;
  for (const auto& [label, A] : a_options) {
    for (bool l2r : {true, false}) {
      MetricAssignment m(abx, {A, B, X});
      Word w = alpha;
      if (!l2r) std::reverse(w.begin(), w.end());
      CalibrationCandidate cand;
      cand.label = label;
      cand.a_matrix = A;
      cand.left_to_right = l2r;
      cand.trace = word_matrix(m, w).trace();
      cand.matched = (cand.trace == target);
      out.push_back(std::move(cand));
    }
  }
  return out;
}

}  // namespace sunada
