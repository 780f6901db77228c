#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "sunada/matrix.hpp"
#include "sunada/words.hpp"

namespace sunada {

/// Edge-path model of the spine of the cut surface (a twice-holed torus).
/// Each generator letter maps to a path over the spine edges a1, x1, b1, b2;
/// a word's edge counts are read off its concatenated, cyclically reduced
/// edge path, so adjacent letters share (cancel) edges exactly as the spine
/// homotopy does.
class SpineModel {
 public:
  enum Edge { A1 = 0, X1 = 1, B1 = 2, B2 = 3 };
  struct EdgeCounts {
    int a1 = 0;
    int x1 = 0;
    int b_sum = 0;  // b1 + b2 edges
    friend bool operator==(const EdgeCounts&, const EdgeCounts&) = default;
  };

  /// paths[g] = edge path of generator g, as signed edges (edge*2 + dir).
  SpineModel(Alphabet alphabet, std::vector<std::vector<int>> paths);

  /// The calibrated model on {a,b,x}: a = a1, b = b1 b2, x = b1 x1 b1^-1.
  static SpineModel paper_model();

  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<int>& path(int generator) const { return paths_.at(generator); }
  std::string path_description() const;

  EdgeCounts edge_counts(const CyclicWord& w) const;

 private:
  Alphabet alphabet_;
  std::vector<std::vector<int>> paths_;
};

/// Letter-content constraints for the candidate list: fixed a/x multiset,
/// b-surplus rule, b-letter cap, and the spine edge budget (0 disables the
/// edge-count condition).
struct CandidateConstraints {
  int a_count = 2;
  int a_inv_count = 1;
  int x_count = 1;
  int x_inv_count = 1;
  int b_surplus = 1;  // #b - #b^-1
  int max_b = 4;      // cap on #b
  int b_edge_budget = 8;
  HomologyClass homology_target{1, 1, 0};  // in (a, b, x)

  static CandidateConstraints paper();
};

/// All cyclically reduced cyclic words meeting conditions (1)-(3) under the
/// model, deduplicated by canonical rotation. Deterministic; `threads` > 1
/// partitions the arrangement space and merges, producing the identical set.
std::vector<CyclicWord> generate_candidates(const CandidateConstraints& c,
                                            const SpineModel& model, int threads = 1);

/// Keep the words whose abelianization is +-target.
std::vector<CyclicWord> homology_filter(const std::vector<CyclicWord>& cands,
                                        const HomologyClass& target);

struct TraceMatchReport {
  long candidate_linear_words = 0;   // rotations counted separately
  long candidate_classes = 0;        // cyclic words
  long candidate_classes_mod_inversion = 0;
  Rational target_invariant;
  /// Matching equivalence classes under rotation + inversion, one canonical
  /// representative each.
  std::vector<CyclicWord> matches;
};

TraceMatchReport find_trace_matches(const std::vector<CyclicWord>& cands,
                                    const MetricAssignment& m, const CyclicWord& target);

}  // namespace sunada
