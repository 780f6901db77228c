#pragma once

#include <set>
#include <utility>
#include <vector>

#include "sunada/covers.hpp"
#include "sunada/group.hpp"
#include "sunada/words.hpp"

namespace sunada {

// Combinatorial self-intersection of cyclic words on a surface with boundary,
// and the induced crossing relation between the lifts of a curve in a finite
// cover.
//
// The cut surface (a twice-holed torus) deformation retracts to a wedge of
// three circles; a ribbon structure (cyclic order of the six letter
// directions around the wedge point) pins down the surface and makes its
// universal cover a planar tree. A cyclically reduced word w of length n has
// n strands through the base vertex, one per cyclic position; strand i is
// the bi-infinite line with forward ray w[i] w[i+1] ... and backward ray
// w[i-1]^-1 w[i-2]^-1 .... Two strands cross if and only if their four
// boundary-at-infinity points alternate around the circle at infinity, whose
// cyclic order is read off lexicographically from the ribbon rotation
// (nested angular sectors, each cut at the incoming direction).
//
// One geometric double point is seen by every position pair along the
// maximal segment where the two strands fellow-travel, in both the aligned
// (w[i] = w[j]) and anti-aligned (w[i] = w[j-1]^-1) senses, and such chains
// of position pairs can be cyclic (abab^-1). Each chain is therefore counted
// once, at its canonical minimal pair. For primitive w the count equals the
// minimal self-intersection number of w in the marked surface.

/// Rotation system of the rose: the cyclic order in which the 2*rank letter
/// directions leave the wedge point.
class RibbonStructure {
 public:
  RibbonStructure(int rank, std::vector<Letter> rotation);

  /// The calibrated marking of the cut surface on {a,b,x}: cyclic order
  /// (a, b^-1, a^-1, x, b, x^-1). Its fatgraph boundary has two components,
  /// with classes xa (the cut curve) and b a^-1 b^-1 x^-1.
  static RibbonStructure cut_surface();

  int rank() const { return rank_; }
  const std::vector<Letter>& rotation() const { return rotation_; }
  int position(Letter l) const { return pos_.at(l.code); }
  /// Rank of `next` among the five outgoing directions after arriving via
  /// `prev` (the sector is cut at the incoming direction prev^-1).
  int turn_rank(Letter prev, Letter next) const;

  /// Boundary cycles of the thickened rose, as words in the letters. The
  /// number of cycles identifies the surface; two cycles here means the
  /// twice-holed torus.
  std::vector<Word> boundary_cycles() const;

 private:
  int rank_;
  std::vector<Letter> rotation_;
  std::vector<int> pos_;
};

/// A pair of cyclic positions whose strands cross, with the connecting
/// subword from the first to the second position.
struct LinkedPair {
  int i = 0;
  int j = 0;
  Word connecting;  // w[i..j) as letters

  friend bool operator==(const LinkedPair&, const LinkedPair&) = default;
};

/// The linked pairs of w realizing its minimal self-intersection number in
/// the marked surface; one pair per crossing (chain-canonical). Requires w
/// cyclically reduced and primitive.
std::vector<LinkedPair> self_linked_pairs(const CyclicWord& w, const RibbonStructure& ribbon);

/// Crossing data of the lifts of w in the cover with deck group G: which
/// pairs of lifts (left cosets of L = <rho(w)>) cross, and which single
/// lifts self-intersect. For each linked pair (i,j) with prefix products
/// p_i, p_j, the two strands lie on the lifts labeled g rho(p_i)^-1 L and
/// g rho(p_j)^-1 L for every g in G (the G-equivariant orbit of the base
/// crossing); equal labels mean a self-crossing of that lift.
struct CrossingReport {
  std::vector<LinkedPair> linked;
  std::vector<GroupElement> strand_quotients;  // s = rho(p_j) rho(p_i)^-1 per pair
  std::set<std::pair<int, int>> lift_pairs;    // unordered coset-index pairs, i < j
  std::set<int> self_crossing_lifts;           // coset indices
};

CrossingReport lift_crossings(const CyclicWord& w, const Homomorphism& rho,
                              const Subgroup& L, const CosetSpace& GmodL,
                              const RibbonStructure& ribbon);

/// simple/nonsimple verdict for each cover component (an S-orbit of lifts):
/// nonsimple iff two lifts in the orbit cross or any lift in it self-crosses.
struct SimplicityVerdict {
  struct Entry {
    std::vector<int> orbit;  // coset indices of the component's lifts
    int degree = 0;
    bool simple = true;
    std::vector<std::pair<int, int>> witnesses;  // crossing pairs inside the orbit
    std::vector<int> self_witnesses;             // self-crossing lifts in the orbit
  };
  std::vector<Entry> components;
};

SimplicityVerdict component_simplicity(const std::vector<std::vector<int>>& orbits,
                                       const CrossingReport& crossings);

}  // namespace sunada
