#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sunada/group.hpp"
#include "sunada/words.hpp"

namespace sunada {

/// Homomorphism from the free group on an alphabet to the affine group,
/// given by generator images. Words evaluate left to right.
class Homomorphism {
 public:
  Homomorphism(const FiniteAffineGroup& target, Alphabet alphabet,
               std::vector<GroupElement> images);

  const FiniteAffineGroup& target() const { return *target_; }
  const Alphabet& alphabet() const { return alphabet_; }
  const GroupElement& image(int generator) const { return images_.at(generator); }

  GroupElement evaluate(const Word& w) const;

  /// True iff the generator images generate the whole group; also returns the
  /// order of the generated subgroup.
  std::pair<bool, int> check_surjective() const;

 private:
  const FiniteAffineGroup* target_;
  Alphabet alphabet_;
  std::vector<GroupElement> images_;
};

/// One connected component of the preimage of a curve in the cover attached
/// to a subgroup: an orbit of <rho(w)> on the right cosets S\G.
struct LiftComponent {
  CyclicWord base_word;
  int degree = 0;
  std::vector<int> coset_orbit;  // indices into CosetSpace(S, Right)
};

/// Components of the preimage of the curve w in the cover for rho^-1(S).
std::vector<LiftComponent> preimage_components(const Homomorphism& rho, const Subgroup& S,
                                               const CyclicWord& w);

std::vector<int> degree_multiset(const std::vector<LiftComponent>& comps);

/// Orbits of S acting by left multiplication on the left cosets G/L,
/// as sorted lists of coset indices, ordered by smallest member.
std::vector<std::vector<int>> lift_orbit_partition(const Subgroup& S, const CosetSpace& GmodL);

/// The paper's numbering of the sixteen alpha-lifts: gamma_i -> coset reps
/// L,(1,1)L,...,(3,5)L. Returns gamma index (1-based) per coset index of
/// CosetSpace(L, Left), or nullopt when the table does not apply.
std::optional<std::vector<int>> gamma_labels(const CosetSpace& GmodL);

/// Certificate for the involution-compatibility check: an automorphism phi of
/// G with phi(rho(g)) = rho(tau(g)) on the surface generators, plus whether
/// phi fixes H and K, and how phi compares to the identity and to
/// psi(j,k) = (j,-k).
struct InvolutionCompat {
  bool found = false;
  std::vector<std::pair<GroupElement, GroupElement>> phi;  // full graph of phi
  bool phi_is_identity = false;
  bool phi_is_psi = false;
  bool psi_intertwines = false;  // whether psi itself satisfies psi.rho = rho.tau
  bool fixes_H = false;
  bool fixes_K = false;
  /// Membership property rho(w) in S <=> rho(tau w) in S, exhaustive over
  /// words of length <= max_len plus `random_trials` random longer words.
  bool membership_H = false;
  bool membership_K = false;
  long words_checked = 0;
};

InvolutionCompat verify_involution_compat(const Homomorphism& rho, const Endomorphism& tau,
                                          const Subgroup& H, const Subgroup& K,
                                          int exhaustive_len = 4, int random_trials = 10000,
                                          unsigned long seed = 20240815);

}  // namespace sunada
