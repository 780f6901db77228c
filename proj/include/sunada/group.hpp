#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace sunada {

/// Element (u,v) of (Z/nZ)^x x| Z/nZ, the affine maps t -> u t + v.
struct GroupElement {
  int unit = 1;
  int translation = 0;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

std::string to_string(const GroupElement& g);
GroupElement parse_group_element(const std::string& text, int modulus);

/// The full affine group over Z/nZ with exact multiplication semantics.
/// Composition of affine maps acting on the left:
///   (u1,v1)(u2,v2) = (u1 u2, v1 + u1 v2)  (all mod n).
class FiniteAffineGroup {
 public:
  explicit FiniteAffineGroup(int modulus = 8);

  int modulus() const { return n_; }
  int order() const { return static_cast<int>(elements_.size()); }
  const std::vector<GroupElement>& elements() const { return elements_; }

  GroupElement identity() const { return {1, 0}; }
  bool contains(const GroupElement& g) const;
  int index_of(const GroupElement& g) const;  // throws if not a member

  GroupElement multiply(const GroupElement& g, const GroupElement& h) const;
  GroupElement inverse(const GroupElement& g) const;

  std::set<GroupElement> conjugacy_class(const GroupElement& g) const;
  /// All conjugacy classes, each sorted, ordered by least element.
  std::vector<std::vector<GroupElement>> conjugacy_classes() const;

 private:
  int n_;
  std::vector<GroupElement> elements_;
  std::map<GroupElement, int> index_;
};

/// A validated subgroup: closure and identity are checked eagerly.
class Subgroup {
 public:
  Subgroup(const FiniteAffineGroup& group, std::vector<GroupElement> members);

  const FiniteAffineGroup& group() const { return *group_; }
  const std::vector<GroupElement>& members() const { return members_; }  // sorted
  int order() const { return static_cast<int>(members_.size()); }
  bool contains(const GroupElement& g) const;

 private:
  const FiniteAffineGroup* group_;
  std::vector<GroupElement> members_;
};

Subgroup subgroup_generated(const FiniteAffineGroup& group,
                            const std::vector<GroupElement>& gens);

/// Per-class intersection counts |H n C| vs |K n C|; the Gassmann certificate.
struct AlmostConjugacyCertificate {
  bool almost_conjugate = false;
  /// One row per conjugacy class: (class representative, |H n C|, |K n C|).
  std::vector<std::tuple<GroupElement, int, int>> table;
};

AlmostConjugacyCertificate is_almost_conjugate(const Subgroup& H, const Subgroup& K);

/// Brute-force search for g with gHg^-1 = K.
std::optional<GroupElement> conjugating_element(const Subgroup& H, const Subgroup& K);

enum class CosetSide { Left, Right };

/// Indexed coset space with the permutation action of every group element.
/// Right cosets Sg carry the right-multiplication action, left cosets gS the
/// left-multiplication action. Coset 0 is the coset of the identity.
class CosetSpace {
 public:
  CosetSpace(const Subgroup& S, CosetSide side);

  CosetSide side() const { return side_; }
  int count() const { return static_cast<int>(reps_.size()); }
  const std::vector<GroupElement>& representatives() const { return reps_; }
  int coset_of(const GroupElement& g) const;
  /// Image of coset `c` under the action of `g`.
  int act(const GroupElement& g, int c) const;
  /// The full permutation of g as a vector image.
  std::vector<int> permutation(const GroupElement& g) const;
  /// Sorted cycle type of g's permutation.
  std::vector<int> cycle_type(const GroupElement& g) const;

  const FiniteAffineGroup& group() const { return *group_; }

 private:
  const FiniteAffineGroup* group_;
  CosetSide side_;
  std::vector<GroupElement> reps_;
  std::vector<int> coset_of_;               // element index -> coset index
  std::vector<std::vector<int>> action_;    // element index -> permutation
};

}  // namespace sunada
