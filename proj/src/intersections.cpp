#include "sunada/intersections.hpp"

#include <algorithm>
#include <stdexcept>

namespace sunada {

RibbonStructure::RibbonStructure(int rank, std::vector<Letter> rotation)
    : rank_(rank), rotation_(std::move(rotation)), pos_(2 * rank, -1) {
  if (static_cast<int>(rotation_.size()) != 2 * rank)
    throw std::invalid_argument("ribbon: rotation must list every direction once");
  for (int i = 0; i < static_cast<int>(rotation_.size()); i++) {
    int code = rotation_[i].code;
    if (code < 0 || code >= 2 * rank || pos_[code] != -1)
      throw std::invalid_argument("ribbon: rotation must list every direction once");
    pos_[code] = i;
  }
}

RibbonStructure RibbonStructure::cut_surface() {
  // (a, b^-1, a^-1, x, b, x^-1) with a=0, b=1, x=2.
  return RibbonStructure(3, {Letter::make(0, false), Letter::make(1, true),
                             Letter::make(0, true), Letter::make(2, false),
                             Letter::make(1, false), Letter::make(2, true)});
}

int RibbonStructure::turn_rank(Letter prev, Letter next) const {
  const int m = 2 * rank_;
  int cut = pos_.at(prev.inverted().code);
  int r = (pos_.at(next.code) - cut + m) % m;
  // r = 0 would mean backtracking onto the incoming direction.
  if (r == 0) throw std::logic_error("turn_rank: non-reduced step");
  return r - 1;
}

std::vector<Word> RibbonStructure::boundary_cycles() const {
  const int m = 2 * rank_;
  // After traversing directed edge d we arrive against direction d^-1; the
  // boundary continues along the edge that leaves at the next direction in
  // the rotation.
  std::vector<int> next(m);
  for (int code = 0; code < m; code++) {
    int p = pos_[Letter{code}.inverted().code];
    next[code] = rotation_[(p + 1) % m].code;
  }
  std::vector<bool> seen(m, false);
  std::vector<Word> cycles;
  for (int start = 0; start < m; start++) {
    if (seen[start]) continue;
    Word cyc;
    int cur = start;
    while (!seen[cur]) {
      seen[cur] = true;
      cyc.push_back(Letter{cur});
      cur = next[cur];
    }
    cycles.push_back(std::move(cyc));
  }
  return cycles;
}

namespace {

/// Lazily compared infinite ray: the periodic letter sequence starting at a
/// position of the cyclic word, either forward or backward-inverted.
struct Ray {
  const CyclicWord* w;
  int start;
  bool forward;

  Letter at(int k) const {
    return forward ? w->at(start + k) : w->at(start - 1 - k).inverted();
  }
};

/// Lexicographic comparison of the angular keys of two rays. Distinct rays
/// from a primitive word must diverge within a bounded number of steps.
int compare_rays(const RibbonStructure& R, const Ray& A, const Ray& B, int max_depth) {
  int ta = R.position(A.at(0)), tb = R.position(B.at(0));
  if (ta != tb) return ta < tb ? -1 : 1;
  for (int k = 1; k < max_depth; k++) {
    int ra = R.turn_rank(A.at(k - 1), A.at(k));
    int rb = R.turn_rank(B.at(k - 1), B.at(k));
    if (ra != rb) return ra < rb ? -1 : 1;
  }
  return 0;
}

bool strands_cross(const RibbonStructure& R, const CyclicWord& w, int i, int j) {
  const int depth = 4 * w.size() + 16;
  struct Tagged { Ray ray; int owner; };
  std::vector<Tagged> pts = {{{&w, i, true}, 0},
                             {{&w, i, false}, 0},
                             {{&w, j, true}, 1},
                             {{&w, j, false}, 1}};
  bool distinct = true;
  std::sort(pts.begin(), pts.end(), [&](const Tagged& x, const Tagged& y) {
    int c = compare_rays(R, x.ray, y.ray, depth);
    if (c == 0) distinct = false;
    return c < 0;
  });
  if (!distinct)
    throw std::logic_error("self_linked_pairs: coincident rays (non-primitive word?)");
  return pts[0].owner != pts[1].owner && pts[1].owner != pts[2].owner &&
         pts[2].owner != pts[3].owner;
}

}  // namespace

std::vector<LinkedPair> self_linked_pairs(const CyclicWord& w, const RibbonStructure& ribbon) {
  if (w.empty()) return {};
  if (!w.is_primitive())
    throw std::invalid_argument("self_linked_pairs: word must be primitive");
  for (const Letter& l : w.letters())
    if (l.generator() >= ribbon.rank())
      throw std::invalid_argument("self_linked_pairs: letter outside the ribbon alphabet");
  const int n = w.size();

  auto norm = [&](int i, int j) {
    i = ((i % n) + n) % n;
    j = ((j % n) + n) % n;
    return i <= j ? std::pair<int, int>{i, j} : std::pair<int, int>{j, i};
  };
  // A pair extends backward along the strands' shared segment when the
  // previous letters agree (aligned) or one strand's previous letter undoes
  // the other's next (anti-aligned). The chain representative is the pair
  // with no backward extension; cyclic chains take their least pair.
  auto backward = [&](std::pair<int, int> p) -> std::optional<std::pair<int, int>> {
    auto [i, j] = p;
    if (w.at(i - 1) == w.at(j - 1)) return norm(i - 1, j - 1);
    if (w.at(i - 1) == w.at(j).inverted()) return norm(i - 1, j + 1);
    if (w.at(j - 1) == w.at(i).inverted()) return norm(j - 1, i + 1);
    return std::nullopt;
  };
  auto chain_representative = [&](std::pair<int, int> p) {
    std::set<std::pair<int, int>> seen;
    auto cur = p;
    while (true) {
      if (seen.count(cur)) return *seen.begin();  // cyclic chain: least pair
      seen.insert(cur);
      auto prev = backward(cur);
      if (!prev) return cur;
      cur = *prev;
    }
  };

  std::set<std::pair<int, int>> reps;
  for (int i = 0; i < n; i++) {
    for (int j = i + 1; j < n; j++) {
      auto rep = chain_representative({i, j});
      if (reps.count(rep)) continue;
      if (strands_cross(ribbon, w, i, j)) reps.insert(rep);
    }
  }
  std::vector<LinkedPair> out;
  for (auto [i, j] : reps) {
    LinkedPair lp;
    lp.i = i;
    lp.j = j;
    for (int k = i; k < j; k++) lp.connecting.push_back(w.at(k));
    out.push_back(std::move(lp));
  }
  return out;
}

CrossingReport lift_crossings(const CyclicWord& w, const Homomorphism& rho,
                              const Subgroup& L, const CosetSpace& GmodL,
                              const RibbonStructure& ribbon) {
  const auto& G = rho.target();
  {
    Subgroup expected = subgroup_generated(G, {rho.evaluate(w.letters())});
    if (expected.members() != L.members())
      throw std::invalid_argument("lift_crossings: L must equal <rho(w)>");
  }
  CrossingReport rep;
  rep.linked = self_linked_pairs(w, ribbon);

  // Prefix products rho(w[0..k)).
  std::vector<GroupElement> pref(w.size() + 1, G.identity());
  for (int k = 0; k < w.size(); k++) {
    Letter l = w.at(k);
    GroupElement img = rho.image(l.generator());
    if (l.inverse()) img = G.inverse(img);
    pref[k + 1] = G.multiply(pref[k], img);
  }
  for (const LinkedPair& lp : rep.linked) {
    GroupElement s = G.multiply(pref[lp.j], G.inverse(pref[lp.i]));
    rep.strand_quotients.push_back(s);
    for (const auto& g : G.elements()) {
      int c1 = GmodL.coset_of(G.multiply(g, G.inverse(pref[lp.i])));
      int c2 = GmodL.coset_of(G.multiply(g, G.inverse(pref[lp.j])));
      if (c1 == c2)
        rep.self_crossing_lifts.insert(c1);
      else
        rep.lift_pairs.insert({std::min(c1, c2), std::max(c1, c2)});
    }
  }
  return rep;
}

SimplicityVerdict component_simplicity(const std::vector<std::vector<int>>& orbits,
                                       const CrossingReport& crossings) {
  SimplicityVerdict verdict;
  for (const auto& orbit : orbits) {
    SimplicityVerdict::Entry e;
    e.orbit = orbit;
    e.degree = static_cast<int>(orbit.size());
    for (size_t i = 0; i < orbit.size(); i++) {
      if (crossings.self_crossing_lifts.count(orbit[i])) e.self_witnesses.push_back(orbit[i]);
      for (size_t j = i + 1; j < orbit.size(); j++) {
        std::pair<int, int> p{std::min(orbit[i], orbit[j]), std::max(orbit[i], orbit[j])};
        if (crossings.lift_pairs.count(p)) e.witnesses.push_back(p);
      }
    }
    e.simple = e.witnesses.empty() && e.self_witnesses.empty();
    verdict.components.push_back(std::move(e));
  }
  return verdict;
}

}  // namespace sunada
