#include "sunada/group.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sunada {

namespace {
int mod(int a, int n) { return ((a % n) + n) % n; }
}  // namespace

std::string to_string(const GroupElement& g) {
  return "(" + std::to_string(g.unit) + "," + std::to_string(g.translation) + ")";
}

GroupElement parse_group_element(const std::string& text, int modulus) {
  size_t i = 0;
  auto skip_ws = [&] { while (i < text.size() && isspace(static_cast<unsigned char>(text[i]))) i++; };
  auto expect = [&](char c) {
    skip_ws();
    if (i >= text.size() || text[i] != c)
      throw std::invalid_argument("bad group element '" + text + "': expected '" + c +
                                  "' at position " + std::to_string(i));
    i++;
  };
  auto number = [&]() -> int {
    skip_ws();
    bool neg = false;
    if (i < text.size() && text[i] == '-') { neg = true; i++; }
    size_t start = i;
    while (i < text.size() && isdigit(static_cast<unsigned char>(text[i]))) i++;
    if (i == start)
      throw std::invalid_argument("bad group element '" + text + "': expected digits at position " +
                                  std::to_string(start));
    int v = std::stoi(text.substr(start, i - start));
    return neg ? -v : v;
  };
  expect('(');
  int u = number();
  expect(',');
  int v = number();
  expect(')');
  skip_ws();
  if (i != text.size())
    throw std::invalid_argument("bad group element '" + text + "': trailing characters");
  u = mod(u, modulus);
  v = mod(v, modulus);
  if (std::gcd(u, modulus) != 1)
    throw std::invalid_argument("bad group element '" + text + "': unit not coprime to modulus");
  return {u, v};
}

FiniteAffineGroup::FiniteAffineGroup(int modulus) : n_(modulus) {
  if (n_ < 2) throw std::invalid_argument("modulus must be at least 2");
  for (int u = 1; u < n_; u++) {
    if (std::gcd(u, n_) != 1) continue;
    for (int v = 0; v < n_; v++) elements_.push_back({u, v});
  }
  std::sort(elements_.begin(), elements_.end());
  for (int i = 0; i < static_cast<int>(elements_.size()); i++) index_[elements_[i]] = i;
}

bool FiniteAffineGroup::contains(const GroupElement& g) const {
  return index_.count(g) > 0;
}

int FiniteAffineGroup::index_of(const GroupElement& g) const {
  auto it = index_.find(g);
  if (it == index_.end())
    throw std::invalid_argument("element " + to_string(g) + " is not in the group (mod " +
                                std::to_string(n_) + ")");
  return it->second;
}

GroupElement FiniteAffineGroup::multiply(const GroupElement& g, const GroupElement& h) const {
  if (!contains(g) || !contains(h))
    throw std::invalid_argument("multiply: element outside the group (mismatched moduli?)");
  return {mod(g.unit * h.unit, n_), mod(g.translation + g.unit * h.translation, n_)};
}

GroupElement FiniteAffineGroup::inverse(const GroupElement& g) const {
  if (!contains(g)) throw std::invalid_argument("inverse: element outside the group");
  // unit inverse by scan; n is tiny
  int ui = 1;
  for (int u = 1; u < n_; u++)
    if (mod(u * g.unit, n_) == 1) { ui = u; break; }
  return {ui, mod(-ui * g.translation, n_)};
}

std::set<GroupElement> FiniteAffineGroup::conjugacy_class(const GroupElement& g) const {
  std::set<GroupElement> cls;
  for (const auto& h : elements_) cls.insert(multiply(multiply(h, g), inverse(h)));
  return cls;
}

std::vector<std::vector<GroupElement>> FiniteAffineGroup::conjugacy_classes() const {
  std::vector<std::vector<GroupElement>> out;
  std::set<GroupElement> seen;
  for (const auto& g : elements_) {
    if (seen.count(g)) continue;
    auto cls = conjugacy_class(g);
    out.emplace_back(cls.begin(), cls.end());
    seen.insert(cls.begin(), cls.end());
  }
  return out;
}

Subgroup::Subgroup(const FiniteAffineGroup& group, std::vector<GroupElement> members)
    : group_(&group), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (members_.empty()) throw std::invalid_argument("subgroup: empty member list");
  std::set<GroupElement> set(members_.begin(), members_.end());
  if (!set.count(group.identity())) throw std::invalid_argument("subgroup: missing identity");
  for (const auto& a : members_) {
    if (!group.contains(a)) throw std::invalid_argument("subgroup: foreign element " + to_string(a));
    if (!set.count(group.inverse(a)))
      throw std::invalid_argument("subgroup: not closed under inverse at " + to_string(a));
    for (const auto& b : members_)
      if (!set.count(group.multiply(a, b)))
        throw std::invalid_argument("subgroup: not closed under product at " + to_string(a) + "*" +
                                    to_string(b));
  }
  if (group.order() % order() != 0)
    throw std::invalid_argument("subgroup: order does not divide group order");
}

bool Subgroup::contains(const GroupElement& g) const {
  return std::binary_search(members_.begin(), members_.end(), g);
}

Subgroup subgroup_generated(const FiniteAffineGroup& group,
                            const std::vector<GroupElement>& gens) {
  if (gens.empty()) throw std::invalid_argument("subgroup_generated: no generators");
  std::set<GroupElement> closed{group.identity()};
  std::vector<GroupElement> frontier(closed.begin(), closed.end());
  for (const auto& g : gens)
    if (closed.insert(g).second) frontier.push_back(g);
  while (!frontier.empty()) {
    std::vector<GroupElement> next;
    for (const auto& a : frontier)
      for (const auto& g : gens) {
        for (const auto& p : {group.multiply(a, g), group.multiply(g, a),
                              group.multiply(a, group.inverse(g))})
          if (closed.insert(p).second) next.push_back(p);
      }
    frontier = std::move(next);
  }
  return Subgroup(group, {closed.begin(), closed.end()});
}

AlmostConjugacyCertificate is_almost_conjugate(const Subgroup& H, const Subgroup& K) {
  const auto& G = H.group();
  if (&G != &K.group())
    throw std::invalid_argument("is_almost_conjugate: subgroups of different groups");
  AlmostConjugacyCertificate cert;
  cert.almost_conjugate = true;
  for (const auto& cls : G.conjugacy_classes()) {
    int h = 0, k = 0;
    for (const auto& g : cls) {
      if (H.contains(g)) h++;
      if (K.contains(g)) k++;
    }
    cert.table.emplace_back(cls.front(), h, k);
    if (h != k) cert.almost_conjugate = false;
  }
  return cert;
}

std::optional<GroupElement> conjugating_element(const Subgroup& H, const Subgroup& K) {
  const auto& G = H.group();
  if (&G != &K.group())
    throw std::invalid_argument("conjugating_element: subgroups of different groups");
  if (H.order() != K.order()) return std::nullopt;
  for (const auto& g : G.elements()) {
    bool ok = true;
    for (const auto& h : H.members()) {
      if (!K.contains(G.multiply(G.multiply(g, h), G.inverse(g)))) { ok = false; break; }
    }
    if (ok) return g;
  }
  return std::nullopt;
}

CosetSpace::CosetSpace(const Subgroup& S, CosetSide side)
    : group_(&S.group()), side_(side) {
  const auto& G = *group_;
  coset_of_.assign(G.order(), -1);
  // Identity's coset first so it gets index 0.
  std::vector<GroupElement> order{G.identity()};
  for (const auto& g : G.elements())
    if (!(g == G.identity())) order.push_back(g);
  for (const auto& g : order) {
    if (coset_of_[G.index_of(g)] != -1) continue;
    int idx = static_cast<int>(reps_.size());
    reps_.push_back(g);
    for (const auto& s : S.members()) {
      GroupElement member = side_ == CosetSide::Right ? G.multiply(s, g) : G.multiply(g, s);
      coset_of_[G.index_of(member)] = idx;
    }
  }
  // Permutation of each group element: right cosets Sg -> S(gh) under h;
  // left cosets gS -> (hg)S under h.
  action_.assign(G.order(), {});
  for (const auto& h : G.elements()) {
    std::vector<int> perm(reps_.size());
    for (int c = 0; c < count(); c++) {
      GroupElement image = side_ == CosetSide::Right ? G.multiply(reps_[c], h)
                                                     : G.multiply(h, reps_[c]);
      perm[c] = coset_of_[G.index_of(image)];
    }
    action_[G.index_of(h)] = std::move(perm);
  }
}

int CosetSpace::coset_of(const GroupElement& g) const {
  return coset_of_[group_->index_of(g)];
}

int CosetSpace::act(const GroupElement& g, int c) const {
  return action_[group_->index_of(g)][c];
}

std::vector<int> CosetSpace::permutation(const GroupElement& g) const {
  return action_[group_->index_of(g)];
}

std::vector<int> CosetSpace::cycle_type(const GroupElement& g) const {
  const auto& perm = action_[group_->index_of(g)];
  std::vector<bool> seen(perm.size(), false);
  std::vector<int> type;
  for (int i = 0; i < static_cast<int>(perm.size()); i++) {
    if (seen[i]) continue;
    int len = 0, cur = i;
    while (!seen[cur]) { seen[cur] = true; cur = perm[cur]; len++; }
    type.push_back(len);
  }
  std::sort(type.begin(), type.end());
  return type;
}

}  // namespace sunada
