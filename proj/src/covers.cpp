#include "sunada/covers.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace sunada {

Homomorphism::Homomorphism(const FiniteAffineGroup& target, Alphabet alphabet,
                           std::vector<GroupElement> images)
    : target_(&target), alphabet_(std::move(alphabet)), images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != alphabet_.size())
    throw std::invalid_argument("homomorphism: one image per generator required");
  for (const auto& g : images_)
    if (!target.contains(g))
      throw std::invalid_argument("homomorphism: image " + to_string(g) + " not in target");
}

GroupElement Homomorphism::evaluate(const Word& w) const {
  GroupElement acc = target_->identity();
  for (const Letter& l : w) {
    GroupElement g = images_.at(l.generator());
    if (l.inverse()) g = target_->inverse(g);
    acc = target_->multiply(acc, g);
  }
  return acc;
}

std::pair<bool, int> Homomorphism::check_surjective() const {
  Subgroup generated = subgroup_generated(*target_, images_);
  return {generated.order() == target_->order(), generated.order()};
}

std::vector<LiftComponent> preimage_components(const Homomorphism& rho, const Subgroup& S,
                                               const CyclicWord& w) {
  const auto& G = rho.target();
  GroupElement g0 = rho.evaluate(w.letters());
  CosetSpace cosets(S, CosetSide::Right);
  std::vector<bool> seen(cosets.count(), false);
  std::vector<LiftComponent> out;
  for (int c = 0; c < cosets.count(); c++) {
    if (seen[c]) continue;
    LiftComponent comp;
    comp.base_word = w;
    int cur = c;
    while (!seen[cur]) {
      seen[cur] = true;
      comp.coset_orbit.push_back(cur);
      cur = cosets.act(g0, cur);
    }
    std::sort(comp.coset_orbit.begin(), comp.coset_orbit.end());
    comp.degree = static_cast<int>(comp.coset_orbit.size());
    out.push_back(std::move(comp));
  }
  (void)G;
  return out;
}

std::vector<int> degree_multiset(const std::vector<LiftComponent>& comps) {
  std::vector<int> d;
  for (const auto& c : comps) d.push_back(c.degree);
  std::sort(d.begin(), d.end());
  return d;
}

std::vector<std::vector<int>> lift_orbit_partition(const Subgroup& S, const CosetSpace& GmodL) {
  if (GmodL.side() != CosetSide::Left)
    throw std::invalid_argument("lift_orbit_partition expects left cosets G/L");
  std::vector<bool> seen(GmodL.count(), false);
  std::vector<std::vector<int>> orbits;
  for (int c = 0; c < GmodL.count(); c++) {
    if (seen[c]) continue;
    std::vector<int> orbit;
    std::vector<int> frontier{c};
    seen[c] = true;
    while (!frontier.empty()) {
      std::vector<int> next;
      for (int cur : frontier) {
        orbit.push_back(cur);
        for (const auto& s : S.members()) {
          int img = GmodL.act(s, cur);
          if (!seen[img]) { seen[img] = true; next.push_back(img); }
        }
      }
      frontier = std::move(next);
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  std::sort(orbits.begin(), orbits.end());
  return orbits;
}

std::optional<std::vector<int>> gamma_labels(const CosetSpace& GmodL) {
  if (GmodL.side() != CosetSide::Left || GmodL.count() != 16) return std::nullopt;
  static const GroupElement table[16] = {
      {1, 0}, {1, 1}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {1, 7},
      {3, 0}, {3, 3}, {3, 6}, {3, 1}, {3, 4}, {3, 7}, {3, 2}, {3, 5}};
  std::vector<int> labels(16, 0);
  std::vector<bool> used(17, false);
  for (int i = 0; i < 16; i++) {
    if (!GmodL.group().contains(table[i])) return std::nullopt;
    int c = GmodL.coset_of(table[i]);
    if (labels[c] != 0) return std::nullopt;
    labels[c] = i + 1;
    used[i + 1] = true;
  }
  return labels;
}

namespace {

/// Extend phi (given on rho's generator images) to all of G by products, or
/// fail when the images are inconsistent.
std::optional<std::map<GroupElement, GroupElement>> extend_automorphism(
    const FiniteAffineGroup& G, const std::vector<std::pair<GroupElement, GroupElement>>& seed) {
  std::map<GroupElement, GroupElement> phi;
  phi[G.identity()] = G.identity();
  for (const auto& [g, img] : seed) {
    auto it = phi.find(g);
    if (it != phi.end() && !(it->second == img)) return std::nullopt;
    phi[g] = img;
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::pair<GroupElement, GroupElement>> known(phi.begin(), phi.end());
    for (const auto& [a, fa] : known)
      for (const auto& [b, fb] : known) {
        GroupElement ab = G.multiply(a, b);
        GroupElement fab = G.multiply(fa, fb);
        auto it = phi.find(ab);
        if (it == phi.end()) { phi[ab] = fab; grew = true; }
        else if (!(it->second == fab)) return std::nullopt;
      }
  }
  if (static_cast<int>(phi.size()) != G.order()) return std::nullopt;
  std::set<GroupElement> image;
  for (const auto& [g, fg] : phi) image.insert(fg);
  if (static_cast<int>(image.size()) != G.order()) return std::nullopt;
  return phi;
}

bool fixes(const std::map<GroupElement, GroupElement>& phi, const Subgroup& S) {
  for (const auto& s : S.members())
    if (!S.contains(phi.at(s))) return false;
  return true;
}

}  // namespace

InvolutionCompat verify_involution_compat(const Homomorphism& rho, const Endomorphism& tau,
                                          const Subgroup& H, const Subgroup& K,
                                          int exhaustive_len, int random_trials,
                                          unsigned long seed) {
  const auto& G = rho.target();
  InvolutionCompat out;

  std::vector<std::pair<GroupElement, GroupElement>> constraints;
  for (int g = 0; g < rho.alphabet().size(); g++)
    constraints.emplace_back(rho.image(g), rho.evaluate(tau.image(g)));
  auto phi = extend_automorphism(G, constraints);
  if (phi) {
    out.found = true;
    out.phi.assign(phi->begin(), phi->end());
    out.phi_is_identity = true;
    out.phi_is_psi = true;
    for (const auto& [g, fg] : *phi) {
      if (!(fg == g)) out.phi_is_identity = false;
      GroupElement psi_g{g.unit, (G.modulus() - g.translation) % G.modulus()};
      if (!(fg == psi_g)) out.phi_is_psi = false;
    }
    out.fixes_H = fixes(*phi, H);
    out.fixes_K = fixes(*phi, K);
  }
  {
    out.psi_intertwines = true;
    for (int g = 0; g < rho.alphabet().size(); g++) {
      GroupElement img = rho.image(g);
      GroupElement psi_img{img.unit, (G.modulus() - img.translation) % G.modulus()};
      if (!(psi_img == rho.evaluate(tau.image(g)))) out.psi_intertwines = false;
    }
  }

  // Convention-robust membership check: rho(w) in S <=> rho(tau w) in S.
  const int rank = rho.alphabet().size();
  auto check_word = [&](const Word& w, const Subgroup& S) {
    return S.contains(rho.evaluate(w)) == S.contains(rho.evaluate(tau.apply(w)));
  };
  bool okH = true, okK = true;
  long checked = 0;
  std::vector<Word> stack{Word{}};
  // exhaustive over all words (reduced or not) of length <= exhaustive_len
  std::vector<Word> current{Word{}};
  for (int len = 0; len <= exhaustive_len; len++) {
    std::vector<Word> next;
    for (const auto& w : current) {
      okH = okH && check_word(w, H);
      okK = okK && check_word(w, K);
      checked++;
      if (len < exhaustive_len)
        for (int c = 0; c < 2 * rank; c++) next.push_back(concat(w, {Letter{c}}));
    }
    current = std::move(next);
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> letter(0, 2 * rank - 1);
  std::uniform_int_distribution<int> length(exhaustive_len + 1, 4 * exhaustive_len);
  for (int t = 0; t < random_trials; t++) {
    Word w;
    int len = length(rng);
    for (int k = 0; k < len; k++) w.push_back(Letter{letter(rng)});
    okH = okH && check_word(w, H);
    okK = okK && check_word(w, K);
    checked++;
  }
  out.membership_H = okH;
  out.membership_K = okK;
  out.words_checked = checked;
  return out;
}

}  // namespace sunada
