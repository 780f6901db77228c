#include "sunada/enumeration.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>

namespace sunada {

SpineModel::SpineModel(Alphabet alphabet, std::vector<std::vector<int>> paths)
    : alphabet_(std::move(alphabet)), paths_(std::move(paths)) {
  if (static_cast<int>(paths_.size()) != alphabet_.size())
    throw std::invalid_argument("spine model: one path per generator required");
}

SpineModel SpineModel::paper_model() {
  // a = a1, b = b1 b2, x = b1 x1 b1^-1. Reproduces the sharing rules: the
  // b-path and the x-path each carry two b-edges, and the junctions x|b,
  // x^-1|b, b^-1|x, b^-1|x^-1 cancel one pair.
  auto e = [](Edge edge, bool rev) { return static_cast<int>(edge) * 2 + (rev ? 1 : 0); };
  return SpineModel(Alphabet("abx"),
                    {{e(A1, false)},
                     {e(B1, false), e(B2, false)},
                     {e(B1, false), e(X1, false), e(B1, true)}});
}

std::string SpineModel::path_description() const {
  static const char* edge_names[4] = {"a1", "x1", "b1", "b2"};
  std::string out;
  for (int g = 0; g < alphabet_.size(); g++) {
    if (g) out += "; ";
    out += alphabet_.name(g);
    out += " = ";
    bool first = true;
    for (int se : paths_[g]) {
      if (!first) out += " ";
      first = false;
      out += edge_names[se >> 1];
      if (se & 1) out += "^-1";
    }
  }
  return out;
}

SpineModel::EdgeCounts SpineModel::edge_counts(const CyclicWord& w) const {
  std::vector<int> path;
  for (const Letter& l : w.letters()) {
    const auto& p = paths_.at(l.generator());
    if (!l.inverse()) {
      for (int se : p) path.push_back(se);
    } else {
      for (auto it = p.rbegin(); it != p.rend(); ++it) path.push_back(*it ^ 1);
    }
  }
  // cyclically reduce the edge path
  std::vector<int> red;
  for (int se : path) {
    if (!red.empty() && red.back() == (se ^ 1)) red.pop_back();
    else red.push_back(se);
  }
  while (red.size() >= 2 && red.front() == (red.back() ^ 1)) {
    red.erase(red.begin());
    red.pop_back();
  }
  EdgeCounts c;
  for (int se : red) {
    switch (se >> 1) {
      case A1: c.a1++; break;
      case X1: c.x1++; break;
      default: c.b_sum++; break;
    }
  }
  return c;
}

CandidateConstraints CandidateConstraints::paper() { return {}; }

namespace {

constexpr int kGenA = 0, kGenB = 1, kGenX = 2;

std::vector<Letter> content_multiset(const CandidateConstraints& c, int b_count) {
  std::vector<Letter> content;
  for (int i = 0; i < c.a_count; i++) content.push_back(Letter::make(kGenA, false));
  for (int i = 0; i < c.a_inv_count; i++) content.push_back(Letter::make(kGenA, true));
  for (int i = 0; i < c.x_count; i++) content.push_back(Letter::make(kGenX, false));
  for (int i = 0; i < c.x_inv_count; i++) content.push_back(Letter::make(kGenX, true));
  for (int i = 0; i < b_count; i++) content.push_back(Letter::make(kGenB, false));
  for (int i = 0; i < b_count - c.b_surplus; i++) content.push_back(Letter::make(kGenB, true));
  std::sort(content.begin(), content.end());
  return content;
}

bool cyclically_reduced(const Word& w) {
  const int n = static_cast<int>(w.size());
  for (int i = 0; i < n; i++)
    if (w[i] == w[(i + 1) % n].inverted()) return false;
  return n > 0;
}

void scan_arrangements(std::vector<Letter> content, const CandidateConstraints& c,
                       const SpineModel& model, std::set<Word>* out) {
  do {
    if (!cyclically_reduced(content)) continue;
    if (c.b_edge_budget > 0) {
      auto counts = model.edge_counts(CyclicWord(content));
      if (counts.b_sum != c.b_edge_budget) continue;
    }
    out->insert(CyclicWord(content).letters());
  } while (std::next_permutation(content.begin(), content.end()));
}

}  // namespace

std::vector<CyclicWord> generate_candidates(const CandidateConstraints& c,
                                            const SpineModel& model, int threads) {
  if (threads < 1) throw std::invalid_argument("generate_candidates: threads must be >= 1");
  std::set<Word> canonical;
  for (int b_count = std::max(0, c.b_surplus); b_count <= c.max_b; b_count++) {
    std::vector<Letter> content = content_multiset(c, b_count);
    if (content.empty()) continue;
    if (threads == 1) {
      scan_arrangements(content, c, model, &canonical);
      continue;
    }
    // Partition the arrangement space by first letter; each worker scans the
    // arrangements with its fixed prefix; merge is a set union.
    std::vector<Letter> firsts;
    for (size_t i = 0; i < content.size(); i++)
      if (i == 0 || !(content[i] == content[i - 1])) firsts.push_back(content[i]);
    std::vector<std::future<std::set<Word>>> jobs;
    for (const Letter& first : firsts) {
      std::vector<Letter> rest;
      bool removed = false;
      for (const Letter& l : content) {
        if (!removed && l == first) { removed = true; continue; }
        rest.push_back(l);
      }
      jobs.push_back(std::async(std::launch::async, [first, rest, &c, &model]() {
        std::set<Word> local;
        std::vector<Letter> arrangement = rest;
        std::sort(arrangement.begin(), arrangement.end());
        do {
          Word w{first};
          w.insert(w.end(), arrangement.begin(), arrangement.end());
          if (!cyclically_reduced(w)) continue;
          if (c.b_edge_budget > 0) {
            auto counts = model.edge_counts(CyclicWord(w));
            if (counts.b_sum != c.b_edge_budget) continue;
          }
          local.insert(CyclicWord(w).letters());
        } while (std::next_permutation(arrangement.begin(), arrangement.end()));
        return local;
      }));
    }
    for (auto& j : jobs) {
      auto local = j.get();
      canonical.insert(local.begin(), local.end());
    }
  }
  std::vector<CyclicWord> out;
  for (const Word& w : canonical) out.push_back(CyclicWord(w));
  return out;
}

std::vector<CyclicWord> homology_filter(const std::vector<CyclicWord>& cands,
                                        const HomologyClass& target) {
  HomologyClass neg = target;
  for (auto& v : neg) v = -v;
  std::vector<CyclicWord> out;
  for (const auto& w : cands) {
    auto h = abelianize(w.letters(), static_cast<int>(target.size()));
    if (h == target || h == neg) out.push_back(w);
  }
  return out;
}

TraceMatchReport find_trace_matches(const std::vector<CyclicWord>& cands,
                                    const MetricAssignment& m, const CyclicWord& target) {
  TraceMatchReport rep;
  rep.target_invariant = trace_invariant(m, target.letters());
  std::set<Word> mod_inversion;
  std::set<Word> match_classes;
  auto distinct_rotations = [](const CyclicWord& w) {
    const int n = w.size();
    for (int p = 1; p < n; p++) {
      if (n % p != 0) continue;
      bool periodic = true;
      for (int k = 0; k < n && periodic; k++)
        if (!(w.at(k) == w.at(k + p))) periodic = false;
      if (periodic) return p;
    }
    return n;
  };
  for (const auto& w : cands) {
    rep.candidate_linear_words += distinct_rotations(w);
    rep.candidate_classes++;
    CyclicWord winv = w.inverted();
    mod_inversion.insert(std::min(w.letters(), winv.letters()));
    Rational ti = trace_invariant(m, w.letters());
    if (ti == rep.target_invariant)
      match_classes.insert(std::min(w.letters(), winv.letters()));
  }
  // The target belongs to every match run even if not among the candidates.
  {
    CyclicWord tinv = target.inverted();
    Rational ti = trace_invariant(m, target.letters());
    if (ti == rep.target_invariant)
      match_classes.insert(std::min(target.letters(), tinv.letters()));
  }
  rep.candidate_classes_mod_inversion = static_cast<long>(mod_inversion.size());
  for (const Word& w : match_classes) rep.matches.push_back(CyclicWord(w));
  return rep;
}

}  // namespace sunada
