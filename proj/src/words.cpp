#include "sunada/words.hpp"

#include <algorithm>
#include <cctype>
#include <queue>
#include <set>

namespace sunada {

Alphabet::Alphabet(std::string names) : names_(std::move(names)) {
  for (char c : names_) {
    if (!std::islower(static_cast<unsigned char>(c)))
      throw std::invalid_argument("alphabet names must be lowercase letters");
    if (std::count(names_.begin(), names_.end(), c) != 1)
      throw std::invalid_argument("alphabet names must be distinct");
  }
}

std::optional<int> Alphabet::find(char name) const {
  auto pos = names_.find(name);
  if (pos == std::string::npos) return std::nullopt;
  return static_cast<int>(pos);
}

namespace {

class Parser {
 public:
  Parser(const std::string& text, const Alphabet& alphabet) : text_(text), alphabet_(alphabet) {}

  Word parse() {
    Word w = word();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError(pos_, "unexpected character");
    return w;
  }

 private:
  Word word() {
    Word out;
    while (true) {
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] == ')' || text_[pos_] == ']' || text_[pos_] == ',')
        break;
      Word term = atom();
      long exp = exponent();
      Word piece = exp >= 0 ? term : inverse(term);
      for (long k = 0; k < std::labs(exp); k++)
        out.insert(out.end(), piece.begin(), piece.end());
    }
    return out;
  }

  Word atom() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError(pos_, "expected atom");
    char c = text_[pos_];
    if (c == '(') {
      pos_++;
      Word inner = word();
      expect(')');
      return inner;
    }
    if (c == '[') {
      pos_++;
      Word u = word();
      expect(',');
      Word v = word();
      expect(']');
      // [u,v] = u v u^-1 v^-1
      Word out = concat(concat(u, v), concat(inverse(u), inverse(v)));
      return out;
    }
    auto gen = alphabet_.find(c);
    if (!gen) throw ParseError(pos_, std::string("unknown generator '") + c + "'");
    pos_++;
    return {Letter::make(*gen, false)};
  }

  long exponent() {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != '^') return 1;
    pos_++;
    skip_ws();
    bool neg = false;
    if (pos_ < text_.size() && text_[pos_] == '-') { neg = true; pos_++; }
    size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) pos_++;
    if (pos_ == start) throw ParseError(pos_, "expected digits after '^'");
    long v = std::stol(text_.substr(start, pos_ - start));
    return neg ? -v : v;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c)
      throw ParseError(pos_, std::string("expected '") + c + "'");
    pos_++;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) pos_++;
  }

  const std::string& text_;
  const Alphabet& alphabet_;
  size_t pos_ = 0;
};

}  // namespace

Word parse_word(const std::string& text, const Alphabet& alphabet) {
  return Parser(text, alphabet).parse();
}

std::string format_word(const Word& w, const Alphabet& alphabet) {
  std::string out;
  for (const Letter& l : w) {
    if (!out.empty()) out += ' ';
    out += alphabet.name(l.generator());
    if (l.inverse()) out += "^-1";
  }
  return out;
}

Word inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverted());
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (const Letter& l : w) {
    if (!out.empty() && out.back() == l.inverted())
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

bool is_reduced(const Word& w) {
  for (size_t i = 0; i + 1 < w.size(); i++)
    if (w[i] == w[i + 1].inverted()) return false;
  return true;
}

Word cyclic_reduce(const Word& w) {
  Word r = free_reduce(w);
  while (r.size() >= 2 && r.front() == r.back().inverted()) {
    r.erase(r.begin());
    r.pop_back();
  }
  return r;
}

namespace {
Word least_rotation(const Word& w) {
  if (w.empty()) return w;
  Word best = w;
  const int n = static_cast<int>(w.size());
  for (int r = 1; r < n; r++) {
    Word cand;
    cand.reserve(n);
    for (int k = 0; k < n; k++) cand.push_back(w[(r + k) % n]);
    if (cand < best) best = cand;
  }
  return best;
}
}  // namespace

CyclicWord::CyclicWord(const Word& w) : letters_(least_rotation(cyclic_reduce(w))) {}

Letter CyclicWord::at(int i) const {
  const int n = size();
  if (n == 0) throw std::out_of_range("empty cyclic word");
  return letters_[((i % n) + n) % n];
}

bool CyclicWord::is_primitive() const {
  const int n = size();
  for (int p = 1; p < n; p++) {
    if (n % p != 0) continue;
    bool periodic = true;
    for (int k = 0; k < n && periodic; k++)
      if (letters_[k] != letters_[(k + p) % n]) periodic = false;
    if (periodic) return false;
  }
  return n > 0;
}

HomologyClass abelianize(const Word& w, int rank) {
  HomologyClass v(rank, 0);
  for (const Letter& l : w) v.at(l.generator()) += l.inverse() ? -1 : 1;
  return v;
}

Endomorphism Endomorphism::identity(int rank) {
  std::vector<Word> images;
  for (int g = 0; g < rank; g++) images.push_back({Letter::make(g, false)});
  return Endomorphism(std::move(images));
}

Word Endomorphism::apply(const Word& w) const {
  Word out;
  for (const Letter& l : w) {
    const Word& img = images_.at(l.generator());
    if (l.inverse()) {
      Word inv = inverse(img);
      out.insert(out.end(), inv.begin(), inv.end());
    } else {
      out.insert(out.end(), img.begin(), img.end());
    }
  }
  return free_reduce(out);
}

SurfaceGroup::SurfaceGroup(const Word& relator) {
  Word r = cyclic_reduce(relator);
  relator_length_ = static_cast<int>(r.size());
  if (relator_length_ == 0) throw std::invalid_argument("empty relator");
  std::set<Word> sym;
  Word cur = r;
  for (int rot = 0; rot < relator_length_; rot++) {
    Word c;
    for (int k = 0; k < relator_length_; k++) c.push_back(r[(rot + k) % relator_length_]);
    sym.insert(c);
    sym.insert(inverse(c));
  }
  symmetrized_.assign(sym.begin(), sym.end());
}

bool SurfaceGroup::step(Word& w) const {
  const int n = static_cast<int>(w.size());
  if (n == 0) return false;
  const int m = relator_length_;
  const int half = m / 2;
  for (const Word& R : symmetrized_) {
    for (int len = std::min(m, n); len > half; len--) {
      for (int s = 0; s < n; s++) {
        bool match = true;
        for (int k = 0; k < len && match; k++)
          if (w[(s + k) % n] != R[k]) match = false;
        if (!match) continue;
        // subword * complement = R, so subword = R * complement^-1; replace
        // by the inverse of the complement, which is strictly shorter.
        Word complement(R.begin() + len, R.end());
        Word repl = inverse(complement);
        Word next;
        for (int k = 0; k < n - len; k++) next.push_back(w[(s + len + k) % n]);
        next.insert(next.end(), repl.begin(), repl.end());
        w = cyclic_reduce(next);
        return true;
      }
    }
  }
  return false;
}

Word SurfaceGroup::dehn_reduce(Word w) const {
  w = cyclic_reduce(w);
  while (step(w)) {}
  return w;
}

bool SurfaceGroup::conjugate(const Word& a, const Word& b) const {
  Word wa = dehn_reduce(a);
  Word wb = dehn_reduce(b);
  if (wa.empty() || wb.empty()) return wa.empty() && wb.empty();
  if (wa.size() != wb.size()) return false;
  const int m = relator_length_;
  const int half = m / 2;
  auto canon = [](const Word& w) { return least_rotation(w); };
  Word target = canon(wb);
  std::set<Word> seen;
  std::queue<Word> todo;
  Word start = canon(wa);
  seen.insert(start);
  todo.push(start);
  while (!todo.empty()) {
    Word cur = todo.front();
    todo.pop();
    if (cur == target) return true;
    const int n = static_cast<int>(cur.size());
    for (const Word& R : symmetrized_) {
      for (int s = 0; s < n; s++) {
        bool match = true;
        for (int k = 0; k < half && match; k++)
          if (cur[(s + k) % n] != R[k]) match = false;
        if (!match) continue;
        Word complement(R.begin() + half, R.end());
        Word repl = inverse(complement);
        Word next;
        for (int k = 0; k < n - half; k++) next.push_back(cur[(s + half + k) % n]);
        next.insert(next.end(), repl.begin(), repl.end());
        next = dehn_reduce(next);
        if (static_cast<int>(next.size()) < n) {
          // Found a shorter representative; restart from it.
          return conjugate(next, wb);
        }
        Word c = canon(next);
        if (seen.insert(c).second) todo.push(c);
      }
    }
    if (seen.size() > 500000)
      throw std::runtime_error("surface_conjugate: search space too large");
  }
  return false;
}

bool surface_conjugate(const Word& w1, const Word& w2, const Word& relator) {
  return SurfaceGroup(relator).conjugate(w1, w2);
}

}  // namespace sunada
