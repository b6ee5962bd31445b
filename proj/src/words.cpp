#include "geodlab/words.hpp"

#include <algorithm>

#include "geodlab/error.hpp"

namespace geodlab {

bool is_letter(char c) { return c == 'a' || c == 'b' || c == 'A' || c == 'B'; }

char inverse_letter(char c) {
  switch (c) {
    case 'a': return 'A';
    case 'A': return 'a';
    case 'b': return 'B';
    case 'B': return 'b';
  }
  throw Error(ErrorCode::ParseError, std::string("not a generator letter: ") + c);
}

int letter_rank(char c) {
  switch (c) {
    case 'a': return 0;
    case 'b': return 1;
    case 'A': return 2;
    case 'B': return 3;
  }
  throw Error(ErrorCode::ParseError, std::string("not a generator letter: ") + c);
}

std::string inverse_word(std::string_view w) {
  std::string r(w.rbegin(), w.rend());
  for (auto& c : r) c = inverse_letter(c);
  return r;
}

std::string free_reduce(std::string_view w) {
  std::string r;
  r.reserve(w.size());
  for (char c : w) {
    if (!is_letter(c)) throw Error(ErrorCode::ParseError, std::string("not a generator letter: ") + c);
    if (!r.empty() && r.back() == inverse_letter(c))
      r.pop_back();
    else
      r.push_back(c);
  }
  return r;
}

std::string cyclic_reduce(std::string_view w) {
  std::string r = free_reduce(w);
  std::size_t lo = 0, hi = r.size();
  while (hi - lo >= 2 && r[lo] == inverse_letter(r[hi - 1])) {
    ++lo;
    --hi;
  }
  return r.substr(lo, hi - lo);
}

bool is_reduced(std::string_view w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!is_letter(w[i])) return false;
    if (i > 0 && w[i - 1] == inverse_letter(w[i])) return false;
  }
  return true;
}

bool is_cyclically_reduced(std::string_view w) {
  if (!is_reduced(w)) return false;
  return w.size() < 2 || w.front() != inverse_letter(w.back());
}

std::strong_ordering compare_words(std::string_view x, std::string_view y) {
  const std::size_t n = std::min(x.size(), y.size());
  for (std::size_t i = 0; i < n; ++i) {
    const int rx = letter_rank(x[i]), ry = letter_rank(y[i]);
    if (rx != ry) return rx <=> ry;
  }
  return x.size() <=> y.size();
}

std::string least_rotation(std::string_view w) {
  std::string best(w);
  std::string doubled = std::string(w) + std::string(w);
  for (std::size_t i = 1; i < w.size(); ++i) {
    std::string_view cand(doubled.data() + i, w.size());
    if (compare_words(cand, best) < 0) best.assign(cand);
  }
  return best;
}

CyclicWord CyclicWord::canonicalize(std::string_view letters) {
  if (letters.empty()) throw Error(ErrorCode::EmptyAfterReduction, "empty word");
  const std::string r = cyclic_reduce(letters);
  if (r.empty()) throw Error(ErrorCode::EmptyAfterReduction, "word reduces to the identity");
  std::string fwd = least_rotation(r);
  std::string bwd = least_rotation(inverse_word(r));
  return CyclicWord(compare_words(bwd, fwd) < 0 ? std::move(bwd) : std::move(fwd));
}

CyclicWord CyclicWord::parse(std::string_view text) {
  if (text.empty()) throw Error(ErrorCode::ParseError, "empty word");
  for (char c : text)
    if (!is_letter(c)) throw Error(ErrorCode::ParseError, "word must use only a, b, A, B");
  if (!is_cyclically_reduced(text))
    throw Error(ErrorCode::ParseError, "word is not cyclically reduced: " + std::string(text));
  return canonicalize(text);
}

std::string CyclicWord::primitive_root() const {
  const std::size_t n = letters_.size();
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p != 0) continue;
    bool periodic = true;
    for (std::size_t i = p; i < n && periodic; ++i) periodic = letters_[i] == letters_[i - p];
    if (periodic) return letters_.substr(0, p);
  }
  return letters_;
}

bool CyclicWord::is_primitive() const { return primitive_root().size() == letters_.size(); }

CyclicWord CyclicWord::inverse() const { return canonicalize(inverse_word(letters_)); }

}  // namespace geodlab
