#pragma once

// Words in the free group on {a, b}. Capitals denote inverses. Canonical
// forms use the letter order a < b < A < B.

#include <compare>
#include <string>
#include <string_view>

namespace geodlab {

inline constexpr std::string_view kLetters = "abAB";

bool is_letter(char c);
char inverse_letter(char c);
/// Rank of a letter in the canonical order a < b < A < B.
int letter_rank(char c);

std::string inverse_word(std::string_view w);
std::string free_reduce(std::string_view w);
std::string cyclic_reduce(std::string_view w);
bool is_reduced(std::string_view w);
bool is_cyclically_reduced(std::string_view w);

/// Lexicographic comparison under the canonical letter order.
std::strong_ordering compare_words(std::string_view x, std::string_view y);

/// Least rotation of a word under the canonical letter order.
std::string least_rotation(std::string_view w);

/// Nonempty cyclically reduced word in canonical form: the least rotation of
/// the word and of its inverse. Represents an unoriented conjugacy class.
class CyclicWord {
 public:
  /// Reduces freely and cyclically, then canonicalizes. Throws
  /// EmptyAfterReduction or ParseError.
  static CyclicWord canonicalize(std::string_view letters);
  /// Strict: input must already be cyclically reduced.
  static CyclicWord parse(std::string_view text);

  const std::string& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }

  bool is_primitive() const;
  /// Smallest u with letters() = u^k.
  std::string primitive_root() const;
  CyclicWord inverse() const;

  friend bool operator==(const CyclicWord&, const CyclicWord&) = default;
  friend std::strong_ordering operator<=>(const CyclicWord& x, const CyclicWord& y) {
    return compare_words(x.letters_, y.letters_);
  }

 private:
  explicit CyclicWord(std::string w) : letters_(std::move(w)) {}
  std::string letters_;
};

}  // namespace geodlab
