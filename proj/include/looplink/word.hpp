#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

// Words over the surface-group alphabet {a_k, b_k, a_k^-1, b_k^-1}, k = 1..g,
// free and cyclic reduction, and canonical conjugacy-class representatives.

namespace looplink {

class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Largest genus whose alphabet ranks fit in one byte.
inline constexpr int kMaxGenus = 63;

// One alphabet symbol, stored as its rank in the boundary order
// a1 < b1 < a1^-1 < b1^-1 < a2 < b2 < a2^-1 < b2^-1 < ...
class Letter {
public:
  Letter() = default;
  static Letter from_rank(int rank) {
    Letter x;
    x.rank_ = static_cast<std::uint8_t>(rank);
    return x;
  }
  static Letter make(char family, int index, bool inverted) {
    if (family != 'a' && family != 'b')
      throw std::invalid_argument("letter family must be 'a' or 'b'");
    if (index < 1 || index > kMaxGenus)
      throw std::invalid_argument("letter index out of range");
    return from_rank(4 * (index - 1) + (family == 'b' ? 1 : 0) + (inverted ? 2 : 0));
  }

  int rank() const { return rank_; }
  int index() const { return rank_ / 4 + 1; }
  char family() const { return (rank_ % 2) ? 'b' : 'a'; }
  bool inverted() const { return (rank_ % 4) >= 2; }
  Letter inverse() const { return from_rank(rank_ ^ 2); }

  std::string str() const {
    std::string s;
    s += family();
    s += std::to_string(index());
    if (inverted()) s += "^-1";
    return s;
  }

  friend bool operator==(Letter a, Letter b) { return a.rank_ == b.rank_; }
  friend bool operator!=(Letter a, Letter b) { return a.rank_ != b.rank_; }
  friend bool operator<(Letter a, Letter b) { return a.rank_ < b.rank_; }

private:
  std::uint8_t rank_ = 0;
};

// Rank of a letter in the boundary order; determines the order between
// gates with distinct labels.
inline int letter_rank(Letter x) { return x.rank(); }

namespace detail {
// Rank bytes, one per letter. std::string keeps short words inline.
using RankSeq = std::string;

inline Letter at(const RankSeq& s, std::size_t i) {
  return Letter::from_rank(static_cast<std::uint8_t>(s[i]));
}
inline char byte_of(Letter x) { return static_cast<char>(x.rank()); }

RankSeq reduce_seq(const RankSeq& s);
RankSeq cyclic_reduce_seq(const RankSeq& s);
RankSeq min_rotation(const RankSeq& s);
}  // namespace detail

// A finite sequence of letters together with the genus of the enclosing
// surface. Immutable; every letter index is <= genus.
class Word {
public:
  Word() : genus_(1) {}
  Word(detail::RankSeq ranks, int genus) : ranks_(std::move(ranks)), genus_(genus) {
    validate();
  }

  int genus() const { return genus_; }
  std::size_t size() const { return ranks_.size(); }
  bool empty() const { return ranks_.empty(); }
  Letter letter(std::size_t i) const { return detail::at(ranks_, i); }
  const detail::RankSeq& ranks() const { return ranks_; }

  friend bool operator==(const Word& a, const Word& b) {
    return a.genus_ == b.genus_ && a.ranks_ == b.ranks_;
  }
  friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }

private:
  void validate() const;

  detail::RankSeq ranks_;
  int genus_;
};

// Canonical representative of a conjugacy class: cyclically reduced and in
// the lexicographically least rotation under the letter order. Two Words are
// conjugate in the free group iff they canonicalize to equal CyclicWords.
class CyclicWord {
public:
  CyclicWord() : genus_(1) {}
  explicit CyclicWord(const Word& w);

  int genus() const { return genus_; }
  std::size_t size() const { return ranks_.size(); }
  bool trivial() const { return ranks_.empty(); }
  Letter letter(std::size_t i) const { return detail::at(ranks_, i); }
  const detail::RankSeq& ranks() const { return ranks_; }

  // A Word spelling of the canonical representative.
  Word word() const { return Word(ranks_, genus_); }

  friend bool operator==(const CyclicWord& a, const CyclicWord& b) {
    return a.genus_ == b.genus_ && a.ranks_ == b.ranks_;
  }
  friend bool operator!=(const CyclicWord& a, const CyclicWord& b) { return !(a == b); }
  // Shorter classes first, then rank-lexicographic.
  friend bool operator<(const CyclicWord& a, const CyclicWord& b) {
    if (a.ranks_.size() != b.ranks_.size()) return a.ranks_.size() < b.ranks_.size();
    if (int c = a.ranks_.compare(b.ranks_); c != 0) return c < 0;
    return a.genus_ < b.genus_;
  }

private:
  detail::RankSeq ranks_;
  int genus_;
};

// Parsing and formatting. Tokens are ("a"|"b") digits ["^-1"], separated by
// whitespace or juxtaposed; "A1" is shorthand for "a1^-1". No reduction.
Word parse_word(std::string_view text, int genus);
std::string format(const Word& w);
std::string format(const CyclicWord& w);

// Free-group inverse: reversed sequence, every letter inverted.
Word invert(const Word& w);

// Free reduction: removes adjacent inverse pairs until none remain.
Word reduce(const Word& w);

// Free reduction plus removal of inverse first/last pairs; the result has
// minimal length in the conjugacy class.
Word cyclic_reduce(const Word& w);

// Cyclic reduction followed by rotation to the canonical form.
CyclicWord canonical_cyclic(const Word& w);

// nu^k: rotate(x1 x2 ... xp, 1) = x2 ... xp x1. Empty word is fixed.
Word rotate(const Word& w, long long k);

// w_{s,t}: the cyclic segment from the s-th to the t-th letter, inclusive,
// 1-based, indices taken modulo the length; wraps around when s > t after
// normalization. Undefined (rejected) for the empty word.
Word subword(const Word& w, long long s, long long t);

// Concatenation; genera must agree.
Word concat(const Word& v, const Word& w);

}  // namespace looplink
