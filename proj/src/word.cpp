#include "looplink/word.hpp"

#include <cctype>

namespace looplink {

namespace detail {

RankSeq reduce_seq(const RankSeq& s) {
  RankSeq out;
  out.reserve(s.size());
  for (char c : s) {
    if (!out.empty() && (static_cast<std::uint8_t>(out.back()) ^ 2) ==
                            static_cast<std::uint8_t>(c)) {
      out.pop_back();
    } else {
      out.push_back(c);
    }
  }
  return out;
}

RankSeq cyclic_reduce_seq(const RankSeq& s) {
  RankSeq r = reduce_seq(s);
  std::size_t lo = 0, hi = r.size();
  while (hi - lo >= 2 && (static_cast<std::uint8_t>(r[lo]) ^ 2) ==
                             static_cast<std::uint8_t>(r[hi - 1])) {
    ++lo;
    --hi;
  }
  return r.substr(lo, hi - lo);
}

RankSeq min_rotation(const RankSeq& s) {
  const std::size_t n = s.size();
  if (n <= 1) return s;
  RankSeq doubled = s + s;
  std::size_t best = 0;
  for (std::size_t r = 1; r < n; ++r) {
    if (doubled.compare(r, n, doubled, best, n) < 0) best = r;
  }
  return doubled.substr(best, n);
}

}  // namespace detail

void Word::validate() const {
  if (genus_ < 1 || genus_ > kMaxGenus)
    throw std::invalid_argument("genus must be between 1 and 63");
  for (char c : ranks_) {
    if (static_cast<std::uint8_t>(c) >= 4 * static_cast<unsigned>(genus_))
      throw std::invalid_argument("letter index exceeds genus");
  }
}

CyclicWord::CyclicWord(const Word& w) : genus_(w.genus()) {
  ranks_ = detail::min_rotation(detail::cyclic_reduce_seq(w.ranks()));
}

Word parse_word(std::string_view text, int genus) {
  if (genus < 1 || genus > kMaxGenus)
    throw ParseError("genus must be between 1 and 63");
  detail::RankSeq ranks;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    char c = text[i];
    char family;
    bool inverted;
    switch (c) {
      case 'a': family = 'a'; inverted = false; break;
      case 'b': family = 'b'; inverted = false; break;
      case 'A': family = 'a'; inverted = true; break;
      case 'B': family = 'b'; inverted = true; break;
      default:
        throw ParseError(std::string("unknown token at '") + c +
                         "': expected a, b, A or B");
    }
    ++i;
    if (i >= n || !std::isdigit(static_cast<unsigned char>(text[i])))
      throw ParseError(std::string("letter '") + c + "' is missing its index");
    long long index = 0;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
      index = index * 10 + (text[i] - '0');
      if (index > kMaxGenus) throw ParseError("letter index out of range");
      ++i;
    }
    if (index == 0) throw ParseError("letter index must be at least 1");
    if (index > genus)
      throw ParseError("letter index " + std::to_string(index) +
                       " exceeds genus " + std::to_string(genus));
    if (i < n && text[i] == '^') {
      if (text.substr(i, 3) != "^-1")
        throw ParseError("expected \"^-1\" after '^'");
      inverted = !inverted;
      i += 3;
    }
    ranks.push_back(detail::byte_of(
        Letter::make(family, static_cast<int>(index), inverted)));
  }
  return Word(std::move(ranks), genus);
}

std::string format(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += w.letter(i).str();
  }
  return out;
}

std::string format(const CyclicWord& w) { return format(w.word()); }

Word invert(const Word& w) {
  detail::RankSeq ranks(w.size(), '\0');
  for (std::size_t i = 0; i < w.size(); ++i)
    ranks[w.size() - 1 - i] = detail::byte_of(w.letter(i).inverse());
  return Word(std::move(ranks), w.genus());
}

Word reduce(const Word& w) { return Word(detail::reduce_seq(w.ranks()), w.genus()); }

Word cyclic_reduce(const Word& w) {
  return Word(detail::cyclic_reduce_seq(w.ranks()), w.genus());
}

CyclicWord canonical_cyclic(const Word& w) { return CyclicWord(w); }

Word rotate(const Word& w, long long k) {
  if (w.empty()) return w;
  const long long p = static_cast<long long>(w.size());
  long long r = ((k % p) + p) % p;
  if (r == 0) return w;
  return Word(w.ranks().substr(r) + w.ranks().substr(0, r), w.genus());
}

Word subword(const Word& w, long long s, long long t) {
  if (w.empty()) throw std::invalid_argument("subword of the empty word");
  const long long p = static_cast<long long>(w.size());
  auto norm = [p](long long i) { return ((i - 1) % p + p) % p; };  // 0-based
  const long long s0 = norm(s), t0 = norm(t);
  if (s0 <= t0) return Word(w.ranks().substr(s0, t0 - s0 + 1), w.genus());
  return Word(w.ranks().substr(s0) + w.ranks().substr(0, t0 + 1), w.genus());
}

Word concat(const Word& v, const Word& w) {
  if (v.genus() != w.genus())
    throw std::invalid_argument("cannot concatenate words of different genus");
  return Word(v.ranks() + w.ranks(), v.genus());
}

}  // namespace looplink
