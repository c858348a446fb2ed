#include "looplink/diagram.hpp"

#include <algorithm>
#include <array>

namespace looplink {

int gate_compare(const Gate& a, const Gate& b) {
  const int ra = a.label.rank(), rb = b.label.rank();
  if (ra != rb) return ra < rb ? -1 : 1;
  const bool generator = !a.label.inverted();
  if (a.tag == b.tag) {
    if (a.occ == b.occ) return 0;
    return ((a.occ < b.occ) == generator) ? -1 : 1;
  }
  const bool a_first = a.tag == WordTag::First;
  return (a_first == generator) ? -1 : 1;
}

int dot(const Chain0& a, const Chain0& b) {
  int total = 0;
  for (const auto& [ga, ca] : a)
    for (const auto& [gb, cb] : b) total += ca * cb * gate_compare(gb, ga);
  return total;
}

Diagram::Diagram(Word w) : first_(std::move(w)) { build(); }

Diagram::Diagram(Word v, Word w) : first_(std::move(v)), second_(std::move(w)) {
  if (first_.genus() != second_->genus())
    throw std::invalid_argument("pair diagram requires words of equal genus");
  build();
}

const Word& Diagram::word(WordTag tag) const {
  if (tag == WordTag::Second && !second_)
    throw std::invalid_argument("single-word diagram has no second word");
  return word_of(tag);
}

const Word& Diagram::word_of(WordTag tag) const {
  return tag == WordTag::First ? first_ : *second_;
}

void Diagram::build() {
  auto add_word = [this](const Word& w, WordTag tag) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      const Letter x = w.letter(i);
      gates_.push_back(Gate{tag, static_cast<long long>(i) + 1, x});
      gates_.push_back(Gate{tag, static_cast<long long>(i) + 1, x.inverse()});
    }
  };
  add_word(first_, WordTag::First);
  if (second_) add_word(*second_, WordTag::Second);
  std::sort(gates_.begin(), gates_.end(), GateLess{});

  fwd_pos_[0].assign(first_.size(), -1);
  bwd_pos_[0].assign(first_.size(), -1);
  if (second_) {
    fwd_pos_[1].assign(second_->size(), -1);
    bwd_pos_[1].assign(second_->size(), -1);
  }
  for (std::size_t pos = 0; pos < gates_.size(); ++pos) {
    const Gate& g = gates_[pos];
    const int t = g.tag == WordTag::First ? 0 : 1;
    const Letter x = word_of(g.tag).letter(static_cast<std::size_t>(g.occ - 1));
    if (g.label == x)
      fwd_pos_[t][static_cast<std::size_t>(g.occ - 1)] = static_cast<int>(pos);
    else
      bwd_pos_[t][static_cast<std::size_t>(g.occ - 1)] = static_cast<int>(pos);
  }
}

bool Diagram::contains(const Gate& g) const {
  auto it = std::lower_bound(gates_.begin(), gates_.end(), g, GateLess{});
  return it != gates_.end() && *it == g;
}

int Diagram::compare(const Gate& a, const Gate& b) const {
  if (!contains(a) || !contains(b))
    throw std::invalid_argument("gate does not belong to this diagram");
  return gate_compare(a, b);
}

int Diagram::position(const Gate& g) const {
  auto it = std::lower_bound(gates_.begin(), gates_.end(), g, GateLess{});
  if (it == gates_.end() || !(*it == g))
    throw std::invalid_argument("gate does not belong to this diagram");
  return static_cast<int>(it - gates_.begin());
}

int Diagram::forward_position(WordTag tag, long long occ) const {
  return fwd_pos_[tag == WordTag::First ? 0 : 1].at(static_cast<std::size_t>(occ - 1));
}

int Diagram::backward_position(WordTag tag, long long occ) const {
  return bwd_pos_[tag == WordTag::First ? 0 : 1].at(static_cast<std::size_t>(occ - 1));
}

void Diagram::check_partition(const Partition& p) const {
  if (p.tag == WordTag::Second && !second_)
    throw std::invalid_argument("single-word diagram has no second-word partitions");
  const Word& w = word_of(p.tag);
  if (w.empty()) throw std::invalid_argument("empty word has no partitions");
  if (p.index < 1 || p.index > static_cast<long long>(w.size()))
    throw std::invalid_argument("partition index out of range");
}

Gate Diagram::tail_gate(const Partition& p) const {
  check_partition(p);
  const Word& w = word_of(p.tag);
  return Gate{p.tag, p.index, w.letter(static_cast<std::size_t>(p.index - 1)).inverse()};
}

Gate Diagram::head_gate(const Partition& p) const {
  check_partition(p);
  const Word& w = word_of(p.tag);
  const long long next = p.index % static_cast<long long>(w.size()) + 1;
  return Gate{p.tag, next, w.letter(static_cast<std::size_t>(next - 1))};
}

Chain0 Diagram::boundary(const Partition& p) const {
  Chain0 c;
  c[head_gate(p)] += 1;
  c[tail_gate(p)] -= 1;
  return c;
}

namespace detail {

int chord_sign_from_positions(int t1, int h1, int t2, int h2) {
  const int lo = std::min(t1, h1), hi = std::max(t1, h1);
  const bool t2_inside = lo < t2 && t2 < hi;
  const bool h2_inside = lo < h2 && h2 < hi;
  if (t2_inside == h2_inside) return 0;
  // Interleaved: read the four endpoints in boundary order starting from
  // t1; sign is +1 exactly for the cyclic order (t1, t2, h1, h2).
  std::array<std::pair<int, int>, 4> pts{{{t1, 0}, {h1, 1}, {t2, 2}, {h2, 3}}};
  std::sort(pts.begin(), pts.end());
  int start = 0;
  while (pts[static_cast<std::size_t>(start)].second != 0) ++start;
  const int second = pts[static_cast<std::size_t>((start + 1) % 4)].second;
  return second == 2 ? 1 : -1;
}

}  // namespace detail

int lk_self(const Word& w, long long i, long long j) {
  const long long p = static_cast<long long>(w.size());
  if (p == 0) throw std::invalid_argument("lk of partitions of the empty word");
  if (i == j) throw std::invalid_argument("lk requires two distinct partitions");
  if (i < 1 || j < 1 || i > p || j > p || i > j)
    throw std::invalid_argument("lk requires 1 <= i < j <= length");
  return detail::lk_self_seq(w.ranks(), static_cast<std::size_t>(i - 1),
                             static_cast<std::size_t>(j - 1));
}

int lk_pair(const Word& v, long long i, const Word& w, long long j) {
  if (v.genus() != w.genus())
    throw std::invalid_argument("lk of words of different genus");
  if (v.empty() || w.empty())
    throw std::invalid_argument("lk of partitions of the empty word");
  if (i < 1 || i > static_cast<long long>(v.size()) || j < 1 ||
      j > static_cast<long long>(w.size()))
    throw std::invalid_argument("partition index out of range");
  return detail::lk_pair_seq(v.ranks(), static_cast<std::size_t>(i - 1), w.ranks(),
                             static_cast<std::size_t>(j - 1));
}

int chord_sign_oracle(const Diagram& d, const Partition& p1, const Partition& p2) {
  const Gate t1 = d.tail_gate(p1), h1 = d.head_gate(p1);
  const Gate t2 = d.tail_gate(p2), h2 = d.head_gate(p2);
  for (const Gate& a : {t1, h1})
    for (const Gate& b : {t2, h2})
      if (a == b)
        throw std::invalid_argument("partitions share an endpoint gate");
  return detail::chord_sign_from_positions(d.position(t1), d.position(h1),
                                           d.position(t2), d.position(h2));
}

}  // namespace looplink
