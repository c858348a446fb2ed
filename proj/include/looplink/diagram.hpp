#pragma once

#include <map>
#include <optional>
#include <vector>

#include "looplink/word.hpp"

// Arc diagrams: the gates of a word (or a pair of words) on the boundary
// arc, their total order, boundary chains of partitions, the alternating
// gate form, linking numbers, and an independent chord-intersection oracle.

namespace looplink {

enum class WordTag { First, Second };

// An endpoint on the diagram boundary. Each occurrence i of a letter x
// contributes the forward gate labelled x and the backward gate labelled
// x^-1; occ is the 1-based position of the occurrence in its word.
struct Gate {
  WordTag tag = WordTag::First;
  long long occ = 0;
  Letter label;

  friend bool operator==(const Gate& a, const Gate& b) {
    return a.tag == b.tag && a.occ == b.occ && a.label == b.label;
  }
};

// Total order of gates along the boundary arc: distinct labels compare by
// letter rank; equal labels within one word by occurrence, ascending for
// generator labels and descending for inverted ones; equal labels across
// the two words put the first word's gate first exactly for generator
// labels, independent of occurrence. Returns -1, 0 or +1.
int gate_compare(const Gate& a, const Gate& b);

struct GateLess {
  bool operator()(const Gate& a, const Gate& b) const { return gate_compare(a, b) < 0; }
};

// Degree-0 chain: finitely supported integer weights on gates.
using Chain0 = std::map<Gate, int, GateLess>;

// The alternating form on gates, extended bilinearly.
int dot(const Chain0& a, const Chain0& b);

// The i-th partition of a word (1-based), identified with the oriented
// proper arc from the backward gate of occurrence i to the forward gate of
// occurrence i+1 (occurrences mod p).
struct Partition {
  WordTag tag = WordTag::First;
  long long index = 1;
};

// The arc diagram of one word or of an ordered pair of words: all gates in
// sorted order, with per-occurrence positions for the chord oracle and for
// rendering.
class Diagram {
public:
  explicit Diagram(Word w);
  Diagram(Word v, Word w);

  bool is_pair() const { return second_.has_value(); }
  const Word& word(WordTag tag) const;
  const std::vector<Gate>& gates() const { return gates_; }

  bool contains(const Gate& g) const;
  // gate_compare restricted to this diagram's gates; rejects foreign gates.
  int compare(const Gate& a, const Gate& b) const;

  // Position of a gate in the sorted boundary sequence.
  int position(const Gate& g) const;
  int forward_position(WordTag tag, long long occ) const;   // label = letter
  int backward_position(WordTag tag, long long occ) const;  // label = inverse

  // Boundary of a partition arc: +1 on its head gate, -1 on its tail gate.
  Chain0 boundary(const Partition& p) const;

  // Tail/head gates of the partition arc.
  Gate tail_gate(const Partition& p) const;
  Gate head_gate(const Partition& p) const;

private:
  void build();
  const Word& word_of(WordTag tag) const;
  void check_partition(const Partition& p) const;

  Word first_;
  std::optional<Word> second_;
  std::vector<Gate> gates_;
  std::vector<int> fwd_pos_[2];
  std::vector<int> bwd_pos_[2];
};

namespace detail {

// Gate form at the letter level, single-word diagram. Ranks are the gate
// labels; occurrences are 0-based here.
inline int gate_dot_single(std::size_t occ_a, unsigned rank_a, std::size_t occ_b,
                           unsigned rank_b) {
  if (rank_a != rank_b) return rank_a < rank_b ? 1 : -1;
  if (occ_a == occ_b) return 0;
  const bool generator = (rank_a & 2u) == 0;
  return ((occ_a < occ_b) == generator) ? 1 : -1;
}

// Gate form between a first-word gate and a second-word gate; independent
// of the occurrences.
inline int gate_dot_cross(unsigned rank_v, unsigned rank_w) {
  if (rank_v != rank_w) return rank_v < rank_w ? 1 : -1;
  return (rank_v & 2u) == 0 ? 1 : -1;
}

inline int half_of_even(int d) {
  if (d % 2 != 0)
    throw std::logic_error("gate form of partition boundaries is odd: ordering bug");
  int v = d / 2;
  if (v < -1 || v > 1)
    throw std::logic_error("linking number out of {-1,0,1}: ordering bug");
  return v;
}

// lk of partitions i < j (0-based) of one word given as rank bytes.
inline int lk_self_seq(const RankSeq& s, std::size_t i, std::size_t j) {
  const std::size_t p = s.size();
  auto rank = [&s](std::size_t m) { return static_cast<unsigned char>(s[m]); };
  const std::size_t i1 = (i + 1) % p, j1 = (j + 1) % p;
  const int d = gate_dot_single(i1, rank(i1), j1, rank(j1)) -
                gate_dot_single(i1, rank(i1), j, rank(j) ^ 2u) -
                gate_dot_single(i, rank(i) ^ 2u, j1, rank(j1)) +
                gate_dot_single(i, rank(i) ^ 2u, j, rank(j) ^ 2u);
  return half_of_even(d);
}

// lk of partition i of the first word with partition j of the second
// (0-based) on their pair diagram.
inline int lk_pair_seq(const RankSeq& v, std::size_t i, const RankSeq& w,
                       std::size_t j) {
  auto rv = [&v](std::size_t m) { return static_cast<unsigned char>(v[m]); };
  auto rw = [&w](std::size_t m) { return static_cast<unsigned char>(w[m]); };
  const std::size_t i1 = (i + 1) % v.size(), j1 = (j + 1) % w.size();
  const int d = gate_dot_cross(rv(i1), rw(j1)) - gate_dot_cross(rv(i1), rw(j) ^ 2u) -
                gate_dot_cross(rv(i) ^ 2u, rw(j1)) +
                gate_dot_cross(rv(i) ^ 2u, rw(j) ^ 2u);
  return half_of_even(d);
}

// Intersection sign of two oriented chords from their endpoint positions on
// the boundary: 0 when the endpoint pairs do not interleave, otherwise +1
// iff the cyclic order is (tail1, tail2, head1, head2).
int chord_sign_from_positions(int t1, int h1, int t2, int h2);

}  // namespace detail

// Linking number of partitions i and j of one word, 1 <= i < j <= p,
// computed by the letter-level rule without materializing the diagram.
int lk_self(const Word& w, long long i, long long j);

// Linking number of partition i of v with partition j of w on the pair
// diagram of (v, w).
int lk_pair(const Word& v, long long i, const Word& w, long long j);

// Independent oracle: the algebraic intersection number of the two
// partition arcs, read off the sorted gate sequence as a pure interleaving
// test. Rejects partitions sharing an endpoint gate.
int chord_sign_oracle(const Diagram& d, const Partition& p1, const Partition& p2);

}  // namespace looplink
