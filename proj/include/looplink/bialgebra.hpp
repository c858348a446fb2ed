#pragma once

#include <map>
#include <string>
#include <tuple>
#include <utility>

#include "looplink/diagram.hpp"
#include "looplink/word.hpp"

// Exact integer linear algebra over conjugacy classes, the combinatorial
// cobracket and bracket, the quotient by the trivial class, and the Lie
// bialgebra identity checkers.

namespace looplink {

// Finitely supported map CyclicWord -> Z. Keys are canonical; zero
// coefficients are never stored.
class LinComb {
public:
  using Terms = std::map<CyclicWord, long long>;

  explicit LinComb(int genus = 1) : genus_(genus) {}
  static LinComb basis(const CyclicWord& w, long long c = 1) {
    LinComb out(w.genus());
    out.add(w, c);
    return out;
  }

  int genus() const { return genus_; }
  const Terms& terms() const { return terms_; }
  bool zero() const { return terms_.empty(); }
  long long coeff(const CyclicWord& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? 0 : it->second;
  }

  void add(const CyclicWord& w, long long c);
  LinComb& operator+=(const LinComb& o);
  LinComb& operator-=(const LinComb& o);
  LinComb& operator*=(long long c);

  friend bool operator==(const LinComb& a, const LinComb& b) {
    return a.genus_ == b.genus_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const LinComb& a, const LinComb& b) { return !(a == b); }

private:
  Terms terms_;
  int genus_;
};

// Finitely supported map (CyclicWord, CyclicWord) -> Z.
class TensorComb {
public:
  using Key = std::pair<CyclicWord, CyclicWord>;
  using Terms = std::map<Key, long long>;

  explicit TensorComb(int genus = 1) : genus_(genus) {}

  int genus() const { return genus_; }
  const Terms& terms() const { return terms_; }
  bool zero() const { return terms_.empty(); }
  long long coeff(const CyclicWord& l, const CyclicWord& r) const {
    auto it = terms_.find(Key(l, r));
    return it == terms_.end() ? 0 : it->second;
  }

  void add(const CyclicWord& l, const CyclicWord& r, long long c);
  TensorComb& operator+=(const TensorComb& o);
  TensorComb& operator-=(const TensorComb& o);

  // Swap involution u (x) v -> v (x) u.
  TensorComb tau() const;
  // True iff t == -tau(t).
  bool antisymmetric() const;

  friend bool operator==(const TensorComb& a, const TensorComb& b) {
    return a.genus_ == b.genus_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const TensorComb& a, const TensorComb& b) { return !(a == b); }

private:
  Terms terms_;
  int genus_;
};

// Triple tensors, used by the co-Jacobi checker.
class TripleComb {
public:
  using Key = std::tuple<CyclicWord, CyclicWord, CyclicWord>;
  using Terms = std::map<Key, long long>;

  explicit TripleComb(int genus = 1) : genus_(genus) {}

  const Terms& terms() const { return terms_; }
  bool zero() const { return terms_.empty(); }
  void add(const Key& k, long long c);
  TripleComb& operator+=(const TripleComb& o);
  // Cyclic rotation x (x) y (x) z -> z (x) x (x) y.
  TripleComb rho() const;

private:
  Terms terms_;
  int genus_;
};

// The cobracket of one word: the signed sum over partition pairs (i, j),
// i < j, of the split classes w_{i+1,j} and w_{j+1,i} weighted by their
// linking number. Unquotiented; zero for words of length <= 1.
TensorComb cobracket_word(const Word& w);

// Drops every term in which either tensor factor is the trivial class.
TensorComb quotient_by_trivial(TensorComb t);

// The bracket of two words: the signed sum over partition pairs of the
// classes of the rotated concatenations nu^i(v) nu^j(w). Values live in the
// full module; the trivial class is kept.
LinComb bracket_words(const Word& v, const Word& w);

// Linear extensions over basis classes, using the canonical representative
// of each class. The cobracket is reported in the quotient.
TensorComb cobracket(const LinComb& x);
LinComb bracket(const LinComb& x, const LinComb& y);

// Well-definedness probes on the generating operations.
bool check_rotation_invariance(const Word& w);
bool check_conjugation_invariance(const Word& w, Letter x);

// Lie bialgebra identities, evaluated exactly.
bool check_antisymmetry(const Word& v, const Word& w);
bool check_jacobi(const Word& u, const Word& v, const Word& w);
bool check_cojacobi(const Word& w);
bool check_compatibility(const Word& v, const Word& w);

// Canonical text forms: terms sorted by canonical word, "±c·[word]" joined
// by " + "; the trivial class prints as "[1]"; the zero combination as "0".
std::string format(const LinComb& x);
std::string format(const TensorComb& t, bool wedge = false);

// JSON forms: {"terms":[{"coeff":c,"word":w}...]} and the tensor analog
// with "left"/"right". Parsing needs the genus the words were written in.
std::string to_json(const LinComb& x);
std::string to_json(const TensorComb& t);
LinComb lincomb_from_json(const std::string& text, int genus);
TensorComb tensorcomb_from_json(const std::string& text, int genus);

}  // namespace looplink
