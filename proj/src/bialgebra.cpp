#include "looplink/bialgebra.hpp"

#include <json.hpp>

namespace looplink {

namespace {

void check_same_genus(int a, int b, const char* what) {
  if (a != b) throw std::invalid_argument(std::string(what) + ": genus mismatch");
}

Word one_letter_word(Letter x, int genus) {
  detail::RankSeq s(1, detail::byte_of(x));
  return Word(std::move(s), genus);
}

}  // namespace

void LinComb::add(const CyclicWord& w, long long c) {
  if (c == 0) return;
  check_same_genus(genus_, w.genus(), "LinComb::add");
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted && (it->second += c) == 0) terms_.erase(it);
}

LinComb& LinComb::operator+=(const LinComb& o) {
  check_same_genus(genus_, o.genus_, "LinComb::+=");
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

LinComb& LinComb::operator-=(const LinComb& o) {
  check_same_genus(genus_, o.genus_, "LinComb::-=");
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

LinComb& LinComb::operator*=(long long c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, coeff] : terms_) coeff *= c;
  return *this;
}

void TensorComb::add(const CyclicWord& l, const CyclicWord& r, long long c) {
  if (c == 0) return;
  check_same_genus(genus_, l.genus(), "TensorComb::add");
  check_same_genus(genus_, r.genus(), "TensorComb::add");
  auto [it, inserted] = terms_.emplace(Key(l, r), c);
  if (!inserted && (it->second += c) == 0) terms_.erase(it);
}

TensorComb& TensorComb::operator+=(const TensorComb& o) {
  check_same_genus(genus_, o.genus_, "TensorComb::+=");
  for (const auto& [k, c] : o.terms_) add(k.first, k.second, c);
  return *this;
}

TensorComb& TensorComb::operator-=(const TensorComb& o) {
  check_same_genus(genus_, o.genus_, "TensorComb::-=");
  for (const auto& [k, c] : o.terms_) add(k.first, k.second, -c);
  return *this;
}

TensorComb TensorComb::tau() const {
  TensorComb out(genus_);
  for (const auto& [k, c] : terms_) out.add(k.second, k.first, c);
  return out;
}

bool TensorComb::antisymmetric() const {
  for (const auto& [k, c] : terms_)
    if (coeff(k.second, k.first) != -c) return false;
  return true;
}

void TripleComb::add(const Key& k, long long c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(k, c);
  if (!inserted && (it->second += c) == 0) terms_.erase(it);
}

TripleComb& TripleComb::operator+=(const TripleComb& o) {
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

TripleComb TripleComb::rho() const {
  TripleComb out(genus_);
  for (const auto& [k, c] : terms_)
    out.add(Key(std::get<2>(k), std::get<0>(k), std::get<1>(k)), c);
  return out;
}

TensorComb cobracket_word(const Word& w) {
  TensorComb out(w.genus());
  const long long p = static_cast<long long>(w.size());
  if (p <= 1) return out;
  for (long long i = 1; i < p; ++i) {
    for (long long j = i + 1; j <= p; ++j) {
      const int lk = detail::lk_self_seq(w.ranks(), static_cast<std::size_t>(i - 1),
                                         static_cast<std::size_t>(j - 1));
      if (lk == 0) continue;
      const CyclicWord left = canonical_cyclic(subword(w, i + 1, j));
      const CyclicWord right = canonical_cyclic(subword(w, j + 1, i));
      out.add(left, right, lk);
      out.add(right, left, -lk);
    }
  }
  return out;
}

TensorComb quotient_by_trivial(TensorComb t) {
  TensorComb out(t.genus());
  for (const auto& [k, c] : t.terms())
    if (!k.first.trivial() && !k.second.trivial()) out.add(k.first, k.second, c);
  return out;
}

LinComb bracket_words(const Word& v, const Word& w) {
  check_same_genus(v.genus(), w.genus(), "bracket");
  LinComb out(v.genus());
  const long long p = static_cast<long long>(v.size());
  const long long q = static_cast<long long>(w.size());
  for (long long i = 1; i <= p; ++i) {
    for (long long j = 1; j <= q; ++j) {
      const int lk = detail::lk_pair_seq(v.ranks(), static_cast<std::size_t>(i - 1),
                                         w.ranks(), static_cast<std::size_t>(j - 1));
      if (lk == 0) continue;
      out.add(canonical_cyclic(concat(rotate(v, i), rotate(w, j))), lk);
    }
  }
  return out;
}

TensorComb cobracket(const LinComb& x) {
  TensorComb out(x.genus());
  for (const auto& [cw, c] : x.terms()) {
    TensorComb t = quotient_by_trivial(cobracket_word(cw.word()));
    for (const auto& [k, d] : t.terms()) out.add(k.first, k.second, c * d);
  }
  return out;
}

LinComb bracket(const LinComb& x, const LinComb& y) {
  check_same_genus(x.genus(), y.genus(), "bracket");
  LinComb out(x.genus());
  for (const auto& [vw, cv] : x.terms()) {
    for (const auto& [ww, cw] : y.terms()) {
      LinComb b = bracket_words(vw.word(), ww.word());
      b *= cv * cw;
      out += b;
    }
  }
  return out;
}

bool check_rotation_invariance(const Word& w) {
  return quotient_by_trivial(cobracket_word(rotate(w, 1))) ==
         quotient_by_trivial(cobracket_word(w));
}

bool check_conjugation_invariance(const Word& w, Letter x) {
  const Word conj =
      concat(concat(one_letter_word(x.inverse(), w.genus()), w),
             one_letter_word(x, w.genus()));
  return quotient_by_trivial(cobracket_word(conj)) ==
         quotient_by_trivial(cobracket_word(w));
}

bool check_antisymmetry(const Word& v, const Word& w) {
  LinComb s = bracket_words(v, w);
  s += bracket_words(w, v);
  return s.zero();
}

bool check_jacobi(const Word& u, const Word& v, const Word& w) {
  const LinComb lu = LinComb::basis(canonical_cyclic(u));
  const LinComb lv = LinComb::basis(canonical_cyclic(v));
  const LinComb lw = LinComb::basis(canonical_cyclic(w));
  LinComb s = bracket(bracket(lu, lv), lw);
  s += bracket(bracket(lv, lw), lu);
  s += bracket(bracket(lw, lu), lv);
  return s.zero();
}

bool check_cojacobi(const Word& w) {
  const TensorComb d = quotient_by_trivial(cobracket_word(w));
  TripleComb t(w.genus());
  for (const auto& [k, c] : d.terms()) {
    const TensorComb dl = quotient_by_trivial(cobracket_word(k.first.word()));
    for (const auto& [k2, c2] : dl.terms())
      t.add(TripleComb::Key(k2.first, k2.second, k.second), c * c2);
  }
  TripleComb sum = t;
  TripleComb r = t.rho();
  sum += r;
  sum += r.rho();
  return sum.zero();
}

namespace {

// a . (u (x) z) = <a,u> (x) z + u (x) <a,z>, extended over the tensor.
TensorComb act(const Word& a, const TensorComb& t) {
  TensorComb out(t.genus());
  for (const auto& [k, c] : t.terms()) {
    const LinComb left = bracket_words(a, k.first.word());
    for (const auto& [m, e] : left.terms()) out.add(m, k.second, c * e);
    const LinComb right = bracket_words(a, k.second.word());
    for (const auto& [m, e] : right.terms()) out.add(k.first, m, c * e);
  }
  return out;
}

}  // namespace

bool check_compatibility(const Word& v, const Word& w) {
  const TensorComb lhs = cobracket(bracket_words(v, w));
  TensorComb rhs = act(v, quotient_by_trivial(cobracket_word(w)));
  rhs -= act(w, quotient_by_trivial(cobracket_word(v)));
  return lhs == quotient_by_trivial(std::move(rhs));
}

namespace {

std::string bracketed(const CyclicWord& w) {
  if (w.trivial()) return "[1]";
  return "[" + format(w) + "]";
}

std::string signed_coeff(long long c) {
  return (c >= 0 ? "+" : "") + std::to_string(c);
}

}  // namespace

std::string format(const LinComb& x) {
  if (x.zero()) return "0";
  std::string out;
  for (const auto& [w, c] : x.terms()) {
    if (!out.empty()) out += " + ";
    out += signed_coeff(c) + "·" + bracketed(w);
  }
  return out;
}

std::string format(const TensorComb& t, bool wedge) {
  if (t.zero()) return "0";
  std::string out;
  if (!wedge) {
    for (const auto& [k, c] : t.terms()) {
      if (!out.empty()) out += " + ";
      out += signed_coeff(c) + "·" + bracketed(k.first) + "⊗" +
             bracketed(k.second);
    }
    return out;
  }
  if (!t.antisymmetric())
    throw std::invalid_argument("wedge form requires an antisymmetric tensor");
  for (const auto& [k, c] : t.terms()) {
    if (!(k.first < k.second)) continue;  // each pair listed once
    if (!out.empty()) out += " + ";
    out += signed_coeff(c) + "·" + bracketed(k.first) + "∧" +
           bracketed(k.second);
  }
  return out.empty() ? "0" : out;
}

std::string to_json(const LinComb& x) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [w, c] : x.terms())
    terms.push_back({{"coeff", c}, {"word", format(w)}});
  return nlohmann::json{{"terms", terms}}.dump();
}

std::string to_json(const TensorComb& t) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [k, c] : t.terms())
    terms.push_back(
        {{"coeff", c}, {"left", format(k.first)}, {"right", format(k.second)}});
  return nlohmann::json{{"terms", terms}}.dump();
}

LinComb lincomb_from_json(const std::string& text, int genus) {
  const auto j = nlohmann::json::parse(text);
  LinComb out(genus);
  for (const auto& term : j.at("terms"))
    out.add(canonical_cyclic(parse_word(term.at("word").get<std::string>(), genus)),
            term.at("coeff").get<long long>());
  return out;
}

TensorComb tensorcomb_from_json(const std::string& text, int genus) {
  const auto j = nlohmann::json::parse(text);
  TensorComb out(genus);
  for (const auto& term : j.at("terms"))
    out.add(canonical_cyclic(parse_word(term.at("left").get<std::string>(), genus)),
            canonical_cyclic(parse_word(term.at("right").get<std::string>(), genus)),
            term.at("coeff").get<long long>());
  return out;
}

}  // namespace looplink
