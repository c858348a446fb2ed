#include "looplink/scan.hpp"

#include <algorithm>
#include <array>

#include "looplink/bialgebra.hpp"
#include "looplink/diagram.hpp"

namespace looplink {

namespace {

constexpr std::size_t kMaxScanLen = 32;

struct ItemOutcome {
  std::uint32_t checks = 0;
  std::optional<std::string> failure;
};

// Runs `fn` over [0, n) and aggregates. The serial path is the reference;
// the parallel path must produce the identical report, which the
// commutative counters and the min-index failure rule guarantee.
template <class Fn>
SuiteReport run_indexed(std::uint64_t n, Execution exec, Fn&& fn) {
  SuiteReport rep;
  rep.items = n;
  if (exec == Execution::Serial) {
    for (std::uint64_t i = 0; i < n; ++i) {
      ItemOutcome r = fn(i);
      rep.checks += r.checks;
      if (r.failure) {
        ++rep.failures;
        if (!rep.first_failure) rep.first_failure = Failure{i, *r.failure};
      }
    }
    return rep;
  }
#pragma omp parallel
  {
    SuiteReport local;
#pragma omp for schedule(dynamic, 64) nowait
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
      ItemOutcome r = fn(static_cast<std::uint64_t>(i));
      local.checks += r.checks;
      if (r.failure) {
        ++local.failures;
        if (!local.first_failure ||
            static_cast<std::uint64_t>(i) < local.first_failure->index)
          local.first_failure = Failure{static_cast<std::uint64_t>(i), *r.failure};
      }
    }
#pragma omp critical
    rep.merge(local);
  }
  return rep;
}

template <class Fn>
ItemOutcome guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const std::exception& e) {
    return ItemOutcome{1, std::string("exception: ") + e.what()};
  }
}

// Gate layout of one word, positions only; the lean counterpart of Diagram
// used in the hot loop.
struct SingleLayout {
  std::array<int, kMaxScanLen> fwd{};
  std::array<int, kMaxScanLen> bwd{};

  void build(const detail::RankSeq& s) {
    const std::size_t p = s.size();
    std::array<Gate, 2 * kMaxScanLen> gates;
    for (std::size_t i = 0; i < p; ++i) {
      const Letter x = detail::at(s, i);
      gates[2 * i] = Gate{WordTag::First, static_cast<long long>(i) + 1, x};
      gates[2 * i + 1] =
          Gate{WordTag::First, static_cast<long long>(i) + 1, x.inverse()};
    }
    std::sort(gates.begin(), gates.begin() + 2 * p, GateLess{});
    for (std::size_t pos = 0; pos < 2 * p; ++pos) {
      const Gate& g = gates[pos];
      const std::size_t occ = static_cast<std::size_t>(g.occ - 1);
      if (g.label == detail::at(s, occ))
        fwd[occ] = static_cast<int>(pos);
      else
        bwd[occ] = static_cast<int>(pos);
    }
  }
};

// lk vs oracle on every partition pair of one word.
ItemOutcome check_word_against_oracle(const detail::RankSeq& s, int genus) {
  return guarded([&]() -> ItemOutcome {
    ItemOutcome out;
    const std::size_t p = s.size();
    SingleLayout layout;
    layout.build(s);
    for (std::size_t i = 0; i + 1 < p; ++i) {
      for (std::size_t j = i + 1; j < p; ++j) {
        const int lk = detail::lk_self_seq(s, i, j);
        const int oracle = detail::chord_sign_from_positions(
            layout.bwd[i], layout.fwd[(i + 1) % p], layout.bwd[j],
            layout.fwd[(j + 1) % p]);
        ++out.checks;
        if (lk != oracle || lk < -1 || lk > 1) {
          out.failure = "word \"" + format(Word(s, genus)) + "\" pair (" +
                        std::to_string(i + 1) + "," + std::to_string(j + 1) +
                        "): lk=" + std::to_string(lk) +
                        " oracle=" + std::to_string(oracle);
          return out;
        }
      }
    }
    return out;
  });
}

detail::RankSeq word_from_index(const std::vector<Letter>& letters, std::size_t len,
                                std::uint64_t idx) {
  detail::RankSeq s(len, '\0');
  const std::uint64_t base = letters.size();
  for (std::size_t k = len; k-- > 0;) {
    s[k] = detail::byte_of(letters[static_cast<std::size_t>(idx % base)]);
    idx /= base;
  }
  return s;
}

Word insert_cancelling_pair(const Word& w, std::size_t pos, Letter y) {
  detail::RankSeq s = w.ranks();
  detail::RankSeq pair;
  pair += detail::byte_of(y);
  pair += detail::byte_of(y.inverse());
  s.insert(pos, pair);
  return Word(std::move(s), w.genus());
}

Word conjugated(const Word& w, Letter x) {
  detail::RankSeq s;
  s += detail::byte_of(x.inverse());
  s += w.ranks();
  s += detail::byte_of(x);
  return Word(std::move(s), w.genus());
}

}  // namespace

SuiteReport& SuiteReport::merge(const SuiteReport& o) {
  checks += o.checks;
  failures += o.failures;
  if (o.first_failure &&
      (!first_failure || o.first_failure->index < first_failure->index))
    first_failure = o.first_failure;
  return *this;
}

SplitMix64 item_rng(std::uint64_t seed, std::uint64_t phase, std::uint64_t index) {
  SplitMix64 mixer(seed ^ (0xA24BAED4963EE407ull * (phase + 1)));
  const std::uint64_t a = mixer.next();
  SplitMix64 out(a ^ (0x9FB21C651E98DF25ull * (index + 1)));
  out.next();
  return out;
}

std::vector<Letter> alphabet(int genus) {
  std::vector<Letter> out;
  out.reserve(4 * static_cast<std::size_t>(genus));
  for (int r = 0; r < 4 * genus; ++r) out.push_back(Letter::from_rank(r));
  return out;
}

std::vector<Word> enumerate_words(int genus, int min_len, int max_len) {
  const std::vector<Letter> letters = alphabet(genus);
  std::vector<Word> out;
  for (int len = min_len; len <= max_len; ++len) {
    std::uint64_t count = 1;
    for (int k = 0; k < len; ++k) count *= letters.size();
    for (std::uint64_t idx = 0; idx < count; ++idx)
      out.emplace_back(word_from_index(letters, static_cast<std::size_t>(len), idx),
                       genus);
  }
  return out;
}

Word random_word(SplitMix64& rng, int genus, int min_len, int max_len) {
  const std::size_t len =
      static_cast<std::size_t>(min_len) +
      static_cast<std::size_t>(rng.bounded(
          static_cast<std::uint64_t>(max_len - min_len + 1)));
  detail::RankSeq s(len, '\0');
  for (std::size_t i = 0; i < len; ++i)
    s[i] = static_cast<char>(rng.bounded(4 * static_cast<std::uint64_t>(genus)));
  return Word(std::move(s), genus);
}

SuiteReport oracle_scan(const OracleScanConfig& cfg, Execution exec) {
  if (cfg.genus < 1 || cfg.max_len < 0 ||
      static_cast<std::size_t>(cfg.max_len) > kMaxScanLen ||
      static_cast<std::size_t>(cfg.random_max_len) + 2 > kMaxScanLen)
    throw std::invalid_argument("oracle_scan: bounds out of range");
  const std::vector<Letter> letters =
      cfg.letters.empty() ? alphabet(cfg.genus) : cfg.letters;
  for (Letter x : letters)
    if (x.index() > cfg.genus)
      throw std::invalid_argument("oracle_scan: letter exceeds genus");

  SuiteReport rep;
  for (int len = 1; len <= cfg.max_len; ++len) {
    std::uint64_t count = 1;
    for (int k = 0; k < len; ++k) {
      count *= letters.size();
      if (count > (1ull << 33))
        throw std::invalid_argument("oracle_scan: exhaustive sweep too large");
    }
    SuiteReport part =
        run_indexed(count, exec, [&](std::uint64_t idx) -> ItemOutcome {
          return check_word_against_oracle(
              word_from_index(letters, static_cast<std::size_t>(len), idx),
              cfg.genus);
        });
    rep.items += part.items;
    // Failure indices are only comparable within one length; keep the first.
    if (!rep.first_failure && part.first_failure) rep.first_failure = part.first_failure;
    rep.checks += part.checks;
    rep.failures += part.failures;
  }

  SuiteReport rnd =
      run_indexed(cfg.random_words, exec, [&](std::uint64_t idx) -> ItemOutcome {
        SplitMix64 rng = item_rng(cfg.seed, 0, idx);
        const int g = 1 + static_cast<int>(rng.bounded(
                              static_cast<std::uint64_t>(cfg.random_max_genus)));
        const Word w = random_word(rng, g, 1, cfg.random_max_len);
        return check_word_against_oracle(w.ranks(), g);
      });
  rep.items += rnd.items;
  rep.checks += rnd.checks;
  rep.failures += rnd.failures;
  if (!rep.first_failure && rnd.first_failure) rep.first_failure = rnd.first_failure;
  return rep;
}

SuiteReport invariance_scan(const InvarianceScanConfig& cfg, Execution exec) {
  if (cfg.max_genus < 1 || cfg.max_len < 1 ||
      static_cast<std::size_t>(cfg.max_len) + 2 > kMaxScanLen)
    throw std::invalid_argument("invariance_scan: bounds out of range");
  return run_indexed(cfg.iterations, exec, [&](std::uint64_t idx) -> ItemOutcome {
    return guarded([&]() -> ItemOutcome {
      ItemOutcome out;
      SplitMix64 rng = item_rng(cfg.seed, 1, idx);
      const int g =
          1 + static_cast<int>(rng.bounded(static_cast<std::uint64_t>(cfg.max_genus)));
      const Word w = random_word(rng, g, 1, cfg.max_len);
      const Word v = random_word(rng, g, 1, cfg.max_len);
      const std::vector<Letter> ab = alphabet(g);
      const Letter x = ab[static_cast<std::size_t>(rng.bounded(ab.size()))];
      const Letter y = ab[static_cast<std::size_t>(rng.bounded(ab.size()))];
      const std::uint64_t kw = rng.bounded(w.size() + 1);
      const std::uint64_t kv = rng.bounded(v.size() + 1);
      const std::size_t pos = static_cast<std::size_t>(rng.bounded(w.size() + 1));

      const TensorComb dw = quotient_by_trivial(cobracket_word(w));
      auto expect_tensor = [&](const Word& probe, const char* what) {
        ++out.checks;
        if (out.failure) return;
        if (quotient_by_trivial(cobracket_word(probe)) != dw)
          out.failure = std::string("cobracket not invariant under ") + what +
                        " on \"" + format(w) + "\"";
      };
      expect_tensor(rotate(w, static_cast<long long>(kw)), "rotation");
      expect_tensor(conjugated(w, x), "conjugation");
      expect_tensor(insert_cancelling_pair(w, pos, y), "cancelling-pair insertion");

      const LinComb bvw = bracket_words(v, w);
      auto expect_bracket = [&](const Word& a, const Word& b, const char* what) {
        ++out.checks;
        if (out.failure) return;
        if (bracket_words(a, b) != bvw)
          out.failure = std::string("bracket not invariant under ") + what +
                        " on (\"" + format(v) + "\", \"" + format(w) + "\")";
      };
      expect_bracket(rotate(v, static_cast<long long>(kv)), w, "rotation of the first argument");
      expect_bracket(v, rotate(w, static_cast<long long>(kw)), "rotation of the second argument");
      expect_bracket(conjugated(v, x), w, "conjugation of the first argument");
      expect_bracket(v, conjugated(w, x), "conjugation of the second argument");
      return out;
    });
  });
}

IdentityReport identity_scan(const IdentityScanConfig& cfg, Execution exec) {
  if (cfg.genus < 1 || cfg.pool_max_len < 0 || cfg.random_max_len < 1)
    throw std::invalid_argument("identity_scan: bounds out of range");
  const std::vector<Word> pool = enumerate_words(cfg.genus, 0, cfg.pool_max_len);
  const std::uint64_t n = pool.size();

  IdentityReport rep;
  rep.antisymmetry = run_indexed(n * n, exec, [&](std::uint64_t idx) -> ItemOutcome {
    return guarded([&]() -> ItemOutcome {
      const Word& v = pool[static_cast<std::size_t>(idx / n)];
      const Word& w = pool[static_cast<std::size_t>(idx % n)];
      if (check_antisymmetry(v, w)) return ItemOutcome{1, std::nullopt};
      return ItemOutcome{1, "antisymmetry fails on (\"" + format(v) + "\", \"" +
                                format(w) + "\")"};
    });
  });

  rep.compatibility = run_indexed(n * n, exec, [&](std::uint64_t idx) -> ItemOutcome {
    return guarded([&]() -> ItemOutcome {
      const Word& v = pool[static_cast<std::size_t>(idx / n)];
      const Word& w = pool[static_cast<std::size_t>(idx % n)];
      if (check_compatibility(v, w)) return ItemOutcome{1, std::nullopt};
      return ItemOutcome{1, "compatibility fails on (\"" + format(v) + "\", \"" +
                                format(w) + "\")"};
    });
  });

  rep.cojacobi = run_indexed(n, exec, [&](std::uint64_t idx) -> ItemOutcome {
    return guarded([&]() -> ItemOutcome {
      const Word& w = pool[static_cast<std::size_t>(idx)];
      if (check_cojacobi(w)) return ItemOutcome{1, std::nullopt};
      return ItemOutcome{1, "co-Jacobi fails on \"" + format(w) + "\""};
    });
  });

  const std::uint64_t jacobi_count =
      cfg.jacobi_exhaustive ? n * n * n : cfg.jacobi_samples;
  rep.jacobi = run_indexed(jacobi_count, exec, [&](std::uint64_t idx) -> ItemOutcome {
    return guarded([&]() -> ItemOutcome {
      std::size_t iu, iv, iw;
      if (cfg.jacobi_exhaustive) {
        iu = static_cast<std::size_t>(idx / (n * n));
        iv = static_cast<std::size_t>((idx / n) % n);
        iw = static_cast<std::size_t>(idx % n);
      } else {
        SplitMix64 rng = item_rng(cfg.seed, 2, idx);
        iu = static_cast<std::size_t>(rng.bounded(n));
        iv = static_cast<std::size_t>(rng.bounded(n));
        iw = static_cast<std::size_t>(rng.bounded(n));
      }
      if (check_jacobi(pool[iu], pool[iv], pool[iw]))
        return ItemOutcome{1, std::nullopt};
      return ItemOutcome{1, "Jacobi fails on (\"" + format(pool[iu]) + "\", \"" +
                                format(pool[iv]) + "\", \"" + format(pool[iw]) +
                                "\")"};
    });
  });

  rep.random_triples =
      run_indexed(cfg.random_triples, exec, [&](std::uint64_t idx) -> ItemOutcome {
        return guarded([&]() -> ItemOutcome {
          ItemOutcome out;
          SplitMix64 rng = item_rng(cfg.seed, 3, idx);
          const Word u = random_word(rng, cfg.genus, 1, cfg.random_max_len);
          const Word v = random_word(rng, cfg.genus, 1, cfg.random_max_len);
          const Word w = random_word(rng, cfg.genus, 1, cfg.random_max_len);
          auto expect = [&](bool ok, const char* what) {
            ++out.checks;
            if (!out.failure && !ok)
              out.failure = std::string(what) + " fails on (\"" + format(u) +
                            "\", \"" + format(v) + "\", \"" + format(w) + "\")";
          };
          expect(check_antisymmetry(u, v), "antisymmetry");
          expect(check_jacobi(u, v, w), "Jacobi");
          expect(check_cojacobi(u), "co-Jacobi");
          expect(check_compatibility(v, w), "compatibility");
          return out;
        });
      });

  return rep;
}

}  // namespace looplink
