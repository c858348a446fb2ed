#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "looplink/word.hpp"

// Batch verification suites over large word sets. Every suite exists in two
// executions: a plain serial loop kept as the reference, and an OpenMP
// kernel over the same index space with a deterministic merge. Both produce
// identical reports for identical configurations.

namespace looplink {

enum class Execution { Serial, Parallel };

struct Failure {
  std::uint64_t index = 0;  // position in the suite's enumeration order
  std::string what;
};

struct SuiteReport {
  std::uint64_t items = 0;   // words, pairs or triples examined
  std::uint64_t checks = 0;  // individual assertions evaluated
  std::uint64_t failures = 0;
  std::optional<Failure> first_failure;

  bool passed() const { return failures == 0; }
  SuiteReport& merge(const SuiteReport& o);
};

// Deterministic 64-bit generator for the fuzz suites.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
  // Uniform in [0, n), n >= 1.
  std::uint64_t bounded(std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * n) >> 64);
  }

private:
  std::uint64_t state_;
};

// Independent stream for item `index` of phase `phase` under `seed`; makes
// every item reproducible regardless of scheduling.
SplitMix64 item_rng(std::uint64_t seed, std::uint64_t phase, std::uint64_t index);

// All 4g letters of the genus-g alphabet in rank order.
std::vector<Letter> alphabet(int genus);

// All words over the full alphabet with length in [min_len, max_len],
// length-major then lexicographic by rank.
std::vector<Word> enumerate_words(int genus, int min_len, int max_len);

Word random_word(SplitMix64& rng, int genus, int min_len, int max_len);

// Cross-validation of the linking number against the chord-intersection
// oracle, over an exhaustive sweep and a random sample. Each partition pair
// checks lk == oracle and lk in {-1,0,1}.
struct OracleScanConfig {
  int genus = 2;
  std::vector<Letter> letters;  // empty: full alphabet of `genus`
  int max_len = 8;              // exhaustive sweep of lengths 1..max_len; 0 disables
  std::uint64_t random_words = 0;
  int random_max_len = 12;
  int random_max_genus = 3;
  std::uint64_t seed = 0;
};
SuiteReport oracle_scan(const OracleScanConfig& cfg, Execution exec);

// Well-definedness fuzzing: the quotiented cobracket is unchanged under
// rotation, conjugation and cancelling-pair insertion; the bracket is
// unchanged under rotation and conjugation of either argument.
struct InvarianceScanConfig {
  int max_genus = 3;
  int max_len = 8;
  std::uint64_t iterations = 10000;
  std::uint64_t seed = 0;
};
SuiteReport invariance_scan(const InvarianceScanConfig& cfg, Execution exec);

// Lie bialgebra identities over an exhaustive word pool plus random
// triples: antisymmetry and compatibility on all pool pairs, co-Jacobi on
// all pool words, Jacobi on all pool triples (or a seeded sample when the
// cube is too large), and all four identities on random triples.
struct IdentityScanConfig {
  int genus = 1;
  int pool_max_len = 3;  // pool: all words of length 0..pool_max_len
  bool jacobi_exhaustive = true;
  std::uint64_t jacobi_samples = 30000;
  std::uint64_t random_triples = 1000;
  int random_max_len = 5;
  std::uint64_t seed = 0;
};
struct IdentityReport {
  SuiteReport antisymmetry;
  SuiteReport jacobi;
  SuiteReport cojacobi;
  SuiteReport compatibility;
  SuiteReport random_triples;

  bool passed() const {
    return antisymmetry.passed() && jacobi.passed() && cojacobi.passed() &&
           compatibility.passed() && random_triples.passed();
  }
  std::uint64_t total_checks() const {
    return antisymmetry.checks + jacobi.checks + cojacobi.checks +
           compatibility.checks + random_triples.checks;
  }
};
IdentityReport identity_scan(const IdentityScanConfig& cfg, Execution exec);

}  // namespace looplink
