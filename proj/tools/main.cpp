#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "looplink/bialgebra.hpp"
#include "looplink/diagram.hpp"
#include "looplink/render.hpp"
#include "looplink/scan.hpp"
#include "looplink/word.hpp"

// Command-line front end: parse, compute, check and export.
// Exit codes: 0 ok, 1 property-check failure, 2 usage or parse error.

namespace {

using namespace looplink;

void emit(const std::string& s) { std::fputs((s + "\n").c_str(), stdout); }

std::string word_or_one(const Word& w) {
  return w.empty() ? std::string("[1]") : format(w);
}

long long parse_index(const std::string& s) {
  std::size_t used = 0;
  long long v = std::stoll(s, &used);
  if (used != s.size()) throw std::invalid_argument("bad index: " + s);
  return v;
}

struct CheckOptions {
  std::string suite;
  std::uint64_t seed = 0;
  std::uint64_t iters = 0;  // 0: suite default
  int genus = 0;            // 0: suite default
  int max_len = 0;          // 0: suite default
  int pool_len = 2;
  bool exhaustive = false;
  bool serial = false;
};

int run_check(const CheckOptions& o) {
  const Execution exec = o.serial ? Execution::Serial : Execution::Parallel;
  SuiteReport rep;
  if (o.suite == "oracle") {
    OracleScanConfig cfg;
    cfg.genus = o.genus ? o.genus : 2;
    cfg.max_len = o.exhaustive ? (o.max_len ? o.max_len : 6) : 0;
    cfg.random_words = o.iters ? o.iters : 10000;
    cfg.random_max_len = o.max_len ? o.max_len : 12;
    cfg.random_max_genus = o.genus ? o.genus : 3;
    cfg.seed = o.seed;
    rep = oracle_scan(cfg, exec);
  } else if (o.suite == "bialgebra") {
    InvarianceScanConfig cfg;
    cfg.max_genus = o.genus ? o.genus : 3;
    cfg.max_len = o.max_len ? o.max_len : 8;
    cfg.iterations = o.iters ? o.iters : 1000;
    cfg.seed = o.seed;
    rep = invariance_scan(cfg, exec);
  } else if (o.suite == "identities") {
    IdentityScanConfig cfg;
    cfg.genus = o.genus ? o.genus : 1;
    cfg.pool_max_len = o.pool_len;
    const std::uint64_t n = enumerate_words(cfg.genus, 0, cfg.pool_max_len).size();
    cfg.jacobi_exhaustive = n * n * n <= 2000000ull;
    cfg.jacobi_samples = 100000;
    cfg.random_triples = o.iters ? o.iters : 200;
    cfg.random_max_len = o.max_len ? o.max_len : 5;
    cfg.seed = o.seed;
    const IdentityReport idr = identity_scan(cfg, exec);
    rep.items = idr.antisymmetry.items + idr.jacobi.items + idr.cojacobi.items +
                idr.compatibility.items + idr.random_triples.items;
    rep.checks = idr.total_checks();
    for (const SuiteReport* part :
         {&idr.antisymmetry, &idr.jacobi, &idr.cojacobi, &idr.compatibility,
          &idr.random_triples}) {
      rep.failures += part->failures;
      if (!rep.first_failure && part->first_failure)
        rep.first_failure = part->first_failure;
    }
  } else {
    std::fprintf(stderr,
                 "unknown check suite \"%s\" (oracle, bialgebra, identities)\n",
                 o.suite.c_str());
    return 2;
  }
  if (rep.passed()) {
    emit("PASS n=" + std::to_string(rep.checks));
    return 0;
  }
  emit("FAIL n=" + std::to_string(rep.checks) +
       " failures=" + std::to_string(rep.failures) +
       " first: " + rep.first_failure->what);
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Goldman bracket and Turaev cobracket of loops on a once-holed "
               "genus-g surface, computed from cyclic words"};
  app.require_subcommand(1);

  int genus = 1;
  bool json = false, wedge = false, raw = false, pair = false;
  bool want_dot = false, want_svg = false;
  std::vector<std::string> args;

  auto add_word_cmd = [&](const char* name, const char* desc, std::size_t min_args,
                          std::size_t max_args) {
    CLI::App* cmd = app.add_subcommand(name, desc);
    cmd->add_option("-g,--genus", genus, "genus of the surface")->required();
    cmd->add_option("args", args, "arguments")
        ->expected(static_cast<int>(min_args), static_cast<int>(max_args));
    return cmd;
  };

  CLI::App* cmd_reduce = add_word_cmd("reduce", "freely reduce a word", 1, 1);
  cmd_reduce->add_flag("--json", json);
  CLI::App* cmd_canon =
      add_word_cmd("canon", "canonical cyclic form of a word", 1, 1);
  cmd_canon->add_flag("--json", json);

  CLI::App* cmd_lk =
      add_word_cmd("lk", "linking number of partitions i and j (1-based)", 3, 4);
  cmd_lk->add_flag("--pair", pair, "two words: partitions of v and of w");
  cmd_lk->add_flag("--json", json);

  CLI::App* cmd_cobracket = add_word_cmd("cobracket", "cobracket of a word", 1, 1);
  cmd_cobracket->add_flag("--json", json);
  cmd_cobracket->add_flag("--wedge", wedge, "wedge presentation");
  cmd_cobracket->add_flag("--raw", raw, "skip the trivial-class quotient");

  CLI::App* cmd_bracket = add_word_cmd("bracket", "bracket of two words", 2, 2);
  cmd_bracket->add_flag("--json", json);

  CLI::App* cmd_diagram = add_word_cmd("diagram", "arc diagram export", 1, 2);
  cmd_diagram->add_flag("--pair", pair, "diagram of a pair of words");
  cmd_diagram->add_flag("--dot", want_dot, "GraphViz output (default)");
  cmd_diagram->add_flag("--svg", want_svg, "SVG output");

  CheckOptions chk;
  CLI::App* cmd_check = app.add_subcommand(
      "check", "run a verification suite (oracle, bialgebra, identities)");
  cmd_check->add_option("suite", chk.suite, "suite name")->required();
  cmd_check->add_option("--seed", chk.seed, "fuzz seed");
  cmd_check->add_option("--iters", chk.iters, "random sample size");
  cmd_check->add_option("-g,--genus", chk.genus, "genus bound");
  cmd_check->add_option("--max-len", chk.max_len, "word length bound");
  cmd_check->add_option("--pool-len", chk.pool_len,
                        "identities: exhaustive pool length bound");
  cmd_check->add_flag("--exhaustive", chk.exhaustive,
                      "oracle: sweep all words up to --max-len");
  cmd_check->add_flag("--serial", chk.serial, "use the serial reference kernels");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (cmd_reduce->parsed() || cmd_canon->parsed()) {
      const Word w = parse_word(args.at(0), genus);
      const Word out =
          cmd_reduce->parsed() ? reduce(w) : canonical_cyclic(w).word();
      if (json)
        emit("{\"word\":\"" + format(out) + "\"}");
      else
        emit(word_or_one(out));
    } else if (cmd_lk->parsed()) {
      int value = 0;
      if (pair) {
        if (args.size() != 4) throw std::invalid_argument("lk --pair needs V W I J");
        value = lk_pair(parse_word(args[0], genus), parse_index(args[2]),
                        parse_word(args[1], genus), parse_index(args[3]));
      } else {
        if (args.size() != 3) throw std::invalid_argument("lk needs WORD I J");
        value = lk_self(parse_word(args[0], genus), parse_index(args[1]),
                        parse_index(args[2]));
      }
      emit(json ? "{\"lk\":" + std::to_string(value) + "}" : std::to_string(value));
    } else if (cmd_cobracket->parsed()) {
      TensorComb t = cobracket_word(parse_word(args.at(0), genus));
      if (!raw) t = quotient_by_trivial(std::move(t));
      emit(json ? to_json(t) : format(t, wedge));
    } else if (cmd_bracket->parsed()) {
      const LinComb b = bracket_words(parse_word(args.at(0), genus),
                                      parse_word(args.at(1), genus));
      emit(json ? to_json(b) : format(b));
    } else if (cmd_diagram->parsed()) {
      if (pair != (args.size() == 2))
        throw std::invalid_argument("diagram takes one word, or two with --pair");
      const Diagram d =
          pair ? Diagram(parse_word(args[0], genus), parse_word(args[1], genus))
               : Diagram(parse_word(args[0], genus));
      std::fputs((want_svg ? to_svg(d) : to_dot(d)).c_str(), stdout);
    } else if (cmd_check->parsed()) {
      return run_check(chk);
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
