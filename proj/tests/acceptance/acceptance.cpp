// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Usage: wrembed-acceptance <path-to-wrembed-cli>

#include <array>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "dense_oracle.hpp"
#include "generators.hpp"
#include "machine_oracle.hpp"

#include "wrembed/embed_g.hpp"
#include "wrembed/orders.hpp"
#include "wrembed/reductions.hpp"
#include "wrembed/register_machine.hpp"
#include "wrembed/wreath_l.hpp"

using namespace wrembed;
using testing::Rng;

namespace {

  struct Outcome {
    bool        pass;
    std::string detail;
  };

  Alphabet const X = Alphabet::base();
  Alphabet const A = Alphabet::base('a');

  std::string cli_path;

  Outcome ac1_evidence_table() {
    std::size_t good = 0, total = 0;
    for (Index i = 1; i <= 6; ++i) {
      LElement const evidence = l_commutator(LElement::z(), LElement::b(i));
      Word const     x_i      = Word(X, {Letter{{'x', i}, 1}});
      for (long nu = -8; nu <= 8; ++nu) {
        Word const expected = nu == 0 ? x_i : Word(X);
        good += l_eval(evidence, nu) == expected;
        ++total;
      }
    }
    return {good == 102 && total == 102,
            std::to_string(good) + "/" + std::to_string(total) + " grid points"};
  }

  Outcome ac2_embedding() {
    FreeAbelianGroup const H;
    Rng                    rng(1001);
    std::size_t            mismatches = 0, trivial = 0, n = 2000;
    for (std::size_t k = 0; k < n; ++k) {
      Word const u = k % 2 == 0 ? testing::random_abelian_trivial_word(rng, 12, 8)
                                : testing::random_h_word(rng, 12, 8);
      bool const in_h = free_abelian_decide(u) == Triviality::trivial;
      bool const in_g = g_is_trivial(phi_encode(u), H) == Triviality::trivial;
      trivial += in_h;
      mismatches += in_h != in_g;
    }
    return {mismatches == 0 && trivial > 0 && trivial < n,
            std::to_string(n) + " words (" + std::to_string(trivial) + " trivial), "
                + std::to_string(mismatches) + " mismatches"};
  }

  Outcome ac3_homomorphism_and_axioms() {
    FreeAbelianGroup const H;
    Rng                    rng(1002);
    std::size_t            failures = 0;
    for (int k = 0; k < 1000; ++k) {
      Word const     u = testing::random_h_word(rng, 12, 8);
      Word const     v = testing::random_h_word(rng, 12, 8);
      GElement const r = g_mul(g_mul(phi_encode(u), phi_encode(v)), g_inv(phi_encode(concat(u, v))));
      failures += g_is_trivial(r, H) != Triviality::trivial;
    }
    for (int k = 0; k < 1000; ++k) {
      GElement const a = testing::random_gelement(rng, 10, 16, 4, 3);
      GElement const b = testing::random_gelement(rng, 10, 16, 4, 3);
      GElement const c = testing::random_gelement(rng, 10, 16, 4, 3);
      failures += !g_equal(g_mul(g_mul(a, b), c), g_mul(a, g_mul(b, c)), H);
      failures += g_is_trivial(g_mul(a, g_inv(a)), H) != Triviality::trivial;
      failures += g_is_trivial(g_mul(g_inv(a), a), H) != Triviality::trivial;
      failures += !g_equal(g_mul(a, GElement()), a, H);
    }
    return {failures == 0, "1000 pairs, 1000 triples, " + std::to_string(failures) + " failures"};
  }

  Outcome ac4_membership() {
    FreeAbelianGroup const H;
    Rng                    rng(1003);
    std::size_t            failures = 0;
    for (int k = 0; k < 500; ++k) {
      Word const     u = testing::random_h_word(rng, 12, 8);
      GElement const a = phi_encode(u);
      if (g_in_image(a, H) != Membership::member) {
        ++failures;
        continue;
      }
      failures += free_abelian_decide(concat(phi_decode(a, H), invert(u))) != Triviality::trivial;
    }
    std::size_t rejected = 0;
    for (long k : {-7, -2, -1, 1, 2, 3, 64}) {
      rejected += g_in_image(GElement::s(k), H) == Membership::nonmember;
    }
    rejected += g_in_image(GElement::f(), H) == Membership::nonmember;
    rejected += g_in_image(g_conjugate(phi_encode(Word(X, {Letter{{'x', 1}, 1}})), GElement::s()), H)
                == Membership::nonmember;
    return {failures == 0 && rejected == 9,
            "500 roundtrips, " + std::to_string(failures) + " failures, " + std::to_string(rejected)
                + "/9 non-members rejected"};
  }

  Outcome ac5_derived_length() {
    FreeAbelianGroup const H;
    Rng                    rng(1004);
    auto small = [&] { return testing::random_gelement(rng, 3, 3, 2, 2); };
    auto d1    = [&] { return g_commutator(small(), small()); };
    std::size_t nontrivial_depth3 = 0;
    for (int k = 0; k < 200; ++k) {
      GElement const c = g_commutator(g_commutator(d1(), d1()), g_commutator(d1(), d1()));
      nontrivial_depth3 += g_is_trivial(c, H) != Triviality::trivial;
    }
    // search depth-2 commutators of conjugates of Φ-generators and of f, s
    std::vector<GElement> pool{GElement::f(), GElement::s()};
    for (Index i = 1; i <= 2; ++i) {
      for (long j = -1; j <= 1; ++j) {
        pool.push_back(g_conjugate(phi_generator(i), GElement::s(j)));
      }
    }
    std::optional<GElement> witness;
    for (std::size_t a = 0; a < pool.size() && !witness; ++a) {
      for (std::size_t b = 0; b < pool.size() && !witness; ++b) {
        for (std::size_t c = 0; c < pool.size() && !witness; ++c) {
          for (std::size_t d = 0; d < pool.size() && !witness; ++d) {
            GElement const w = g_commutator(g_commutator(pool[a], pool[b]), g_commutator(pool[c], pool[d]));
            if (g_is_trivial(w, H) == Triviality::nontrivial) {
              witness = w;
            }
          }
        }
      }
    }
    bool const confirmed = witness && !testing::dense_g_trivial(g_to_word(*witness), 256, 64);
    return {nontrivial_depth3 == 0 && confirmed,
            "200 depth-3 commutators, " + std::to_string(nontrivial_depth3) + " nontrivial; depth-2 witness "
                + (witness ? g_serialize(*witness) + (confirmed ? " (confirmed by dense scan)" : " (NOT confirmed)")
                           : std::string("not found"))};
  }

  Outcome ac6_order() {
    auto const          H     = std::make_shared<FreeAbelianGroup>();
    auto const          H_ord = std::make_shared<LexOrder>();
    EmbeddedGroup const wp(H);
    LiftedGOrder const  order(H_ord, H);
    Rng                 rng(1005);
    auto less   = [&](GElement const& a, GElement const& b) { return g_less(a, b, *H_ord, *H); };
    auto random = [&] { return testing::random_gelement(rng, 6, 6, 2, 1); };
    std::size_t totality = 0, transitivity = 0, invariance = 0, continuation = 0;
    for (int k = 0; k < 1000; ++k) {
      GElement const a = random(), b = random(), c = random();
      int const      count = int(less(a, b)) + int(less(b, a)) + int(g_equal(a, b, *H));
      totality += count != 1;
      if (less(a, b) && less(b, c) && !less(a, c)) {
        ++transitivity;
      }
    }
    for (int k = 0; k < 1000; ++k) {
      GElement a = random(), b = random();
      GElement const g = random(), h = random();
      if (less(b, a)) {
        std::swap(a, b);
      }
      if (less(a, b) && !less(g_mul(g_mul(g, a), h), g_mul(g_mul(g, b), h))) {
        ++invariance;
      }
    }
    for (int k = 0; k < 500; ++k) {
      Word const u = testing::random_h_word(rng, 12, 8);
      Word const v = testing::random_h_word(rng, 12, 8);
      continuation += lex_less(u, v) != less(phi_encode(u), phi_encode(v));
    }
    std::vector<Word> sample;
    for (int k = 0; k < 100; ++k) {
      sample.push_back(g_to_word(random()));
    }
    auto const report = check_p_order(sample, non_strict(order, wp), wp, 3);
    std::size_t const violations = totality + transitivity + invariance + continuation;
    return {violations == 0 && report.ok(),
            "totality " + std::to_string(totality) + ", transitivity " + std::to_string(transitivity)
                + ", bi-invariance " + std::to_string(invariance) + ", continuation "
                + std::to_string(continuation) + ", p-order report " + std::to_string(report.violations.size())};
  }

  Outcome ac7_insep() {
    std::size_t mismatches = 0, trivial = 0, n = 0;
    for (auto const& kind : {"odd-even", "mod-three"}) {
      auto const pair = mock_pair(kind);
      Rng        rng(1006);
      for (int k = 0; k < 1000; ++k, ++n) {
        Word const w = k % 2 == 0 ? testing::random_insep_word(rng, pair, 10, 40)
                                  : testing::random_h_word(rng, 40, 20, 'a');
        Triviality const expected = insep_bruteforce(w, pair);
        trivial += expected == Triviality::trivial;
        mismatches += insep_decide(w, pair) != expected;
      }
    }
    return {mismatches == 0 && trivial > 0,
            std::to_string(n) + " words over two mock pairs (" + std::to_string(trivial) + " trivial), "
                + std::to_string(mismatches) + " mismatches"};
  }

  Outcome ac8_separator() {
    auto const  pair   = mock_pair("odd-even");
    auto const  report = theorem1_demo(pair, 50);
    std::size_t n_out = 0, m_in = 0;
    for (auto const& v : report.verdicts) {
      auto const pos = pair.classify(v.n);
      if (pos->side == PairPosition::Side::n_side) {
        n_out += !v.in_L;
      } else {
        m_in += v.in_L;
      }
    }
    return {report.verdicts.size() == 50 && n_out == 0 && m_in == 0 && report.ok(),
            "n = 1..50: N-side outside L " + std::to_string(n_out) + ", M-side inside L " + std::to_string(m_in)
                + ", reported violations " + std::to_string(report.violations.size())};
  }

  Outcome ac9_probe() {
    auto const  set     = mock_re_set();
    std::size_t unsound = 0, regressions = 0, nontrivial_cases = 0;
    for (Index n = 2; nontrivial_cases < 500; n += 2) {
      ++nontrivial_cases;
      for (std::uint64_t fuel : {0, 1, 16, 256}) {
        unsound += theorem2_probe(n, set, fuel).report.verdict == SemiVerdict::trivial;
      }
    }
    for (Index n = 1; n <= 200; n += 2) {
      bool seen = false;
      for (std::uint64_t fuel = 1; fuel <= 1024; fuel *= 2) {
        bool const t = theorem2_probe(n, set, fuel).report.verdict == SemiVerdict::trivial;
        regressions += seen && !t;
        seen = seen || t;
      }
      regressions += !seen;
    }
    auto const  enumerator = std::make_shared<HaltingEnumerator>();
    auto const  pair       = halting_pair(enumerator);
    std::size_t confirmed  = 0;
    for (Index n = 1; n <= 19; n += 2) {
      bool const halts = testing::simulate(decode_program(n), 1000) == testing::Fate::halts;
      confirmed += halts && theorem2_probe(n, pair.enum_n, 10000).report.verdict == SemiVerdict::trivial;
    }
    return {unsound == 0 && regressions == 0 && confirmed >= 10,
            std::to_string(nontrivial_cases) + " nontrivial probes, " + std::to_string(unsound)
                + " unsound; monotonicity regressions " + std::to_string(regressions) + "; halting indices confirmed "
                + std::to_string(confirmed) + "/10"};
  }

  struct Run {
    int         status;
    std::string output;
  };

  Run run(std::string const& args) {
    std::string const cmd  = "\"" + cli_path + "\" " + args + " 2>&1";
    FILE*             pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) {
      return {-1, ""};
    }
    std::string           out;
    std::array<char, 4096> buf;
    std::size_t           n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
      out.append(buf.data(), n);
    }
    return {pclose(pipe), out};
  }

  Outcome ac10_determinism() {
    if (cli_path.empty()) {
      return {false, "no CLI path given"};
    }
    std::vector<std::string> const commands{
        "normalize --group G \"f s f s^-1\"",
        "normalize --group L \"z b1 z^-1 b1^-1\"",
        "trivial --base free-abelian \"f s f^-1 s^-1\"",
        "trivial --base insep:mock-odd-even \"f s f s^-1 f^-1 s f^-1 s^-1\"",
        "member --base free-abelian \"f s f s^-1 f^-1 s f^-1 s^-1\"",
        "compare --base free-abelian \"f\" \"s\"",
        "encode 1",
        "encode \"x3 x1^-2\"",
        "decode --base free-abelian \"f s f s^-1 f^-1 s f^-1 s^-1\"",
        "demo theorem1 --pair mock-odd-even --max-n 12",
        "demo theorem2 --set mock --fuel 16 --max-n 12",
        "--output structured trivial --base re:mock --fuel 3 \"f s^2 f^-1 s^-2\"",
        "--output structured demo theorem1 --pair mock-mod-three --max-n 6",
    };
    std::size_t differing = 0, broken = 0;
    for (auto const& c : commands) {
      Run const first = run(c);
      broken += first.output.empty();
      for (int k = 0; k < 2; ++k) {
        Run const again = run(c);
        differing += again.status != first.status || again.output != first.output;
      }
    }
    FreeAbelianGroup const H;
    Rng                    rng(1010);
    std::size_t            support_mismatches = 0;
    for (int k = 0; k < 200; ++k) {
      GElement const a        = testing::random_gelement(rng, 6, 8, 3, 0);
      auto const     expected = testing::dense_g_min_support(g_to_word(a), 4096, 24);
      auto const     got      = g_min_support(a, H);
      support_mismatches += got.has_value() != expected.has_value() || (got && *got != Int(*expected));
    }
    return {differing == 0 && broken == 0 && support_mismatches == 0,
            std::to_string(commands.size()) + " commands x3 runs, " + std::to_string(differing)
                + " differing, " + std::to_string(broken) + " empty; min-support mismatches "
                + std::to_string(support_mismatches) + "/200"};
  }

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) {
    cli_path = argv[1];
  }
  std::vector<std::pair<std::string, std::function<Outcome()>>> const criteria{
      {"AC1 commutator evaluation table", ac1_evidence_table},
      {"AC2 embedding preserves the word problem", ac2_embedding},
      {"AC3 homomorphism and group axioms", ac3_homomorphism_and_axioms},
      {"AC4 membership and decoding", ac4_membership},
      {"AC5 derived length 3", ac5_derived_length},
      {"AC6 lifted order", ac6_order},
      {"AC7 relator removal vs basis oracle", ac7_insep},
      {"AC8 separator end-to-end", ac8_separator},
      {"AC9 probe soundness and monotonicity", ac9_probe},
      {"AC10 determinism and minimum support", ac10_determinism},
  };
  int failed = 0;
  for (auto const& [name, check] : criteria) {
    Outcome result;
    try {
      result = check();
    } catch (std::exception const& e) {
      result = {false, std::string("exception: ") + e.what()};
    }
    failed += !result.pass;
    std::cout << (result.pass ? "PASS " : "FAIL ") << name << ": " << result.detail << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
