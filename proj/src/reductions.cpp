#include "wrembed/reductions.hpp"

#include <algorithm>

namespace wrembed {

  namespace {
    Cmp compare_with_one(OrderOracle const& order, Word const& u) {
      Word const one(u.alphabet());
      if (order.less(u, one)) {
        return Cmp::lt;
      }
      if (order.less(one, u)) {
        return Cmp::gt;
      }
      return Cmp::eq;
    }
  }  // namespace

  SeparatorVerdict separator(Index n, OrderOracle const& g_order) {
    if (n < 1) {
      throw PreconditionError("separator indices start at 1");
    }
    Cmp const odd  = compare_with_one(g_order, phi_word(2 * n - 1));
    Cmp const even = compare_with_one(g_order, phi_word(2 * n));
    // u ⪯ 1 iff not (1 < u); 1 ⪯ u iff not (u < 1)
    bool const both_below = odd != Cmp::gt && even != Cmp::gt;
    bool const both_above = odd != Cmp::lt && even != Cmp::lt;
    return {n, both_below || both_above, odd, even};
  }

  SeparatorReport theorem1_run(EnumeratedPair const& pair,
                               OrderOracle const&    g_order,
                               GroupOracle const&    g_wp,
                               Index                 max_n,
                               std::size_t           p_order_sample) {
    SeparatorReport report;
    report.pair_name = pair.name;
    report.max_n     = max_n;
    for (Index n = 1; n <= max_n; ++n) {
      SeparatorVerdict v    = separator(n, g_order);
      char             side = '-';
      if (pair.has_hint()) {
        if (auto pos = pair.classify(n)) {
          side = pos->side == PairPosition::Side::n_side ? 'N' : 'M';
        }
      }
      if (side == 'N' && !v.in_L) {
        report.violations.push_back("n=" + std::to_string(n)
                                    + " is in N but not in L");
      } else if (side == 'M' && v.in_L) {
        report.violations.push_back("n=" + std::to_string(n)
                                    + " is in M but in L");
      }
      report.verdicts.push_back(v);
      report.sides.push_back(side);
    }
    if (max_n > 0) {
      std::vector<Word> sample{Word(Alphabet::wreath_g())};
      std::size_t const k = std::min<std::size_t>(2 * max_n, p_order_sample);
      for (Index i = 1; i <= k; ++i) {
        sample.push_back(phi_word(i));
      }
      report.p_order = check_p_order(sample, non_strict(g_order, g_wp), g_wp, 3);
    }
    return report;
  }

  SeparatorReport theorem1_demo(EnumeratedPair const& pair, Index max_n) {
    auto H     = std::make_shared<InseparableGroup>(pair);
    auto H_ord = std::make_shared<PairBasisOrder>(pair);
    LiftedGOrder  order(H_ord, H);
    EmbeddedGroup G(H);
    return theorem1_run(pair, order, G, max_n);
  }

  void write_report(std::ostream& out, SeparatorReport const& report) {
    out << "n,verdict,u_odd_vs_1,u_even_vs_1,side\n";
    std::size_t in_L = 0;
    for (std::size_t k = 0; k < report.verdicts.size(); ++k) {
      auto const& v = report.verdicts[k];
      in_L += v.in_L ? 1 : 0;
      out << v.n << ',' << (v.in_L ? "in_L" : "out_L") << ','
          << to_string(v.odd_vs_one) << ',' << to_string(v.even_vs_one) << ','
          << report.sides[k] << '\n';
    }
    for (auto const& v : report.violations) {
      out << "violation," << v << '\n';
    }
    for (auto const& v : report.p_order.violations) {
      out << "p-order violation," << to_string(v.axiom) << ",g=" << print_word(v.g)
          << ",h=" << print_word(v.h) << '\n';
    }
    out << "summary,pair," << report.pair_name << '\n';
    out << "summary,probed," << report.verdicts.size() << '\n';
    out << "summary,in_L," << in_L << '\n';
    out << "summary,out_L," << report.verdicts.size() - in_L << '\n';
    out << "summary,violations," << report.violations.size() << '\n';
    out << "summary,p_order_violations," << report.p_order.violations.size()
        << '\n';
  }

  ProbeResult theorem2_probe(Index n, Enumerator const& set_n, std::uint64_t fuel) {
    if (n < 1) {
      throw PreconditionError("probe indices start at 1");
    }
    RecursiveGroup const H("probe", set_n);
    WordBuilder          w(H.alphabet());
    w.push({'a', 2 * n}, 1).push({'a', 2 * n - 1}, -1);
    return {n, fuel, g_semi_trivial(phi_encode(w.word()), H, fuel)};
  }

}  // namespace wrembed
