#pragma once

// Executable content of the two undecidability arguments.
//
// Separator: given any total order decider on G and u_k = Φ(a_k), the set
//
//   𝓛 = { n | (u_{2n} ⪯ 1 and u_{2n-1} ⪯ 1) or (1 ⪯ u_{2n} and 1 ⪯ u_{2n-1}) }
//
// is decidable, contains N and misses M whenever ⪯ is a p-order. For a
// recursively inseparable pair no such decider can exist; for the mock
// pairs shipped here it can, and theorem1_demo checks the inclusions.
//
// Probe: w_n = a_{2n} a_{2n-1}^{-1} is trivial in the r.e. presentation iff
// n ∈ N; theorem2_probe semi-decides Φ(w_n) = 1 in G.

#include <cstdint>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include "wrembed/base_groups.hpp"
#include "wrembed/embed_g.hpp"
#include "wrembed/orders.hpp"

namespace wrembed {

  struct SeparatorVerdict {
    Index n;
    bool  in_L;
    // Comparison of u_{2n-1} and u_{2n} against the identity.
    Cmp   odd_vs_one;
    Cmp   even_vs_one;
  };

  // Evaluates the defining condition of 𝓛 for n, with u ⪯ 1 read as
  // "not 1 < u" and 1 ⪯ u as "not u < 1".
  SeparatorVerdict separator(Index n, OrderOracle const& g_order);

  struct SeparatorReport {
    std::string                   pair_name;
    Index                         max_n = 0;
    std::vector<SeparatorVerdict> verdicts;
    // Sides known from the pair's hint ('N', 'M', or '-').
    std::vector<char>             sides;
    std::vector<std::string>      violations;
    POrderReport                  p_order;

    bool ok() const noexcept {
      return violations.empty() && p_order.ok();
    }
  };

  // Runs the separator for n = 1..max_n with the given order on G and checks
  // N ⊆ 𝓛, M ∩ 𝓛 = ∅ against the pair's hint. The order is also screened with
  // check_p_order on {1, u_1, ..., u_k}, k = min(2 max_n, p_order_sample).
  SeparatorReport theorem1_run(EnumeratedPair const& pair,
                               OrderOracle const&    g_order,
                               GroupOracle const&    g_wp,
                               Index                 max_n,
                               std::size_t           p_order_sample = 8);

  // theorem1_run with the order lifted from PairBasisOrder through G.
  SeparatorReport theorem1_demo(EnumeratedPair const& pair, Index max_n);

  // "n,verdict,u_odd_vs_1,u_even_vs_1,side" lines followed by a summary block.
  void write_report(std::ostream& out, SeparatorReport const& report);

  struct ProbeResult {
    Index         n;
    std::uint64_t fuel;
    SemiReport    report;
  };

  ProbeResult theorem2_probe(Index n, Enumerator const& set_n, std::uint64_t fuel);

}  // namespace wrembed
