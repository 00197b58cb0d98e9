#pragma once

// Plain interpreter with an explicit set of visited configurations, used to
// confirm halting and cycling verdicts independently of Machine.

#include <set>
#include <tuple>

#include "wrembed/register_machine.hpp"

namespace wrembed::testing {

  enum class Fate { halts, repeats, undetermined };

  inline Fate simulate(Program const& p, std::uint64_t steps) {
    std::set<std::tuple<std::size_t, Int, Int>> seen;
    std::size_t                                 pc = 0;
    Int                                         r[2]{0, 0};
    for (std::uint64_t t = 0; t < steps; ++t) {
      if (pc >= p.size() || p[pc].op == Instruction::Op::halt) {
        return Fate::halts;
      }
      if (!seen.insert({pc, r[0], r[1]}).second) {
        return Fate::repeats;
      }
      auto const& ins = p[pc];
      if (ins.op == Instruction::Op::inc) {
        ++r[ins.reg];
        ++pc;
      } else if (r[ins.reg] == 0) {
        pc = ins.target;
      } else {
        --r[ins.reg];
        ++pc;
      }
    }
    return Fate::undetermined;
  }

}  // namespace wrembed::testing
