#pragma once

// Two-counter Minsky machines, their Gödel numbering, and a dovetailed
// enumerator splitting program indices into "halts" and "detected cycle".
//
// Instruction set (registers r are 0 or 1, labels are 0-based instruction
// positions):
//
//   INC r           r += 1, continue
//   JZDEC r label   if r == 0 jump to label, else r -= 1 and continue
//   HALT            stop
//
// Execution starts at instruction 0 with both registers 0. Running off the
// end of the program, or jumping to a label >= program length, halts.
//
// Gödel numbering. Instructions are coded by naturals:
//
//   code(HALT) = 0,  code(INC r) = 1 + r,  code(JZDEC r l) = 3 + 2 l + r.
//
// A program c_1 c_2 ... c_k (k >= 1) has index
//
//   enc(c_1 ... c_k) = 2^{c_1} (2 enc(c_2 ... c_k) + 1),  enc() = 0,
//
// which is a bijection between non-empty programs and {1, 2, 3, ...}.
// Index 1 is the program "HALT".

#include <cstdint>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wrembed/integer.hpp"

namespace wrembed {

  struct Instruction {
    enum class Op { halt, inc, jzdec };

    Op            op     = Op::halt;
    unsigned      reg    = 0;
    std::uint64_t target = 0;

    bool operator==(Instruction const&) const = default;
  };

  using Program = std::vector<Instruction>;

  std::uint64_t encode_instruction(Instruction const& ins);
  Instruction   decode_instruction(std::uint64_t code);

  // Throws Error when the index does not fit in 64 bits.
  Index   encode_program(Program const& program);
  Program decode_program(Index index);

  // One instruction per line; blank lines and text after '#' are ignored.
  Program     parse_program(std::string_view text);
  std::string print_program(Program const& program);

  struct MachineState {
    std::uint64_t pc = 0;
    std::uint64_t r0 = 0;
    std::uint64_t r1 = 0;

    bool operator==(MachineState const&) const = default;
  };

  enum class RunStatus { running, halted, cycle };

  // Single program under execution, with Brent cycle detection on the full
  // configuration (pc, r0, r1). A detected repeat proves divergence.
  class Machine {
   public:
    explicit Machine(Program program);

    RunStatus step();
    // Runs for at most `fuel` further steps.
    RunStatus run(std::uint64_t fuel);

    RunStatus status() const noexcept {
      return _status;
    }

    MachineState const& state() const noexcept {
      return _state;
    }

    std::uint64_t steps() const noexcept {
      return _steps;
    }

   private:
    Program       _program;
    MachineState  _state;
    RunStatus     _status;
    std::uint64_t _steps;
    // Brent's algorithm
    MachineState  _saved;
    std::uint64_t _power;
    std::uint64_t _lambda;
  };

  // Dovetails all programs: stage t starts program t, then advances every
  // live machine by one step. Halting indices and cycling indices are
  // recorded in discovery order. Internally synchronized.
  class HaltingEnumerator {
   public:
    HaltingEnumerator() = default;

    // i-th (1-based) index found to halt.
    Index halting(Index i);
    // i-th (1-based) index found to cycle.
    Index cycling(Index i);

    std::uint64_t stages() const;

   private:
    void advance_stage();

    struct Live {
      Index   index;
      Machine machine;
    };

    mutable std::mutex _mutex;
    std::uint64_t      _stage = 0;
    std::vector<Live>  _live;
    std::vector<Index> _halting;
    std::vector<Index> _cycling;
  };

}  // namespace wrembed
