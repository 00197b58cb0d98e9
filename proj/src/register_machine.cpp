#include "wrembed/register_machine.hpp"

#include <limits>
#include <sstream>

namespace wrembed {

  std::uint64_t encode_instruction(Instruction const& ins) {
    switch (ins.op) {
      case Instruction::Op::halt:
        return 0;
      case Instruction::Op::inc:
        return 1 + ins.reg;
      case Instruction::Op::jzdec:
        return 3 + 2 * ins.target + ins.reg;
    }
    return 0;
  }

  Instruction decode_instruction(std::uint64_t code) {
    if (code == 0) {
      return {Instruction::Op::halt, 0, 0};
    }
    if (code <= 2) {
      return {Instruction::Op::inc, static_cast<unsigned>(code - 1), 0};
    }
    code -= 3;
    return {Instruction::Op::jzdec, static_cast<unsigned>(code % 2), code / 2};
  }

  Index encode_program(Program const& program) {
    if (program.empty()) {
      throw Error("cannot encode an empty program");
    }
    // enc(c_1..c_k) = 2^{c_1} (2 enc(c_2..c_k) + 1), evaluated right to left.
    Int acc = 0;
    for (auto it = program.rbegin(); it != program.rend(); ++it) {
      std::uint64_t code = encode_instruction(*it);
      if (code > 4096) {
        throw Error("program index does not fit in 64 bits");
      }
      acc = (2 * acc + 1) << static_cast<unsigned>(code);
      if (acc > Int(std::numeric_limits<Index>::max())) {
        throw Error("program index does not fit in 64 bits");
      }
    }
    return static_cast<Index>(acc);
  }

  Program decode_program(Index index) {
    if (index == 0) {
      throw PreconditionError("program indices start at 1");
    }
    Program program;
    while (index != 0) {
      std::uint64_t code = 0;
      while ((index & 1) == 0) {
        index >>= 1;
        ++code;
      }
      program.push_back(decode_instruction(code));
      index >>= 1;  // (index - 1) / 2 for odd index
    }
    return program;
  }

  Program parse_program(std::string_view text) {
    Program            program;
    std::istringstream in{std::string(text)};
    std::string        line;
    std::size_t        lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (auto hash = line.find('#'); hash != std::string::npos) {
        line.erase(hash);
      }
      std::istringstream words(line);
      std::string        op;
      if (!(words >> op)) {
        continue;
      }
      auto bad = [&](std::string const& what) {
        return ParseError("line " + std::to_string(lineno) + ": " + what,
                          lineno);
      };
      Instruction ins;
      if (op == "HALT") {
        ins.op = Instruction::Op::halt;
      } else if (op == "INC" || op == "JZDEC") {
        long reg = -1;
        if (!(words >> reg) || (reg != 0 && reg != 1)) {
          throw bad("register must be 0 or 1");
        }
        ins.reg = static_cast<unsigned>(reg);
        ins.op  = op == "INC" ? Instruction::Op::inc : Instruction::Op::jzdec;
        if (ins.op == Instruction::Op::jzdec) {
          long long label = -1;
          if (!(words >> label) || label < 0) {
            throw bad("JZDEC needs a non-negative label");
          }
          ins.target = static_cast<std::uint64_t>(label);
        }
      } else {
        throw bad("unknown instruction '" + op + "'");
      }
      std::string extra;
      if (words >> extra) {
        throw bad("trailing text '" + extra + "'");
      }
      program.push_back(ins);
    }
    if (program.empty()) {
      throw ParseError("empty program", 0);
    }
    return program;
  }

  std::string print_program(Program const& program) {
    std::ostringstream out;
    for (auto const& ins : program) {
      switch (ins.op) {
        case Instruction::Op::halt:
          out << "HALT\n";
          break;
        case Instruction::Op::inc:
          out << "INC " << ins.reg << '\n';
          break;
        case Instruction::Op::jzdec:
          out << "JZDEC " << ins.reg << ' ' << ins.target << '\n';
          break;
      }
    }
    return out.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // Machine
  ////////////////////////////////////////////////////////////////////////

  Machine::Machine(Program program)
      : _program(std::move(program)),
        _state(),
        _status(RunStatus::running),
        _steps(0),
        _saved(),
        _power(1),
        _lambda(0) {}

  RunStatus Machine::step() {
    if (_status != RunStatus::running) {
      return _status;
    }
    if (_state.pc >= _program.size()) {
      _status = RunStatus::halted;
      return _status;
    }
    Instruction const& ins = _program[_state.pc];
    std::uint64_t&     reg = ins.reg == 0 ? _state.r0 : _state.r1;
    switch (ins.op) {
      case Instruction::Op::halt:
        _status = RunStatus::halted;
        return _status;
      case Instruction::Op::inc:
        ++reg;
        ++_state.pc;
        break;
      case Instruction::Op::jzdec:
        if (reg == 0) {
          _state.pc = ins.target;
        } else {
          --reg;
          ++_state.pc;
        }
        break;
    }
    ++_steps;
    if (_state.pc >= _program.size()) {
      _status = RunStatus::halted;
      return _status;
    }
    if (_state == _saved) {
      _status = RunStatus::cycle;
      return _status;
    }
    if (++_lambda == _power) {
      _saved  = _state;
      _power *= 2;
      _lambda = 0;
    }
    return _status;
  }

  RunStatus Machine::run(std::uint64_t fuel) {
    for (std::uint64_t k = 0; k < fuel && _status == RunStatus::running; ++k) {
      step();
    }
    return _status;
  }

  ////////////////////////////////////////////////////////////////////////
  // HaltingEnumerator
  ////////////////////////////////////////////////////////////////////////

  void HaltingEnumerator::advance_stage() {
    ++_stage;
    _live.push_back({_stage, Machine(decode_program(_stage))});
    std::size_t keep = 0;
    for (std::size_t k = 0; k < _live.size(); ++k) {
      RunStatus status = _live[k].machine.step();
      if (status == RunStatus::halted) {
        _halting.push_back(_live[k].index);
      } else if (status == RunStatus::cycle) {
        _cycling.push_back(_live[k].index);
      } else {
        if (keep != k) {
          _live[keep] = std::move(_live[k]);
        }
        ++keep;
      }
    }
    _live.erase(_live.begin() + static_cast<std::ptrdiff_t>(keep), _live.end());
  }

  Index HaltingEnumerator::halting(Index i) {
    if (i == 0) {
      throw PreconditionError("enumeration positions start at 1");
    }
    std::lock_guard<std::mutex> lock(_mutex);
    while (_halting.size() < i) {
      advance_stage();
    }
    return _halting[i - 1];
  }

  Index HaltingEnumerator::cycling(Index i) {
    if (i == 0) {
      throw PreconditionError("enumeration positions start at 1");
    }
    std::lock_guard<std::mutex> lock(_mutex);
    while (_cycling.size() < i) {
      advance_stage();
    }
    return _cycling[i - 1];
  }

  std::uint64_t HaltingEnumerator::stages() const {
    std::lock_guard<std::mutex> lock(_mutex);
    return _stage;
  }

}  // namespace wrembed
