#include "wrembed/wreath_l.hpp"

#include <algorithm>
#include <sstream>

namespace wrembed {

  LElement::LElement(std::vector<LFactor> const& factors, Int tail) {
    for (auto const& f : factors) {
      push_factor(f.gen, f.shift, f.power);
    }
    _tail = std::move(tail);
  }

  LElement LElement::z(Int const& power) {
    LElement r;
    r.push_z(power);
    return r;
  }

  LElement LElement::b(Index i, Int const& power) {
    LElement r;
    r.push_b(i, power);
    return r;
  }

  LElement& LElement::push_z(Int const& c) {
    _tail += c;
    return *this;
  }

  LElement& LElement::push_b(Index i, Int const& power) {
    return push_factor(i, 0, power);
  }

  LElement& LElement::push_factor(Index i, Int const& shift, Int const& power) {
    if (i == 0) {
      throw PreconditionError("f_i needs an index i >= 1");
    }
    if (power == 0) {
      return *this;
    }
    // X z^t (f_i^{z^c})^p = X (f_i^{z^{t+c}})^p z^t
    Int eta = _tail + shift;
    if (!_factors.empty() && _factors.back().gen == i
        && _factors.back().shift == eta) {
      _factors.back().power += power;
      if (_factors.back().power == 0) {
        _factors.pop_back();
      }
    } else {
      _factors.push_back({i, std::move(eta), power});
    }
    return *this;
  }

  LElement l_from_word(Word const& w) {
    if (!(w.alphabet() == Alphabet::wreath_l())) {
      throw AlphabetMismatch("expected a word over z, b1, b2, ...; got alphabet "
                             + w.alphabet().name());
    }
    LElement r;
    for (auto const& l : w.letters()) {
      if (l.gen.letter == 'z') {
        r.push_z(l.exp);
      } else {
        r.push_b(l.gen.index, l.exp);
      }
    }
    return r;
  }

  Word l_to_word(LElement const& a) {
    WordBuilder out(Alphabet::wreath_l());
    for (auto const& f : a.factors()) {
      out.push({'z', 0}, f.shift);
      out.push({'b', f.gen}, f.power);
      out.push({'z', 0}, -f.shift);
    }
    out.push({'z', 0}, a.tail());
    return std::move(out).word();
  }

  LElement l_mul(LElement const& a, LElement const& b) {
    LElement r = a;
    for (auto const& f : b.factors()) {
      r.push_factor(f.gen, f.shift, f.power);
    }
    r.push_z(b.tail());
    return r;
  }

  LElement l_inv(LElement const& a) {
    LElement r;
    r.push_z(-a.tail());
    auto const& fs = a.factors();
    for (auto it = fs.rbegin(); it != fs.rend(); ++it) {
      r.push_factor(it->gen, it->shift, -it->power);
    }
    return r;
  }

  LElement l_commutator(LElement const& a, LElement const& b) {
    return l_mul(l_mul(a, b), l_mul(l_inv(a), l_inv(b)));
  }

  Word l_eval(LElement const& a, Int const& nu, Alphabet const& base) {
    if (!base.is_base()) {
      throw AlphabetMismatch("base values must be words over an indexed letter");
    }
    WordBuilder out(base);
    char const  letter = base.base_letter();
    for (auto const& f : a.factors()) {
      if (nu + f.shift > 0) {
        out.push({letter, f.gen}, f.power);
      }
    }
    return std::move(out).word();
  }

  std::vector<Int> l_breakpoints(LElement const& a) {
    std::vector<Int> points;
    points.reserve(a.factors().size());
    for (auto const& f : a.factors()) {
      points.push_back(1 - f.shift);
    }
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    return points;
  }

  Triviality l_is_trivial(LElement const& a, GroupOracle const& H) {
    if (a.tail() != 0) {
      return Triviality::nontrivial;
    }
    for (auto const& nu : l_breakpoints(a)) {
      if (H.decide(l_eval(a, nu, H.alphabet())) == Triviality::nontrivial) {
        return Triviality::nontrivial;
      }
    }
    return Triviality::trivial;
  }

  bool l_equal(LElement const& a, LElement const& b, GroupOracle const& H) {
    return l_is_trivial(l_mul(a, l_inv(b)), H) == Triviality::trivial;
  }

  std::optional<Int> l_min_support(LElement const& a, GroupOracle const& H) {
    for (auto const& nu : l_breakpoints(a)) {
      if (H.decide(l_eval(a, nu, H.alphabet())) == Triviality::nontrivial) {
        return nu;
      }
    }
    return std::nullopt;
  }

  Membership l_in_diag(LElement const& a, GroupOracle const& H) {
    if (a.tail() != 0) {
      return Membership::nonmember;
    }
    // Every piece of the base function other than the one starting at 0 is
    // represented by its breakpoint; the piece starting at 0 (if any) is
    // represented by ν = 1.
    auto points = l_breakpoints(a);
    points.erase(std::remove(points.begin(), points.end(), Int(0)), points.end());
    points.push_back(1);
    for (auto const& nu : points) {
      if (H.decide(l_eval(a, nu, H.alphabet())) == Triviality::nontrivial) {
        return Membership::nonmember;
      }
    }
    return Membership::member;
  }

  Word l_decode(LElement const& a, GroupOracle const& H) {
    if (l_in_diag(a, H) != Membership::member) {
      throw PreconditionError("element is not in <[z, f_i]>: "
                              + l_serialize(a));
    }
    return l_eval(a, 0, H.alphabet());
  }

  std::string l_serialize(LElement const& a) {
    std::ostringstream out;
    out << '[';
    bool first = true;
    for (auto const& f : a.factors()) {
      if (!first) {
        out << ',';
      }
      first = false;
      out << '(' << f.gen << ',' << f.shift << ',' << f.power << ')';
    }
    out << "] ; " << a.tail();
    return out.str();
  }

}  // namespace wrembed
