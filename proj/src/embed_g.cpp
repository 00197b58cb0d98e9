#include "wrembed/embed_g.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace wrembed {

  GElement::GElement(std::vector<GFactor> const& factors, Int delta) {
    for (auto const& f : factors) {
      push_factor(f.shift, f.power);
    }
    _delta = std::move(delta);
  }

  GElement GElement::f(Int const& power) {
    GElement r;
    r.push_f(power);
    return r;
  }

  GElement GElement::s(Int const& power) {
    GElement r;
    r.push_s(power);
    return r;
  }

  GElement& GElement::push_s(Int const& c) {
    _delta += c;
    return *this;
  }

  GElement& GElement::push_f(Int const& power) {
    return push_factor(0, power);
  }

  GElement& GElement::push_factor(Int const& shift, Int const& power) {
    if (power == 0) {
      return *this;
    }
    // X s^d (f^{s^c})^p = X (f^{s^{d+c}})^p s^d
    Int gamma = _delta + shift;
    if (!_factors.empty() && _factors.back().shift == gamma) {
      _factors.back().power += power;
      if (_factors.back().power == 0) {
        _factors.pop_back();
      }
    } else {
      _factors.push_back({std::move(gamma), power});
    }
    return *this;
  }

  std::vector<GammaClass> gamma_classes(GElement const& a) {
    std::map<Int, GammaClass> classes;
    auto const&               fs = a.factors();
    for (std::size_t k = 0; k < fs.size(); ++k) {
      auto& c = classes[fs[k].shift];
      c.gamma = fs[k].shift;
      c.positions.push_back(k);
      c.sum += fs[k].power;
    }
    std::vector<GammaClass> out;
    out.reserve(classes.size());
    for (auto& [gamma, c] : classes) {
      out.push_back(std::move(c));
    }
    return out;
  }

  Int max_abs_shift(GElement const& a) {
    Int m = 0;
    for (auto const& f : a.factors()) {
      m = std::max(m, abs(f.shift));
    }
    return m;
  }

  std::vector<Int> active_points(GElement const& a, Int const& lo, Int const& hi) {
    std::set<Int> gammas;
    for (auto const& f : a.factors()) {
      gammas.insert(f.shift);
    }
    std::set<Int> points;
    for (auto const& gamma : gammas) {
      // μ = 2^e - γ with lo <= μ <= hi, e >= 0
      Int const top = hi + gamma;
      if (top < 1) {
        continue;
      }
      Int const   bottom = std::max(Int(lo + gamma), Int(1));
      std::size_t e      = ceil_log2(bottom);
      for (Int p = pow2(e); p <= top; p <<= 1) {
        points.insert(p - gamma);
      }
    }
    return {points.begin(), points.end()};
  }

  GElement g_from_word(Word const& w) {
    if (!(w.alphabet() == Alphabet::wreath_g())) {
      throw AlphabetMismatch("expected a word over f, s; got alphabet "
                             + w.alphabet().name());
    }
    GElement r;
    for (auto const& l : w.letters()) {
      if (l.gen.letter == 's') {
        r.push_s(l.exp);
      } else {
        r.push_f(l.exp);
      }
    }
    return r;
  }

  Word g_to_word(GElement const& a) {
    WordBuilder out(Alphabet::wreath_g());
    for (auto const& f : a.factors()) {
      out.push({'s', 0}, f.shift);
      out.push({'f', 0}, f.power);
      out.push({'s', 0}, -f.shift);
    }
    out.push({'s', 0}, a.delta());
    return std::move(out).word();
  }

  GElement g_mul(GElement const& a, GElement const& b) {
    GElement r = a;
    for (auto const& f : b.factors()) {
      r.push_factor(f.shift, f.power);
    }
    r.push_s(b.delta());
    return r;
  }

  GElement g_inv(GElement const& a) {
    GElement r;
    r.push_s(-a.delta());
    auto const& fs = a.factors();
    for (auto it = fs.rbegin(); it != fs.rend(); ++it) {
      r.push_factor(it->shift, -it->power);
    }
    return r;
  }

  GElement g_pow(GElement const& a, long n) {
    GElement const base = n < 0 ? g_inv(a) : a;
    GElement       r;
    for (long k = 0; k < (n < 0 ? -n : n); ++k) {
      r = g_mul(r, base);
    }
    return r;
  }

  GElement g_commutator(GElement const& a, GElement const& b) {
    return g_mul(g_mul(a, b), g_mul(g_inv(a), g_inv(b)));
  }

  GElement g_conjugate(GElement const& a, GElement const& g) {
    return g_mul(g_mul(g, a), g_inv(g));
  }

  LElement g_eval(GElement const& a, Int const& mu) {
    LElement r;
    for (auto const& f : a.factors()) {
      Int const t = mu + f.shift;
      if (t == 1) {
        r.push_z(f.power);
      } else if (is_power_of_two(t)) {
        r.push_b(log2_exact(t), f.power);
      }
    }
    return r;
  }

  namespace {
    bool class_sums_vanish(GElement const& a) {
      for (auto const& c : gamma_classes(a)) {
        if (c.sum != 0) {
          return false;
        }
      }
      return true;
    }
  }  // namespace

  Triviality g_is_trivial(GElement const& a, GroupOracle const& H) {
    if (a.delta() != 0 || !class_sums_vanish(a)) {
      return Triviality::nontrivial;
    }
    Int const window = 3 * max_abs_shift(a);
    for (auto const& mu : active_points(a, -window, window)) {
      if (l_is_trivial(g_eval(a, mu), H) == Triviality::nontrivial) {
        return Triviality::nontrivial;
      }
    }
    return Triviality::trivial;
  }

  bool g_equal(GElement const& a, GElement const& b, GroupOracle const& H) {
    return g_is_trivial(g_mul(a, g_inv(b)), H) == Triviality::trivial;
  }

  SemiReport
  g_semi_trivial(GElement const& a, GroupOracle const& H, std::uint64_t fuel) {
    if (a.delta() != 0) {
      return {SemiVerdict::unknown, true, "s-exponent " + a.delta().str() + " != 0"};
    }
    for (auto const& c : gamma_classes(a)) {
      if (c.sum != 0) {
        return {SemiVerdict::unknown,
                true,
                "class sum at shift " + c.gamma.str() + " is " + c.sum.str()};
      }
    }
    Int const window = 3 * max_abs_shift(a);
    for (auto const& mu : active_points(a, -window, window)) {
      LElement const value = g_eval(a, mu);
      if (value.tail() != 0) {
        return {SemiVerdict::unknown,
                true,
                "z-exponent at s^" + mu.str() + " is " + value.tail().str()};
      }
      for (auto const& nu : l_breakpoints(value)) {
        if (H.semi_decide(l_eval(value, nu, H.alphabet()), fuel)
            != SemiVerdict::trivial) {
          return {SemiVerdict::unknown,
                  false,
                  "base value at s^" + mu.str() + ", z^" + nu.str()
                      + " not confirmed trivial"};
        }
      }
    }
    return {SemiVerdict::trivial, false, ""};
  }

  std::optional<Int> g_min_support(GElement const& a, GroupOracle const& H) {
    Int const gamma_max = max_abs_shift(a);
    Int const bound     = 5 * gamma_max + 2;
    for (auto const& mu : active_points(a, -bound, bound)) {
      if (l_is_trivial(g_eval(a, mu), H) == Triviality::nontrivial) {
        return mu;
      }
    }
    // Beyond the bound each active point sees exactly one class, with value
    // f_i^{class sum}. For torsion-free H the first such point of a class
    // with nonzero sum is already nontrivial; later points are tried for a
    // bounded number of doublings to cover generators of finite order.
    constexpr int      max_attempts = 64;
    std::optional<Int> best;
    for (auto const& c : gamma_classes(a)) {
      if (c.sum == 0) {
        continue;
      }
      std::size_t e = ceil_log2(bound + c.gamma + 1);
      for (int attempt = 0; attempt < max_attempts; ++attempt, ++e) {
        Int const mu = pow2(e) - c.gamma;
        if (best && mu >= *best) {
          break;
        }
        if (l_is_trivial(g_eval(a, mu), H) == Triviality::nontrivial) {
          best = mu;
          break;
        }
      }
    }
    return best;
  }

  Word phi_word(Index i) {
    if (i < 1) {
      throw PreconditionError("generator indices start at 1");
    }
    Int const   k = pow2(i) - 1;
    WordBuilder out(Alphabet::wreath_g());
    Generator const f{'f', 0}, s{'s', 0};
    out.push(f, 1).push(s, k).push(f, 1).push(s, -k);
    out.push(f, -1).push(s, k).push(f, -1).push(s, -k);
    return std::move(out).word();
  }

  GElement phi_generator(Index i) {
    if (i < 1) {
      throw PreconditionError("generator indices start at 1");
    }
    Int const k = pow2(i) - 1;
    return GElement({{0, 1}, {k, 1}, {0, -1}, {k, -1}}, 0);
  }

  GElement phi_encode(Word const& u) {
    if (!u.alphabet().is_base()) {
      throw AlphabetMismatch("Φ encodes words over an indexed base alphabet, got "
                             + u.alphabet().name());
    }
    GElement r;
    for (auto const& l : u.letters()) {
      GElement const g = l.exp > 0 ? phi_generator(l.gen.index)
                                   : g_inv(phi_generator(l.gen.index));
      for (Int k = abs(l.exp); k > 0; --k) {
        r = g_mul(r, g);
      }
    }
    return r;
  }

  Membership g_in_image(GElement const& a, GroupOracle const& H) {
    if (a.delta() != 0 || !class_sums_vanish(a)) {
      return Membership::nonmember;
    }
    Int const window = 3 * max_abs_shift(a);
    for (auto const& mu : active_points(a, -window, window)) {
      if (mu == 1) {
        continue;
      }
      if (l_is_trivial(g_eval(a, mu), H) == Triviality::nontrivial) {
        return Membership::nonmember;
      }
    }
    return l_in_diag(g_eval(a, 1), H);
  }

  Word phi_decode(GElement const& a, GroupOracle const& H) {
    if (g_in_image(a, H) != Membership::member) {
      throw PreconditionError("element is not in the image of Φ: "
                              + g_serialize(a));
    }
    return l_decode(g_eval(a, 1), H);
  }

  Membership g_in_N2(GElement const& a) {
    return a.delta() == 0 ? Membership::member : Membership::nonmember;
  }

  std::string g_serialize(GElement const& a) {
    std::ostringstream out;
    out << '[';
    bool first = true;
    for (auto const& f : a.factors()) {
      if (!first) {
        out << ',';
      }
      first = false;
      out << '(' << f.shift << ',' << f.power << ')';
    }
    out << "] ; " << a.delta();
    return out.str();
  }

}  // namespace wrembed
