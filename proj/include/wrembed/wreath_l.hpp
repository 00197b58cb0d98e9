#pragma once

// Elements of L = <z, f_1, f_2, ...> inside H wr <z>, where
//
//   f_i(z^n) = x_i if n > 0, and 1 otherwise,
//
// and conjugation acts by translation: f^{z^c}(z^n) = f(z^{n+c}), with
// f^{z^c} = z^c f z^{-c}. Every element has the normal form
//
//   (f_{i_1}^{z^{η_1}})^{ξ_1} ... (f_{i_m}^{z^{η_m}})^{ξ_m} z^η.
//
// In words f_i is written b<i>.

#include <optional>
#include <string>
#include <vector>

#include "wrembed/base_groups.hpp"
#include "wrembed/words.hpp"

namespace wrembed {

  // (f_gen^{z^shift})^power
  struct LFactor {
    Index gen;
    Int   shift;
    Int   power;

    bool operator==(LFactor const&) const = default;
  };

  class LElement {
   public:
    LElement() = default;
    LElement(std::vector<LFactor> const& factors, Int tail);

    static LElement z(Int const& power = 1);
    static LElement b(Index i, Int const& power = 1);

    std::vector<LFactor> const& factors() const noexcept {
      return _factors;
    }

    Int const& tail() const noexcept {
      return _tail;
    }

    // Right multiplication by z^c.
    LElement& push_z(Int const& c);
    // Right multiplication by f_i^power.
    LElement& push_b(Index i, Int const& power);
    // Right multiplication by (f_i^{z^shift})^power.
    LElement& push_factor(Index i, Int const& shift, Int const& power);

    // Syntactic equality of normal forms. Group equality is l_equal().
    bool operator==(LElement const&) const = default;

   private:
    std::vector<LFactor> _factors;
    Int                  _tail = 0;
  };

  LElement l_from_word(Word const& w);
  // z^{η_1} b_{i_1}^{ξ_1} z^{-η_1} ... z^η
  Word     l_to_word(LElement const& a);

  LElement l_mul(LElement const& a, LElement const& b);
  LElement l_inv(LElement const& a);
  LElement l_commutator(LElement const& a, LElement const& b);

  // Value of the base function at z^ν, as a word over `base`.
  Word l_eval(LElement const& a, Int const& nu, Alphabet const& base = Alphabet::base());

  // Points 1 - η_j, sorted and deduplicated. The base function is trivial
  // left of the first one and constant between consecutive ones.
  std::vector<Int> l_breakpoints(LElement const& a);

  Triviality l_is_trivial(LElement const& a, GroupOracle const& H);
  bool       l_equal(LElement const& a, LElement const& b, GroupOracle const& H);

  // Smallest ν with a nontrivial base value at z^ν; the tail is ignored.
  std::optional<Int> l_min_support(LElement const& a, GroupOracle const& H);

  // Membership in <[z, f_i] | i ∈ ℕ>, the copy of H inside L: tail 0 and
  // base function trivial away from z^0.
  Membership l_in_diag(LElement const& a, GroupOracle const& H);

  // H-element carried at z^0. Throws PreconditionError unless l_in_diag.
  Word l_decode(LElement const& a, GroupOracle const& H);

  // "[(i,η,ξ),...] ; tail"
  std::string l_serialize(LElement const& a);

}  // namespace wrembed
