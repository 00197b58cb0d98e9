#pragma once

// G = <f, s> inside L wr <s>, with
//
//   f(s^n) = z    if n = 1,
//            f_i  if n = 2^i, i >= 1,
//            1    otherwise,
//
// and the embedding Φ: x_i -> [f, f^{s^{2^i - 1}}] of H into G. Elements of G
// are kept in the form
//
//   (f^{s^{γ_1}})^{β_1} ... (f^{s^{γ_n}})^{β_n} s^δ.
//
// Base-function checks only visit "active" points μ, where μ + γ_j is a
// power of two for some j. Everywhere else every factor is trivial, so
// visiting the active points in a window is equivalent to visiting all of it.

#include <optional>
#include <string>
#include <vector>

#include "wrembed/base_groups.hpp"
#include "wrembed/wreath_l.hpp"
#include "wrembed/words.hpp"

namespace wrembed {

  // (f^{s^shift})^power
  struct GFactor {
    Int shift;
    Int power;

    bool operator==(GFactor const&) const = default;
  };

  class GElement {
   public:
    GElement() = default;
    GElement(std::vector<GFactor> const& factors, Int delta);

    static GElement f(Int const& power = 1);
    static GElement s(Int const& power = 1);

    std::vector<GFactor> const& factors() const noexcept {
      return _factors;
    }

    Int const& delta() const noexcept {
      return _delta;
    }

    GElement& push_s(Int const& c);
    GElement& push_f(Int const& power);
    GElement& push_factor(Int const& shift, Int const& power);

    bool operator==(GElement const&) const = default;

   private:
    std::vector<GFactor> _factors;
    Int                  _delta = 0;
  };

  struct GammaClass {
    Int                      gamma;
    std::vector<std::size_t> positions;
    Int                      sum;
  };

  // Classes of factor positions sharing the same γ, sorted by γ.
  std::vector<GammaClass> gamma_classes(GElement const& a);

  // max |γ_j|, or 0 for an element without factors.
  Int max_abs_shift(GElement const& a);

  // Active points in [lo, hi], sorted.
  std::vector<Int> active_points(GElement const& a, Int const& lo, Int const& hi);

  GElement g_from_word(Word const& w);
  Word     g_to_word(GElement const& a);

  GElement g_mul(GElement const& a, GElement const& b);
  GElement g_inv(GElement const& a);
  GElement g_pow(GElement const& a, long n);
  GElement g_commutator(GElement const& a, GElement const& b);
  // g a g^-1
  GElement g_conjugate(GElement const& a, GElement const& g);

  // Value of the base function at s^μ.
  LElement g_eval(GElement const& a, Int const& mu);

  Triviality g_is_trivial(GElement const& a, GroupOracle const& H);
  bool       g_equal(GElement const& a, GElement const& b, GroupOracle const& H);

  struct SemiReport {
    SemiVerdict verdict = SemiVerdict::unknown;
    // Set when a fuel-free condition already shows the element is nontrivial.
    bool        refuted = false;
    std::string reason;
  };

  // The triviality criterion with H-decisions replaced by fueled
  // semi-decisions. Never answers trivial falsely; monotone in fuel.
  SemiReport g_semi_trivial(GElement const& a, GroupOracle const& H, std::uint64_t fuel);

  // Least μ with a nontrivial base value at s^μ; δ is ignored.
  std::optional<Int> g_min_support(GElement const& a, GroupOracle const& H);

  // f s^k f s^-k f^-1 s^k f^-1 s^-k with k = 2^i - 1.
  Word     phi_word(Index i);
  GElement phi_generator(Index i);
  // Letterwise image of an H-word under x_i -> Φ(x_i).
  GElement phi_encode(Word const& u);

  Membership g_in_image(GElement const& a, GroupOracle const& H);
  // Throws PreconditionError unless g_in_image.
  Word       phi_decode(GElement const& a, GroupOracle const& H);

  // Membership in <f^{s^i} | i ∈ ℤ>, i.e. δ = 0.
  Membership g_in_N2(GElement const& a);

  // "[(γ,β),...] ; δ"
  std::string g_serialize(GElement const& a);

}  // namespace wrembed
