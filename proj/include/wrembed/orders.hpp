#pragma once

// Strict total orders on groups given by words, and their lifting through
// wreath products: for elements F b and F' b' of A wr B,
//
//   F b < F' b'  iff  b < b', or b = b' and F(x0) < F'(x0)
//
// where x0 is the least point of supp(F F'^{-1}). Applied once for
// L <= H wr <z> and again for G <= L wr <s>.

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "wrembed/base_groups.hpp"
#include "wrembed/embed_g.hpp"
#include "wrembed/wreath_l.hpp"
#include "wrembed/words.hpp"

namespace wrembed {

  enum class Cmp { lt, eq, gt };

  std::string to_string(Cmp c);

  // Result of a lifted comparison, with the clause that decided it, e.g.
  // "s-exponent" or "base at s^1 / base at z^0".
  struct OrderTrace {
    Cmp         result = Cmp::eq;
    std::string clause;
  };

  class OrderOracle {
   public:
    virtual ~OrderOracle() = default;

    virtual Alphabet const& alphabet() const noexcept = 0;
    virtual bool            less(Word const& u, Word const& v) const = 0;
  };

  // Lexicographic order on ⊕ℤ: compare exponent sums at the smallest index
  // where they differ.
  bool lex_less(Word const& u, Word const& v);

  class LexOrder final : public OrderOracle {
   public:
    explicit LexOrder(char letter = 'x') : _alphabet(Alphabet::base(letter)) {}

    Alphabet const& alphabet() const noexcept override {
      return _alphabet;
    }
    bool less(Word const& u, Word const& v) const override;

   private:
    Alphabet _alphabet;
  };

  // Bi-order on the inseparable-pair group: lex on pair_basis_coordinates.
  // Needs the pair's membership hint.
  class PairBasisOrder final : public OrderOracle {
   public:
    explicit PairBasisOrder(EnumeratedPair pair, char letter = 'a');

    Alphabet const& alphabet() const noexcept override {
      return _alphabet;
    }
    bool less(Word const& u, Word const& v) const override;

   private:
    EnumeratedPair _pair;
    Alphabet       _alphabet;
  };

  OrderTrace l_compare(LElement const&    a,
                       LElement const&    b,
                       OrderOracle const& H_ord,
                       GroupOracle const& H);
  bool       l_less(LElement const&    a,
                    LElement const&    b,
                    OrderOracle const& H_ord,
                    GroupOracle const& H);

  OrderTrace g_compare(GElement const&    a,
                       GElement const&    b,
                       OrderOracle const& H_ord,
                       GroupOracle const& H);
  bool       g_less(GElement const&    a,
                    GElement const&    b,
                    OrderOracle const& H_ord,
                    GroupOracle const& H);

  // G as a group oracle over {f, s}, deciding through g_is_trivial (or
  // g_semi_trivial when H only has a semi-decider).
  class EmbeddedGroup final : public GroupOracle {
   public:
    explicit EmbeddedGroup(std::shared_ptr<GroupOracle const> base);

    Alphabet const& alphabet() const noexcept override {
      return _alphabet;
    }
    std::string name() const override {
      return "G over " + _base->name();
    }
    bool has_decider() const noexcept override {
      return _base->has_decider();
    }
    Triviality  decide(Word const& w) const override;
    SemiVerdict semi_decide(Word const& w, std::uint64_t fuel) const override;

    GroupOracle const& base() const noexcept {
      return *_base;
    }

   private:
    std::shared_ptr<GroupOracle const> _base;
    Alphabet                           _alphabet;
  };

  // The lifted order on G as an order oracle over {f, s}.
  class LiftedGOrder final : public OrderOracle {
   public:
    LiftedGOrder(std::shared_ptr<OrderOracle const> base_order,
                 std::shared_ptr<GroupOracle const> base_group);

    Alphabet const& alphabet() const noexcept override {
      return _alphabet;
    }
    bool       less(Word const& u, Word const& v) const override;
    OrderTrace compare(Word const& u, Word const& v) const;

   private:
    std::shared_ptr<OrderOracle const> _base_order;
    std::shared_ptr<GroupOracle const> _base_group;
    Alphabet                           _alphabet;
  };

  // Pulls an order on <X> back along the substitution s -> dict[s]:
  // w1 < w2 iff φ(w1) < φ(w2). Throws Error if a letter is missing.
  bool transport_less(Word const&                      w1,
                      Word const&                      w2,
                      std::map<Generator, Word> const& dict,
                      OrderOracle const&               x_order);

  ////////////////////////////////////////////////////////////////////////
  // p-order axioms
  ////////////////////////////////////////////////////////////////////////

  using Relation = std::function<bool(Word const&, Word const&)>;

  // u ⪯ v iff u < v or u = v.
  Relation non_strict(OrderOracle const& order, GroupOracle const& wp);

  struct POrderViolation {
    enum class Axiom { antisymmetry, inverse, power };
    Axiom       axiom;
    Word        g;
    Word        h;  // the second element for antisymmetry, g^n for power
    long        n = 0;
  };

  std::string to_string(POrderViolation::Axiom a);

  struct POrderReport {
    std::vector<POrderViolation> violations;

    bool ok() const noexcept {
      return violations.empty();
    }
  };

  // Checks, over the sample and 2 <= n <= n_max:
  //   R(g,h) and R(h,g)  =>  g = h
  //   R(1,g)             =>  R(g^-1, 1)
  //   R(1,g)             =>  R(1, g^n)
  POrderReport check_p_order(std::vector<Word> const& sample,
                             Relation const&          R,
                             GroupOracle const&       wp,
                             long                     n_max);

}  // namespace wrembed
