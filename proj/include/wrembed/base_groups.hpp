#pragma once

// Base groups H = <X> with word-problem deciders, plus the enumerated sets
// feeding the two presentations of ⊕ℤ:
//
//   inseparable:  a_{2n_i} = a_{2n_i - 1}^{p_i},  a_{2m_i} = a_{2m_i - 1}^{-p_i}
//   r.e.:         a_{2n_i} = a_{2n_i - 1}
//
// (all a_i commuting, p_i the i-th prime).

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>

#include "wrembed/register_machine.hpp"
#include "wrembed/words.hpp"

namespace wrembed {

  enum class Triviality { trivial, nontrivial };
  enum class SemiVerdict { trivial, unknown };
  enum class Membership { member, nonmember };

  std::string to_string(Triviality t);
  std::string to_string(SemiVerdict v);
  std::string to_string(Membership m);

  // A base group presented by a generating set X = {letter1, letter2, ...}.
  class GroupOracle {
   public:
    virtual ~GroupOracle() = default;

    virtual Alphabet const& alphabet() const noexcept = 0;
    virtual std::string     name() const              = 0;

    // Whether decide() is available (as opposed to only semi_decide()).
    virtual bool has_decider() const noexcept = 0;

    // Throws PreconditionError unless has_decider().
    virtual Triviality decide(Word const& w) const;

    // Monotone in fuel and never answers trivial falsely. The default uses
    // decide(), ignoring fuel.
    virtual SemiVerdict semi_decide(Word const& w, std::uint64_t fuel) const;

   protected:
    void check_alphabet(Word const& w) const;
  };

  ////////////////////////////////////////////////////////////////////////
  // Exponent vectors
  ////////////////////////////////////////////////////////////////////////

  // Exponent sums of an abelian word: index -> nonzero exponent.
  class ExpVector {
   public:
    ExpVector() = default;

    static ExpVector from_word(Word const& w);

    Int  get(Index k) const;
    void add(Index k, Int const& delta);

    bool is_zero() const noexcept {
      return _entries.empty();
    }

    Int letter_count() const;

    std::map<Index, Int> const& entries() const noexcept {
      return _entries;
    }

    bool operator==(ExpVector const&) const = default;

   private:
    std::map<Index, Int> _entries;
  };

  // i-th prime, i >= 1 (prime(1) == 2).
  std::uint64_t prime(Index i);

  ////////////////////////////////////////////////////////////////////////
  // Enumerated sets and pairs
  ////////////////////////////////////////////////////////////////////////

  // Total computable enumeration i >= 1 -> element.
  using Enumerator = std::function<Index(Index)>;

  // Which relator family a pair index k belongs to, and at which position
  // of its enumeration.
  struct PairPosition {
    enum class Side { n_side, m_side };
    Side  side;
    Index position;
  };

  struct EnumeratedPair {
    std::string name;
    Enumerator  enum_n;
    Enumerator  enum_m;
    // Total membership decider; present only for mock pairs.
    std::function<std::optional<PairPosition>(Index)> classify;

    bool has_hint() const noexcept {
      return static_cast<bool>(classify);
    }
  };

  // "odd-even": n_i = 2i - 1, m_i = 2i.
  // "mod-three": n_i = 3i - 2, m_i = 3i - 1; multiples of 3 are in neither.
  EnumeratedPair mock_pair(std::string const& kind = "odd-even");

  // N = program indices that halt, M = program indices whose run repeats a
  // configuration, both in dovetailed discovery order. No hint.
  EnumeratedPair halting_pair();
  EnumeratedPair halting_pair(std::shared_ptr<HaltingEnumerator> enumerator);

  // Odd numbers in increasing order; membership is decidable so tests have
  // ground truth.
  Enumerator mock_re_set();
  bool       mock_re_set_contains(Index n);

  ////////////////////////////////////////////////////////////////////////
  // Deciders
  ////////////////////////////////////////////////////////////////////////

  // Standard presentation of ⊕ℤ: trivial iff every exponent sum vanishes.
  Triviality free_abelian_decide(Word const& w);

  // Relator-removal procedure for the inseparable-pair presentation.
  Triviality insep_decide(Word const& w, EnumeratedPair const& pair);

  // Coordinates of an element of the inseparable-pair group in a free
  // basis of ⊕ℤ, keyed by (pair index k, slot). For k = n_i the pair
  // (a_{2k-1}, a_{2k}) contributes e_{2k-1} + p_i e_{2k} to slot 0, for k = m_i
  // it contributes e_{2k-1} - p_i e_{2k}; otherwise e_{2k-1} and e_{2k} go to
  // slots 0 and 1. Zero coordinates are omitted. Needs pair.classify.
  std::map<std::pair<Index, int>, Int>
  pair_basis_coordinates(ExpVector const& e, EnumeratedPair const& pair);

  // Test oracle through the isomorphism with ⊕ℤ; needs pair.classify.
  Triviality insep_bruteforce(Word const& w, EnumeratedPair const& pair);

  // Fueled semi-decider for the r.e. presentation using the first `fuel`
  // enumerated relators.
  SemiVerdict re_semi_decide(Word const&       w,
                             Enumerator const& set_n,
                             std::uint64_t     fuel);

  class FreeAbelianGroup final : public GroupOracle {
   public:
    explicit FreeAbelianGroup(char letter = 'x');

    Alphabet const& alphabet() const noexcept override {
      return _alphabet;
    }
    std::string name() const override {
      return "free-abelian";
    }
    bool has_decider() const noexcept override {
      return true;
    }
    Triviality decide(Word const& w) const override;

   private:
    Alphabet _alphabet;
  };

  class InseparableGroup final : public GroupOracle {
   public:
    explicit InseparableGroup(EnumeratedPair pair, char letter = 'a');

    Alphabet const& alphabet() const noexcept override {
      return _alphabet;
    }
    std::string name() const override {
      return "insep:" + _pair.name;
    }
    bool has_decider() const noexcept override {
      return true;
    }
    Triviality decide(Word const& w) const override;

    EnumeratedPair const& pair() const noexcept {
      return _pair;
    }

   private:
    EnumeratedPair _pair;
    Alphabet       _alphabet;
  };

  class RecursiveGroup final : public GroupOracle {
   public:
    RecursiveGroup(std::string set_name, Enumerator set_n, char letter = 'a');

    Alphabet const& alphabet() const noexcept override {
      return _alphabet;
    }
    std::string name() const override {
      return "re:" + _set_name;
    }
    bool has_decider() const noexcept override {
      return false;
    }
    SemiVerdict semi_decide(Word const& w, std::uint64_t fuel) const override;

   private:
    std::string _set_name;
    Enumerator  _set_n;
    Alphabet    _alphabet;
  };

}  // namespace wrembed
