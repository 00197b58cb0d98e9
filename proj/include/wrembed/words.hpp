#pragma once

// Words over indexed alphabets in run-length canonical form.

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wrembed/integer.hpp"

namespace wrembed {

  // A generator is a letter plus an index; index is 0 for unindexed letters
  // such as z, f, s.
  struct Generator {
    char  letter = 0;
    Index index  = 0;

    auto operator<=>(Generator const&) const = default;
  };

  struct LetterSpec {
    char letter;
    bool indexed;

    bool operator==(LetterSpec const&) const = default;
  };

  class Alphabet {
   public:
    Alphabet(std::string name, std::vector<LetterSpec> letters);

    // x1, x2, ... (or a1, a2, ... for the presentations of ⊕ℤ).
    static Alphabet base(char letter = 'x');
    // z, b1, b2, ... where b_i stands for f_i.
    static Alphabet wreath_l();
    // f, s.
    static Alphabet wreath_g();

    std::string const& name() const noexcept {
      return _impl->name;
    }

    std::vector<LetterSpec> const& letters() const noexcept {
      return _impl->letters;
    }

    std::optional<LetterSpec> find(char letter) const;
    bool                      admits(Generator const& g) const;

    // True for the single-indexed-letter alphabets produced by base().
    bool is_base() const noexcept;
    // Only meaningful when is_base().
    char base_letter() const noexcept {
      return _impl->letters.front().letter;
    }

    friend bool operator==(Alphabet const& a, Alphabet const& b) noexcept {
      return a._impl == b._impl || a._impl->letters == b._impl->letters;
    }

   private:
    struct Impl {
      std::string             name;
      std::vector<LetterSpec> letters;
    };
    std::shared_ptr<Impl const> _impl;
  };

  struct Letter {
    Generator gen;
    Int       exp;

    bool operator==(Letter const&) const = default;
  };

  // Immutable word: no zero exponents, no two adjacent letters with the same
  // generator. The empty word is the identity.
  class Word {
   public:
    explicit Word(Alphabet alphabet);
    // Validates every generator against the alphabet and freely reduces.
    Word(Alphabet alphabet, std::span<Letter const> letters);
    Word(Alphabet alphabet, std::initializer_list<Letter> letters);

    Alphabet const& alphabet() const noexcept {
      return _alphabet;
    }

    std::vector<Letter> const& letters() const noexcept {
      return _letters;
    }

    bool is_identity() const noexcept {
      return _letters.empty();
    }

    std::size_t size() const noexcept {
      return _letters.size();
    }

    // Sum of |exponent| over all runs.
    Int letter_count() const;

    friend bool operator==(Word const& a, Word const& b) {
      return a._alphabet == b._alphabet && a._letters == b._letters;
    }

   private:
    friend class WordBuilder;
    Alphabet            _alphabet;
    std::vector<Letter> _letters;
  };

  // Right-multiplies letters onto a word while keeping it canonical.
  class WordBuilder {
   public:
    explicit WordBuilder(Alphabet alphabet) : _word(std::move(alphabet)) {}

    WordBuilder& push(Generator const& g, Int const& exp);
    WordBuilder& push(Word const& w);

    Word const& word() const& noexcept {
      return _word;
    }

    Word word() && noexcept {
      return std::move(_word);
    }

   private:
    Word _word;
  };

  Word parse_word(std::string_view text, Alphabet const& alphabet);
  // Inverse of parse_word on canonical words. The identity prints as "".
  std::string print_word(Word const& w);
  std::string print_generator(Generator const& g);

  Word concat(Word const& a, Word const& b);
  Word invert(Word const& a);
  // No-op on canonical words; kept so callers can normalise raw sequences.
  Word free_reduce(Word const& a);
  Word free_reduce(Alphabet const& alphabet, std::span<Letter const> letters);
  Word power(Word const& a, long n);
  // a b a^-1 b^-1
  Word commutator(Word const& a, Word const& b);

  // Replaces every generator g of w by dict.at(g). Throws Error if a letter
  // is missing from dict. The result lives over `target`.
  Word substitute(Word const&                      w,
                  std::map<Generator, Word> const& dict,
                  Alphabet const&                  target);

}  // namespace wrembed
