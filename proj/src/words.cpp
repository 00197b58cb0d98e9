#include "wrembed/words.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

namespace wrembed {

  ////////////////////////////////////////////////////////////////////////
  // Alphabet
  ////////////////////////////////////////////////////////////////////////

  Alphabet::Alphabet(std::string name, std::vector<LetterSpec> letters)
      : _impl(std::make_shared<Impl const>(
          Impl{std::move(name), std::move(letters)})) {
    for (auto const& spec : _impl->letters) {
      if (!std::isalpha(static_cast<unsigned char>(spec.letter))) {
        throw Error(std::string("alphabet letters must be alphabetic, got '")
                    + spec.letter + "'");
      }
    }
  }

  Alphabet Alphabet::base(char letter) {
    return Alphabet(std::string(1, letter), {{letter, true}});
  }

  Alphabet Alphabet::wreath_l() {
    static Alphabet const alphabet("L", {{'z', false}, {'b', true}});
    return alphabet;
  }

  Alphabet Alphabet::wreath_g() {
    static Alphabet const alphabet("G", {{'f', false}, {'s', false}});
    return alphabet;
  }

  std::optional<LetterSpec> Alphabet::find(char letter) const {
    for (auto const& spec : _impl->letters) {
      if (spec.letter == letter) {
        return spec;
      }
    }
    return std::nullopt;
  }

  bool Alphabet::admits(Generator const& g) const {
    auto spec = find(g.letter);
    if (!spec) {
      return false;
    }
    return spec->indexed ? g.index >= 1 : g.index == 0;
  }

  bool Alphabet::is_base() const noexcept {
    return _impl->letters.size() == 1 && _impl->letters.front().indexed;
  }

  ////////////////////////////////////////////////////////////////////////
  // Word
  ////////////////////////////////////////////////////////////////////////

  Word::Word(Alphabet alphabet) : _alphabet(std::move(alphabet)), _letters() {}

  Word::Word(Alphabet alphabet, std::span<Letter const> letters)
      : Word(free_reduce(alphabet, letters)) {}

  Word::Word(Alphabet alphabet, std::initializer_list<Letter> letters)
      : Word(std::move(alphabet),
             std::span<Letter const>(letters.begin(), letters.size())) {}

  Int Word::letter_count() const {
    Int total = 0;
    for (auto const& l : _letters) {
      total += abs(l.exp);
    }
    return total;
  }

  WordBuilder& WordBuilder::push(Generator const& g, Int const& exp) {
    if (!_word._alphabet.admits(g)) {
      throw AlphabetMismatch("generator " + print_generator(g)
                             + " is not in alphabet " + _word._alphabet.name());
    }
    if (exp == 0) {
      return *this;
    }
    auto& letters = _word._letters;
    if (!letters.empty() && letters.back().gen == g) {
      letters.back().exp += exp;
      if (letters.back().exp == 0) {
        letters.pop_back();
      }
    } else {
      letters.push_back({g, exp});
    }
    return *this;
  }

  WordBuilder& WordBuilder::push(Word const& w) {
    if (!(w.alphabet() == _word.alphabet())) {
      throw AlphabetMismatch("cannot multiply words over alphabets "
                             + _word.alphabet().name() + " and "
                             + w.alphabet().name());
    }
    for (auto const& l : w.letters()) {
      push(l.gen, l.exp);
    }
    return *this;
  }

  ////////////////////////////////////////////////////////////////////////
  // Parsing and printing
  ////////////////////////////////////////////////////////////////////////

  namespace {
    class WordParser {
     public:
      WordParser(std::string_view text, Alphabet const& alphabet)
          : _text(text), _pos(0), _builder(alphabet), _alphabet(alphabet) {}

      Word run() {
        skip_space();
        while (_pos < _text.size()) {
          term();
          skip_space();
        }
        return std::move(_builder).word();
      }

     private:
      void skip_space() {
        while (_pos < _text.size()
               && std::isspace(static_cast<unsigned char>(_text[_pos]))) {
          ++_pos;
        }
      }

      bool at_digit() const {
        return _pos < _text.size()
               && std::isdigit(static_cast<unsigned char>(_text[_pos]));
      }

      std::string digits() {
        std::size_t start = _pos;
        while (at_digit()) {
          ++_pos;
        }
        return std::string(_text.substr(start, _pos - start));
      }

      void term() {
        std::size_t start = _pos;
        char        c     = _text[_pos];
        if (c == '1') {
          // "1" is accepted as an explicit identity term.
          ++_pos;
          if (at_digit()) {
            throw ParseError("unexpected digit after identity term", _pos);
          }
          return;
        }
        if (!std::isalpha(static_cast<unsigned char>(c))) {
          throw ParseError(std::string("unexpected character '") + c + "'",
                           start);
        }
        auto spec = _alphabet.find(c);
        if (!spec) {
          throw ParseError(std::string("unknown letter '") + c
                               + "' for alphabet " + _alphabet.name(),
                           start);
        }
        ++_pos;
        Generator g{c, 0};
        if (spec->indexed) {
          if (!at_digit()) {
            throw ParseError(std::string("letter '") + c
                                 + "' requires an index",
                             _pos);
          }
          std::size_t index_pos = _pos;
          std::string idx       = digits();
          Int         value(idx);
          if (value == 0) {
            throw ParseError("generator index must be at least 1", index_pos);
          }
          if (value > Int(std::numeric_limits<Index>::max())) {
            throw ParseError("generator index too large", index_pos);
          }
          g.index = static_cast<Index>(value);
        } else if (at_digit()) {
          throw ParseError(std::string("letter '") + c + "' takes no index",
                           _pos);
        }
        Int exp = 1;
        if (_pos < _text.size() && _text[_pos] == '^') {
          ++_pos;
          bool negative = false;
          if (_pos < _text.size() && (_text[_pos] == '-' || _text[_pos] == '+')) {
            negative = _text[_pos] == '-';
            ++_pos;
          }
          if (!at_digit()) {
            throw ParseError("expected exponent", _pos);
          }
          exp = Int(digits());
          if (negative) {
            exp = -exp;
          }
        }
        _builder.push(g, exp);
      }

      std::string_view _text;
      std::size_t      _pos;
      WordBuilder      _builder;
      Alphabet const&  _alphabet;
    };
  }  // namespace

  Word parse_word(std::string_view text, Alphabet const& alphabet) {
    return WordParser(text, alphabet).run();
  }

  std::string print_generator(Generator const& g) {
    std::string out(1, g.letter);
    if (g.index != 0) {
      out += std::to_string(g.index);
    }
    return out;
  }

  std::string print_word(Word const& w) {
    std::ostringstream out;
    bool               first = true;
    for (auto const& l : w.letters()) {
      if (!first) {
        out << ' ';
      }
      first = false;
      out << print_generator(l.gen);
      if (l.exp != 1) {
        out << '^' << l.exp;
      }
    }
    return out.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // Operations
  ////////////////////////////////////////////////////////////////////////

  Word concat(Word const& a, Word const& b) {
    WordBuilder builder(a.alphabet());
    builder.push(a).push(b);
    return std::move(builder).word();
  }

  Word invert(Word const& a) {
    WordBuilder builder(a.alphabet());
    auto const& letters = a.letters();
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
      builder.push(it->gen, -it->exp);
    }
    return std::move(builder).word();
  }

  Word free_reduce(Word const& a) {
    return a;
  }

  Word free_reduce(Alphabet const& alphabet, std::span<Letter const> letters) {
    WordBuilder builder(alphabet);
    for (auto const& l : letters) {
      builder.push(l.gen, l.exp);
    }
    return std::move(builder).word();
  }

  Word power(Word const& a, long n) {
    Word const  base = n < 0 ? invert(a) : a;
    WordBuilder builder(a.alphabet());
    for (long k = 0; k < (n < 0 ? -n : n); ++k) {
      builder.push(base);
    }
    return std::move(builder).word();
  }

  Word commutator(Word const& a, Word const& b) {
    WordBuilder builder(a.alphabet());
    builder.push(a).push(b).push(invert(a)).push(invert(b));
    return std::move(builder).word();
  }

  Word substitute(Word const&                      w,
                  std::map<Generator, Word> const& dict,
                  Alphabet const&                  target) {
    WordBuilder builder(target);
    for (auto const& l : w.letters()) {
      auto it = dict.find(l.gen);
      if (it == dict.end()) {
        throw PreconditionError("no substitution for generator " + print_generator(l.gen));
      }
      Word const image = l.exp < 0 ? invert(it->second) : it->second;
      for (Int k = abs(l.exp); k > 0; --k) {
        builder.push(image);
      }
    }
    return std::move(builder).word();
  }

}  // namespace wrembed
