#pragma once

// Random inputs shared by the unit and acceptance suites.

#include <algorithm>
#include <random>
#include <vector>

#include "wrembed/base_groups.hpp"
#include "wrembed/embed_g.hpp"
#include "wrembed/wreath_l.hpp"
#include "wrembed/words.hpp"

namespace wrembed::testing {

  using Rng = std::mt19937_64;

  inline long uniform(Rng& rng, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
  }

  inline long nonzero(Rng& rng, long bound) {
    long v = uniform(rng, 1, bound);
    return uniform(rng, 0, 1) ? v : -v;
  }

  // Up to max_letters letters x_i^{±1}, i <= max_index.
  inline Word random_h_word(Rng& rng,
                            std::size_t max_letters,
                            Index       max_index,
                            char        letter = 'x') {
    std::vector<Letter> letters;
    std::size_t         n = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(max_letters)));
    for (std::size_t k = 0; k < n; ++k) {
      letters.push_back({{letter, static_cast<Index>(uniform(rng, 1, static_cast<long>(max_index)))},
                         Int(nonzero(rng, 1))});
    }
    return Word(Alphabet::base(letter), letters);
  }

  // An abelian-trivial word: a random half and a shuffled copy of its
  // inverse letters, at most max_letters letters in total.
  inline Word random_abelian_trivial_word(Rng& rng,
                                          std::size_t max_letters,
                                          Index       max_index,
                                          char        letter = 'x') {
    std::vector<Letter> half;
    std::size_t         n = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(max_letters / 2)));
    for (std::size_t k = 0; k < n; ++k) {
      half.push_back({{letter, static_cast<Index>(uniform(rng, 1, static_cast<long>(max_index)))},
                      Int(nonzero(rng, 1))});
    }
    std::vector<Letter> all = half;
    for (auto const& l : half) {
      all.push_back({l.gen, -l.exp});
    }
    std::shuffle(all.begin(), all.end(), rng);
    return Word(Alphabet::base(letter), all);
  }

  inline Word random_word(Rng& rng, Alphabet const& alphabet, std::size_t max_runs, long max_exp, Index max_index) {
    std::vector<Letter> letters;
    std::size_t         n = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(max_runs)));
    auto const&         specs = alphabet.letters();
    for (std::size_t k = 0; k < n; ++k) {
      auto const& spec = specs[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(specs.size()) - 1))];
      Index       idx  = spec.indexed ? static_cast<Index>(uniform(rng, 1, static_cast<long>(max_index))) : 0;
      letters.push_back({{spec.letter, idx}, Int(nonzero(rng, max_exp))});
    }
    return Word(alphabet, letters);
  }

  inline GElement random_gelement(Rng& rng,
                                  std::size_t max_factors,
                                  long        max_shift,
                                  long        max_power,
                                  long        max_delta) {
    std::vector<GFactor> fs;
    std::size_t          n = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(max_factors)));
    for (std::size_t k = 0; k < n; ++k) {
      fs.push_back({Int(uniform(rng, -max_shift, max_shift)), Int(nonzero(rng, max_power))});
    }
    return GElement(fs, Int(uniform(rng, -max_delta, max_delta)));
  }

  inline LElement random_lelement(Rng& rng,
                                  std::size_t max_factors,
                                  long        max_shift,
                                  Index       max_index,
                                  long        max_power,
                                  long        max_tail) {
    std::vector<LFactor> fs;
    std::size_t          n = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(max_factors)));
    for (std::size_t k = 0; k < n; ++k) {
      fs.push_back({static_cast<Index>(uniform(rng, 1, static_cast<long>(max_index))),
                    Int(uniform(rng, -max_shift, max_shift)),
                    Int(nonzero(rng, max_power))});
    }
    return LElement(fs, Int(uniform(rng, -max_tail, max_tail)));
  }

  // Words over a_1..a_{2 max_pair} for the inseparable-pair group, trivial
  // about half the time: a sum of relator instances (a_{2k} a_{2k-1}^{∓p})^{±1}
  // with shuffled letters, optionally perturbed by one letter.
  inline Word random_insep_word(Rng& rng, EnumeratedPair const& pair, Index max_pair, std::size_t max_letters) {
    std::vector<Letter> letters;
    std::size_t         budget = max_letters;
    for (int attempt = 0; attempt < 6; ++attempt) {
      Index const k   = static_cast<Index>(uniform(rng, 1, static_cast<long>(max_pair)));
      auto const  pos = pair.classify(k);
      if (!pos) {
        continue;
      }
      long const p = static_cast<long>(prime(pos->position));
      if (static_cast<std::size_t>(p + 1) > budget) {
        continue;
      }
      budget -= static_cast<std::size_t>(p + 1);
      long const sign = uniform(rng, 0, 1) ? 1 : -1;
      // a_{2k}^{sign} a_{2k-1}^{-sign * (±p)}
      long const low = pos->side == PairPosition::Side::n_side ? -sign * p : sign * p;
      letters.push_back({{'a', 2 * k}, Int(sign)});
      for (long t = 0; t < p; ++t) {
        letters.push_back({{'a', 2 * k - 1}, Int(low > 0 ? 1 : -1)});
      }
    }
    if (budget > 0 && uniform(rng, 0, 1)) {
      letters.push_back({{'a', static_cast<Index>(uniform(rng, 1, static_cast<long>(2 * max_pair)))},
                         Int(nonzero(rng, 1))});
    }
    std::shuffle(letters.begin(), letters.end(), rng);
    return Word(Alphabet::base('a'), letters);
  }

}  // namespace wrembed::testing
