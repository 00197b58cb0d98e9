#include "wrembed/base_groups.hpp"

#include <mutex>
#include <vector>

namespace wrembed {

  std::string to_string(Triviality t) {
    return t == Triviality::trivial ? "TRIVIAL" : "NONTRIVIAL";
  }

  std::string to_string(SemiVerdict v) {
    return v == SemiVerdict::trivial ? "TRIVIAL" : "UNKNOWN";
  }

  std::string to_string(Membership m) {
    return m == Membership::member ? "MEMBER" : "NONMEMBER";
  }

  Triviality GroupOracle::decide(Word const&) const {
    throw PreconditionError(name() + " has no total word-problem decider");
  }

  SemiVerdict GroupOracle::semi_decide(Word const& w, std::uint64_t) const {
    return decide(w) == Triviality::trivial ? SemiVerdict::trivial
                                            : SemiVerdict::unknown;
  }

  void GroupOracle::check_alphabet(Word const& w) const {
    if (!(w.alphabet() == alphabet())) {
      throw AlphabetMismatch(name() + " expects words over "
                             + alphabet().name() + ", got "
                             + w.alphabet().name());
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // ExpVector
  ////////////////////////////////////////////////////////////////////////

  ExpVector ExpVector::from_word(Word const& w) {
    if (!w.alphabet().is_base()) {
      throw AlphabetMismatch("abelian words must be over a single indexed "
                             "letter, got alphabet "
                             + w.alphabet().name());
    }
    ExpVector e;
    for (auto const& l : w.letters()) {
      e.add(l.gen.index, l.exp);
    }
    return e;
  }

  Int ExpVector::get(Index k) const {
    auto it = _entries.find(k);
    return it == _entries.end() ? Int(0) : it->second;
  }

  void ExpVector::add(Index k, Int const& delta) {
    if (delta == 0) {
      return;
    }
    auto [it, inserted] = _entries.try_emplace(k, delta);
    if (!inserted) {
      it->second += delta;
      if (it->second == 0) {
        _entries.erase(it);
      }
    }
  }

  Int ExpVector::letter_count() const {
    Int total = 0;
    for (auto const& [k, v] : _entries) {
      total += abs(v);
    }
    return total;
  }

  ////////////////////////////////////////////////////////////////////////
  // Primes
  ////////////////////////////////////////////////////////////////////////

  std::uint64_t prime(Index i) {
    if (i == 0) {
      throw PreconditionError("prime indices start at 1");
    }
    static std::mutex                 mutex;
    static std::vector<std::uint64_t> primes{2, 3};
    std::lock_guard<std::mutex>       lock(mutex);
    while (primes.size() < i) {
      std::uint64_t candidate = primes.back() + 2;
      for (;; candidate += 2) {
        bool composite = false;
        for (std::uint64_t p : primes) {
          if (p * p > candidate) {
            break;
          }
          if (candidate % p == 0) {
            composite = true;
            break;
          }
        }
        if (!composite) {
          break;
        }
      }
      primes.push_back(candidate);
    }
    return primes[i - 1];
  }

  ////////////////////////////////////////////////////////////////////////
  // Enumerated pairs
  ////////////////////////////////////////////////////////////////////////

  EnumeratedPair mock_pair(std::string const& kind) {
    using Side = PairPosition::Side;
    if (kind == "odd-even") {
      return {"mock-odd-even",
              [](Index i) { return 2 * i - 1; },
              [](Index i) { return 2 * i; },
              [](Index k) -> std::optional<PairPosition> {
                if (k == 0) {
                  return std::nullopt;
                }
                if (k % 2 == 1) {
                  return PairPosition{Side::n_side, (k + 1) / 2};
                }
                return PairPosition{Side::m_side, k / 2};
              }};
    }
    if (kind == "mod-three") {
      return {"mock-mod-three",
              [](Index i) { return 3 * i - 2; },
              [](Index i) { return 3 * i - 1; },
              [](Index k) -> std::optional<PairPosition> {
                if (k == 0 || k % 3 == 0) {
                  return std::nullopt;
                }
                if (k % 3 == 1) {
                  return PairPosition{Side::n_side, (k + 2) / 3};
                }
                return PairPosition{Side::m_side, (k + 1) / 3};
              }};
    }
    throw Error("unknown mock pair '" + kind
                + "' (expected odd-even or mod-three)");
  }

  EnumeratedPair halting_pair(std::shared_ptr<HaltingEnumerator> enumerator) {
    return {"halting",
            [enumerator](Index i) { return enumerator->halting(i); },
            [enumerator](Index i) { return enumerator->cycling(i); },
            {}};
  }

  EnumeratedPair halting_pair() {
    static auto shared = std::make_shared<HaltingEnumerator>();
    return halting_pair(shared);
  }

  Enumerator mock_re_set() {
    return [](Index i) { return 2 * i - 1; };
  }

  bool mock_re_set_contains(Index n) {
    return n % 2 == 1;
  }

  ////////////////////////////////////////////////////////////////////////
  // Deciders
  ////////////////////////////////////////////////////////////////////////

  Triviality free_abelian_decide(Word const& w) {
    return ExpVector::from_word(w).is_zero() ? Triviality::trivial
                                             : Triviality::nontrivial;
  }

  namespace {
    // Removes one instance of (a_{2k} a_{2k-1}^{-sign p})^{±1} if its letters
    // are present with compatible signs. sign = +1 for the N-family
    // (a_{2k} = a_{2k-1}^p), -1 for the M-family (a_{2k} = a_{2k-1}^{-p}).
    bool remove_relator(ExpVector& e, Index k, Int const& p, int sign) {
      Int const top = e.get(2 * k);
      Int const low = e.get(2 * k - 1);
      // a forward instance contributes a_{2k}^{+1} a_{2k-1}^{-sign p}
      if (top >= 1 && (sign > 0 ? low <= -p : low >= p)) {
        e.add(2 * k, -1);
        e.add(2 * k - 1, sign * p);
        return true;
      }
      if (top <= -1 && (sign > 0 ? low >= p : low <= -p)) {
        e.add(2 * k, 1);
        e.add(2 * k - 1, -sign * p);
        return true;
      }
      return false;
    }
  }  // namespace

  Triviality insep_decide(Word const& w, EnumeratedPair const& pair) {
    ExpVector e = ExpVector::from_word(w);
    bool      removed;
    do {
      removed         = false;
      Int const count = e.letter_count();
      for (Index i = 1; Int(prime(i)) + 1 <= count; ++i) {
        Int const p = prime(i);
        if (remove_relator(e, pair.enum_n(i), p, +1)
            || remove_relator(e, pair.enum_m(i), p, -1)) {
          removed = true;
          break;
        }
      }
    } while (removed);
    return e.is_zero() ? Triviality::trivial : Triviality::nontrivial;
  }

  std::map<std::pair<Index, int>, Int>
  pair_basis_coordinates(ExpVector const& e, EnumeratedPair const& pair) {
    if (!pair.has_hint()) {
      throw PreconditionError("pair " + pair.name
                              + " has no decidable membership hint");
    }
    std::map<std::pair<Index, int>, Int> coords;
    auto put = [&coords](Index k, int slot, Int const& v) {
      if (v != 0) {
        coords[{k, slot}] += v;
        if (coords[{k, slot}] == 0) {
          coords.erase({k, slot});
        }
      }
    };
    std::map<Index, bool> seen;
    for (auto const& [idx, exp] : e.entries()) {
      Index const k = (idx + 1) / 2;
      if (seen[k]) {
        continue;
      }
      seen[k]        = true;
      Int const low  = e.get(2 * k - 1);
      Int const high = e.get(2 * k);
      auto      pos  = pair.classify(k);
      if (!pos) {
        put(k, 0, low);
        put(k, 1, high);
        continue;
      }
      Int const p = prime(pos->position);
      if (pos->side == PairPosition::Side::n_side) {
        put(k, 0, low + p * high);
      } else {
        put(k, 0, low - p * high);
      }
    }
    return coords;
  }

  Triviality insep_bruteforce(Word const& w, EnumeratedPair const& pair) {
    return pair_basis_coordinates(ExpVector::from_word(w), pair).empty()
               ? Triviality::trivial
               : Triviality::nontrivial;
  }

  SemiVerdict re_semi_decide(Word const&       w,
                             Enumerator const& set_n,
                             std::uint64_t     fuel) {
    ExpVector const e = ExpVector::from_word(w);

    std::map<Index, Index> parent;
    auto find = [&parent](Index x) {
      for (auto it = parent.find(x); it != parent.end(); it = parent.find(x)) {
        x = it->second;
      }
      return x;
    };
    auto all_classes_vanish = [&] {
      std::map<Index, Int> sums;
      for (auto const& [k, v] : e.entries()) {
        sums[find(k)] += v;
      }
      for (auto const& [root, sum] : sums) {
        if (sum != 0) {
          return false;
        }
      }
      return true;
    };

    if (e.is_zero()) {
      return SemiVerdict::trivial;
    }
    for (std::uint64_t i = 1; i <= fuel; ++i) {
      Index const n = set_n(i);
      Index const a = find(2 * n), b = find(2 * n - 1);
      if (a == b) {
        continue;
      }
      parent[a] = b;
      bool touches = e.entries().count(2 * n) != 0
                     || e.entries().count(2 * n - 1) != 0;
      if (touches && all_classes_vanish()) {
        return SemiVerdict::trivial;
      }
    }
    return SemiVerdict::unknown;
  }

  ////////////////////////////////////////////////////////////////////////
  // Oracles
  ////////////////////////////////////////////////////////////////////////

  FreeAbelianGroup::FreeAbelianGroup(char letter)
      : _alphabet(Alphabet::base(letter)) {}

  Triviality FreeAbelianGroup::decide(Word const& w) const {
    check_alphabet(w);
    return free_abelian_decide(w);
  }

  InseparableGroup::InseparableGroup(EnumeratedPair pair, char letter)
      : _pair(std::move(pair)), _alphabet(Alphabet::base(letter)) {}

  Triviality InseparableGroup::decide(Word const& w) const {
    check_alphabet(w);
    return insep_decide(w, _pair);
  }

  RecursiveGroup::RecursiveGroup(std::string set_name,
                                 Enumerator  set_n,
                                 char        letter)
      : _set_name(std::move(set_name)),
        _set_n(std::move(set_n)),
        _alphabet(Alphabet::base(letter)) {}

  SemiVerdict RecursiveGroup::semi_decide(Word const& w, std::uint64_t fuel) const {
    check_alphabet(w);
    return re_semi_decide(w, _set_n, fuel);
  }

}  // namespace wrembed
