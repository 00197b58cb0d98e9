#include "wrembed/orders.hpp"

namespace wrembed {

  std::string to_string(Cmp c) {
    switch (c) {
      case Cmp::lt:
        return "LT";
      case Cmp::eq:
        return "EQ";
      case Cmp::gt:
        return "GT";
    }
    return "EQ";
  }

  namespace {
    // Sign of the first nonzero entry of (v - u), over any ordered key.
    template <typename Map>
    bool first_difference_positive(Map const& u, Map const& v) {
      auto iu = u.begin();
      auto iv = v.begin();
      while (iu != u.end() || iv != v.end()) {
        if (iv == v.end() || (iu != u.end() && iu->first < iv->first)) {
          return iu->second < 0;  // v has 0 here
        }
        if (iu == u.end() || iv->first < iu->first) {
          return iv->second > 0;
        }
        if (iu->second != iv->second) {
          return iu->second < iv->second;
        }
        ++iu;
        ++iv;
      }
      return false;
    }
  }  // namespace

  bool lex_less(Word const& u, Word const& v) {
    return first_difference_positive(ExpVector::from_word(u).entries(),
                                     ExpVector::from_word(v).entries());
  }

  bool LexOrder::less(Word const& u, Word const& v) const {
    if (!(u.alphabet() == _alphabet) || !(v.alphabet() == _alphabet)) {
      throw AlphabetMismatch("lex order expects words over " + _alphabet.name());
    }
    return lex_less(u, v);
  }

  PairBasisOrder::PairBasisOrder(EnumeratedPair pair, char letter)
      : _pair(std::move(pair)), _alphabet(Alphabet::base(letter)) {
    if (!_pair.has_hint()) {
      throw PreconditionError("pair " + _pair.name
                              + " has no decidable hint; no computable order "
                                "is available");
    }
  }

  bool PairBasisOrder::less(Word const& u, Word const& v) const {
    if (!(u.alphabet() == _alphabet) || !(v.alphabet() == _alphabet)) {
      throw AlphabetMismatch("pair order expects words over " + _alphabet.name());
    }
    return first_difference_positive(
        pair_basis_coordinates(ExpVector::from_word(u), _pair),
        pair_basis_coordinates(ExpVector::from_word(v), _pair));
  }

  ////////////////////////////////////////////////////////////////////////
  // Lifted orders
  ////////////////////////////////////////////////////////////////////////

  OrderTrace l_compare(LElement const&    a,
                       LElement const&    b,
                       OrderOracle const& H_ord,
                       GroupOracle const& H) {
    if (a.tail() != b.tail()) {
      return {a.tail() < b.tail() ? Cmp::lt : Cmp::gt, "z-exponent"};
    }
    auto const nu = l_min_support(l_mul(a, l_inv(b)), H);
    if (!nu) {
      return {Cmp::eq, "equal"};
    }
    bool const lt = H_ord.less(l_eval(a, *nu, H.alphabet()),
                               l_eval(b, *nu, H.alphabet()));
    return {lt ? Cmp::lt : Cmp::gt, "base at z^" + nu->str()};
  }

  bool l_less(LElement const&    a,
              LElement const&    b,
              OrderOracle const& H_ord,
              GroupOracle const& H) {
    return l_compare(a, b, H_ord, H).result == Cmp::lt;
  }

  OrderTrace g_compare(GElement const&    a,
                       GElement const&    b,
                       OrderOracle const& H_ord,
                       GroupOracle const& H) {
    if (a.delta() != b.delta()) {
      return {a.delta() < b.delta() ? Cmp::lt : Cmp::gt, "s-exponent"};
    }
    auto const mu = g_min_support(g_mul(a, g_inv(b)), H);
    if (!mu) {
      return {Cmp::eq, "equal"};
    }
    OrderTrace inner = l_compare(g_eval(a, *mu), g_eval(b, *mu), H_ord, H);
    return {inner.result, "base at s^" + mu->str() + " / " + inner.clause};
  }

  bool g_less(GElement const&    a,
              GElement const&    b,
              OrderOracle const& H_ord,
              GroupOracle const& H) {
    return g_compare(a, b, H_ord, H).result == Cmp::lt;
  }

  EmbeddedGroup::EmbeddedGroup(std::shared_ptr<GroupOracle const> base)
      : _base(std::move(base)), _alphabet(Alphabet::wreath_g()) {}

  Triviality EmbeddedGroup::decide(Word const& w) const {
    check_alphabet(w);
    if (!_base->has_decider()) {
      return GroupOracle::decide(w);
    }
    return g_is_trivial(g_from_word(w), *_base);
  }

  SemiVerdict EmbeddedGroup::semi_decide(Word const& w, std::uint64_t fuel) const {
    check_alphabet(w);
    return g_semi_trivial(g_from_word(w), *_base, fuel).verdict;
  }

  LiftedGOrder::LiftedGOrder(std::shared_ptr<OrderOracle const> base_order,
                             std::shared_ptr<GroupOracle const> base_group)
      : _base_order(std::move(base_order)),
        _base_group(std::move(base_group)),
        _alphabet(Alphabet::wreath_g()) {
    if (!(_base_order->alphabet() == _base_group->alphabet())) {
      throw AlphabetMismatch("base order and base group use different alphabets");
    }
  }

  OrderTrace LiftedGOrder::compare(Word const& u, Word const& v) const {
    return g_compare(g_from_word(u), g_from_word(v), *_base_order, *_base_group);
  }

  bool LiftedGOrder::less(Word const& u, Word const& v) const {
    return compare(u, v).result == Cmp::lt;
  }

  bool transport_less(Word const&                      w1,
                      Word const&                      w2,
                      std::map<Generator, Word> const& dict,
                      OrderOracle const&               x_order) {
    Alphabet const& target = x_order.alphabet();
    return x_order.less(substitute(w1, dict, target),
                        substitute(w2, dict, target));
  }

  ////////////////////////////////////////////////////////////////////////
  // p-order axioms
  ////////////////////////////////////////////////////////////////////////

  std::string to_string(POrderViolation::Axiom a) {
    switch (a) {
      case POrderViolation::Axiom::antisymmetry:
        return "antisymmetry";
      case POrderViolation::Axiom::inverse:
        return "inverse";
      case POrderViolation::Axiom::power:
        return "power";
    }
    return "";
  }

  Relation non_strict(OrderOracle const& order, GroupOracle const& wp) {
    return [&order, &wp](Word const& u, Word const& v) {
      return order.less(u, v)
             || wp.decide(concat(u, invert(v))) == Triviality::trivial;
    };
  }

  POrderReport check_p_order(std::vector<Word> const& sample,
                             Relation const&          R,
                             GroupOracle const&       wp,
                             long                     n_max) {
    using Axiom = POrderViolation::Axiom;
    POrderReport report;
    Word const   one(wp.alphabet());
    for (std::size_t i = 0; i < sample.size(); ++i) {
      Word const& g = sample[i];
      for (std::size_t j = i; j < sample.size(); ++j) {
        Word const& h = sample[j];
        if (R(g, h) && R(h, g)
            && wp.decide(concat(g, invert(h))) != Triviality::trivial) {
          report.violations.push_back({Axiom::antisymmetry, g, h, 0});
        }
      }
      if (!R(one, g)) {
        continue;
      }
      Word const g_inv = invert(g);
      if (!R(g_inv, one)) {
        report.violations.push_back({Axiom::inverse, g, g_inv, 0});
      }
      for (long n = 2; n <= n_max; ++n) {
        Word const gn = power(g, n);
        if (!R(one, gn)) {
          report.violations.push_back({Axiom::power, g, gn, n});
        }
      }
    }
    return report;
  }

}  // namespace wrembed
