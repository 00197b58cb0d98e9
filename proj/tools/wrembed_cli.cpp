// wrembed: command-line front end.
//
// Exit codes: 0 success, 1 usage or parse error, 2 UNKNOWN from a fueled base.

#include <cctype>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "wrembed/embed_g.hpp"
#include "wrembed/orders.hpp"
#include "wrembed/reductions.hpp"
#include "wrembed/wreath_l.hpp"

using namespace wrembed;
using json = nlohmann::ordered_json;

namespace {

  constexpr int exit_ok      = 0;
  constexpr int exit_usage   = 1;
  constexpr int exit_unknown = 2;

  class UsageError : public Error {
   public:
    using Error::Error;
  };

  struct Config {
    std::string                  base   = "free-abelian";
    std::string                  output = "text";
    std::optional<std::uint64_t> fuel;
  };

  std::shared_ptr<HaltingEnumerator> shared_enumerator() {
    static auto e = std::make_shared<HaltingEnumerator>();
    return e;
  }

  EnumeratedPair pair_by_name(std::string const& name) {
    if (name == "mock-odd-even") {
      return mock_pair("odd-even");
    }
    if (name == "mock-mod-three") {
      return mock_pair("mod-three");
    }
    if (name == "halting") {
      return halting_pair(shared_enumerator());
    }
    throw UsageError("unknown pair '" + name + "'");
  }

  Enumerator set_by_name(std::string const& name) {
    if (name == "mock") {
      return mock_re_set();
    }
    if (name == "halting") {
      return halting_pair(shared_enumerator()).enum_n;
    }
    throw UsageError("unknown r.e. set '" + name + "'");
  }

  // The active base group, with its order where one is available.
  struct Base {
    std::shared_ptr<GroupOracle const> group;
    std::shared_ptr<OrderOracle const> order;
    bool                               fueled = false;
  };

  Base make_base(Config const& cfg) {
    std::string const& b = cfg.base;
    if (b == "free-abelian") {
      return {std::make_shared<FreeAbelianGroup>(), std::make_shared<LexOrder>(), false};
    }
    if (b.rfind("insep:", 0) == 0) {
      EnumeratedPair pair = pair_by_name(b.substr(6));
      std::shared_ptr<OrderOracle const> order;
      if (pair.has_hint()) {
        order = std::make_shared<PairBasisOrder>(pair);
      }
      return {std::make_shared<InseparableGroup>(pair), order, false};
    }
    if (b.rfind("re:", 0) == 0) {
      std::string const name = b.substr(3);
      if (!cfg.fuel) {
        throw UsageError("base " + b + " is fueled; pass --fuel");
      }
      return {std::make_shared<RecursiveGroup>(name, set_by_name(name)), nullptr, true};
    }
    throw UsageError("unknown base '" + b + "'");
  }

  Alphabet group_alphabet(std::string const& group, Base const& base) {
    if (group == "G") {
      return Alphabet::wreath_g();
    }
    if (group == "L") {
      return Alphabet::wreath_l();
    }
    return base.group->alphabet();
  }

  std::string text_word(Word const& w) {
    return w.is_identity() ? "1" : print_word(w);
  }

  class Printer {
   public:
    explicit Printer(Config const& cfg) : _structured(cfg.output == "structured") {}

    bool structured() const noexcept {
      return _structured;
    }

    void emit(std::string const& text, json const& record) const {
      if (_structured) {
        std::cout << record.dump() << '\n';
      } else {
        std::cout << text << '\n';
      }
    }

   private:
    bool _structured;
  };

  int cmd_normalize(Config const& cfg, std::string const& group, std::string const& text) {
    Printer const p(cfg);
    std::string   nf;
    if (group == "G") {
      nf = g_serialize(g_from_word(parse_word(text, Alphabet::wreath_g())));
    } else {
      nf = l_serialize(l_from_word(parse_word(text, Alphabet::wreath_l())));
    }
    p.emit(nf, {{"command", "normalize"}, {"group", group}, {"input", text}, {"normal_form", nf}});
    return exit_ok;
  }

  int cmd_trivial(Config const& cfg, std::string const& group, std::string const& text) {
    Printer const p(cfg);
    Base const    base = make_base(cfg);
    Word const    w    = parse_word(text, group_alphabet(group, base));
    json          record{{"command", "trivial"}, {"base", cfg.base}, {"group", group}, {"input", text}};
    if (!base.fueled) {
      Triviality t;
      if (group == "G") {
        t = g_is_trivial(g_from_word(w), *base.group);
      } else if (group == "L") {
        t = l_is_trivial(l_from_word(w), *base.group);
      } else {
        t = base.group->decide(w);
      }
      record["verdict"] = to_string(t);
      p.emit(to_string(t), record);
      return exit_ok;
    }
    SemiReport report;
    if (group == "G") {
      report = g_semi_trivial(g_from_word(w), *base.group, *cfg.fuel);
    } else if (group == "H") {
      report.verdict = base.group->semi_decide(w, *cfg.fuel);
    } else {
      throw UsageError("fueled bases support --group G or H");
    }
    record["fuel"]    = *cfg.fuel;
    record["verdict"] = to_string(report.verdict);
    record["refuted"] = report.refuted;
    if (!report.reason.empty()) {
      record["reason"] = report.reason;
    }
    p.emit(to_string(report.verdict), record);
    return report.verdict == SemiVerdict::trivial ? exit_ok : exit_unknown;
  }

  int cmd_member(Config const& cfg, std::string const& subgroup, std::string const& text) {
    Printer const p(cfg);
    Base const    base = make_base(cfg);
    if (base.fueled) {
      throw UsageError("membership needs a base with a total decider");
    }
    Membership m;
    if (subgroup == "image") {
      m = g_in_image(g_from_word(parse_word(text, Alphabet::wreath_g())), *base.group);
    } else if (subgroup == "N2") {
      m = g_in_N2(g_from_word(parse_word(text, Alphabet::wreath_g())));
    } else {
      m = l_in_diag(l_from_word(parse_word(text, Alphabet::wreath_l())), *base.group);
    }
    p.emit(to_string(m),
           {{"command", "member"}, {"base", cfg.base}, {"subgroup", subgroup}, {"input", text},
            {"verdict", to_string(m)}});
    return exit_ok;
  }

  int cmd_compare(Config const& cfg, std::string const& group, std::string const& u, std::string const& v) {
    Printer const p(cfg);
    Base const    base = make_base(cfg);
    if (!base.order) {
      throw UsageError("base " + cfg.base + " has no computable order");
    }
    OrderTrace trace;
    if (group == "G") {
      Alphabet const a = Alphabet::wreath_g();
      trace = g_compare(g_from_word(parse_word(u, a)), g_from_word(parse_word(v, a)), *base.order, *base.group);
    } else if (group == "L") {
      Alphabet const a = Alphabet::wreath_l();
      trace = l_compare(l_from_word(parse_word(u, a)), l_from_word(parse_word(v, a)), *base.order, *base.group);
    } else {
      Alphabet const a  = base.group->alphabet();
      Word const     wu = parse_word(u, a), wv = parse_word(v, a);
      trace.result = base.order->less(wu, wv)   ? Cmp::lt
                     : base.order->less(wv, wu) ? Cmp::gt
                                                : Cmp::eq;
      trace.clause = "base order";
    }
    std::string const r = to_string(trace.result);
    p.emit(r + " (" + trace.clause + ")",
           {{"command", "compare"}, {"base", cfg.base}, {"group", group}, {"u", u}, {"v", v},
            {"result", r}, {"clause", trace.clause}});
    return exit_ok;
  }

  bool all_digits(std::string const& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
  }

  int cmd_encode(Config const& cfg, std::string const& arg) {
    Printer const p(cfg);
    Word          out(Alphabet::wreath_g());
    if (all_digits(arg)) {
      Index const i = std::stoull(arg);
      out           = phi_word(i);
    } else {
      Base const base = make_base(cfg);
      Word const u    = parse_word(arg, base.group->alphabet());
      std::map<Generator, Word> dict;
      for (auto const& l : u.letters()) {
        dict.insert_or_assign(l.gen, phi_word(l.gen.index));
      }
      out = substitute(u, dict, Alphabet::wreath_g());
    }
    std::string const text = text_word(out);
    p.emit(text, {{"command", "encode"}, {"input", arg}, {"word", text}});
    return exit_ok;
  }

  int cmd_decode(Config const& cfg, std::string const& text) {
    Printer const p(cfg);
    Base const    base = make_base(cfg);
    if (base.fueled) {
      throw UsageError("decoding needs a base with a total decider");
    }
    GElement const a = g_from_word(parse_word(text, Alphabet::wreath_g()));
    if (g_in_image(a, *base.group) != Membership::member) {
      throw UsageError("word is not in the image of the embedding: " + text);
    }
    std::string const out = text_word(phi_decode(a, *base.group));
    p.emit(out, {{"command", "decode"}, {"base", cfg.base}, {"input", text}, {"word", out}});
    return exit_ok;
  }

  void emit_separator(Printer const& p, SeparatorReport const& report) {
    std::size_t in_L = 0;
    for (std::size_t k = 0; k < report.verdicts.size(); ++k) {
      auto const& v = report.verdicts[k];
      in_L += v.in_L;
      p.emit("", {{"n", v.n}, {"verdict", v.in_L ? "in_L" : "out_L"}, {"u_odd_vs_1", to_string(v.odd_vs_one)},
                  {"u_even_vs_1", to_string(v.even_vs_one)}, {"side", std::string(1, report.sides[k])}});
    }
    json violations = json::array();
    for (auto const& v : report.violations) {
      violations.push_back(v);
    }
    json p_order = json::array();
    for (auto const& v : report.p_order.violations) {
      p_order.push_back({{"axiom", to_string(v.axiom)}, {"g", print_word(v.g)}, {"h", print_word(v.h)}});
    }
    p.emit("", {{"summary", true}, {"pair", report.pair_name}, {"probed", report.verdicts.size()},
                {"in_L", in_L}, {"out_L", report.verdicts.size() - in_L}, {"violations", violations},
                {"p_order_violations", p_order}});
  }

  int cmd_theorem1(Config const& cfg, std::string const& pair_name, Index max_n, std::string const& report_path) {
    Printer const p(cfg);
    EnumeratedPair const pair = pair_by_name(pair_name);
    if (!pair.has_hint()) {
      throw UsageError("pair " + pair_name + " has no computable order to feed the separator");
    }
    SeparatorReport const report = theorem1_demo(pair, max_n);
    if (!report_path.empty()) {
      std::ofstream file(report_path);
      if (!file) {
        throw UsageError("cannot write " + report_path);
      }
      write_report(file, report);
      p.emit(report_path, {{"command", "demo theorem1"}, {"report", report_path}, {"ok", report.ok()}});
    } else if (p.structured()) {
      emit_separator(p, report);
    } else {
      write_report(std::cout, report);
    }
    return exit_ok;
  }

  int cmd_theorem2(Config const& cfg, std::string const& set_name, Index max_n) {
    Printer const p(cfg);
    if (!cfg.fuel) {
      throw UsageError("demo theorem2 needs --fuel");
    }
    Enumerator const set     = set_by_name(set_name);
    std::size_t      trivial = 0;
    if (!p.structured()) {
      std::cout << "n,verdict,refuted\n";
    }
    for (Index n = 1; n <= max_n; ++n) {
      ProbeResult const r = theorem2_probe(n, set, *cfg.fuel);
      trivial += r.report.verdict == SemiVerdict::trivial;
      std::string const verdict = to_string(r.report.verdict);
      p.emit(std::to_string(n) + "," + verdict + "," + (r.report.refuted ? "yes" : "no"),
             {{"n", n}, {"fuel", *cfg.fuel}, {"verdict", verdict}, {"refuted", r.report.refuted}});
    }
    p.emit("summary,set," + set_name + "\nsummary,probed," + std::to_string(max_n) + "\nsummary,trivial,"
               + std::to_string(trivial),
           {{"summary", true}, {"set", set_name}, {"probed", max_n}, {"trivial", trivial}});
    return exit_ok;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Word problem, membership and order deciders for a two-generated wreath embedding"};
  app.require_subcommand(1);
  app.fallthrough();

  Config cfg;
  app.add_option("--base", cfg.base,
                 "free-abelian | insep:mock-odd-even | insep:mock-mod-three | insep:halting | re:mock | re:halting")
      ->capture_default_str();
  app.add_option("--output", cfg.output, "text | structured")
      ->check(CLI::IsMember({"text", "structured"}))
      ->capture_default_str();
  app.add_option_function<std::uint64_t>("--fuel", [&cfg](std::uint64_t f) { cfg.fuel = f; },
                                         "resource bound for fueled bases");

  std::string group = "G", word, other, subgroup = "image", pair = "mock-odd-even", set = "mock", report;
  Index       max_n = 10;

  auto* normalize = app.add_subcommand("normalize", "print the normal form of a G- or L-word");
  normalize->add_option("--group", group, "G | L")->check(CLI::IsMember({"G", "L"}))->capture_default_str();
  normalize->add_option("word", word)->required();

  auto* trivial = app.add_subcommand("trivial", "decide whether a word is the identity");
  trivial->add_option("--group", group, "G | L | H")->check(CLI::IsMember({"G", "L", "H"}))->capture_default_str();
  trivial->add_option("word", word)->required();

  auto* member = app.add_subcommand("member", "subgroup membership of a G- or L-word");
  member->add_option("--subgroup", subgroup, "image (of H in G) | N2 (in G) | diag (of H in L)")
      ->check(CLI::IsMember({"image", "N2", "diag"}))
      ->capture_default_str();
  member->add_option("word", word)->required();

  auto* compare = app.add_subcommand("compare", "compare two words in the lifted order");
  compare->add_option("--group", group, "G | L | H")->check(CLI::IsMember({"G", "L", "H"}))->capture_default_str();
  compare->add_option("u", word)->required();
  compare->add_option("v", other)->required();

  auto* encode = app.add_subcommand("encode", "image in G of a generator index or an H-word");
  encode->add_option("input", word)->required();

  auto* decode = app.add_subcommand("decode", "H-word of an element of the image");
  decode->add_option("word", word)->required();

  auto* demo = app.add_subcommand("demo", "run a reduction over a range of indices");
  demo->require_subcommand(1);
  auto* theorem1 = demo->add_subcommand("theorem1", "separator from the lifted order");
  theorem1->add_option("--pair", pair, "mock-odd-even | mock-mod-three")->capture_default_str();
  theorem1->add_option("--max-n", max_n)->capture_default_str();
  theorem1->add_option("--report", report, "write the report to this file and print its path");
  auto* theorem2 = demo->add_subcommand("theorem2", "fueled probes of a_{2n} a_{2n-1}^-1");
  theorem2->add_option("--set", set, "mock | halting")->capture_default_str();
  theorem2->add_option("--max-n", max_n)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    if (*normalize) {
      return cmd_normalize(cfg, group, word);
    }
    if (*trivial) {
      return cmd_trivial(cfg, group, word);
    }
    if (*member) {
      return cmd_member(cfg, subgroup, word);
    }
    if (*compare) {
      return cmd_compare(cfg, group, word, other);
    }
    if (*encode) {
      return cmd_encode(cfg, word);
    }
    if (*decode) {
      return cmd_decode(cfg, word);
    }
    if (*theorem1) {
      return cmd_theorem1(cfg, pair, max_n, report);
    }
    if (*theorem2) {
      return cmd_theorem2(cfg, set, max_n);
    }
  } catch (ParseError const& e) {
    std::cerr << "parse error at position " << e.position() << ": " << e.what() << '\n';
    return exit_usage;
  } catch (Error const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}
