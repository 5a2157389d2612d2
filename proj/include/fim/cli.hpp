#pragma once

// Command-line front end: parsing of expressions/words/triples, JSON and
// DOT output, and the exit-code contract (0 holds, 1 fails with witness,
// 2 error).

#include <cstdint>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fim/cutpaste.hpp"
#include "fim/decide.hpp"
#include "fim/element.hpp"
#include "fim/errors.hpp"
#include "fim/membership.hpp"
#include "fim/munn.hpp"
#include "fim/quotient.hpp"
#include "fim/rataut.hpp"
#include "fim/submonoid.hpp"

namespace fim::cli {

using nlohmann::json;

inline json automaton_to_json(const Automaton& a) {
  json edges = json::array();
  for (auto& [p, s, q] : a.edges)
    edges.push_back({p, std::string(1, letter_char(s)), q});
  return {{"states", a.states},
          {"initial", a.initial},
          {"terminal", a.terminal},
          {"edges", edges}};
}

inline Automaton automaton_from_json(const json& j) {
  Automaton a;
  a.states = j.at("states").get<int>();
  a.initial = j.at("initial").get<std::vector<int>>();
  a.terminal = j.at("terminal").get<std::vector<int>>();
  for (const auto& e : j.at("edges")) {
    int p = e.at(0).get<int>(), q = e.at(2).get<int>();
    std::string l = e.at(1).get<std::string>();
    if (l != "a" && l != "A") throw parse_error("edge letter must be a or A", 0);
    if (p < 0 || p >= a.states || q < 0 || q >= a.states)
      throw parse_error("edge endpoint out of range", 0);
    a.edges.emplace_back(p, l == "a" ? 1 : -1, q);
  }
  return a;
}

inline json constants_to_json(const Constants& c) {
  return {{"n", c.n}, {"nprime", c.nprime}, {"case", c.sign_case}, {"m", c.m}};
}

inline json element_to_json(const Element& u) {
  return {u.lambda, u.pi, u.rho};
}

/// "aAa..." word or "(l,p,r)" triple.
inline Element parse_element_arg(const std::string& s) {
  if (!s.empty() && s.front() == '(') {
    std::int64_t l, p, r;
    char c1, c2, c3, c4;
    std::istringstream in(s);
    if (!(in >> c1 >> l >> c2 >> p >> c3 >> r >> c4) || c1 != '(' ||
        c2 != ',' || c3 != ',' || c4 != ')')
      throw parse_error("triple must look like (lambda,pi,rho)", 0);
    return make_element(l, p, r);
  }
  return eval_word(s);
}

struct Options {
  bool json_out = false;
  bool dot = false;
  bool quiet = false;
  bool certify = true;
  bool prune = false;
  int max_states = 4096;
  std::int64_t ceiling = kDefaultCeiling;
  std::vector<std::int64_t> show_monoid;  // [K, n]
};

inline void emit(const Options& o, const std::string& command, json payload,
                 const std::string& text) {
  if (o.quiet) return;
  if (o.json_out) {
    payload["command"] = command;
    std::cout << payload.dump(2) << "\n";
  } else {
    std::cout << text << "\n";
  }
}

inline int verdict_exit(const Options& o, const std::string& command,
                        const std::vector<std::string>& inputs,
                        const Verdict& v) {
  json j{{"inputs", inputs},
         {"constants", constants_to_json(v.c)},
         {"result", v.holds}};
  std::string text = v.holds ? "holds" : "fails";
  if (v.witness) {
    j["witness"] = element_to_json(*v.witness);
    text += "  witness " + to_string(*v.witness) + "  (word " +
            canonical_word(*v.witness) + ")";
  }
  emit(o, command, j, text);
  return v.holds ? 0 : 1;
}

inline int run(int argc, const char* const* argv) {
  CLI::App app{"decision procedures for rational subsets of the monogenic "
               "free inverse monoid"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json_out, "emit JSON");
  app.add_flag("--quiet", o.quiet, "suppress output (exit code only)");
  app.add_option("--max-states", o.max_states, "determinization cap");
  app.add_option("--overflow-ceiling", o.ceiling, "refuse constants above this");

  std::string expr, expr2, arg2;
  int maxlen = 8;

  auto* c_eval = app.add_subcommand("eval", "evaluate a word to its triple");
  c_eval->add_option("word", expr)->required();

  auto* c_munn = app.add_subcommand("munn", "fold a word's Munn tree");
  c_munn->add_option("word", expr)->required();
  c_munn->add_flag("--dot", o.dot, "DOT output");

  auto* c_compile = app.add_subcommand("compile", "expression to automaton");
  c_compile->add_option("expr", expr)->required();
  c_compile->add_flag("--dot", o.dot, "DOT output");

  auto* c_member = app.add_subcommand("member", "membership of an element");
  c_member->add_option("expr", expr)->required();
  c_member->add_option("element", arg2, "word or (lambda,pi,rho)")->required();

  auto* c_const = app.add_subcommand("constants", "cut-and-paste constants");
  c_const->add_option("expr", expr)->required();

  auto* c_subset = app.add_subcommand("subset", "inclusion of two subsets");
  c_subset->add_option("expr1", expr)->required();
  c_subset->add_option("expr2", expr2)->required();

  auto* c_equal = app.add_subcommand("equal", "equality of two subsets");
  c_equal->add_option("expr1", expr)->required();
  c_equal->add_option("expr2", expr2)->required();

  auto* c_submono = app.add_subcommand("is-submonoid", "submonoid test");
  c_submono->add_option("expr", expr)->required();

  auto* c_rec = app.add_subcommand("is-recognizable", "recognizability test");
  c_rec->add_option("expr", expr)->required();
  c_rec->add_option("--show-monoid", o.show_monoid,
                    "dump phi-classes for given K n")
      ->expected(2);

  auto* c_gens = app.add_subcommand("generators", "finite generating set");
  c_gens->add_option("expr", expr)->required();
  c_gens->add_flag("--certify,!--no-certify", o.certify, "verify equal(X*, L)");
  c_gens->add_flag("--prune", o.prune, "emit the pruned generating set");

  auto* c_sh1 = app.add_subcommand("star-height-one", "normalize to height 1");
  c_sh1->add_option("expr", expr)->required();

  auto* c_oracle = app.add_subcommand("oracle", "bounded word enumeration");
  c_oracle->add_option("expr", expr)->required();
  c_oracle->add_option("maxlen", maxlen, "maximum word length");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*c_eval) {
      Element u = eval_word(expr);
      emit(o, "eval", {{"inputs", {expr}}, {"result", element_to_json(u)}},
           to_string(u));
      return 0;
    }
    if (*c_munn) {
      MunnTree t = fold(expr);
      if (o.dot) {
        if (!o.quiet) std::cout << to_dot(t);
        return 0;
      }
      json edges = json::array();
      for (auto& [p, c, q] : t.edges)
        edges.push_back({p, std::string(1, c), q});
      emit(o, "munn",
           {{"inputs", {expr}},
            {"result",
             {{"vertices", t.vertices},
              {"edges", edges},
              {"initial", t.initial},
              {"terminal", t.terminal}}}},
           std::to_string(t.vertices) + " vertices, " +
               std::to_string(t.edges.size()) + " edges, initial " +
               std::to_string(t.initial) + ", terminal " +
               std::to_string(t.terminal));
      return 0;
    }
    if (*c_compile) {
      Automaton a = compile(expr);
      if (o.dot) {
        if (!o.quiet) std::cout << to_dot(a);
        return 0;
      }
      if (o.json_out) {
        json j{{"command", "compile"},
               {"inputs", {expr}},
               {"result", automaton_to_json(a)}};
        if (!o.quiet) std::cout << j.dump(2) << "\n";
      } else if (!o.quiet) {
        std::cout << automaton_to_json(a).dump() << "\n";
      }
      return 0;
    }
    if (*c_member) {
      Element u = parse_element_arg(arg2);
      bool in = member_fast(compile(expr), u);
      emit(o, "member",
           {{"inputs", {expr, arg2}}, {"result", in}},
           in ? "member" : "not a member");
      return in ? 0 : 1;
    }
    if (*c_const) {
      Automaton a = reduce(compile(expr), o.max_states);
      if (trim(a).states == 0) throw precondition_error("empty language");
      Constants c = constants(a, o.ceiling);
      std::string text = "case " + std::to_string(c.sign_case) +
                         "  n = " + std::to_string(c.n) +
                         "  n' = " + std::to_string(c.nprime) +
                         "  m = " + std::to_string(c.m);
      json j{{"inputs", {expr}}, {"result", constants_to_json(c)}};
      if (c.sign_case == 3) {
        j["result"]["lcm_inputs"] = c.lcm_inputs;
        j["result"]["r"] = c.r;
        text += "  r = " + std::to_string(c.r);
      }
      emit(o, "constants", j, text);
      return 0;
    }
    if (*c_subset)
      return verdict_exit(o, "subset", {expr, expr2},
                          included(compile(expr), compile(expr2), o.ceiling));
    if (*c_equal)
      return verdict_exit(o, "equal", {expr, expr2},
                          equal(compile(expr), compile(expr2), o.ceiling));
    if (*c_submono)
      return verdict_exit(o, "is-submonoid", {expr},
                          is_submonoid(compile(expr), o.ceiling));
    if (*c_rec) {
      if (o.show_monoid.size() == 2) {
        std::int64_t K = o.show_monoid[0], n = o.show_monoid[1];
        std::map<MElement, std::int64_t> classes;
        std::int64_t bound = 2 * (K + n);
        for (std::int64_t lam = -bound; lam <= 0; ++lam)
          for (std::int64_t rho = 0; lam + rho <= bound && rho <= bound; ++rho)
            if (rho - lam <= bound)
              for (std::int64_t pi = lam; pi <= rho; ++pi)
                ++classes[stephen_close(make_element(lam, pi, rho), K, n)];
        if (!o.quiet) {
          std::cout << classes.size() << " phi-classes on the norm-" << bound
                    << " ball\n";
          for (auto& [m, count] : classes)
            std::cout << "  " << representative_word(m) << "  (" << count
                      << " elements)\n";
        }
        return 0;
      }
      return verdict_exit(o, "is-recognizable", {expr},
                          is_recognizable(compile(expr), o.ceiling));
    }
    if (*c_gens) {
      GenOptions go;
      go.prune = o.prune;
      go.certify = o.certify;
      go.ceiling = o.ceiling;
      GeneratorSet gs = generators(compile(expr), go);
      json xs = json::array();
      std::string text = "case " + std::to_string(gs.case_id) + ", " +
                         std::to_string(gs.X.size()) + " generators";
      if (gs.certified) text += gs.certified.value() ? " (certified)" : "";
      for (const Element& x : gs.X) xs.push_back(element_to_json(x));
      if (!o.quiet && !o.json_out) {
        std::cout << text << "\n";
        for (const Element& x : gs.X)
          std::cout << "  " << to_string(x) << "  " << canonical_word(x)
                    << "\n";
      }
      if (o.json_out && !o.quiet) {
        json j{{"command", "generators"},
               {"inputs", {expr}},
               {"constants", constants_to_json(gs.c)},
               {"result",
                {{"case", gs.case_id},
                 {"X", xs},
                 {"certified", gs.certified ? json(*gs.certified) : json()}}}};
        std::cout << j.dump(2) << "\n";
      }
      return 0;
    }
    if (*c_sh1) {
      GenOptions go;
      go.ceiling = o.ceiling;
      RatExpr out = star_height_one(parse_expr(expr), go);
      emit(o, "star-height-one",
           {{"inputs", {expr}}, {"result", to_string(out)}}, to_string(out));
      return 0;
    }
    if (*c_oracle) {
      auto elems = oracle_enumerate(compile(expr), maxlen);
      json xs = json::array();
      std::string text;
      for (const Element& u : elems) {
        xs.push_back(element_to_json(u));
        if (!text.empty()) text += " ";
        text += to_string(u);
      }
      emit(o, "oracle", {{"inputs", {expr}}, {"result", xs}}, text);
      return 0;
    }
  } catch (const parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const constant_overflow& e) {
    std::cerr << "overflow: " << e.what() << "\n";
    return 2;
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace fim::cli
