#pragma once

// Rational subsets of F presented as expressions or finite automata over
// the doubled alphabet {a, a^-1}, and the integer weight analysis used by
// the decision procedures: pi-images as semilinear sets, sign cases,
// positive/negative loop detection, subgroup computation and witness words.

#include <algorithm>
#include <array>
#include <climits>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "fim/checked.hpp"
#include "fim/element.hpp"
#include "fim/errors.hpp"

namespace fim {

// ---------------------------------------------------------------------------
// Rational expressions
// ---------------------------------------------------------------------------

/// Abstract syntax: Literal(word) | Union | Concat | Star.
struct RatExpr {
  enum Kind { Literal, Union, Concat, Star };
  Kind kind = Literal;
  MonoWord word;                  // Literal only; empty word = identity
  std::vector<RatExpr> children;  // Union/Concat: >= 2; Star: exactly 1

  static RatExpr literal(MonoWord w) { return {Literal, std::move(w), {}}; }
  static RatExpr star(RatExpr e) { return {Star, {}, {std::move(e)}}; }
  static RatExpr alt(std::vector<RatExpr> cs) { return {Union, {}, std::move(cs)}; }
  static RatExpr seq(std::vector<RatExpr> cs) { return {Concat, {}, std::move(cs)}; }
};

inline int star_height(const RatExpr& e) {
  int h = 0;
  for (const auto& c : e.children) h = std::max(h, star_height(c));
  return e.kind == RatExpr::Star ? h + 1 : h;
}

inline std::string to_string(const RatExpr& e) {
  auto paren = [](const RatExpr& c, std::string s, bool tight) {
    bool need = c.kind == RatExpr::Union || (tight && c.kind == RatExpr::Concat) ||
                (tight && c.kind == RatExpr::Literal && c.word.size() != 1);
    return need ? "(" + s + ")" : s;
  };
  switch (e.kind) {
    case RatExpr::Literal: return e.word.empty() ? "1" : e.word;
    case RatExpr::Star: return paren(e.children[0], to_string(e.children[0]), true) + "*";
    case RatExpr::Concat: {
      std::string s;
      for (const auto& c : e.children) s += paren(c, to_string(c), false);
      return s;
    }
    case RatExpr::Union: {
      std::string s;
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        if (i) s += "|";
        s += to_string(e.children[i]);
      }
      return s;
    }
  }
  return {};
}

namespace detail {

// grammar: union := concat ('|' concat)* ; concat := starred+ ;
//          starred := atom '*'* ; atom := 'a' | 'A' | '1' | '(' union ')'
struct ExprParser {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  }
  [[noreturn]] void fail(const std::string& what) { throw parse_error(what, pos); }

  RatExpr parse() {
    RatExpr e = parse_union();
    skip_ws();
    if (pos != text.size()) fail("unexpected character '" + std::string(1, text[pos]) + "'");
    return e;
  }

  RatExpr parse_union() {
    std::vector<RatExpr> parts{parse_concat()};
    skip_ws();
    while (pos < text.size() && text[pos] == '|') {
      ++pos;
      parts.push_back(parse_concat());
      skip_ws();
    }
    return parts.size() == 1 ? std::move(parts[0]) : RatExpr::alt(std::move(parts));
  }

  RatExpr parse_concat() {
    std::vector<RatExpr> parts;
    while (true) {
      skip_ws();
      if (pos >= text.size() || text[pos] == '|' || text[pos] == ')') break;
      parts.push_back(parse_starred());
    }
    if (parts.empty()) fail("expected expression");
    return parts.size() == 1 ? std::move(parts[0]) : RatExpr::seq(std::move(parts));
  }

  RatExpr parse_starred() {
    RatExpr e = parse_atom();
    skip_ws();
    while (pos < text.size() && text[pos] == '*') {
      ++pos;
      e = RatExpr::star(std::move(e));
      skip_ws();
    }
    return e;
  }

  RatExpr parse_atom() {
    skip_ws();
    if (pos >= text.size()) fail("expected expression");
    char c = text[pos];
    if (c == 'a' || c == 'A') {
      ++pos;
      return RatExpr::literal(MonoWord(1, c));
    }
    if (c == '1') {
      ++pos;
      return RatExpr::literal({});
    }
    if (c == '(') {
      ++pos;
      RatExpr e = parse_union();
      skip_ws();
      if (pos >= text.size() || text[pos] != ')') fail("expected ')'");
      ++pos;
      return e;
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }
};

}  // namespace detail

inline RatExpr parse_expr(std::string_view text) {
  return detail::ExprParser{text}.parse();
}

// ---------------------------------------------------------------------------
// Automata over {a, a^-1}
// ---------------------------------------------------------------------------

/// Finite automaton over the doubled alphabet; edge letters are +1 ('a')
/// and -1 ('A').
struct Automaton {
  int states = 0;
  std::vector<int> initial;
  std::vector<int> terminal;
  std::vector<std::tuple<int, int, int>> edges;  // (source, sign, target)
};

inline char letter_char(int sign) { return sign > 0 ? 'a' : 'A'; }

/// epsilon-free compilation; state count linear in expression size.
inline Automaton compile(const RatExpr& e) {
  switch (e.kind) {
    case RatExpr::Literal: {
      validate_mono_word(e.word);
      Automaton a;
      a.states = static_cast<int>(e.word.size()) + 1;
      a.initial = {0};
      a.terminal = {a.states - 1};
      for (std::size_t i = 0; i < e.word.size(); ++i)
        a.edges.emplace_back(static_cast<int>(i), e.word[i] == 'a' ? 1 : -1,
                             static_cast<int>(i) + 1);
      return a;
    }
    case RatExpr::Union: {
      Automaton a;
      for (const auto& c : e.children) {
        Automaton b = compile(c);
        int off = a.states;
        for (int q : b.initial) a.initial.push_back(q + off);
        for (int q : b.terminal) a.terminal.push_back(q + off);
        for (auto& [p, s, q] : b.edges) a.edges.emplace_back(p + off, s, q + off);
        a.states += b.states;
      }
      return a;
    }
    case RatExpr::Concat: {
      Automaton a = compile(e.children[0]);
      for (std::size_t i = 1; i < e.children.size(); ++i) {
        Automaton b = compile(e.children[i]);
        int off = a.states;
        Automaton r;
        r.states = a.states + b.states;
        r.edges = a.edges;
        for (auto& [p, s, q] : b.edges) r.edges.emplace_back(p + off, s, q + off);
        std::set<int> bi(b.initial.begin(), b.initial.end());
        bool b_eps = false;
        for (int q : b.terminal)
          if (bi.count(q)) b_eps = true;
        std::set<int> at(a.terminal.begin(), a.terminal.end());
        bool a_eps = false;
        for (int q : a.initial)
          if (at.count(q)) a_eps = true;
        // bridge: A-terminals take over the first step of B
        for (auto& [p, s, q] : b.edges)
          if (bi.count(p))
            for (int t : a.terminal) r.edges.emplace_back(t, s, q + off);
        r.initial = a.initial;
        if (a_eps)
          for (int q : b.initial) r.initial.push_back(q + off);
        for (int q : b.terminal) r.terminal.push_back(q + off);
        if (b_eps)
          for (int q : a.terminal) r.terminal.push_back(q);
        a = std::move(r);
      }
      return a;
    }
    case RatExpr::Star: {
      Automaton b = compile(e.children[0]);
      Automaton a;
      a.states = b.states + 1;
      int s = b.states;  // fresh initial-terminal state
      a.initial = {s};
      a.terminal = {s};
      a.edges = b.edges;
      std::set<int> bi(b.initial.begin(), b.initial.end());
      std::set<int> bt(b.terminal.begin(), b.terminal.end());
      for (auto& [p, sg, q] : b.edges) {
        if (bi.count(p)) a.edges.emplace_back(s, sg, q);
        if (bt.count(q)) a.edges.emplace_back(p, sg, s);
        if (bi.count(p) && bt.count(q)) a.edges.emplace_back(s, sg, s);
      }
      return a;
    }
  }
  return {};
}

inline Automaton compile(std::string_view expr) { return compile(parse_expr(expr)); }

/// Keep only accessible and co-accessible states. May return an automaton
/// with zero states (empty language).
inline Automaton trim(const Automaton& a) {
  std::vector<bool> fwd(a.states, false), bwd(a.states, false);
  std::deque<int> q;
  for (int i : a.initial)
    if (!fwd[i]) fwd[i] = true, q.push_back(i);
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (auto& [p, s, r] : a.edges)
      if (p == v && !fwd[r]) fwd[r] = true, q.push_back(r);
  }
  for (int t : a.terminal)
    if (!bwd[t]) bwd[t] = true, q.push_back(t);
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (auto& [p, s, r] : a.edges)
      if (r == v && !bwd[p]) bwd[p] = true, q.push_back(p);
  }
  std::vector<int> remap(a.states, -1);
  Automaton r;
  for (int v = 0; v < a.states; ++v)
    if (fwd[v] && bwd[v]) remap[v] = r.states++;
  for (int v : a.initial)
    if (remap[v] >= 0) r.initial.push_back(remap[v]);
  for (int v : a.terminal)
    if (remap[v] >= 0) r.terminal.push_back(remap[v]);
  std::set<std::tuple<int, int, int>> dedup;
  for (auto& [p, s, t] : a.edges)
    if (remap[p] >= 0 && remap[t] >= 0) dedup.insert({remap[p], s, remap[t]});
  r.edges.assign(dedup.begin(), dedup.end());
  std::sort(r.initial.begin(), r.initial.end());
  r.initial.erase(std::unique(r.initial.begin(), r.initial.end()), r.initial.end());
  std::sort(r.terminal.begin(), r.terminal.end());
  r.terminal.erase(std::unique(r.terminal.begin(), r.terminal.end()), r.terminal.end());
  return r;
}

inline bool is_empty(const Automaton& a) { return trim(a).states == 0; }

/// Subset construction; bails out (nullopt) past `cap` subsets.
inline std::optional<Automaton> determinize(const Automaton& a, int cap = 4096) {
  if (a.states == 0) return a;
  std::map<std::vector<int>, int> ids;
  std::vector<std::vector<int>> subsets;
  std::vector<std::vector<std::vector<int>>> out(a.states,
                                                 std::vector<std::vector<int>>(2));
  for (auto& [p, s, q] : a.edges) out[p][s > 0 ? 0 : 1].push_back(q);
  std::vector<int> start(a.initial);
  std::sort(start.begin(), start.end());
  start.erase(std::unique(start.begin(), start.end()), start.end());
  ids[start] = 0;
  subsets.push_back(start);
  Automaton d;
  std::set<int> term(a.terminal.begin(), a.terminal.end());
  for (std::size_t head = 0; head < subsets.size(); ++head) {
    for (int li = 0; li < 2; ++li) {
      std::set<int> nxt;
      for (int p : subsets[head])
        for (int q : out[p][li]) nxt.insert(q);
      if (nxt.empty()) continue;
      std::vector<int> key(nxt.begin(), nxt.end());
      auto [it, fresh] = ids.try_emplace(key, static_cast<int>(subsets.size()));
      if (fresh) {
        if (static_cast<int>(subsets.size()) >= cap) return std::nullopt;
        subsets.push_back(key);
      }
      d.edges.emplace_back(static_cast<int>(head), li == 0 ? 1 : -1, it->second);
    }
  }
  d.states = static_cast<int>(subsets.size());
  d.initial = {0};
  for (std::size_t i = 0; i < subsets.size(); ++i)
    for (int p : subsets[i])
      if (term.count(p)) {
        d.terminal.push_back(static_cast<int>(i));
        break;
      }
  return d;
}

/// Moore partition refinement on a (partial) DFA with a single initial state.
inline Automaton minimize_dfa(const Automaton& d) {
  if (d.states == 0) return d;
  std::vector<std::array<int, 2>> delta(d.states, {-1, -1});
  for (auto& [p, s, q] : d.edges) delta[p][s > 0 ? 0 : 1] = q;
  std::vector<int> cls(d.states, 0);
  for (int t : d.terminal) cls[t] = 1;
  for (bool changed = true; changed;) {
    changed = false;
    std::map<std::tuple<int, int, int>, int> sig;
    std::vector<int> next(d.states);
    for (int v = 0; v < d.states; ++v) {
      std::tuple<int, int, int> key{cls[v],
                                    delta[v][0] < 0 ? -1 : cls[delta[v][0]],
                                    delta[v][1] < 0 ? -1 : cls[delta[v][1]]};
      auto [it, fresh] = sig.try_emplace(key, static_cast<int>(sig.size()));
      next[v] = it->second;
    }
    changed = next != cls;
    cls = std::move(next);
  }
  int nclasses = *std::max_element(cls.begin(), cls.end()) + 1;
  Automaton m;
  m.states = nclasses;
  std::set<int> init, term;
  for (int v : d.initial) init.insert(cls[v]);
  for (int v : d.terminal) term.insert(cls[v]);
  m.initial.assign(init.begin(), init.end());
  m.terminal.assign(term.begin(), term.end());
  std::set<std::tuple<int, int, int>> es;
  for (auto& [p, s, q] : d.edges) es.insert({cls[p], s, cls[q]});
  m.edges.assign(es.begin(), es.end());
  return m;
}

/// Language-preserving size reduction: trim, then determinize and minimize
/// when the subset construction stays small, then trim again (minimization
/// may keep a dead sink class on partial DFAs).
inline Automaton reduce(const Automaton& a, int cap = 4096) {
  Automaton t = trim(a);
  if (t.states == 0) return t;
  if (auto d = determinize(t, cap)) return trim(minimize_dfa(*d));
  return t;
}

/// Automaton for L^-1: reverse every edge, invert its letter, swap I and T.
inline Automaton inverse_automaton(const Automaton& a) {
  Automaton r;
  r.states = a.states;
  r.initial = a.terminal;
  r.terminal = a.initial;
  for (auto& [p, s, q] : a.edges) r.edges.emplace_back(q, -s, p);
  return r;
}

/// Automaton for L beta: reverse every edge keeping its letter, swap I and T
/// (beta reverses words letterwise without inverting the letters).
inline Automaton beta_automaton(const Automaton& a) {
  Automaton r;
  r.states = a.states;
  r.initial = a.terminal;
  r.terminal = a.initial;
  for (auto& [p, s, q] : a.edges) r.edges.emplace_back(q, s, p);
  return r;
}

/// Automaton for L*: same construction as compiling a starred expression.
inline Automaton star_automaton(const Automaton& b) {
  Automaton a;
  a.states = b.states + 1;
  int s = b.states;
  a.initial = {s};
  a.terminal = {s};
  a.edges = b.edges;
  std::set<int> bi(b.initial.begin(), b.initial.end());
  std::set<int> bt(b.terminal.begin(), b.terminal.end());
  for (auto& [p, sg, q] : b.edges) {
    if (bi.count(p)) a.edges.emplace_back(s, sg, q);
    if (bt.count(q)) a.edges.emplace_back(p, sg, s);
    if (bi.count(p) && bt.count(q)) a.edges.emplace_back(s, sg, s);
  }
  return a;
}

/// Whether the automaton accepts the empty word (identity of F is the class
/// of the empty word, but note acceptance of 1 in F also happens via words
/// like aA; this predicate is about the *word* language only).
inline bool accepts_empty_word(const Automaton& a) {
  std::set<int> term(a.terminal.begin(), a.terminal.end());
  for (int i : a.initial)
    if (term.count(i)) return true;
  return false;
}

// ---------------------------------------------------------------------------
// Semilinear pi-images
// ---------------------------------------------------------------------------

/// An arithmetic progression {offset + k*step : k >= 0}. The step may be
/// negative (progressions descending into -N) or zero (a singleton).
struct Progression {
  std::int64_t offset = 0;
  std::int64_t step = 0;
  friend bool operator==(const Progression&, const Progression&) = default;
  friend auto operator<=>(const Progression&, const Progression&) = default;
};

/// A finite union of arithmetic progressions, describing pi(L) in Z.
struct SemilinearSet {
  std::vector<Progression> progressions;  // sorted, deduplicated

  bool empty() const { return progressions.empty(); }

  bool contains(std::int64_t z) const {
    for (const auto& p : progressions) {
      if (p.step == 0) {
        if (z == p.offset) return true;
      } else if (p.step > 0) {
        if (z >= p.offset && (z - p.offset) % p.step == 0) return true;
      } else {
        if (z <= p.offset && (p.offset - z) % (-p.step) == 0) return true;
      }
    }
    return false;
  }

  bool intersects_positive() const {  // S n N infinite iff some step > 0
    for (const auto& p : progressions)
      if (p.step > 0) return true;
    return false;
  }
  bool intersects_negative() const {
    for (const auto& p : progressions)
      if (p.step < 0) return true;
    return false;
  }
};

/// 1, 2 or 3 per the trichotomy on pi(L): 1 if pi(L) n N is finite
/// (including when pi(L) is finite), 2 if pi(L) n (-N) is finite, else 3.
inline int sign_case(const SemilinearSet& s) {
  if (!s.intersects_positive()) return 1;
  if (!s.intersects_negative()) return 2;
  return 3;
}

/// gcd of the subgroup of (Z,+) generated by pi(L); 0 for the empty or
/// {0}-only image.
inline std::int64_t subgroup_gcd(const SemilinearSet& s) {
  std::int64_t g = 0;
  for (const auto& p : s.progressions) {
    g = gcd64(g, p.offset);
    g = gcd64(g, p.step);
  }
  return g;
}

namespace detail {

// Saturation closure for the one-letter free group: add an epsilon edge
// p ~ r whenever p --x--> q' ~ q'' --x^-1--> r reads a word reducing to 1.
// On the trimmed automaton this makes pi(L) readable as plain letter counts.
inline std::vector<std::vector<bool>> saturate_eps(const Automaton& a) {
  int n = a.states;
  std::vector<std::vector<bool>> eps(n, std::vector<bool>(n, false));
  for (int v = 0; v < n; ++v) eps[v][v] = true;
  bool changed = true;
  while (changed) {
    changed = false;
    // transitive closure
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        if (eps[i][k])
          for (int j = 0; j < n; ++j)
            if (eps[k][j] && !eps[i][j]) eps[i][j] = true, changed = true;
    for (auto& [p, s1, q1] : a.edges)
      for (auto& [q2, s2, r] : a.edges)
        if (s2 == -s1 && eps[q1][q2] && !eps[p][r]) eps[p][r] = true, changed = true;
  }
  return eps;
}

// Accepted letter-count lengths of a unary NFA given as "step over one
// letter with epsilon closure". Returns (preperiod singletons, periodic
// residues, period); lengths are nonnegative letter counts.
struct UnaryLengths {
  std::vector<std::int64_t> transient;  // accepted lengths before the cycle
  std::vector<std::int64_t> recurrent;  // accepted lengths inside one cycle
  std::int64_t period = 0;
};

inline UnaryLengths unary_lengths(int nstates, const std::vector<int>& initial,
                                  const std::vector<int>& terminal,
                                  const std::vector<std::pair<int, int>>& step_edges,
                                  const std::vector<std::vector<bool>>& eps) {
  auto close = [&](std::vector<bool> v) {
    for (int i = 0; i < nstates; ++i)
      if (v[i])
        for (int j = 0; j < nstates; ++j)
          if (eps[i][j]) v[j] = true;
    return v;
  };
  std::vector<bool> cur(nstates, false);
  for (int i : initial) cur[i] = true;
  cur = close(std::move(cur));
  std::vector<bool> term(nstates, false);
  for (int t : terminal) term[t] = true;
  auto accepted = [&](const std::vector<bool>& v) {
    for (int i = 0; i < nstates; ++i)
      if (v[i] && term[i]) return true;
    return false;
  };
  std::map<std::vector<bool>, std::int64_t> seen;
  std::vector<std::vector<bool>> seq;
  UnaryLengths out;
  for (std::int64_t len = 0;; ++len) {
    auto it = seen.find(cur);
    if (it != seen.end()) {
      std::int64_t start = it->second;
      out.period = len - start;
      for (std::int64_t l = 0; l < start; ++l)
        if (accepted(seq[l])) out.transient.push_back(l);
      for (std::int64_t l = start; l < len; ++l)
        if (accepted(seq[l])) out.recurrent.push_back(l);
      return out;
    }
    seen[cur] = len;
    seq.push_back(cur);
    std::vector<bool> nxt(nstates, false);
    for (auto& [p, q] : step_edges)
      if (cur[p]) nxt[q] = true;
    cur = close(std::move(nxt));
  }
}

}  // namespace detail

/// The pi-image of L(A) as a semilinear subset of Z, computed by epsilon
/// saturation followed by unary length analysis of the positive and
/// negative letter layers.
inline SemilinearSet pi_image(const Automaton& a0) {
  Automaton a = trim(a0);
  SemilinearSet s;
  if (a.states == 0) return s;
  auto eps = detail::saturate_eps(a);
  std::set<Progression> progs;
  for (int dir = 0; dir < 2; ++dir) {
    int want = dir == 0 ? 1 : -1;
    std::vector<std::pair<int, int>> step_edges;
    for (auto& [p, sg, q] : a.edges)
      if (sg == want) step_edges.emplace_back(p, q);
    auto ul = detail::unary_lengths(a.states, a.initial, a.terminal, step_edges, eps);
    std::int64_t sign = want;
    for (std::int64_t l : ul.transient) progs.insert({sign * l, 0});
    for (std::int64_t l : ul.recurrent) progs.insert({sign * l, sign * ul.period});
  }
  // drop singletons subsumed by a progression with the same residue
  SemilinearSet tmp;
  tmp.progressions.assign(progs.begin(), progs.end());
  for (const auto& p : tmp.progressions) {
    if (p.step == 0) {
      SemilinearSet rest;
      for (const auto& q : tmp.progressions)
        if (!(q == p)) rest.progressions.push_back(q);
      if (rest.contains(p.offset)) continue;
    }
    s.progressions.push_back(p);
  }
  return s;
}

// ---------------------------------------------------------------------------
// Loop analysis and witness words
// ---------------------------------------------------------------------------

/// For each trimmed state p, a shortest closed walk through p of positive
/// (resp. negative) total weight, as a word, when one exists.
struct LoopWitnesses {
  std::vector<std::optional<MonoWord>> positive;
  std::vector<std::optional<MonoWord>> negative;
};

namespace detail {

// Shortest closed walk through `root` whose weight has strict sign `want`.
// A closed walk of the wanted sign exists iff one of length at most
// 2|Q| + |Q|(2|Q|+1) exists: reach a suitable simple cycle and pump it
// enough times to dominate the round trip.
inline std::optional<MonoWord> signed_loop(const Automaton& a, int root, int want) {
  int n = a.states;
  std::int64_t L = 2LL * n + static_cast<std::int64_t>(n) * (2LL * n + 1);
  constexpr std::int64_t kUnset = INT64_MIN;
  // best[q] = extremal weight of a length-l walk root -> q (max if want > 0)
  std::vector<std::int64_t> best(n, kUnset), next(n, kUnset);
  std::vector<std::vector<std::pair<int, int>>> parent(
      1, std::vector<std::pair<int, int>>(n, {-1, 0}));
  best[root] = 0;
  for (std::int64_t l = 1; l <= L; ++l) {
    std::fill(next.begin(), next.end(), kUnset);
    parent.emplace_back(n, std::pair<int, int>{-1, 0});
    for (auto& [p, s, q] : a.edges) {
      if (best[p] == kUnset) continue;
      std::int64_t w = best[p] + s;
      bool better = next[q] == kUnset || (want > 0 ? w > next[q] : w < next[q]);
      if (better) {
        next[q] = w;
        parent[l][q] = {p, s};
      }
    }
    std::swap(best, next);
    if (best[root] != kUnset && (want > 0 ? best[root] > 0 : best[root] < 0)) {
      MonoWord w;
      int q = root;
      for (std::int64_t step = l; step > 0; --step) {
        auto [p, s] = parent[step][q];
        w.push_back(letter_char(s));
        q = p;
      }
      std::reverse(w.begin(), w.end());
      return w;
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// Loop witnesses for every state of a (trimmed) automaton.
inline LoopWitnesses loop_states(const Automaton& a) {
  LoopWitnesses lw;
  lw.positive.resize(a.states);
  lw.negative.resize(a.states);
  for (int p = 0; p < a.states; ++p) {
    lw.positive[p] = detail::signed_loop(a, p, +1);
    lw.negative[p] = detail::signed_loop(a, p, -1);
  }
  return lw;
}

/// A shortest word of L(A) with total sum p; precondition: p in pi(L(A)).
/// BFS over (state, running sum) with an iteratively widened sum window.
inline MonoWord find_word_with_pi(const Automaton& a0, std::int64_t p) {
  Automaton a = trim(a0);
  if (a.states == 0 || !pi_image(a).contains(p))
    throw precondition_error("find_word_with_pi: " + std::to_string(p) +
                             " is not in the pi-image");
  std::set<int> term(a.terminal.begin(), a.terminal.end());
  std::int64_t bound = (p < 0 ? -p : p) + a.states + 4;
  while (true) {
    std::int64_t width = 2 * bound + 1;
    auto idx = [&](int q, std::int64_t sum) {
      return static_cast<std::size_t>(q) * width +
             static_cast<std::size_t>(sum + bound);
    };
    std::vector<std::pair<int, std::int64_t>> prev(
        static_cast<std::size_t>(a.states) * width, {-2, 0});
    std::vector<int> via(static_cast<std::size_t>(a.states) * width, 0);
    std::deque<std::pair<int, std::int64_t>> q;
    for (int i : a.initial)
      if (prev[idx(i, 0)].first == -2) {
        prev[idx(i, 0)] = {-1, 0};
        q.emplace_back(i, 0);
      }
    while (!q.empty()) {
      auto [v, sum] = q.front();
      q.pop_front();
      if (sum == p && term.count(v)) {
        MonoWord w;
        int cv = v;
        std::int64_t cs = sum;
        while (prev[idx(cv, cs)].first != -1) {
          auto [pv, ps] = prev[idx(cv, cs)];
          w.push_back(letter_char(via[idx(cv, cs)]));
          cv = pv;
          cs = ps;
        }
        std::reverse(w.begin(), w.end());
        return w;
      }
      for (auto& [src, s, dst] : a.edges) {
        if (src != v) continue;
        std::int64_t ns = sum + s;
        if (ns < -bound || ns > bound) continue;
        if (prev[idx(dst, ns)].first == -2) {
          prev[idx(dst, ns)] = {v, sum};
          via[idx(dst, ns)] = s;
          q.emplace_back(dst, ns);
        }
      }
    }
    bound *= 2;
  }
}

/// DOT export of an automaton.
inline std::string to_dot(const Automaton& a) {
  std::string s = "digraph aut {\n  rankdir=LR;\n";
  std::set<int> init(a.initial.begin(), a.initial.end());
  std::set<int> term(a.terminal.begin(), a.terminal.end());
  for (int v = 0; v < a.states; ++v) {
    s += "  q" + std::to_string(v) + " [shape=" +
         (term.count(v) ? "doublecircle" : "circle") + "];\n";
    if (init.count(v)) {
      s += "  s" + std::to_string(v) + " [shape=point];\n";
      s += "  s" + std::to_string(v) + " -> q" + std::to_string(v) + ";\n";
    }
  }
  for (auto& [p, sg, q] : a.edges)
    s += "  q" + std::to_string(p) + " -> q" + std::to_string(q) +
         " [label=\"" + std::string(1, letter_char(sg)) + "\"];\n";
  s += "}\n";
  return s;
}

}  // namespace fim
