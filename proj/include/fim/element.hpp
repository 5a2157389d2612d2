#pragma once

// Exact arithmetic for elements of the monogenic free inverse monoid F.
// Elements are kept in canonical triple form (lambda, pi, rho): the minimum
// prefix sum, total sum and maximum prefix sum of any representing word over
// {a, a^-1}. All operations are pure and use checked 64-bit arithmetic.

#include <algorithm>
#include <cstdint>
#include <string>
#include <string_view>

#include "fim/checked.hpp"
#include "fim/errors.hpp"

namespace fim {

/// A word over {a, a^-1}; text form uses 'a' for a and 'A' for a^-1.
using MonoWord = std::string;

inline void validate_mono_word(std::string_view w) {
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] != 'a' && w[i] != 'A')
      throw parse_error("monogenic word may contain only 'a' and 'A'", i);
}

struct Element {
  std::int64_t lambda = 0;  // <= min(0, pi)
  std::int64_t pi = 0;
  std::int64_t rho = 0;  // >= max(0, pi)

  friend bool operator==(const Element&, const Element&) = default;
  friend auto operator<=>(const Element&, const Element&) = default;
};

inline bool valid(const Element& u) {
  return u.lambda <= 0 && 0 <= u.rho && u.lambda <= u.pi && u.pi <= u.rho;
}

inline Element make_element(std::int64_t lambda, std::int64_t pi,
                            std::int64_t rho) {
  Element u{lambda, pi, rho};
  if (!valid(u))
    throw precondition_error("(" + std::to_string(lambda) + "," +
                             std::to_string(pi) + "," + std::to_string(rho) +
                             ") is not a valid triple");
  return u;
}

constexpr Element identity() { return {}; }

inline std::int64_t norm(const Element& u) { return u.rho - u.lambda; }

/// An element is idempotent iff its initial and terminal vertices coincide,
/// i.e. pi = 0.
inline bool is_idempotent(const Element& u) { return u.pi == 0; }

inline Element eval_word(std::string_view w) {
  validate_mono_word(w);
  Element u;
  std::int64_t sum = 0;
  for (char c : w) {
    sum += c == 'a' ? 1 : -1;
    u.lambda = std::min(u.lambda, sum);
    u.rho = std::max(u.rho, sum);
  }
  u.pi = sum;
  return u;
}

inline Element multiply(const Element& u, const Element& v) {
  Element w;
  w.lambda = std::min(u.lambda, checked_add(u.pi, v.lambda));
  w.pi = checked_add(u.pi, v.pi);
  w.rho = std::max(u.rho, checked_add(u.pi, v.rho));
  return w;
}

inline Element inverse(const Element& u) {
  return {u.lambda - u.pi, -u.pi, u.rho - u.pi};
}

/// The automorphism exchanging a and a^-1.
inline Element alpha(const Element& u) { return {-u.rho, -u.pi, -u.lambda}; }

/// The anti-automorphism beta = inverse of alpha; beta^2 = id and
/// beta(uv) = beta(v) beta(u).
inline Element beta(const Element& u) {
  return {u.pi - u.rho, u.pi, u.pi - u.lambda};
}

inline Element power(const Element& u, std::int64_t k) {
  if (k < 0) throw precondition_error("power requires k >= 0");
  Element r = identity();
  for (std::int64_t i = 0; i < k; ++i) r = multiply(r, u);
  return r;
}

/// J-order in F: u <=_J v iff the Munn path of v embeds into the Munn path
/// of u, i.e. iff ||v|| <= ||u||.
inline bool leq_J(const Element& u, const Element& v) {
  return norm(v) <= norm(u);
}

/// Membership in the surgery domain G_{n,i}.
inline bool in_G(const Element& u, std::int64_t n, int i) {
  if (n < 1) throw precondition_error("in_G requires n >= 1");
  switch (i) {
    case 1: return u.pi >= 0 && u.lambda <= -n;
    case 2: return u.pi >= n;
    case 3: return u.pi >= 0 && u.rho - u.pi >= n;
    default: throw precondition_error("in_G requires i in {1,2,3}");
  }
}

/// The cut-and-paste surgery map xi_{n,i}: G_{n,i} -> F.
inline Element xi(const Element& u, std::int64_t n, int i) {
  if (n < 1) throw precondition_error("xi requires n >= 1");
  if (!in_G(u, n, i)) {
    const char* cond = i == 1   ? "pi >= 0 and lambda <= -n"
                       : i == 2 ? "pi >= n"
                                : "pi >= 0 and rho - pi >= n";
    throw precondition_error("xi_{n," + std::to_string(i) +
                             "}: element outside its domain (needs " + cond +
                             ")");
  }
  switch (i) {
    case 1: return {u.lambda + n, u.pi, u.rho};
    case 2: return {u.lambda, u.pi - n, u.rho - n};
    default: return {u.lambda, u.pi, u.rho - n};
  }
}

/// Clamp an integer into (-n', n') while preserving its residue mod n
/// once its magnitude reaches n'.
inline std::int64_t eta(std::int64_t z, std::int64_t n, std::int64_t nprime) {
  if (n < 1 || nprime < n) throw precondition_error("eta requires n' >= n >= 1");
  std::int64_t m = z < 0 ? -z : z;
  std::int64_t r;
  if (m < nprime) {
    r = m;
  } else {
    // largest i in [0, n'-1] congruent to m mod n
    std::int64_t res = m % n;
    r = res + n * ((nprime - 1 - res) / n);
  }
  return z < 0 ? -r : r;
}

/// The finite clamping window W_{n'}.
inline bool in_W(const Element& u, std::int64_t nprime) {
  return u.lambda > -nprime && 0 <= u.pi && u.pi < nprime &&
         u.rho - u.pi < nprime;
}

/// The clamping map zeta_{n,n'}: F+ -> W_{n'}; idempotent.
inline Element zeta(const Element& u, std::int64_t n, std::int64_t nprime) {
  if (u.pi < 0)
    throw precondition_error(
        "zeta requires pi >= 0 (route negative elements through inverse)");
  Element r;
  r.lambda = eta(u.lambda, n, nprime);
  r.pi = eta(u.pi, n, nprime);
  r.rho = r.pi + eta(u.rho - u.pi, n, nprime);
  return r;
}

/// The canonical word a^lambda a^(rho-lambda) a^(pi-rho): walk to the left
/// end of the Munn path, sweep to the right end, come back to the marker.
inline MonoWord canonical_word(const Element& u) {
  MonoWord w;
  w.reserve(static_cast<std::size_t>(2 * norm(u)));
  w.append(static_cast<std::size_t>(-u.lambda), 'A');
  w.append(static_cast<std::size_t>(u.rho - u.lambda), 'a');
  w.append(static_cast<std::size_t>(u.rho - u.pi), 'A');
  return w;
}

/// A shortest word evaluating to u: sweep to the nearer end of the Munn
/// path first. Ties go to the left-first sweep.
inline MonoWord min_word(const Element& u) {
  std::int64_t left_first = -u.lambda + (u.rho - u.lambda) + (u.rho - u.pi);
  std::int64_t right_first = u.rho + (u.rho - u.lambda) + (u.pi - u.lambda);
  MonoWord w;
  if (left_first <= right_first) {
    w.append(static_cast<std::size_t>(-u.lambda), 'A');
    w.append(static_cast<std::size_t>(u.rho - u.lambda), 'a');
    w.append(static_cast<std::size_t>(u.rho - u.pi), 'A');
  } else {
    w.append(static_cast<std::size_t>(u.rho), 'a');
    w.append(static_cast<std::size_t>(u.rho - u.lambda), 'A');
    w.append(static_cast<std::size_t>(u.pi - u.lambda), 'a');
  }
  return w;
}

inline std::string to_string(const Element& u) {
  return "(" + std::to_string(u.lambda) + "," + std::to_string(u.pi) + "," +
         std::to_string(u.rho) + ")";
}

}  // namespace fim
