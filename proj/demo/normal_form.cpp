// Compute the finite normal form of a rational subset and use it to answer
// membership queries without touching the automaton again.

#include <cstdio>

#include "fim/decide.hpp"

using namespace fim;

int main() {
  const char* expr = "a*";
  Automaton a = compile(expr);
  NormalForm nf = normal_form(a);

  std::printf("expression     %s\n", expr);
  std::printf("constants      n = %lld, n' = %lld\n",
              static_cast<long long>(nf.c.n), static_cast<long long>(nf.c.nprime));
  std::printf("window W       %zu elements\n", nf.W.size());
  std::printf("core W'        %zu elements\n", nf.Wprime.size());

  std::printf("\nmembership via the clamp (checked against the automaton):\n");
  for (long long k : {0LL, 3LL, 25LL, -2LL}) {
    Element u = k >= 0 ? Element{0, k, k} : Element{k, k, 0};
    // negative elements are clamped through the inverse, against W'
    Element z = k >= 0 ? zeta(u, nf.c.n, nf.c.nprime)
                       : zeta(inverse(u), nf.c.n, nf.c.nprime);
    bool in = (k >= 0 ? nf.W : nf.Wprime).count(z) > 0;
    std::printf("  a^%-3lld  zeta -> (%lld,%lld,%lld)  %s  [automaton says %s]\n",
                k, static_cast<long long>(z.lambda),
                static_cast<long long>(z.pi), static_cast<long long>(z.rho),
                in ? "member" : "not a member",
                member_fast(a, u) ? "member" : "not a member");
  }
  return 0;
}
