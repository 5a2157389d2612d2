// Compute a finite generating set for a rational submonoid and certify it.

#include <cstdio>

#include "fim/submonoid.hpp"

using namespace fim;

namespace {

void show(const char* expr) {
  Automaton a = compile(expr);
  GenOptions opts;
  opts.prune = true;
  GeneratorSet gs = generators(a, opts);
  std::printf("%-10s case %d, %zu generator(s)%s%s:\n", expr, gs.case_id,
              gs.X.size(), gs.inverted ? ", inverted" : "",
              gs.certified && *gs.certified ? ", certified" : "");
  for (const Element& x : gs.X)
    std::printf("  (%lld,%lld,%lld)  %s\n", static_cast<long long>(x.lambda),
                static_cast<long long>(x.pi), static_cast<long long>(x.rho),
                min_word(x).c_str());
}

}  // namespace

int main() {
  for (const char* expr : {"(aA)*", "a*", "(a|aa)*", "A*", "(a|A)*"}) show(expr);
  return 0;
}
