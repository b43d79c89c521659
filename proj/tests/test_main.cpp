#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstdlib>

#include "test_support.hpp"

std::uint64_t test_seed() {
  if (const char* env = std::getenv("FEEC_WEIGHTS_SEED")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0') return v;
  }
  return 20260822ULL;
}

int main(int argc, char** argv) {
  doctest::Context ctx;
  ctx.applyCommandLine(argc, argv);
  return ctx.run();
}
