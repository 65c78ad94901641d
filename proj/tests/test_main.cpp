#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include "schurk/arith.hpp"

int main(int argc, char** argv) {
  schurk::set_default_digits(schurk::env_default_digits());
  doctest::Context ctx;
  ctx.applyCommandLine(argc, argv);
  return ctx.run();
}
