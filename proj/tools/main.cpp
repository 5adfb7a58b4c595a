#include "holobound/cli.hpp"

#include <cstdlib>
#include <iostream>

#ifdef HOLOBOUND_HAVE_SELFTEST
#include "acceptance.hpp"
#endif

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  holobound::cli::Environment env;
  if (const char* cfg = std::getenv("HOLOBOUND_CONFIG")) env.config_env = cfg;
#ifdef HOLOBOUND_HAVE_SELFTEST
  env.selftest = [](std::ostream& out) { return holobound::acceptance::run_all(out); };
#endif
  return holobound::cli::run(args, std::cout, std::cerr, env);
}
