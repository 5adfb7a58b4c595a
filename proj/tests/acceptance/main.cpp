#include "acceptance.hpp"

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <string>

// With no arguments every criterion runs; `--only N` runs one.
int main(int argc, char** argv) {
  if (argc == 3 && std::string(argv[1]) == "--only") {
    const int id = std::atoi(argv[2]);
    if (id < 1 || id > holobound::acceptance::criterion_count()) {
      std::cerr << "criterion out of range\n";
      return 64;
    }
    const auto o = holobound::acceptance::run_criterion(id);
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << id << "  " << o.title << "  (" << std::fixed
              << std::setprecision(3) << o.seconds << " s)  " << o.detail << '\n';
    return o.pass ? 0 : 1;
  }
  return holobound::acceptance::run_all(std::cout);
}
