#include <cstdlib>
#include <iostream>

#include "weakdiv/acceptance.hpp"

int main() {
  weakdiv::AcceptanceOptions opts;
  if (const char* t = std::getenv("WEAKDIV_THREADS")) opts.threads = static_cast<unsigned>(std::atoi(t));
  bool ok = true;
  for (const auto& r : weakdiv::run_acceptance(opts)) {
    std::cout << weakdiv::format_result(r) << std::endl;
    ok = ok && r.passed;
  }
  return ok ? EXIT_SUCCESS : EXIT_FAILURE;
}
