// Runs acceptance criteria 1-10 over the suite directory and prints one
// PASS/FAIL line per criterion. Exits nonzero if any criterion fails.
#include <chrono>
#include <iostream>

#include "reestau.hpp"

int main(int argc, char** argv) {
  using namespace reestau;
  const std::string dir = argc > 1 ? argv[1] : REESTAU_SUITE_DIR;
  auto start = std::chrono::steady_clock::now();
  bool ok = true;
  try {
    for (const auto& r : run_acceptance(load_suite(dir))) {
      ok = ok && r.pass;
      std::cout << format_result(r) << "\n";
      for (const auto& f : r.failures) std::cout << "  " << f << "\n";
    }
  } catch (const std::exception& e) {
    std::cout << "error: " << e.what() << "\n";
    return 2;
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << "total " << secs << " s\n";
  return ok ? 0 : 1;
}
