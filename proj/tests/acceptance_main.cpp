#include <cstdlib>
#include <iostream>
#include <thread>

#include "rgh/verify.hpp"

// Runs the full release gate and prints one line per criterion; the exit
// status is zero only when every criterion holds.
int main() {
    const unsigned hw = std::thread::hardware_concurrency();
    int threads = hw == 0 ? 1 : static_cast<int>(hw);
    if (const char* env = std::getenv("RGH_THREADS")) {
        const int parsed = std::atoi(env);
        if (parsed > 0) threads = parsed;
    }

    const auto checks = rgh::run_standard_suite(threads, [](const std::string& msg) {
        std::cerr << "# " << msg << "\n";
    });

    std::size_t passed = 0;
    for (const auto& check : checks) {
        std::cout << rgh::format_check_line(check, checks.size()) << "\n";
        if (check.pass) ++passed;
    }
    std::cout << "RESULT: " << passed << "/" << checks.size() << " criteria passed"
              << std::endl;
    return passed == checks.size() ? EXIT_SUCCESS : EXIT_FAILURE;
}
