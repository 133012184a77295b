// Runs the full acceptance battery and prints one line per criterion.
#include <cstdio>

#include "fsq/acceptance.hpp"

int main() {
    auto results = fsq::run_acceptance();
    bool all_pass = true;
    for (const auto& r : results) {
        std::printf("[%s] %2d %-38s %7.2fs  %s\n", r.pass ? "pass" : "FAIL", r.id,
                    r.name.c_str(), r.seconds, r.detail.c_str());
        all_pass = all_pass && r.pass;
    }
    std::printf("%s\n", all_pass ? "acceptance: all criteria passed" : "acceptance: FAILURES");
    return all_pass ? 0 : 1;
}
