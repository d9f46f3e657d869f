// Acceptance gate: runs every numbered verification check and prints one
// line per check. Exits nonzero if anything fails.
#include <cstdio>

#include "gcensus/verification.hpp"

int main() {
    bool all_pass = true;
    int total = 0;
    for (int id = 1; id <= 11; ++id) {
        for (const gcensus::CheckResult& r : gcensus::run_verification_suite({id})) {
            ++total;
            if (!r.pass) all_pass = false;
            std::printf("[%s] %2d %-28s %s\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(),
                        r.detail.c_str());
            std::fflush(stdout);
        }
    }
    std::printf("%s: %d/%d\n", all_pass ? "ACCEPTED" : "REJECTED", total, 11);
    return all_pass && total == 11 ? 0 : 1;
}
