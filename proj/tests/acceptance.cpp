// Acceptance suite: runs every criterion at its stated tolerance and prints
// one pass/fail line per criterion. Exits nonzero if any criterion fails.

#include <cstdio>

#include "specdyn/verify.hpp"

int main() {
    const auto results = specdyn::run_checks();
    int failures = 0;
    std::printf("%-6s %-5s %-22s %-8s %s\n", "status", "id", "check", "time", "detail");
    for (const auto& r : results) {
        if (!r.pass) ++failures;
        std::printf("[%s] %-5s %-22s %6.2fs  %s\n", r.pass ? "PASS" : "FAIL", r.criterion.c_str(),
                    r.name.c_str(), r.seconds, r.detail.c_str());
    }
    std::printf("%d/%zu criteria passed\n", int(results.size()) - failures, results.size());
    return failures == 0 ? 0 : 1;
}
