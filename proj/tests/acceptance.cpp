// Acceptance suite: runs every pinned check and prints one pass/fail line
// per criterion. Exit status is nonzero if any check fails.

#include <cstdio>

#include "npo/selftest.hpp"

int main() {
    npo::selftest::Options options;
    const auto results = npo::selftest::run_all(options);
    std::fputs(npo::selftest::format_report(results).c_str(), stdout);

    int failed = 0;
    for (const auto& r : results) {
        if (r.status == npo::selftest::Status::FAIL) ++failed;
    }
    std::printf("%zu checks, %d failed\n", results.size(), failed);
    return failed == 0 ? 0 : 1;
}
