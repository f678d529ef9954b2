// Acceptance suite: one pass/fail line per criterion. Run with a criterion
// number to execute just that one (the ctest registration does this), or
// with no arguments for the whole battery.

#include <cstdio>
#include <cstdlib>
#include <string>

#include "boxperf/suite.hpp"

int main(int argc, char** argv) {
    int lo = 1, hi = boxperf::criterion_count();
    if (argc > 1) lo = hi = std::atoi(argv[1]);
    int failures = 0;
    for (int id = lo; id <= hi; ++id) {
        boxperf::CriterionResult r = boxperf::run_criterion(id);
        std::printf("%s criterion %2d [%6.2fs] %s — %s\n", r.pass ? "PASS" : "FAIL", r.id,
                    r.seconds, r.name.c_str(), r.detail.c_str());
        std::fflush(stdout);
        if (!r.pass) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
