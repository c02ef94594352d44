// Runs every verification suite at its full size and prints one line each.
#include <cstdio>

#include <supercrystal.hpp>

int main() {
    using namespace supercrystal;
    int failed = 0;
    int n = 0;
    for (const auto& name : suite_names()) {
        ++n;
        SuiteResult r = run_suite(name);
        std::printf("%s %2d %-22s %7ld cases %8.2fs / %.0fs  %s\n", r.pass() ? "PASS" : "FAIL", n, name.c_str(),
                    r.cases, r.seconds, r.limit, r.detail.c_str());
        if (!r.pass()) ++failed;
    }
    std::printf("%d of %d criteria passed\n", n - failed, n);
    return failed ? 1 : 0;
}
