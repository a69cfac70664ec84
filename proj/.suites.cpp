#include <chrono>
#include <cstdio>
#include "parton/checks.hpp"
using namespace parton;
int main(int argc, char** argv) {
    checks::Options opt;
    std::vector<std::string> names = checks::suite_names();
    if (argc > 1) names = {argv[1]};
    for (auto& s : names) {
        auto t0 = std::chrono::steady_clock::now();
        auto rows = checks::run_suite(s, opt);
        double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("== %s (%.2fs)\n", s.c_str(), dt);
        for (auto& r : rows)
            std::printf("  [%s] %s/%s (%s) residual=%.3e tol=%.1e\n", status_text(r.status),
                        r.suite.c_str(), r.name.c_str(), r.params.c_str(), r.residual, r.tolerance);
    }
    return 0;
}
