#include <cstdlib>
#include <iostream>
#include <string>

#include "poincare/acceptance.hpp"

int main(int argc, char** argv)
{
    poincare::AcceptanceOptions options;
    if (argc > 1) {
        options.order_cap = std::stoi(argv[1]);
    }
    bool ok = true;
    poincare::run_acceptance(options, [&](const poincare::CriterionResult& r) {
        std::cout << poincare::summary_line(r) << '\n';
        for (const auto& line : r.details) {
            std::cout << "      " << line << '\n';
        }
        std::cout.flush();
        ok = ok && r.passed;
    });
    return ok ? EXIT_SUCCESS : EXIT_FAILURE;
}
