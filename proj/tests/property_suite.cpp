#include <iostream>

#include "properties.hpp"

int main()
{
    int failures = 0;
    for (const auto &r : onegen::properties::run_all()) {
        std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << "\n";
        failures += !r.passed;
    }
    return failures == 0 ? 0 : 1;
}
