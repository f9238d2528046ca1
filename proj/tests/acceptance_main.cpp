#include <iostream>

#include "homcov/report.hpp"

int main(int argc, char** argv) {
    std::uint64_t seed = 0;
    if (argc > 1) seed = std::strtoull(argv[1], nullptr, 10);
    const auto results = homcov::run_acceptance(seed, &std::cout);
    int failures = 0;
    for (const auto& r : results) failures += r.pass ? 0 : 1;
    if (failures) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all acceptance criteria pass\n";
    return 0;
}
