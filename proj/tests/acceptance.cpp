// Runs the ten end-to-end criteria; exit status is nonzero if any fails.
#include <cstdlib>
#include <iostream>
#include <thread>

#include "coha/acceptance.hpp"

int main(int argc, char** argv) {
    std::uint64_t seed = 20240611;
    if (argc > 1) seed = std::strtoull(argv[1], nullptr, 10);
    const unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    auto results = coha::run_acceptance(seed, threads, &std::cout);
    int failed = 0;
    for (const auto& r : results) failed += r.pass ? 0 : 1;
    std::cout << (failed ? "FAILED " : "all passed ") << "(" << results.size() - failed << "/" << results.size() << ")\n";
    return failed ? 1 : 0;
}
