// Benchmark: serial vs OpenMP-parallel intersection sweeps and enumeration.
#include <chrono>
#include <cstdint>
#include <iostream>
#include <random>

#include "torusband/intersections.hpp"
#include "torusband/sequences.hpp"

using clk = std::chrono::steady_clock;

static double ms_since(clk::time_point t0) {
    return std::chrono::duration<double, std::milli>(clk::now() - t0).count();
}

int main(int argc, char** argv) {
    int n = 2, r = 12, pairs = 40;
    if (argc > 1) n = std::atoi(argv[1]);
    if (argc > 2) r = std::atoi(argv[2]);
    if (argc > 3) pairs = std::atoi(argv[3]);

    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::int64_t> de(-3, 3);
    std::vector<std::pair<tb::loop_matrix, tb::loop_matrix>> samples;
    while (static_cast<int>(samples.size()) < pairs) {
        tb::loop_matrix a{n, r, {}}, b{n, r, {}};
        a.entries.resize(static_cast<std::size_t>(n) * r);
        b.entries.resize(static_cast<std::size_t>(n) * r);
        for (auto& e : a.entries) e = de(rng);
        for (auto& e : b.entries) e = de(rng);
        if (!tb::is_primitive(a) || !tb::is_primitive(b)) continue;
        if (tb::matrices_equivalent(a, b)) continue;
        samples.emplace_back(a, b);
    }

    for (auto policy : {tb::exec_policy::serial, tb::exec_policy::parallel}) {
        const char* name = policy == tb::exec_policy::serial ? "serial  " : "parallel";
        auto t0 = clk::now();
        std::int64_t total = 0;
        for (const auto& [a, b] : samples) total += tb::intersections_cvb(a, b, policy).count;
        std::cout << "intersections_cvb " << name << ": " << ms_since(t0) << " ms (total " << total
                  << ")\n";
    }

    const std::vector<std::int64_t> d{1, 0};
    for (bool parallel : {false, true}) {
        tb::enumeration_limits lim;
        lim.r_max = 6;
        auto t0 = clk::now();
        auto classes = tb::enumerate_simple_candidates(2, 5, d, lim, parallel);
        std::cout << "enumeration " << (parallel ? "parallel" : "serial  ") << ": " << ms_since(t0)
                  << " ms (" << classes.size() << " classes)\n";
    }
    return 0;
}
