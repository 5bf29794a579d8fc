#include <chrono>
#include <iostream>
#include <random>

#include "equicoh/attach.hpp"
#include "equicoh/free_module.hpp"
#include "equicoh/parallel.hpp"

using namespace equicoh;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

FreeModule big_module(int gens, std::mt19937& rng) {
    std::uniform_int_distribution<int> deg(0, 24);
    FreeModule M;
    for (int i = 0; i < gens; ++i)
        M.add({"g" + std::to_string(i), {deg(rng), deg(rng)}});
    return M;
}

template <typename F>
double time_best_of(int reps, F&& f) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto t0 = Clock::now();
        f();
        best = std::min(best, seconds_since(t0));
    }
    return best;
}

}  // namespace

int main(int argc, char** argv) {
    int gens = 48;
    int reps = 3;
    if (argc > 1)
        gens = std::atoi(argv[1]);
    if (argc > 2)
        reps = std::atoi(argv[2]);

    std::mt19937 rng(42);
    const FreeModule M = big_module(gens, rng);
    const Window w(-30, 40, -50, 40);

    std::cout << "dimension table, " << gens << " generators on " << to_string(w) << "\n";
    set_exec_mode(ExecMode::Serial);
    const DimensionTable ref = dimension_table(M, w);
    const double tSerial = time_best_of(reps, [&] { dimension_table(M, w); });
    set_exec_mode(ExecMode::Parallel);
    const DimensionTable par = dimension_table(M, w);
    const double tParallel = time_best_of(reps, [&] { dimension_table(M, w); });
    std::cout << "  serial reference: " << tSerial << " s\n";
    std::cout << "  parallel kernel:  " << tParallel << " s  (speedup " << tSerial / tParallel << "x)\n";
    std::cout << "  results identical: " << (ref == par ? "yes" : "NO") << "\n";

    // attachment rank sweep
    FreeModule B = big_module(gens / 2, rng);
    DifferentialSpec d;
    int hits = 0;
    for (const auto& g : B.generators()) {
        const Bidegree cdeg{g.degree.p + 1 - 26, g.degree.q - 20};
        if (auto e = element_at(cdeg); e && e->cone == ConeBasisElement::Cone::Bot && hits < 6) {
            d.images[g.label] = RingElement(*e);
            ++hits;
        }
    }
    std::cout << "attachment rank sweep, " << B.size() << " generators, " << hits << " nonzero images\n";
    set_exec_mode(ExecMode::Serial);
    const auto refAttach = attach_cell(B, {26, 20}, d, w);
    const double aSerial = time_best_of(reps, [&] { attach_cell(B, {26, 20}, d, w); });
    set_exec_mode(ExecMode::Parallel);
    const auto parAttach = attach_cell(B, {26, 20}, d, w);
    const double aParallel = time_best_of(reps, [&] { attach_cell(B, {26, 20}, d, w); });
    std::cout << "  serial reference: " << aSerial << " s\n";
    std::cout << "  parallel kernel:  " << aParallel << " s  (speedup " << aSerial / aParallel << "x)\n";
    std::cout << "  results identical: "
              << (refAttach.result.degree_multiset() == parAttach.result.degree_multiset() ? "yes" : "NO")
              << "\n";
    return 0;
}
