// Benchmark: serial reference kernels against their OpenMP twins, checking
// agreement on every run.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "ehc/families.hpp"
#include "ehc/canonical.hpp"
#include "ehc/scan.hpp"

using namespace ehc;
using clk = std::chrono::steady_clock;

namespace {

double time_of(const std::function<void()>& fn) {
    auto t0 = clk::now();
    fn();
    return std::chrono::duration<double>(clk::now() - t0).count();
}

void row(const std::string& name, double serial_s, double omp_s, bool agree) {
    std::printf("%-34s %9.3fs %9.3fs %7.2fx   %s\n", name.c_str(), serial_s, omp_s,
                serial_s / omp_s, agree ? "results agree" : "RESULTS DIFFER");
}

} // namespace

int main(int argc, char** argv) {
    std::uint64_t samples = 400'000;
    if (argc > 1) samples = std::stoull(argv[1]);
    std::printf("threads available: %d\n", omp_get_max_threads());
    std::printf("%-34s %10s %10s %8s\n", "kernel", "serial", "openmp", "speedup");

    auto [asteroid, theta] = build_asteroid();
    std::optional<Tournament> pat = asteroid;

    {
        SizeGuaranteeReport a, b;
        double ts = time_of([&] { a = verify_lemma_h_serial(4, false, samples, 7); });
        double tp = time_of([&] { b = verify_lemma_h(4, false, samples, 7, 0); });
        row("size guarantee, n=8 sampled", ts, tp,
            a.checked == b.checked && a.counterexamples == b.counterexamples &&
                a.min_tr_seen == b.min_tr_seen);
    }
    {
        MinTrScan a, b;
        double ts = time_of([&] { a = sampled_min_tr_serial(7, pat, samples / 4, 11); });
        double tp = time_of([&] { b = sampled_min_tr_omp(7, pat, samples / 4, 11, 0); });
        row("sampled min tr, n=7 asteroid-free", ts, tp,
            a.min_tr == b.min_tr && a.count == b.count && a.witness_bits == b.witness_bits);
    }
    {
        MinTrScan a, b;
        double ts = time_of([&] { a = labeled_min_tr_serial(6, pat); });
        double tp = time_of([&] { b = labeled_min_tr_omp(6, pat, 0); });
        row("labeled min tr, all 2^15 on n=6", ts, tp,
            a.min_tr == b.min_tr && a.count == b.count && a.witness_bits == b.witness_bits);
    }
    {
        auto reps = enumerate_tournaments(7);
        MinTrScan a, b;
        double ts = time_of([&] { a = class_min_tr_serial(reps, pat); });
        double tp = time_of([&] { b = class_min_tr_omp(reps, pat, 0); });
        row("class min tr, 456 classes n=7", ts, tp,
            a.min_tr == b.min_tr && a.count == b.count && a.witness_bits == b.witness_bits);
    }
    return 0;
}
