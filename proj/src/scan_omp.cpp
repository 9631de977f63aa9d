#include <omp.h>

#include <stdexcept>

#include "ehc/canonical.hpp"
#include "ehc/rng.hpp"
#include "ehc/scan.hpp"
#include "ehc/transitive.hpp"
#include "scan_detail.hpp"

// OpenMP twins of the serial scan kernels. Work splits into fixed-size chunks
// merged with the same associative fold as the serial path, so every worker
// count produces identical output.

namespace ehc {

using namespace scan_detail;

namespace {

int clamp_jobs(int jobs) {
    if (jobs <= 0) return omp_get_max_threads();
    return jobs;
}

template <typename Fn>
MinTrScan chunked_scan(std::uint64_t total, int jobs, Fn&& body) {
    const std::uint64_t chunk = 4096;
    std::uint64_t nchunks = (total + chunk - 1) / chunk;
    std::vector<MinTrScan> parts(nchunks);
#pragma omp parallel for schedule(dynamic) num_threads(clamp_jobs(jobs))
    for (long long ci = 0; ci < (long long)nchunks; ++ci) {
        std::uint64_t lo = ci * chunk;
        std::uint64_t hi = std::min(total, lo + chunk);
        for (std::uint64_t i = lo; i < hi; ++i) body(parts[ci], i);
    }
    MinTrScan acc;
    for (const auto& p : parts) merge(acc, p);
    return acc;
}

} // namespace

MinTrScan labeled_min_tr_omp(int n, const std::optional<Tournament>& pattern, int jobs) {
    if (n < 1 || n > 6) throw std::invalid_argument("labeled scan: 1 <= n <= 6 required");
    std::uint64_t total = 1ULL << Tournament::pair_count(n);
    return chunked_scan(total, jobs, [&](MinTrScan& acc, std::uint64_t code) {
        scan_one(acc, from_code(n, code), pattern);
    });
}

MinTrScan class_min_tr_omp(const std::vector<Tournament>& reps,
                           const std::optional<Tournament>& pattern, int jobs) {
    return chunked_scan(reps.size(), jobs, [&](MinTrScan& acc, std::uint64_t i) {
        scan_one(acc, reps[i], pattern);
    });
}

MinTrScan canonical_min_tr_omp(int n, const std::optional<Tournament>& pattern, int jobs) {
    return class_min_tr_omp(enumerate_tournaments(n), pattern, jobs);
}

MinTrScan sampled_min_tr_omp(int n, const std::optional<Tournament>& pattern,
                             std::uint64_t samples, std::uint64_t seed, int jobs) {
    return chunked_scan(samples, jobs, [&](MinTrScan& acc, std::uint64_t i) {
        scan_one(acc, random_tournament(n, derive_seed(seed, i)), pattern);
    });
}

SizeGuaranteeReport verify_lemma_h(int k, bool exhaustive, std::uint64_t samples,
                                   std::uint64_t seed, int jobs) {
    if (k < 1) throw std::invalid_argument("k >= 1 required");
    SizeGuaranteeReport rep;
    rep.k = k;
    rep.n = 1 << (k - 1);
    rep.exhaustive = exhaustive;
    rep.min_tr_seen = rep.n + 1;
    std::uint64_t total;
    if (exhaustive) {
        if (rep.n > 5) throw std::invalid_argument("exhaustive size check infeasible: 2^(k-1) > 5");
        total = 1ULL << Tournament::pair_count(rep.n);
    } else {
        total = samples;
    }
    const std::uint64_t chunk = 4096;
    std::uint64_t nchunks = (total + chunk - 1) / chunk;
    std::vector<SizeGuaranteeReport> parts(nchunks);
    std::vector<std::uint64_t> first_idx(nchunks, ~0ULL);
#pragma omp parallel for schedule(dynamic) num_threads(clamp_jobs(jobs))
    for (long long ci = 0; ci < (long long)nchunks; ++ci) {
        auto& part = parts[ci];
        part.min_tr_seen = rep.n + 1;
        std::uint64_t lo = ci * chunk;
        std::uint64_t hi = std::min(total, lo + chunk);
        for (std::uint64_t i = lo; i < hi; ++i) {
            Tournament t = exhaustive ? from_code(rep.n, i)
                                      : random_tournament(rep.n, derive_seed(seed, i));
            ++part.checked;
            int v = tr_size(t);
            if (v < part.min_tr_seen) part.min_tr_seen = v;
            if (v < k) {
                if (part.counterexamples == 0) {
                    part.first_counterexample = t.bitstring();
                    first_idx[ci] = i;
                }
                ++part.counterexamples;
            }
        }
    }
    std::uint64_t best_idx = ~0ULL;
    for (std::uint64_t ci = 0; ci < nchunks; ++ci) {
        rep.checked += parts[ci].checked;
        rep.counterexamples += parts[ci].counterexamples;
        rep.min_tr_seen = std::min(rep.min_tr_seen, parts[ci].min_tr_seen);
        if (first_idx[ci] < best_idx) {
            best_idx = first_idx[ci];
            rep.first_counterexample = parts[ci].first_counterexample;
        }
    }
    return rep;
}

} // namespace ehc
