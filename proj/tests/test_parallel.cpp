#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ehc/families.hpp"
#include "ehc/scan.hpp"

using namespace ehc;

// The OpenMP kernels must agree with the serial reference bit for bit, for
// every worker count.

namespace {

bool same(const MinTrScan& a, const MinTrScan& b) {
    return a.any == b.any && a.min_tr == b.min_tr && a.witness_bits == b.witness_bits &&
           a.count == b.count && a.examined == b.examined;
}

} // namespace

TEST_CASE("labeled scan agreement") {
    auto [asteroid, th] = build_asteroid();
    std::optional<Tournament> pat = asteroid;
    MinTrScan ref = labeled_min_tr_serial(5, pat);
    for (int jobs : {1, 2, 4}) CHECK(same(ref, labeled_min_tr_omp(5, pat, jobs)));
    MinTrScan open = labeled_min_tr_serial(4, std::nullopt);
    for (int jobs : {1, 2, 4}) CHECK(same(open, labeled_min_tr_omp(4, std::nullopt, jobs)));
}

TEST_CASE("canonical scan agreement") {
    auto [asteroid, th] = build_asteroid();
    std::optional<Tournament> pat = asteroid;
    for (int n : {5, 6}) {
        MinTrScan ref = canonical_min_tr_serial(n, pat);
        for (int jobs : {1, 2, 4}) CHECK(same(ref, canonical_min_tr_omp(n, pat, jobs)));
    }
}

TEST_CASE("sampled scan agreement") {
    auto [asteroid, th] = build_asteroid();
    std::optional<Tournament> pat = asteroid;
    MinTrScan ref = sampled_min_tr_serial(6, pat, 4000, 12345);
    for (int jobs : {1, 2, 4}) CHECK(same(ref, sampled_min_tr_omp(6, pat, 4000, 12345, jobs)));
    // a different seed really does change the stream
    CHECK(!same(ref, sampled_min_tr_serial(6, pat, 4000, 54321)));
}

TEST_CASE("size guarantee agreement") {
    SizeGuaranteeReport ref = verify_lemma_h_serial(4, false, 30000, 99);
    for (int jobs : {1, 2, 4}) {
        SizeGuaranteeReport par = verify_lemma_h(4, false, 30000, 99, jobs);
        CHECK(par.checked == ref.checked);
        CHECK(par.counterexamples == ref.counterexamples);
        CHECK(par.min_tr_seen == ref.min_tr_seen);
        CHECK(par.first_counterexample == ref.first_counterexample);
    }
}

TEST_CASE("scan reports are identical across worker counts") {
    auto [asteroid, th] = build_asteroid();
    ScanReport a1 = epsilon_estimate(asteroid, 5, "sample", 2000, 7, 1);
    ScanReport a2 = epsilon_estimate(asteroid, 5, "sample", 2000, 7, 2);
    ScanReport a4 = epsilon_estimate(asteroid, 5, "sample", 2000, 7, 4);
    CHECK(a1.to_json() == a2.to_json());
    CHECK(a1.to_json() == a4.to_json());
    CHECK(a1.to_csv() == a2.to_csv());
}
