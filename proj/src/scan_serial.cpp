#include <stdexcept>

#include "ehc/canonical.hpp"
#include "ehc/embedding.hpp"
#include "ehc/rng.hpp"
#include "ehc/scan.hpp"
#include "ehc/transitive.hpp"
#include "scan_detail.hpp"

namespace ehc {

namespace scan_detail {

Tournament from_code(int n, std::uint64_t code) {
    Tournament t(n);
    for (int p = 0; p < Tournament::pair_count(n); ++p)
        t.set_pair_bit(p, (code >> p) & 1ULL);
    return t;
}

void fold(MinTrScan& acc, int tr_value, const std::string& bits) {
    ++acc.count;
    if (!acc.any || tr_value < acc.min_tr ||
        (tr_value == acc.min_tr && bits < acc.witness_bits)) {
        acc.any = true;
        acc.min_tr = tr_value;
        acc.witness_bits = bits;
    }
}

void merge(MinTrScan& into, const MinTrScan& part) {
    into.examined += part.examined;
    into.count += part.count;
    if (!part.any) return;
    if (!into.any || part.min_tr < into.min_tr ||
        (part.min_tr == into.min_tr && part.witness_bits < into.witness_bits)) {
        into.any = true;
        into.min_tr = part.min_tr;
        into.witness_bits = part.witness_bits;
    }
}

void scan_one(MinTrScan& acc, const Tournament& t, const std::optional<Tournament>& pattern) {
    ++acc.examined;
    if (pattern && find_induced_copy(t, *pattern).has_value()) return;
    fold(acc, tr_size(t), t.bitstring());
}

} // namespace scan_detail

using namespace scan_detail;

MinTrScan labeled_min_tr_serial(int n, const std::optional<Tournament>& pattern) {
    if (n < 1 || n > 6) throw std::invalid_argument("labeled scan: 1 <= n <= 6 required");
    MinTrScan acc;
    std::uint64_t total = 1ULL << Tournament::pair_count(n);
    for (std::uint64_t code = 0; code < total; ++code)
        scan_one(acc, from_code(n, code), pattern);
    return acc;
}

MinTrScan class_min_tr_serial(const std::vector<Tournament>& reps,
                              const std::optional<Tournament>& pattern) {
    MinTrScan acc;
    for (const auto& t : reps) scan_one(acc, t, pattern);
    return acc;
}

MinTrScan canonical_min_tr_serial(int n, const std::optional<Tournament>& pattern) {
    return class_min_tr_serial(enumerate_tournaments(n), pattern);
}

MinTrScan sampled_min_tr_serial(int n, const std::optional<Tournament>& pattern,
                                std::uint64_t samples, std::uint64_t seed) {
    MinTrScan acc;
    for (std::uint64_t i = 0; i < samples; ++i)
        scan_one(acc, random_tournament(n, derive_seed(seed, i)), pattern);
    return acc;
}

SizeGuaranteeReport verify_lemma_h_serial(int k, bool exhaustive, std::uint64_t samples,
                                          std::uint64_t seed) {
    if (k < 1) throw std::invalid_argument("k >= 1 required");
    SizeGuaranteeReport rep;
    rep.k = k;
    rep.n = 1 << (k - 1);
    rep.exhaustive = exhaustive;
    rep.min_tr_seen = rep.n + 1;
    auto check = [&](const Tournament& t) {
        ++rep.checked;
        int v = tr_size(t);
        if (v < rep.min_tr_seen) rep.min_tr_seen = v;
        if (v < k) {
            if (rep.counterexamples == 0) rep.first_counterexample = t.bitstring();
            ++rep.counterexamples;
        }
    };
    if (exhaustive) {
        if (rep.n > 5) throw std::invalid_argument("exhaustive size check infeasible: 2^(k-1) > 5");
        std::uint64_t total = 1ULL << Tournament::pair_count(rep.n);
        for (std::uint64_t code = 0; code < total; ++code) check(from_code(rep.n, code));
    } else {
        for (std::uint64_t i = 0; i < samples; ++i) check(random_tournament(rep.n, derive_seed(seed, i)));
    }
    return rep;
}

} // namespace ehc
