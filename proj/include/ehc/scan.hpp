#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ehc/families.hpp"
#include "ehc/rational.hpp"
#include "ehc/tournament.hpp"

namespace ehc {

// ---------------------------------------------------------------------------
// Scan kernels. Each kernel has a serial reference implementation and an
// OpenMP one; results are merged with associative minima keyed on canonical
// forms, so the output is identical for every worker count.
// ---------------------------------------------------------------------------

struct MinTrScan {
    bool any = false;          // some tournament passed the filter
    int min_tr = 0;
    std::string witness_bits;  // TRN bitstring; ties broken by bitstring so the
                               // winner is independent of evaluation order
    std::uint64_t count = 0;   // tournaments that passed the filter
    std::uint64_t examined = 0;
};

// Exhaustive over all labeled n-vertex tournaments (n <= 6), keeping the
// minimum tr among those free of `pattern` (pattern empty = no filter).
MinTrScan labeled_min_tr_serial(int n, const std::optional<Tournament>& pattern);
MinTrScan labeled_min_tr_omp(int n, const std::optional<Tournament>& pattern, int jobs);

// Over one representative per isomorphism class (n <= 7), or an explicit
// representative list.
MinTrScan canonical_min_tr_serial(int n, const std::optional<Tournament>& pattern);
MinTrScan canonical_min_tr_omp(int n, const std::optional<Tournament>& pattern, int jobs);
MinTrScan class_min_tr_serial(const std::vector<Tournament>& reps,
                              const std::optional<Tournament>& pattern);
MinTrScan class_min_tr_omp(const std::vector<Tournament>& reps,
                           const std::optional<Tournament>& pattern, int jobs);

// Seeded sampling; sample i draws from its own derived stream.
MinTrScan sampled_min_tr_serial(int n, const std::optional<Tournament>& pattern,
                                std::uint64_t samples, std::uint64_t seed);
MinTrScan sampled_min_tr_omp(int n, const std::optional<Tournament>& pattern,
                             std::uint64_t samples, std::uint64_t seed, int jobs);

struct SizeGuaranteeReport {
    bool exhaustive = false;
    int k = 0;
    int n = 0;                  // 2^(k-1)
    std::uint64_t checked = 0;
    std::uint64_t counterexamples = 0;
    int min_tr_seen = 0;
    std::string first_counterexample; // TRN bitstring, empty when none
};

// Checks that every (or every sampled) tournament on 2^(k-1) vertices has
// tr >= k. Exhaustive mode requires 2^(k-1) <= 5.
SizeGuaranteeReport verify_lemma_h(int k, bool exhaustive, std::uint64_t samples,
                                   std::uint64_t seed, int jobs);
SizeGuaranteeReport verify_lemma_h_serial(int k, bool exhaustive, std::uint64_t samples,
                                          std::uint64_t seed);

// ---------------------------------------------------------------------------
// Scan reports
// ---------------------------------------------------------------------------

struct ScanRow {
    int n = 0;
    std::uint64_t count = 0;      // pattern-free tournaments behind min_tr
    int min_tr = -1;              // -1: none found / none exist
    std::string witness_canonical;
    double eps_running = -1;      // min over rows so far of log(min_tr)/log(n); -1 = undefined
};

struct ScanReport {
    std::string h_canonical;
    std::string mode; // "exhaustive" | "sample"
    int n_max = 0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    std::vector<ScanRow> rows;
    double epsilon_estimate = -1;

    std::string to_json() const;  // stable field order, no wall-clock content
    std::string to_csv() const;   // n,min_tr,count,witness_canonical,eps_running
};

struct MinTrOutcome {
    enum class Status { Ok, NoPatternFree } status = Status::Ok;
    int min_tr = -1;
    std::string witness_canonical;
    std::uint64_t count = 0;
};

// Exhaustive (n <= 7, canonical enumeration) or sampled search for the
// minimum tr over pattern-free n-vertex tournaments.
MinTrOutcome min_tr_pattern_free(const Tournament& pattern, int n, const std::string& mode,
                                 std::uint64_t samples, std::uint64_t seed, int jobs);

ScanReport epsilon_estimate(const Tournament& pattern, int n_max, const std::string& mode,
                            std::uint64_t samples, std::uint64_t seed, int jobs);

// All canonical tournaments with n <= n_max (n_max <= 7) that are
// epsilon-critical.
std::vector<Tournament> criticality_scan(const Rational& eps, int n_max);

void emit_report(const ScanReport& rep, const std::string& format, const std::string& path);

// ---------------------------------------------------------------------------
// Orientation sweeps: all completions of a mutant's unoriented pairs must
// extract a genuine copy.
// ---------------------------------------------------------------------------

struct SweepReport {
    std::uint64_t tried = 0;
    std::uint64_t failures = 0;
    std::vector<std::string> messages;
};

SweepReport sweep_beta_asteroid(const BetaKind& kind);
SweepReport sweep_all_beta_asteroids();
SweepReport sweep_spider(const SpiderSpec& spec);
SweepReport sweep_small_spiders(int max_legs = 3);

// ---------------------------------------------------------------------------
// Deterministic-inequality fuzzing (exact arithmetic, randomized instances).
// ---------------------------------------------------------------------------

struct FuzzReport {
    std::uint64_t trials = 0;
    std::uint64_t violations = 0;
    std::string first_violation;
};

FuzzReport fuzz_subset_density_bound(std::uint64_t trials, int n_max, std::uint64_t seed);
FuzzReport fuzz_common_restriction(std::uint64_t trials, int n_max, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Pattern witnesses: direct existential searches.
// ---------------------------------------------------------------------------

// k vertex-disjoint pairs (x_i, y_i), x in X, y in Y, with y_i -> x_i,
// via bipartite matching. Returns as many as possible, capped at k<0 ? all.
std::vector<std::pair<int, int>> backward_pair_matching(const Tournament& t,
                                                        const std::vector<int>& X,
                                                        const std::vector<int>& Y, int k = -1);

// Arcs witnessing that A is not complete from / not complete to G.
struct NotCompleteWitness {
    std::optional<std::pair<int, int>> a_to_g; // witnesses "not complete from"
    std::optional<std::pair<int, int>> g_to_a; // witnesses "not complete to"
};
NotCompleteWitness not_complete_witness(const Tournament& t, const std::vector<int>& A,
                                        const std::vector<int>& G);

// a in A1, x in A2, s1 in S1, s2 in S2 with x->a, x->s2, a->s1 (variant 1) or
// the mirrored form u1->d1, d2->d1, u2->d2 (variant 2).
std::optional<std::vector<int>> cross_pair_witness(const Tournament& t, const std::vector<int>& S1,
                                                   const std::vector<int>& S2,
                                                   const std::vector<int>& A1,
                                                   const std::vector<int>& A2, int variant);

// One vertex a of A plus one vertex per S_i realizing a fan pattern:
// variant 1: a->s_1..s_{m-1}, s_m->a;  2: a->s_1, s_2..s_m->a;
// variant 3: a->all;                   4: all->a.
std::optional<std::vector<int>> fan_witness(const Tournament& t,
                                            const std::vector<std::vector<int>>& S,
                                            const std::vector<int>& A, int variant);

} // namespace ehc
