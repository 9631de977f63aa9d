#include "ehc/scan.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "ehc/canonical.hpp"
#include "ehc/embedding.hpp"
#include "ehc/epsilon.hpp"
#include "ehc/mutants.hpp"
#include "ehc/rng.hpp"
#include "ehc/smooth.hpp"
#include "ehc/transitive.hpp"
#include "scan_detail.hpp"

namespace ehc {

using nlohmann::json;

namespace {

std::string fmt_eps(double e) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", e);
    return buf;
}

} // namespace

// --- report plumbing ---------------------------------------------------------

std::string ScanReport::to_json() const {
    json j;
    j["schema"] = "ehc-report/1";
    j["h_canonical"] = h_canonical;
    j["mode"] = mode;
    j["n_max"] = n_max;
    j["samples"] = samples;
    j["seed"] = seed;
    j["rows"] = json::array();
    for (const auto& r : rows) {
        json rj;
        rj["n"] = r.n;
        rj["count"] = r.count;
        if (r.min_tr >= 0) {
            rj["min_tr"] = r.min_tr;
            rj["witness_canonical"] = r.witness_canonical;
        } else {
            rj["min_tr"] = nullptr;
            rj["witness_canonical"] = nullptr;
        }
        if (r.eps_running >= 0)
            rj["eps_running"] = std::stod(fmt_eps(r.eps_running));
        else
            rj["eps_running"] = nullptr;
        j["rows"].push_back(rj);
    }
    if (epsilon_estimate >= 0)
        j["epsilon_estimate"] = std::stod(fmt_eps(epsilon_estimate));
    else
        j["epsilon_estimate"] = nullptr;
    return j.dump(2) + "\n";
}

std::string ScanReport::to_csv() const {
    std::string out = "n,min_tr,count,witness_canonical,eps_running\n";
    for (const auto& r : rows) {
        out += std::to_string(r.n) + ",";
        out += (r.min_tr >= 0 ? std::to_string(r.min_tr) : "") + ",";
        out += std::to_string(r.count) + ",";
        out += r.witness_canonical + ",";
        out += (r.eps_running >= 0 ? fmt_eps(r.eps_running) : "");
        out += "\n";
    }
    return out;
}

void emit_report(const ScanReport& rep, const std::string& format, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path);
    if (format == "json")
        f << rep.to_json();
    else if (format == "csv")
        f << rep.to_csv();
    else
        throw std::invalid_argument("unknown report format: " + format);
}

// --- scan drivers --------------------------------------------------------------

MinTrOutcome min_tr_pattern_free(const Tournament& pattern, int n, const std::string& mode,
                                 std::uint64_t samples, std::uint64_t seed, int jobs) {
    std::optional<Tournament> pat = pattern;
    MinTrScan s;
    if (mode == "exhaustive") {
        if (n > 7) throw std::invalid_argument("exhaustive mode requires n <= 7");
        s = canonical_min_tr_omp(n, pat, jobs);
    } else if (mode == "sample") {
        s = sampled_min_tr_omp(n, pat, samples, seed, jobs);
    } else {
        throw std::invalid_argument("mode must be exhaustive or sample");
    }
    MinTrOutcome out;
    out.count = s.count;
    if (!s.any) {
        out.status = MinTrOutcome::Status::NoPatternFree;
        return out;
    }
    out.min_tr = s.min_tr;
    out.witness_canonical = canonical_form(Tournament::from_bitstring(n, s.witness_bits));
    return out;
}

ScanReport epsilon_estimate(const Tournament& pattern, int n_max, const std::string& mode,
                            std::uint64_t samples, std::uint64_t seed, int jobs) {
    if (n_max < 2) throw std::invalid_argument("epsilon_estimate: n_max >= 2 required");
    ScanReport rep;
    rep.h_canonical = pattern.size() <= kDefaultCanonBound ? canonical_form(pattern) : pattern.bitstring();
    rep.mode = mode;
    rep.n_max = n_max;
    rep.samples = mode == "sample" ? samples : 0;
    rep.seed = mode == "sample" ? seed : 0;
    double running = -1;
    for (int n = 2; n <= n_max; ++n) {
        MinTrOutcome o = min_tr_pattern_free(pattern, n, mode, samples, derive_seed(seed, n), jobs);
        ScanRow row;
        row.n = n;
        row.count = o.count;
        if (o.status == MinTrOutcome::Status::Ok) {
            row.min_tr = o.min_tr;
            row.witness_canonical = o.witness_canonical;
            double r = std::log((double)o.min_tr) / std::log((double)n);
            running = running < 0 ? r : std::min(running, r);
        }
        row.eps_running = running;
        rep.rows.push_back(row);
    }
    rep.epsilon_estimate = running;
    return rep;
}

std::vector<Tournament> criticality_scan(const Rational& eps, int n_max) {
    if (n_max > 7) throw std::invalid_argument("criticality_scan: n_max <= 7 required");
    std::vector<Tournament> out;
    for (int n = 1; n <= n_max; ++n)
        for (const auto& t : enumerate_tournaments(n))
            if (is_epsilon_critical(t, eps)) out.push_back(t);
    return out;
}

// --- orientation sweeps -----------------------------------------------------------

SweepReport sweep_beta_asteroid(const BetaKind& kind) {
    SweepReport rep;
    MutantBetaAsteroid mu = mutant_beta_asteroid(kind);

    // The sweep treats the completed mutant as its own host: the identity map
    // is a well-contained copy, and every completion must extract a block copy
    // under a theta-set ordering.
    FamilySpec spec;
    spec.family = Family::Asterism;
    spec.n = 7;
    Component c;
    c.kind = Component::Kind::BetaAsteroid;
    c.beta = kind;
    c.positions = {0, 1, 2, 3, 4, 5, 6};
    spec.components.push_back(c);
    CorrespondingDigraph cd = corresponding_digraph(spec);

    auto frees = cd.d.unoriented_pairs();
    std::vector<int> f(cd.d.size());
    for (int i = 0; i < cd.d.size(); ++i) f[i] = i;
    for (std::uint32_t mask = 0; mask < (1u << frees.size()); ++mask) {
        std::vector<bool> completion(frees.size());
        for (size_t i = 0; i < frees.size(); ++i) completion[i] = (mask >> i) & 1;
        Tournament host = cd.d.complete(completion);
        ++rep.tried;
        try {
            AsterismExtraction ex = extract_asterism(host, spec, cd, f);
            if (!ex.verified) {
                ++rep.failures;
                rep.messages.push_back("completion " + std::to_string(mask) + ": extraction not a valid copy");
            }
        } catch (const std::exception& e) {
            ++rep.failures;
            rep.messages.push_back("completion " + std::to_string(mask) + ": " + e.what());
        }
    }
    return rep;
}

SweepReport sweep_all_beta_asteroids() {
    SweepReport rep;
    for (BetaSide side : {BetaSide::Left, BetaSide::Right})
        for (int variant : {1, 2}) {
            SweepReport part = sweep_beta_asteroid({side, variant});
            rep.tried += part.tried;
            rep.failures += part.failures;
            rep.messages.insert(rep.messages.end(), part.messages.begin(), part.messages.end());
        }
    return rep;
}

SweepReport sweep_spider(const SpiderSpec& spec) {
    SweepReport rep;
    MutantSpider ms = mutant_spider(spec);
    auto frees = ms.d.unoriented_pairs();
    std::vector<int> gamma(spec.n);
    for (int i = 0; i < spec.n; ++i) gamma[i] = i;
    for (std::uint32_t mask = 0; mask < (1u << frees.size()); ++mask) {
        std::vector<bool> completion(frees.size());
        for (size_t i = 0; i < frees.size(); ++i) completion[i] = (mask >> i) & 1;
        Tournament host = ms.d.complete(completion);
        ++rep.tried;
        SpiderExtraction ex = extract_spider_or_triangle(host, spec, gamma);
        bool all_forward = true;
        for (auto [a, b] : frees)
            if (!host.arc(a, b)) all_forward = false;
        bool tag_ok = (ex.tag == 's') == all_forward;
        if (!ex.verified || !tag_ok) {
            ++rep.failures;
            rep.messages.push_back("completion " + std::to_string(mask) + ": spider extraction failed");
        }
    }
    return rep;
}

SweepReport sweep_small_spiders(int max_legs) {
    SweepReport rep;
    auto add = [&](const SpiderSpec& s) {
        SweepReport part = sweep_spider(s);
        rep.tried += part.tried;
        rep.failures += part.failures;
        rep.messages.insert(rep.messages.end(), part.messages.begin(), part.messages.end());
    };
    // middle spiders need a leg on each side
    for (int m = 1; m < max_legs; ++m)
        for (int right = 1; m + right <= max_legs; ++right) {
            SpiderSpec s;
            s.side = SpiderSide::Middle;
            s.m = m;
            s.n = 5 + m + right;
            add(s);
        }
    // left/right spiders over every leg partition
    for (int legs = 0; legs <= max_legs; ++legs)
        for (std::uint32_t mask = 0; mask < (1u << legs); ++mask)
            for (SpiderSide side : {SpiderSide::Left, SpiderSide::Right}) {
                SpiderSpec s;
                s.side = side;
                s.n = 5 + legs;
                int lo = side == SpiderSide::Left ? 5 : 0;
                for (int i = 0; i < legs; ++i)
                    ((mask >> i) & 1 ? s.x1 : s.x2).push_back(lo + i);
                add(s);
            }
    return rep;
}

// --- deterministic-inequality fuzzing ------------------------------------------------

FuzzReport fuzz_subset_density_bound(std::uint64_t trials, int n_max, std::uint64_t seed) {
    FuzzReport rep;
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        SplitMix64 g(derive_seed(seed, trial));
        int n = 6 + (int)g.next_below(std::max(1, n_max - 5));
        Tournament t = random_tournament(n, g.next());
        // disjoint A1, A2
        std::vector<int> A1, A2;
        for (int v = 0; v < n; ++v) {
            auto r = g.next_below(3);
            if (r == 0) A1.push_back(v);
            else if (r == 1) A2.push_back(v);
        }
        if (A1.empty() || A2.empty()) continue;
        std::vector<int> X, Y;
        for (int v : A1) if (g.next_bit()) X.push_back(v);
        for (int v : A2) if (g.next_bit()) Y.push_back(v);
        if (X.empty()) X.push_back(A1[0]);
        if (Y.empty()) Y.push_back(A2[0]);
        // tight parameters: preconditions hold with equality
        Rational lambda = Rational(1) - directed_density(t, A1, A2);
        Rational eta1((long long)X.size(), (long long)A1.size());
        Rational eta2((long long)Y.size(), (long long)A2.size());
        ++rep.trials;
        BoundCheck bc = subset_density_bound(t, A1, A2, X, Y, lambda, eta1, eta2);
        if (!bc.ok) {
            ++rep.violations;
            if (rep.first_violation.empty())
                rep.first_violation = "trial " + std::to_string(trial) + ": margin " + bc.margin.str();
        }
    }
    return rep;
}

FuzzReport fuzz_common_restriction(std::uint64_t trials, int n_max, std::uint64_t seed) {
    FuzzReport rep;
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        SplitMix64 g(derive_seed(seed, trial));
        int n = 8 + (int)g.next_below(std::max(1, n_max - 7));
        Tournament t = random_tournament(n, g.next());
        int k = 2 + (int)g.next_below(3); // number of sets
        std::vector<std::vector<int>> sets(k);
        for (int v = 0; v < n; ++v) {
            auto r = g.next_below(k + 1);
            if ((int)r < k) sets[r].push_back(v);
        }
        bool bad = false;
        for (auto& s : sets)
            if (s.empty()) bad = true;
        if (bad) continue;
        // lambda = exact worst one-vertex density deficiency, so chi is smooth
        Rational lambda(0);
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) {
                for (int v : sets[i]) {
                    Rational d = Rational(1) - directed_density(t, {v}, sets[j]);
                    if (d > lambda) lambda = d;
                }
                for (int v : sets[j]) {
                    Rational d = Rational(1) - directed_density(t, sets[i], {v});
                    if (d > lambda) lambda = d;
                }
            }
        SmoothStructure chi;
        chi.sets = sets;
        chi.w.assign(k, 0);
        chi.c = Rational(1, std::max(1, n));
        chi.lambda = lambda;
        int j = (int)g.next_below(k);
        std::vector<int> S_star;
        for (int v : sets[j]) if (g.next_bit()) S_star.push_back(v);
        if (S_star.empty()) S_star.push_back(sets[j][0]);
        std::vector<int> A;
        for (int i = 0; i < k; ++i) {
            if (i == j) continue;
            for (int v : sets[i]) if (g.next_below(4) == 0) A.push_back(v);
        }
        ++rep.trials;
        RestrictionResult rr = common_restriction(t, chi, j, S_star, A);
        if (!rr.bound_ok) {
            ++rep.violations;
            if (rep.first_violation.empty())
                rep.first_violation = "trial " + std::to_string(trial) + ": |result| " +
                                      std::to_string(rr.vertices.size()) + " < bound " + rr.bound.str();
        }
    }
    return rep;
}

// --- pattern witnesses -----------------------------------------------------------------

std::vector<std::pair<int, int>> backward_pair_matching(const Tournament& t,
                                                        const std::vector<int>& X,
                                                        const std::vector<int>& Y, int k) {
    // Kuhn's matching on edges {x, y} with y -> x.
    std::vector<std::vector<int>> adj(X.size());
    for (size_t i = 0; i < X.size(); ++i)
        for (size_t j = 0; j < Y.size(); ++j)
            if (t.arc(Y[j], X[i])) adj[i].push_back((int)j);
    std::vector<int> match_y(Y.size(), -1);
    std::vector<char> visited;
    std::function<bool(int)> try_kuhn = [&](int i) -> bool {
        for (int j : adj[i]) {
            if (visited[j]) continue;
            visited[j] = 1;
            if (match_y[j] < 0 || try_kuhn(match_y[j])) {
                match_y[j] = i;
                return true;
            }
        }
        return false;
    };
    int matched = 0;
    for (size_t i = 0; i < X.size(); ++i) {
        visited.assign(Y.size(), 0);
        if (try_kuhn((int)i)) ++matched;
        if (k >= 0 && matched >= k) break;
    }
    std::vector<std::pair<int, int>> pairs;
    for (size_t j = 0; j < Y.size(); ++j)
        if (match_y[j] >= 0) pairs.emplace_back(X[match_y[j]], Y[j]);
    std::sort(pairs.begin(), pairs.end());
    if (k >= 0 && (int)pairs.size() > k) pairs.resize(k);
    return pairs;
}

NotCompleteWitness not_complete_witness(const Tournament& t, const std::vector<int>& A,
                                        const std::vector<int>& G) {
    NotCompleteWitness w;
    for (int a : A)
        for (int g : G) {
            if (!w.a_to_g && t.arc(a, g)) w.a_to_g = {a, g};
            if (!w.g_to_a && t.arc(g, a)) w.g_to_a = {g, a};
        }
    return w;
}

std::optional<std::vector<int>> cross_pair_witness(const Tournament& t, const std::vector<int>& S1,
                                                   const std::vector<int>& S2,
                                                   const std::vector<int>& A1,
                                                   const std::vector<int>& A2, int variant) {
    for (int a : A1)
        for (int x : A2)
            for (int s1 : S1)
                for (int s2 : S2) {
                    bool ok;
                    if (variant == 1)
                        ok = t.arc(x, a) && t.arc(x, s2) && t.arc(a, s1);
                    else
                        ok = t.arc(s1, a) && t.arc(x, a) && t.arc(s2, x);
                    if (ok) return std::vector<int>{a, x, s1, s2};
                }
    return std::nullopt;
}

std::optional<std::vector<int>> fan_witness(const Tournament& t,
                                            const std::vector<std::vector<int>>& S,
                                            const std::vector<int>& A, int variant) {
    size_t m = S.size();
    if (m == 0) return std::nullopt;
    for (int a : A) {
        std::vector<int> picks;
        bool ok = true;
        for (size_t i = 0; i < m && ok; ++i) {
            bool want_a_beats = variant == 3 || (variant == 1 && i + 1 < m) || (variant == 2 && i == 0);
            int found = -1;
            for (int s : S[i]) {
                bool beats = t.arc(a, s);
                if (beats == want_a_beats) { found = s; break; }
            }
            if (found < 0) ok = false; else picks.push_back(found);
        }
        if (ok) {
            picks.push_back(a);
            return picks;
        }
    }
    return std::nullopt;
}

} // namespace ehc
