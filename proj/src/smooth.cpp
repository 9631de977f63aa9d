#include "ehc/smooth.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "ehc/embedding.hpp"
#include "ehc/transitive.hpp"

namespace ehc {

using nlohmann::json;

std::string SmoothStructure::to_json() const {
    json j;
    j["c"] = c.str();
    j["lambda"] = lambda.str();
    j["w"] = w;
    j["delta"] = json::object();
    for (auto [k, v] : delta) j["delta"][std::to_string(k)] = v;
    j["sets"] = sets;
    j["transitive_orders"] = json::object();
    for (const auto& [k, v] : transitive_orders) j["transitive_orders"][std::to_string(k)] = v;
    return j.dump(2);
}

SmoothStructure SmoothStructure::from_json(const std::string& s) {
    json j = json::parse(s);
    SmoothStructure chi;
    chi.c = Rational::parse(j.at("c").get<std::string>());
    chi.lambda = Rational::parse(j.at("lambda").get<std::string>());
    chi.w = j.at("w").get<std::vector<int>>();
    chi.sets = j.at("sets").get<std::vector<std::vector<int>>>();
    for (auto& [k, v] : j.at("delta").items()) chi.delta[std::stoi(k)] = v.get<int>();
    for (auto& [k, v] : j.at("transitive_orders").items())
        chi.transitive_orders[std::stoi(k)] = v.get<std::vector<int>>();
    return chi;
}

ValidationReport verify_smooth(const Tournament& t, const SmoothStructure& chi) {
    ValidationReport rep;
    if (chi.sets.size() != chi.w.size()) {
        rep.fail("sets/w length mismatch");
        return rep;
    }
    std::set<int> seen;
    for (size_t i = 0; i < chi.sets.size(); ++i) {
        if (chi.sets[i].empty()) rep.fail("set " + std::to_string(i) + " empty");
        for (int v : chi.sets[i]) {
            if (v < 0 || v >= t.size()) { rep.fail("set " + std::to_string(i) + ": vertex out of range"); return rep; }
            if (!seen.insert(v).second) { rep.fail("sets not disjoint at vertex " + std::to_string(v)); return rep; }
        }
    }
    if (!rep.ok) return rep;

    bool need_tr = std::any_of(chi.w.begin(), chi.w.end(), [](int x) { return x == 1; });
    int trT = 0;
    if (need_tr) {
        if (t.size() > 22) { rep.fail("transitive sets require exact tr; host above desk-scale bound"); return rep; }
        trT = tr_size(t);
    }
    long long n = t.size();
    for (size_t i = 0; i < chi.sets.size(); ++i) {
        long long sz = (long long)chi.sets[i].size();
        if (chi.w[i] == 0) {
            // |S_i| >= c*n
            if (Rational(sz) < chi.c * Rational(n))
                rep.fail("linear set " + std::to_string(i) + " too small: |S|=" + std::to_string(sz));
        } else {
            Tournament sub = t.induced(chi.sets[i]);
            if (!is_transitive(sub))
                rep.fail("set " + std::to_string(i) + " flagged transitive but is not");
            if (Rational(sz) < chi.c * Rational(trT))
                rep.fail("transitive set " + std::to_string(i) + " too small: |S|=" + std::to_string(sz));
            auto it = chi.transitive_orders.find((int)i);
            if (it != chi.transitive_orders.end()) {
                const auto& ord = it->second;
                if (ord.size() != chi.sets[i].size())
                    rep.fail("stored transitive order of set " + std::to_string(i) + " has wrong size");
                else
                    for (size_t a = 0; a + 1 < ord.size(); ++a)
                        if (!t.arc(ord[a], ord[a + 1]))
                            rep.fail("stored transitive order of set " + std::to_string(i) + " is not a beats-order");
            }
        }
    }
    // pairwise density conditions, exact
    for (size_t i = 0; i < chi.sets.size(); ++i)
        for (size_t j = i + 1; j < chi.sets.size(); ++j) {
            Rational bound = Rational(1) - chi.lambda;
            for (int v : chi.sets[i])
                if (directed_density(t, {v}, chi.sets[j]) < bound)
                    rep.fail("d({" + std::to_string(v) + "}, S_" + std::to_string(j) + ") < 1-lambda");
            for (int v : chi.sets[j])
                if (directed_density(t, chi.sets[i], {v}) < bound)
                    rep.fail("d(S_" + std::to_string(i) + ", {" + std::to_string(v) + "}) < 1-lambda");
        }
    return rep;
}

BoundCheck subset_density_bound(const Tournament& t, const std::vector<int>& A1,
                                const std::vector<int>& A2, const std::vector<int>& X,
                                const std::vector<int>& Y, const Rational& lambda,
                                const Rational& eta1, const Rational& eta2) {
    std::set<int> a1(A1.begin(), A1.end()), a2(A2.begin(), A2.end());
    for (int v : X)
        if (!a1.count(v)) throw std::invalid_argument("subset_density_bound: X not within A1");
    for (int v : Y)
        if (!a2.count(v)) throw std::invalid_argument("subset_density_bound: Y not within A2");
    if (directed_density(t, A1, A2) < Rational(1) - lambda)
        throw std::invalid_argument("subset_density_bound: d(A1,A2) < 1-lambda");
    if (Rational((long long)X.size()) < eta1 * Rational((long long)A1.size()))
        throw std::invalid_argument("subset_density_bound: |X| < eta1|A1|");
    if (Rational((long long)Y.size()) < eta2 * Rational((long long)A2.size()))
        throw std::invalid_argument("subset_density_bound: |Y| < eta2|A2|");
    BoundCheck out;
    Rational bound = Rational(1) - lambda / (eta1 * eta2);
    Rational d = directed_density(t, X, Y);
    out.margin = d - bound;
    out.ok = d >= bound;
    return out;
}

RestrictionResult common_restriction(const Tournament& t, const SmoothStructure& chi, int j,
                                     const std::vector<int>& S_star, const std::vector<int>& A) {
    if (j < 0 || j >= (int)chi.sets.size()) throw std::invalid_argument("common_restriction: bad set index");
    std::set<int> sj(chi.sets[j].begin(), chi.sets[j].end());
    for (int v : S_star)
        if (!sj.count(v)) throw std::invalid_argument("common_restriction: S* not within S_j");
    std::map<int, int> set_of; // vertex -> chi set index
    for (size_t i = 0; i < chi.sets.size(); ++i)
        for (int v : chi.sets[i]) set_of[v] = (int)i;
    RestrictionResult out;
    out.vertices = S_star;
    for (int x : A) {
        auto it = set_of.find(x);
        if (it == set_of.end() || it->second == j)
            throw std::invalid_argument("common_restriction: A must lie in other sets of chi");
        // x after S_j keeps u -> x; x before S_j keeps x -> u
        bool x_later = it->second > j;
        std::vector<int> next;
        for (int u : out.vertices)
            if (x_later ? t.arc(u, x) : t.arc(x, u)) next.push_back(u);
        out.vertices.swap(next);
    }
    // certified bound: (1 - k*lambda/gamma)|S*|, gamma = |S*|/|S_j|
    if (!S_star.empty()) {
        Rational gamma((long long)S_star.size(), (long long)chi.sets[j].size());
        Rational bound = (Rational(1) - Rational((long long)A.size()) * chi.lambda / gamma) *
                         Rational((long long)S_star.size());
        out.bound = bound;
        out.bound_ok = Rational((long long)out.vertices.size()) >= bound;
    } else {
        out.bound = Rational(0);
        out.bound_ok = true;
    }
    return out;
}

XiLabeling xi_labels(const Tournament& t, const SmoothStructure& chi) {
    XiLabeling xi;
    xi.label.assign(t.size(), 0);
    int next = 1;
    xi.candidates.push_back({}); // label 0 unused
    for (size_t i = 0; i < chi.sets.size(); ++i) {
        if (chi.w[i] == 0) {
            if (chi.delta.count((int)i)) throw std::invalid_argument("xi_labels: delta entry on a linear set");
            xi.candidates.push_back({});
            for (int v : chi.sets[i]) {
                xi.label[v] = next;
                xi.candidates[next].push_back(v);
            }
            ++next;
        } else {
            auto dit = chi.delta.find((int)i);
            if (dit == chi.delta.end()) throw std::invalid_argument("xi_labels: missing delta for transitive set");
            int d = dit->second;
            auto oit = chi.transitive_orders.find((int)i);
            if (oit == chi.transitive_orders.end())
                throw std::invalid_argument("xi_labels: missing transitive order");
            const auto& ord = oit->second;
            int width = (int)ord.size() / d;
            if (width == 0) throw std::invalid_argument("xi_labels: set smaller than its sub-block count");
            for (int b = 0; b < d; ++b) {
                xi.candidates.push_back({});
                for (int k = b * width; k < (b + 1) * width; ++k) {
                    xi.label[ord[k]] = next;
                    xi.candidates[next].push_back(ord[k]);
                }
                ++next;
            }
        }
    }
    xi.max_label = next - 1;
    for (auto& c : xi.candidates) std::sort(c.begin(), c.end());
    return xi;
}

bool is_well_contained(const std::vector<int>& f, const Digraph& pattern, const Tournament& host,
                       const XiLabeling& xi) {
    if ((int)f.size() != pattern.size()) return false;
    if (!embedding_valid(host, pattern, f)) return false;
    for (size_t j = 0; j < f.size(); ++j)
        if (xi.label[f[j]] != (int)j + 1) return false;
    return true;
}

namespace {

struct EmbedSearch {
    const Digraph& pattern;
    const Tournament& host;
    const XiLabeling& xi;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    bool out_of_budget = false;
    std::vector<int> order;  // pattern positions, anchors first
    std::vector<int> f;      // pattern position -> host vertex
    std::vector<char> used_host;

    bool run(size_t depth) {
        if (depth == order.size()) return true;
        int j = order[depth];
        for (int v : xi.candidates[j + 1]) {
            if (used_host[v]) continue;
            if (++nodes > budget) { out_of_budget = true; return false; }
            bool ok = true;
            for (size_t k = 0; k < depth && ok; ++k) {
                int j2 = order[k];
                if (pattern.arc(j, j2) && !host.arc(v, f[j2])) ok = false;
                else if (pattern.arc(j2, j) && !host.arc(f[j2], v)) ok = false;
            }
            if (!ok) continue;
            f[j] = v;
            used_host[v] = 1;
            if (run(depth + 1)) return true;
            used_host[v] = 0;
            f[j] = -1;
            if (out_of_budget) return false;
        }
        return false;
    }
};

} // namespace

EmbedResult find_embedding(const Digraph& pattern, const Tournament& host, const XiLabeling& xi,
                           const std::vector<char>& leaf_flags, std::uint64_t budget) {
    EmbedResult res;
    if (xi.max_label != pattern.size())
        throw std::invalid_argument("find_embedding: structure labels do not match the pattern size");
    EmbedSearch s{pattern, host, xi, budget, 0, false, {}, {}, {}};
    s.order.resize(pattern.size());
    std::iota(s.order.begin(), s.order.end(), 0);
    if ((int)leaf_flags.size() == pattern.size())
        std::stable_sort(s.order.begin(), s.order.end(),
                         [&](int a, int b) { return leaf_flags[a] < leaf_flags[b]; });
    s.f.assign(pattern.size(), -1);
    s.used_host.assign(host.size(), 0);
    bool found = s.run(0);
    res.nodes = s.nodes;
    if (found) res.embedding = s.f;
    res.exhausted = !found && !s.out_of_budget;
    return res;
}

AsterismExtraction extract_asterism(const Tournament& host, const FamilySpec& asterism,
                                    const CorrespondingDigraph& cd, const std::vector<int>& f) {
    if ((int)f.size() != cd.d.size()) throw std::invalid_argument("extract_asterism: embedding size mismatch");
    AsterismExtraction out;

    // Which expanded positions survive, and whether each block flips.
    std::vector<char> keep(cd.d.size(), 1);
    std::vector<const Component*> betas;
    for (const auto& c : asterism.components)
        if (c.kind == Component::Kind::BetaAsteroid) betas.push_back(&c);
    std::vector<char> flip(betas.size(), 0);

    for (size_t b = 0; b < cd.blocks.size(); ++b) {
        const auto& blk = cd.blocks[b];
        for (int q : blk.positions13) keep[q] = 0;
        auto cases = beta_extraction_cases(blk.kind);
        bool fired = false;
        for (const auto& row : cases) {
            bool match;
            if (row.test.first < 0) {
                match = true;
            } else {
                int later = blk.positions13[row.test.first];
                int earlier = blk.positions13[row.test.second];
                match = host.arc(f[later], f[earlier]);
            }
            if (!match) continue;
            for (int i : row.keep) keep[blk.positions13[i]] = 1;
            flip[b] = row.flipped;
            out.case_used.push_back((int)(&row - cases.data()));
            fired = true;
            break;
        }
        if (!fired) throw std::logic_error("extract_asterism: case analysis did not fire");
    }

    // Host vertices of the copy, in expanded-position order.
    std::vector<int> survivors;
    for (int q = 0; q < cd.d.size(); ++q)
        if (keep[q]) survivors.push_back(f[q]);
    out.h_embedding = survivors;

    // The expected ordering of H: apply each flipped block's operation.
    std::vector<std::pair<std::vector<int>, Op>> blocks;
    for (size_t b = 0; b < betas.size(); ++b) {
        if (!flip[b]) continue;
        std::vector<int> pos(betas[b]->positions.begin(), betas[b]->positions.end());
        blocks.push_back({pos, betas[b]->beta.side == BetaSide::Left ? Op::One : Op::Two});
    }
    Ordering theta(asterism.n);
    std::iota(theta.begin(), theta.end(), 0);
    for (auto& [pos, op] : blocks) {
        std::vector<int> seg;
        for (int p : pos) seg.push_back(theta[p]);
        seg = apply_operation(op, seg);
        for (size_t i = 0; i < pos.size(); ++i) theta[pos[i]] = seg[i];
    }
    out.theta_prime = theta;

    // Verify: the survivors, read in order, must realize H under theta'.
    FamilyInstance H = build_family(asterism);
    bool ok = (int)survivors.size() == asterism.n;
    if (ok) {
        std::set<int> dedup(survivors.begin(), survivors.end());
        ok = (int)dedup.size() == asterism.n;
    }
    for (int p = 0; ok && p < asterism.n; ++p)
        for (int q = p + 1; q < asterism.n; ++q) {
            bool want = H.t.arc(theta[p], theta[q]);
            bool got = host.arc(survivors[p], survivors[q]);
            if (want != got) ok = false;
        }
    out.verified = ok;
    return out;
}

SpiderExtraction extract_spider_or_triangle(const Tournament& host, const SpiderSpec& spec,
                                            const std::vector<int>& gamma) {
    if ((int)gamma.size() != spec.n)
        throw std::invalid_argument("extract_spider_or_triangle: copy size mismatch");
    MutantSpider ms = mutant_spider(spec);
    SpiderExtraction out;

    // First backward completion (in deletion order) decides the outcome.
    for (auto [a, b] : ms.unoriented) {
        // deleted arc ran a->b (forward); backward completion means b->a in the host
        if (!host.arc(gamma[b], gamma[a])) continue;
        out.tag = 't';
        int y;
        if (spec.side == SpiderSide::Middle)
            y = (b == spec.m + 3) ? spec.m : spec.m + 4;
        else if (spec.side == SpiderSide::Right)
            y = (b == spec.n - 4) ? spec.n - 1 : spec.n - 5;
        else
            y = (a == 1) ? 4 : 0;
        std::array<int, 3> tri_pos{a, b, y};
        std::sort(tri_pos.begin(), tri_pos.end());
        out.triangle = tri_pos;
        out.vertices = {gamma[tri_pos[0]], gamma[tri_pos[1]], gamma[tri_pos[2]]};
        // triangle under the copy ordering: latest beats middle beats earliest
        out.verified = host.arc(out.vertices[2], out.vertices[1]) &&
                       host.arc(out.vertices[1], out.vertices[0]) &&
                       host.arc(out.vertices[2], out.vertices[0]);
        return out;
    }
    out.tag = 's';
    out.vertices = gamma;
    SpiderInstance sp = build_spider(spec);
    bool ok = true;
    for (int p = 0; p < spec.n && ok; ++p)
        for (int q = p + 1; q < spec.n && ok; ++q)
            if (sp.t.arc(p, q) != host.arc(gamma[p], gamma[q])) ok = false;
    out.verified = ok;
    return out;
}

namespace {

void collect_sets(const Tournament& t, const Rational& c, const Rational& lambda,
                  const std::vector<int>& w, int divisor, size_t idx, std::uint32_t used,
                  std::vector<std::vector<int>>& acc, SmoothSearchResult& out, int trT) {
    if (out.structure) return;
    if (idx == w.size()) {
        SmoothStructure chi;
        chi.sets = acc;
        chi.w = w;
        chi.c = c;
        chi.lambda = lambda;
        for (size_t i = 0; i < w.size(); ++i)
            if (w[i] == 1) {
                chi.delta[(int)i] = 1;
                chi.transitive_orders[(int)i] = transitive_ordering(t.induced(acc[i]));
            }
        out.structure = chi;
        return;
    }
    int n = t.size();
    std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
    std::uint32_t avail = full & ~used;
    // nonempty subsets of avail, in increasing numeric order for determinism
    std::vector<std::uint32_t> subs;
    for (std::uint32_t sub = avail;; sub = (sub - 1) & avail) {
        if (sub) subs.push_back(sub);
        if (!sub) break;
    }
    std::sort(subs.begin(), subs.end());
    for (std::uint32_t sub : subs) {
        int sz = std::popcount(sub);
        if (divisor > 0 && sz % divisor != 0) continue;
        if (w[idx] == 0) {
            if (Rational(sz) < c * Rational(n)) continue;
        } else {
            if (Rational(sz) < c * Rational(trT)) continue;
        }
        std::vector<int> S;
        for (int v = 0; v < n; ++v)
            if ((sub >> v) & 1) S.push_back(v);
        if (w[idx] == 1 && !is_transitive(t.induced(S))) continue;
        ++out.candidates;
        // density w.r.t. earlier sets
        bool ok = true;
        Rational bound = Rational(1) - lambda;
        for (size_t i = 0; i < acc.size() && ok; ++i) {
            for (int v : acc[i])
                if (directed_density(t, {v}, S) < bound) { ok = false; break; }
            for (int v : S) {
                if (!ok) break;
                if (directed_density(t, acc[i], {v}) < bound) ok = false;
            }
        }
        if (!ok) continue;
        acc.push_back(S);
        collect_sets(t, c, lambda, w, divisor, idx + 1, used | sub, acc, out, trT);
        acc.pop_back();
        if (out.structure) return;
    }
}

} // namespace

SmoothSearchResult search_smooth_structure(const Tournament& t, const Rational& c,
                                           const Rational& lambda, const std::vector<int>& w,
                                           int divisor) {
    if (t.size() > 12 || w.size() > 3)
        throw std::invalid_argument("search_smooth_structure: n <= 12 and |w| <= 3 required");
    SmoothSearchResult out;
    int trT = std::any_of(w.begin(), w.end(), [](int x) { return x == 1; }) ? tr_size(t) : 0;
    std::vector<std::vector<int>> acc;
    collect_sets(t, c, lambda, w, divisor, 0, 0, acc, out, trT);
    return out;
}

} // namespace ehc
