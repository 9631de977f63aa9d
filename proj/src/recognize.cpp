#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "ehc/families.hpp"

namespace ehc {

namespace {

// All decomposition work happens in position coordinates: P is the host read
// through a candidate ordering, so theta there is the identity.

struct BEdges {
    std::vector<std::set<int>> adj;
    std::vector<std::pair<int, int>> edges;
};

BEdges backward_edges(const Tournament& P) {
    BEdges b;
    b.adj.assign(P.size(), {});
    for (int p = 0; p < P.size(); ++p)
        for (int q = p + 1; q < P.size(); ++q)
            if (P.arc(q, p)) {
                b.adj[p].insert(q);
                b.adj[q].insert(p);
                b.edges.emplace_back(p, q);
            }
    return b;
}

// Decompose the positions in `free_pos` into stars + singletons by backward
// arc components. Fails if some component is not a star graph centered at an
// extremal position.
bool galaxy_components(const BEdges& B, const std::vector<int>& free_pos,
                       std::vector<Component>& out) {
    std::set<int> freeset(free_pos.begin(), free_pos.end());
    std::set<int> done;
    for (int p : free_pos) {
        if (done.count(p)) continue;
        // connected component of p within free positions
        std::vector<int> comp{p};
        done.insert(p);
        for (size_t i = 0; i < comp.size(); ++i)
            for (int q : B.adj[comp[i]]) {
                if (!freeset.count(q)) return false; // backward edge leaves the galaxy part
                if (!done.count(q)) { done.insert(q); comp.push_back(q); }
            }
        std::sort(comp.begin(), comp.end());
        Component c;
        if (comp.size() == 1) {
            c.kind = Component::Kind::Singleton;
            c.positions = comp;
            out.push_back(c);
            continue;
        }
        auto is_star_center = [&](int ctr) {
            for (int v : comp) {
                if (v == ctr) continue;
                if (!B.adj[ctr].count(v)) return false;
                if (B.adj[v].size() != 1) return false;
            }
            return B.adj[ctr].size() == comp.size() - 1;
        };
        c.kind = Component::Kind::Star;
        c.positions = comp;
        c.star.n = (int)comp.size();
        if (is_star_center(comp.front()))
            c.star.side = StarSide::Left;
        else if (is_star_center(comp.back()))
            c.star.side = StarSide::Right;
        else
            return false;
        out.push_back(c);
    }
    return true;
}

std::vector<BetaKind> all_beta_kinds() {
    return {{BetaSide::Left, 1}, {BetaSide::Left, 2}, {BetaSide::Right, 1}, {BetaSide::Right, 2}};
}

// Candidate beta-asteroid placements: block pair windows whose induced
// pattern matches a kind exactly.
std::vector<Component> beta_candidates(const Tournament& P) {
    std::vector<Component> cands;
    int n = P.size();
    for (const auto& kind : all_beta_kinds()) {
        Tournament pattern = build_beta_asteroid(kind).first;
        for (int a = 0; a + 5 <= n; ++a)
            for (int b = 0; b + 2 <= n; ++b) {
                std::vector<int> pos;
                if (kind.side == BetaSide::Left) {
                    if (b < a + 5) continue;
                    pos = {a, a + 1, a + 2, a + 3, a + 4, b, b + 1};
                } else {
                    if (a < b + 2) continue;
                    pos = {b, b + 1, a, a + 1, a + 2, a + 3, a + 4};
                }
                if (P.induced(pos) == pattern) {
                    Component c;
                    c.kind = Component::Kind::BetaAsteroid;
                    c.beta = kind;
                    c.positions = pos;
                    std::sort(c.positions.begin(), c.positions.end());
                    cands.push_back(c);
                }
            }
    }
    return cands;
}

// Candidate spiders: interior window + legs read off the backward edges at
// the two centers.
std::vector<Component> spider_candidates(const Tournament& P, const BEdges& B) {
    std::vector<Component> cands;
    int n = P.size();
    for (int w = 0; w + 5 <= n; ++w) {
        for (SpiderSide side : {SpiderSide::Middle, SpiderSide::Right, SpiderSide::Left}) {
            int c1 = w, c2 = w + 4; // centers sit at the ends of the interior window
            std::vector<int> x1g, x2g; // global leg positions
            if (side == SpiderSide::Middle) {
                for (int p = 0; p < w; ++p)
                    if (B.adj[c1].count(p)) x1g.push_back(p);
                for (int p = c2 + 1; p < n; ++p)
                    if (B.adj[c2].count(p)) x2g.push_back(p);
                if (x1g.empty() || x2g.empty()) continue;
            } else if (side == SpiderSide::Right) {
                for (int p = 0; p < w; ++p) {
                    if (B.adj[c2].count(p)) x1g.push_back(p);
                    else if (B.adj[c1].count(p)) x2g.push_back(p);
                }
            } else {
                for (int p = c2 + 1; p < n; ++p) {
                    if (B.adj[c2].count(p)) x1g.push_back(p);
                    else if (B.adj[c1].count(p)) x2g.push_back(p);
                }
            }
            Component c;
            c.kind = Component::Kind::Spider;
            c.spider.side = side;
            c.positions = x1g;
            c.positions.insert(c.positions.end(), x2g.begin(), x2g.end());
            for (int p = w; p < w + 5; ++p) c.positions.push_back(p);
            std::sort(c.positions.begin(), c.positions.end());
            c.spider.n = (int)c.positions.size();
            std::map<int, int> internal;
            for (size_t i = 0; i < c.positions.size(); ++i) internal[c.positions[i]] = (int)i;
            if (side == SpiderSide::Middle) {
                c.spider.m = (int)x1g.size();
            } else {
                for (int p : x1g) c.spider.x1.push_back(internal[p]);
                for (int p : x2g) c.spider.x2.push_back(internal[p]);
                std::sort(c.spider.x1.begin(), c.spider.x1.end());
                std::sort(c.spider.x2.begin(), c.spider.x2.end());
            }
            try {
                auto back = component_backward_arcs(c);
                Tournament expect(c.spider.n);
                {
                    std::set<std::pair<int, int>> bs(back.begin(), back.end());
                    for (int a = 0; a < c.spider.n; ++a)
                        for (int b2 = a + 1; b2 < c.spider.n; ++b2)
                            if (bs.count({b2, a})) expect.set_arc(b2, a); else expect.set_arc(a, b2);
                }
                if (P.induced(c.positions) == expect) cands.push_back(c);
            } catch (const std::exception&) {
                // malformed candidate (e.g. middle spider without legs)
            }
        }
    }
    return cands;
}

Ordering identity(int n) {
    Ordering o(n);
    std::iota(o.begin(), o.end(), 0);
    return o;
}

// Choose a disjoint subset of candidates (by inclusion order) covering the
// vertices they claim, then try to close the remainder as a galaxy.
bool assemble(const Tournament& P, const BEdges& B, Family family,
              const std::vector<Component>& cands, size_t idx, std::vector<char>& used,
              std::vector<Component>& chosen, FamilySpec& out) {
    if (idx == cands.size()) {
        std::vector<int> free_pos;
        for (int p = 0; p < P.size(); ++p)
            if (!used[p]) free_pos.push_back(p);
        std::vector<Component> rest;
        if (!galaxy_components(B, free_pos, rest)) return false;
        FamilySpec spec;
        spec.family = family;
        spec.n = P.size();
        spec.components = chosen;
        spec.components.insert(spec.components.end(), rest.begin(), rest.end());
        if (family == Family::Clutter)
            for (const auto& c : spec.components)
                if (c.kind != Component::Kind::Spider) return false;
        if (!validate_family(P, identity(P.size()), spec).ok) return false;
        out = spec;
        return true;
    }
    if (assemble(P, B, family, cands, idx + 1, used, chosen, out)) return true;
    for (int p : cands[idx].positions)
        if (used[p]) return false;
    for (int p : cands[idx].positions) used[p] = 1;
    chosen.push_back(cands[idx]);
    bool ok = assemble(P, B, family, cands, idx + 1, used, chosen, out);
    chosen.pop_back();
    for (int p : cands[idx].positions) used[p] = 0;
    return ok;
}

std::optional<FamilySpec> decompose(const Tournament& P, Family family) {
    BEdges B = backward_edges(P);
    std::vector<Component> cands;
    if (family == Family::Asterism || family == Family::Merged) {
        auto bc = beta_candidates(P);
        cands.insert(cands.end(), bc.begin(), bc.end());
    }
    if (family == Family::GalaxyWithSpiders || family == Family::Clutter || family == Family::Merged) {
        auto sc = spider_candidates(P, B);
        cands.insert(cands.end(), sc.begin(), sc.end());
    }
    std::vector<char> used(P.size(), 0);
    std::vector<Component> chosen;
    FamilySpec out;
    if (assemble(P, B, family, cands, 0, used, chosen, out)) return out;
    return std::nullopt;
}

} // namespace

std::optional<std::pair<Ordering, FamilySpec>> recognize(const Tournament& t, Family family) {
    if (t.size() > 9) throw std::invalid_argument("recognize: n <= 9 required");
    if (t.size() == 0) return std::nullopt;
    Ordering theta(t.size());
    std::iota(theta.begin(), theta.end(), 0);
    do {
        Tournament P = t.position_form(theta);
        auto spec = decompose(P, family);
        if (spec) return std::make_pair(theta, *spec);
    } while (std::next_permutation(theta.begin(), theta.end()));
    return std::nullopt;
}

} // namespace ehc
