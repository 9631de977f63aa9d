#include "ehc/families.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include <json.hpp>

namespace ehc {

using nlohmann::json;

std::string family_name(Family f) {
    switch (f) {
        case Family::Galaxy: return "galaxy";
        case Family::Asterism: return "asterism";
        case Family::GalaxyWithSpiders: return "galaxy_with_spiders";
        case Family::Clutter: return "clutter";
        case Family::Merged: return "merged";
    }
    throw std::logic_error("family_name");
}

Family family_from_name(const std::string& s) {
    if (s == "galaxy") return Family::Galaxy;
    if (s == "asterism") return Family::Asterism;
    if (s == "galaxy_with_spiders" || s == "gws") return Family::GalaxyWithSpiders;
    if (s == "clutter") return Family::Clutter;
    if (s == "merged") return Family::Merged;
    throw std::invalid_argument("unknown family: " + s);
}

// --- component patterns ----------------------------------------------------

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

std::vector<std::pair<int, int>> star_backward(const StarSpec& s) {
    require(s.n >= 2, "star: n >= 2 required");
    std::vector<std::pair<int, int>> b;
    if (s.side == StarSide::Left) {
        for (int i = 1; i < s.n; ++i) b.emplace_back(i, 0);
    } else if (s.side == StarSide::Right) {
        for (int i = 0; i < s.n - 1; ++i) b.emplace_back(s.n - 1, i);
    } else {
        require(s.r >= 2 && s.r <= s.n - 1, "middle star: 2 <= r <= n-1 required");
        int c = s.r - 1;
        for (int i = c + 1; i < s.n; ++i) b.emplace_back(i, c);
        for (int i = 0; i < c; ++i) b.emplace_back(c, i);
    }
    return b;
}

// Seven-vertex extensions of the five-vertex core, in defining-ordering
// position coordinates (0-based). Verified as a whole by the orientation
// sweeps: every completion of the matching mutant digraph extracts back to
// one of these patterns.
std::vector<std::pair<int, int>> beta_backward(const BetaKind& k) {
    if (k.side == BetaSide::Left && k.variant == 1)
        return {{2, 0}, {4, 1}, {5, 0}, {6, 3}, {6, 4}};
    if (k.side == BetaSide::Left && k.variant == 2)
        return {{2, 0}, {4, 1}, {5, 3}, {5, 4}, {6, 0}};
    if (k.side == BetaSide::Right && k.variant == 1)
        return {{2, 0}, {3, 0}, {5, 2}, {6, 1}, {6, 4}};
    if (k.side == BetaSide::Right && k.variant == 2)
        return {{2, 1}, {3, 1}, {5, 2}, {6, 0}, {6, 4}};
    throw std::invalid_argument("beta asteroid: variant must be 1 or 2");
}

std::vector<std::pair<int, int>> spider_backward(const SpiderSpec& s) {
    std::vector<std::pair<int, int>> b;
    if (s.side == SpiderSide::Middle) {
        require(s.m >= 1 && s.n >= s.m + 6, "middle spider: legs required on both sides");
        int m = s.m;
        b.emplace_back(m + 3, m);
        b.emplace_back(m + 4, m + 1);
        for (int j = 0; j < m; ++j) b.emplace_back(m, j);
        for (int j = m + 5; j < s.n; ++j) b.emplace_back(j, m + 4);
        return b;
    }
    // left/right: x1/x2 must partition the leg indices
    int lo, hi;
    if (s.side == SpiderSide::Right) { lo = 0; hi = s.n - 6; }
    else { lo = 5; hi = s.n - 1; }
    require(s.n >= 5, "spider: n >= 5 required");
    std::set<int> seen;
    for (int j : s.x1) { require(j >= lo && j <= hi && !seen.count(j), "spider: bad x1"); seen.insert(j); }
    for (int j : s.x2) { require(j >= lo && j <= hi && !seen.count(j), "spider: bad x2"); seen.insert(j); }
    require((int)seen.size() == hi - lo + 1 || (hi < lo && seen.empty()),
            "spider: x1, x2 must partition the legs");
    if (s.side == SpiderSide::Right) {
        b.emplace_back(s.n - 1, s.n - 4);
        b.emplace_back(s.n - 2, s.n - 5);
        for (int j : s.x1) b.emplace_back(s.n - 1, j);
        for (int j : s.x2) b.emplace_back(s.n - 5, j);
    } else {
        b.emplace_back(3, 0);
        b.emplace_back(4, 1);
        for (int j : s.x1) b.emplace_back(j, 4);
        for (int j : s.x2) b.emplace_back(j, 0);
    }
    return b;
}

int component_size(const Component& c) {
    switch (c.kind) {
        case Component::Kind::Star: return c.star.n;
        case Component::Kind::Singleton: return 1;
        case Component::Kind::BetaAsteroid: return 7;
        case Component::Kind::Spider: return c.spider.n;
    }
    throw std::logic_error("component_size");
}

} // namespace

std::vector<std::pair<int, int>> component_backward_arcs(const Component& c) {
    switch (c.kind) {
        case Component::Kind::Star: return star_backward(c.star);
        case Component::Kind::Singleton: return {};
        case Component::Kind::BetaAsteroid: return beta_backward(c.beta);
        case Component::Kind::Spider: return spider_backward(c.spider);
    }
    throw std::logic_error("component_backward_arcs");
}

ComponentRoles component_roles(const Component& c) {
    ComponentRoles r;
    const auto& P = c.positions;
    auto at = [&](int i) { return P.at(i); };
    if (c.kind == Component::Kind::Star) {
        int ci = c.star.side == StarSide::Left ? 0
               : c.star.side == StarSide::Right ? c.star.n - 1 : c.star.r - 1;
        r.centers.push_back(at(ci));
        for (int i = 0; i < c.star.n; ++i)
            if (i != ci) r.leaves.push_back(at(i));
    } else if (c.kind == Component::Kind::BetaAsteroid) {
        if (c.beta.side == BetaSide::Left) {
            for (int i = 0; i < 5; ++i) r.block5.push_back(at(i));
            r.block2 = {at(5), at(6)};
            if (c.beta.variant == 1)
                r.asteroid_positions = {at(1), at(2), at(3), at(4), at(6)};
            else
                r.asteroid_positions = {at(1), at(2), at(3), at(4), at(5)};
        } else {
            r.block2 = {at(0), at(1)};
            for (int i = 2; i < 7; ++i) r.block5.push_back(at(i));
            if (c.beta.variant == 1)
                r.asteroid_positions = {at(0), at(2), at(3), at(4), at(5)};
            else
                r.asteroid_positions = {at(1), at(2), at(3), at(4), at(5)};
        }
    } else if (c.kind == Component::Kind::Spider) {
        const auto& s = c.spider;
        int ilo = s.side == SpiderSide::Middle ? s.m : (s.side == SpiderSide::Right ? s.n - 5 : 0);
        for (int i = ilo; i < ilo + 5; ++i) r.interior.push_back(at(i));
        r.centers = {at(ilo), at(ilo + 4)};
        r.petals = {at(ilo + 1), at(ilo + 2), at(ilo + 3)};
        if (s.side == SpiderSide::Middle) {
            for (int j = 0; j < s.m; ++j) r.legs.emplace_back(at(j), at(s.m));
            for (int j = s.m + 5; j < s.n; ++j) r.legs.emplace_back(at(j), at(s.m + 4));
        } else if (s.side == SpiderSide::Right) {
            for (int j : s.x1) r.legs.emplace_back(at(j), at(s.n - 1));
            for (int j : s.x2) r.legs.emplace_back(at(j), at(s.n - 5));
        } else {
            for (int j : s.x1) r.legs.emplace_back(at(j), at(4));
            for (int j : s.x2) r.legs.emplace_back(at(j), at(0));
        }
        std::sort(r.legs.begin(), r.legs.end());
    }
    return r;
}

// --- JSON -------------------------------------------------------------------

namespace {

json component_to_json(const Component& c) {
    json j;
    j["positions"] = c.positions;
    switch (c.kind) {
        case Component::Kind::Star:
            j["kind"] = "star";
            j["params"]["side"] = c.star.side == StarSide::Left ? "left"
                                 : c.star.side == StarSide::Right ? "right" : "middle";
            if (c.star.side == StarSide::Middle) j["params"]["r"] = c.star.r;
            break;
        case Component::Kind::Singleton:
            j["kind"] = "singleton";
            j["params"] = json::object();
            break;
        case Component::Kind::BetaAsteroid:
            j["kind"] = "beta_asteroid";
            j["params"]["side"] = c.beta.side == BetaSide::Left ? "left" : "right";
            j["params"]["variant"] = c.beta.variant;
            break;
        case Component::Kind::Spider:
            j["kind"] = "spider";
            j["params"]["side"] = c.spider.side == SpiderSide::Left ? "left"
                                 : c.spider.side == SpiderSide::Right ? "right" : "middle";
            if (c.spider.side == SpiderSide::Middle) j["params"]["m"] = c.spider.m;
            else {
                j["params"]["x1"] = c.spider.x1;
                j["params"]["x2"] = c.spider.x2;
            }
            break;
    }
    return j;
}

Component component_from_json(const json& j) {
    Component c;
    std::string kind = j.at("kind");
    c.positions = j.at("positions").get<std::vector<int>>();
    int size = (int)c.positions.size();
    if (kind == "star") {
        c.kind = Component::Kind::Star;
        std::string side = j.at("params").at("side");
        c.star.side = side == "left" ? StarSide::Left : side == "right" ? StarSide::Right : StarSide::Middle;
        c.star.n = size;
        if (c.star.side == StarSide::Middle) c.star.r = j.at("params").at("r");
    } else if (kind == "singleton") {
        c.kind = Component::Kind::Singleton;
    } else if (kind == "beta_asteroid") {
        c.kind = Component::Kind::BetaAsteroid;
        std::string side = j.at("params").at("side");
        c.beta.side = side == "left" ? BetaSide::Left : BetaSide::Right;
        c.beta.variant = j.at("params").at("variant");
    } else if (kind == "spider") {
        c.kind = Component::Kind::Spider;
        std::string side = j.at("params").at("side");
        c.spider.side = side == "left" ? SpiderSide::Left : side == "right" ? SpiderSide::Right : SpiderSide::Middle;
        c.spider.n = size;
        if (c.spider.side == SpiderSide::Middle) c.spider.m = j.at("params").at("m");
        else {
            c.spider.x1 = j.at("params").at("x1").get<std::vector<int>>();
            c.spider.x2 = j.at("params").at("x2").get<std::vector<int>>();
        }
    } else {
        throw std::invalid_argument("unknown component kind: " + kind);
    }
    return c;
}

} // namespace

std::string FamilySpec::to_json() const {
    json j;
    j["family"] = family_name(family);
    j["n"] = n;
    j["components"] = json::array();
    for (const auto& c : components) j["components"].push_back(component_to_json(c));
    return j.dump(2);
}

FamilySpec FamilySpec::from_json(const std::string& s) {
    json j = json::parse(s);
    FamilySpec spec;
    spec.family = family_from_name(j.at("family"));
    spec.n = j.at("n");
    for (const auto& cj : j.at("components")) spec.components.push_back(component_from_json(cj));
    return spec;
}

// --- builders ----------------------------------------------------------------

namespace {

// All-forward tournament with the component's backward arcs written at its
// global positions.
void write_component(Tournament& t, const Component& c) {
    require((int)c.positions.size() == component_size(c), "component: positions/size mismatch");
    for (auto [a, b] : component_backward_arcs(c))
        t.set_arc(c.positions[a], c.positions[b]);
}

Tournament forward_tournament(int n) {
    Tournament t(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) t.set_arc(i, j);
    return t;
}

Ordering identity_ordering(int n) {
    Ordering o(n);
    for (int i = 0; i < n; ++i) o[i] = i;
    return o;
}

} // namespace

std::pair<Tournament, Ordering> build_star(const StarSpec& spec) {
    Tournament t = forward_tournament(spec.n);
    Component c;
    c.kind = Component::Kind::Star;
    c.star = spec;
    c.positions = identity_ordering(spec.n);
    write_component(t, c);
    return {t, identity_ordering(spec.n)};
}

std::pair<Tournament, Ordering> build_asteroid() {
    Tournament t = forward_tournament(5);
    t.set_arc(3, 0);
    t.set_arc(4, 2);
    t.set_arc(4, 3);
    return {t, identity_ordering(5)};
}

std::pair<Tournament, Ordering> build_beta_asteroid(const BetaKind& kind) {
    Tournament t = forward_tournament(7);
    for (auto [a, b] : beta_backward(kind)) t.set_arc(a, b);
    return {t, identity_ordering(7)};
}

SpiderInstance build_spider(const SpiderSpec& spec) {
    SpiderInstance inst;
    inst.t = forward_tournament(spec.n);
    for (auto [a, b] : spider_backward(spec)) inst.t.set_arc(a, b);
    inst.theta = identity_ordering(spec.n);
    Component c;
    c.kind = Component::Kind::Spider;
    c.spider = spec;
    c.positions = identity_ordering(spec.n);
    ComponentRoles r = component_roles(c);
    inst.interior = r.interior;
    inst.petals = r.petals;
    inst.centers = r.centers;
    inst.leg_center = r.legs;
    for (auto [leg, ctr] : r.legs) { (void)ctr; inst.legs.push_back(leg); }
    return inst;
}

FamilyInstance build_family(const FamilySpec& spec) {
    Tournament t = forward_tournament(spec.n);
    for (const auto& c : spec.components) write_component(t, c);
    FamilyInstance inst{t, identity_ordering(spec.n), spec};
    ValidationReport rep = validate_family(inst.t, inst.theta, spec);
    if (!rep.ok) {
        std::string msg = "invalid family spec:";
        for (const auto& v : rep.violations) msg += "\n  " + v;
        throw std::invalid_argument(msg);
    }
    return inst;
}

FamilyInstance build_galaxy(const FamilySpec& spec) {
    require(spec.family == Family::Galaxy, "build_galaxy: spec.family must be galaxy");
    return build_family(spec);
}

FamilyInstance build_asterism(const FamilySpec& spec) {
    require(spec.family == Family::Asterism, "build_asterism: spec.family must be asterism");
    return build_family(spec);
}

FamilyInstance build_galaxy_with_spiders(const FamilySpec& spec) {
    require(spec.family == Family::GalaxyWithSpiders || spec.family == Family::Clutter,
            "build_galaxy_with_spiders: wrong family tag");
    return build_family(spec);
}

FamilyInstance merge(const FamilySpec& asterism_part, const FamilySpec& gws_part,
                     const std::vector<int>& asterism_slots, const std::vector<int>& gws_slots) {
    require((int)asterism_slots.size() == asterism_part.n, "merge: asterism slot map size");
    require((int)gws_slots.size() == gws_part.n, "merge: gws slot map size");
    for (const auto& slots : {asterism_slots, gws_slots})
        for (size_t i = 1; i < slots.size(); ++i)
            require(slots[i - 1] < slots[i], "merge: slot maps must be strictly increasing");
    FamilySpec merged;
    merged.family = Family::Merged;
    merged.n = asterism_part.n + gws_part.n;
    std::vector<char> taken(merged.n, 0);
    auto remap = [&](const FamilySpec& part, const std::vector<int>& slots) {
        for (Component c : part.components) {
            for (int& p : c.positions) {
                require(p >= 0 && p < (int)slots.size(), "merge: position out of part range");
                p = slots[p];
                require(p >= 0 && p < merged.n && !taken[p], "merge: slot collision/out of range");
                taken[p] = 1;
            }
            merged.components.push_back(std::move(c));
        }
    };
    remap(asterism_part, asterism_slots);
    remap(gws_part, gws_slots);
    for (char f : taken) require(f, "merge: slots must cover 0..n-1");
    return build_family(merged);
}

// --- contracting graph -------------------------------------------------------

ContractingGraph contracting_graph(const FamilySpec& spec) {
    ContractingGraph g;
    for (const auto& c : spec.components) {
        ComponentRoles r = component_roles(c);
        if (c.kind == Component::Kind::Spider) {
            std::map<int, std::vector<int>> per_center;
            for (auto [leg, ctr] : r.legs) per_center[ctr].push_back(leg);
            for (auto& [ctr, legs] : per_center) { (void)ctr; g.nodes.push_back(legs); }
            g.nodes.push_back(r.petals);
        } else if (c.kind == Component::Kind::Star) {
            g.nodes.push_back(r.leaves);
        }
    }
    for (auto& node : g.nodes) std::sort(node.begin(), node.end());
    int f = (int)g.nodes.size();
    std::vector<int> parent(f);
    for (int i = 0; i < f; ++i) parent[i] = i;
    auto find = [&](int x) { while (parent[x] != x) x = parent[x] = parent[parent[x]]; return x; };
    auto interleaves = [&](const std::vector<int>& a, const std::vector<int>& b) {
        if (a.empty() || b.empty()) return false;
        for (int v : a)
            if (v > b.front() && v < b.back()) return true;
        return false;
    };
    for (int i = 0; i < f; ++i)
        for (int j = i + 1; j < f; ++j)
            if (interleaves(g.nodes[i], g.nodes[j]) || interleaves(g.nodes[j], g.nodes[i])) {
                g.edges.emplace_back(i, j);
                parent[find(i)] = find(j);
            }
    g.node_component.assign(f, -1);
    std::map<int, int> comp_id;
    for (int i = 0; i < f; ++i) {
        int r = find(i);
        if (!comp_id.count(r)) comp_id[r] = (int)comp_id.size();
        g.node_component[i] = comp_id[r];
    }
    g.blocks.assign(comp_id.size(), {});
    for (int i = 0; i < f; ++i)
        for (int v : g.nodes[i]) g.blocks[g.node_component[i]].push_back(v);
    for (auto& b : g.blocks) std::sort(b.begin(), b.end());
    std::sort(g.blocks.begin(), g.blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return g;
}

// --- validation ---------------------------------------------------------------

namespace {

bool strictly_between(int x, int a, int b) { return std::min(a, b) < x && x < std::max(a, b); }

bool any_in_open_span(const std::vector<int>& pts, int lo, int hi) {
    for (int p : pts)
        if (p > lo && p < hi) return true;
    return false;
}

} // namespace

ValidationReport validate_family(const Tournament& t, const Ordering& theta,
                                 const FamilySpec& spec) {
    ValidationReport rep;
    if (t.size() != spec.n) { rep.fail("size mismatch between tournament and spec"); return rep; }
    if (!is_permutation_of_n(theta, spec.n)) { rep.fail("theta is not a permutation"); return rep; }
    Tournament P = t.position_form(theta);

    // positions partition 0..n-1
    std::vector<int> owner(spec.n, -1);
    for (size_t ci = 0; ci < spec.components.size(); ++ci) {
        const auto& c = spec.components[ci];
        if ((int)c.positions.size() != component_size(c)) {
            rep.fail("component " + std::to_string(ci) + ": position list size mismatch");
            return rep;
        }
        for (size_t i = 0; i < c.positions.size(); ++i) {
            int p = c.positions[i];
            if (p < 0 || p >= spec.n) { rep.fail("component " + std::to_string(ci) + ": position out of range"); return rep; }
            if (i > 0 && c.positions[i] <= c.positions[i - 1]) { rep.fail("component " + std::to_string(ci) + ": positions not strictly increasing"); return rep; }
            if (owner[p] >= 0) { rep.fail("position " + std::to_string(p) + " claimed twice"); return rep; }
            owner[p] = (int)ci;
        }
    }
    for (int p = 0; p < spec.n; ++p)
        if (owner[p] < 0) { rep.fail("position " + std::to_string(p) + " not covered"); return rep; }

    // allowed component kinds per family
    for (size_t ci = 0; ci < spec.components.size(); ++ci) {
        const auto& c = spec.components[ci];
        bool ok = true;
        switch (spec.family) {
            case Family::Galaxy: ok = c.kind == Component::Kind::Star || c.kind == Component::Kind::Singleton; break;
            case Family::Asterism: ok = c.kind != Component::Kind::Spider; break;
            case Family::GalaxyWithSpiders: ok = c.kind != Component::Kind::BetaAsteroid; break;
            case Family::Clutter: ok = c.kind == Component::Kind::Spider; break;
            case Family::Merged: ok = true; break;
        }
        if (!ok) rep.fail("component " + std::to_string(ci) + ": kind not allowed in " + family_name(spec.family));
        if (c.kind == Component::Kind::Star && c.star.side == StarSide::Middle)
            rep.fail("component " + std::to_string(ci) + ": middle stars are not galaxy components");
    }
    if (!rep.ok) return rep;

    // component patterns, in position coordinates
    for (size_t ci = 0; ci < spec.components.size(); ++ci) {
        const auto& c = spec.components[ci];
        std::vector<std::pair<int, int>> back;
        try {
            back = component_backward_arcs(c);
        } catch (const std::exception& e) {
            rep.fail("component " + std::to_string(ci) + ": " + e.what());
            continue;
        }
        std::set<std::pair<int, int>> bset(back.begin(), back.end());
        int sz = component_size(c);
        for (int a = 0; a < sz; ++a)
            for (int b = a + 1; b < sz; ++b) {
                bool expect_backward = bset.count({b, a}) > 0;
                bool actual_backward = P.arc(c.positions[b], c.positions[a]);
                if (expect_backward != actual_backward)
                    rep.fail("component " + std::to_string(ci) + ": arc pattern mismatch at internal pair (" +
                             std::to_string(a) + "," + std::to_string(b) + ")");
            }
    }

    // cross-component arcs forward
    for (int p = 0; p < spec.n; ++p)
        for (int q = p + 1; q < spec.n; ++q)
            if (owner[p] != owner[q] && P.arc(q, p))
                rep.fail("backward arc across components at positions (" + std::to_string(q) + "," +
                         std::to_string(p) + ")");

    // layout constraints
    std::vector<ComponentRoles> roles(spec.components.size());
    for (size_t ci = 0; ci < spec.components.size(); ++ci) roles[ci] = component_roles(spec.components[ci]);

    auto star_leaf_span = [&](size_t ci) -> std::pair<int, int> {
        const auto& lv = roles[ci].leaves;
        return {*std::min_element(lv.begin(), lv.end()), *std::max_element(lv.begin(), lv.end())};
    };

    // galaxy rule: no star center strictly between leaves of another star
    for (size_t a = 0; a < spec.components.size(); ++a) {
        if (spec.components[a].kind != Component::Kind::Star) continue;
        for (size_t b = 0; b < spec.components.size(); ++b) {
            if (a == b || spec.components[b].kind != Component::Kind::Star) continue;
            auto [lo, hi] = star_leaf_span(b);
            for (int c : roles[a].centers)
                if (c > lo && c < hi)
                    rep.fail("star center at position " + std::to_string(c) +
                             " lies between leaves of another star (span " + std::to_string(lo) + ".." +
                             std::to_string(hi) + ")");
        }
    }

    // beta-asteroid block consecutiveness + asterism rule
    for (size_t ci = 0; ci < spec.components.size(); ++ci) {
        const auto& c = spec.components[ci];
        if (c.kind != Component::Kind::BetaAsteroid) continue;
        auto consecutive = [](const std::vector<int>& v) {
            for (size_t i = 1; i < v.size(); ++i)
                if (v[i] != v[i - 1] + 1) return false;
            return true;
        };
        if (!consecutive(roles[ci].block5))
            rep.fail("beta asteroid " + std::to_string(ci) + ": five-vertex block not consecutive");
        if (!consecutive(roles[ci].block2))
            rep.fail("beta asteroid " + std::to_string(ci) + ": two-vertex block not consecutive");
        for (size_t b = 0; b < spec.components.size(); ++b) {
            if (spec.components[b].kind != Component::Kind::Star) continue;
            auto [lo, hi] = star_leaf_span(b);
            if (any_in_open_span(c.positions, lo, hi))
                rep.fail("beta asteroid " + std::to_string(ci) + ": vertex between leaves of a star");
        }
    }

    // spider layout rules
    std::vector<size_t> spiders;
    for (size_t ci = 0; ci < spec.components.size(); ++ci)
        if (spec.components[ci].kind == Component::Kind::Spider) spiders.push_back(ci);

    if (!spiders.empty()) {
        // interior consecutiveness is judged inside the spider/star/singleton
        // part (beta vertices removed), matching how the merged ordering
        // restricts.
        std::vector<int> rank(spec.n, -1);
        {
            int r = 0;
            for (int p = 0; p < spec.n; ++p)
                if (spec.components[owner[p]].kind != Component::Kind::BetaAsteroid) rank[p] = r++;
        }
        for (size_t ci : spiders) {
            const auto& in = roles[ci].interior;
            for (size_t i = 1; i < in.size(); ++i)
                if (rank[in[i]] != rank[in[i - 1]] + 1)
                    rep.fail("spider " + std::to_string(ci) + ": interior vertices not consecutive");
        }
        // spiders wholly ordered
        for (size_t a = 0; a < spiders.size(); ++a)
            for (size_t b = a + 1; b < spiders.size(); ++b) {
                const auto& pa = spec.components[spiders[a]].positions;
                const auto& pb = spec.components[spiders[b]].positions;
                if (!(pa.back() < pb.front() || pb.back() < pa.front()))
                    rep.fail("spiders " + std::to_string(spiders[a]) + " and " + std::to_string(spiders[b]) +
                             " are not wholly ordered");
            }
        // no interior vertex between leaves of a star
        for (size_t ci : spiders)
            for (size_t b = 0; b < spec.components.size(); ++b) {
                if (spec.components[b].kind != Component::Kind::Star) continue;
                auto [lo, hi] = star_leaf_span(b);
                if (any_in_open_span(roles[ci].interior, lo, hi))
                    rep.fail("spider " + std::to_string(ci) + ": interior vertex between leaves of a star");
            }
        // no star center between legs incident to the same spider center
        for (size_t ci : spiders) {
            std::map<int, std::vector<int>> per_center;
            for (auto [leg, ctr] : roles[ci].legs) per_center[ctr].push_back(leg);
            for (auto& [ctr, legs] : per_center) {
                (void)ctr;
                int lo = *std::min_element(legs.begin(), legs.end());
                int hi = *std::max_element(legs.begin(), legs.end());
                for (size_t b = 0; b < spec.components.size(); ++b) {
                    if (spec.components[b].kind != Component::Kind::Star) continue;
                    for (int sc : roles[b].centers)
                        if (sc > lo && sc < hi)
                            rep.fail("star center at " + std::to_string(sc) +
                                     " between same-center legs of spider " + std::to_string(ci));
                }
                if (spec.family == Family::Merged)
                    for (size_t b = 0; b < spec.components.size(); ++b) {
                        if (spec.components[b].kind != Component::Kind::BetaAsteroid) continue;
                        if (any_in_open_span(spec.components[b].positions, lo, hi))
                            rep.fail("beta asteroid vertex between same-center legs of spider " +
                                     std::to_string(ci));
                    }
            }
        }
        // block rule: legs of distinct spiders share a block only when nothing
        // relevant separates the attached centers
        ContractingGraph cg = contracting_graph(spec);
        std::vector<int> block_of(spec.n, -1);
        for (size_t bi = 0; bi < cg.blocks.size(); ++bi)
            for (int v : cg.blocks[bi]) block_of[v] = (int)bi;
        for (size_t bi = 1; bi < cg.blocks.size(); ++bi)
            if (cg.blocks[bi - 1].back() > cg.blocks[bi].front())
                rep.fail("contracting graph blocks interleave");
        std::vector<int> star_centers;
        for (size_t b = 0; b < spec.components.size(); ++b)
            if (spec.components[b].kind == Component::Kind::Star)
                star_centers.insert(star_centers.end(), roles[b].centers.begin(), roles[b].centers.end());
        for (size_t a = 0; a < spiders.size(); ++a)
            for (size_t b = a + 1; b < spiders.size(); ++b)
                for (auto [la, ca] : roles[spiders[a]].legs)
                    for (auto [lb, cb] : roles[spiders[b]].legs) {
                        if (block_of[la] < 0 || block_of[la] != block_of[lb]) continue;
                        bool separated = false;
                        for (int sc : star_centers)
                            if (strictly_between(sc, ca, cb)) separated = true;
                        if (spec.family == Family::Merged)
                            for (size_t x = 0; x < spec.components.size(); ++x)
                                if (spec.components[x].kind == Component::Kind::BetaAsteroid)
                                    for (int p : spec.components[x].positions)
                                        if (strictly_between(p, ca, cb)) separated = true;
                        if (separated)
                            rep.fail("legs at positions " + std::to_string(la) + " and " + std::to_string(lb) +
                                     " of distinct spiders share a block across a separating center");
                    }
    }

    return rep;
}

} // namespace ehc
