#include "ehc/mutants.hpp"

#include <algorithm>
#include <stdexcept>

namespace ehc {

Op op_from_name(const std::string& s) {
    if (s == "1") return Op::One;
    if (s == "2") return Op::Two;
    if (s == "alpha" || s == "a") return Op::Alpha;
    throw std::invalid_argument("unknown operation: " + s);
}

std::vector<int> apply_operation(Op op, const std::vector<int>& seg) {
    auto pick = [&](std::initializer_list<int> idx) {
        std::vector<int> out;
        for (int i : idx) out.push_back(seg[i - 1]);
        return out;
    };
    switch (op) {
        case Op::One:
            if (seg.size() != 7) throw std::invalid_argument("operation 1: segment length must be 7");
            return pick({3, 1, 5, 2, 4, 6, 7});
        case Op::Two:
            if (seg.size() != 7) throw std::invalid_argument("operation 2: segment length must be 7");
            return pick({1, 2, 4, 6, 3, 7, 5});
        case Op::Alpha:
            if (seg.size() != 5) throw std::invalid_argument("operation alpha: segment length must be 5");
            return pick({4, 1, 3, 5, 2});
    }
    throw std::logic_error("apply_operation");
}

std::vector<Ordering> theta_set(const Ordering& theta,
                                const std::vector<std::pair<std::vector<int>, Op>>& blocks) {
    if (blocks.size() > 20) throw std::invalid_argument("theta_set: too many blocks");
    std::vector<Ordering> out;
    for (std::uint32_t mask = 0; mask < (1u << blocks.size()); ++mask) {
        Ordering o = theta;
        for (size_t b = 0; b < blocks.size(); ++b) {
            if (!((mask >> b) & 1)) continue;
            const auto& pos = blocks[b].first;
            std::vector<int> seg;
            for (int p : pos) seg.push_back(o.at(p));
            seg = apply_operation(blocks[b].second, seg);
            for (size_t i = 0; i < pos.size(); ++i) o[pos[i]] = seg[i];
        }
        out.push_back(std::move(o));
    }
    return out;
}

// --- mutant beta-asteroids ---------------------------------------------------

namespace {

struct MutantLayout {
    std::vector<int> originals; // 13-positions of base positions 0..6
    int m, g, x, w, r, y;
    std::array<std::pair<int, int>, 3> unoriented; // (earlier, later) position pairs
    std::vector<int> leaves;
    std::vector<int> block10, block3;
};

MutantLayout layout_for(const BetaKind& k) {
    MutantLayout L;
    if (k.side == BetaSide::Left) {
        L.m = 0; L.g = 1; L.x = 2; L.w = 4; L.r = 8;
        if (k.variant == 1) {
            L.originals = {3, 5, 6, 7, 9, 11, 12};
            L.y = 10;
            L.unoriented = {{{6, 11}, {5, 12}, {7, 9}}};
            L.block3 = {10, 11, 12};
        } else {
            L.originals = {3, 5, 6, 7, 9, 10, 11};
            L.y = 12;
            L.unoriented = {{{6, 11}, {5, 10}, {7, 9}}};
            L.block3 = {10, 11, 12};
        }
        L.block10 = {0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
        L.leaves = {2, 4, 5, 6, 7, 8, 11};
    } else {
        L.r = 4; L.w = 8; L.x = 10; L.g = 11; L.m = 12;
        if (k.variant == 1) {
            L.originals = {0, 1, 3, 5, 6, 7, 9};
            L.y = 2;
            L.unoriented = {{{1, 6}, {0, 7}, {3, 5}}};
        } else {
            L.originals = {1, 2, 3, 5, 6, 7, 9};
            L.y = 0;
            L.unoriented = {{{1, 6}, {2, 7}, {3, 5}}};
        }
        L.block3 = {0, 1, 2};
        L.block10 = {3, 4, 5, 6, 7, 8, 9, 10, 11, 12};
        L.leaves = {1, 4, 5, 6, 7, 8, 10};
    }
    return L;
}

} // namespace

MutantBetaAsteroid mutant_beta_asteroid(const BetaKind& kind) {
    MutantLayout L = layout_for(kind);
    MutantBetaAsteroid out;
    out.kind = kind;
    out.originals = L.originals;
    out.m = L.m; out.g = L.g; out.x = L.x; out.w = L.w; out.r = L.r; out.y = L.y;
    out.leaves = L.leaves;
    out.block10 = L.block10;
    out.block3 = L.block3;

    Digraph d = Digraph::all_forward(13);
    // base block arcs
    Tournament base = build_beta_asteroid(kind).first;
    for (int a = 0; a < 7; ++a)
        for (int b = 0; b < 7; ++b)
            if (a != b && base.arc(a, b)) d.set_arc(L.originals[a], L.originals[b]);
    // helper backward arcs
    d.set_arc(std::max(L.y, L.x), std::min(L.y, L.x));
    d.set_arc(std::max(L.r, L.m), std::min(L.r, L.m));
    d.set_arc(std::max(L.w, L.g), std::min(L.w, L.g));
    out.extra_backward = {{{std::max(L.y, L.x), std::min(L.y, L.x)},
                           {std::max(L.r, L.m), std::min(L.r, L.m)},
                           {std::max(L.w, L.g), std::min(L.w, L.g)}}};
    // deleted pairs
    for (size_t i = 0; i < 3; ++i) {
        auto [a, b] = L.unoriented[i];
        d.unorient(a, b);
        out.unoriented[i] = {a, b};
    }
    out.d = d;
    return out;
}

std::vector<BetaExtractionCase> beta_extraction_cases(const BetaKind& kind) {
    // Rows keyed by 13-position letters of the copy, in defining order.
    // Tests fire on a backward completion of the matching unoriented pair;
    // the final row keeps the base block with all pairs forward.
    if (kind.side == BetaSide::Left && kind.variant == 1)
        return {
            {{11, 6}, {1, 2, 3, 4, 6, 10, 11}, true},
            {{9, 7}, {0, 2, 7, 8, 9, 10, 12}, true},
            {{12, 5}, {0, 2, 5, 8, 9, 10, 12}, true},
            {{-1, -1}, {3, 5, 6, 7, 9, 11, 12}, false},
        };
    if (kind.side == BetaSide::Left && kind.variant == 2)
        return {
            {{11, 6}, {1, 2, 3, 4, 6, 11, 12}, true},
            {{9, 7}, {0, 2, 7, 8, 9, 10, 12}, true},
            {{10, 5}, {0, 2, 5, 8, 9, 10, 12}, true},
            {{-1, -1}, {3, 5, 6, 7, 9, 10, 11}, false},
        };
    if (kind.side == BetaSide::Right && kind.variant == 1)
        return {
            {{6, 1}, {1, 2, 6, 8, 9, 10, 11}, true},
            {{5, 3}, {0, 2, 3, 4, 5, 10, 12}, true},
            {{7, 0}, {0, 2, 3, 4, 7, 10, 12}, true},
            {{-1, -1}, {0, 1, 3, 5, 6, 7, 9}, false},
        };
    if (kind.side == BetaSide::Right && kind.variant == 2)
        return {
            {{6, 1}, {0, 1, 6, 8, 9, 10, 11}, true},
            {{5, 3}, {0, 2, 3, 4, 5, 10, 12}, true},
            {{7, 2}, {0, 2, 3, 4, 7, 10, 12}, true},
            {{-1, -1}, {1, 2, 3, 5, 6, 7, 9}, false},
        };
    throw std::invalid_argument("beta_extraction_cases: bad kind");
}

// --- corresponding digraph ---------------------------------------------------

CorrespondingDigraph corresponding_digraph(const FamilySpec& asterism) {
    if (asterism.family != Family::Asterism)
        throw std::invalid_argument("corresponding_digraph: asterism spec required");
    FamilyInstance H = build_family(asterism);
    for (const auto& c : asterism.components)
        if (c.kind == Component::Kind::Singleton)
            throw std::invalid_argument("corresponding_digraph: regular asterism required (no singletons)");

    // Expanded position layout: walk original positions in order and splice
    // the six helpers of each block around their anchor vertices.
    struct Insert { int anchor; bool before; int tag; }; // tag: index into block helper list
    int n = asterism.n;
    std::vector<std::vector<std::pair<bool, int>>> before_at(n), after_at(n); // (is_helper, helper_uid)

    struct HelperRef { size_t block; int which; }; // which: 0=m,1=g,2=x,3=w,4=r,5=y
    std::vector<HelperRef> helpers;

    std::vector<const Component*> betas;
    for (const auto& c : asterism.components)
        if (c.kind == Component::Kind::BetaAsteroid) betas.push_back(&c);

    auto add_helper = [&](size_t block, int which, int anchor, bool before) {
        int uid = (int)helpers.size();
        helpers.push_back({block, which});
        if (before)
            before_at[anchor].push_back({true, uid});
        else
            after_at[anchor].push_back({true, uid});
    };

    for (size_t b = 0; b < betas.size(); ++b) {
        const auto& pos = betas[b]->positions;
        const auto side = betas[b]->beta.side;
        const int variant = betas[b]->beta.variant;
        if (side == BetaSide::Left) {
            int vs = pos[0], vs3 = pos[3];
            add_helper(b, 0, vs, true);  // m before g before x before v_s: emitted in list order
            add_helper(b, 1, vs, true);
            add_helper(b, 2, vs, true);
            add_helper(b, 3, vs, false); // w just after v_s
            add_helper(b, 4, vs3, false); // r just after v_{s+3}
            if (variant == 1)
                add_helper(b, 5, pos[5], true); // y just before the first tail vertex
            else
                add_helper(b, 5, pos[6], false); // y just after the last tail vertex
        } else {
            int vs = pos[2], vs3 = pos[5], vs4 = pos[6];
            add_helper(b, 4, vs, false);   // r just after v_s
            add_helper(b, 3, vs3, false);  // w just after v_{s+3}
            add_helper(b, 2, vs4, false);  // x just after v_{s+4}
            add_helper(b, 1, vs4, false);  // g just after x
            add_helper(b, 0, vs4, false);  // m just after g
            if (variant == 1)
                add_helper(b, 5, pos[1], false); // y just after the tail pair
            else
                add_helper(b, 5, pos[0], true);  // y just before the tail pair
        }
    }

    CorrespondingDigraph cd;
    cd.base_to_new.assign(n, -1);
    std::vector<std::pair<bool, int>> layout; // (is_helper, id): id = base position or helper uid
    for (int p = 0; p < n; ++p) {
        for (auto e : before_at[p]) layout.push_back(e);
        layout.push_back({false, p});
        for (auto e : after_at[p]) layout.push_back(e);
    }
    int N = (int)layout.size();
    std::vector<int> helper_pos(helpers.size(), -1);
    for (int q = 0; q < N; ++q) {
        auto [is_helper, id] = layout[q];
        if (is_helper)
            helper_pos[id] = q;
        else
            cd.base_to_new[id] = q;
    }

    // assemble blocks
    cd.blocks.resize(betas.size());
    std::vector<std::vector<int>> block13(betas.size());
    for (size_t b = 0; b < betas.size(); ++b) {
        MutantBetaAsteroid mu = mutant_beta_asteroid(betas[b]->beta);
        std::vector<int> map13(13, -1); // mutant position -> expanded position
        for (int i = 0; i < 7; ++i) map13[mu.originals[i]] = cd.base_to_new[betas[b]->positions[i]];
        for (size_t h = 0; h < helpers.size(); ++h) {
            if (helpers[h].block != b) continue;
            int mupos = helpers[h].which == 0 ? mu.m
                      : helpers[h].which == 1 ? mu.g
                      : helpers[h].which == 2 ? mu.x
                      : helpers[h].which == 3 ? mu.w
                      : helpers[h].which == 4 ? mu.r : mu.y;
            map13[mupos] = helper_pos[h];
        }
        cd.blocks[b].kind = betas[b]->beta;
        cd.blocks[b].positions13 = map13;
        for (int i = 0; i < 3; ++i) {
            auto [a, c2] = mu.unoriented[i];
            cd.blocks[b].unoriented[i] = {map13[a], map13[c2]};
            auto [e1, e2] = mu.extra_backward[i];
            cd.blocks[b].extra_backward[i] = {map13[e1], map13[e2]};
        }
        block13[b] = map13;
    }

    // arcs
    Digraph d = Digraph::all_forward(N);
    std::vector<int> block_of(N, -1);
    for (size_t b = 0; b < betas.size(); ++b)
        for (int q : block13[b]) block_of[q] = (int)b;
    // original pairs inherit the asterism's arcs
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
            if (p != q && H.t.arc(p, q)) d.set_arc(cd.base_to_new[p], cd.base_to_new[q]);
    // in-block pairs follow the mutant
    for (size_t b = 0; b < betas.size(); ++b) {
        MutantBetaAsteroid mu = mutant_beta_asteroid(betas[b]->beta);
        for (int i = 0; i < 13; ++i)
            for (int j = i + 1; j < 13; ++j) {
                int pi = block13[b][i], pj = block13[b][j];
                if (mu.d.arc(i, j)) d.set_arc(pi, pj);
                else if (mu.d.arc(j, i)) d.set_arc(pj, pi);
                else d.unorient(pi, pj);
            }
    }
    cd.d = d;
    cd.theta_hat.resize(N);
    for (int q = 0; q < N; ++q) cd.theta_hat[q] = q;

    // leaf flags: leaves of stars + leaves of mutant blocks
    cd.leaf.assign(N, 0);
    for (const auto& c : asterism.components) {
        if (c.kind != Component::Kind::Star) continue;
        ComponentRoles r = component_roles(c);
        for (int p : r.leaves) cd.leaf[cd.base_to_new[p]] = 1;
    }
    for (size_t b = 0; b < betas.size(); ++b) {
        MutantBetaAsteroid mu = mutant_beta_asteroid(betas[b]->beta);
        for (int i : mu.leaves) cd.leaf[block13[b][i]] = 1;
    }
    return cd;
}

// --- spiders ------------------------------------------------------------------

CyclicSpider cyclic_ordering(const SpiderSpec& spec) {
    SpiderInstance sp = build_spider(spec);
    CyclicSpider out;
    out.ordering.resize(spec.n);
    for (int i = 0; i < spec.n; ++i) out.ordering[i] = i;
    int ilo = sp.interior.front();
    std::vector<int> seg(sp.interior.begin(), sp.interior.end());
    seg = apply_operation(Op::Alpha, seg);
    for (int i = 0; i < 5; ++i) out.ordering[ilo + i] = seg[i];

    // decomposition: two stars (center first) and the petal triangle
    int c1 = sp.centers[0], c2 = sp.centers[1];
    out.star1 = {c1};
    out.star2 = {c2};
    for (auto [leg, ctr] : sp.leg_center)
        (ctr == c1 ? out.star1 : out.star2).push_back(leg);
    out.triangle = {sp.petals[0], sp.petals[1], sp.petals[2]};
    return out;
}

MutantSpider mutant_spider(const SpiderSpec& spec) {
    MutantSpider out;
    out.spec = spec;
    SpiderInstance sp = build_spider(spec);
    Digraph d = Digraph::from_tournament(sp.t);
    if (spec.side == SpiderSide::Middle) {
        for (int i = 0; i < spec.m; ++i) out.unoriented.emplace_back(i, spec.m + 3);
        for (int i = spec.m + 5; i < spec.n; ++i) out.unoriented.emplace_back(spec.m + 1, i);
    } else if (spec.side == SpiderSide::Right) {
        for (int i : spec.x1) out.unoriented.emplace_back(i, spec.n - 4);
        for (int i : spec.x2) out.unoriented.emplace_back(i, spec.n - 2);
    } else {
        for (int i : spec.x1) out.unoriented.emplace_back(1, i);
        for (int i : spec.x2) out.unoriented.emplace_back(3, i);
    }
    for (auto [a, b] : out.unoriented) {
        if (!sp.t.arc(a, b)) throw std::logic_error("mutant_spider: deleted arc not present");
        d.unorient(a, b);
    }
    out.d = d;
    return out;
}

Digraph mutant_clutter(const FamilyInstance& clutter) {
    Digraph d = Digraph::from_tournament(clutter.t);
    for (const auto& c : clutter.spec.components) {
        if (c.kind != Component::Kind::Spider) continue;
        MutantSpider ms = mutant_spider(c.spider);
        for (auto [a, b] : ms.unoriented) d.unorient(c.positions[a], c.positions[b]);
    }
    return d;
}

// --- flag vectors ---------------------------------------------------------------

CompressedFlags compress_flags(const std::vector<int>& s) {
    std::vector<int> block(s.size(), 0);
    return compress_flags_by_block(s, block);
}

CompressedFlags compress_flags_by_block(const std::vector<int>& s, const std::vector<int>& block_of) {
    if (block_of.size() != s.size())
        throw std::invalid_argument("compress_flags_by_block: size mismatch");
    CompressedFlags out;
    size_t i = 0;
    while (i < s.size()) {
        if (s[i] == 0) {
            out.w.push_back(0);
            ++i;
            continue;
        }
        size_t j = i;
        while (j + 1 < s.size() && s[j + 1] == 1 && block_of[j + 1] == block_of[i]) ++j;
        out.delta[(int)out.w.size()] = (int)(j - i + 1);
        out.w.push_back(1);
        i = j + 1;
    }
    return out;
}

std::vector<int> expand_flags(const CompressedFlags& c) {
    std::vector<int> s;
    for (size_t i = 0; i < c.w.size(); ++i) {
        if (c.w[i] == 0) {
            s.push_back(0);
        } else {
            auto it = c.delta.find((int)i);
            if (it == c.delta.end()) throw std::invalid_argument("expand_flags: missing delta entry");
            for (int k = 0; k < it->second; ++k) s.push_back(1);
        }
    }
    return s;
}

std::vector<int> leaf_vector(const CorrespondingDigraph& cd) {
    std::vector<int> s(cd.leaf.size());
    for (size_t i = 0; i < s.size(); ++i) s[i] = cd.leaf[i] ? 1 : 0;
    return s;
}

CompressedFlags clutter_weight_vector(const FamilySpec& clutter) {
    std::vector<int> s(clutter.n, 1);
    std::vector<int> block_of(clutter.n, -1);
    for (const auto& c : clutter.components) {
        ComponentRoles r = component_roles(c);
        for (int p : r.centers) s[p] = 0;
    }
    ContractingGraph cg = contracting_graph(clutter);
    for (size_t b = 0; b < cg.blocks.size(); ++b)
        for (int p : cg.blocks[b]) block_of[p] = (int)b;
    return compress_flags_by_block(s, block_of);
}

} // namespace ehc
