#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <set>

#include "ehc/mutants.hpp"
#include "ehc/rng.hpp"
#include "ehc/transitive.hpp"
#include "support/random_specs.hpp"

using namespace ehc;

namespace {

std::vector<int> seq(int lo, int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), lo);
    return v;
}

Component beta_at(BetaSide side, int variant, std::vector<int> pos) {
    Component c;
    c.kind = Component::Kind::BetaAsteroid;
    c.beta = {side, variant};
    c.positions = std::move(pos);
    return c;
}

Component star_at(StarSide side, std::vector<int> pos) {
    Component c;
    c.kind = Component::Kind::Star;
    c.star.side = side;
    c.star.n = (int)pos.size();
    c.positions = std::move(pos);
    return c;
}

std::set<std::pair<int, int>> undirected(const std::vector<std::pair<int, int>>& arcs) {
    std::set<std::pair<int, int>> out;
    for (auto [u, v] : arcs) out.insert({std::min(u, v), std::max(u, v)});
    return out;
}

} // namespace

TEST_CASE("block operations") {
    std::vector<int> v7{1, 2, 3, 4, 5, 6, 7};
    CHECK(apply_operation(Op::One, v7) == std::vector<int>{3, 1, 5, 2, 4, 6, 7});
    CHECK(apply_operation(Op::Two, v7) == std::vector<int>{1, 2, 4, 6, 3, 7, 5});
    std::vector<int> v5{1, 2, 3, 4, 5};
    CHECK(apply_operation(Op::Alpha, v5) == std::vector<int>{4, 1, 3, 5, 2});
    CHECK_THROWS(apply_operation(Op::One, v5));
    CHECK_THROWS(apply_operation(Op::Alpha, v7));
    // permutations of the input
    auto o1 = apply_operation(Op::One, v7);
    CHECK(std::set<int>(o1.begin(), o1.end()) == std::set<int>(v7.begin(), v7.end()));
}

TEST_CASE("theta sets") {
    Ordering theta = seq(0, 14);
    std::vector<std::pair<std::vector<int>, Op>> blocks = {
        {{0, 1, 2, 3, 4, 5, 6}, Op::One}, {{7, 8, 9, 10, 11, 12, 13}, Op::Two}};
    auto thetas = theta_set(theta, blocks);
    CHECK(thetas.size() == 4);
    CHECK(thetas[0] == theta);
    std::set<Ordering> dedup(thetas.begin(), thetas.end());
    CHECK(dedup.size() == 4);
    // fixed outside the blocks
    auto one = theta_set(seq(0, 9), {{{1, 2, 3, 4, 5, 6, 7}, Op::One}});
    CHECK(one.size() == 2);
    for (const auto& o : one) {
        CHECK(o[0] == 0);
        CHECK(o[8] == 8);
    }
}

TEST_CASE("theta set with no blocks is the singleton") {
    auto thetas = theta_set(seq(0, 5), {});
    REQUIRE(thetas.size() == 1);
    CHECK(thetas[0] == seq(0, 5));
}

TEST_CASE("dgr format round-trips") {
    MutantBetaAsteroid mu = mutant_beta_asteroid({BetaSide::Right, 2});
    Digraph back = Digraph::from_text(mu.d.to_text());
    CHECK(back == mu.d);
    CHECK_THROWS(Digraph::from_text("dgr 3\n1-\n"));
}

TEST_CASE("mutant beta asteroids") {
    for (BetaSide side : {BetaSide::Left, BetaSide::Right})
        for (int variant : {1, 2}) {
            MutantBetaAsteroid mu = mutant_beta_asteroid({side, variant});
            CHECK(mu.d.size() == 13);
            CHECK(mu.d.oriented_pair_count() == 75);
            CHECK(mu.d.unoriented_pairs().size() == 3);
            CHECK(mu.leaves.size() == 7);
            std::vector<int> expect_leaves = side == BetaSide::Left
                                                 ? std::vector<int>{2, 4, 5, 6, 7, 8, 11}
                                                 : std::vector<int>{1, 4, 5, 6, 7, 8, 10};
            CHECK(mu.leaves == expect_leaves);

            // completing every pair forward and dropping the helpers gives
            // back the base tournament
            Tournament full = mu.d.complete_all_forward();
            Tournament base = build_beta_asteroid({side, variant}).first;
            Tournament restricted = full.induced(mu.originals);
            CHECK(restricted == base);

            // backward arcs under the defining ordering: the base block's plus
            // the three helper pairs
            Ordering id13 = seq(0, 13);
            auto mb = undirected(backward_arcs(full, id13));
            std::set<std::pair<int, int>> expect;
            for (auto [u, v] : backward_arcs(base, seq(0, 7)))
                expect.insert({std::min(mu.originals[u], mu.originals[v]),
                               std::max(mu.originals[u], mu.originals[v])});
            for (auto [a, b] : mu.extra_backward) expect.insert({std::min(a, b), std::max(a, b)});
            CHECK(mb == expect);
        }
}

TEST_CASE("corresponding digraph of a lone asteroid") {
    FamilySpec spec;
    spec.family = Family::Asterism;
    spec.n = 7;
    spec.components = {beta_at(BetaSide::Left, 1, seq(0, 7))};
    CorrespondingDigraph cd = corresponding_digraph(spec);
    CHECK(cd.d.size() == 13);
    CHECK(cd.blocks.size() == 1);
    CHECK(cd.d.unoriented_pairs().size() == 3);
}

TEST_CASE("backward edge identity over randomized regular asterisms") {
    SplitMix64 g(20260401);
    for (int rep = 0; rep < 100; ++rep) {
        FamilySpec spec = testgen::random_asterism(g);
        FamilyInstance H = build_family(spec);
        CorrespondingDigraph cd = corresponding_digraph(spec);
        Tournament hh = cd.d.complete_all_forward();
        // B(H-hat) edges, ignoring the unoriented pairs' completions
        std::set<std::pair<int, int>> lhs;
        for (auto [u, v] : backward_arcs(hh, cd.theta_hat))
            if (cd.d.oriented(u, v)) lhs.insert({std::min(u, v), std::max(u, v)});
        std::set<std::pair<int, int>> rhs;
        for (auto [u, v] : backward_arcs(H.t, H.theta))
            rhs.insert({std::min(cd.base_to_new[u], cd.base_to_new[v]),
                        std::max(cd.base_to_new[u], cd.base_to_new[v])});
        for (const auto& blk : cd.blocks)
            for (auto [a, b] : blk.extra_backward) rhs.insert({std::min(a, b), std::max(a, b)});
        CHECK(lhs == rhs);
        // restriction of the corresponding digraph to the original vertices is
        // the asterism minus the deleted pairs
        for (int u = 0; u < spec.n; ++u)
            for (int v = 0; v < spec.n; ++v) {
                if (u == v) continue;
                int uu = cd.base_to_new[u], vv = cd.base_to_new[v];
                if (cd.d.oriented(uu, vv))
                    CHECK(cd.d.arc(uu, vv) == H.t.arc(u, v));
            }
    }
}

TEST_CASE("cyclic ordering decomposes a spider") {
    SpiderSpec mid{SpiderSide::Middle, 7, 1, {}, {}};
    CyclicSpider cy = cyclic_ordering(mid);
    // interior 1..5 maps to (4,1,3,5,2) -> vertices (m+4,m+1,m+3,m+5,m+2)
    CHECK(cy.ordering == std::vector<int>{0, 4, 1, 3, 5, 2, 6});
    CHECK(cy.star1.size() + cy.star2.size() + 3 == 7);
    SpiderInstance sp = build_spider(mid);
    // triangle vertices induce a transitive triple, earliest beaten by both
    auto [a, b, c] = cy.triangle;
    CHECK(sp.t.arc(a, b));
    CHECK(sp.t.arc(b, c));
    CHECK(sp.t.arc(a, c));

    for (SpiderSpec s : {SpiderSpec{SpiderSide::Left, 8, 0, {5, 7}, {6}},
                         SpiderSpec{SpiderSide::Right, 8, 0, {0, 2}, {1}}}) {
        CyclicSpider cs = cyclic_ordering(s);
        std::set<int> all(cs.star1.begin(), cs.star1.end());
        all.insert(cs.star2.begin(), cs.star2.end());
        all.insert(cs.triangle.begin(), cs.triangle.end());
        CHECK((int)all.size() == s.n);
    }
}

TEST_CASE("mutant spiders") {
    MutantSpider m = mutant_spider({SpiderSide::Middle, 7, 1, {}, {}});
    CHECK(m.d.unoriented_pairs().size() == 2);
    MutantSpider r = mutant_spider({SpiderSide::Right, 7, 0, {0}, {1}});
    auto up = r.d.unoriented_pairs();
    CHECK(std::set<std::pair<int, int>>(up.begin(), up.end()) ==
          std::set<std::pair<int, int>>{{0, 3}, {1, 5}});

    FamilySpec clutter;
    clutter.family = Family::Clutter;
    clutter.n = 7;
    Component c;
    c.kind = Component::Kind::Spider;
    c.spider = {SpiderSide::Middle, 7, 1, {}, {}};
    c.positions = seq(0, 7);
    clutter.components = {c};
    Digraph mc = mutant_clutter(build_family(clutter));
    CHECK(mc.unoriented_pairs().size() == 2);

    // clutter with zero spiders: unchanged tournament
    FamilySpec empty;
    empty.family = Family::Clutter;
    empty.n = 0;
    CHECK(mutant_clutter(build_family(empty)).unoriented_pairs().empty());
}

TEST_CASE("flag vector compression") {
    CompressedFlags c = compress_flags({1, 1, 0, 1});
    CHECK(c.w == std::vector<int>{1, 0, 1});
    CHECK(c.delta == std::map<int, int>{{0, 2}, {2, 1}});
    CompressedFlags z = compress_flags({0, 0, 0});
    CHECK(z.w == std::vector<int>{0, 0, 0});
    CHECK(z.delta.empty());
    SplitMix64 g(7);
    for (int rep = 0; rep < 1000; ++rep) {
        std::vector<int> s;
        int len = 1 + (int)g.next_below(12);
        int ones = 0;
        for (int i = 0; i < len; ++i) {
            s.push_back(g.next_bit() ? 1 : 0);
            ones += s.back();
        }
        CompressedFlags cf = compress_flags(s);
        int total = 0;
        for (auto [k, v] : cf.delta) total += v;
        CHECK(total == ones);
        CHECK(expand_flags(cf) == s);
    }
}

TEST_CASE("leaf vector of a corresponding digraph") {
    FamilySpec spec;
    spec.family = Family::Asterism;
    spec.n = 7;
    spec.components = {beta_at(BetaSide::Left, 1, seq(0, 7))};
    CorrespondingDigraph cd = corresponding_digraph(spec);
    std::vector<int> s = leaf_vector(cd);
    CompressedFlags cf = compress_flags(s);
    CHECK(cf.w == std::vector<int>{0, 0, 1, 0, 1, 0, 0, 1, 0});
    CHECK(cf.delta == std::map<int, int>{{2, 1}, {4, 5}, {7, 1}});
}

TEST_CASE("clutter weight vector gives one label class per leg") {
    FamilySpec clutter;
    clutter.family = Family::Clutter;
    clutter.n = 7;
    Component c;
    c.kind = Component::Kind::Spider;
    c.spider = {SpiderSide::Middle, 7, 1, {}, {}};
    c.positions = seq(0, 7);
    clutter.components = {c};
    CompressedFlags cf = clutter_weight_vector(clutter);
    CHECK(cf.w == std::vector<int>{1, 0, 1, 0, 1});
    CHECK(cf.delta == std::map<int, int>{{0, 1}, {2, 3}, {4, 1}});
}
