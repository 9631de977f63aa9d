#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <set>

#include "ehc/canonical.hpp"
#include "ehc/embedding.hpp"
#include "ehc/families.hpp"
#include "ehc/transitive.hpp"
#include "support/oracles.hpp"

using namespace ehc;

namespace {

std::set<std::pair<int, int>> back_set(const Tournament& t, const Ordering& th) {
    auto v = backward_arcs(t, th);
    return {v.begin(), v.end()};
}

Component star_at(StarSide side, std::vector<int> pos) {
    Component c;
    c.kind = Component::Kind::Star;
    c.star.side = side;
    c.star.n = (int)pos.size();
    c.positions = std::move(pos);
    return c;
}

Component singleton_at(int p) {
    Component c;
    c.kind = Component::Kind::Singleton;
    c.positions = {p};
    return c;
}

Component beta_at(BetaSide side, int variant, std::vector<int> pos) {
    Component c;
    c.kind = Component::Kind::BetaAsteroid;
    c.beta = {side, variant};
    c.positions = std::move(pos);
    return c;
}

Component spider_at(SpiderSide side, std::vector<int> pos, int m = 0, std::vector<int> x1 = {},
                    std::vector<int> x2 = {}) {
    Component c;
    c.kind = Component::Kind::Spider;
    c.spider.side = side;
    c.spider.n = (int)pos.size();
    c.spider.m = m;
    c.spider.x1 = std::move(x1);
    c.spider.x2 = std::move(x2);
    c.positions = std::move(pos);
    return c;
}

std::vector<int> seq(int lo, int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), lo);
    return v;
}

} // namespace

TEST_CASE("stars") {
    auto [r3, th3] = build_star({StarSide::Right, 3});
    CHECK(back_set(r3, th3) == std::set<std::pair<int, int>>{{2, 0}, {2, 1}});
    auto [l2, th2] = build_star({StarSide::Left, 2});
    CHECK(back_set(l2, th2) == std::set<std::pair<int, int>>{{1, 0}});
    auto [m4, th4] = build_star({StarSide::Middle, 4, 2});
    CHECK(back_set(m4, th4) == std::set<std::pair<int, int>>{{2, 1}, {3, 1}, {1, 0}});
    CHECK_THROWS(build_star({StarSide::Middle, 4, 4}));
    CHECK_THROWS(build_star({StarSide::Left, 1}));
}

TEST_CASE("beta asteroids extend the asteroid") {
    auto [core, cth] = build_asteroid();
    for (BetaSide side : {BetaSide::Left, BetaSide::Right})
        for (int variant : {1, 2}) {
            auto [b, th] = build_beta_asteroid({side, variant});
            Component c = beta_at(side, variant, seq(0, 7));
            ComponentRoles roles = component_roles(c);
            Tournament sub = b.induced(roles.asteroid_positions);
            CHECK(is_isomorphic(sub, core));
            CHECK(find_induced_copy(b, core).has_value());
            CHECK(backward_arcs(b, th).size() == 5);
        }
    // the four kinds are pairwise non-isomorphic except possibly across sides
    auto [l1, t1] = build_beta_asteroid({BetaSide::Left, 1});
    auto [l2, t2] = build_beta_asteroid({BetaSide::Left, 2});
    CHECK(!is_isomorphic(l1, l2));
}

TEST_CASE("spiders") {
    SpiderSpec mid{SpiderSide::Middle, 7, 1, {}, {}};
    SpiderInstance m = build_spider(mid);
    CHECK(back_set(m.t, m.theta) ==
          std::set<std::pair<int, int>>{{4, 1}, {5, 2}, {1, 0}, {6, 5}});
    CHECK(m.petals == std::vector<int>{2, 3, 4});
    CHECK(m.centers == std::vector<int>{1, 5});
    CHECK(m.interior == std::vector<int>{1, 2, 3, 4, 5});

    SpiderSpec right{SpiderSide::Right, 6, 0, {0}, {}};
    SpiderInstance r = build_spider(right);
    CHECK(back_set(r.t, r.theta) ==
          std::set<std::pair<int, int>>{{5, 2}, {4, 1}, {5, 0}});

    SpiderSpec left{SpiderSide::Left, 7, 0, {5}, {6}};
    SpiderInstance l = build_spider(left);
    CHECK(back_set(l.t, l.theta) ==
          std::set<std::pair<int, int>>{{3, 0}, {4, 1}, {5, 4}, {6, 0}});

    CHECK_THROWS(build_spider({SpiderSide::Middle, 6, 0, {}, {}}));
    CHECK_THROWS(build_spider({SpiderSide::Right, 7, 0, {0}, {0, 1}}));
}

TEST_CASE("galaxies") {
    FamilySpec one_star;
    one_star.family = Family::Galaxy;
    one_star.n = 3;
    one_star.components = {star_at(StarSide::Right, {0, 1, 2})};
    FamilyInstance g = build_galaxy(one_star);
    CHECK(g.t == build_star({StarSide::Right, 3}).first);

    FamilySpec two;
    two.family = Family::Galaxy;
    two.n = 6;
    two.components = {star_at(StarSide::Right, {0, 1, 2}), star_at(StarSide::Left, {3, 4, 5})};
    CHECK(validate_family(build_galaxy(two).t, build_galaxy(two).theta, two).ok);

    // a center inside another star's leaf span is rejected
    FamilySpec bad;
    bad.family = Family::Galaxy;
    bad.n = 6;
    bad.components = {star_at(StarSide::Right, {0, 2, 4}), star_at(StarSide::Left, {3, 1, 5})};
    // star B = left star with center at position 3, leaves 1,5: center of A at 4 lies between
    CHECK_THROWS(build_galaxy(bad));

    // interleaved leaves without centers inside are fine
    FamilySpec ok;
    ok.family = Family::Galaxy;
    ok.n = 7;
    ok.components = {star_at(StarSide::Right, {0, 2, 6}), star_at(StarSide::Right, {1, 3, 5}),
                     singleton_at(4)};
    CHECK(validate_family(build_galaxy(ok).t, build_galaxy(ok).theta, ok).ok);
}

TEST_CASE("asterisms") {
    FamilySpec lone;
    lone.family = Family::Asterism;
    lone.n = 7;
    lone.components = {beta_at(BetaSide::Left, 1, seq(0, 7))};
    FamilyInstance a = build_asterism(lone);
    CHECK(a.t == build_beta_asteroid({BetaSide::Left, 1}).first);

    FamilySpec with_star;
    with_star.family = Family::Asterism;
    with_star.n = 10;
    with_star.components = {beta_at(BetaSide::Left, 1, seq(0, 7)), star_at(StarSide::Right, {7, 8, 9})};
    CHECK(validate_family(build_asterism(with_star).t, build_asterism(with_star).theta, with_star).ok);

    // star between the two blocks of the asteroid
    FamilySpec nested;
    nested.family = Family::Asterism;
    nested.n = 10;
    nested.components = {beta_at(BetaSide::Left, 1, {0, 1, 2, 3, 4, 8, 9}),
                         star_at(StarSide::Right, {5, 6, 7})};
    CHECK(validate_family(build_asterism(nested).t, build_asterism(nested).theta, nested).ok);

    // asteroid vertex between star leaves: rejected
    FamilySpec bad;
    bad.family = Family::Asterism;
    bad.n = 10;
    bad.components = {beta_at(BetaSide::Left, 1, {0, 1, 2, 3, 4, 6, 7}),
                      star_at(StarSide::Right, {5, 8, 9})};
    CHECK_THROWS(build_asterism(bad));

    // broken block consecutiveness: rejected
    FamilySpec split;
    split.family = Family::Asterism;
    split.n = 8;
    split.components = {beta_at(BetaSide::Left, 1, {0, 1, 2, 3, 5, 6, 7}), singleton_at(4)};
    CHECK_THROWS(build_asterism(split));
}

TEST_CASE("galaxies with spiders") {
    FamilySpec clutter;
    clutter.family = Family::Clutter;
    clutter.n = 7;
    clutter.components = {spider_at(SpiderSide::Middle, seq(0, 7), 1)};
    FamilyInstance k = build_galaxy_with_spiders(clutter);
    CHECK(k.t == build_spider({SpiderSide::Middle, 7, 1, {}, {}}).t);

    // spider legs interleaved with star leaves, star center outside the leg span
    FamilySpec mixed;
    mixed.family = Family::GalaxyWithSpiders;
    mixed.n = 13;
    mixed.components = {spider_at(SpiderSide::Middle, {0, 2, 4, 5, 6, 7, 8, 10}, 2),
                        star_at(StarSide::Right, {1, 3, 12}), singleton_at(9), singleton_at(11)};
    FamilyInstance gws = build_galaxy_with_spiders(mixed);
    CHECK(validate_family(gws.t, gws.theta, mixed).ok);

    // star center between same-center legs: rejected
    FamilySpec bad;
    bad.family = Family::GalaxyWithSpiders;
    bad.n = 12;
    bad.components = {spider_at(SpiderSide::Middle, {0, 2, 3, 4, 5, 6, 7, 9}, 2),
                      star_at(StarSide::Left, {1, 10, 11})};
    CHECK_THROWS(build_galaxy_with_spiders(bad));

    // clutter may not carry stars
    FamilySpec notclutter;
    notclutter.family = Family::Clutter;
    notclutter.n = 10;
    notclutter.components = {spider_at(SpiderSide::Middle, seq(0, 7), 1), star_at(StarSide::Right, {7, 8, 9})};
    CHECK_THROWS(build_family(notclutter));
}

TEST_CASE("galaxy equals galaxy-with-spiders on shared inputs") {
    FamilySpec g;
    g.family = Family::Galaxy;
    g.n = 5;
    g.components = {star_at(StarSide::Right, {0, 1, 2}), singleton_at(3), singleton_at(4)};
    FamilySpec g2 = g;
    g2.family = Family::GalaxyWithSpiders;
    CHECK(build_family(g).t == build_family(g2).t);
}

TEST_CASE("contracting graph and blocks") {
    // spider and star with disjoint spans: edgeless
    FamilySpec disjoint;
    disjoint.family = Family::GalaxyWithSpiders;
    disjoint.n = 10;
    disjoint.components = {spider_at(SpiderSide::Middle, seq(0, 7), 1), star_at(StarSide::Right, {7, 8, 9})};
    ContractingGraph cg = contracting_graph(disjoint);
    CHECK(cg.edges.empty());
    CHECK(cg.nodes.size() == 4); // two leg sets, petals, star leaves
    CHECK(cg.blocks.size() == 4);

    // interleaved star leaves and legs: adjacent nodes collapse into one block
    FamilySpec mixed;
    mixed.family = Family::GalaxyWithSpiders;
    mixed.n = 11;
    mixed.components = {spider_at(SpiderSide::Middle, {0, 2, 3, 4, 5, 6, 8}, 1),
                        star_at(StarSide::Right, {1, 7, 9}), singleton_at(10)};
    ContractingGraph cg2 = contracting_graph(mixed);
    CHECK(!cg2.edges.empty());
    // blocks partition all legs, petals and star leaves; no centers inside
    std::set<int> covered;
    for (const auto& b : cg2.blocks)
        for (int v : b) CHECK(covered.insert(v).second);
    std::set<int> centers;
    for (const auto& c : mixed.components)
        for (int v : component_roles(c).centers) centers.insert(v);
    for (int v : covered) CHECK(!centers.count(v));
}

TEST_CASE("two spiders sharing a block need a clear corridor") {
    // legs of distinct spiders joined into one block through a star's leaf
    // span; no separating center between the attached spider centers: allowed
    FamilySpec two;
    two.family = Family::GalaxyWithSpiders;
    two.n = 22;
    two.components = {spider_at(SpiderSide::Middle, {0, 1, 2, 3, 4, 5, 9}, 1),
                      spider_at(SpiderSide::Middle, {10, 12, 13, 14, 15, 16, 19}, 1),
                      star_at(StarSide::Right, {8, 11, 20}), singleton_at(6), singleton_at(7),
                      singleton_at(17), singleton_at(18), singleton_at(21)};
    FamilyInstance k = build_family(two);
    CHECK(validate_family(k.t, k.theta, two).ok);
    // the connecting block really does hold legs of both spiders
    ContractingGraph cg = contracting_graph(two);
    bool joined = false;
    for (const auto& b : cg.blocks) {
        std::set<int> bs(b.begin(), b.end());
        if (bs.count(9) && bs.count(10)) joined = true;
    }
    CHECK(joined);

    // same layout with a star center inside the corridor: rejected
    FamilySpec blocked = two;
    blocked.components[3] = star_at(StarSide::Left, {6, 21});
    blocked.components.pop_back(); // drop the singleton at 21
    CHECK_THROWS(build_family(blocked));
}

TEST_CASE("merge") {
    FamilySpec ast;
    ast.family = Family::Asterism;
    ast.n = 7;
    ast.components = {beta_at(BetaSide::Left, 1, seq(0, 7))};
    FamilySpec gws;
    gws.family = Family::GalaxyWithSpiders;
    gws.n = 0;
    FamilyInstance merged = merge(ast, gws, seq(0, 7), {});
    CHECK(merged.t == build_beta_asteroid({BetaSide::Left, 1}).first);

    FamilySpec gws2;
    gws2.family = Family::GalaxyWithSpiders;
    gws2.n = 7;
    gws2.components = {spider_at(SpiderSide::Middle, seq(0, 7), 1)};
    FamilySpec empty_ast;
    empty_ast.family = Family::Asterism;
    empty_ast.n = 0;
    FamilyInstance m2 = merge(empty_ast, gws2, {}, seq(0, 7));
    CHECK(m2.t == build_spider({SpiderSide::Middle, 7, 1, {}, {}}).t);

    // side by side
    FamilyInstance m3 = merge(ast, gws2, seq(0, 7), seq(7, 7));
    CHECK(m3.t.size() == 14);
    CHECK(validate_family(m3.t, m3.theta, m3.spec).ok);

    // beta vertex between same-center spider legs: rejected
    FamilySpec gws3;
    gws3.family = Family::GalaxyWithSpiders;
    gws3.n = 8;
    gws3.components = {spider_at(SpiderSide::Middle, seq(0, 8), 1)};
    // the spider's two right legs land at global 6 and 14; the beta block
    // sits between them
    std::vector<int> gws_slots{0, 1, 2, 3, 4, 5, 6, 14};
    std::vector<int> ast_slots{7, 8, 9, 10, 11, 12, 13};
    CHECK_THROWS(merge(ast, gws3, ast_slots, gws_slots));
}

TEST_CASE("builders are deterministic") {
    FamilySpec spec;
    spec.family = Family::Asterism;
    spec.n = 10;
    spec.components = {beta_at(BetaSide::Right, 2, seq(0, 7)), star_at(StarSide::Left, {7, 8, 9})};
    CHECK(build_family(spec).t.to_text() == build_family(spec).t.to_text());
}

TEST_CASE("spec json round-trip") {
    FamilySpec spec;
    spec.family = Family::GalaxyWithSpiders;
    spec.n = 11;
    spec.components = {spider_at(SpiderSide::Right, {0, 1, 2, 3, 4, 5, 6}, 0, {0, 1}, {}),
                       star_at(StarSide::Right, {7, 8, 9}), singleton_at(10)};
    // note: right spider legs are internal indices 0..1
    spec.components[0].spider.x1 = {0};
    spec.components[0].spider.x2 = {1};
    FamilySpec back = FamilySpec::from_json(spec.to_json());
    CHECK(back.to_json() == spec.to_json());
    CHECK(build_family(back).t == build_family(spec).t);
}

TEST_CASE("recognize galaxies") {
    Tournament c3(3);
    c3.set_arc(0, 1);
    c3.set_arc(1, 2);
    c3.set_arc(2, 0);
    auto res = recognize(c3, Family::Galaxy);
    REQUIRE(res.has_value());
    auto [theta, spec] = *res;
    CHECK(validate_family(c3, theta, spec).ok);

    Tournament t4(4);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) t4.set_arc(i, j);
    auto res4 = recognize(t4, Family::Galaxy);
    REQUIRE(res4.has_value());
    CHECK(res4->second.components.size() == 4); // all singletons
}

TEST_CASE("recognize built instances under their own ordering") {
    FamilySpec lone;
    lone.family = Family::Asterism;
    lone.n = 7;
    lone.components = {beta_at(BetaSide::Left, 1, seq(0, 7))};
    FamilyInstance a = build_asterism(lone);
    auto res = recognize(a.t, Family::Asterism);
    REQUIRE(res.has_value());
    CHECK(validate_family(a.t, res->first, res->second).ok);
    // identity is tried first, so the builder's own ordering comes back
    for (int i = 0; i < 7; ++i) CHECK(res->first[i] == i);

    FamilySpec clutter;
    clutter.family = Family::Clutter;
    clutter.n = 7;
    clutter.components = {spider_at(SpiderSide::Middle, seq(0, 7), 1)};
    FamilyInstance k = build_family(clutter);
    auto kres = recognize(k.t, Family::Clutter);
    REQUIRE(kres.has_value());
    CHECK(validate_family(k.t, kres->first, kres->second).ok);

    // a 3-cycle is not a clutter
    Tournament c3(3);
    c3.set_arc(0, 1);
    c3.set_arc(1, 2);
    c3.set_arc(2, 0);
    CHECK(!recognize(c3, Family::Clutter).has_value());
    CHECK_THROWS(recognize(random_tournament(10, 1), Family::Galaxy));
}

TEST_CASE("recognize spiders and merged instances") {
    FamilySpec clutter;
    clutter.family = Family::Clutter;
    clutter.n = 7;
    clutter.components = {spider_at(SpiderSide::Left, seq(0, 7), 0, {5}, {6})};
    FamilyInstance k = build_family(clutter);
    auto res = recognize(k.t, Family::Clutter);
    REQUIRE(res.has_value());
    CHECK(validate_family(k.t, res->first, res->second).ok);

    FamilySpec gws;
    gws.family = Family::GalaxyWithSpiders;
    gws.n = 9;
    gws.components = {spider_at(SpiderSide::Right, seq(0, 7), 0, {0}, {1}),
                      star_at(StarSide::Left, {7, 8})};
    FamilyInstance g = build_family(gws);
    auto gres = recognize(g.t, Family::GalaxyWithSpiders);
    REQUIRE(gres.has_value());
    CHECK(validate_family(g.t, gres->first, gres->second).ok);

    // a lone beta-asteroid is recognized as a merged instance too
    auto [b, th] = build_beta_asteroid({BetaSide::Right, 1});
    auto mres = recognize(b, Family::Merged);
    REQUIRE(mres.has_value());
    CHECK(validate_family(b, mres->first, mres->second).ok);
}

TEST_CASE("every builder output validates against its own spec") {
    std::vector<FamilySpec> specs;
    {
        FamilySpec s;
        s.family = Family::Galaxy;
        s.n = 7;
        s.components = {star_at(StarSide::Left, {0, 3, 5}), star_at(StarSide::Right, {1, 2, 6}),
                        singleton_at(4)};
        specs.push_back(s);
    }
    {
        FamilySpec s;
        s.family = Family::Asterism;
        s.n = 17;
        s.components = {beta_at(BetaSide::Right, 1, seq(0, 7)), beta_at(BetaSide::Left, 2, seq(7, 7)),
                        star_at(StarSide::Right, {14, 15, 16})};
        specs.push_back(s);
    }
    {
        FamilySpec s;
        s.family = Family::GalaxyWithSpiders;
        s.n = 13;
        s.components = {spider_at(SpiderSide::Left, {0, 1, 2, 3, 4, 5, 6}, 0, {5}, {6}),
                        spider_at(SpiderSide::Right, {7, 8, 9, 10, 11, 12}, 0, {0}, {})};
        specs.push_back(s);
    }
    for (const auto& s : specs) {
        FamilyInstance inst = build_family(s);
        CHECK(validate_family(inst.t, inst.theta, s).ok);
    }
}
