#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ehc/tournament.hpp"

namespace ehc {

enum class StarSide { Left, Right, Middle };

struct StarSpec {
    StarSide side = StarSide::Right;
    int n = 2;
    int r = -1; // middle only: 1-based center position, 2 <= r <= n-1
};

enum class BetaSide { Left, Right };

struct BetaKind {
    BetaSide side = BetaSide::Left;
    int variant = 1; // 1 or 2
};

enum class SpiderSide { Left, Middle, Right };

struct SpiderSpec {
    SpiderSide side = SpiderSide::Middle;
    int n = 7;
    int m = 1;               // middle only: legs before the interior
    std::vector<int> x1, x2; // left/right only: partition of the leg indices
                             // (0-based positions within the spider)
};

enum class Family { Galaxy, Asterism, GalaxyWithSpiders, Clutter, Merged };

std::string family_name(Family f);
Family family_from_name(const std::string& s);

struct Component {
    enum class Kind { Star, Singleton, BetaAsteroid, Spider };
    Kind kind = Kind::Singleton;
    StarSpec star;           // Kind::Star
    BetaKind beta;           // Kind::BetaAsteroid
    SpiderSpec spider;       // Kind::Spider (x1/x2 in component-internal leg indices)
    std::vector<int> positions; // sorted global positions under theta
};

// Declarative family instance: components with explicit global position
// lists, so validation is a pure predicate over (T, theta, spec).
struct FamilySpec {
    Family family = Family::Galaxy;
    int n = 0;
    std::vector<Component> components;

    std::string to_json() const;             // deterministic, sorted keys
    static FamilySpec from_json(const std::string& s);
};

// Backward arcs of a component in internal coordinates (index k = k-th
// smallest position). Pairs are (later, earlier).
std::vector<std::pair<int, int>> component_backward_arcs(const Component& c);

struct ComponentRoles {
    std::vector<int> centers;              // global positions
    std::vector<int> leaves;               // stars: global leaf positions
    std::vector<std::pair<int, int>> legs; // spiders: (leg position, its center position)
    std::vector<int> petals;               // spiders
    std::vector<int> interior;             // spiders
    std::vector<int> block5, block2;       // beta-asteroids: the consecutive sub-blocks
    std::vector<int> asteroid_positions;   // beta-asteroids: the 5 positions inducing the core
};

ComponentRoles component_roles(const Component& c);

struct FamilyInstance {
    Tournament t;
    Ordering theta; // identity: vertex i sits at position i
    FamilySpec spec;
};

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> violations;
    void fail(std::string msg) { ok = false; violations.push_back(std::move(msg)); }
};

// --- builders -------------------------------------------------------------

std::pair<Tournament, Ordering> build_star(const StarSpec& spec);
std::pair<Tournament, Ordering> build_asteroid();
std::pair<Tournament, Ordering> build_beta_asteroid(const BetaKind& kind);

struct SpiderInstance {
    Tournament t;
    Ordering theta;
    std::vector<int> legs, interior, petals, centers;
    std::vector<std::pair<int, int>> leg_center; // leg -> attached center
};
SpiderInstance build_spider(const SpiderSpec& spec);

FamilyInstance build_family(const FamilySpec& spec);
FamilyInstance build_galaxy(const FamilySpec& spec);
FamilyInstance build_asterism(const FamilySpec& spec);
FamilyInstance build_galaxy_with_spiders(const FamilySpec& spec);

// Merge an asterism part and a galaxy-with-spiders part into one ordering.
// asterism_slots / gws_slots map each part's positions to global positions.
FamilyInstance merge(const FamilySpec& asterism_part, const FamilySpec& gws_part,
                     const std::vector<int>& asterism_slots, const std::vector<int>& gws_slots);

// --- validation and recognition -------------------------------------------

ValidationReport validate_family(const Tournament& t, const Ordering& theta,
                                 const FamilySpec& spec);

struct ContractingGraph {
    // N-sets: leg sets per spider center, petal sets, star leaf sets.
    std::vector<std::vector<int>> nodes;      // global positions, sorted
    std::vector<std::pair<int, int>> edges;   // node indices
    std::vector<int> node_component;          // node -> component id
    std::vector<std::vector<int>> blocks;     // P_theta(H): M_1 < M_2 < ... pointwise
};

ContractingGraph contracting_graph(const FamilySpec& spec);

std::optional<std::pair<Ordering, FamilySpec>> recognize(const Tournament& t, Family family);

} // namespace ehc
