#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ehc/digraph.hpp"
#include "ehc/families.hpp"
#include "ehc/tournament.hpp"

namespace ehc {

enum class Op { One, Two, Alpha };

Op op_from_name(const std::string& s);

// Fixed block permutations. Segment length must be 7 (ops 1, 2) or 5 (alpha).
std::vector<int> apply_operation(Op op, const std::vector<int>& segment);

// All orderings reachable from theta by applying each block's operation to
// any subset of the blocks. |result| = 2^l, theta included first.
std::vector<Ordering> theta_set(const Ordering& theta,
                                const std::vector<std::pair<std::vector<int>, Op>>& blocks);

// Thirteen-vertex digraph replacing a seven-vertex block: six helper vertices
// added, three pairs left unoriented. Vertex ids are defining-order positions.
struct MutantBetaAsteroid {
    BetaKind kind;
    Digraph d;                                   // 13 vertices, 75 oriented pairs
    std::vector<int> originals;                  // 13-positions of the base block, in base order
    int m, g, x, w, r, y;                        // helper positions
    std::array<std::pair<int, int>, 3> unoriented; // the deleted pairs
    std::array<std::pair<int, int>, 3> extra_backward; // {x,y},{m,r},{g,w} as (later,earlier)
    std::vector<int> leaves;
    std::vector<int> block10, block3;            // consecutive layout chunks
};

MutantBetaAsteroid mutant_beta_asteroid(const BetaKind& kind);

// Case table for recovering a seven-vertex block from a completed mutant:
// each row tests one unoriented pair; the first backward completion picks the
// row. `keep` lists the surviving 13-positions in order; `flipped` tells
// whether the survivors read off in the block operation image (true) or the
// defining ordering (false).
struct BetaExtractionCase {
    std::pair<int, int> test; // (later, earlier): row fires when later->earlier in the host
    std::vector<int> keep;
    bool flipped;
};
std::vector<BetaExtractionCase> beta_extraction_cases(const BetaKind& kind);

// Corresponding digraph of an asterism: every beta-asteroid block replaced by
// its mutant, all arcs touching helper vertices position-forward outside the
// blocks.
struct MutantBlock {
    BetaKind kind;
    std::vector<int> positions13;                // positions in the corresponding digraph
    std::array<std::pair<int, int>, 3> unoriented;
    std::array<std::pair<int, int>, 3> extra_backward;
};

struct CorrespondingDigraph {
    Digraph d;
    Ordering theta_hat;            // identity on the expanded positions
    std::vector<int> base_to_new;  // asterism position -> expanded position
    std::vector<MutantBlock> blocks;
    std::vector<char> leaf;        // per expanded position: leaf of a star or of a mutant block
};

CorrespondingDigraph corresponding_digraph(const FamilySpec& asterism);

// Cyclic ordering of a spider: operation alpha applied to the interior.
// The vertex set then splits into two stars and a triangle.
struct CyclicSpider {
    Ordering ordering;                       // position -> vertex (spider's own labels)
    std::vector<int> star1, star2;           // vertex lists, center first
    std::array<int, 3> triangle;             // transitive ordering (source first)
};
CyclicSpider cyclic_ordering(const SpiderSpec& spec);

struct MutantSpider {
    SpiderSpec spec;
    Digraph d;
    std::vector<std::pair<int, int>> unoriented; // (from,to) of each deleted forward arc
};
MutantSpider mutant_spider(const SpiderSpec& spec);

// Applies mutant_spider to every spider of a clutter (or of the spider part
// of any family instance).
Digraph mutant_clutter(const FamilyInstance& clutter);

// {0,1}-vector machinery: compress merges each maximal run of 1s into a
// single 1 and records the run length.
struct CompressedFlags {
    std::vector<int> w;
    std::map<int, int> delta; // 0-based index into w -> run length
};
CompressedFlags compress_flags(const std::vector<int>& s);
std::vector<int> expand_flags(const CompressedFlags& c);

// Variant used by spider machinery: runs of 1s are merged only when all their
// positions lie in the same block.
CompressedFlags compress_flags_by_block(const std::vector<int>& s, const std::vector<int>& block_of);

// Leaf flag vector of a corresponding digraph under theta_hat.
std::vector<int> leaf_vector(const CorrespondingDigraph& cd);

// For a clutter: 0 exactly at spider centers, compressed per contracting-graph
// blocks. Returns the compressed form used to shape matching structures.
CompressedFlags clutter_weight_vector(const FamilySpec& clutter);

} // namespace ehc
