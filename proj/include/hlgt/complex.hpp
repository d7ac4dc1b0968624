#pragma once

#include <map>
#include <string>
#include <vector>

#include "hlgt/group.hpp"

namespace hlgt {

// One signed letter of a path word.  Words are stored in written order and
// evaluate right to left: the last listed step is traversed first, matching
// the composition gamma = e_n ... e_1.
struct Step {
    int edge = 0;
    int sign = +1;

    bool operator==(const Step&) const = default;
};

using PathWord = std::vector<Step>;

// Whiskered, signed face inside a sphere word.  The whisker is a path from
// the face's base vertex to the sphere word's base vertex.
struct FaceTerm {
    PathWord whisker;
    int face = 0;
    int sign = +1;

    bool operator==(const FaceTerm&) const = default;
};

using SphereWord = std::vector<FaceTerm>;

struct EdgeCell {
    int src = 0;
    int dst = 0;

    bool operator==(const EdgeCell&) const = default;
};

struct FaceCell {
    int base = 0;
    PathWord boundary;

    bool operator==(const FaceCell&) const = default;
};

struct BallCell {
    int base = 0;
    SphereWord boundary;

    bool operator==(const BallCell&) const = default;
};

// Combinatorial cell complex up to dimension 3 with a connected 1-skeleton.
struct CellComplex {
    int vertices = 0;
    std::vector<EdgeCell> edges;
    std::vector<FaceCell> faces;
    std::vector<BallCell> balls;

    bool operator==(const CellComplex&) const = default;
};

// Endpoints of a signed step: sign -1 swaps source and target.
int step_src(const CellComplex& x, const Step& s);
int step_dst(const CellComplex& x, const Step& s);

// True iff consecutive endpoints match; empty words are well-formed.
bool word_well_formed(const CellComplex& x, const PathWord& w);
// Start vertex (of the rightmost step); `base` answers for the empty word.
int word_src(const CellComplex& x, const PathWord& w, int base);
int word_dst(const CellComplex& x, const PathWord& w, int base);
bool word_closed_at(const CellComplex& x, const PathWord& w, int base);

PathWord inverse_word(const PathWord& w);
// a . b in written order (b traversed first).
PathWord concat(const PathWord& a, const PathWord& b);
PathWord word_power(const PathWord& w, int sign);

// Removes adjacent cancelling pairs until none remain.  Throws on words
// whose consecutive endpoints do not match.
PathWord free_reduce(const CellComplex& x, const PathWord& w);

// The path boundary of a sphere word: product of whisker . (df)^sign . whisker^-1.
PathWord induced_boundary(const CellComplex& x, const SphereWord& w);

// Reported issue kinds: edge_range, connectivity, face_boundary, whisker,
// ball_boundary; witness holds the offending cell index.
ValidationReport validate_complex(const CellComplex& x);

// Presentation of pi_1 extracted from a spanning tree: one loop generator per
// non-tree edge, one relator (written over the generators) per face.
struct Pi1Presentation {
    int base = 0;
    std::vector<int> tree_edges;
    std::vector<int> generator_edges;         // non-tree edges, ascending
    std::vector<PathWord> generator_loops;    // loop through the tree per generator
    // relators use Step with `edge` meaning generator index
    std::vector<std::vector<Step>> relators;
};

Pi1Presentation maximal_tree(const CellComplex& x, int base);

// Periodic L x L x L cubic lattice; vertex (x,y,z) has index x + L*(y + L*z),
// edge/face in direction/normal d at v has index 3v + d.
CellComplex cubic_lattice(int length);

const std::map<std::string, CellComplex>& builtin_complexes();

}  // namespace hlgt
