#pragma once

#include "gapcert/perm.hpp"
#include "gapcert/words.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace gapcert::coverlab {

using groupkit::Word;

/// Letters of the free group F2 = <X, Y> are 1 and 2; surface-group
/// letters are a1=1, b1=2, a2=3, b2=4 (signed for inverses).
inline const std::vector<std::string>& f2_names() {
    static const std::vector<std::string> n = {"X", "Y"};
    return n;
}
inline const std::vector<std::string>& surface_names() {
    static const std::vector<std::string> n = {"a1", "b1", "a2", "b2"};
    return n;
}

/// The epimorphism from the genus-2 surface group to F2 induced by a
/// handlebody attachment: images of a1, b1, a2, b2 as words in X, Y.
struct HandlebodyMap {
    std::array<Word, 4> images;

    /// Meridian choice: a1 -> X, b1 -> e, a2 -> Y, b2 -> e.
    static HandlebodyMap standard();
    static HandlebodyMap from_strings(const std::array<std::string, 4>& images);

    /// Relator kill and abelianized surjectivity (rank-2 image); throws.
    void validate() const;

    /// Image of a surface-group word, freely reduced.
    Word apply(const Word& surface_word) const;
};

/// A uniformly random pair of permutations: a point in Hom(F2, Sym_n).
struct PermRep {
    int n = 1;
    Perm sigma_x, sigma_y;
    std::uint64_t seed = 0;
};

PermRep sample_rep(int n, std::uint64_t seed);
bool rep_transitive(const PermRep& rep);

Perm f2_image(const PermRep& rep, const Word& f2_word);
Perm compose_action(const HandlebodyMap& h, const PermRep& rep, const Word& surface_word);

/// Schreier graph data of the point stabilizer: spanning tree, preferred
/// free generators (one per non-tree edge), and their pants-curve labels.
struct SchreierData {
    int n = 1;
    int k = 2;  // n + 1 for transitive actions
    std::vector<int> tree_parent;         // vertex -> parent (-1 at the root 0)
    std::vector<int> tree_letter;         // signed F2 letter on the parent edge
    struct NonTreeEdge {
        int vertex;  // tail
        int letter;  // 1 = X, 2 = Y
    };
    std::vector<NonTreeEdge> non_tree;    // one per preferred generator
    std::vector<Word> generators;         // preferred generators as F2 words
    std::vector<int> pants_labels;        // dual curve indices 1..k
};

/// BFS spanning tree from vertex 0 with deterministic edge order
/// (X before Y, forward before backward, smaller target first).
/// Throws NotTransitive when the action has more than one orbit.
SchreierData schreier(const PermRep& rep);

/// An element of (Z/2)^k indexing a degree-two cover.
struct TwoCoverVector {
    std::vector<std::uint8_t> bits;

    explicit TwoCoverVector(int k = 0) : bits(k, 0) {}
    int size() const { return static_cast<int>(bits.size()); }
    int weight() const;
};

/// Flip coordinate i (1-based); an involution.
TwoCoverVector switch_move(const TwoCoverVector& v, int i);
int hamming(const TwoCoverVector& a, const TwoCoverVector& b);
/// Connected iff the classifying homomorphism is nontrivial.
bool cover_connected(const TwoCoverVector& v);

/// A conjugacy-class word with its precomputed image under the map to F2.
struct ScreeningClass {
    Word surface_word;
    Word q_image;
};

struct ScreeningReport {
    double length_bound = 0;
    std::vector<int> flagged;  // indices of offending classes
};

/// Flags classes with nontrivial q-image whose permutation image fixes
/// the base point (the short-geodesic obstruction for the sampled cover).
ScreeningReport screen_short_geodesics(const HandlebodyMap& h, const PermRep& rep,
                                       const std::vector<ScreeningClass>& classes,
                                       double length_bound);

/// JSON dump: {n, seed, sigma_X, sigma_Y, transitive, k, screening:{...}}.
std::string rep_to_json(const PermRep& rep, const SchreierData* sd,
                        const ScreeningReport* screening);

} // namespace gapcert::coverlab
