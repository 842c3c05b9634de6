#pragma once

#include "gapcert/coset_table.hpp"
#include "gapcert/enclosure.hpp"
#include "gapcert/finite_group.hpp"
#include "gapcert/mobius.hpp"
#include "gapcert/words.hpp"

#include <string>
#include <vector>

namespace gapcert::fuchsia {

enum class ElementKind { Identity, Elliptic, Hyperbolic, Parabolic };

struct Classification {
    ElementKind kind = ElementKind::Identity;
    long order = 0;       // elliptic
    Enclosure half_angle; // elliptic: theta in (0, pi/2], trace = +-2cos(theta)
    Enclosure length;     // hyperbolic: 2 arccosh(|tr|/2)
};

/// Exact classification by trace.  Parabolic output signals an element
/// outside the group (the group is cocompact) and is treated as a hard
/// error by every caller.
Classification classify(const Mobius& m, mpfr_prec_t prec = 0);

/// A conjugacy class of the triangle group, elliptic or hyperbolic.
struct GeodesicClass {
    ElementKind kind = ElementKind::Elliptic;
    groupkit::Word word;  // representative in the letters x=1, y=2, z=3
    Mobius rep;

    // elliptic data
    long order = 0;
    Enclosure half_angle;
    FieldElem sin2_theta;    // exact 1 - (tr/2)^2
    int rotation_index = 0;  // j: conjugate to the rotation by 2 pi j / order
    int quotient_class = -1; // conjugacy class of the image in the deck group

    // hyperbolic data
    Enclosure length;
    bool primitive = true;
    int power_of = -1;  // index of the root class when not primitive
    int power_exp = 1;
    FieldElem abs_trace;

    // merge audit: members identified with this class and their conjugators
    struct Merge {
        groupkit::Word member;
        groupkit::Word conjugator;
    };
    std::vector<Merge> merges;
};

/// The elliptic conjugacy classes: the nontrivial powers of x, y and z,
/// pairwise non-conjugate.  Certified by the exact rotation invariant
/// (order, angle index) refined by the conjugacy class of the image in
/// the order-768 deck group, which separates the two pi-rotation classes.
std::vector<GeodesicClass> elliptic_classes(mpfr_prec_t prec = 0);

/// Cached coset table and class data of the order-768 quotient (the deck
/// group of the homology cover of the Bolza surface).
const groupkit::CosetTable& deck_group_table();
const groupkit::FiniteGroupData& deck_group_data();

struct BallElement {
    Mobius m;
    groupkit::Word word;
};

/// All group elements g with cosh d(i, g i) <= cosh_threshold, found by
/// breadth-first search over words with exact displacement pruning.
struct Ball {
    std::vector<BallElement> elems;  // canonical-sign representatives, identity first
    bool closed = false;             // the search exhausted itself under the word cap
    int levels_used = 0;
    mpq_class cosh_threshold;
};

Ball enumerate_ball(const mpq_class& cosh_threshold, int max_word_length);

struct HyperbolicClassList {
    std::vector<GeodesicClass> classes;
    bool complete = false;  // ball closed and displacement-bound arithmetic verified
    double length_bound = 0;
    int word_bound = 0;
    double displacement_bound = 0;  // certified Delta: min displacement of a class rep
    double ball_cosh_threshold = 0;
    double conj_cosh_threshold = 0;
};

/// Complete list of hyperbolic conjugacy classes with translation length
/// <= L (gamma and gamma^-1 listed separately when not conjugate), each
/// flagged primitive or a marked power of an earlier entry.
/// Throws IncompleteEnumeration when the search cannot be certified at the
/// given word-length bound.
HyperbolicClassList hyperbolic_classes_up_to(double L, int word_bound = 60,
                                             mpfr_prec_t prec = 0);

/// Four shipped words in x, y, z generating the Bolza surface group as a
/// normal, torsion-free, index-48 subgroup; machine-verified on every call
/// (surface relator, hyperbolicity, normality, index).
std::vector<groupkit::Word> bolza_generators();

/// The index-48 coset table of the Bolza group inside the triangle group.
groupkit::CosetTable bolza_coset_table();

/// CSV export: kind,word,order_or_length,primitive,trace
std::string classes_to_csv(const std::vector<GeodesicClass>& list,
                           const std::vector<std::string>& gen_names);

} // namespace gapcert::fuchsia
