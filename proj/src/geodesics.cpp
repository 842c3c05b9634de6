#include "gapcert/geodesics.hpp"

#include "gapcert/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace gapcert::fuchsia {

using groupkit::Word;

namespace {

struct MobiusLess {
    bool operator()(const Mobius& a, const Mobius& b) const { return a.cmp_lex(b) < 0; }
};

struct GenImage {
    Mobius m;
    int letter;
};

const std::vector<GenImage>& generator_images() {
    static const std::vector<GenImage> gens = [] {
        auto [X, Y, Z] = generator_matrices();
        std::vector<GenImage> g;
        g.push_back({X, 1});
        g.push_back({Y, 2});
        g.push_back({Y.inverse(), -2});
        g.push_back({Z, 3});
        g.push_back({Z.inverse(), -3});
        return g;
    }();
    return gens;
}

Mobius word_to_mobius(const Word& w) {
    auto [X, Y, Z] = generator_matrices();
    const Mobius gens[3] = {X, Y, Z};
    Mobius acc;
    for (int letter : w) {
        int idx = std::abs(letter) - 1;
        if (idx < 0 || idx > 2) throw InvalidWord("triangle-group word letter out of range");
        acc = acc * (letter > 0 ? gens[idx] : gens[idx].inverse());
    }
    return acc;
}

// A rational certainly >= the upper end of the enclosure.
mpq_class rational_upper(const Enclosure& e) {
    double d = e.upper_d();
    if (!std::isfinite(d)) throw PrecisionFail("unbounded enclosure in bound arithmetic");
    return mpq_class(d) + mpq_class(1, 1000000);
}

// cos(pi j / m) as an exact field element, for the torsion orders of
// the (2,3,8) group.
FieldElem cos_pi_j_over_m(int j, long m) {
    if (j < 0 || j > m) throw OutOfRange("rotation index out of range");
    if (2 * j > m) return -cos_pi_j_over_m(static_cast<int>(m) - j, m);
    const mpq_class half(1, 2);
    switch (m) {
        case 2:  // j = 1
            return FieldElem(0L);
        case 3:
            return FieldElem(half);  // j = 1
        case 4:
            if (j == 1) return FieldElem::from_coords(-1, 0, half, 0);  // sqrt2/2
            return FieldElem(0L);                                       // j = 2
        case 8:
            if (j == 1) return FieldElem::from_coords(0, half, 0, 0);        // alpha/2
            if (j == 2) return FieldElem::from_coords(-1, 0, half, 0);       // sqrt2/2
            if (j == 3) return FieldElem::from_coords(0, mpq_class(-3, 2), 0, half);
            return FieldElem(0L);  // j = 4
        default:
            throw OutOfRange("unsupported torsion order " + std::to_string(m));
    }
}

long projective_order(const Mobius& q, long cap = 64) {
    Mobius acc = q;
    for (long k = 1; k <= cap; ++k) {
        if (acc.is_identity_projective()) return k;
        acc = acc * q;
    }
    throw VerificationFailed("element order exceeds cap");
}

int rotation_index(const Mobius& q, long m) {
    int sigma = q.lower_left_sign();
    if (sigma == 0) throw VerificationFailed("elliptic element with vanishing lower-left entry");
    FieldElem wc = sigma > 0 ? q.w : -q.w;
    FieldElem target = -wc;
    for (int j = 1; j < m; ++j)
        if (cos_pi_j_over_m(j, m) == target) return j;
    throw VerificationFailed("rotation angle does not match any 2 pi j / m");
}

struct TriangleBounds {
    Enclosure R_F;    // max distance from the base vertex to the fundamental domain
    Enclosure diam;   // diameter of the fundamental domain
};

TriangleBounds triangle_bounds(mpfr_prec_t prec) {
    // Triangle vertices: A (order 2, the base point), B (order 3), C (order 8).
    // Fundamental domain of the rotation group: the triangle doubled across BC.
    Enclosure one(1L, prec), two(2L, prec), three(3L, prec);
    Enclosure alpha = (two + two.sqrt()).sqrt();
    Enclosure sqrt3 = three.sqrt();
    // side AC (A to the order-8 vertex): cosh t = 1 / (2 sin(pi/8)) = alpha*sqrt2/2... use exact
    Enclosure cosh_t = FieldElem::from_coords(0, -1, 0, mpq_class(1, 2)).to_enclosure(prec);
    // alpha*(alpha^2-2)/2 = (alpha^3 - 2 alpha)/2
    Enclosure t = cosh_t.arccosh();
    // side AB: cosh u = cos(pi/8)/sin(pi/3) = alpha / sqrt(3)
    Enclosure u = (alpha / sqrt3).arccosh();
    // side BC: cosh v = cos(pi/3) cos(pi/8) / (sin(pi/3) sin(pi/8))
    //        = alpha / (sqrt3 * sqrt(2 - sqrt2))
    Enclosure sin_pi8_x2 = (two - two.sqrt()).sqrt();  // 2 sin(pi/8)
    Enclosure v = (alpha / (sqrt3 * sin_pi8_x2)).arccosh();
    // A to its mirror image across BC: twice the altitude from A
    Enclosure sinh_alt = (sqrt3 / two) * u.sinh();
    Enclosure alt = (one + sinh_alt * sinh_alt).sqrt().arccosh();
    Enclosure d_mirror = two * alt;
    TriangleBounds b{Enclosure::hull(Enclosure::hull(t, u), d_mirror),
                     Enclosure::hull(Enclosure::hull(Enclosure::hull(t, u), v), d_mirror)};
    return b;
}

} // namespace

Classification classify(const Mobius& m, mpfr_prec_t prec) {
    if (!(m.det() - FieldElem(1L)).is_zero())
        throw VerificationFailed("classify requires determinant one");
    Classification c;
    if (m.x.is_zero() && m.y.is_zero() && m.z.is_zero()) {
        c.kind = ElementKind::Identity;
        return c;
    }
    FieldElem w2m1 = m.w * m.w - FieldElem(1L);
    int s = w2m1.sign();
    if (s < 0) {
        c.kind = ElementKind::Elliptic;
        c.order = projective_order(m);
        c.half_angle = m.w.to_enclosure(prec).abs().arccos();
    } else if (s > 0) {
        c.kind = ElementKind::Hyperbolic;
        c.length = Enclosure(2L, prec) * m.w.to_enclosure(prec).abs().arccosh();
    } else {
        c.kind = ElementKind::Parabolic;  // impossible for group elements
    }
    return c;
}

const groupkit::CosetTable& deck_group_table() {
    static const groupkit::CosetTable t =
        groupkit::coset_enumerate(groupkit::t17_quotient(), {}, 1u << 20);
    return t;
}

const groupkit::FiniteGroupData& deck_group_data() {
    static const groupkit::FiniteGroupData g = groupkit::conjugacy_classes(deck_group_table());
    return g;
}

std::vector<GeodesicClass> elliptic_classes(mpfr_prec_t prec) {
    auto [X, Y, Z] = generator_matrices();
    std::vector<GeodesicClass> out;
    auto add = [&](const Mobius& q, const Word& w) {
        GeodesicClass c;
        c.kind = ElementKind::Elliptic;
        c.word = w;
        c.rep = q;
        Classification cl = classify(q, prec);
        if (cl.kind != ElementKind::Elliptic)
            throw VerificationFailed("generator power is not elliptic");
        c.order = cl.order;
        c.half_angle = cl.half_angle;
        c.sin2_theta = FieldElem(1L) - q.w * q.w;
        c.rotation_index = rotation_index(q, c.order);
        c.quotient_class = deck_group_data().class_of_perm(deck_group_table().word_image(w));
        out.push_back(std::move(c));
    };
    add(X, {1});
    Mobius acc = Y;
    add(acc, {2});
    acc = acc * Y;
    add(acc, {2, 2});
    acc = Z;
    Word zw;
    for (int k = 1; k <= 7; ++k) {
        zw.push_back(3);
        add(acc, zw);
        acc = acc * Z;
    }
    // pairwise distinctness: rotation data refined by the deck-group class
    // (the two pi-rotations x and z^4 share the angle but have fixed points
    // in different vertex orbits, which the finite quotient detects)
    for (std::size_t i = 0; i < out.size(); ++i)
        for (std::size_t j = i + 1; j < out.size(); ++j)
            if (out[i].order == out[j].order &&
                out[i].rotation_index == out[j].rotation_index &&
                out[i].quotient_class == out[j].quotient_class)
                throw VerificationFailed("elliptic classes not separated by invariants");
    return out;
}

Ball enumerate_ball(const mpq_class& cosh_threshold, int max_word_length) {
    const auto& gens = generator_images();
    Ball ball;
    ball.cosh_threshold = cosh_threshold;
    const FieldElem thresh{cosh_threshold};

    std::map<Mobius, int, MobiusLess> seen;  // canonical form -> kept index (or -1)
    ball.elems.push_back({Mobius(), {}});
    seen.emplace(Mobius().canonical(), 0);

    std::size_t level_begin = 0, level_end = 1;
    for (int level = 1; level <= max_word_length; ++level) {
        for (std::size_t idx = level_begin; idx < level_end; ++idx) {
            // copy: elems may reallocate while we append
            const Word w = ball.elems[idx].word;
            const Mobius base = ball.elems[idx].m;
            for (const auto& g : gens) {
                if (!w.empty() && w.back() == -g.letter) continue;
                if (!w.empty() && g.letter == 1 && w.back() == 1) continue;  // x is an involution
                Mobius q = (base * g.m).canonical();
                if (seen.count(q)) continue;
                if ((thresh - q.displacement_cosh()).sign() < 0) {
                    seen.emplace(std::move(q), -1);
                    continue;
                }
                Word nw = w;
                nw.push_back(g.letter);
                seen.emplace(q, static_cast<int>(ball.elems.size()));
                ball.elems.push_back({std::move(q), std::move(nw)});
            }
        }
        ball.levels_used = level;
        if (ball.elems.size() == level_end) {
            ball.closed = true;
            break;
        }
        level_begin = level_end;
        level_end = ball.elems.size();
    }
    return ball;
}

HyperbolicClassList hyperbolic_classes_up_to(double L, int word_bound, mpfr_prec_t prec) {
    if (L <= 0) throw OutOfRange("length bound must be positive");
    if (L > 3.5) throw OutOfRange("length bound exceeds the 3.5 safety cap");

    HyperbolicClassList result;
    result.length_bound = L;
    result.word_bound = word_bound;

    const TriangleBounds tb = triangle_bounds(prec);
    const Enclosure margin(mpq_class(1, 4), prec);
    const Enclosure halfL(mpq_class(L / 2), prec);
    // Every class of length <= L has a representative whose axis meets the
    // fundamental domain, hence displacement <= Delta from the base vertex.
    const Enclosure delta_bound =
        Enclosure(2L, prec) * (tb.R_F.cosh() * halfL.sinh()).arcsinh();
    result.displacement_bound = delta_bound.upper_d();
    const Enclosure norm_dist = delta_bound + margin;
    const mpq_class C_norm = rational_upper(norm_dist.cosh());
    // BFS reachability slack: prefixes of a domain-chain word stay within
    // diam(F) of the geodesic to the endpoint.
    const Enclosure ball_dist = delta_bound + tb.diam + margin;
    const mpq_class C_ball = rational_upper(ball_dist.cosh());
    result.ball_cosh_threshold = ball_dist.cosh().upper_d();

    Ball ball = enumerate_ball(C_ball, word_bound);
    if (!ball.closed)
        throw IncompleteEnumeration("ball search not exhausted at word bound " +
                                    std::to_string(word_bound));

    // Hyperbolic elements possibly of length <= L with normalized displacement.
    const Enclosure coshL2 = halfL.cosh();
    const FieldElem cnorm_f{C_norm};
    std::vector<int> members;
    for (std::size_t i = 1; i < ball.elems.size(); ++i) {
        const Mobius& q = ball.elems[i].m;
        if ((q.w * q.w - FieldElem(1L)).sign() <= 0) continue;
        if ((cnorm_f - q.displacement_cosh()).sign() < 0) continue;
        Enclosure absw = q.w.to_enclosure(prec).abs();
        if (coshL2.definitely_less(absw)) continue;  // length certainly > L
        members.push_back(static_cast<int>(i));
    }

    std::sort(members.begin(), members.end(), [&](int a, int b) {
        const Mobius& qa = ball.elems[a].m;
        const Mobius& qb = ball.elems[b].m;
        int c = (qa.w * qa.w).cmp(qb.w * qb.w);
        if (c != 0) return c < 0;
        if (ball.elems[a].word.size() != ball.elems[b].word.size())
            return ball.elems[a].word.size() < ball.elems[b].word.size();
        return ball.elems[a].word < ball.elems[b].word;
    });

    if (members.empty()) {
        result.complete = true;
        result.conj_cosh_threshold = 0;
        return result;
    }

    // Certified conjugator ball: conjugators between axis-normalized
    // representatives move the base point by at most r_u + r_v + L/2, with
    // cosh(r) <= sinh(Delta'/2) / sinh(l_min/2).
    Enclosure lmin(0L, prec);
    {
        const Mobius& q = ball.elems[members.front()].m;  // minimal |trace|
        lmin = Enclosure(2L, prec) * q.w.to_enclosure(prec).abs().arccosh();
        if (!lmin.definitely_positive())
            throw PrecisionFail("shortest member length not resolved");
    }
    Enclosure cosh_r = (norm_dist / Enclosure(2L, prec)).sinh() / (lmin / Enclosure(2L, prec)).sinh();
    Enclosure one(1L, prec);
    if (!one.definitely_less(cosh_r)) cosh_r = Enclosure::hull(one + margin, cosh_r);
    Enclosure r = cosh_r.arccosh();
    Enclosure conj_dist = Enclosure(2L, prec) * r + halfL + tb.diam + margin;
    const mpq_class C_conj = rational_upper(conj_dist.cosh());
    result.conj_cosh_threshold = conj_dist.cosh().upper_d();

    const Ball* conj_ball = &ball;
    Ball bigger;
    if (C_conj > ball.cosh_threshold) {
        bigger = enumerate_ball(C_conj, word_bound);
        if (!bigger.closed)
            throw IncompleteEnumeration("conjugator ball not exhausted at word bound");
        conj_ball = &bigger;
    }

    // Merge members into conjugacy classes: one ball sweep per new class.
    std::map<Mobius, int, MobiusLess> member_lookup;
    for (int idx : members) member_lookup.emplace(ball.elems[idx].m, idx);
    std::map<int, int> assigned;  // member ball-index -> class index
    std::vector<GeodesicClass> classes;

    for (int idx : members) {
        if (assigned.count(idx)) continue;
        const Mobius& u = ball.elems[idx].m;
        GeodesicClass cls;
        cls.kind = ElementKind::Hyperbolic;
        cls.word = ball.elems[idx].word;
        cls.rep = u;
        cls.abs_trace = (u.trace()).abs();
        cls.length = Enclosure(2L, prec) * u.w.to_enclosure(prec).abs().arccosh();
        int cid = static_cast<int>(classes.size());
        assigned[idx] = cid;
        for (const auto& g : conj_ball->elems) {
            Mobius v = (g.m * u * g.m.inverse()).canonical();
            auto it = member_lookup.find(v);
            if (it == member_lookup.end() || assigned.count(it->second)) continue;
            assigned[it->second] = cid;
            cls.merges.push_back({ball.elems[it->second].word, g.word});
        }
        classes.push_back(std::move(cls));
    }

    // Conjugator re-verification straight from the words.
    for (const auto& cls : classes) {
        Mobius u = word_to_mobius(cls.word);
        for (const auto& m : cls.merges) {
            Mobius g = word_to_mobius(m.conjugator);
            Mobius v = word_to_mobius(m.member);
            if (!(g * u * g.inverse()).projectively_equal(v) &&
                !(g * v * g.inverse()).projectively_equal(u))
                throw VerificationFailed("stored conjugator failed re-verification");
        }
    }

    // Primitivity: look for a root class delta with delta^k conjugate to gamma.
    for (std::size_t ci = 0; ci < classes.size(); ++ci) {
        for (std::size_t cj = 0; cj < classes.size() && classes[ci].primitive; ++cj) {
            if (cj == ci) continue;
            for (int k = 2; k <= 8 && classes[ci].primitive; ++k) {
                Mobius p = classes[cj].rep;
                Mobius acc = p;
                for (int t = 1; t < k; ++t) acc = acc * p;
                if (!(acc.trace().abs() == classes[ci].abs_trace)) continue;
                Mobius target = classes[ci].rep;
                for (const auto& g : conj_ball->elems) {
                    Mobius v = (g.m * acc * g.m.inverse()).canonical();
                    if (v == target.canonical()) {
                        classes[ci].primitive = false;
                        classes[ci].power_of = static_cast<int>(cj);
                        classes[ci].power_exp = k;
                        break;
                    }
                }
            }
        }
    }

    result.classes = std::move(classes);
    result.complete = true;
    return result;
}

namespace {

// Bolza surface group generators inside the (2,3,8) triangle group,
// found once by an offline search and verified on every call.
const char* const kBolzaWords[4] = {
    "z*x*y^-1*z^-2*x*y^-1*z^-3",
    "z^3*y*x^-1*z^2*y*x^-1*z*x*y^-1*z^-2*x*y^-1*z^-4",
    "z^2*y*x^-1*z^2*y*x^-1*z^5*y*x^-1*z^2*y*x^-1*z^-3",
    "z^2*x*y^-1*z^-2*x*y^-1*z^-1*y*x^-1*z^2*y*x^-1*z^-1*x*y^-1*z^-2*x*y^-1*z^-2",
};

} // namespace

std::vector<Word> bolza_generators() {
    const groupkit::Presentation tri = groupkit::triangle_2_3_8();
    std::vector<Word> words;
    for (const char* s : kBolzaWords) words.push_back(tri.parse(s));
    // surface relator [g1,g2][g3,g4] = 1 projectively, each generator hyperbolic
    std::vector<Mobius> g;
    for (const auto& w : words) g.push_back(word_to_mobius(w));
    auto comm = [](const Mobius& a, const Mobius& b) {
        return a * b * a.inverse() * b.inverse();
    };
    if (!(comm(g[0], g[1]) * comm(g[2], g[3])).is_identity_projective())
        throw VerificationFailed("Bolza words fail the genus-2 surface relator");
    for (const auto& m : g)
        if ((m.w * m.w - FieldElem(1L)).sign() <= 0)
            throw VerificationFailed("Bolza generator is not hyperbolic");
    bolza_coset_table();  // index-48 and normality checks
    return words;
}

groupkit::CosetTable bolza_coset_table() {
    const groupkit::Presentation tri = groupkit::triangle_2_3_8();
    std::vector<Word> words;
    for (const char* s : kBolzaWords) words.push_back(tri.parse(s));
    groupkit::CosetTable t = groupkit::coset_enumerate(tri, words, 5000);
    if (t.index() != 48)
        throw VerificationFailed("Bolza subgroup index is " + std::to_string(t.index()) +
                                 ", expected 48");
    for (const auto& w : words)
        if (!perm_is_identity(t.word_image(w)))
            throw VerificationFailed("Bolza generator acts nontrivially on the 48 cosets");
    const long orders[3] = {2, 3, 8};
    for (int gi = 1; gi <= 3; ++gi)
        if (perm_order(t.generator_action(gi)) != orders[gi - 1])
            throw VerificationFailed("torsion survives in the quotient: kernel not torsion-free");
    return t;
}

std::string classes_to_csv(const std::vector<GeodesicClass>& list,
                           const std::vector<std::string>& gen_names) {
    std::ostringstream os;
    os << "kind,word,order_or_length,primitive,trace\n";
    for (const auto& c : list) {
        if (c.kind == ElementKind::Elliptic) {
            os << "elliptic," << groupkit::print_word(c.word, gen_names) << "," << c.order
               << ",,";
        } else {
            char buf[64];
            std::snprintf(buf, sizeof(buf), "%.17g+-%.2g", c.length.mid_d(),
                          c.length.width_d() / 2);
            os << "hyperbolic," << groupkit::print_word(c.word, gen_names) << "," << buf << ","
               << (c.primitive ? "true" : "false") << ",";
        }
        const FieldElem tr =
            c.kind == ElementKind::Elliptic ? c.rep.trace() : c.abs_trace;
        const auto& q = tr.coords();
        os << "\"" << q[0] << ";" << q[1] << ";" << q[2] << ";" << q[3] << "\"\n";
    }
    return os.str();
}

} // namespace gapcert::fuchsia
