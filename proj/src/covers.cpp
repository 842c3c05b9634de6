#include "gapcert/covers.hpp"

#include "gapcert/errors.hpp"
#include "gapcert/rng.hpp"

#include <json.hpp>

#include <numeric>
#include <queue>

namespace gapcert::coverlab {

HandlebodyMap HandlebodyMap::standard() {
    HandlebodyMap h;
    h.images = {Word{1}, Word{}, Word{2}, Word{}};
    h.validate();
    return h;
}

HandlebodyMap HandlebodyMap::from_strings(const std::array<std::string, 4>& images) {
    HandlebodyMap h;
    for (int i = 0; i < 4; ++i) h.images[i] = groupkit::parse_word(images[i], f2_names());
    h.validate();
    return h;
}

void HandlebodyMap::validate() const {
    // genus-2 relator [a1,b1][a2,b2] must die in F2
    Word r;
    auto push = [&](const Word& w, bool inv) {
        Word part = inv ? groupkit::inverse(w) : w;
        r.insert(r.end(), part.begin(), part.end());
    };
    push(images[0], false);
    push(images[1], false);
    push(images[0], true);
    push(images[1], true);
    push(images[2], false);
    push(images[3], false);
    push(images[2], true);
    push(images[3], true);
    if (!groupkit::free_reduce(r).empty())
        throw VerificationFailed("handlebody map does not kill the surface relator");
    // abelianized surjectivity: exponent vectors must span Z^2
    long e[4][2] = {};
    for (int i = 0; i < 4; ++i)
        for (int letter : images[i]) {
            int idx = std::abs(letter) - 1;
            if (idx < 0 || idx > 1) throw InvalidWord("handlebody image letter out of range");
            e[i][idx] += letter > 0 ? 1 : -1;
        }
    // gcd of all 2x2 minors must be 1 and the rank 2
    long g = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            long det = e[i][0] * e[j][1] - e[i][1] * e[j][0];
            g = std::gcd(g, det);
        }
    if (std::abs(g) != 1)
        throw VerificationFailed("handlebody map is not surjective on homology");
}

Word HandlebodyMap::apply(const Word& surface_word) const {
    Word out;
    for (int letter : surface_word) {
        int idx = std::abs(letter) - 1;
        if (idx < 0 || idx > 3) throw InvalidWord("surface word letter out of range");
        const Word& img = images[idx];
        if (letter > 0)
            out.insert(out.end(), img.begin(), img.end());
        else {
            Word inv = groupkit::inverse(img);
            out.insert(out.end(), inv.begin(), inv.end());
        }
    }
    return groupkit::free_reduce(out);
}

PermRep sample_rep(int n, std::uint64_t seed) {
    if (n < 1) throw OutOfRange("permutation degree must be at least 1");
    PermRep rep;
    rep.n = n;
    rep.seed = seed;
    Xoshiro256ss rng_x(derive_seed(seed, 0));
    Xoshiro256ss rng_y(derive_seed(seed, 1));
    rep.sigma_x = random_permutation(n, rng_x);
    rep.sigma_y = random_permutation(n, rng_y);
    return rep;
}

bool rep_transitive(const PermRep& rep) {
    std::vector<char> seen(rep.n, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int count = 1;
    Perm inv_x = perm_inverse(rep.sigma_x), inv_y = perm_inverse(rep.sigma_y);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        const Perm* steps[4] = {&rep.sigma_x, &rep.sigma_y, &inv_x, &inv_y};
        for (const Perm* p : steps) {
            int w = (*p)[v];
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                q.push(w);
            }
        }
    }
    return count == rep.n;
}

Perm f2_image(const PermRep& rep, const Word& f2_word) {
    Perm img = perm_identity(rep.n);
    Perm inv_x = perm_inverse(rep.sigma_x), inv_y = perm_inverse(rep.sigma_y);
    for (int letter : f2_word) {
        const Perm* p = nullptr;
        switch (letter) {
            case 1: p = &rep.sigma_x; break;
            case -1: p = &inv_x; break;
            case 2: p = &rep.sigma_y; break;
            case -2: p = &inv_y; break;
            default: throw InvalidWord("F2 word letter out of range");
        }
        img = perm_compose(img, *p);
    }
    return img;
}

Perm compose_action(const HandlebodyMap& h, const PermRep& rep, const Word& surface_word) {
    return f2_image(rep, h.apply(surface_word));
}

SchreierData schreier(const PermRep& rep) {
    if (!rep_transitive(rep))
        throw NotTransitive("permutation representation is not transitive");
    SchreierData sd;
    sd.n = rep.n;
    sd.tree_parent.assign(rep.n, -2);
    sd.tree_letter.assign(rep.n, 0);
    sd.tree_parent[0] = -1;
    Perm inv_x = perm_inverse(rep.sigma_x), inv_y = perm_inverse(rep.sigma_y);

    // candidate edges from v in fixed order: X fwd, Y fwd, X back, Y back
    struct Step {
        const Perm* p;
        int letter;
    };
    const Step steps[4] = {{&rep.sigma_x, 1}, {&rep.sigma_y, 2}, {&inv_x, -1}, {&inv_y, -2}};

    std::queue<int> q;
    q.push(0);
    std::vector<char> visited(rep.n, 0);
    visited[0] = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        // deterministic: collect candidates, then by (letter order, target)
        for (const auto& st : steps) {
            int w = (*st.p)[v];
            if (!visited[w]) {
                visited[w] = 1;
                sd.tree_parent[w] = v;
                sd.tree_letter[w] = st.letter;
                q.push(w);
            }
        }
    }

    auto path_to_root = [&](int v) {
        Word w;
        while (sd.tree_parent[v] != -1) {
            w.push_back(-sd.tree_letter[v]);
            v = sd.tree_parent[v];
        }
        return w;  // word mapping v back to the root along the tree
    };
    auto path_from_root = [&](int v) { return groupkit::inverse(path_to_root(v)); };

    // non-tree edges in deterministic order: vertices ascending, X before Y
    int label = 1;
    for (int v = 0; v < rep.n; ++v) {
        const std::pair<const Perm*, int> fwd[2] = {{&rep.sigma_x, 1}, {&rep.sigma_y, 2}};
        for (const auto& [p, letter] : fwd) {
            int w = (*p)[v];
            bool is_tree = (sd.tree_parent[w] == v && sd.tree_letter[w] == letter) ||
                           (sd.tree_parent[v] == w && sd.tree_letter[v] == -letter);
            if (is_tree) continue;
            sd.non_tree.push_back({v, letter});
            Word gen = path_from_root(v);
            gen.push_back(letter);
            Word tail = path_to_root(w);
            gen.insert(gen.end(), tail.begin(), tail.end());
            sd.generators.push_back(groupkit::free_reduce(gen));
            sd.pants_labels.push_back(label++);
        }
    }
    sd.k = static_cast<int>(sd.generators.size());
    if (sd.k != rep.n + 1)
        throw VerificationFailed("Schreier generator count is not n + 1");
    return sd;
}

int TwoCoverVector::weight() const {
    int w = 0;
    for (auto b : bits) w += b ? 1 : 0;
    return w;
}

TwoCoverVector switch_move(const TwoCoverVector& v, int i) {
    if (i < 1 || i > v.size()) throw IndexOutOfRange("switch index out of range");
    TwoCoverVector out = v;
    out.bits[i - 1] ^= 1;
    return out;
}

int hamming(const TwoCoverVector& a, const TwoCoverVector& b) {
    if (a.size() != b.size()) throw LengthMismatch("two-cover vectors of unequal length");
    int d = 0;
    for (int i = 0; i < a.size(); ++i)
        if (a.bits[i] != b.bits[i]) ++d;
    return d;
}

bool cover_connected(const TwoCoverVector& v) { return v.weight() != 0; }

ScreeningReport screen_short_geodesics(const HandlebodyMap& h, const PermRep& rep,
                                       const std::vector<ScreeningClass>& classes,
                                       double length_bound) {
    ScreeningReport rep_out;
    rep_out.length_bound = length_bound;
    for (std::size_t i = 0; i < classes.size(); ++i) {
        const auto& cls = classes[i];
        Word q = groupkit::free_reduce(cls.q_image);
        if (q != h.apply(cls.surface_word))
            throw InvalidWord("precomputed q-image disagrees with the handlebody map");
        if (q.empty()) continue;  // lifts to the tree cover; exempt
        Perm img = f2_image(rep, q);
        if (img[0] == 0) rep_out.flagged.push_back(static_cast<int>(i));
    }
    return rep_out;
}

std::string rep_to_json(const PermRep& rep, const SchreierData* sd,
                        const ScreeningReport* screening) {
    nlohmann::ordered_json j;
    j["n"] = rep.n;
    j["seed"] = rep.seed;
    auto one_line = [](const Perm& p) {
        std::vector<int> v(p.begin(), p.end());
        for (auto& x : v) ++x;  // 1-based for display
        return v;
    };
    j["sigma_X"] = one_line(rep.sigma_x);
    j["sigma_Y"] = one_line(rep.sigma_y);
    j["transitive"] = rep_transitive(rep);
    if (sd) j["k"] = sd->k;
    if (screening) {
        j["screening"] = {{"L", screening->length_bound}, {"flagged", screening->flagged}};
    }
    return j.dump(2);
}

} // namespace gapcert::coverlab
