#include "gapcert/coset_table.hpp"

#include "gapcert/errors.hpp"

#include <algorithm>
#include <deque>
#include <queue>

namespace gapcert::groupkit {

namespace {

struct CapacityHit {};

struct EnumResult {
    std::vector<std::vector<int>> table;  // table[c][2g] = c*g, table[c][2g+1] = c*g^-1
    int ngens = 0;
};

/// HLT-style enumerator.  The table stores both generator and inverse
/// columns; dead cosets stay in place behind a union-find map until the
/// final compaction.
class Enumerator {
public:
    Enumerator(const Presentation& pres, const std::vector<Word>& subgens, std::size_t max_cosets)
        : pres_(pres), subgens_(subgens), max_(max_cosets) {
        ngens_ = static_cast<int>(pres.generators.size());
        ncols_ = 2 * ngens_;
        for (const auto& w : subgens_)
            for (int letter : w)
                if (std::abs(letter) < 1 || std::abs(letter) > ngens_)
                    throw InvalidWord("subgroup word uses undeclared generator");
        new_coset();
    }

    EnumResult run() {
        while (true) {
            changed_ = false;
            for (const auto& w : subgens_) scan_guarded(find(0), w);
            for (std::size_t c = 0; c < tab_.size(); ++c) {
                if (parent_[c] != static_cast<int>(c)) continue;
                for (const auto& r : pres_.relators) scan_guarded(static_cast<int>(c), r);
            }
            if (complete()) {
                if (!changed_) break;
                continue;
            }
            if (!changed_) {
                // no relator forced anything: fill the first hole directly
                int c, col;
                if (!first_hole(c, col)) break;
                try {
                    define(c, col);
                } catch (const CapacityHit&) {
                    if (!lookahead_recovers()) throw_limit();
                }
            }
        }
        if (!complete()) throw_limit();
        compact();
        standardize();
        EnumResult res;
        res.table = tab_;
        res.ngens = ngens_;
        return res;
    }

private:
    const Presentation& pres_;
    std::vector<Word> subgens_;
    std::size_t max_;
    int ngens_ = 0, ncols_ = 0;
    std::vector<std::vector<int>> tab_;
    std::vector<int> parent_;
    std::size_t nalive_ = 0;
    bool changed_ = false;
    std::deque<std::pair<int, int>> coinc_;

    static int col_of(int letter) {
        return letter > 0 ? 2 * (letter - 1) : 2 * (-letter - 1) + 1;
    }
    static int inv_col(int col) { return col ^ 1; }

    int find(int c) {
        while (parent_[c] != c) {
            parent_[c] = parent_[parent_[c]];
            c = parent_[c];
        }
        return c;
    }

    int new_coset() {
        if (nalive_ >= max_) throw CapacityHit{};
        tab_.emplace_back(ncols_, -1);
        parent_.push_back(static_cast<int>(tab_.size()) - 1);
        ++nalive_;
        return static_cast<int>(tab_.size()) - 1;
    }

    int define(int c, int col) {
        int d = new_coset();
        tab_[c][col] = d;
        tab_[d][inv_col(col)] = c;
        changed_ = true;
        return d;
    }

    bool complete() {
        for (std::size_t c = 0; c < tab_.size(); ++c) {
            if (parent_[c] != static_cast<int>(c)) continue;
            for (int col = 0; col < ncols_; ++col)
                if (tab_[c][col] == -1) return false;
        }
        return true;
    }

    bool first_hole(int& c_out, int& col_out) {
        for (std::size_t c = 0; c < tab_.size(); ++c) {
            if (parent_[c] != static_cast<int>(c)) continue;
            for (int col = 0; col < ncols_; ++col)
                if (tab_[c][col] == -1) {
                    c_out = static_cast<int>(c);
                    col_out = col;
                    return true;
                }
        }
        return false;
    }

    void throw_limit() {
        throw EnumerationLimit("coset enumeration exceeded max_cosets = " + std::to_string(max_));
    }

    void scan_guarded(int start, const Word& w) {
        try {
            scan(start, w, true);
        } catch (const CapacityHit&) {
            if (!lookahead_recovers()) throw_limit();
            try {
                scan(find(start), w, true);
            } catch (const CapacityHit&) {
                throw_limit();
            }
        }
    }

    // Lookahead: one full deduction/coincidence pass without definitions.
    bool lookahead_recovers() {
        std::size_t before = nalive_;
        for (std::size_t c = 0; c < tab_.size(); ++c) {
            if (parent_[c] != static_cast<int>(c)) continue;
            for (const auto& r : pres_.relators) scan(static_cast<int>(c), r, false);
        }
        return nalive_ < before;
    }

    void scan(int start, const Word& w, bool fill) {
        if (w.empty()) return;
        int f = find(start);
        std::size_t i = 0;
        int b = f;
        std::size_t j = w.size();
        while (true) {
            while (i < j) {
                int next = tab_[f][col_of(w[i])];
                if (next == -1) break;
                f = find(next);
                ++i;
            }
            if (i == j) {
                if (f != b) coincide(f, b);
                return;
            }
            while (j > i) {
                int next = tab_[b][col_of(-w[j - 1])];
                if (next == -1) break;
                b = find(next);
                --j;
            }
            if (j == i) {
                if (f != b) coincide(f, b);
                return;
            }
            if (j == i + 1) {
                install(f, col_of(w[i]), b);
                return;
            }
            if (!fill) return;
            f = define(f, col_of(w[i]));
            ++i;
        }
    }

    // Record a*col = b; the forward scan guarantees tab_[a][col] was empty,
    // but the reverse slot may conflict, in which case the cosets coincide.
    void install(int a, int col, int b) {
        int eb = tab_[b][inv_col(col)] == -1 ? -1 : find(tab_[b][inv_col(col)]);
        tab_[a][col] = b;
        tab_[b][inv_col(col)] = a;
        changed_ = true;
        if (eb != -1 && eb != a) coincide(eb, a);
    }

    void coincide(int a, int b) {
        coinc_.emplace_back(a, b);
        changed_ = true;
        while (!coinc_.empty()) {
            auto [x, y] = coinc_.front();
            coinc_.pop_front();
            x = find(x);
            y = find(y);
            if (x == y) continue;
            if (x > y) std::swap(x, y);
            parent_[y] = x;
            --nalive_;
            for (int col = 0; col < ncols_; ++col) {
                int d = tab_[y][col];
                if (d == -1) continue;
                d = find(d);
                int e = tab_[x][col] == -1 ? -1 : find(tab_[x][col]);
                if (e == -1) {
                    tab_[x][col] = d;
                    if (tab_[d][inv_col(col)] == -1)
                        tab_[d][inv_col(col)] = x;
                    else if (find(tab_[d][inv_col(col)]) != x)
                        coinc_.emplace_back(find(tab_[d][inv_col(col)]), x);
                } else if (e != d) {
                    coinc_.emplace_back(e, d);
                }
            }
        }
    }

    void compact() {
        std::vector<int> newid(tab_.size(), -1);
        int next = 0;
        for (std::size_t c = 0; c < tab_.size(); ++c)
            if (parent_[c] == static_cast<int>(c)) newid[c] = next++;
        std::vector<std::vector<int>> out;
        out.reserve(next);
        for (std::size_t c = 0; c < tab_.size(); ++c) {
            if (parent_[c] != static_cast<int>(c)) continue;
            std::vector<int> row(ncols_, -1);
            for (int col = 0; col < ncols_; ++col)
                if (tab_[c][col] != -1) row[col] = newid[find(tab_[c][col])];
            out.push_back(std::move(row));
        }
        tab_ = std::move(out);
        parent_.resize(tab_.size());
        for (std::size_t c = 0; c < tab_.size(); ++c) parent_[c] = static_cast<int>(c);
        nalive_ = tab_.size();
    }

    // Canonical numbering: BFS from coset 0, columns in fixed order.
    void standardize() {
        std::vector<int> order(tab_.size(), -1);
        std::queue<int> q;
        order[0] = 0;
        int next = 1;
        q.push(0);
        while (!q.empty()) {
            int c = q.front();
            q.pop();
            for (int col = 0; col < ncols_; ++col) {
                int d = tab_[c][col];
                if (d != -1 && order[d] == -1) {
                    order[d] = next++;
                    q.push(d);
                }
            }
        }
        std::vector<std::vector<int>> out(tab_.size(), std::vector<int>(ncols_, -1));
        for (std::size_t c = 0; c < tab_.size(); ++c)
            for (int col = 0; col < ncols_; ++col)
                if (tab_[c][col] != -1) out[order[c]][col] = order[tab_[c][col]];
        tab_ = std::move(out);
    }
};

} // namespace

CosetTable coset_enumerate(const Presentation& p, const std::vector<Word>& subgroup,
                           std::size_t max_cosets) {
    if (max_cosets < 1) throw EnumerationLimit("max_cosets must be at least 1");
    p.validate();
    Enumerator e(p, subgroup, max_cosets);
    EnumResult res = e.run();
    CosetTable t;
    t.pres_ = p;
    t.subgroup_gens_ = subgroup;
    t.ncosets_ = static_cast<int>(res.table.size());
    t.action_.assign(res.ngens, Perm(res.table.size()));
    for (int g = 0; g < res.ngens; ++g)
        for (std::size_t c = 0; c < res.table.size(); ++c)
            t.action_[g][c] = res.table[c][2 * g];
    t.inv_action_.reserve(res.ngens);
    for (int g = 0; g < res.ngens; ++g) t.inv_action_.push_back(perm_inverse(t.action_[g]));
    t.validate();
    return t;
}

const Perm& CosetTable::generator_action(int gen) const {
    if (gen < 1 || gen > static_cast<int>(action_.size()))
        throw InvalidWord("generator index out of range");
    return action_[gen - 1];
}

int CosetTable::trace(int coset, const Word& w) const {
    int c = coset;
    for (int letter : w) {
        int idx = std::abs(letter) - 1;
        if (idx < 0 || idx >= static_cast<int>(action_.size()))
            throw InvalidWord("word uses undeclared generator");
        c = letter > 0 ? action_[idx][c] : inv_action_[idx][c];
    }
    return c;
}

Perm CosetTable::word_image(const Word& w) const {
    Perm img = perm_identity(ncosets_);
    for (int letter : w) {
        int idx = std::abs(letter) - 1;
        if (idx < 0 || idx >= static_cast<int>(action_.size()))
            throw InvalidWord("word uses undeclared generator");
        img = perm_compose(img, letter > 0 ? action_[idx] : inv_action_[idx]);
    }
    return img;
}

bool CosetTable::is_transitive() const {
    std::vector<char> seen(ncosets_, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int count = 1;
    while (!q.empty()) {
        int c = q.front();
        q.pop();
        for (std::size_t g = 0; g < action_.size(); ++g) {
            for (int d : {action_[g][c], inv_action_[g][c]}) {
                if (!seen[d]) {
                    seen[d] = 1;
                    ++count;
                    q.push(d);
                }
            }
        }
    }
    return count == ncosets_;
}

void CosetTable::validate() const {
    for (const auto& a : action_)
        if (!perm_is_valid(a)) throw VerificationFailed("coset action is not a permutation");
    for (const auto& r : pres_.relators)
        if (!perm_is_identity(word_image(r)))
            throw VerificationFailed("relator does not trace to the identity");
    for (const auto& w : subgroup_gens_)
        if (trace(0, w) != 0)
            throw VerificationFailed("subgroup generator does not fix the base coset");
    if (!is_transitive()) throw VerificationFailed("coset action is not transitive");
}

Perm word_image(const CosetTable& t, const Word& w) { return t.word_image(w); }

} // namespace gapcert::groupkit
