#include "gapcert/finite_group.hpp"

#include "gapcert/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <unordered_map>

namespace gapcert::groupkit {

PermGroup PermGroup::closure(std::vector<Perm> gens, std::size_t max_elements) {
    PermGroup g;
    if (gens.empty()) throw InvalidWord("closure needs at least one generator");
    g.degree_ = static_cast<int>(gens[0].size());
    for (const auto& p : gens)
        if (static_cast<int>(p.size()) != g.degree_ || !perm_is_valid(p))
            throw InvalidWord("invalid generator permutation");

    std::map<Perm, int> seen;
    Perm id = perm_identity(g.degree_);
    g.elements_.push_back(id);
    g.words_.push_back({});
    seen[id] = 0;
    for (std::size_t head = 0; head < g.elements_.size(); ++head) {
        for (std::size_t gi = 0; gi < gens.size(); ++gi) {
            Perm q = perm_compose(g.elements_[head], gens[gi]);
            auto [it, inserted] = seen.emplace(std::move(q), static_cast<int>(g.elements_.size()));
            if (inserted) {
                if (g.elements_.size() >= max_elements)
                    throw EnumerationLimit("group closure exceeded element cap");
                g.elements_.push_back(it->first);
                Word w = g.words_[head];
                w.push_back(static_cast<int>(gi) + 1);
                g.words_.push_back(std::move(w));
            }
        }
    }
    g.build_index();
    g.inverses_.resize(g.elements_.size());
    for (std::size_t i = 0; i < g.elements_.size(); ++i) {
        int inv = g.index_of(perm_inverse(g.elements_[i]));
        if (inv < 0) throw VerificationFailed("closure not closed under inverse");
        g.inverses_[i] = inv;
    }
    return g;
}

void PermGroup::build_index() {
    // Greedy base: refine element buckets point by point until singletons.
    base_.clear();
    std::vector<std::vector<int>> buckets{std::vector<int>(elements_.size())};
    std::iota(buckets[0].begin(), buckets[0].end(), 0);
    for (int pt = 0; pt < degree_; ++pt) {
        bool all_single = true;
        for (const auto& b : buckets)
            if (b.size() > 1) {
                all_single = false;
                break;
            }
        if (all_single) break;
        std::vector<std::vector<int>> next;
        bool refined = false;
        for (auto& b : buckets) {
            if (b.size() <= 1) {
                next.push_back(std::move(b));
                continue;
            }
            std::map<int, std::vector<int>> split;
            for (int e : b) split[elements_[e][pt]].push_back(e);
            if (split.size() > 1) refined = true;
            for (auto& [img, lst] : split) next.push_back(std::move(lst));
        }
        buckets = std::move(next);
        if (refined) base_.push_back(pt);
    }
    lookup_.clear();
    lookup_.reserve(elements_.size() * 2);
    for (std::size_t i = 0; i < elements_.size(); ++i)
        lookup_.emplace(key_of(elements_[i]), static_cast<int>(i));
    if (lookup_.size() != elements_.size())
        throw VerificationFailed("element base does not separate group elements");
}

std::vector<int> PermGroup::key_of(const Perm& p) const {
    std::vector<int> k;
    k.reserve(base_.size());
    for (int pt : base_) k.push_back(p[pt]);
    return k;
}

int PermGroup::index_of(const Perm& p) const {
    auto it = lookup_.find(key_of(p));
    if (it == lookup_.end()) return -1;
    // The base only separates group members; confirm full equality.
    return elements_[it->second] == p ? it->second : -1;
}

int PermGroup::multiply(int a, int b) const {
    int idx = index_of(perm_compose(elements_[a], elements_[b]));
    if (idx < 0) throw VerificationFailed("product escaped the group");
    return idx;
}

int FiniteGroupData::class_of_perm(const Perm& p) const {
    int idx = group->index_of(p);
    if (idx < 0) throw ClassMismatch("permutation is not an element of the group");
    return class_of_element[idx];
}

void FiniteGroupData::validate() const {
    long total = 0;
    for (const auto& c : classes) total += c.size;
    if (total != order) throw VerificationFailed("class equation violated");
    for (int k = 0; k < num_classes(); ++k)
        if (class_of_element[classes[k].rep_element] != k)
            throw VerificationFailed("class representative mislabelled");
}

FiniteGroupData conjugacy_classes(const CosetTable& t, std::size_t max_elements) {
    std::vector<Perm> gens;
    for (int g = 1; g <= static_cast<int>(t.presentation().generators.size()); ++g)
        gens.push_back(t.generator_action(g));
    FiniteGroupData data;
    data.group = std::make_shared<PermGroup>(PermGroup::closure(std::move(gens), max_elements));
    const PermGroup& G = *data.group;
    const long n = G.size();
    data.order = n;
    data.class_of_element.assign(n, -1);

    std::vector<int> gen_idx, gen_inv_idx;
    for (std::size_t gi = 0; gi < t.presentation().generators.size(); ++gi) {
        int idx = G.index_of(t.generator_action(static_cast<int>(gi) + 1));
        gen_idx.push_back(idx);
        gen_inv_idx.push_back(G.inverse(idx));
    }

    // Orbits of the conjugation action, seeded in BFS element order so the
    // representative carries the shortest generator word found.
    for (int e = 0; e < n; ++e) {
        if (data.class_of_element[e] != -1) continue;
        int k = data.num_classes();
        ConjClass cls;
        cls.rep_element = e;
        cls.rep_word = G.word(e);
        cls.rep_order = perm_order(G.element(e));
        std::queue<int> q;
        q.push(e);
        data.class_of_element[e] = k;
        long size = 0;
        while (!q.empty()) {
            int c = q.front();
            q.pop();
            ++size;
            for (std::size_t gi = 0; gi < gen_idx.size(); ++gi) {
                int conj = G.multiply(G.multiply(gen_inv_idx[gi], c), gen_idx[gi]);
                if (data.class_of_element[conj] == -1) {
                    data.class_of_element[conj] = k;
                    q.push(conj);
                }
            }
        }
        cls.size = size;
        data.classes.push_back(std::move(cls));
    }

    const int K = data.num_classes();
    data.power_map.resize(K);
    data.inverse_class.resize(K);
    data.power_classes.resize(K);
    data.exponent = 1;
    for (int k = 0; k < K; ++k) {
        const ConjClass& c = data.classes[k];
        data.exponent = std::lcm(data.exponent, c.rep_order);
        data.inverse_class[k] = data.class_of_element[G.inverse(c.rep_element)];
        data.power_classes[k].reserve(c.rep_order);
        int acc = 0;  // identity
        for (long t2 = 0; t2 < c.rep_order; ++t2) {
            data.power_classes[k].push_back(data.class_of_element[acc]);
            acc = G.multiply(acc, c.rep_element);
        }
        data.power_map[k] = data.power_classes[k][2 % c.rep_order];
    }
    data.validate();
    return data;
}

} // namespace gapcert::groupkit
