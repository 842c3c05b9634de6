#pragma once

#include "gapcert/coset_table.hpp"
#include "gapcert/perm.hpp"
#include "gapcert/words.hpp"

#include <cstddef>
#include <memory>
#include <unordered_map>
#include <vector>

namespace gapcert::groupkit {

/// The finite permutation group generated by a set of permutations,
/// enumerated explicitly with a word for every element.
class PermGroup {
public:
    static PermGroup closure(std::vector<Perm> gens, std::size_t max_elements);

    int degree() const { return degree_; }
    long size() const { return static_cast<long>(elements_.size()); }
    const Perm& element(int i) const { return elements_[i]; }
    const Word& word(int i) const { return words_[i]; }
    int index_of(const Perm& p) const;  // -1 if not a group element
    int multiply(int a, int b) const;
    int inverse(int i) const { return inverses_[i]; }

private:
    int degree_ = 0;
    std::vector<Perm> elements_;
    std::vector<Word> words_;
    std::vector<int> inverses_;
    std::vector<int> base_;  // points whose images identify an element
    struct KeyHash {
        std::size_t operator()(const std::vector<int>& v) const {
            std::size_t h = 1469598103934665603ull;
            for (int x : v) {
                h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
                h *= 1099511628211ull;
            }
            return h;
        }
    };
    std::unordered_map<std::vector<int>, int, KeyHash> lookup_;

    std::vector<int> key_of(const Perm& p) const;
    void build_index();
};

struct ConjClass {
    Word rep_word;     // shortest-found representative as a word in the generators
    long size = 0;
    int rep_element = 0;  // index into the PermGroup
    long rep_order = 1;
};

/// Conjugacy-class data of the permutation group carried by a coset table.
struct FiniteGroupData {
    long order = 0;
    std::vector<ConjClass> classes;
    std::vector<int> power_map;  // class index -> class of squares

    // Derived data used by the character machinery.
    std::shared_ptr<PermGroup> group;
    std::vector<int> class_of_element;
    std::vector<int> inverse_class;
    std::vector<std::vector<int>> power_classes;  // [k][t] = class of rep_k^t, t < rep_order
    long exponent = 1;

    int num_classes() const { return static_cast<int>(classes.size()); }
    int class_of_perm(const Perm& p) const;
    void validate() const;  // class equation and representative sanity
};

FiniteGroupData conjugacy_classes(const CosetTable& t, std::size_t max_elements = 1u << 20);

} // namespace gapcert::groupkit
