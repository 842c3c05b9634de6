#pragma once

#include "gapcert/perm.hpp"
#include "gapcert/presentation.hpp"
#include "gapcert/words.hpp"

#include <cstddef>
#include <vector>

namespace gapcert::groupkit {

/// A closed, collision-free coset table for a subgroup H < G given by
/// subgroup generator words.  Cosets are 0-based internally; the action
/// of generator g is the permutation coset -> coset * g.
class CosetTable {
public:
    CosetTable() = default;

    const Presentation& presentation() const { return pres_; }
    int index() const { return ncosets_; }
    const std::vector<Word>& subgroup_gens() const { return subgroup_gens_; }

    /// Permutation of cosets induced by one generator (1-based index).
    const Perm& generator_action(int gen) const;

    /// Image coset of tracing word w from coset c.
    int trace(int coset, const Word& w) const;

    /// Permutation image of an arbitrary word (the coset action homomorphism).
    Perm word_image(const Word& w) const;

    bool is_transitive() const;

    /// Relator-closure and transitivity sanity check; throws on failure.
    void validate() const;

    friend CosetTable coset_enumerate(const Presentation& p,
                                      const std::vector<Word>& subgroup,
                                      std::size_t max_cosets);

private:
    Presentation pres_;
    std::vector<Word> subgroup_gens_;
    int ncosets_ = 0;
    std::vector<Perm> action_;      // one permutation per generator
    std::vector<Perm> inv_action_;  // cached inverses
};

/// HLT coset enumeration with lookahead and in-place coincidence handling.
/// Throws EnumerationLimit if more than max_cosets live cosets are needed,
/// InvalidWord if subgroup words use undeclared generators.
CosetTable coset_enumerate(const Presentation& p, const std::vector<Word>& subgroup,
                           std::size_t max_cosets);

Perm word_image(const CosetTable& t, const Word& w);

} // namespace gapcert::groupkit
