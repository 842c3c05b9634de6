#pragma once

#include "gapcert/enclosure.hpp"
#include "gapcert/finite_group.hpp"

#include <vector>

namespace gapcert::groupkit {

/// A complex irreducible character, stored exactly as root-of-unity
/// multiplicities per class (value at class k is sum_l mults[k][l] zeta^l
/// with zeta = exp(2 pi i / order_k)), plus materialized enclosures.
struct ComplexCharacter {
    long degree = 0;
    std::vector<std::vector<long>> root_mults;
    std::vector<Enclosure> re, im;
    int indicator = 0;  // Frobenius-Schur: 1, 0 or -1
    bool is_trivial = false;

    void materialize(const FiniteGroupData& g, mpfr_prec_t prec);
};

/// A real irreducible character: indicator-1 characters verbatim,
/// indicator 0/-1 constituents folded as chi + conj(chi).
struct Character {
    std::vector<Enclosure> values;  // one per conjugacy class
    long degree = 0;
    bool is_trivial = false;
    int indicator = 1;  // of the underlying complex constituent

    const Enclosure& value(int class_index) const { return values.at(class_index); }
};

/// Burnside-Dixon: class-matrix eigenvector computation over F_p lifted to
/// exact root-of-unity data.  Deterministic: fixed splitting order and a
/// canonical final sort.  Throws CharFail if no admissible prime is found.
std::vector<ComplexCharacter> complex_character_table(const FiniteGroupData& g,
                                                      mpfr_prec_t prec = 0);

/// The real irreducible characters as consolidated from the complex table.
std::vector<Character> character_table(const FiniteGroupData& g, mpfr_prec_t prec = 0);

} // namespace gapcert::groupkit
