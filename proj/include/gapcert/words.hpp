#pragma once

#include <string>
#include <vector>

namespace gapcert::groupkit {

/// A group word as a sequence of signed, 1-based generator indices:
/// letter +k means generator k-1, letter -k its inverse.
using Word = std::vector<int>;

Word free_reduce(const Word& w);
Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);
Word power(const Word& w, int n);
/// Remove conjugating prefix/suffix pairs (cyclic reduction).
Word cyclic_reduce(const Word& w);

/// Parse "z^2*y*x^-1" style notation against a generator name list.
/// Also accepts juxtaposed single letters ("xyz") when all names have
/// length one.  Throws InvalidWord on unknown names.
Word parse_word(const std::string& text, const std::vector<std::string>& gens);

/// Canonical printing: letters joined by '*', consecutive equal letters
/// collapsed into powers, inverses as ^-k.  Empty word prints as "1".
std::string print_word(const Word& w, const std::vector<std::string>& gens);

} // namespace gapcert::groupkit
