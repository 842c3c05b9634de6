#pragma once

#include "gapcert/words.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace gapcert::groupkit {

/// A finite presentation: named generators and freely reduced relators.
struct Presentation {
    std::vector<std::string> generators;
    std::vector<Word> relators;

    Presentation() = default;
    Presentation(std::vector<std::string> gens, std::vector<std::string> relator_text);

    void validate() const;  // throws InvalidWord on malformed data

    Word parse(const std::string& text) const { return parse_word(text, generators); }
    std::string print(const Word& w) const { return print_word(w, generators); }
};

/// The (2,3,8) triangle group <x,y,z | x^2, y^3, z^8, xyz>.
Presentation triangle_2_3_8();

/// The order-768 quotient: triangle_2_3_8 plus the extra length-14 relator.
Presentation t17_quotient();

/// File format: first line "gens: x y z", then one relator per line.
/// Blank lines and lines starting with '#' are ignored.
Presentation read_presentation(std::istream& in);
Presentation read_presentation_file(const std::string& path);
std::string write_presentation(const Presentation& p);

} // namespace gapcert::groupkit
