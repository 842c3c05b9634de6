#include "gapcert/presentation.hpp"

#include "gapcert/errors.hpp"

#include <fstream>
#include <sstream>

namespace gapcert::groupkit {

Presentation::Presentation(std::vector<std::string> gens, std::vector<std::string> relator_text) {
    generators = std::move(gens);
    for (const auto& t : relator_text) relators.push_back(parse_word(t, generators));
    validate();
}

void Presentation::validate() const {
    if (generators.empty()) throw InvalidWord("presentation has no generators");
    for (const auto& g : generators)
        if (g.empty()) throw InvalidWord("empty generator name");
    for (const auto& r : relators) {
        if (free_reduce(r) != r) throw InvalidWord("relator not freely reduced");
        for (int letter : r) {
            int idx = std::abs(letter);
            if (idx < 1 || idx > static_cast<int>(generators.size()))
                throw InvalidWord("relator uses undeclared generator");
        }
    }
}

Presentation triangle_2_3_8() {
    return Presentation({"x", "y", "z"}, {"x^2", "y^3", "z^8", "x*y*z"});
}

Presentation t17_quotient() {
    return Presentation({"x", "y", "z"},
                        {"x^2", "y^3", "z^8", "x*y*z",
                         "z^2*y*x*z^2*y*x*z*y^-1*z^-1*x*z*y^-1*z^-1*x"});
}

Presentation read_presentation(std::istream& in) {
    Presentation p;
    std::string line;
    bool have_gens = false;
    while (std::getline(in, line)) {
        // strip comments and surrounding whitespace
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        size_t b = line.find_first_not_of(" \t\r\n");
        if (b == std::string::npos) continue;
        size_t e = line.find_last_not_of(" \t\r\n");
        line = line.substr(b, e - b + 1);
        if (!have_gens) {
            if (line.rfind("gens:", 0) != 0)
                throw InvalidWord("presentation file must start with a 'gens:' line");
            std::istringstream gs(line.substr(5));
            std::string name;
            while (gs >> name) p.generators.push_back(name);
            have_gens = true;
            continue;
        }
        p.relators.push_back(parse_word(line, p.generators));
    }
    p.validate();
    return p;
}

Presentation read_presentation_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidWord("cannot open presentation file: " + path);
    return read_presentation(in);
}

std::string write_presentation(const Presentation& p) {
    std::ostringstream os;
    os << "gens:";
    for (const auto& g : p.generators) os << " " << g;
    os << "\n";
    for (const auto& r : p.relators) os << print_word(r, p.generators) << "\n";
    return os.str();
}

} // namespace gapcert::groupkit
