#include "gapcert/words.hpp"

#include "gapcert/errors.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace gapcert::groupkit {

Word free_reduce(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (int letter : w) {
        if (letter == 0) throw InvalidWord("zero letter in word");
        if (!out.empty() && out.back() == -letter)
            out.pop_back();
        else
            out.push_back(letter);
    }
    return out;
}

Word inverse(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
    return out;
}

Word concat(const Word& a, const Word& b) {
    Word out = a;
    out.insert(out.end(), b.begin(), b.end());
    return free_reduce(out);
}

Word power(const Word& w, int n) {
    Word base = n >= 0 ? w : inverse(w);
    int k = n >= 0 ? n : -n;
    Word out;
    for (int i = 0; i < k; ++i) out.insert(out.end(), base.begin(), base.end());
    return free_reduce(out);
}

Word cyclic_reduce(const Word& w) {
    Word r = free_reduce(w);
    size_t i = 0, j = r.size();
    while (j - i >= 2 && r[i] == -r[j - 1]) {
        ++i;
        --j;
    }
    return Word(r.begin() + i, r.begin() + j);
}

namespace {

int gen_index(const std::string& name, const std::vector<std::string>& gens) {
    for (size_t i = 0; i < gens.size(); ++i)
        if (gens[i] == name) return static_cast<int>(i) + 1;
    throw InvalidWord("unknown generator '" + name + "'");
}

} // namespace

Word parse_word(const std::string& text, const std::vector<std::string>& gens) {
    Word out;
    size_t i = 0;
    const size_t n = text.size();
    auto skip_ws = [&] {
        while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    if (i < n && text.compare(i, 1, "1") == 0 && i + 1 == n) return out;  // identity
    bool expect_sep = false;
    while (i < n) {
        skip_ws();
        if (i >= n) break;
        if (text[i] == '*') {
            if (!expect_sep) throw InvalidWord("misplaced '*' in word: " + text);
            ++i;
            expect_sep = false;
            continue;
        }
        // read a generator name: longest match against the declared names
        size_t best = 0;
        for (const auto& g : gens)
            if (text.compare(i, g.size(), g) == 0 && g.size() > best) best = g.size();
        if (best == 0)
            throw InvalidWord("unknown generator at '" + text.substr(i) + "'");
        int idx = gen_index(text.substr(i, best), gens);
        i += best;
        long exp = 1;
        if (i < n && text[i] == '^') {
            ++i;
            bool neg = false;
            if (i < n && (text[i] == '-' || text[i] == '+')) {
                neg = text[i] == '-';
                ++i;
            }
            if (i >= n || !std::isdigit(static_cast<unsigned char>(text[i])))
                throw InvalidWord("malformed exponent in word: " + text);
            exp = 0;
            while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
                exp = exp * 10 + (text[i] - '0');
                ++i;
            }
            if (neg) exp = -exp;
        }
        int letter = exp >= 0 ? idx : -idx;
        for (long k = 0; k < std::abs(exp); ++k) out.push_back(letter);
        expect_sep = true;
    }
    return free_reduce(out);
}

std::string print_word(const Word& w, const std::vector<std::string>& gens) {
    if (w.empty()) return "1";
    std::ostringstream os;
    size_t i = 0;
    bool first = true;
    while (i < w.size()) {
        size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        long run = static_cast<long>(j - i);
        int letter = w[i];
        int idx = std::abs(letter) - 1;
        if (idx >= static_cast<int>(gens.size()))
            throw InvalidWord("letter out of range in print_word");
        if (!first) os << "*";
        os << gens[idx];
        long exp = letter > 0 ? run : -run;
        if (exp != 1) os << "^" << exp;
        first = false;
        i = j;
    }
    return os.str();
}

} // namespace gapcert::groupkit
