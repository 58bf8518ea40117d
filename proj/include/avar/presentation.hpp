// Finitely presented groups with peripheral (cusp) structure: words,
// presentations, the text file format, and integer homology helpers.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "avar/errors.hpp"

namespace avar {

// Letters are signed 1-based generator indices: +k = generator k-1,
// -k = its inverse.
using Word = std::vector<std::int32_t>;

Word free_reduce(const Word& w);
Word word_inverse(const Word& w);
Word word_concat(const Word& a, const Word& b);
Word word_power(const Word& w, long e);

struct Cusp {
    Word meridian;
    Word longitude; // may be empty (solid-torus case)
};

class GroupPresentation {
public:
    GroupPresentation(std::vector<std::string> generator_names, std::vector<Word> relators,
                      std::vector<Cusp> cusps);

    const std::vector<std::string>& generator_names() const { return gens_; }
    std::size_t num_generators() const { return gens_.size(); }
    const std::vector<Word>& relators() const { return relators_; }
    const std::vector<Cusp>& cusps() const { return cusps_; }
    std::size_t num_cusps() const { return cusps_.size(); }

    // Exponent-sum vector of w in Z^{#generators}.
    std::vector<long> abelianization_image(const Word& w) const;

    std::string print() const; // presentation file format
    bool operator==(const GroupPresentation& o) const = default;

private:
    std::vector<std::string> gens_;
    std::vector<Word> relators_;
    std::vector<Cusp> cusps_;
};

// File format:
//   generators: <name> <name> ...
//   relator: <word>            (zero or more)
//   cusp: meridian=<word> longitude=<word>   (zero or more, order = cusp index)
//   '#' starts a comment; blank lines ignored.
// Word syntax: lowercase letter = generator, uppercase = inverse;
// bracketed [name] for multi-character names, [Name] for the inverse
// (declared names must start lowercase).
GroupPresentation parse_presentation(const std::string& text);
Word parse_word(const std::string& text, const std::vector<std::string>& gen_names, int line = 0);
std::string print_word(const Word& w, const std::vector<std::string>& gen_names);

// Integer lattice helpers for homological sanity checks.
// Rows of `lattice` span L < Z^n; `in_lattice` decides v in L; rank and
// torsion come from the Smith normal form.
struct HomologySummary {
    long free_rank = 0;
    std::vector<long> torsion; // nontrivial invariant factors
};
bool in_lattice(const std::vector<std::vector<long>>& lattice, const std::vector<long>& v);
HomologySummary homology_of_quotient(const std::vector<std::vector<long>>& lattice, std::size_t n);

// Image of v in the free part Z^free_rank of Z^n / L (well defined up to
// the chosen basis; used to test "generates modulo torsion").
std::vector<long> free_part_image(const std::vector<std::vector<long>>& lattice, std::size_t n,
                                  const std::vector<long>& v);

} // namespace avar
