#ifndef ORBIHOM_GROUPS_HPP
#define ORBIHOM_GROUPS_HPP

// Finitely presented groups of the built-in orbifold families and their
// abelianizations.

#include "orbihom/intlin.hpp"
#include "orbihom/orbmodel.hpp"

#include <string>
#include <utility>
#include <vector>

namespace orbihom {

/// A letter is (generator index, nonzero exponent). Words are kept freely
/// reduced: adjacent letters name different generators.
using Letter = std::pair<std::size_t, long>;
using Word = std::vector<Letter>;

Word free_reduce(Word w);
Word inverse(Word const& w);
/// w followed by v, reduced.
Word concat(Word const& w, Word const& v);

class Presentation
{
public:
    Presentation() = default;
    explicit Presentation(std::vector<std::string> generators) : generators_(std::move(generators)) {}

    std::size_t add_generator(std::string name);
    /// Stores the freely reduced relator; throws Error(Input) on an unknown
    /// generator index.
    void add_relator(Word w);

    std::vector<std::string> const& generators() const { return generators_; }
    std::vector<Word> const& relators() const { return relators_; }
    std::size_t index_of(std::string const& name) const;

    /// Column j holds the exponent sums of relator j.
    IntMatrix exponent_matrix() const;

    /// "<x | x^5>"
    std::string to_string() const;

private:
    std::vector<std::string> generators_;
    std::vector<Word> relators_;
};

/// Power of a single generator.
Word power(std::size_t g, long e);
/// [a, b] = a b a^-1 b^-1
Word commutator(Word const& a, Word const& b);

/// Orbifold fundamental group of a built-in descriptor. Throws Error(Input)
/// for custom complexes.
Presentation pi1_presentation(OrbifoldDesc const& d);

FgAbGroup abelianization(Presentation const& p);

} // namespace orbihom

#endif
