#pragma once

#include <span>
#include <string>
#include <vector>

#include "bcov/error.hpp"

namespace bcov {

// A permutation of the sheet set {1..d}. The degree is explicit data: two
// permutations interoperate only at equal degree, and stabilization changes
// the degree without changing the support. Immutable after construction.
class Perm {
public:
    // Identity on {1..degree}.
    explicit Perm(int degree);

    // From an images table: images[i] is the image of sheet i+1 (1-based values).
    Perm(int degree, std::vector<int> images);

    static Perm identity(int degree) { return Perm(degree); }
    static Perm transposition(int degree, int a, int b);

    // Parses whitespace-insensitive cycle notation, e.g. "(1 2)(3 4)" or "id".
    static Perm parse(const std::string& text, int degree);

    int degree() const { return degree_; }
    int apply(int sheet) const;

    bool is_identity() const;
    // True iff exactly one 2-cycle and every other sheet is fixed.
    bool is_transposition() const;

    // Nontrivial cycles, each starting at its minimal element, sorted by that element.
    std::vector<std::vector<int>> cycles() const;
    // Lengths of nontrivial cycles, descending. Conjugation invariant.
    std::vector<int> cycle_type() const;
    // The two moved sheets of a transposition.
    std::pair<int, int> transposition_pair() const;

    std::string to_string() const;

    Perm inverse() const;

    bool operator==(const Perm&) const = default;
    auto operator<=>(const Perm&) const = default;

private:
    int degree_;
    std::vector<int> images_;
};

// Composition "apply q first, then p".
Perm compose(const Perm& p, const Perm& q);

// a * b * a^-1.
Perm conjugate(const Perm& a, const Perm& b);

// Orbit partition of {1..degree} under the group generated by gens.
// Orbits are sorted internally and ordered by minimal element.
std::vector<std::vector<int>> orbits(std::span<const Perm> gens, int degree);

bool is_transitive(std::span<const Perm> gens, int degree);

}  // namespace bcov
