#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bcov/perm.hpp"

namespace bcov {

enum class CrossSign { positive, negative };

inline CrossSign opposite(CrossSign s) {
    return s == CrossSign::positive ? CrossSign::negative : CrossSign::positive;
}

struct Component {
    bool reversed = false;  // orientation flag, "+" when false
    std::optional<int> framing;
    bool dotted = false;
    bool operator==(const Component&) const = default;
};

struct Arc {
    int component = 0;
    Perm label;
    bool operator==(const Arc&) const = default;
};

// One crossing of the diagram. The under strand is cut here: under_in ends at
// the crossing, under_out starts at it. The over arc is not cut.
struct Crossing {
    int over = 0;
    int under_in = 0;
    int under_out = 0;
    CrossSign sign = CrossSign::positive;
    bool operator==(const Crossing&) const = default;
};

// An oriented link diagram whose arcs carry permutation labels, in extended
// PD form: crossings reference Wirtinger arcs directly. With framings and
// dotted flags on components it doubles as a Kirby diagram. Immutable after
// construction; structural invariants are enforced by build().
class LabeledLink {
public:
    // Validates structure: reference ranges, under arcs on one component,
    // arc successor structure a single cycle per component, label degrees,
    // dotted/framing exclusivity. Throws Error on violation.
    static LabeledLink build(int degree, std::vector<Component> components,
                             std::vector<Arc> arcs, std::vector<Crossing> crossings);

    static LabeledLink empty(int degree);
    static LabeledLink unknot(int degree, const Perm& label,
                              std::optional<int> framing = std::nullopt, bool dotted = false);

    int degree() const { return degree_; }
    const std::vector<Component>& components() const { return components_; }
    const std::vector<Arc>& arcs() const { return arcs_; }
    const std::vector<Crossing>& crossings() const { return crossings_; }

    // The arc that follows `arc` along its component (through its undercrossing).
    int arc_successor(int arc) const;
    std::vector<int> component_arcs(int component) const;

    // Structure with every label replaced.
    LabeledLink with_labels(const std::vector<Perm>& labels) const;

    bool operator==(const LabeledLink&) const = default;

private:
    LabeledLink() = default;
    int degree_ = 1;
    std::vector<Component> components_;
    std::vector<Arc> arcs_;
    std::vector<Crossing> crossings_;
    std::vector<int> successor_;  // computed during build
};

struct WirtingerViolation {
    int crossing;
    Perm expected;
    Perm found;
};

struct ValidityReport {
    bool valid = false;
    std::vector<WirtingerViolation> violations;
    bool transitive = false;
    bool simple = false;
};

// Checks the conjugation relation at every crossing: at a positive crossing
// with over label a and incoming under label b the outgoing label must be
// a b a^-1; at a negative crossing a^-1 b a. Failures are data, not errors.
ValidityReport wirtinger_check(const LabeledLink& link);

Perm meridian_image(const LabeledLink& link, int arc);

// Disjoint union; arc, crossing and component ids of b are shifted.
LabeledLink split_union(const LabeledLink& a, const LabeledLink& b);

struct EnumerationBounds {
    int max_degree = 6;
    int max_arcs = 12;
};

// All assignments of transpositions in the symmetric group of the given
// degree to the arcs of `shape` that pass wirtinger_check (and transitivity
// when requested), ordered lexicographically by label tuple.
std::vector<LabeledLink> enumerate_simple_monodromies(const LabeledLink& shape, int degree,
                                                      bool transitive_only,
                                                      const EnumerationBounds& bounds = {});

// Structural equality after renumbering both sides canonically: components,
// arcs and crossings are sorted into a deterministic normal form. Used by
// move tests ("equal up to renumbering").
bool equal_up_to_renumbering(const LabeledLink& a, const LabeledLink& b);

}  // namespace bcov
