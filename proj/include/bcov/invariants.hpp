#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <span>
#include <vector>

#include "bcov/linkdiag.hpp"
#include "bcov/ribbon.hpp"

namespace bcov {

using BigInt = boost::multiprecision::cpp_int;
using IntMatrix = std::vector<std::vector<BigInt>>;

// Group presentation; relators are words in signed 1-based generator indices.
struct Presentation {
    int generators = 0;
    std::vector<std::vector<int>> relators;
};

// rank + torsion coefficients in divisibility order (each entry > 1).
struct AbelianGroup {
    int rank = 0;
    std::vector<BigInt> torsion;
    bool trivial() const { return rank == 0 && torsion.empty(); }
    bool operator==(const AbelianGroup&) const = default;
};

struct BranchPreimage {
    int component = 0;
    std::vector<int> cycle_lengths;  // cycles of the meridian label, fixed sheets included
};

struct CoverSummary {
    int degree = 0;
    bool connected = false;
    int component_count = 0;
    std::vector<BranchPreimage> branch_preimages;
};

CoverSummary cover_summary(const LabeledLink& link);

enum class BaseSpace { B4, S4 };

// d * chi(base) - chi(S); requires simple labels.
int euler_cover_4d(int degree, const RibbonSurface& surface, BaseSpace base);

// One generator per arc, one relator per crossing. Returns the presentation
// and the arc -> generator map (1-based indices).
std::pair<Presentation, std::vector<int>> wirtinger_presentation(const LabeledLink& link);

struct SnfResult {
    std::vector<BigInt> diagonal;  // nonzero entries, divisibility chain
    int rank = 0;
};

// Exact Smith normal form over the integers.
SnfResult smith_normal_form(const IntMatrix& m);

AbelianGroup abelianization(const Presentation& pres);

// Rewrites words of the subgroup fixing a basepoint sheet against a Schreier
// transversal built by breadth-first search over the sheets (sorted generator
// order). Generators of the subgroup are the non-tree Schreier pairs.
class SchreierRewriter {
public:
    SchreierRewriter(Presentation pres, std::vector<Perm> action, int basepoint);

    const std::vector<int>& orbit() const { return orbit_; }
    int subgroup_generator_count() const { return subgroup_generators_; }

    // Rewrite of t_s^-1 w t_s in the Schreier generators; w must stabilize the
    // start sheet. Freely reduced.
    std::vector<int> rewrite(std::span<const int> word, int start_sheet) const;

    // Rewrites of every relator at every orbit sheet.
    Presentation subgroup_presentation() const;

private:
    Presentation pres_;
    std::vector<Perm> action_;
    int basepoint_;
    std::vector<int> orbit_;                  // BFS discovery order
    std::vector<std::vector<int>> schreier_;  // [gen][sheet-1] -> subgroup gen id, 0 = tree
    int subgroup_generators_ = 0;
};

Presentation reidemeister_schreier(const Presentation& pres, const std::vector<Perm>& action,
                                   int basepoint);

// First homology of the branched cover determined by a Wirtinger-valid,
// transitive labeled link: Reidemeister-Schreier on the Wirtinger
// presentation, one filling relator per cycle of each component's meridian
// label, abelianization, Smith normal form.
AbelianGroup branched_h1(const LabeledLink& link);

}  // namespace bcov
