#include "bcov/invariants.hpp"

#include <algorithm>
#include <deque>

namespace bcov {

CoverSummary cover_summary(const LabeledLink& link) {
    ValidityReport rep = wirtinger_check(link);
    if (!rep.valid) throw Error("cover summary requires a wirtinger-valid link");
    CoverSummary out;
    out.degree = link.degree();
    std::vector<Perm> labels;
    for (const auto& arc : link.arcs()) labels.push_back(arc.label);
    auto parts = orbits(labels, link.degree());
    out.component_count = static_cast<int>(parts.size());
    out.connected = out.component_count == 1;
    for (size_t c = 0; c < link.components().size(); ++c) {
        BranchPreimage pre;
        pre.component = static_cast<int>(c);
        const Perm& sigma = link.arcs()[link.component_arcs(static_cast<int>(c))[0]].label;
        std::vector<char> seen(link.degree() + 1, 0);
        for (int s = 1; s <= link.degree(); ++s) {
            if (seen[s]) continue;
            int len = 0;
            int x = s;
            do {
                seen[x] = 1;
                ++len;
                x = sigma.apply(x);
            } while (x != s);
            pre.cycle_lengths.push_back(len);
        }
        std::sort(pre.cycle_lengths.rbegin(), pre.cycle_lengths.rend());
        out.branch_preimages.push_back(std::move(pre));
    }
    return out;
}

int euler_cover_4d(int degree, const RibbonSurface& surface, BaseSpace base) {
    SurfaceReport rep = validate(surface);
    if (!rep.simple) throw Error("4-dimensional Euler characteristic requires simple labels");
    int chi_base = base == BaseSpace::B4 ? 1 : 2;
    return degree * chi_base - euler_char(surface);
}

std::pair<Presentation, std::vector<int>> wirtinger_presentation(const LabeledLink& link) {
    Presentation pres;
    pres.generators = static_cast<int>(link.arcs().size());
    for (const auto& c : link.crossings()) {
        int o = c.over + 1, i = c.under_in + 1, u = c.under_out + 1;
        // positive: x_out = x_over x_in x_over^-1; negative: conjugate the other way
        if (c.sign == CrossSign::positive)
            pres.relators.push_back({o, i, -o, -u});
        else
            pres.relators.push_back({-o, i, o, -u});
    }
    std::vector<int> arc_to_gen(link.arcs().size());
    for (size_t a = 0; a < arc_to_gen.size(); ++a) arc_to_gen[a] = static_cast<int>(a) + 1;
    return {std::move(pres), std::move(arc_to_gen)};
}

// --- Smith normal form ------------------------------------------------------

namespace {

BigInt abs_big(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

}  // namespace

SnfResult smith_normal_form(const IntMatrix& input) {
    IntMatrix m = input;
    const int rows = static_cast<int>(m.size());
    const int cols = rows ? static_cast<int>(m[0].size()) : 0;
    for (const auto& row : m)
        if (static_cast<int>(row.size()) != cols) throw Error("ragged matrix");

    SnfResult result;
    int r = 0, c = 0;
    while (r < rows && c < cols) {
        // find a nonzero pivot with minimal absolute value
        int pr = -1, pc = -1;
        BigInt best;
        for (int i = r; i < rows; ++i)
            for (int j = c; j < cols; ++j)
                if (m[i][j] != 0 && (pr == -1 || abs_big(m[i][j]) < best)) {
                    best = abs_big(m[i][j]);
                    pr = i;
                    pc = j;
                }
        if (pr == -1) break;
        std::swap(m[r], m[pr]);
        for (int i = 0; i < rows; ++i) std::swap(m[i][c], m[i][pc]);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (int i = r + 1; i < rows; ++i) {
                if (m[i][c] == 0) continue;
                BigInt q = m[i][c] / m[r][c];
                for (int j = c; j < cols; ++j) m[i][j] -= q * m[r][j];
                if (m[i][c] != 0) {
                    std::swap(m[r], m[i]);
                    clean = false;
                }
            }
            for (int j = c + 1; j < cols; ++j) {
                if (m[r][j] == 0) continue;
                BigInt q = m[r][j] / m[r][c];
                for (int i = r; i < rows; ++i) m[i][j] -= q * m[i][c];
                if (m[r][j] != 0) {
                    for (int i = 0; i < rows; ++i) std::swap(m[i][c], m[i][j]);
                    clean = false;
                }
            }
        }
        ++r;
        ++c;
    }

    std::vector<BigInt> diag;
    for (int i = 0; i < std::min(rows, cols); ++i)
        if (m[i][i] != 0) diag.push_back(abs_big(m[i][i]));

    // repair the divisibility chain
    for (size_t i = 0; i + 1 < diag.size(); ++i)
        for (size_t j = i + 1; j < diag.size(); ++j)
            if (diag[j] % diag[i] != 0) {
                BigInt g = boost::multiprecision::gcd(diag[i], diag[j]);
                BigInt l = diag[i] / g * diag[j];
                diag[i] = g;
                diag[j] = l;
            }
    std::sort(diag.begin(), diag.end());
    result.rank = static_cast<int>(diag.size());
    result.diagonal = std::move(diag);
    return result;
}

AbelianGroup abelianization(const Presentation& pres) {
    IntMatrix m;
    for (const auto& word : pres.relators) {
        std::vector<BigInt> row(pres.generators, 0);
        for (int letter : word) {
            if (letter == 0 || std::abs(letter) > pres.generators)
                throw Error("relator letter out of range");
            row[std::abs(letter) - 1] += letter > 0 ? 1 : -1;
        }
        m.push_back(std::move(row));
    }
    AbelianGroup out;
    if (pres.generators == 0) return out;
    if (m.empty()) {
        out.rank = pres.generators;
        return out;
    }
    SnfResult snf = smith_normal_form(m);
    out.rank = pres.generators - snf.rank;
    for (const BigInt& d : snf.diagonal)
        if (d > 1) out.torsion.push_back(d);
    return out;
}

// --- Reidemeister-Schreier ---------------------------------------------------

SchreierRewriter::SchreierRewriter(Presentation pres, std::vector<Perm> action, int basepoint)
    : pres_(std::move(pres)), action_(std::move(action)), basepoint_(basepoint) {
    if (static_cast<int>(action_.size()) != pres_.generators)
        throw Error("action must give one permutation per generator");
    if (action_.empty()) throw Error("presentation needs at least one generator");
    const int degree = action_[0].degree();
    for (const Perm& p : action_)
        if (p.degree() != degree) throw Error("action degree mismatch");
    if (basepoint < 1 || basepoint > degree) throw Error("basepoint outside the sheet set");

    // breadth-first Schreier transversal, generators in sorted order
    std::vector<char> seen(degree + 1, 0);
    schreier_.assign(pres_.generators, std::vector<int>(degree, -1));
    std::deque<int> queue{basepoint_};
    seen[basepoint_] = 1;
    while (!queue.empty()) {
        int sheet = queue.front();
        queue.pop_front();
        orbit_.push_back(sheet);
        for (int g = 0; g < pres_.generators; ++g) {
            int image = action_[g].apply(sheet);
            if (!seen[image]) {
                seen[image] = 1;
                schreier_[g][sheet - 1] = 0;  // tree edge, trivial Schreier generator
                queue.push_back(image);
            }
        }
    }
    // number the non-tree pairs over the orbit, sheets then generators sorted
    std::vector<int> sorted_orbit = orbit_;
    std::sort(sorted_orbit.begin(), sorted_orbit.end());
    for (int sheet : sorted_orbit)
        for (int g = 0; g < pres_.generators; ++g)
            if (schreier_[g][sheet - 1] == -1) schreier_[g][sheet - 1] = ++subgroup_generators_;
}

std::vector<int> SchreierRewriter::rewrite(std::span<const int> word, int start_sheet) const {
    const int n = static_cast<int>(word.size());
    // sheet before each letter acts: the rightmost letter acts first
    std::vector<int> sheet(n + 1);
    sheet[n] = start_sheet;
    for (int i = n - 1; i >= 0; --i) {
        int letter = word[i];
        int g = std::abs(letter) - 1;
        if (g < 0 || g >= pres_.generators) throw Error("word letter out of range");
        sheet[i] = letter > 0 ? action_[g].apply(sheet[i + 1])
                              : action_[g].inverse().apply(sheet[i + 1]);
    }
    if (sheet[0] != start_sheet)
        throw Error("word does not stabilize the start sheet in the rewrite");

    std::vector<int> out;
    for (int i = 0; i < n; ++i) {
        int letter = word[i];
        int g = std::abs(letter) - 1;
        // a positive letter crosses from sheet[i+1], a negative one is the
        // inverse of the crossing from sheet[i]
        int from_sheet = letter > 0 ? sheet[i + 1] : sheet[i];
        int id = schreier_[g][from_sheet - 1];
        if (id == -1) throw Error("rewrite start sheet is outside the orbit");
        if (id == 0) continue;  // tree edge
        int idx = letter > 0 ? id : -id;
        // free reduction on the fly
        if (!out.empty() && out.back() == -idx)
            out.pop_back();
        else
            out.push_back(idx);
    }
    return out;
}

Presentation SchreierRewriter::subgroup_presentation() const {
    Presentation out;
    out.generators = subgroup_generators_;
    std::vector<int> sorted_orbit = orbit_;
    std::sort(sorted_orbit.begin(), sorted_orbit.end());
    for (const auto& relator : pres_.relators)
        for (int sheet : sorted_orbit) {
            std::vector<int> w = rewrite(relator, sheet);
            out.relators.push_back(std::move(w));
        }
    return out;
}

Presentation reidemeister_schreier(const Presentation& pres, const std::vector<Perm>& action,
                                   int basepoint) {
    return SchreierRewriter(pres, action, basepoint).subgroup_presentation();
}

AbelianGroup branched_h1(const LabeledLink& link) {
    ValidityReport rep = wirtinger_check(link);
    if (!rep.valid) throw Error("branched homology requires a wirtinger-valid link");
    if (!rep.transitive)
        throw Error("branched homology requires a transitive labeling; see cover_summary for "
                    "the orbit decomposition");

    auto [pres, arc_to_gen] = wirtinger_presentation(link);
    std::vector<Perm> action;
    for (const auto& arc : link.arcs()) action.push_back(arc.label);
    SchreierRewriter rewriter(pres, action, 1);

    Presentation sub = rewriter.subgroup_presentation();

    // fill every preimage of the branch set: one relator per cycle of each
    // component's meridian label
    for (size_t c = 0; c < link.components().size(); ++c) {
        int arc = link.component_arcs(static_cast<int>(c))[0];
        const Perm& sigma = link.arcs()[arc].label;
        int gen = arc_to_gen[arc];
        std::vector<char> seen(link.degree() + 1, 0);
        for (int s = 1; s <= link.degree(); ++s) {
            if (seen[s]) continue;
            int len = 0;
            int x = s;
            do {
                seen[x] = 1;
                ++len;
                x = sigma.apply(x);
            } while (x != s);
            std::vector<int> word(len, gen);
            sub.relators.push_back(rewriter.rewrite(word, s));
        }
    }
    return abelianization(sub);
}

}  // namespace bcov
