#include "bcov/linkdiag.hpp"

#include <algorithm>
#include <numeric>

namespace bcov {

LabeledLink LabeledLink::build(int degree, std::vector<Component> components,
                               std::vector<Arc> arcs, std::vector<Crossing> crossings) {
    if (degree < 1) throw Error("link degree must be positive");
    const int ncomp = static_cast<int>(components.size());
    const int narc = static_cast<int>(arcs.size());

    for (const auto& comp : components)
        if (comp.dotted && comp.framing.has_value())
            throw Error("a dotted component cannot carry a framing");

    for (const auto& arc : arcs) {
        if (arc.component < 0 || arc.component >= ncomp)
            throw Error("arc references missing component " + std::to_string(arc.component));
        if (arc.label.degree() != degree)
            throw Error("arc label degree " + std::to_string(arc.label.degree()) +
                        " does not match link degree " + std::to_string(degree));
    }

    std::vector<int> succ(narc, -1);
    std::vector<int> pred(narc, -1);
    for (size_t ci = 0; ci < crossings.size(); ++ci) {
        const auto& c = crossings[ci];
        if (c.over < 0 || c.over >= narc || c.under_in < 0 || c.under_in >= narc ||
            c.under_out < 0 || c.under_out >= narc)
            throw Error("crossing " + std::to_string(ci) + " references missing arc");
        if (arcs[c.under_in].component != arcs[c.under_out].component)
            throw Error("crossing " + std::to_string(ci) +
                        " joins under arcs of different components");
        if (succ[c.under_in] != -1)
            throw Error("arc " + std::to_string(c.under_in) + " ends at two crossings");
        if (pred[c.under_out] != -1)
            throw Error("arc " + std::to_string(c.under_out) + " starts at two crossings");
        succ[c.under_in] = c.under_out;
        pred[c.under_out] = c.under_in;
    }

    // Arcs with no undercrossing close up on themselves; a component is a
    // single successor cycle through all of its arcs.
    std::vector<std::vector<int>> per_comp(ncomp);
    for (int a = 0; a < narc; ++a) per_comp[arcs[a].component].push_back(a);
    for (int c = 0; c < ncomp; ++c) {
        const auto& list = per_comp[c];
        if (list.empty()) throw Error("component " + std::to_string(c) + " has no arcs");
        bool any_cut = false;
        for (int a : list) any_cut = any_cut || succ[a] != -1;
        if (!any_cut) {
            if (list.size() != 1)
                throw Error("component " + std::to_string(c) +
                            " has several arcs but no crossings joining them");
            succ[list[0]] = list[0];
            continue;
        }
        for (int a : list)
            if (succ[a] == -1 || pred[a] == -1)
                throw Error("arc " + std::to_string(a) + " is not closed up by crossings");
        int seen = 0;
        int a = list[0];
        do {
            ++seen;
            a = succ[a];
        } while (a != list[0] && seen <= static_cast<int>(list.size()));
        if (seen != static_cast<int>(list.size()))
            throw Error("component " + std::to_string(c) + " is not a single arc cycle");
    }

    LabeledLink link;
    link.degree_ = degree;
    link.components_ = std::move(components);
    link.arcs_ = std::move(arcs);
    link.crossings_ = std::move(crossings);
    link.successor_ = std::move(succ);
    return link;
}

LabeledLink LabeledLink::empty(int degree) {
    return build(degree, {}, {}, {});
}

LabeledLink LabeledLink::unknot(int degree, const Perm& label, std::optional<int> framing,
                                bool dotted) {
    Component comp;
    comp.framing = framing;
    comp.dotted = dotted;
    return build(degree, {comp}, {Arc{0, label}}, {});
}

int LabeledLink::arc_successor(int arc) const {
    if (arc < 0 || arc >= static_cast<int>(arcs_.size()))
        throw Error("arc id out of range: " + std::to_string(arc));
    return successor_[arc];
}

std::vector<int> LabeledLink::component_arcs(int component) const {
    if (component < 0 || component >= static_cast<int>(components_.size()))
        throw Error("component id out of range: " + std::to_string(component));
    int first = -1;
    for (size_t a = 0; a < arcs_.size(); ++a)
        if (arcs_[a].component == component) {
            first = static_cast<int>(a);
            break;
        }
    std::vector<int> out;
    int a = first;
    do {
        out.push_back(a);
        a = successor_[a];
    } while (a != first);
    return out;
}

LabeledLink LabeledLink::with_labels(const std::vector<Perm>& labels) const {
    if (labels.size() != arcs_.size()) throw Error("label list length mismatch");
    std::vector<Arc> arcs = arcs_;
    for (size_t i = 0; i < arcs.size(); ++i) arcs[i].label = labels[i];
    return build(labels.empty() ? degree_ : labels[0].degree(), components_, std::move(arcs),
                 crossings_);
}

ValidityReport wirtinger_check(const LabeledLink& link) {
    ValidityReport report;
    for (size_t ci = 0; ci < link.crossings().size(); ++ci) {
        const auto& c = link.crossings()[ci];
        const Perm& a = link.arcs()[c.over].label;
        const Perm& b = link.arcs()[c.under_in].label;
        Perm expected = c.sign == CrossSign::positive ? conjugate(a, b) : conjugate(a.inverse(), b);
        const Perm& found = link.arcs()[c.under_out].label;
        if (!(expected == found))
            report.violations.push_back({static_cast<int>(ci), expected, found});
    }
    report.valid = report.violations.empty();
    report.simple = true;
    std::vector<Perm> labels;
    for (const auto& arc : link.arcs()) {
        labels.push_back(arc.label);
        if (!arc.label.is_transposition()) report.simple = false;
    }
    report.transitive = !labels.empty() && is_transitive(labels, link.degree());
    return report;
}

Perm meridian_image(const LabeledLink& link, int arc) {
    if (arc < 0 || arc >= static_cast<int>(link.arcs().size()))
        throw Error("arc id out of range: " + std::to_string(arc));
    return link.arcs()[arc].label;
}

LabeledLink split_union(const LabeledLink& a, const LabeledLink& b) {
    if (a.degree() != b.degree())
        throw Error("split union degree mismatch: " + std::to_string(a.degree()) + " vs " +
                    std::to_string(b.degree()));
    std::vector<Component> components = a.components();
    components.insert(components.end(), b.components().begin(), b.components().end());
    std::vector<Arc> arcs = a.arcs();
    const int comp_shift = static_cast<int>(a.components().size());
    const int arc_shift = static_cast<int>(a.arcs().size());
    for (const Arc& arc : b.arcs()) arcs.push_back(Arc{arc.component + comp_shift, arc.label});
    std::vector<Crossing> crossings = a.crossings();
    for (const Crossing& c : b.crossings())
        crossings.push_back(
            Crossing{c.over + arc_shift, c.under_in + arc_shift, c.under_out + arc_shift, c.sign});
    return LabeledLink::build(a.degree(), std::move(components), std::move(arcs),
                              std::move(crossings));
}

std::vector<LabeledLink> enumerate_simple_monodromies(const LabeledLink& shape, int degree,
                                                      bool transitive_only,
                                                      const EnumerationBounds& bounds) {
    if (degree < 2 || degree > bounds.max_degree)
        throw Error("enumeration degree " + std::to_string(degree) + " outside bounds");
    const int narc = static_cast<int>(shape.arcs().size());
    if (narc > bounds.max_arcs)
        throw Error("enumeration arc count " + std::to_string(narc) + " outside bounds");

    std::vector<Perm> transpositions;
    for (int a = 1; a <= degree; ++a)
        for (int b = a + 1; b <= degree; ++b)
            transpositions.push_back(Perm::transposition(degree, a, b));

    // Crossings become checkable once their highest-numbered arc is assigned.
    std::vector<std::vector<int>> checks(narc);
    for (size_t ci = 0; ci < shape.crossings().size(); ++ci) {
        const auto& c = shape.crossings()[ci];
        int last = std::max({c.over, c.under_in, c.under_out});
        checks[last].push_back(static_cast<int>(ci));
    }

    std::vector<LabeledLink> out;
    std::vector<int> choice(narc, 0);
    std::vector<Perm> labels;
    labels.reserve(narc);

    auto consistent_here = [&](int arc_index) {
        for (int ci : checks[arc_index]) {
            const auto& c = shape.crossings()[ci];
            const Perm& a = labels[c.over];
            const Perm& b = labels[c.under_in];
            Perm expected =
                c.sign == CrossSign::positive ? conjugate(a, b) : conjugate(a.inverse(), b);
            if (!(expected == labels[c.under_out])) return false;
        }
        return true;
    };

    // Depth-first over lexicographically ordered transposition tuples.
    int depth = 0;
    if (narc == 0) return out;
    while (true) {
        if (choice[depth] == static_cast<int>(transpositions.size())) {
            choice[depth] = 0;
            if (depth == 0) break;
            --depth;
            labels.pop_back();
            ++choice[depth];
            continue;
        }
        labels.push_back(transpositions[choice[depth]]);
        if (!consistent_here(depth)) {
            labels.pop_back();
            ++choice[depth];
            continue;
        }
        if (depth + 1 == narc) {
            if (!transitive_only || is_transitive(labels, degree))
                out.push_back(shape.with_labels(labels));
            labels.pop_back();
            ++choice[depth];
        } else {
            ++depth;
        }
    }
    return out;
}

namespace {

using Key = std::vector<long long>;

Key renumber_key(const LabeledLink& link, const std::vector<int>& comp_order,
                 const std::vector<int>& start_arcs) {
    const int narc = static_cast<int>(link.arcs().size());
    std::vector<int> arc_new(narc, -1);
    int next = 0;
    for (int c : comp_order) {
        int a = start_arcs[c];
        do {
            arc_new[a] = next++;
            a = link.arc_successor(a);
        } while (a != start_arcs[c]);
    }
    Key key;
    key.push_back(link.degree());
    for (size_t pos = 0; pos < comp_order.size(); ++pos) {
        const Component& comp = link.components()[comp_order[pos]];
        key.push_back(comp.reversed ? 1 : 0);
        key.push_back(comp.framing ? 1 : 0);
        key.push_back(comp.framing.value_or(0));
        key.push_back(comp.dotted ? 1 : 0);
    }
    std::vector<int> arc_old(narc);
    for (int a = 0; a < narc; ++a) arc_old[arc_new[a]] = a;
    for (int a = 0; a < narc; ++a) {
        const Arc& arc = link.arcs()[arc_old[a]];
        int cpos = 0;
        for (size_t i = 0; i < comp_order.size(); ++i)
            if (comp_order[i] == arc.component) cpos = static_cast<int>(i);
        key.push_back(cpos);
        for (int s = 1; s <= link.degree(); ++s) key.push_back(arc.label.apply(s));
    }
    std::vector<std::array<long long, 4>> crossings;
    for (const auto& c : link.crossings())
        crossings.push_back({arc_new[c.over], arc_new[c.under_in], arc_new[c.under_out],
                             c.sign == CrossSign::positive ? 0 : 1});
    std::sort(crossings.begin(), crossings.end());
    for (const auto& c : crossings) key.insert(key.end(), c.begin(), c.end());
    return key;
}

Key canonical_key(const LabeledLink& link) {
    const int ncomp = static_cast<int>(link.components().size());
    std::vector<std::vector<int>> arcs_of(ncomp);
    for (int c = 0; c < ncomp; ++c) arcs_of[c] = link.component_arcs(c);

    std::vector<int> comp_order(ncomp);
    std::iota(comp_order.begin(), comp_order.end(), 0);
    Key best;
    std::vector<int> start(ncomp, 0);
    do {
        // every choice of starting arc per component
        std::vector<size_t> idx(ncomp, 0);
        for (;;) {
            std::vector<int> starts(ncomp);
            for (int c = 0; c < ncomp; ++c) starts[c] = arcs_of[c][idx[c]];
            Key key = renumber_key(link, comp_order, starts);
            if (best.empty() || key < best) best = std::move(key);
            int c = 0;
            while (c < ncomp && ++idx[c] == arcs_of[c].size()) idx[c++] = 0;
            if (c == ncomp) break;
            if (ncomp == 0) break;
        }
        if (ncomp == 0) break;
    } while (std::next_permutation(comp_order.begin(), comp_order.end()));
    if (ncomp == 0) best.push_back(link.degree());
    return best;
}

}  // namespace

bool equal_up_to_renumbering(const LabeledLink& a, const LabeledLink& b) {
    if (a.degree() != b.degree()) return false;
    if (a.components().size() != b.components().size()) return false;
    if (a.arcs().size() != b.arcs().size()) return false;
    if (a.crossings().size() != b.crossings().size()) return false;
    return canonical_key(a) == canonical_key(b);
}

}  // namespace bcov
