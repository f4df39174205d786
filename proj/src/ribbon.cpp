#include "bcov/ribbon.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

namespace bcov {

namespace {

std::string entity_str(const EntityRef& e) {
    return (e.kind == EntityKind::disk ? "disk " : "band ") + std::to_string(e.index);
}

}  // namespace

RibbonSurface RibbonSurface::build(int degree, std::vector<Disk> disks, std::vector<Band> bands,
                                   std::vector<SurfCrossing> crossings) {
    if (degree < 1) throw Error("surface degree must be positive");
    const int ndisk = static_cast<int>(disks.size());
    const int nband = static_cast<int>(bands.size());
    const int ncross = static_cast<int>(crossings.size());

    auto check_entity = [&](const EntityRef& e) {
        int limit = e.kind == EntityKind::disk ? ndisk : nband;
        if (e.index < 0 || e.index >= limit)
            throw Error("crossing references missing " + entity_str(e));
    };
    for (const auto& c : crossings) {
        check_entity(c.over);
        check_entity(c.under);
    }
    for (const auto& b : bands) {
        if (b.end1.disk < 0 || b.end1.disk >= ndisk || b.end2.disk < 0 || b.end2.disk >= ndisk)
            throw Error("band end references missing disk");
        for (const auto& ev : b.core)
            if (ev.kind == CoreEvent::Kind::pass) {
                int limit = ev.pass_target.kind == EntityKind::disk ? ndisk : nband;
                if (ev.pass_target.index < 0 || ev.pass_target.index >= limit)
                    throw Error("ribbon pass references missing " + entity_str(ev.pass_target));
            }
    }

    // Every crossing id appears exactly once as an over event and once as an
    // under event, each on the entity the crossing table names.
    std::vector<int> over_seen(ncross, 0), under_seen(ncross, 0);
    auto record = [&](const EntityRef& self, int id, StrandRole role) {
        if (id < 0 || id >= ncross)
            throw Error("event references missing crossing " + std::to_string(id));
        const SurfCrossing& c = crossings[id];
        const EntityRef& expect = role == StrandRole::over ? c.over : c.under;
        if (!(expect == self))
            throw Error("crossing " + std::to_string(id) + " event on wrong entity " +
                        entity_str(self));
        int& seen = role == StrandRole::over ? over_seen[id] : under_seen[id];
        if (++seen > 1) throw Error("crossing " + std::to_string(id) + " has duplicate events");
    };
    for (int d = 0; d < ndisk; ++d)
        for (const auto& ev : disks[d].boundary)
            if (ev.kind == DiskEvent::Kind::cross)
                record(EntityRef{EntityKind::disk, d}, ev.id, ev.role);
    for (int b = 0; b < nband; ++b)
        for (const auto& ev : bands[b].core)
            if (ev.kind == CoreEvent::Kind::cross)
                record(EntityRef{EntityKind::band, b}, ev.id, ev.role);
    for (int i = 0; i < ncross; ++i)
        if (!over_seen[i] || !under_seen[i])
            throw Error("crossing " + std::to_string(i) + " missing over or under event");

    // attach events name their sites 0,1,2,... in boundary order
    for (int d = 0; d < ndisk; ++d) {
        int next_site = 0;
        for (const auto& ev : disks[d].boundary)
            if (ev.kind == DiskEvent::Kind::attach && ev.id != next_site++)
                throw Error("disk " + std::to_string(d) +
                            " attach events must be numbered in boundary order");
    }

    RibbonSurface s;
    s.degree_ = degree;
    s.disks_ = std::move(disks);
    s.bands_ = std::move(bands);
    s.crossings_ = std::move(crossings);
    return s;
}

SurfaceReport validate(const RibbonSurface& s) {
    SurfaceReport report;
    report.simple = true;

    for (size_t d = 0; d < s.disks().size(); ++d) {
        const Disk& disk = s.disks()[d];
        if (disk.label.degree() != s.degree())
            report.violations.push_back("disk " + std::to_string(d) + " label degree " +
                                        std::to_string(disk.label.degree()) +
                                        " does not match surface degree");
        if (!disk.label.is_transposition()) report.simple = false;
    }

    for (size_t b = 0; b < s.bands().size(); ++b)
        for (const auto& ev : s.bands()[b].core)
            if (ev.kind == CoreEvent::Kind::pass && ev.pass_target.kind != EntityKind::disk)
                report.violations.push_back("band " + std::to_string(b) +
                                            " records a band-band intersection; ribbon "
                                            "intersections must pierce disks");

    // attachment sites: the k-th attach event of a disk is site k; every site
    // is used by exactly one band end
    std::map<std::pair<int, int>, int> site_use;
    std::vector<int> attach_count(s.disks().size(), 0);
    for (size_t d = 0; d < s.disks().size(); ++d)
        for (const auto& ev : s.disks()[d].boundary)
            if (ev.kind == DiskEvent::Kind::attach) ++attach_count[d];
    auto use_site = [&](const BandEnd& end, size_t b, const char* which) {
        if (end.disk < 0 || end.disk >= static_cast<int>(s.disks().size())) {
            report.violations.push_back("band " + std::to_string(b) + " " + which +
                                        " references missing disk");
            return;
        }
        if (end.site < 0 || end.site >= attach_count[end.disk]) {
            report.violations.push_back("band " + std::to_string(b) + " " + which +
                                        " references missing site " + std::to_string(end.site) +
                                        " on disk " + std::to_string(end.disk));
            return;
        }
        if (++site_use[{end.disk, end.site}] > 1)
            report.violations.push_back("site " + std::to_string(end.site) + " of disk " +
                                        std::to_string(end.disk) + " used by several band ends");
    };
    for (size_t b = 0; b < s.bands().size(); ++b) {
        use_site(s.bands()[b].end1, b, "end1");
        use_site(s.bands()[b].end2, b, "end2");
    }
    for (size_t d = 0; d < s.disks().size(); ++d)
        for (int k = 0; k < attach_count[d]; ++k)
            if (!site_use.count({static_cast<int>(d), k}))
                report.violations.push_back("site " + std::to_string(k) + " of disk " +
                                            std::to_string(d) + " is not used by any band");

    // band end labels must agree after conjugation along the core
    if (report.violations.empty()) {
        // carried[b][k] = label of band b after its first k under-crossings
        std::vector<std::vector<Perm>> carried(s.bands().size());
        bool stable = false;
        int rounds = 0;
        int total_events = 0;
        for (const auto& band : s.bands()) total_events += static_cast<int>(band.core.size());
        int maxrounds = total_events + 2;
        while (!stable && rounds++ <= maxrounds) {
            stable = true;
            std::vector<std::vector<Perm>> next(s.bands().size());
            for (size_t b = 0; b < s.bands().size(); ++b) {
                const Band& band = s.bands()[b];
                Perm cur = s.disks()[band.end1.disk].label;
                std::vector<Perm> seq{cur};
                for (const auto& ev : band.core) {
                    if (ev.kind != CoreEvent::Kind::cross || ev.role != StrandRole::under)
                        continue;
                    const SurfCrossing& c = s.crossings()[ev.id];
                    Perm over(1);
                    if (c.over.kind == EntityKind::disk) {
                        over = s.disks()[c.over.index].label;
                    } else {
                        const Band& ob = s.bands()[c.over.index];
                        // the over band's carried label just before its own event
                        // for this crossing
                        int unders_before = 0;
                        for (const auto& oev : ob.core) {
                            if (oev.kind != CoreEvent::Kind::cross) continue;
                            if (oev.id == ev.id && oev.role == StrandRole::over) break;
                            if (oev.role == StrandRole::under) ++unders_before;
                        }
                        const auto& prev = carried[c.over.index];
                        over = unders_before < static_cast<int>(prev.size())
                                   ? prev[unders_before]
                                   : s.disks()[ob.end1.disk].label;
                    }
                    if (over.degree() == cur.degree()) cur = conjugate(over, cur);
                    seq.push_back(cur);
                }
                next[b] = std::move(seq);
            }
            if (next != carried) {
                carried = std::move(next);
                stable = false;
            }
        }
        if (!stable)
            report.violations.push_back("label propagation along bands did not stabilize");
        for (size_t b = 0; b < s.bands().size(); ++b) {
            const Band& band = s.bands()[b];
            if (carried[b].empty()) continue;
            const Perm& arrived = carried[b].back();
            const Perm& target = s.disks()[band.end2.disk].label;
            if (arrived.degree() == target.degree() && !(arrived == target))
                report.violations.push_back("band " + std::to_string(b) +
                                            " end labels disagree: carries " +
                                            arrived.to_string() + ", attaches to " +
                                            target.to_string());
        }
    }

    report.valid = report.violations.empty();
    return report;
}

int euler_char(const RibbonSurface& s) {
    return static_cast<int>(s.disks().size()) - static_cast<int>(s.bands().size());
}

// --- boundary doubling -----------------------------------------------------

namespace {

struct NodeInfo {
    int base_sign = 1;
    int over_arc = -1;
    bool over_rev = false;
    int under_in = -1, under_out = -1;
    bool under_rev = false;
    bool over_set = false, under_set = false;
};

struct Item {
    enum class Kind { inc, touch } kind = Kind::inc;
    int node = -1;
    StrandRole role = StrandRole::over;
    bool reversed = false;
    int disk = -1;  // touch
};

// terminal ids: attach corners and band-strand ends, densely numbered
struct Terminals {
    // attach corner: (disk, attach index, 0=arrive/1=depart)
    std::map<std::tuple<int, int, int>, int> attach;
    // strand end: (band, strand, 0=end1/1=end2)
    std::map<std::tuple<int, int, int>, int> strand;
    int count = 0;
    int get_attach(int d, int k, int corner) {
        auto [it, fresh] = attach.try_emplace({d, k, corner}, count);
        if (fresh) ++count;
        return it->second;
    }
    int get_strand(int b, int s, int end) {
        auto [it, fresh] = strand.try_emplace({b, s, end}, count);
        if (fresh) ++count;
        return it->second;
    }
};

struct Piece {
    int from = -1, to = -1;  // terminals; -1,-1 for a closed attachment-free disk
    std::vector<Item> items;
};

struct Traced {
    std::vector<std::vector<Item>> circles;
};

struct DoublingContext {
    const RibbonSurface& s;
    std::map<std::tuple<int, int, int>, int> cross_nodes;  // (crossing, over strand, under strand)
    std::map<std::pair<int, int>, int> twist_nodes;        // (band, twist index)
    std::vector<NodeInfo> nodes;

    explicit DoublingContext(const RibbonSurface& surf) : s(surf) {}

    int strand_count(const EntityRef& e) const { return e.kind == EntityKind::band ? 2 : 1; }

    int cross_node(int ci, int oi, int ui) {
        auto [it, fresh] = cross_nodes.try_emplace({ci, oi, ui}, static_cast<int>(nodes.size()));
        if (fresh) {
            NodeInfo info;
            info.base_sign = s.crossings()[ci].under_from_left ? 1 : -1;
            nodes.push_back(info);
        }
        return it->second;
    }
    int twist_node(int b, int t) {
        auto [it, fresh] = twist_nodes.try_emplace({b, t}, static_cast<int>(nodes.size()));
        if (fresh) {
            NodeInfo info;
            info.base_sign = s.bands()[b].half_twists > 0 ? 1 : -1;
            nodes.push_back(info);
        }
        return it->second;
    }

    // order of the other side's strands along this strand at a crossing
    std::vector<int> other_order(const SurfCrossing& c, StrandRole my_role) const {
        const EntityRef& other = my_role == StrandRole::over ? c.under : c.over;
        if (strand_count(other) == 1) return {0};
        bool f = c.under_from_left;
        if (my_role == StrandRole::over) return f ? std::vector<int>{1, 0} : std::vector<int>{0, 1};
        return f ? std::vector<int>{0, 1} : std::vector<int>{1, 0};
    }
};

}  // namespace

int boundary_component_count(const RibbonSurface& s) {
    SurfaceReport rep = validate(s);
    // count circles from attachment structure alone
    Terminals term;
    std::vector<std::pair<int, int>> links;  // splice pairs and piece pairs
    std::vector<int> attach_count(s.disks().size(), 0);
    for (size_t d = 0; d < s.disks().size(); ++d)
        for (const auto& ev : s.disks()[d].boundary)
            if (ev.kind == DiskEvent::Kind::attach) ++attach_count[d];
    int closed = 0;
    for (size_t d = 0; d < s.disks().size(); ++d) {
        int k = attach_count[d];
        if (k == 0) {
            ++closed;
            continue;
        }
        for (int i = 0; i < k; ++i)
            links.push_back({term.get_attach(static_cast<int>(d), i, 1),
                             term.get_attach(static_cast<int>(d), (i + 1) % k, 0)});
    }
    for (size_t b = 0; b < s.bands().size(); ++b) {
        const Band& band = s.bands()[b];
        if (band.end1.site >= attach_count[band.end1.disk] ||
            band.end2.site >= attach_count[band.end2.disk])
            throw Error("band attaches to a missing site; surface invalid: " +
                        (rep.violations.empty() ? std::string("?") : rep.violations.front()));
        bool odd = band.half_twists % 2 != 0;
        int bi = static_cast<int>(b);
        for (int strand = 0; strand < 2; ++strand) {
            links.push_back({term.get_strand(bi, strand, 0), term.get_strand(bi, strand, 1)});
        }
        // end1: arrive corner meets the right strand, depart the left
        links.push_back({term.get_attach(band.end1.disk, band.end1.site, 0),
                         term.get_strand(bi, 1, 0)});
        links.push_back({term.get_attach(band.end1.disk, band.end1.site, 1),
                         term.get_strand(bi, 0, 0)});
        // end2: arrive meets physical left on arrival, depart the other
        int arrive_strand = odd ? 1 : 0;
        links.push_back({term.get_attach(band.end2.disk, band.end2.site, 0),
                         term.get_strand(bi, arrive_strand, 1)});
        links.push_back({term.get_attach(band.end2.disk, band.end2.site, 1),
                         term.get_strand(bi, 1 - arrive_strand, 1)});
    }
    // circles in the multigraph where every terminal has exactly two links
    std::vector<std::vector<int>> adj(term.count);
    for (size_t i = 0; i < links.size(); ++i) {
        adj[links[i].first].push_back(static_cast<int>(i));
        adj[links[i].second].push_back(static_cast<int>(i));
    }
    std::vector<char> used(links.size(), 0);
    int circles = closed;
    for (size_t i = 0; i < links.size(); ++i) {
        if (used[i]) continue;
        ++circles;
        int at = links[i].second;
        used[i] = 1;
        for (;;) {
            int next = -1;
            for (int cand : adj[at])
                if (!used[cand]) {
                    next = cand;
                    break;
                }
            if (next == -1) break;
            used[next] = 1;
            at = links[next].first == at ? links[next].second : links[next].first;
        }
    }
    return circles;
}

LabeledLink boundary_link(const RibbonSurface& s) {
    {
        SurfaceReport rep = validate(s);
        // attachment integrity is required even to trace the boundary
        for (const auto& v : rep.violations)
            if (v.find("site") != std::string::npos || v.find("missing disk") != std::string::npos)
                throw Error("surface invalid: " + v);
    }

    DoublingContext ctx(s);

    // per-strand item lists; disk strands keep attach markers for slicing
    struct DiskEntry {
        bool attach = false;
        int site = -1;
        std::vector<Item> items;  // for cross events
    };
    std::vector<std::vector<DiskEntry>> disk_walk(s.disks().size());
    std::vector<std::array<std::vector<Item>, 2>> band_items(s.bands().size());

    for (size_t d = 0; d < s.disks().size(); ++d) {
        for (const auto& ev : s.disks()[d].boundary) {
            DiskEntry entry;
            if (ev.kind == DiskEvent::Kind::attach) {
                entry.attach = true;
                entry.site = ev.id;
            } else {
                const SurfCrossing& c = s.crossings()[ev.id];
                for (int other : ctx.other_order(c, ev.role)) {
                    Item item;
                    item.kind = Item::Kind::inc;
                    item.role = ev.role;
                    item.node = ev.role == StrandRole::over ? ctx.cross_node(ev.id, 0, other)
                                                            : ctx.cross_node(ev.id, other, 0);
                    entry.items.push_back(item);
                }
            }
            disk_walk[d].push_back(std::move(entry));
        }
    }

    for (size_t b = 0; b < s.bands().size(); ++b) {
        const Band& band = s.bands()[b];
        for (const auto& ev : band.core) {
            if (ev.kind != CoreEvent::Kind::cross) continue;
            const SurfCrossing& c = s.crossings()[ev.id];
            for (int strand = 0; strand < 2; ++strand) {
                for (int other : ctx.other_order(c, ev.role)) {
                    Item item;
                    item.kind = Item::Kind::inc;
                    item.role = ev.role;
                    item.node = ev.role == StrandRole::over
                                    ? ctx.cross_node(ev.id, strand, other)
                                    : ctx.cross_node(ev.id, other, strand);
                    band_items[b][strand].push_back(item);
                }
            }
        }
        int h = band.half_twists;
        int count = h < 0 ? -h : h;
        for (int t = 1; t <= count; ++t) {
            int node = ctx.twist_node(static_cast<int>(b), t);
            int phys_left = (t - 1) % 2 == 0 ? 0 : 1;  // strand currently on the left
            StrandRole left_role = h > 0 ? StrandRole::over : StrandRole::under;
            for (int strand = 0; strand < 2; ++strand) {
                Item item;
                item.kind = Item::Kind::inc;
                item.node = node;
                item.role = strand == phys_left
                                ? left_role
                                : (left_role == StrandRole::over ? StrandRole::under
                                                                 : StrandRole::over);
                band_items[b][strand].push_back(item);
            }
        }
    }

    // pieces and splices
    Terminals term;
    std::vector<Piece> pieces;
    std::vector<std::vector<Item>> free_circles;

    for (size_t d = 0; d < s.disks().size(); ++d) {
        const auto& walk = disk_walk[d];
        std::vector<int> attach_pos;
        for (size_t i = 0; i < walk.size(); ++i)
            if (walk[i].attach) attach_pos.push_back(static_cast<int>(i));
        Item touch;
        touch.kind = Item::Kind::touch;
        touch.disk = static_cast<int>(d);
        if (attach_pos.empty()) {
            std::vector<Item> circle{touch};
            for (const auto& entry : walk)
                circle.insert(circle.end(), entry.items.begin(), entry.items.end());
            free_circles.push_back(std::move(circle));
            continue;
        }
        const int k = static_cast<int>(attach_pos.size());
        for (int i = 0; i < k; ++i) {
            int from_pos = attach_pos[i];
            int to_pos = attach_pos[(i + 1) % k];
            Piece piece;
            piece.from = term.get_attach(static_cast<int>(d), walk[from_pos].site, 1);
            piece.to = term.get_attach(static_cast<int>(d), walk[to_pos].site, 0);
            piece.items.push_back(touch);
            int pos = (from_pos + 1) % static_cast<int>(walk.size());
            while (pos != to_pos) {
                piece.items.insert(piece.items.end(), walk[pos].items.begin(),
                                   walk[pos].items.end());
                pos = (pos + 1) % static_cast<int>(walk.size());
            }
            pieces.push_back(std::move(piece));
        }
    }

    for (size_t b = 0; b < s.bands().size(); ++b) {
        for (int strand = 0; strand < 2; ++strand) {
            Piece piece;
            piece.from = term.get_strand(static_cast<int>(b), strand, 0);
            piece.to = term.get_strand(static_cast<int>(b), strand, 1);
            piece.items = band_items[b][strand];
            pieces.push_back(std::move(piece));
        }
    }

    // splice pairs: terminal -> terminal
    std::vector<int> mate;
    auto splice = [&](int a, int b) {
        if (std::max(a, b) >= static_cast<int>(mate.size())) mate.resize(std::max(a, b) + 1, -1);
        mate[a] = b;
        mate[b] = a;
    };
    for (size_t b = 0; b < s.bands().size(); ++b) {
        const Band& band = s.bands()[b];
        bool odd = band.half_twists % 2 != 0;
        int bi = static_cast<int>(b);
        splice(term.get_attach(band.end1.disk, band.end1.site, 0), term.get_strand(bi, 1, 0));
        splice(term.get_attach(band.end1.disk, band.end1.site, 1), term.get_strand(bi, 0, 0));
        int arrive_strand = odd ? 1 : 0;
        splice(term.get_attach(band.end2.disk, band.end2.site, 0),
               term.get_strand(bi, arrive_strand, 1));
        splice(term.get_attach(band.end2.disk, band.end2.site, 1),
               term.get_strand(bi, 1 - arrive_strand, 1));
    }

    // trace circles through pieces and splices
    std::map<int, std::pair<int, bool>> piece_at;  // terminal -> (piece, is_from)
    for (size_t p = 0; p < pieces.size(); ++p) {
        piece_at[pieces[p].from] = {static_cast<int>(p), true};
        piece_at[pieces[p].to] = {static_cast<int>(p), false};
    }
    std::vector<char> visited(pieces.size(), 0);
    std::vector<std::vector<Item>> circles = free_circles;
    for (size_t start = 0; start < pieces.size(); ++start) {
        if (visited[start]) continue;
        std::vector<Item> circle;
        int p = static_cast<int>(start);
        bool forward = true;
        for (;;) {
            visited[p] = 1;
            const Piece& piece = pieces[p];
            if (forward) {
                circle.insert(circle.end(), piece.items.begin(), piece.items.end());
            } else {
                for (auto it = piece.items.rbegin(); it != piece.items.rend(); ++it) {
                    Item item = *it;
                    item.reversed = !item.reversed;
                    circle.push_back(item);
                }
            }
            int out_terminal = forward ? piece.to : piece.from;
            if (out_terminal < 0 || out_terminal >= static_cast<int>(mate.size()) ||
                mate[out_terminal] < 0)
                throw Error("surface boundary does not close up (invalid attachments)");
            int in_terminal = mate[out_terminal];
            auto it = piece_at.find(in_terminal);
            if (it == piece_at.end()) throw Error("surface boundary does not close up");
            p = it->second.first;
            forward = it->second.second;
            if (p == static_cast<int>(start) && forward) break;
        }
        circles.push_back(std::move(circle));
    }

    // assemble the labeled link
    std::vector<Component> components;
    std::vector<Arc> arcs;
    std::vector<Crossing> crossings;
    std::vector<std::set<int>> arc_touches;
    auto& nodes = ctx.nodes;

    for (const auto& circle : circles) {
        int comp = static_cast<int>(components.size());
        components.push_back(Component{});
        std::vector<int> under_positions;
        for (size_t i = 0; i < circle.size(); ++i)
            if (circle[i].kind == Item::Kind::inc && circle[i].role == StrandRole::under)
                under_positions.push_back(static_cast<int>(i));

        if (under_positions.empty()) {
            int arc = static_cast<int>(arcs.size());
            arcs.push_back(Arc{comp, Perm::identity(s.degree())});
            arc_touches.emplace_back();
            for (const auto& item : circle) {
                if (item.kind == Item::Kind::touch)
                    arc_touches[arc].insert(item.disk);
                else {
                    NodeInfo& node = nodes[item.node];
                    node.over_arc = arc;
                    node.over_rev = item.reversed;
                    node.over_set = true;
                }
            }
            continue;
        }

        const int cuts = static_cast<int>(under_positions.size());
        int first_arc = static_cast<int>(arcs.size());
        for (int k = 0; k < cuts; ++k) {
            arcs.push_back(Arc{comp, Perm::identity(s.degree())});
            arc_touches.emplace_back();
        }
        // arc k runs from just after under_positions[k-1] to under_positions[k]
        for (int k = 0; k < cuts; ++k) {
            int arc = first_arc + k;
            int begin = (under_positions[(k + cuts - 1) % cuts] + 1) %
                        static_cast<int>(circle.size());
            int end = under_positions[k];  // inclusive cut point
            int i = begin;
            for (;;) {
                const Item& item = circle[i];
                if (item.kind == Item::Kind::touch) {
                    arc_touches[arc].insert(item.disk);
                } else if (i == end) {
                    NodeInfo& node = nodes[item.node];
                    node.under_in = arc;
                    node.under_out = first_arc + (k + 1) % cuts;
                    node.under_rev = item.reversed;
                    node.under_set = true;
                } else {
                    NodeInfo& node = nodes[item.node];
                    node.over_arc = arc;
                    node.over_rev = item.reversed;
                    node.over_set = true;
                }
                if (i == end) break;
                i = (i + 1) % static_cast<int>(circle.size());
            }
        }
    }

    for (size_t n = 0; n < nodes.size(); ++n) {
        const NodeInfo& node = nodes[n];
        if (!node.over_set || !node.under_set)
            throw Error("internal doubling error: crossing not fully traced");
        int sign = node.base_sign * (node.over_rev ? -1 : 1) * (node.under_rev ? -1 : 1);
        crossings.push_back(Crossing{node.over_arc, node.under_in, node.under_out,
                                     sign > 0 ? CrossSign::positive : CrossSign::negative});
    }

    // labels: seed from touched disks, then propagate through crossings
    std::vector<std::optional<Perm>> labels(arcs.size());
    for (size_t a = 0; a < arcs.size(); ++a) {
        for (int d : arc_touches[a]) {
            const Perm& seed = s.disks()[d].label;
            if (seed.degree() != s.degree())
                throw Error("disk " + std::to_string(d) + " label degree mismatch");
            if (labels[a] && !(*labels[a] == seed))
                throw Error("label propagation conflict: arc touches disks with labels " +
                            labels[a]->to_string() + " and " + seed.to_string());
            labels[a] = seed;
        }
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& c : crossings) {
            if (!labels[c.over]) continue;
            const Perm& a = *labels[c.over];
            bool pos = c.sign == CrossSign::positive;
            if (labels[c.under_in]) {
                Perm expect = pos ? conjugate(a, *labels[c.under_in])
                                  : conjugate(a.inverse(), *labels[c.under_in]);
                if (!labels[c.under_out]) {
                    labels[c.under_out] = expect;
                    changed = true;
                } else if (!(*labels[c.under_out] == expect)) {
                    throw Error("label propagation conflict at a crossing of the doubled "
                                "boundary");
                }
            } else if (labels[c.under_out]) {
                Perm expect = pos ? conjugate(a.inverse(), *labels[c.under_out])
                                  : conjugate(a, *labels[c.under_out]);
                labels[c.under_in] = expect;
                changed = true;
            }
        }
    }
    for (size_t a = 0; a < arcs.size(); ++a) {
        if (!labels[a]) throw Error("label propagation could not reach arc " + std::to_string(a));
        arcs[a].label = *labels[a];
    }

    return LabeledLink::build(s.degree(), std::move(components), std::move(arcs),
                              std::move(crossings));
}

RibbonSurface stabilize_surface(const RibbonSurface& s) {
    int d = s.degree();
    auto embed = [&](const Perm& p) {
        std::vector<int> images(d + 1);
        for (int i = 1; i <= d; ++i) images[i - 1] = p.apply(i);
        images[d] = d + 1;
        return Perm(d + 1, std::move(images));
    };
    std::vector<Disk> disks = s.disks();
    for (auto& disk : disks) disk.label = embed(disk.label);
    Disk extra;
    extra.role = disk_role::stab;
    extra.label = Perm::transposition(d + 1, d, d + 1);
    disks.push_back(extra);
    return RibbonSurface::build(d + 1, std::move(disks), s.bands(), s.crossings());
}

namespace {

RoleAudit role_audit_impl(const RibbonSurface& s) {
    RoleAudit audit;
    audit.chi = euler_char(s);
    int a0 = 0, b0 = 0, spanning = 0;
    int loops = 0, alphas = 0, betas = 0, gammas = 0;
    for (const auto& disk : s.disks()) {
        if (disk.role == disk_role::hub_a)
            ++a0;
        else if (disk.role == disk_role::hub_b)
            ++b0;
        else if (disk.role == disk_role::seed)
            ++audit.n;
        else if (disk.role == disk_role::spanning)
            ++spanning;
        else if (disk.role == disk_role::parallel)
            ++audit.m;
        else if (disk.role == disk_role::pattern)
            ++audit.l;
        else if (disk.role == disk_role::stab)
            ++audit.stabs;
        else if (disk.role == disk_role::blowup)
            ++audit.blowups;
        else
            throw Error("disk without a construction role tag: '" + disk.role + "'");
    }
    for (const auto& band : s.bands()) {
        if (band.role == band_role::loop)
            ++loops;
        else if (band.role == band_role::alpha)
            ++alphas;
        else if (band.role == band_role::beta)
            ++betas;
        else if (band.role == band_role::gamma)
            ++gammas;
        else
            throw Error("band without a construction role tag: '" + band.role + "'");
    }
    auto complain = [&](const std::string& msg) { audit.problems.push_back(msg); };
    if (a0 != 1) complain("expected exactly one A-side hub disk");
    if (b0 != 1) complain("expected exactly one B-side hub disk");
    if (spanning != audit.m) complain("spanning disks do not match parallel copies");
    if (loops != audit.n + audit.blowups) complain("loop bands do not match framed annuli");
    if (alphas != audit.n + audit.blowups) complain("connecting bands to the A hub mismatched");
    if (betas != audit.m) complain("connecting bands to the B hub mismatched");
    if (gammas != audit.l) complain("pattern disk connectors mismatched");
    int expected_chi = 2 + audit.m - audit.n + audit.stabs - audit.blowups;
    if (audit.chi != expected_chi)
        complain("Euler characteristic " + std::to_string(audit.chi) + " differs from expected " +
                 std::to_string(expected_chi));
    audit.consistent = audit.problems.empty();
    return audit;
}

}  // namespace

RoleAudit ribbon_euler_role_audit(const RibbonSurface& s) {
    return role_audit_impl(s);
}

}  // namespace bcov
