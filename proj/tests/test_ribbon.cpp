#include "bcov/ribbon.hpp"

#include "bcov/linkdiag.hpp"
#include "doctest.h"

using namespace bcov;

namespace {

Perm t12(int d = 2) { return Perm::transposition(d, 1, 2); }

RibbonSurface single_disk(const std::string& role = "A0", int degree = 2) {
    Disk d;
    d.role = role;
    d.label = t12(degree);
    return RibbonSurface::build(degree, {d}, {}, {});
}

// one disk, one band from the disk back to itself, h half twists
RibbonSurface self_band(int half_twists) {
    Disk d;
    d.role = "A0";
    d.label = t12();
    d.boundary = {DiskEvent{DiskEvent::Kind::attach, 0, StrandRole::over},
                  DiskEvent{DiskEvent::Kind::attach, 1, StrandRole::over}};
    Band b;
    b.end1 = BandEnd{0, 0};
    b.end2 = BandEnd{0, 1};
    b.half_twists = half_twists;
    b.role = "A_loop";
    return RibbonSurface::build(2, {d}, {b}, {});
}

// re-embed a link's labels into a larger symmetric group
LabeledLink embed_link(const LabeledLink& link, int degree) {
    std::vector<Perm> labels;
    for (const auto& arc : link.arcs()) {
        std::vector<int> images(degree);
        for (int i = 1; i <= degree; ++i)
            images[i - 1] = i <= arc.label.degree() ? arc.label.apply(i) : i;
        labels.push_back(Perm(degree, std::move(images)));
    }
    std::vector<Arc> arcs = link.arcs();
    for (size_t i = 0; i < arcs.size(); ++i) arcs[i].label = labels[i];
    return LabeledLink::build(degree, link.components(), arcs, link.crossings());
}

}  // namespace

TEST_CASE("single disk validates and bounds an unknot") {
    RibbonSurface s = single_disk();
    SurfaceReport rep = validate(s);
    CHECK(rep.valid);
    CHECK(rep.simple);
    CHECK(euler_char(s) == 1);
    CHECK(boundary_component_count(s) == 1);

    LabeledLink boundary = boundary_link(s);
    CHECK(boundary.components().size() == 1);
    CHECK(boundary.arcs().size() == 1);
    CHECK(boundary.crossings().empty());
    CHECK(boundary.arcs()[0].label == t12());
}

TEST_CASE("flat annulus bounds a two component unlink") {
    RibbonSurface s = self_band(0);
    CHECK(validate(s).valid);
    CHECK(euler_char(s) == 0);
    CHECK(boundary_component_count(s) == 2);

    LabeledLink boundary = boundary_link(s);
    CHECK(boundary.components().size() == 2);
    CHECK(boundary.crossings().empty());
    for (const auto& arc : boundary.arcs()) CHECK(arc.label == t12());
}

TEST_CASE("moebius band bounds a one crossing unknot diagram") {
    RibbonSurface s = self_band(1);
    CHECK(euler_char(s) == 0);
    CHECK(boundary_component_count(s) == 1);

    LabeledLink boundary = boundary_link(s);
    CHECK(boundary.components().size() == 1);
    CHECK(boundary.crossings().size() == 1);
    CHECK(wirtinger_check(boundary).valid);

    // two half twists give a clasp between the two boundary circles
    LabeledLink hopf = boundary_link(self_band(2));
    CHECK(hopf.components().size() == 2);
    CHECK(hopf.crossings().size() == 2);
    CHECK(wirtinger_check(hopf).valid);

    LabeledLink neg = boundary_link(self_band(-3));
    CHECK(neg.components().size() == 1);
    CHECK(neg.crossings().size() == 3);
    CHECK(wirtinger_check(neg).valid);
}

TEST_CASE("ribbon passes are recorded and must pierce disks") {
    Disk hub;
    hub.role = "A0";
    hub.label = t12();
    hub.boundary = {DiskEvent{DiskEvent::Kind::attach, 0, StrandRole::over},
                    DiskEvent{DiskEvent::Kind::attach, 1, StrandRole::over}};
    Disk target;
    target.role = "B";
    target.label = t12();
    Band b;
    b.end1 = BandEnd{0, 0};
    b.end2 = BandEnd{0, 1};
    b.role = "A_loop";
    b.core = {CoreEvent{CoreEvent::Kind::pass, 0, StrandRole::over, EntityRef{EntityKind::disk, 1}}};
    RibbonSurface s = RibbonSurface::build(2, {hub, target}, {b}, {});
    CHECK(validate(s).valid);
    // passes do not create boundary crossings
    CHECK(boundary_link(s).crossings().empty());
    CHECK(boundary_link(s).components().size() == 3);

    Band bad = b;
    bad.core[0].pass_target = EntityRef{EntityKind::band, 0};
    RibbonSurface s2 = RibbonSurface::build(2, {hub, target}, {bad}, {});
    SurfaceReport rep = validate(s2);
    CHECK_FALSE(rep.valid);
    REQUIRE(rep.violations.size() == 1);
    CHECK(rep.violations[0].find("band-band") != std::string::npos);
}

TEST_CASE("validate reports label and site problems") {
    Disk d;
    d.role = "A0";
    d.label = t12(3);  // degree mismatch
    RibbonSurface s = RibbonSurface::build(2, {d}, {}, {});
    SurfaceReport rep = validate(s);
    CHECK_FALSE(rep.valid);

    // orphan site: attach event with no band
    Disk e;
    e.role = "A0";
    e.label = t12();
    e.boundary = {DiskEvent{DiskEvent::Kind::attach, 0, StrandRole::over}};
    rep = validate(RibbonSurface::build(2, {e}, {}, {}));
    CHECK_FALSE(rep.valid);
}

TEST_CASE("stabilization adds a trivial disk with the next transposition") {
    RibbonSurface s = self_band(0);
    RibbonSurface st = stabilize_surface(s);
    CHECK(st.degree() == 3);
    CHECK(euler_char(st) == euler_char(s) + 1);
    // d - chi is unchanged
    CHECK(st.degree() - euler_char(st) == s.degree() - euler_char(s));

    RibbonSurface stst = stabilize_surface(st);
    CHECK(stst.degree() == 4);
    CHECK(stst.disks().back().label == Perm::transposition(4, 3, 4));
    CHECK(stst.disks()[stst.disks().size() - 2].label == Perm::transposition(4, 2, 3));

    // boundary law: boundary(stab S) = boundary(S) split with a (d,d+1) unknot
    LabeledLink lhs = boundary_link(st);
    LabeledLink rhs = split_union(embed_link(boundary_link(s), 3),
                                  LabeledLink::unknot(3, Perm::transposition(3, 2, 3)));
    CHECK(equal_up_to_renumbering(lhs, rhs));
}

TEST_CASE("boundary component count matches the boundary link") {
    for (int h : {0, 1, 2, 3, -1, -2}) {
        RibbonSurface s = self_band(h);
        CHECK(boundary_component_count(s) ==
              static_cast<int>(boundary_link(s).components().size()));
    }
    RibbonSurface s = single_disk();
    CHECK(boundary_component_count(s) ==
          static_cast<int>(boundary_link(s).components().size()));
}

TEST_CASE("role audit checks construction bookkeeping") {
    // empty construction: two hub disks
    Disk a0;
    a0.role = "A0";
    a0.label = Perm::transposition(3, 1, 2);
    Disk b0;
    b0.role = "B0";
    b0.label = Perm::transposition(3, 2, 3);
    RibbonSurface empty_sk = RibbonSurface::build(3, {a0, b0}, {}, {});
    RoleAudit audit = ribbon_euler_role_audit(empty_sk);
    CHECK(audit.consistent);
    CHECK(audit.m == 0);
    CHECK(audit.n == 0);
    CHECK(audit.chi == 2);

    // one 1-handle: B0 + parallel pair + spanning disk + beta band
    Disk b0_attached = b0;
    b0_attached.boundary = {DiskEvent{DiskEvent::Kind::attach, 0, StrandRole::over}};
    Disk bpar;
    bpar.role = "B'";
    bpar.label = Perm::transposition(3, 2, 3);
    bpar.boundary = {DiskEvent{DiskEvent::Kind::attach, 0, StrandRole::over}};
    Disk bspan;
    bspan.role = "B";
    bspan.label = Perm::transposition(3, 2, 3);
    Band beta;
    beta.end1 = BandEnd{2, 0};  // B' -> B0
    beta.end2 = BandEnd{1, 0};
    beta.role = "beta";
    RibbonSurface one_handle = RibbonSurface::build(3, {a0, b0_attached, bpar, bspan}, {beta}, {});
    audit = ribbon_euler_role_audit(one_handle);
    CHECK(audit.consistent);
    CHECK(audit.m == 1);
    CHECK(audit.chi == 3);

    // corrupt: drop the beta band record
    RibbonSurface corrupted = RibbonSurface::build(3, {a0, b0_attached, bpar, bspan}, {}, {});
    audit = ribbon_euler_role_audit(corrupted);
    CHECK_FALSE(audit.consistent);

    // missing tags are an error
    Disk untagged;
    untagged.role = "";
    untagged.label = t12();
    CHECK_THROWS_AS(ribbon_euler_role_audit(RibbonSurface::build(2, {untagged}, {}, {})), Error);
}

TEST_CASE("stabilized boundary stays wirtinger valid") {
    RibbonSurface s = stabilize_surface(self_band(1));
    LabeledLink boundary = boundary_link(s);
    ValidityReport rep = wirtinger_check(boundary);
    CHECK(rep.valid);
    CHECK(rep.simple);
}
