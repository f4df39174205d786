#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bcov/linkdiag.hpp"
#include "bcov/perm.hpp"

namespace bcov {

enum class EntityKind { disk, band };

struct EntityRef {
    EntityKind kind = EntityKind::disk;
    int index = 0;
    bool operator==(const EntityRef&) const = default;
};

enum class StrandRole { over, under };

// Event on a disk boundary, in cyclic counterclockwise order. The role says
// whether the boundary strand is the over or the under side of the crossing;
// it is explicit so self-crossing entities stay unambiguous.
struct DiskEvent {
    enum class Kind { attach, cross };
    Kind kind = Kind::attach;
    int id = 0;  // attach: site index; cross: crossing id
    StrandRole role = StrandRole::over;
    bool operator==(const DiskEvent&) const = default;
};

// Event along a band core, ordered from end1 to end2. Half twists sit after
// the last core event, just before end2.
struct CoreEvent {
    enum class Kind { cross, pass };
    Kind kind = Kind::cross;
    int id = 0;  // cross: crossing id
    StrandRole role = StrandRole::over;
    EntityRef pass_target;  // pass: pierced entity (must be a disk for validity)
    bool operator==(const CoreEvent&) const = default;
};

struct BandEnd {
    int disk = 0;
    int site = 0;
    bool operator==(const BandEnd&) const = default;
};

struct Disk {
    std::string role;
    Perm label{1};
    std::vector<DiskEvent> boundary;
    bool operator==(const Disk&) const = default;
};

struct Band {
    BandEnd end1, end2;
    int half_twists = 0;
    std::string role;
    std::vector<CoreEvent> core;
    bool operator==(const Band&) const = default;
};

// A crossing of the planar projection between band cores and disk boundaries.
// under_from_left: the under strand approaches from the left of the over
// entity's direction (band: core direction; disk boundary: counterclockwise).
struct SurfCrossing {
    EntityRef over, under;
    bool under_from_left = true;
    bool operator==(const SurfCrossing&) const = default;
};

// Disk-and-band presentation of a labeled ribbon surface. Immutable.
class RibbonSurface {
public:
    // Enforces referential integrity (ranges, one over and one under event per
    // crossing on the right entities). Softer invariants are validate()'s job.
    static RibbonSurface build(int degree, std::vector<Disk> disks, std::vector<Band> bands,
                               std::vector<SurfCrossing> crossings);

    int degree() const { return degree_; }
    const std::vector<Disk>& disks() const { return disks_; }
    const std::vector<Band>& bands() const { return bands_; }
    const std::vector<SurfCrossing>& crossings() const { return crossings_; }

    bool operator==(const RibbonSurface&) const = default;

private:
    RibbonSurface() = default;
    int degree_ = 1;
    std::vector<Disk> disks_;
    std::vector<Band> bands_;
    std::vector<SurfCrossing> crossings_;
};

struct SurfaceReport {
    bool valid = false;
    std::vector<std::string> violations;
    bool simple = false;  // all labels transpositions
};

// Checks the ribbon invariants: passes pierce disks only, labels have the
// stated degree, attachment sites are used exactly once, band end labels are
// compatible under propagation. Failures are data, not errors.
SurfaceReport validate(const RibbonSurface& s);

// Disks minus bands.
int euler_char(const RibbonSurface& s);

// Number of boundary circles, from attachment bookkeeping alone.
int boundary_component_count(const RibbonSurface& s);

// The labeled boundary link: each band core doubled into two parallel strands
// (blackboard framing plus stored half twists), closed along disk boundaries.
// Labels are seeded from disk labels and propagated by the Wirtinger rule.
// Throws Error on label propagation conflict.
LabeledLink boundary_link(const RibbonSurface& s);

// Adds one disjoint trivial disk labeled (d, d+1) and raises the degree.
RibbonSurface stabilize_surface(const RibbonSurface& s);

struct RoleAudit {
    int m = 0;       // parallel disk pairs (1-handles)
    int n = 0;       // framed annuli (2-handles)
    int l = 0;       // small pierced disks at switched crossings
    int stabs = 0;
    int blowups = 0;
    int chi = 0;
    bool consistent = false;
    std::vector<std::string> problems;
};

// Recomputes the construction counts from role tags and checks the Euler
// characteristic bookkeeping chi = 2 + m - n (+ stabilizations - blowups).
// Throws Error when role tags are missing.
RoleAudit ribbon_euler_role_audit(const RibbonSurface& s);

namespace disk_role {
inline constexpr const char* hub_a = "A0";
inline constexpr const char* seed = "A";
inline constexpr const char* hub_b = "B0";
inline constexpr const char* spanning = "B";
inline constexpr const char* parallel = "B'";
inline constexpr const char* pattern = "C";
inline constexpr const char* stab = "stab";
inline constexpr const char* blowup = "blowup";
}  // namespace disk_role

namespace band_role {
inline constexpr const char* loop = "A_loop";
inline constexpr const char* alpha = "alpha";
inline constexpr const char* beta = "beta";
inline constexpr const char* gamma = "gamma";
}  // namespace band_role

}  // namespace bcov
