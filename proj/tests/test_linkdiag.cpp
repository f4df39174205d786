#include <algorithm>
#include <random>

#include "bcov/json_io.hpp"
#include "bcov/linkdiag.hpp"
#include "bcov/pdtext.hpp"
#include "doctest.h"

using namespace bcov;

namespace {

// Standard 3-crossing trefoil shape: crossing i has over arc i, under arcs
// i+1 -> i+2 (mod 3), all positive.
LabeledLink trefoil(int degree, const std::vector<std::string>& labels) {
    std::vector<Arc> arcs;
    for (int i = 0; i < 3; ++i) arcs.push_back(Arc{0, Perm::parse(labels[i], degree)});
    std::vector<Crossing> crossings;
    for (int i = 0; i < 3; ++i)
        crossings.push_back(Crossing{i, (i + 1) % 3, (i + 2) % 3, CrossSign::positive});
    return LabeledLink::build(degree, {Component{}}, std::move(arcs), std::move(crossings));
}

// Oracle: all transposition labelings of a shape by direct filtering,
// independent of the enumerator's pruning order.
int count_valid_labelings(const LabeledLink& shape, int d, bool transitive_only) {
    std::vector<Perm> transpositions;
    for (int a = 1; a <= d; ++a)
        for (int b = a + 1; b <= d; ++b) transpositions.push_back(Perm::transposition(d, a, b));
    const int narc = static_cast<int>(shape.arcs().size());
    int count = 0;
    std::vector<int> pick(narc, 0);
    for (;;) {
        std::vector<Perm> labels;
        for (int i = 0; i < narc; ++i) labels.push_back(transpositions[pick[i]]);
        LabeledLink candidate = shape.with_labels(labels);
        ValidityReport rep = wirtinger_check(candidate);
        if (rep.valid && (!transitive_only || rep.transitive)) ++count;
        int i = 0;
        while (i < narc && ++pick[i] == static_cast<int>(transpositions.size())) pick[i++] = 0;
        if (i == narc) break;
    }
    return count;
}

}  // namespace

TEST_CASE("trefoil shapes and wirtinger check") {
    LabeledLink constant = trefoil(2, {"(1 2)", "(1 2)", "(1 2)"});
    ValidityReport rep = wirtinger_check(constant);
    CHECK(rep.valid);
    CHECK(rep.simple);
    CHECK(rep.transitive);

    LabeledLink rainbow = trefoil(3, {"(1 2)", "(2 3)", "(1 3)"});
    rep = wirtinger_check(rainbow);
    CHECK(rep.valid);
    CHECK(rep.simple);
    CHECK(rep.transitive);

    LabeledLink bad = trefoil(3, {"(1 2)", "(2 3)", "(2 3)"});
    rep = wirtinger_check(bad);
    CHECK_FALSE(rep.valid);
    CHECK(rep.violations.size() >= 1);
}

TEST_CASE("meridian image") {
    LabeledLink rainbow = trefoil(3, {"(1 2)", "(2 3)", "(1 3)"});
    CHECK(meridian_image(rainbow, 1) == Perm::parse("(2 3)", 3));
    CHECK_THROWS_AS(meridian_image(rainbow, 7), Error);
}

TEST_CASE("structural validation errors") {
    // crossing referencing a missing arc
    CHECK_THROWS_AS(LabeledLink::build(2, {Component{}}, {Arc{0, Perm::parse("(1 2)", 2)}},
                                       {Crossing{0, 0, 5, CrossSign::positive}}),
                    Error);
    // under arcs on different components
    CHECK_THROWS_AS(
        LabeledLink::build(2, {Component{}, Component{}},
                           {Arc{0, Perm::parse("(1 2)", 2)}, Arc{1, Perm::parse("(1 2)", 2)}},
                           {Crossing{0, 0, 1, CrossSign::positive}}),
        Error);
    // label degree mismatch
    CHECK_THROWS_AS(LabeledLink::build(3, {Component{}}, {Arc{0, Perm::parse("(1 2)", 2)}}, {}),
                    Error);
    // dotted with framing
    Component bad;
    bad.dotted = true;
    bad.framing = 0;
    CHECK_THROWS_AS(LabeledLink::build(2, {bad}, {Arc{0, Perm::parse("(1 2)", 2)}}, {}), Error);
    // two arcs, no crossings joining them
    CHECK_THROWS_AS(
        LabeledLink::build(2, {Component{}},
                           {Arc{0, Perm::parse("(1 2)", 2)}, Arc{0, Perm::parse("(1 2)", 2)}}, {}),
        Error);
}

TEST_CASE("split union") {
    LabeledLink u = LabeledLink::unknot(2, Perm::parse("(1 2)", 2));
    LabeledLink uu = split_union(u, u);
    CHECK(uu.components().size() == 2);
    CHECK(uu.arcs().size() == 2);

    LabeledLink tre = trefoil(2, {"(1 2)", "(1 2)", "(1 2)"});
    CHECK(split_union(LabeledLink::empty(2), tre) == tre);

    LabeledLink u3 = LabeledLink::unknot(3, Perm::parse("(1 2)", 3));
    CHECK_THROWS_AS(split_union(u, u3), Error);
}

TEST_CASE("enumerate simple monodromies") {
    LabeledLink unknot = LabeledLink::unknot(2, Perm::parse("(1 2)", 2));
    auto found = enumerate_simple_monodromies(unknot, 2, false);
    REQUIRE(found.size() == 1);
    CHECK(found[0].arcs()[0].label == Perm::parse("(1 2)", 2));

    LabeledLink tre = trefoil(3, {"(1 2)", "(1 2)", "(1 2)"});
    CHECK(enumerate_simple_monodromies(tre, 3, true).size() == 6);
    CHECK(enumerate_simple_monodromies(tre, 2, false).size() == 1);

    // oracle agreement, transitive and not
    for (bool trans : {false, true}) {
        CHECK(static_cast<int>(enumerate_simple_monodromies(tre, 3, trans).size()) ==
              count_valid_labelings(tre, 3, trans));
        CHECK(static_cast<int>(enumerate_simple_monodromies(tre, 4, trans).size()) ==
              count_valid_labelings(tre, 4, trans));
    }

    // deterministic lexicographic order
    auto all3 = enumerate_simple_monodromies(tre, 3, false);
    for (size_t i = 1; i < all3.size(); ++i) {
        auto key = [](const LabeledLink& l) {
            std::string s;
            for (const auto& a : l.arcs()) s += a.label.to_string() + "|";
            return s;
        };
        CHECK(key(all3[i - 1]) < key(all3[i]));
    }

    CHECK_THROWS_AS(enumerate_simple_monodromies(tre, 9, false), Error);
}

TEST_CASE("enumeration closed under sheet renumbering") {
    LabeledLink tre = trefoil(3, {"(1 2)", "(1 2)", "(1 2)"});
    auto all = enumerate_simple_monodromies(tre, 3, false);
    // conjugating every label by a fixed permutation lands back in the set
    std::vector<Perm> gs = {Perm::parse("(1 2)", 3), Perm::parse("(1 2 3)", 3)};
    for (const Perm& g : gs) {
        for (const auto& link : all) {
            std::vector<Perm> relabeled;
            for (const auto& arc : link.arcs()) relabeled.push_back(conjugate(g, arc.label));
            LabeledLink moved = link.with_labels(relabeled);
            CHECK(std::find(all.begin(), all.end(), moved) != all.end());
        }
    }
}

TEST_CASE("wirtinger equivariance and crossing reversal") {
    std::mt19937 rng(4242);
    LabeledLink rainbow = trefoil(3, {"(1 2)", "(2 3)", "(1 3)"});
    for (int t = 0; t < 40; ++t) {
        std::vector<int> images{1, 2, 3};
        std::shuffle(images.begin(), images.end(), rng);
        Perm g(3, images);
        std::vector<Perm> relabeled;
        for (const auto& arc : rainbow.arcs()) relabeled.push_back(conjugate(g, arc.label));
        ValidityReport rep = wirtinger_check(rainbow.with_labels(relabeled));
        CHECK(rep.valid);
        CHECK(rep.simple);
        CHECK(rep.transitive);
    }

    // reversing a crossing sign and swapping under_in/under_out preserves validity
    LabeledLink constant = trefoil(2, {"(1 2)", "(1 2)", "(1 2)"});
    std::vector<Crossing> crossings = constant.crossings();
    for (auto& c : crossings) {
        std::swap(c.under_in, c.under_out);
        c.sign = opposite(c.sign);
    }
    LabeledLink reversed = LabeledLink::build(2, constant.components(), constant.arcs(), crossings);
    CHECK(wirtinger_check(reversed).valid);
}

TEST_CASE("text code round trips") {
    LabeledLink unknot = LabeledLink::unknot(2, Perm::parse("(1 2)", 2));
    CHECK(parse_code(serialize_code(unknot)) == unknot);
    CHECK(unknot.components().size() == 1);
    CHECK(unknot.arcs().size() == 1);
    CHECK(unknot.crossings().empty());

    LabeledLink tre = trefoil(2, {"(1 2)", "(1 2)", "(1 2)"});
    CHECK(parse_code(serialize_code(tre)) == tre);
    CHECK(tre.arcs().size() == 3);
    CHECK(tre.crossings().size() == 3);

    CHECK(serialize_code(LabeledLink::empty(4)) == "link degree=4\n");
    CHECK(parse_code("link degree=4\n") == LabeledLink::empty(4));

    // malformed inputs
    CHECK_THROWS_AS(parse_code("arc component=0 label=(1 2)\n"), ParseError);
    CHECK_THROWS_AS(parse_code("link degree=2\ncomponent +\narc component=0 label=(1 2)\n"
                               "crossing over=0 under_in=0 under_out=9 sign=+\n"),
                    ParseError);
    CHECK_THROWS_AS(parse_code("link degree=2\nfoo\n"), ParseError);
    // serialization is byte stable
    CHECK(serialize_code(tre) == serialize_code(parse_code(serialize_code(tre))));
}

TEST_CASE("json round trips") {
    LabeledLink tre = trefoil(3, {"(1 2)", "(2 3)", "(1 3)"});
    Json j = link_to_json(tre);
    CHECK(link_from_json(j) == tre);
    CHECK(dump_json(j) == dump_json(link_to_json(link_from_json(j))));

    LabeledLink kirbyish = LabeledLink::build(
        1,
        {Component{false, 2, false}, Component{false, std::nullopt, true}},
        {Arc{0, Perm::identity(1)}, Arc{1, Perm::identity(1)}}, {});
    CHECK(link_from_json(link_to_json(kirbyish)) == kirbyish);

    CHECK_THROWS_AS(link_from_json(Json::parse("{\"degree\": 2}")), ParseError);
}

TEST_CASE("equal up to renumbering") {
    LabeledLink tre = trefoil(2, {"(1 2)", "(1 2)", "(1 2)"});
    // rotate arc ids by hand: arcs 1,2,0 with crossings relabeled
    std::vector<Arc> arcs(3, Arc{0, Perm::parse("(1 2)", 2)});
    std::vector<Crossing> crossings;
    auto rot = [](int a) { return (a + 1) % 3; };
    for (const auto& c : tre.crossings())
        crossings.push_back(Crossing{rot(c.over), rot(c.under_in), rot(c.under_out), c.sign});
    std::swap(crossings[0], crossings[2]);
    LabeledLink rotated = LabeledLink::build(2, tre.components(), arcs, crossings);
    CHECK(equal_up_to_renumbering(tre, rotated));
    CHECK_FALSE(equal_up_to_renumbering(tre, LabeledLink::unknot(2, Perm::parse("(1 2)", 2))));

    LabeledLink u = LabeledLink::unknot(2, Perm::parse("(1 2)", 2));
    LabeledLink u2 = split_union(u, LabeledLink::unknot(2, Perm::parse("(1 2)", 2)));
    CHECK(equal_up_to_renumbering(u2, split_union(u, u)));
}
