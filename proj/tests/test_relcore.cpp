#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "uclone/relation.hpp"

using namespace uclone;

namespace {

Relation or2() { return Relation::make("OR2", 2, 2, {{0, 1}, {1, 0}, {1, 1}}); }
Relation nand2() { return Relation::make("NAND2", 2, 2, {{0, 0}, {0, 1}, {1, 0}}); }

}  // namespace

TEST_CASE("apply_op componentwise") {
    CHECK(*apply_op(Operation::b_and(), {{0, 1}, {1, 0}}) == Tuple{0, 0});
    CHECK(*apply_op(Operation::b_xor3(), {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}) ==
          Tuple{1, 1, 1});
    CHECK(*apply_op(Operation::projection(2, 1, 2), {{0, 1}, {1, 0}}) == Tuple{0, 1});
    PartialOperation f = PartialOperation::from_points(
        "f", 2, 2, {{{0, 0}, 0}, {{0, 1}, 1}, {{1, 0}, 1}});
    CHECK_FALSE(apply_op(f, {{0, 1}, {1, 1}}).has_value());
}

TEST_CASE("preserves with witnesses") {
    PreserveResult bad = preserves(Operation::b_and(), or2());
    CHECK_FALSE(bad.ok);
    // The witness rows really violate preservation.
    auto img = apply_op(Operation::b_and(), bad.witness);
    REQUIRE(img.has_value());
    CHECK_FALSE(or2().contains(*img));
    CHECK(preserves(Operation::b_and(), nand2()).ok);
    CHECK(preserves(Operation::b_and(), Relation::empty_rel(2, 2)).ok);
}

TEST_CASE("pol small languages") {
    Language ne(2);
    ne.add(Relation::make("Ne", 2, 2, {{0, 1}, {1, 0}}));
    std::vector<Operation> p = pol(ne, 1);
    REQUIRE(p.size() == 2);
    CHECK(p[0].same_table(Operation::projection(1, 1, 2)));
    CHECK(p[1].same_table(Operation::b_not()));

    Language g(2);
    g.add(or2());
    p = pol(g, 1);
    REQUIRE(p.size() == 2);
    CHECK(p[0].same_table(Operation::projection(1, 1, 2)));
    CHECK(p[1].same_table(Operation::constant(1, 1, 2)));

    Language empty(2);
    CHECK(pol(empty, 1).size() == 4);
}

TEST_CASE("ppol examples") {
    Language eq(2);
    eq.add(Relation::eq(2));
    CHECK(ppol(eq, 1).size() == 9);

    Language g(2);
    g.add(or2());
    std::vector<PartialOperation> ps = ppol(g, 1);
    PartialOperation inc = PartialOperation::from_points("inc", 1, 2, {{{0}, 1}});
    PartialOperation dec = PartialOperation::from_points("dec", 1, 2, {{{1}, 0}});
    bool has_inc = false, has_dec = false;
    for (const PartialOperation& f : ps) {
        has_inc = has_inc || f.same_table(inc);
        has_dec = has_dec || f.same_table(dec);
    }
    CHECK(has_inc);
    CHECK_FALSE(has_dec);
    PreserveResult w = preserves(dec, or2());
    CHECK_FALSE(w.ok);
    CHECK(w.witness == std::vector<Tuple>{{1, 1}});
}

TEST_CASE("determined arguments") {
    DeterminedResult d = determined(Relation::eq(2), 2, {1});
    CHECK(d.yes);
    CHECK(d.witness.at({0}) == 0);
    CHECK(d.witness.at({1}) == 1);

    d = determined(nand2(), 2, {1});
    CHECK_FALSE(d.yes);
    CHECK(d.counterexample.first[0] == d.counterexample.second[0]);
    CHECK(d.counterexample.first[1] != d.counterexample.second[1]);

    Relation r3 = Relation::make("R", 2, 3, {{0, 0}, {1, 1}, {2, 0}});
    CHECK(determined(r3, 2, {1}).yes);
}

TEST_CASE("determined is monotone in S") {
    Relation r = Relation::make("R", 3, 2, {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
    CHECK_FALSE(determined(r, 3, {1}).yes);
    CHECK(determined(r, 3, {1, 2}).yes);
}

TEST_CASE("arg_kind classification") {
    CHECK(arg_kind(Relation::make("R", 2, 2, {{0, 0}, {1, 1}}), 2).kind ==
          ArgKind::Kind::Redundant);
    CHECK(arg_kind(Relation::full(2, 2), 2).kind == ArgKind::Kind::Fictitious);
    ArgKind k = arg_kind(Relation::make("R", 2, 2, {{1, 0}, {1, 1}}), 1);
    CHECK(k.kind == ArgKind::Kind::Constant);
    CHECK(k.d == 1);
    CHECK(arg_kind(or2(), 1).kind == ArgKind::Kind::None);
}

TEST_CASE("duality") {
    CHECK(dual_op(Operation::b_and()).same_table(Operation::b_or()));
    CHECK(dual_rel(Relation::make("R", 2, 2, {{0, 1}})).same_tuples(
        Relation::make("R", 2, 2, {{1, 0}})));
    Relation ne = Relation::make("Ne", 2, 2, {{0, 1}, {1, 0}});
    CHECK(dual_rel(ne).same_tuples(ne));
    // Involutive.
    CHECK(dual_rel(dual_rel(or2())).same_tuples(or2()));
    CHECK(dual_op(dual_op(Operation::b_maj_n())).same_table(Operation::b_maj_n()));
}

TEST_CASE("duality transport of preservation") {
    std::vector<Operation> ops = {Operation::b_and(), Operation::b_or(),
                                  Operation::b_not(), Operation::b_maj(),
                                  Operation::b_impl(), Operation::constant(1, 0, 2)};
    std::vector<Relation> rels = {or2(), nand2(), Relation::eq(2),
                                  Relation::make("T", 1, 2, {{1}}),
                                  Relation::make("R", 3, 2, {{0, 0, 1}, {1, 1, 0}})};
    for (const Operation& f : ops)
        for (const Relation& r : rels)
            CHECK(preserves(f, r).ok == preserves(dual_op(f), dual_rel(r)).ok);
}

TEST_CASE("projections preserve everything") {
    std::vector<Relation> rels = {or2(), nand2(), Relation::eq(2),
                                  Relation::empty_rel(3, 2), Relation::full(2, 3)};
    for (const Relation& r : rels)
        for (int k = 1; k <= 3; ++k)
            for (int i = 1; i <= k; ++i)
                CHECK(preserves(Operation::projection(k, i, r.domain()), r).ok);
}

TEST_CASE("graph_of") {
    CHECK(graph_of(Operation::b_not())
              .same_tuples(Relation::make("R", 2, 2, {{0, 1}, {1, 0}})));
    CHECK(graph_of(Operation::b_and())
              .same_tuples(Relation::make("R", 3, 2,
                                          {{0, 0, 0}, {0, 1, 0}, {1, 0, 0}, {1, 1, 1}})));
    CHECK(graph_of(Operation::constant(1, 0, 2))
              .same_tuples(Relation::make("R", 2, 2, {{0, 0}, {1, 0}})));
    // Last argument is determined with the operation's own table as witness.
    Operation maj = Operation::b_maj();
    Relation g = graph_of(maj);
    DeterminedResult d = determined(g, 4, {1, 2, 3});
    REQUIRE(d.yes);
    for (const auto& [args, v] : d.witness) CHECK(maj.eval(args) == v);
}

TEST_CASE("total operation preserves iff its total partial view does") {
    std::vector<Operation> ops = {Operation::b_and(), Operation::b_xor(),
                                  Operation::b_maj()};
    std::vector<Relation> rels = {or2(), nand2(), Relation::eq(2)};
    for (const Operation& f : ops)
        for (const Relation& r : rels)
            CHECK(preserves(f, r).ok == preserves(PartialOperation::total(f), r).ok);
}

TEST_CASE("relation mask and tuple views agree") {
    for (const Relation& r : {or2(), nand2(), Relation::full(3, 2)}) {
        Relation back = Relation::from_mask(r.name(), r.arity(), r.domain(), r.mask());
        CHECK(back.same_tuples(r));
    }
}

TEST_CASE("project with duplicates and reorder") {
    Relation r = Relation::make("R", 3, 2, {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}});
    CHECK(project(r, {3, 1}).same_tuples(
        Relation::make("P", 2, 2, {{0, 0}, {0, 1}, {1, 0}})));
    CHECK(project(r, {1, 1}).same_tuples(Relation::make("P", 2, 2, {{0, 0}, {1, 1}})));
}

TEST_CASE("suboperation ordering") {
    PartialOperation f = PartialOperation::from_points("f", 1, 2, {{{0}, 1}});
    PartialOperation g =
        PartialOperation::from_points("g", 1, 2, {{{0}, 1}, {{1}, 0}});
    CHECK(f.suboperation_of(g));
    CHECK_FALSE(g.suboperation_of(f));
    PartialOperation h = PartialOperation::from_points("h", 1, 2, {{{0}, 0}});
    CHECK_FALSE(h.suboperation_of(g));
}
