#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <memory>

#include "uclone/catalog.hpp"
#include "uclone/formula.hpp"
#include "uclone/ppart.hpp"

using namespace uclone;

namespace {

const CloneCatalog& cat() {
    static CloneCatalog c(3);
    return c;
}

Language ie0_language() {
    Language g(2);
    g.add(table_weak_base("IE0")->renamed("Rw"));
    return g;
}

}  // namespace

TEST_CASE("meet- and zero-closed filters") {
    PartialOperation f = ie0_witness();
    CHECK(is_meet_closed(f));
    CHECK(is_zero_closed(f));

    PartialOperation g = PartialOperation::from_points(
        "g", 2, 2, {{{0, 1}, 1}, {{1, 0}, 1}});
    CHECK_FALSE(is_zero_closed(g));
    CHECK_FALSE(is_meet_closed(g));  // (0,1) ∧ (1,0) = (0,0) escapes the domain

    PartialOperation h = PartialOperation::from_points("h", 2, 2, {{{1, 1}, 0}});
    CHECK(is_meet_closed(h));
    CHECK_FALSE(is_zero_closed(h));
}

TEST_CASE("certify_not_upp on the canonical separation") {
    Language g = ie0_language();
    Relation target = rel_iff_and();
    CertifyResult r = certify_not_upp(g, target, ie0_witness(), SeparationRoute::IE0, cat());
    CHECK(r.certified);
    CHECK(r.reason.empty());

    // Dropping (0,0) from the domain breaks zero-closedness; the sample
    // domain is chosen meet-closed so the zero check is the one that fires.
    PartialOperation open = PartialOperation::from_points(
        "f", 2, 2, {{{0, 1}, 1}, {{1, 1}, 1}});
    r = certify_not_upp(g, target, open, SeparationRoute::IE0, cat());
    CHECK_FALSE(r.certified);
    CHECK(r.reason.find("zero") != std::string::npos);
    PartialOperation holey = PartialOperation::from_points(
        "f", 2, 2, {{{0, 1}, 1}, {{1, 0}, 1}});
    r = certify_not_upp(g, target, holey, SeparationRoute::IE0, cat());
    CHECK_FALSE(r.certified);
    CHECK(r.reason.find("meet") != std::string::npos);

    // F = {(0)} is preserved by the witness, so no separation there.
    r = certify_not_upp(g, rel_f(), ie0_witness(), SeparationRoute::IE0, cat());
    CHECK_FALSE(r.certified);
    CHECK(r.reason.find("preserves the target") != std::string::npos);

    // NAND2, although a member of the co-clone, is violated by the witness,
    // so it is certifiably outside the unique-existential closure too.
    r = certify_not_upp(g, rel_nand(2), ie0_witness(), SeparationRoute::IE0, cat());
    CHECK(r.certified);
    PreserveResult pr = preserves(ie0_witness(), rel_nand(2));
    CHECK_FALSE(pr.ok);

    // A language outside IE0 fails the precondition.
    Language ne(2);
    ne.add(rel_ne().renamed("Ne"));
    r = certify_not_upp(ne, target, ie0_witness(), SeparationRoute::IE0, cat());
    CHECK_FALSE(r.certified);
    CHECK(r.reason.find("precondition") != std::string::npos);
}

TEST_CASE("certified separations agree with the bounded search") {
    Language g = ie0_language();
    auto gp = std::make_shared<Language>(g);
    REQUIRE(certify_not_upp(g, rel_iff_and(), ie0_witness(), SeparationRoute::IE0, cat())
                .certified);
    FindUppResult s = find_upp(rel_iff_and(), gp, 1);
    CHECK_FALSE(s.found);
}

TEST_CASE("certified witnesses survive domain restriction") {
    Language g = ie0_language();
    Relation target = rel_iff_and();
    PartialOperation f = ie0_witness();
    // Restrict to {(0,0),(1,0)}: still meet-closed, zero-closed; check whether
    // the restriction still violates the target before requiring certification.
    PartialOperation sub = PartialOperation::from_points(
        "sub", 2, 2, {{{0, 0}, 0}, {{1, 0}, 1}});
    REQUIRE(sub.suboperation_of(f));
    if (!preserves(sub, target).ok) {
        CHECK(certify_not_upp(g, target, sub, SeparationRoute::IE0, cat()).certified);
    }
}

TEST_CASE("certify_frozen_collapse for the chain bases") {
    for (int n : {2, 3}) {
        std::string name = "IS11^" + std::to_string(n);
        const CloneEntry& e = cat().at_coclone(name);
        REQUIRE(e.weak_base.has_value());
        Language gw(2);
        gw.add(*e.weak_base);
        Language gp(2);
        for (const Relation& r : e.plain_base) gp.add(r);
        PartialOperation f = frozen_witness(n);
        CertifyResult r = certify_frozen_collapse(gw, gp, f, n);
        CHECK_MESSAGE(r.certified, name << ": " << r.reason);

        // Flipping the value at the origin must be rejected.
        std::vector<std::pair<Tuple, int>> pts;
        Tuple zero(n, 0);
        pts.push_back({zero, 1});
        for (int i = 0; i < n; ++i) {
            Tuple t(n, 0);
            t[i] = 1;
            pts.push_back({t, 1});
        }
        PartialOperation bad = PartialOperation::from_points("bad", n, 2, pts);
        CHECK_FALSE(certify_frozen_collapse(gw, gp, bad, n).certified);

        // The OR-side duals certify through the same entry point, with the
        // dual witness: defined on the all-one and weight-(n-1) points.
        std::string dual_name = "IS01^" + std::to_string(n);
        const CloneEntry& de = cat().at_coclone(dual_name);
        REQUIRE(de.weak_base.has_value());
        Language dw(2);
        dw.add(*de.weak_base);
        Language dp(2);
        for (const Relation& rr : de.plain_base) dp.add(rr);
        std::vector<std::pair<Tuple, int>> dpts;
        dpts.push_back({Tuple(n, 1), 1});
        for (int i = 0; i < n; ++i) {
            Tuple t(n, 1);
            t[i] = 0;
            dpts.push_back({t, 0});
        }
        PartialOperation df = PartialOperation::from_points("dw", n, 2, dpts);
        r = certify_frozen_collapse(dw, dp, df, n);
        CHECK_MESSAGE(r.certified, dual_name << ": " << r.reason);
    }
}

TEST_CASE("ie0_determined_shape examples") {
    DeterminedShape s = ie0_determined_shape(graph_of(Operation::b_and()), 3);
    CHECK(s.kind == DeterminedShape::Kind::Conjunction);
    CHECK(s.indices == std::vector<int>{1, 2});

    s = ie0_determined_shape(Relation::make("R", 2, 2, {{0, 0}, {1, 0}}), 2);
    CHECK(s.kind == DeterminedShape::Kind::Constant0);

    s = ie0_determined_shape(rel_nand(2), 2);
    CHECK(s.kind == DeterminedShape::Kind::NotDetermined);

    // Precondition: the relation must be preserved by ∧ and constant 0.
    CHECK_THROWS_AS(ie0_determined_shape(rel_or(2), 1), error);
}

TEST_CASE("conjunction witnesses reproduce the coordinate") {
    std::vector<Relation> rels = {graph_of(Operation::b_and()),
                                  Relation::make("R", 3, 2, {{0, 0, 0}, {1, 0, 0},
                                                             {0, 1, 0}, {0, 0, 1},
                                                             {1, 1, 1}}),
                                  Relation::make("R", 3, 2, {{0, 0, 0}, {1, 1, 1},
                                                             {1, 0, 0}, {0, 1, 0}})};
    for (const Relation& r : rels)
        for (int i = 1; i <= r.arity(); ++i) {
            DeterminedShape s = ie0_determined_shape(r, i);
            if (s.kind == DeterminedShape::Kind::Conjunction) {
                CHECK(determined(r, i, s.indices).yes);
                for (const Tuple& t : r.tuples()) {
                    std::uint8_t v = 1;
                    for (int j : s.indices) v = std::uint8_t(v & t[j - 1]);
                    CHECK(v == t[i - 1]);
                }
            } else if (s.kind == DeterminedShape::Kind::Constant0) {
                for (const Tuple& t : r.tuples()) CHECK(t[i - 1] == 0);
            }
        }
}

TEST_CASE("shipped witnesses have the documented shape") {
    PartialOperation f = ie0_witness();
    CHECK(f.arity() == 2);
    CHECK(f.dom_size() == 3);
    CHECK(f.eval({0, 0}) == 0);
    CHECK(f.eval({0, 1}) == 1);
    CHECK(f.eval({1, 0}) == 1);
    CHECK_FALSE(f.defined({1, 1}));

    for (int n : {2, 3, 4}) {
        PartialOperation w = frozen_witness(n);
        CHECK(w.arity() == n);
        CHECK(w.dom_size() == std::size_t(n + 1));
        CHECK(w.eval(Tuple(n, 0)) == 0);
        CHECK(is_meet_closed(w));
        CHECK(is_zero_closed(w));
    }
}
