#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <vector>

#include "uclone/catalog.hpp"

using namespace uclone;

namespace {

const CloneCatalog& cat() {
    static CloneCatalog c(3);
    return c;
}

Language single(const Relation& r) {
    Language g(r.domain());
    g.add(r);
    return g;
}

// All k-ary Boolean operations satisfying the entry's defining properties.
std::vector<Operation> property_fragment(const CloneEntry& e, int k) {
    std::vector<Operation> out;
    std::uint64_t cells = pow_u64(2, pow_u64(2, k));
    for (std::uint64_t code = 0; code < cells; ++code) {
        std::vector<std::uint8_t> table(pow_u64(2, k));
        for (std::size_t i = 0; i < table.size(); ++i) table[i] = (code >> i) & 1;
        Operation f = Operation::make("f", k, 2, table);
        if (e.contains(f)) out.push_back(f);
    }
    return out;
}

bool same_op_set(std::vector<Operation> a, std::vector<Operation> b) {
    auto key = [](const Operation& f) { return f.table(); };
    auto lt = [&](const Operation& x, const Operation& y) { return key(x) < key(y); };
    std::sort(a.begin(), a.end(), lt);
    std::sort(b.begin(), b.end(), lt);
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].same_table(b[i])) return false;
    return true;
}

}  // namespace

TEST_CASE("catalog shape") {
    CHECK(cat().entries().size() == 54);
    CHECK(cat().find("E2") != nullptr);
    CHECK(cat().find("S11^3") != nullptr);
    CHECK(cat().find("S11^4") == nullptr);
    CHECK(cat().find_coclone("ID2") != nullptr);
    CHECK(cat().at("BF").coclone == "IBF");
    for (const CloneEntry& e : cat().entries()) {
        CHECK(e.coclone == "I" + e.name);
        const CloneEntry* d = cat().find(e.dual_name);
        REQUIRE(d != nullptr);
        CHECK(d->dual_name == e.name);
        // Generators really belong to the clone they generate.
        for (const Operation& f : e.generators) CHECK(e.contains(f));
    }
}

TEST_CASE("catalog fragments match the defining properties") {
    for (const CloneEntry& e : cat().entries())
        for (int k = 1; k <= 2; ++k)
            CHECK_MESSAGE(same_op_set(clone_fragment(e.generators, k),
                                      property_fragment(e, k)),
                          e.name << " arity " << k);
    for (const char* name : {"I2", "I0", "N2", "L2", "D", "E2", "V2", "E0", "V1",
                             "S11^2", "S00^2", "M2", "R2"})
        CHECK_MESSAGE(same_op_set(clone_fragment(cat().at(name).generators, 3),
                                  property_fragment(cat().at(name), 3)),
                      name << " arity 3");
}

TEST_CASE("clone order and covers") {
    const CloneEntry& i2 = cat().at("I2");
    const CloneEntry& bf = cat().at("BF");
    for (const CloneEntry& e : cat().entries()) {
        CHECK(cat().clone_leq(e, e));
        CHECK(cat().clone_leq(i2, e));
        CHECK(cat().clone_leq(e, bf));
    }
    // Duality is an order anti-automorphism on the catalog order... it is an
    // automorphism composed with swapping sides of each dual pair:
    for (const CloneEntry& a : cat().entries())
        for (const CloneEntry& b : cat().entries())
            CHECK(cat().clone_leq(a, b) ==
                  cat().clone_leq(cat().at(a.dual_name), cat().at(b.dual_name)));
    // Covers are strict and have nothing in between.
    for (const CloneEntry& e : cat().entries())
        for (const CloneEntry* c : cat().covers_of(e)) {
            CHECK(cat().clone_leq(e, *c));
            CHECK_FALSE(cat().clone_leq(*c, e));
        }
}

TEST_CASE("weak bases sit in their co-clone and separate strict pairs") {
    int shipped = 0;
    for (const CloneEntry& e : cat().entries()) {
        if (!e.weak_base) continue;
        ++shipped;
        for (const Operation& f : e.generators) CHECK(preserves(f, *e.weak_base).ok);
        if (cat().find(e.dual_name)->weak_base) {
            // The dual entry's data equals the dual relation up to coordinate
            // bookkeeping: both pin down the same polymorphism sets.
            const Relation& dw = *cat().find(e.dual_name)->weak_base;
            Language a(2), b(2);
            a.add(dual_rel(*e.weak_base).renamed("A"));
            b.add(dw.renamed("B"));
            for (int k = 1; k <= 2; ++k) {
                std::vector<Operation> pa = pol(a, k), pb = pol(b, k);
                CHECK(same_op_set(pa, pb));
            }
        }
    }
    CHECK(shipped >= 20);
    for (const CloneEntry& a : cat().entries()) {
        if (!a.weak_base) continue;
        for (const CloneEntry& b : cat().entries()) {
            if (!cat().clone_leq(a, b) || cat().clone_leq(b, a)) continue;
            // Inv(a) strictly contains Inv(b): b must break a's weak base.
            bool broken = std::any_of(
                b.generators.begin(), b.generators.end(),
                [&](const Operation& f) { return !preserves(f, *a.weak_base).ok; });
            CHECK_MESSAGE(broken, a.name << " weak base vs " << b.name);
        }
    }
}

TEST_CASE("plain bases are preserved by their clone") {
    for (const CloneEntry& e : cat().entries())
        for (const Relation& r : e.plain_base)
            for (const Operation& f : e.generators)
                CHECK_MESSAGE(preserves(f, r).ok, e.name << " / " << r.name());
}

TEST_CASE("atom_profile examples") {
    AtomProfile p = atom_profile(single(rel_one_in_three()));
    CHECK(p.all_false());

    p = atom_profile(single(rel_nand(2)));
    CHECK(p.c0);
    CHECK(p.meet);
    CHECK(p.maj);
    CHECK_FALSE(p.c1);
    CHECK_FALSE(p.neg);
    CHECK_FALSE(p.join);
    CHECK_FALSE(p.minority);

    p = atom_profile(single(rel_ne()));
    CHECK(p.neg);
    CHECK(p.maj);
    CHECK(p.minority);
    CHECK_FALSE(p.c0);
    CHECK_FALSE(p.c1);
    CHECK_FALSE(p.meet);
    CHECK_FALSE(p.join);

    p = atom_profile(single(rel_r5_zero()));
    CHECK(p.exactly_c0());
}

TEST_CASE("usat_class trichotomy examples") {
    CHECK(usat_class(single(rel_r5())).kind == UsatVerdict::Kind::USComplete);
    CHECK(usat_class(single(rel_one_in_three())).kind == UsatVerdict::Kind::USComplete);
    CHECK(usat_class(single(rel_r5_zero())).kind == UsatVerdict::Kind::CoNPComplete);
    CHECK(usat_class(single(dual_rel(rel_r5_zero()))).kind ==
          UsatVerdict::Kind::CoNPComplete);

    UsatVerdict v = usat_class(single(rel_ne()));
    CHECK(v.kind == UsatVerdict::Kind::Tractable);
    CHECK(v.reason == "complement-closed");
    v = usat_class(single(rel_nand(2)));
    CHECK(v.kind == UsatVerdict::Kind::Tractable);
    CHECK(v.reason == "Schaefer-enumerable");
    v = usat_class(single(rel_even(3)));
    CHECK(v.kind == UsatVerdict::Kind::Tractable);
    CHECK(v.reason == "Schaefer-enumerable");
    v = usat_class(single(rel_impl()));
    CHECK(v.kind == UsatVerdict::Kind::Tractable);
    CHECK(v.reason == "both-constants");
    CHECK(usat_class(single(Relation::full(2, 2))).kind ==
          UsatVerdict::Kind::Tractable);
}

TEST_CASE("usat_class is invariant under Eq and duplicates") {
    std::vector<Relation> rels = {rel_r5(), rel_r5_zero(), rel_ne(), rel_nand(2),
                                  rel_one_in_three()};
    for (const Relation& r : rels) {
        Language g = single(r);
        Language g2 = g;
        g2.add(Relation::eq(2).renamed("EqX"));
        g2.add(r.renamed(r.name() + "_copy"));
        UsatVerdict a = usat_class(g), b = usat_class(g2);
        CHECK(a.kind == b.kind);
        CHECK(a.reason == b.reason);
        UsatVerdict d = usat_class(single(dual_rel(r)));
        CHECK(a.kind == d.kind);
    }
}

TEST_CASE("identify_coclone examples") {
    CocloneId id = identify_coclone(single(rel_ne()), cat());
    CHECK(id.exact);
    CHECK(id.name == "ID");
    id = identify_coclone(single(rel_nand(2)), cat());
    CHECK(id.exact);
    CHECK(id.name == "IS1^2");
    id = identify_coclone(single(Relation::eq(2)), cat());
    CHECK(id.exact);
    CHECK(id.name == "IBF");
    id = identify_coclone(single(rel_one_in_three()), cat());
    CHECK(id.exact);
    CHECK(id.name == "II2");
    // Beyond the chain bound only an interval is reported.
    id = identify_coclone(single(rel_nand(5)), cat());
    CHECK_FALSE(id.exact);
    CHECK(!id.lower.empty());
    CHECK(!id.upper.empty());
}

TEST_CASE("identification agrees with the atom profile") {
    std::vector<Relation> rels = {rel_ne(),  rel_nand(2), rel_or(2),  rel_impl(),
                                  rel_t(),   rel_f(),     rel_even(3), rel_r5(),
                                  rel_r5_zero(), rel_one_in_three(), rel_iff_and()};
    for (const Relation& r : rels) {
        Language g = single(r);
        AtomProfile p = atom_profile(g);
        CocloneId id = identify_coclone(g, cat());
        if (!id.exact) continue;
        CHECK((id.name == "II2") == p.all_false());
        const CloneEntry& e = cat().at_coclone(id.name);
        // Each profile bit is exactly membership of that minimal clone.
        CHECK(p.c0 == e.contains(Operation::constant(1, 0, 2)));
        CHECK(p.c1 == e.contains(Operation::constant(1, 1, 2)));
        CHECK(p.neg == e.contains(Operation::b_not()));
        CHECK(p.meet == e.contains(Operation::b_and()));
        CHECK(p.join == e.contains(Operation::b_or()));
        CHECK(p.maj == e.contains(Operation::b_maj()));
        CHECK(p.minority == e.contains(Operation::b_xor3()));
    }
}

TEST_CASE("covered_verdict examples") {
    CHECK(covered_verdict("ID2", cat()) == Covered::Covered);
    CHECK(covered_verdict("IBF", cat()) == Covered::Covered);
    CHECK(covered_verdict("IE0", cat()) == Covered::NotCovered);
    CHECK(covered_verdict("IE", cat()) == Covered::NotCovered);
    CHECK(covered_verdict("IV1", cat()) == Covered::NotCovered);
    CHECK(covered_verdict("IV", cat()) == Covered::NotCovered);
    CHECK(covered_verdict("IS11^3", cat()) == Covered::FrozenCollapse);
    CHECK(covered_verdict("IS01^2", cat()) == Covered::FrozenCollapse);
    CHECK(covered_verdict("IS01", cat()) == Covered::FrozenCollapse);
    CHECK(covered_verdict("IS11", cat()) == Covered::FrozenCollapse);
    CHECK(covered_verdict("IS12^2", cat()) == Covered::Covered);
}

TEST_CASE("covered_verdict respects duality") {
    for (const CloneEntry& e : cat().entries())
        CHECK(e.covered == cat().at(e.dual_name).covered);
}

TEST_CASE("ucsp_class examples") {
    UcspVerdict v = ucsp_class(single(rel_one_in_three()));
    CHECK(v.kind == UcspVerdict::Kind::USComplete);
    CHECK(v.exact);
    v = ucsp_class(single(rel_r5_zero()));
    CHECK(v.kind == UcspVerdict::Kind::CoNPComplete);
    CHECK(v.exact);
    CHECK(v.const_value == 0);
    // A {0,1}-valued relation over a three-element domain is out of scope of
    // the exact classification.
    Language g3(3);
    g3.add(Relation::make("OneInThree3", 3, 3, rel_one_in_three().tuples()));
    v = ucsp_class(g3);
    CHECK(v.kind == UcspVerdict::Kind::Other);
    CHECK_FALSE(v.exact);
    CHECK(v.bound > 0);
}

TEST_CASE("stock relations are what they claim") {
    CHECK(rel_or(3).size() == 7);
    CHECK(rel_nand(3).size() == 7);
    CHECK_FALSE(rel_or(3).contains({0, 0, 0}));
    CHECK_FALSE(rel_nand(3).contains({1, 1, 1}));
    CHECK(rel_even(4).size() == 8);
    CHECK(rel_r5().size() == 3);
    CHECK(rel_r5().arity() == 5);
    CHECK(rel_r5_zero().size() == 4);
    CHECK(rel_r5_zero().contains({0, 0, 0, 0, 0}));
    CHECK(rel_iff_and().same_tuples(project(graph_of(Operation::b_and()), {3, 1, 2})));
    CHECK(rel_ror_source().arity() == 8);
    CHECK(atom_profile(single(rel_ror_source())).all_false());
}
