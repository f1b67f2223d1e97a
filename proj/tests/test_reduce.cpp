#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <memory>
#include <random>

#include "uclone/catalog.hpp"
#include "uclone/reduce.hpp"

using namespace uclone;

namespace {

std::shared_ptr<Language> lang_4clause() {
    auto g = std::make_shared<Language>(2);
    g->add(rel_or(4).renamed("OR4"));
    return g;
}

Instance or4_instance(std::vector<std::string> vars, std::vector<std::vector<int>> cs) {
    Instance i;
    i.domain = 2;
    i.lang = lang_4clause();
    i.vars = std::move(vars);
    for (auto& c : cs) i.constraints.push_back({"OR4", c});
    i.validate();
    return i;
}

std::shared_ptr<Language> r5_lang() {
    auto g = std::make_shared<Language>(2);
    g->add(rel_r5().renamed("R5"));
    return g;
}

}  // namespace

TEST_CASE("three-clause language shape") {
    auto g = three_clause_language();
    REQUIRE(g->relations().size() == 8);
    CHECK(g->at("CL0").same_tuples(rel_or(3)));
    CHECK(g->at("CL7").same_tuples(rel_nand(3)));
    for (int t = 0; t < 8; ++t) {
        const Relation& r = g->at("CL" + std::to_string(t));
        CHECK(r.size() == 7);
        Tuple missing = {std::uint8_t(t & 1), std::uint8_t((t >> 1) & 1),
                         std::uint8_t((t >> 2) & 1)};
        CHECK_FALSE(r.contains(missing));
    }
}

TEST_CASE("or4 definitions: loose fails, tight passes") {
    UppCheck loose = check_upp(or4_def_loose(), rel_or(4));
    CHECK(loose.kind == UppCheck::Kind::NotUnique);
    Tuple a = loose.tuple_pair.first, b = loose.tuple_pair.second;
    CHECK(Tuple(a.begin(), a.begin() + 4) == Tuple(b.begin(), b.begin() + 4));
    CHECK(a[4] != b[4]);
    // The all-ones point in particular admits both y-values.
    Relation pre = eval_formula(or4_def_loose()).pre_projection;
    CHECK(pre.contains({1, 1, 1, 1, 0}));
    CHECK(pre.contains({1, 1, 1, 1, 1}));

    UppCheck tight = check_upp(or4_def_upp(), rel_or(4));
    CHECK(tight.kind == UppCheck::Kind::Valid);
    REQUIRE(tight.cert.aux.size() == 1);
}

TEST_CASE("rewrite_upp on a 4-clause instance") {
    UppDefs defs;
    ConjFormula d = or4_def_upp();
    d.name = "OR4";
    defs["OR4"] = d;

    Instance i = or4_instance({"a", "b", "c", "d"},
                              {{0, 1, 2, 3}, {3, 2, 1, 0}, {0, 0, 1, 1}});
    Instance out = rewrite_upp(i, defs);
    out.validate();
    CHECK(count_models(out) == count_models(i));
    // One aux per constraint occurrence, deterministic names.
    CHECK(out.vars.size() == 4 + 3);
    CHECK(std::find(out.vars.begin(), out.vars.end(), "y@0#1") != out.vars.end());
    CHECK(std::find(out.vars.begin(), out.vars.end(), "y@2#1") != out.vars.end());
    // Repeated identical constraints still get their own aux variables.
    Instance rep = or4_instance({"a", "b", "c", "d"},
                                {{0, 1, 2, 3}, {0, 1, 2, 3}});
    Instance rout = rewrite_upp(rep, defs);
    CHECK(rout.vars.size() == 6);
    CHECK(count_models(rout) == count_models(rep));
}

TEST_CASE("rewrite_upp with identity definitions is an isomorphism") {
    auto g = three_clause_language();
    UppDefs defs;
    for (const Relation& r : g->relations()) defs[r.name()] = identity_def(r, g);
    Instance i;
    i.domain = 2;
    i.lang = g;
    i.vars = {"p", "q", "r"};
    i.constraints = {{"CL0", {0, 1, 2}}, {"CL5", {2, 2, 0}}};
    i.validate();
    Instance out = rewrite_upp(i, defs);
    CHECK(out.vars == i.vars);
    REQUIRE(out.constraints.size() == i.constraints.size());
    for (std::size_t k = 0; k < i.constraints.size(); ++k)
        CHECK(out.constraints[k].args == i.constraints[k].args);
    CHECK(count_models(out) == count_models(i));
}

TEST_CASE("rewrite_upp rejects invalid definitions") {
    UppDefs defs;
    ConjFormula d = or4_def_loose();
    d.name = "OR4";
    defs["OR4"] = d;
    Instance i = or4_instance({"a", "b", "c", "d"}, {{0, 1, 2, 3}});
    CHECK_THROWS_AS(rewrite_upp(i, defs), error);
    CHECK_THROWS_AS(rewrite_upp(i, UppDefs{}), error);
}

TEST_CASE("unsat_to_usat contract") {
    // Single constraint: satisfiable input, so the output has many models.
    Instance one;
    one.domain = 2;
    one.lang = r5_lang();
    one.vars = {"a", "b", "c", "d", "e"};
    one.constraints = {{"R5", {0, 1, 2, 3, 4}}};
    one.validate();
    Instance out = unsat_to_usat(one);
    out.validate();
    CHECK(unique_model(out).kind == UniqueVerdict::Kind::Many);
    // The all-zero assignment is always a model.
    CHECK(out.lang->relations()[0].contains(Tuple(5, 0)));
    CHECK(enumerate_models(out).front() == Tuple(out.vars.size(), 0));

    // Randomized check on small R5 instances with dedicated fifth slots:
    // unsat(I) iff unique(I').
    std::mt19937 rng(11);
    for (int trial = 0; trial < 80; ++trial) {
        Instance inst;
        inst.domain = 2;
        inst.lang = r5_lang();
        int nv = 4 + int(rng() % 3);
        for (int v = 0; v < nv; ++v) inst.vars.push_back("v" + std::to_string(v));
        int nc = 1 + int(rng() % 4);
        // Fifth positions draw from their own variable pool.
        int nf = 1 + int(rng() % 2);
        for (int v = 0; v < nf; ++v) inst.vars.push_back("f" + std::to_string(v));
        for (int c = 0; c < nc; ++c) {
            Constraint ct;
            ct.rel = "R5";
            for (int a = 0; a < 4; ++a) ct.args.push_back(int(rng() % nv));
            ct.args.push_back(nv + int(rng() % nf));
            inst.constraints.push_back(ct);
        }
        inst.validate();
        Instance red = unsat_to_usat(inst);
        red.validate();
        bool unsat = count_models(inst) == 0;
        UniqueVerdict u = unique_model(red);
        CHECK(unsat == (u.kind == UniqueVerdict::Kind::Unique));
        if (u.kind == UniqueVerdict::Kind::Unique)
            CHECK(u.model == Tuple(red.vars.size(), 0));
    }

    // Preconditions: at least one constraint, all over R5, and no variable
    // shared between a fifth position and an earlier one.
    Instance empty;
    empty.domain = 2;
    empty.lang = r5_lang();
    empty.vars = {"a"};
    CHECK_THROWS_AS(unsat_to_usat(empty), error);
    Instance mixed;
    mixed.domain = 2;
    mixed.lang = r5_lang();
    mixed.vars = {"a", "b", "c", "d"};
    mixed.constraints = {{"R5", {0, 1, 2, 3, 0}}};
    mixed.validate();
    CHECK_THROWS_AS(unsat_to_usat(mixed), error);
}

TEST_CASE("switched_relation") {
    Relation s = switched_relation(rel_or(3));
    CHECK(s.arity() == 4);
    CHECK(s.size() == 7 * 2 + 1);
    CHECK(s.contains({0, 0, 0, 1}));
    CHECK_FALSE(s.contains({0, 0, 0, 0}));
    Relation or3 = rel_or(3);
    for (const Tuple& t : or3.tuples()) {
        Tuple t0 = t, t1 = t;
        t0.push_back(0);
        t1.push_back(1);
        CHECK(s.contains(t0));
        CHECK(s.contains(t1));
    }
}

TEST_CASE("three_clause_plan validates and certifies") {
    EthPlan plan = three_clause_plan();
    CHECK(plan.d_or == 1);
    CHECK(plan.e_imp == 0);
    plan.validate(*three_clause_language());
    for (const auto& [name, f] : plan.defs) {
        Relation target = name == "IMP"
                              ? rel_impl()
                              : switched_relation(three_clause_language()->at(
                                    name.substr(0, name.size() - 1)));
        CHECK(check_upp(f, target).kind == UppCheck::Kind::Valid);
    }
}

TEST_CASE("eth_reduction contract on small instances") {
    EthPlan plan = three_clause_plan();
    auto g = three_clause_language();
    std::mt19937 rng(23);
    for (int trial = 0; trial < 50; ++trial) {
        Instance inst;
        inst.domain = 2;
        inst.lang = g;
        int nv = 2 + int(rng() % 3);
        for (int v = 0; v < nv; ++v) inst.vars.push_back("v" + std::to_string(v));
        int nc = 1 + int(rng() % (2 * nv));
        for (int c = 0; c < nc; ++c) {
            Constraint ct;
            ct.rel = "CL" + std::to_string(rng() % 8);
            for (int a = 0; a < 3; ++a) ct.args.push_back(int(rng() % nv));
            inst.constraints.push_back(ct);
        }
        inst.validate();
        Instance out = eth_reduction(inst, plan);
        out.validate();
        bool unsat = count_models(inst) == 0;
        CHECK(unsat == (unique_model(out).kind == UniqueVerdict::Kind::Unique));
        // One steering variable plus one aux per constraint (D=1, E=0).
        std::size_t expect =
            inst.vars.size() + 1 + plan.e_imp * inst.vars.size() +
            plan.d_or * inst.constraints.size();
        CHECK(out.vars.size() == expect);
    }

    // Cardinality condition |C| <= 2|V| is enforced.
    Instance big;
    big.domain = 2;
    big.lang = g;
    big.vars = {"x"};
    for (int c = 0; c < 3; ++c) big.constraints.push_back({"CL0", {0, 0, 0}});
    big.validate();
    CHECK_THROWS_AS(eth_reduction(big, plan), error);
}

TEST_CASE("eth_reduction forced contradiction has the all-ones kernel") {
    // CL7(x,x,x) forces x=0 and CL0(x,x,x) forces x=1: unsatisfiable.
    EthPlan plan = three_clause_plan();
    Instance inst;
    inst.domain = 2;
    inst.lang = three_clause_language();
    inst.vars = {"x"};
    inst.constraints = {{"CL0", {0, 0, 0}}, {"CL7", {0, 0, 0}}};
    inst.validate();
    REQUIRE(count_models(inst) == 0);
    Instance out = eth_reduction(inst, plan);
    UniqueVerdict u = unique_model(out);
    REQUIRE(u.kind == UniqueVerdict::Kind::Unique);
    // The steering variable is set in the unique model.
    int sw = out.var_index("sw");
    REQUIRE(sw >= 0);
    CHECK(u.model[sw] == 1);
}
