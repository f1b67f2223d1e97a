#include "uclone/reduce.hpp"

#include <algorithm>
#include <numeric>

#include "uclone/catalog.hpp"

namespace uclone {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    /// Smaller index wins, keeping original variables over fresh ones.
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (a > b) std::swap(a, b);
        parent[static_cast<std::size_t>(b)] = a;
    }
};

std::string fresh_name(const std::string& base, std::size_t ci, std::size_t k) {
    return base + "@" + std::to_string(ci) + "#" + std::to_string(k);
}

std::string unused_name(const std::vector<std::string>& vars, const std::string& want) {
    std::string name = want;
    int bump = 1;
    while (std::find(vars.begin(), vars.end(), name) != vars.end())
        name = want + "_" + std::to_string(++bump);
    return name;
}

}  // namespace

Instance rewrite_upp(const Instance& inst, const UppDefs& defs, const Budget& budget) {
    inst.validate();
    std::shared_ptr<const Language> target;
    for (const Constraint& c : inst.constraints) {
        auto it = defs.find(c.rel);
        if (it == defs.end()) throw error("no definition for relation " + c.rel);
        const ConjFormula& d = it->second;
        if (!d.lang) throw error("definition for " + c.rel + " has no language");
        if (!target) target = d.lang;
        if (target->domain() != d.lang->domain())
            throw error("definitions disagree on the target domain");
        if (static_cast<int>(d.free_vars.size()) != inst.lang->at(c.rel).arity())
            throw error("definition arity mismatch for " + c.rel);
        UppCheck chk = check_upp(d, inst.lang->at(c.rel), budget);
        if (chk.kind != UppCheck::Kind::Valid)
            throw error("definition for " + c.rel + " is not a valid upp-definition");
    }
    Instance out;
    out.domain = inst.domain;
    out.lang = target ? target : inst.lang;

    std::vector<std::string> names = inst.vars;
    UnionFind uf(0);
    std::vector<std::pair<std::string, std::vector<int>>> pending;
    std::vector<std::vector<int>> local_maps;
    // First pass: allocate fresh variables and collect atoms on global ids.
    for (std::size_t ci = 0; ci < inst.constraints.size(); ++ci) {
        const Constraint& c = inst.constraints[ci];
        const ConjFormula& d = defs.at(c.rel);
        std::vector<int> local(static_cast<std::size_t>(d.var_count()));
        for (std::size_t p = 0; p < d.free_vars.size(); ++p)
            local[p] = c.args[p];
        for (std::size_t k = 0; k < d.bound_vars.size(); ++k) {
            std::string nm = fresh_name(d.bound_vars[k].first, ci, k + 1);
            if (std::find(names.begin(), names.end(), nm) != names.end())
                throw error("fresh variable name collision: " + nm);
            local[d.free_vars.size() + k] = static_cast<int>(names.size());
            names.push_back(std::move(nm));
        }
        local_maps.push_back(std::move(local));
    }
    uf = UnionFind(static_cast<int>(names.size()));
    for (std::size_t ci = 0; ci < inst.constraints.size(); ++ci) {
        const Constraint& c = inst.constraints[ci];
        const ConjFormula& d = defs.at(c.rel);
        const std::vector<int>& local = local_maps[ci];
        auto global_of = [&](const std::string& v) {
            for (std::size_t p = 0; p < d.free_vars.size(); ++p)
                if (d.free_vars[p] == v) return local[p];
            for (std::size_t k = 0; k < d.bound_vars.size(); ++k)
                if (d.bound_vars[k].first == v) return local[d.free_vars.size() + k];
            throw error("definition for " + c.rel + " uses unknown variable " + v);
        };
        for (const Atom& a : d.atoms) {
            if (a.rel == "Eq") {
                uf.unite(global_of(a.args[0]), global_of(a.args[1]));
                continue;
            }
            std::vector<int> args;
            args.reserve(a.args.size());
            for (const std::string& v : a.args) args.push_back(global_of(v));
            pending.emplace_back(a.rel, std::move(args));
        }
    }
    // Keep class representatives: all originals, plus fresh ones not merged
    // into an earlier variable.
    std::vector<int> newid(names.size(), -1);
    out.vars.clear();
    for (std::size_t v = 0; v < names.size(); ++v)
        if (uf.find(static_cast<int>(v)) == static_cast<int>(v)) {
            newid[v] = static_cast<int>(out.vars.size());
            out.vars.push_back(names[v]);
        }
    for (auto& [rel, args] : pending) {
        Constraint c;
        c.rel = rel;
        for (int a : args) c.args.push_back(newid[static_cast<std::size_t>(uf.find(a))]);
        out.constraints.push_back(std::move(c));
    }
    out.validate();
    return out;
}

Instance unsat_to_usat(const Instance& inst, const Budget& budget) {
    (void)budget;
    inst.validate();
    if (inst.constraints.empty())
        throw error("unsat_to_usat needs at least one constraint");
    Relation r5 = rel_r5();
    for (const Constraint& c : inst.constraints)
        if (!inst.lang->at(c.rel).same_tuples(r5))
            throw error("unsat_to_usat: constraint " + c.rel + " is not the R5 relation");
    // The uniqueness contract needs the fifth slots to be dedicated: a
    // variable shared between a fifth position and an earlier one would be
    // forced to 1 in the input but left free once the slot is rewired.
    std::vector<bool> fifth(inst.vars.size(), false), early(inst.vars.size(), false);
    for (const Constraint& c : inst.constraints) {
        for (std::size_t p = 0; p + 1 < c.args.size(); ++p)
            early[static_cast<std::size_t>(c.args[p])] = true;
        fifth[static_cast<std::size_t>(c.args.back())] = true;
    }
    for (std::size_t v = 0; v < inst.vars.size(); ++v)
        if (fifth[v] && early[v])
            throw error("unsat_to_usat: variable " + inst.vars[v] +
                        " occurs both in a fifth position and elsewhere");
    Instance out;
    out.domain = 2;
    auto lang = std::make_shared<Language>(2);
    lang->add(rel_r5_zero());
    out.lang = lang;
    // Keep exactly the variables still mentioned (positions 1..4).
    std::vector<bool> used(inst.vars.size(), false);
    for (const Constraint& c : inst.constraints)
        for (std::size_t p = 0; p + 1 < c.args.size(); ++p)
            used[static_cast<std::size_t>(c.args[p])] = true;
    std::vector<int> newid(inst.vars.size(), -1);
    for (std::size_t v = 0; v < inst.vars.size(); ++v)
        if (used[v]) {
            newid[v] = static_cast<int>(out.vars.size());
            out.vars.push_back(inst.vars[v]);
        }
    std::string c1 = unused_name(out.vars, "c1");
    int c1_id = static_cast<int>(out.vars.size());
    out.vars.push_back(c1);
    for (const Constraint& c : inst.constraints) {
        Constraint nc;
        nc.rel = "R5Z";
        for (std::size_t p = 0; p + 1 < c.args.size(); ++p)
            nc.args.push_back(newid[static_cast<std::size_t>(c.args[p])]);
        nc.args.push_back(c1_id);
        out.constraints.push_back(std::move(nc));
    }
    out.validate();
    return out;
}

Relation switched_relation(const Relation& r) {
    if (r.domain() != 2) throw error("switched_relation expects a Boolean relation");
    std::vector<Tuple> tuples;
    std::uint64_t cells = pow_u64(2, static_cast<unsigned>(r.arity()));
    for (std::uint64_t i = 0; i < cells; ++i) {
        Tuple t = index_tuple(i, 2, r.arity());
        Tuple t1 = t;
        t1.push_back(1);
        tuples.push_back(std::move(t1));
        if (r.contains(t)) {
            t.push_back(0);
            tuples.push_back(std::move(t));
        }
    }
    return Relation::make(r.name() + "v", r.arity() + 1, 2, std::move(tuples));
}

void EthPlan::validate(const Language& source, const Budget& budget) const {
    auto imp = defs.find("IMP");
    if (imp == defs.end()) throw error("plan lacks the IMP definition");
    if (check_upp(imp->second, rel_impl(), budget).kind != UppCheck::Kind::Valid)
        throw error("IMP definition is not a valid upp-definition");
    if (static_cast<int>(imp->second.bound_vars.size()) != e_imp)
        throw error("IMP auxiliary count does not match e_imp");
    for (const Relation& r : source.relations()) {
        auto it = defs.find(r.name() + "v");
        if (it == defs.end()) throw error("plan lacks a definition for " + r.name() + "v");
        if (check_upp(it->second, switched_relation(r), budget).kind !=
            UppCheck::Kind::Valid)
            throw error("definition for " + r.name() + "v is not valid");
        if (static_cast<int>(it->second.bound_vars.size()) != d_or)
            throw error("auxiliary count for " + r.name() + "v does not match d_or");
    }
}

Instance eth_reduction(const Instance& inst, const EthPlan& plan, const Budget& budget) {
    inst.validate();
    if (inst.domain != 2) throw error("eth_reduction expects a Boolean instance");
    if (inst.constraints.size() > 2 * inst.vars.size())
        throw error("eth_reduction requires |C| <= 2|V|");
    plan.validate(*inst.lang, budget);

    Instance mid;
    mid.domain = 2;
    auto lang = std::make_shared<Language>(2);
    lang->add(rel_impl().renamed("IMP"));
    for (const Relation& r : inst.lang->relations()) lang->add(switched_relation(r));
    mid.lang = lang;
    mid.vars = inst.vars;
    std::string sw = unused_name(mid.vars, "sw");
    int sw_id = static_cast<int>(mid.vars.size());
    mid.vars.push_back(sw);
    for (int v = 0; v < static_cast<int>(inst.vars.size()); ++v)
        mid.constraints.push_back(Constraint{"IMP", {sw_id, v}});
    for (const Constraint& c : inst.constraints) {
        Constraint nc;
        nc.rel = c.rel + "v";
        nc.args = c.args;
        nc.args.push_back(sw_id);
        mid.constraints.push_back(std::move(nc));
    }
    mid.validate();
    return rewrite_upp(mid, plan.defs, budget);
}

std::shared_ptr<const Language> three_clause_language() {
    auto lang = std::make_shared<Language>(2);
    for (int t = 0; t < 8; ++t) {
        std::vector<Tuple> tuples;
        for (std::uint64_t i = 0; i < 8; ++i) {
            Tuple u = index_tuple(i, 2, 3);
            // Excluded point: every literal false, i.e. u[p] equals the
            // negation bit for each argument.
            bool excluded = true;
            for (int p = 0; p < 3; ++p)
                excluded = excluded && u[static_cast<std::size_t>(p)] == ((t >> p) & 1);
            if (!excluded) tuples.push_back(std::move(u));
        }
        lang->add(Relation::make("CL" + std::to_string(t), 3, 2, std::move(tuples)));
    }
    return lang;
}

namespace {

Atom clause(int t, std::string a, std::string b, std::string c) {
    return Atom{"CL" + std::to_string(t), {std::move(a), std::move(b), std::move(c)}};
}

}  // namespace

EthPlan three_clause_plan() {
    auto lang = three_clause_language();
    EthPlan plan;
    plan.d_or = 1;
    plan.e_imp = 0;
    ConjFormula imp;
    imp.name = "IMP";
    imp.lang = lang;
    imp.free_vars = {"x1", "x2"};
    imp.atoms = {clause(1, "x1", "x2", "x2")};
    plan.defs["IMP"] = std::move(imp);
    for (int t = 0; t < 8; ++t) {
        // CLt(x1,x2,x3) ∨ x4 ≡ ∃!y: (l1∨l2∨y) ∧ (y ↔ (l3∨x4)).
        ConjFormula f;
        f.name = "CL" + std::to_string(t) + "v";
        f.lang = lang;
        f.free_vars = {"x1", "x2", "x3", "x4"};
        f.bound_vars = {{"y", Quant::ExistsUnique}};
        int s3 = (t >> 2) & 1;
        f.atoms = {clause(t & 3, "x1", "x2", "y"),
                   clause(1 | (s3 << 1), "y", "x3", "x4"),
                   clause(s3 ? 0 : 6, "y", "x3", "x3"),
                   clause(6, "y", "x4", "x4")};
        plan.defs[f.name] = std::move(f);
    }
    return plan;
}

ConjFormula or4_def_loose() {
    ConjFormula f;
    f.name = "OR4";
    f.lang = three_clause_language();
    f.free_vars = {"x1", "x2", "x3", "x4"};
    f.bound_vars = {{"y", Quant::ExistsUnique}};
    f.atoms = {clause(0, "x1", "x2", "y"), clause(4, "x3", "x4", "y")};
    return f;
}

ConjFormula or4_def_upp() {
    ConjFormula f;
    f.name = "OR4";
    f.lang = three_clause_language();
    f.free_vars = {"x1", "x2", "x3", "x4"};
    f.bound_vars = {{"y", Quant::ExistsUnique}};
    f.atoms = {clause(0, "x1", "x2", "y"), clause(1, "y", "x3", "x4"),
               clause(6, "y", "x3", "x3"), clause(6, "y", "x4", "x4")};
    return f;
}

ConjFormula identity_def(const Relation& r, std::shared_ptr<const Language> lang) {
    if (!lang || !lang->find(r.name()))
        throw error("identity_def: relation " + r.name() + " not in language");
    ConjFormula f;
    f.name = r.name();
    f.lang = std::move(lang);
    Atom a;
    a.rel = r.name();
    for (int p = 0; p < r.arity(); ++p) {
        f.free_vars.push_back("x" + std::to_string(p + 1));
        a.args.push_back(f.free_vars.back());
    }
    f.atoms.push_back(std::move(a));
    return f;
}

}  // namespace uclone
