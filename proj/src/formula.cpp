#include "uclone/formula.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

namespace uclone {

namespace {

const Relation& resolve_rel(const Language& lang, const std::string& name, Relation& eq_store) {
    if (const Relation* r = lang.find(name)) return *r;
    if (name == "Eq") {
        eq_store = Relation::eq(lang.domain());
        return eq_store;
    }
    throw error("unknown relation " + name + " in formula");
}

}  // namespace

void ConjFormula::validate() const {
    if (!lang) throw error("formula has no language");
    std::set<std::string> vars;
    for (const auto& v : free_vars)
        if (!vars.insert(v).second) throw error("duplicate variable " + v);
    for (const auto& [v, q] : bound_vars)
        if (!vars.insert(v).second) throw error("duplicate variable " + v);
    Relation eq_store;
    for (const Atom& a : atoms) {
        const Relation& r = resolve_rel(*lang, a.rel, eq_store);
        if (static_cast<int>(a.args.size()) != r.arity())
            throw error("atom " + a.rel + " has wrong argument count");
        for (const auto& v : a.args)
            if (!vars.count(v)) throw error("unknown variable " + v + " in atom " + a.rel);
    }
}

EvalResult eval_formula(const ConjFormula& f, const Budget& budget) {
    f.validate();
    int nv = f.var_count();
    if (nv > budget.eval_vars)
        throw budget_error("formula has " + std::to_string(nv) + " variables, budget " +
                           std::to_string(budget.eval_vars));
    int domain = f.lang->domain();
    if (nv == 0) throw error("formula must have at least one variable");

    // Variable order: free vars then bound vars.
    std::unordered_map<std::string, int> pos;
    std::vector<std::string> order;
    for (const auto& v : f.free_vars) {
        pos[v] = static_cast<int>(order.size());
        order.push_back(v);
    }
    for (const auto& [v, q] : f.bound_vars) {
        pos[v] = static_cast<int>(order.size());
        order.push_back(v);
    }

    // Atoms fire as soon as their last variable is assigned.
    struct EvalAtom {
        std::vector<int> argpos;
        Bits mask;
        int rel_arity;
    };
    std::vector<std::vector<EvalAtom>> by_trigger(static_cast<std::size_t>(nv));
    Relation eq_store;
    for (const Atom& a : f.atoms) {
        const Relation& r = resolve_rel(*f.lang, a.rel, eq_store);
        EvalAtom ea;
        ea.rel_arity = r.arity();
        ea.mask = r.mask();
        int trig = 0;
        for (const auto& v : a.args) {
            ea.argpos.push_back(pos[v]);
            trig = std::max(trig, pos[v]);
        }
        by_trigger[static_cast<std::size_t>(trig)].push_back(std::move(ea));
    }

    std::vector<Tuple> sat;
    Tuple assign(static_cast<std::size_t>(nv), 0);
    auto rec = [&](auto&& self, int v) -> void {
        if (v == nv) {
            sat.push_back(assign);
            return;
        }
        for (int d = 0; d < domain; ++d) {
            assign[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(d);
            bool ok = true;
            for (const EvalAtom& ea : by_trigger[static_cast<std::size_t>(v)]) {
                std::uint64_t idx = 0;
                for (int p : ea.argpos)
                    idx = idx * static_cast<std::uint64_t>(domain) +
                          assign[static_cast<std::size_t>(p)];
                if (!ea.mask.test(idx)) {
                    ok = false;
                    break;
                }
            }
            if (ok) self(self, v + 1);
        }
    };
    rec(rec, 0);

    EvalResult res;
    res.pre_projection = Relation::make("", nv, domain, std::move(sat));
    if (f.free_vars.empty()) throw error("formula must have at least one free variable");
    std::vector<int> coords;
    for (std::size_t i = 1; i <= f.free_vars.size(); ++i) coords.push_back(static_cast<int>(i));
    res.result = project(res.pre_projection, coords).renamed(f.name);
    return res;
}

UppCheck check_upp(const ConjFormula& f, const Relation& target, const Budget& budget) {
    if (static_cast<int>(f.free_vars.size()) != target.arity())
        throw error("check_upp: free arity does not match target");
    EvalResult ev = eval_formula(f, budget);
    UppCheck out;
    if (!ev.result.same_tuples(target)) {
        out.kind = UppCheck::Kind::WrongRelation;
        for (const Tuple& t : target.tuples())
            if (!ev.result.contains(t)) out.missing.push_back(t);
        for (const Tuple& t : ev.result.tuples())
            if (!target.contains(t)) out.extra.push_back(t);
        return out;
    }
    int nf = static_cast<int>(f.free_vars.size());
    std::vector<int> free_coords;
    for (int i = 1; i <= nf; ++i) free_coords.push_back(i);

    UppCertificate cert;
    cert.formula = f;
    for (std::size_t b = 0; b < f.bound_vars.size(); ++b) {
        const auto& [var, q] = f.bound_vars[b];
        if (q == Quant::Exists) continue;
        int coord = nf + static_cast<int>(b) + 1;
        DeterminedResult det = determined(ev.pre_projection, coord, free_coords);
        if (!det.yes) {
            out.kind = UppCheck::Kind::NotUnique;
            out.bad_var = var;
            out.tuple_pair = det.counterexample;
            return out;
        }
        AuxWitness w;
        w.var = var;
        w.dep = free_coords;
        w.map = std::move(det.witness);
        if (q == Quant::Frozen) {
            bool constant = true;
            std::uint8_t val = 0;
            bool first = true;
            for (const Tuple& t : ev.pre_projection.tuples()) {
                std::uint8_t v = t[static_cast<std::size_t>(coord - 1)];
                if (first) {
                    val = v;
                    first = false;
                } else if (v != val) {
                    constant = false;
                    break;
                }
            }
            if (!constant) {
                out.kind = UppCheck::Kind::NotFrozen;
                out.bad_var = var;
                return out;
            }
            w.is_frozen = true;
            w.frozen_value = val;
        }
        cert.aux.push_back(std::move(w));
    }
    out.kind = UppCheck::Kind::Valid;
    out.cert = std::move(cert);
    return out;
}

// --- qfpp closure -----------------------------------------------------------

Relation QfppClosure::member_relation(std::size_t i, std::string name) const {
    return Relation::from_mask(std::move(name), n, domain, members[i].mask);
}

ConjFormula QfppClosure::member_formula(std::size_t i,
                                        std::shared_ptr<const Language> lang) const {
    ConjFormula f;
    f.lang = std::move(lang);
    for (int v = 1; v <= n; ++v) f.free_vars.push_back("x" + std::to_string(v));
    for (int id : members[i].atom_ids) f.atoms.push_back(atoms[static_cast<std::size_t>(id)]);
    return f;
}

namespace {

struct BitsHash {
    std::size_t operator()(const Bits& b) const { return b.hash(); }
};

/// Tuple-list lexicographic order on masks: compares the ascending index
/// sequences of set bits, shorter prefixes first.
bool mask_canonical_less(const Bits& a, const Bits& b) {
    std::uint64_t i = 0, j = 0, n = a.size();
    for (;;) {
        while (i < n && !a.test(i)) ++i;
        while (j < n && !b.test(j)) ++j;
        if (i == n || j == n) return j != n ? false : i != n;
        if (i != j) return i < j;
        ++i;
        ++j;
    }
}

}  // namespace

QfppClosure qfpp_closure_detailed(const std::shared_ptr<const Language>& g, int n,
                                  const Budget& budget) {
    if (!g) throw error("qfpp closure needs a language");
    if (n < 1) throw error("closure arity must be positive");
    if (n > budget.qfpp_vars)
        throw budget_error("closure arity " + std::to_string(n) + " exceeds budget " +
                           std::to_string(budget.qfpp_vars));
    int domain = g->domain();
    std::uint64_t space = pow_u64(static_cast<std::uint64_t>(domain), static_cast<unsigned>(n));

    QfppClosure out;
    out.n = n;
    out.domain = domain;

    std::vector<std::string> vnames;
    for (int v = 1; v <= n; ++v) vnames.push_back("x" + std::to_string(v));

    // Distinct atom cylinders over x1..xn, for every relation (Eq included)
    // and every argument map.
    std::vector<const Relation*> rels;
    Relation eq = Relation::eq(domain);
    for (const Relation& r : g->relations()) rels.push_back(&r);
    if (!g->find("Eq")) rels.push_back(&eq);

    std::unordered_map<Bits, int, BitsHash> atom_of_mask;
    std::vector<Bits> atom_masks;
    std::vector<Tuple> decoded;
    decoded.reserve(space);
    for (std::uint64_t a = 0; a < space; ++a) decoded.push_back(index_tuple(a, domain, n));

    for (const Relation* r : rels) {
        Bits rmask = r->mask();
        int ar = r->arity();
        std::uint64_t maps = pow_u64(static_cast<std::uint64_t>(n), static_cast<unsigned>(ar));
        for (std::uint64_t m = 0; m < maps; ++m) {
            Tuple argv = index_tuple(m, n, ar);  // values are variable indices 0..n-1
            Bits cyl(space);
            for (std::uint64_t a = 0; a < space; ++a) {
                std::uint64_t idx = 0;
                for (std::uint8_t vi : argv)
                    idx = idx * static_cast<std::uint64_t>(domain) + decoded[a][vi];
                if (rmask.test(idx)) cyl.set(a);
            }
            if (atom_of_mask.emplace(cyl, static_cast<int>(atom_masks.size())).second) {
                Atom at;
                at.rel = r->name();
                for (std::uint8_t vi : argv) at.args.push_back(vnames[vi]);
                out.atoms.push_back(std::move(at));
                atom_masks.push_back(std::move(cyl));
            }
        }
    }

    // Intersection closure starting from the full relation (empty conjunction).
    std::unordered_map<Bits, int, BitsHash> seen;
    std::vector<ClosureMember> work;
    Bits full(space, true);
    seen.emplace(full, 0);
    work.push_back({std::move(full), {}});
    for (std::size_t head = 0; head < work.size(); ++head) {
        for (std::size_t ai = 0; ai < atom_masks.size(); ++ai) {
            Bits next = work[head].mask;
            next.and_with(atom_masks[ai]);
            if (next == work[head].mask) continue;
            if (seen.count(next)) continue;
            if (work.size() >= budget.closure_members)
                throw budget_error("qfpp closure exceeds member budget");
            std::vector<int> ids = work[head].atom_ids;
            ids.push_back(static_cast<int>(ai));
            seen.emplace(next, static_cast<int>(work.size()));
            work.push_back({std::move(next), std::move(ids)});
        }
    }
    std::sort(work.begin(), work.end(), [](const ClosureMember& a, const ClosureMember& b) {
        return mask_canonical_less(a.mask, b.mask);
    });
    out.members = std::move(work);
    return out;
}

std::vector<Relation> qfpp_closure(const Language& g, int n, const Budget& budget) {
    auto shared = std::make_shared<Language>(g);
    QfppClosure c = qfpp_closure_detailed(shared, n, budget);
    std::vector<Relation> out;
    out.reserve(c.members.size());
    for (std::size_t i = 0; i < c.members.size(); ++i) out.push_back(c.member_relation(i));
    return out;
}

// --- pp membership ----------------------------------------------------------

PpVerdict pp_member(const Relation& r, const Language& g, const Budget& budget) {
    if (r.domain() != g.domain()) throw error("pp_member: domain mismatch");
    PpVerdict out;
    if (r.empty()) {
        // The empty relation is pp-definable iff no single value d has
        // (d,...,d) in every relation of g: the diagonal atoms then
        // intersect to an unsatisfiable unary conjunction.
        out.arity_checked = 0;
        for (int d = 0; d < g.domain(); ++d) {
            bool common = true;
            for (const Relation& rel : g.relations()) {
                Tuple diag(static_cast<std::size_t>(rel.arity()), static_cast<std::uint8_t>(d));
                if (!rel.contains(diag)) {
                    common = false;
                    break;
                }
            }
            if (common) {
                out.kind = PpVerdict::Kind::No;
                return out;
            }
        }
        out.kind = PpVerdict::Kind::Yes;
        return out;
    }
    int k = std::max<int>(1, static_cast<int>(r.size()));
    bool exact = k <= budget.pol_arity(g.domain());
    if (!exact) k = budget.pol_arity(g.domain());
    out.arity_checked = k;
    std::optional<Operation> violator;
    pol_scan(g, k,
             [&](const Operation& f) {
                 if (!preserves(f, r)) {
                     violator = f;
                     return false;
                 }
                 return true;
             },
             budget);
    if (violator) {
        out.kind = PpVerdict::Kind::No;
        out.witness = std::move(violator);
    } else {
        out.kind = exact ? PpVerdict::Kind::Yes : PpVerdict::Kind::YesUpToArity;
    }
    return out;
}

// --- upp search and normalization ----------------------------------------------

FindUppResult find_upp(const Relation& r, const std::shared_ptr<const Language>& g, int max_aux,
                       const Budget& budget) {
    if (!g) throw error("find_upp needs a language");
    if (r.domain() != g->domain()) throw error("find_upp: domain mismatch");
    int n = r.arity();
    if (n + max_aux > budget.qfpp_vars)
        throw budget_error("find_upp: " + std::to_string(n + max_aux) +
                           " variables exceed closure budget " + std::to_string(budget.qfpp_vars));
    std::vector<int> free_coords;
    for (int i = 1; i <= n; ++i) free_coords.push_back(i);

    FindUppResult res;
    res.searched_up_to = max_aux;
    for (int j = 0; j <= max_aux; ++j) {
        QfppClosure cl = qfpp_closure_detailed(g, n + j, budget);
        for (std::size_t m = 0; m < cl.members.size(); ++m) {
            Relation cand = cl.member_relation(m);
            if (!project(cand, free_coords).same_tuples(r)) continue;
            bool alldet = true;
            std::vector<DeterminedResult> dets;
            for (int i = n + 1; i <= n + j && alldet; ++i) {
                dets.push_back(determined(cand, i, free_coords));
                alldet = dets.back().yes;
            }
            if (!alldet) continue;
            ConjFormula f = cl.member_formula(m, g);
            f.name = r.name();
            // Rename the aux tail x_{n+1}.. to y1..yj and tag them ∃!.
            for (int i = 0; i < j; ++i) {
                std::string from = "x" + std::to_string(n + 1 + i);
                std::string to = "y" + std::to_string(i + 1);
                for (Atom& a : f.atoms)
                    for (std::string& v : a.args)
                        if (v == from) v = to;
                f.bound_vars.emplace_back(to, Quant::ExistsUnique);
            }
            f.free_vars.resize(static_cast<std::size_t>(n));
            UppCheck chk = check_upp(f, r, budget);
            if (chk.kind != UppCheck::Kind::Valid)
                throw error("internal: reconstructed upp formula failed validation");
            res.found = true;
            res.cert = std::move(chk.cert);
            return res;
        }
    }
    return res;
}

namespace {

bool coord_fictitious(const Relation& r, int i) {
    std::size_t ii = static_cast<std::size_t>(i - 1);
    for (const Tuple& t : r.tuples()) {
        for (int d = 0; d < r.domain(); ++d) {
            Tuple t2 = t;
            t2[ii] = static_cast<std::uint8_t>(d);
            if (!r.contains(t2)) return false;
        }
    }
    return true;
}

}  // namespace

std::variant<ConjFormula, NormalizeFail> normalize_pp_to_upp(const ConjFormula& f,
                                                             const Budget& budget) {
    ConjFormula cur = f;
    int nf = static_cast<int>(cur.free_vars.size());
    for (int b = static_cast<int>(cur.bound_vars.size()) - 1; b >= 0; --b) {
        auto& [var, q] = cur.bound_vars[static_cast<std::size_t>(b)];
        if (q != Quant::Exists) continue;  // already unique or frozen
        EvalResult ev = eval_formula(cur, budget);
        // Work in the projection keeping free vars and bound vars up to b:
        // later bound variables have already been handled.
        std::vector<int> keep;
        for (int i = 1; i <= nf + b + 1; ++i) keep.push_back(i);
        Relation q_rel = project(ev.pre_projection, keep);
        int coord = nf + b + 1;
        std::vector<int> others;
        for (int i = 1; i <= nf + b; ++i) others.push_back(i);
        if (determined(q_rel, coord, others).yes) {
            q = Quant::ExistsUnique;
            continue;
        }
        if (coord_fictitious(q_rel, coord)) {
            if (cur.free_vars.empty()) return NormalizeFail{var};
            cur.atoms.push_back(Atom{"Eq", {cur.free_vars[0], var}});
            q = Quant::ExistsUnique;
            continue;
        }
        return NormalizeFail{var};
    }
    return cur;
}

bool affine_upp_applicable(const Language& g) {
    int d = g.domain();
    for (int p = 2; p * p <= d; ++p)
        if (d % p == 0) throw error("affine test requires a prime domain size");
    Operation f = Operation::affine3(d);
    return preserves_all(f, g);
}

Relation eval_alt_unique(const Relation& r, int i) {
    if (i < 1 || i > r.arity()) throw error("eval_alt_unique: coordinate out of range");
    if (r.arity() < 2) throw error("eval_alt_unique requires arity at least 2");
    std::vector<int> keep;
    for (int c = 1; c <= r.arity(); ++c)
        if (c != i) keep.push_back(c);
    std::map<Tuple, int> extensions;
    for (const Tuple& t : r.tuples()) {
        Tuple u;
        u.reserve(keep.size());
        for (int c : keep) u.push_back(t[static_cast<std::size_t>(c - 1)]);
        ++extensions[u];
    }
    std::vector<Tuple> ts;
    for (const auto& [t, cnt] : extensions)
        if (cnt == 1) ts.push_back(t);
    return Relation::make("", r.arity() - 1, r.domain(), std::move(ts));
}

}  // namespace uclone
