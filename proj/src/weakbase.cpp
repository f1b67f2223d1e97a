#include "uclone/weakbase.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "uclone/catalog.hpp"

namespace uclone {

namespace {

std::uint64_t columns_or_throw(int domain, int s, const Budget& budget) {
    if (s < 1) throw error("u_relation: s must be positive");
    std::uint64_t n = pow_u64(static_cast<std::uint64_t>(domain),
                              static_cast<unsigned>(s));
    if (n > static_cast<std::uint64_t>(budget.eval_vars))
        throw budget_error("|D|^s = " + std::to_string(n) + " columns, budget " +
                           std::to_string(budget.eval_vars));
    return n;
}

}  // namespace

CoreTable u_relation(int domain, int s, const Budget& budget) {
    std::uint64_t n = columns_or_throw(domain, s, budget);
    std::vector<Tuple> rows(static_cast<std::size_t>(s),
                            Tuple(static_cast<std::size_t>(n), 0));
    for (std::uint64_t j = 0; j < n; ++j) {
        Tuple col = index_tuple(j, domain, s);
        for (int i = 0; i < s; ++i)
            rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                col[static_cast<std::size_t>(i)];
    }
    CoreTable out;
    out.domain = domain;
    out.s = s;
    out.rel = Relation::make("U" + std::to_string(s), static_cast<int>(n), domain,
                             std::move(rows));
    return out;
}

Relation f_closure(const std::vector<Operation>& fs, const Relation& r,
                   const Budget& budget) {
    for (const Operation& f : fs)
        if (f.domain() != r.domain()) throw error("f_closure: domain mismatch");
    std::set<Tuple> have(r.tuples().begin(), r.tuples().end());
    std::vector<Tuple> all;
    std::vector<Tuple> frontier(have.begin(), have.end());
    while (!frontier.empty()) {
        std::vector<Tuple> fresh;
        for (const Operation& f : fs) {
            int k = f.arity();
            // Every k-row sequence with at least one row from the frontier;
            // indices below na pick settled rows, the rest frontier rows.
            std::vector<Tuple> rows(static_cast<std::size_t>(k));
            std::size_t na = all.size(), nf = frontier.size();
            std::uint64_t total = pow_u64(na + nf, static_cast<unsigned>(k));
            for (std::uint64_t code = 0; code < total; ++code) {
                std::uint64_t c = code;
                bool any_front = false;
                for (int p = 0; p < k; ++p) {
                    std::uint64_t v = c % (na + nf);
                    c /= na + nf;
                    if (v < na) {
                        rows[static_cast<std::size_t>(p)] = all[v];
                    } else {
                        rows[static_cast<std::size_t>(p)] = frontier[v - na];
                        any_front = true;
                    }
                }
                if (!any_front) continue;
                auto t = apply_op(f, rows);
                if (t && !have.count(*t)) {
                    have.insert(*t);
                    fresh.push_back(*t);
                    if (have.size() > static_cast<std::size_t>(budget.closure_members))
                        throw budget_error("f_closure exceeded member budget");
                }
            }
        }
        // After the first pass, frontier rows are plain members.
        all.insert(all.end(), frontier.begin(), frontier.end());
        std::sort(all.begin(), all.end());
        all.erase(std::unique(all.begin(), all.end()), all.end());
        frontier = std::move(fresh);
    }
    return Relation::make(r.name(), r.arity(), r.domain(),
                          std::vector<Tuple>(have.begin(), have.end()));
}

Relation weak_base(const std::vector<Operation>& gens, int domain, int s,
                   const Budget& budget) {
    columns_or_throw(domain, s, budget);
    // Rows of C(U^s) are exactly the value tables of the s-ary members of
    // the generated clone, in the same lexicographic column order.
    std::vector<Operation> frag = clone_fragment(gens, s, budget);
    std::vector<Tuple> rows;
    rows.reserve(frag.size());
    for (const Operation& f : frag) rows.push_back(f.table());
    std::uint64_t n = pow_u64(static_cast<std::uint64_t>(domain),
                              static_cast<unsigned>(s));
    return Relation::make("Core", static_cast<int>(n), domain, std::move(rows));
}

ConjFormula emit_weakbase_qfpp(const std::shared_ptr<const Language>& g, int s,
                               const Budget& budget) {
    if (!g) throw error("emit_weakbase_qfpp: null language");
    int domain = g->domain();
    std::uint64_t n = columns_or_throw(domain, s, budget);
    ConjFormula out;
    out.name = "Core";
    out.lang = g;
    for (std::uint64_t j = 0; j < n; ++j)
        out.free_vars.push_back("x" + std::to_string(j + 1));
    for (const Relation& r : g->relations()) {
        std::size_t m = static_cast<std::size_t>(r.arity());
        std::size_t cnt = r.size();
        if (cnt == 0) continue;
        std::uint64_t seqs = pow_u64(cnt, static_cast<unsigned>(s));
        for (std::uint64_t code = 0; code < seqs; ++code) {
            std::uint64_t c = code;
            std::vector<const Tuple*> rows(static_cast<std::size_t>(s));
            for (int i = 0; i < s; ++i) {
                rows[static_cast<std::size_t>(i)] = &r.tuples()[c % cnt];
                c /= cnt;
            }
            Atom a;
            a.rel = r.name();
            Tuple col(static_cast<std::size_t>(s), 0);
            for (std::size_t p = 0; p < m; ++p) {
                for (int i = 0; i < s; ++i)
                    col[static_cast<std::size_t>(i)] = (*rows[static_cast<std::size_t>(i)])[p];
                a.args.push_back(out.free_vars[tuple_index(col, domain)]);
            }
            out.atoms.push_back(std::move(a));
        }
    }
    out.validate();
    return out;
}

UppCertificate upp_via_core(const Relation& r, const std::vector<Operation>& fs,
                            const Budget& budget) {
    if (r.empty()) throw error("upp_via_core: target relation is empty");
    int domain = r.domain();
    std::set<int> consts;
    for (const Operation& f : fs) {
        if (f.domain() != domain) throw error("upp_via_core: domain mismatch");
        if (f.is_constant())
            consts.insert(f.eval(Tuple(static_cast<std::size_t>(f.arity()), 0)));
        else if (!f.is_projection())
            throw error("upp_via_core: generator " + f.name() +
                        " is neither constant nor projection");
        if (!preserves(f, r).ok)
            throw error("upp_via_core: generator " + f.name() +
                        " does not preserve the relation");
    }
    int s = static_cast<int>(r.size());
    std::uint64_t cols = columns_or_throw(domain, s, budget);

    CoreTable u = u_relation(domain, s, budget);
    std::vector<Tuple> core_rows = u.rel.tuples();
    for (int d : consts)
        core_rows.emplace_back(static_cast<std::size_t>(cols),
                               static_cast<std::uint8_t>(d));
    Relation core = Relation::make("Core", static_cast<int>(cols), domain,
                                   std::move(core_rows));

    // Column realizing coordinate m of r: the D^s-element listing coordinate
    // m down r's tuples.
    int n = r.arity();
    std::vector<std::uint64_t> target_col(static_cast<std::size_t>(n));
    for (int m = 0; m < n; ++m) {
        Tuple col(static_cast<std::size_t>(s), 0);
        for (int i = 0; i < s; ++i)
            col[static_cast<std::size_t>(i)] =
                r.tuples()[static_cast<std::size_t>(i)][static_cast<std::size_t>(m)];
        target_col[static_cast<std::size_t>(m)] = tuple_index(col, domain);
    }

    ConjFormula f;
    f.name = r.name().empty() ? "R" : r.name();
    auto lang = std::make_shared<Language>(domain);
    lang->add(core);
    f.lang = lang;
    for (int m = 0; m < n; ++m) f.free_vars.push_back("x" + std::to_string(m + 1));
    std::vector<std::string> col_var(static_cast<std::size_t>(cols));
    std::vector<Atom> dup_eqs;
    for (int m = 0; m < n; ++m) {
        std::string& slot = col_var[target_col[static_cast<std::size_t>(m)]];
        if (slot.empty())
            slot = f.free_vars[static_cast<std::size_t>(m)];
        else
            dup_eqs.push_back(
                Atom{"Eq", {slot, f.free_vars[static_cast<std::size_t>(m)]}});
    }
    for (std::uint64_t j = 0; j < cols; ++j)
        if (col_var[j].empty()) {
            col_var[j] = "y" + std::to_string(j + 1);
            f.bound_vars.emplace_back(col_var[j], Quant::ExistsUnique);
        }
    Atom core_atom;
    core_atom.rel = "Core";
    core_atom.args.assign(col_var.begin(), col_var.end());
    f.atoms.push_back(std::move(core_atom));
    for (Atom& a : dup_eqs) f.atoms.push_back(std::move(a));
    if (!consts.empty()) {
        // Pick a column pair differing exactly on the rows of r that are
        // constant tuples over the shipped constants; this removes the
        // ambiguous projection rows while keeping the constant rows.
        Tuple a(static_cast<std::size_t>(s), 0), b(static_cast<std::size_t>(s), 0);
        for (int i = 0; i < s; ++i) {
            const Tuple& t = r.tuples()[static_cast<std::size_t>(i)];
            bool constant = consts.count(t[0]) &&
                            std::all_of(t.begin(), t.end(),
                                        [&](std::uint8_t v) { return v == t[0]; });
            if (constant) b[static_cast<std::size_t>(i)] = 1;
        }
        std::uint64_t j1 = tuple_index(a, domain), j2 = tuple_index(b, domain);
        if (j1 != j2) f.atoms.push_back(Atom{"Eq", {col_var[j1], col_var[j2]}});
    }
    f.validate();
    UppCheck chk = check_upp(f, r, budget);
    if (chk.kind != UppCheck::Kind::Valid)
        throw error("upp_via_core: construction failed validation");
    return chk.cert;
}

int probe_core_size(const std::vector<Operation>& gens, int domain, int s_max,
                    int k_max, const Budget& budget) {
    for (int s = 1; s <= s_max; ++s) {
        Relation wb = weak_base(gens, domain, s, budget);
        Language gw(domain);
        gw.add(wb);
        bool ok = true;
        for (int k = 1; k <= k_max && ok; ++k) {
            std::vector<Operation> expect = clone_fragment(gens, k, budget);
            std::vector<Operation> got = pol(gw, k, budget);
            ok = got.size() == expect.size();
            for (std::size_t i = 0; ok && i < got.size(); ++i)
                ok = got[i].same_table(expect[i]);
        }
        if (ok) return s;
    }
    return 0;
}

}  // namespace uclone
