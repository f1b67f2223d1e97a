#include "uclone/csp.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <thread>

namespace uclone {

int Instance::var_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == name) return static_cast<int>(i);
    return -1;
}

void Instance::validate() const {
    if (!lang) throw error("instance has no language");
    if (lang->domain() != domain) throw error("instance/language domain mismatch");
    for (std::size_t i = 0; i < vars.size(); ++i)
        for (std::size_t j = i + 1; j < vars.size(); ++j)
            if (vars[i] == vars[j]) throw error("duplicate variable " + vars[i]);
    for (const Constraint& c : constraints) {
        const Relation& r = lang->at(c.rel);
        if (static_cast<int>(c.args.size()) != r.arity())
            throw error("constraint " + c.rel + " has wrong argument count");
        for (int a : c.args)
            if (a < 0 || a >= static_cast<int>(vars.size()))
                throw error("constraint " + c.rel + " references unknown variable");
    }
}

namespace {

struct SearchCtx {
    int domain = 2;
    int nv = 0;
    /// Constraints grouped by the last variable they mention.
    struct Atom {
        std::vector<int> args;
        Bits mask;
    };
    std::vector<std::vector<Atom>> by_trigger;
    /// Per-variable value masks from unary propagation (bit d set = allowed).
    std::vector<std::uint32_t> allowed;
    bool infeasible = false;
};

SearchCtx prepare(const Instance& inst, const Budget& budget) {
    inst.validate();
    if (static_cast<int>(inst.vars.size()) > budget.csp_vars)
        throw budget_error("instance has " + std::to_string(inst.vars.size()) +
                           " variables, budget " + std::to_string(budget.csp_vars));
    SearchCtx ctx;
    ctx.domain = inst.domain;
    ctx.nv = static_cast<int>(inst.vars.size());
    ctx.by_trigger.resize(static_cast<std::size_t>(ctx.nv));
    ctx.allowed.assign(static_cast<std::size_t>(ctx.nv),
                       (std::uint32_t(1) << inst.domain) - 1);
    for (const Constraint& c : inst.constraints) {
        const Relation& r = inst.lang->at(c.rel);
        if (r.empty()) {
            ctx.infeasible = true;
            return ctx;
        }
        // Unary support pruning: a variable can only take values that occur
        // at its positions in the relation.
        for (std::size_t p = 0; p < c.args.size(); ++p) {
            std::uint32_t support = 0;
            for (const Tuple& t : r.tuples()) support |= std::uint32_t(1) << t[p];
            ctx.allowed[static_cast<std::size_t>(c.args[p])] &= support;
        }
        SearchCtx::Atom a;
        a.args = c.args;
        a.mask = r.mask();
        int trig = 0;
        for (int v : c.args) trig = std::max(trig, v);
        ctx.by_trigger[static_cast<std::size_t>(trig)].push_back(std::move(a));
    }
    for (int v = 0; v < ctx.nv; ++v)
        if (!ctx.allowed[static_cast<std::size_t>(v)]) ctx.infeasible = true;
    return ctx;
}

bool atoms_hold(const SearchCtx& ctx, const Tuple& assign, int v) {
    for (const SearchCtx::Atom& a : ctx.by_trigger[static_cast<std::size_t>(v)]) {
        std::uint64_t idx = 0;
        for (int p : a.args)
            idx = idx * static_cast<std::uint64_t>(ctx.domain) +
                  assign[static_cast<std::size_t>(p)];
        if (!a.mask.test(idx)) return false;
    }
    return true;
}

/// Counts completions of `assign` from variable v on. `emit` may stop the
/// search early by returning false (used for unique/enumerate).
bool walk(const SearchCtx& ctx, Tuple& assign, int v,
          const std::function<bool(const Tuple&)>& emit) {
    if (v == ctx.nv) return emit(assign);
    for (int d = 0; d < ctx.domain; ++d) {
        if (!(ctx.allowed[static_cast<std::size_t>(v)] >> d & 1)) continue;
        assign[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(d);
        if (!atoms_hold(ctx, assign, v)) continue;
        if (!walk(ctx, assign, v + 1, emit)) return false;
    }
    return true;
}

std::uint64_t count_from(const SearchCtx& ctx, Tuple prefix, int from) {
    std::uint64_t n = 0;
    walk(ctx, prefix, from, [&](const Tuple&) {
        ++n;
        return true;
    });
    return n;
}

}  // namespace

std::uint64_t count_models(const Instance& inst, int jobs, const Budget& budget) {
    SearchCtx ctx = prepare(inst, budget);
    if (ctx.infeasible) return 0;
    if (ctx.nv == 0) return 1;  // no constraint has an empty relation here
    int split = 0;
    if (jobs > 1) {
        std::uint64_t branches = 1;
        while (split < ctx.nv && branches < static_cast<std::uint64_t>(jobs) * 4) {
            branches *= static_cast<std::uint64_t>(ctx.domain);
            ++split;
        }
    }
    if (split == 0) {
        Tuple assign(static_cast<std::size_t>(ctx.nv), 0);
        return count_from(ctx, std::move(assign), 0);
    }
    // Deterministic split: every assignment of the first `split` variables
    // is an independent task; the sum is order-independent.
    std::uint64_t tasks = pow_u64(static_cast<std::uint64_t>(ctx.domain),
                                  static_cast<unsigned>(split));
    std::vector<std::uint64_t> results(tasks, 0);
    std::atomic<std::uint64_t> next{0};
    auto worker = [&]() {
        for (;;) {
            std::uint64_t t = next.fetch_add(1);
            if (t >= tasks) return;
            Tuple assign(static_cast<std::size_t>(ctx.nv), 0);
            Tuple head = index_tuple(t, ctx.domain, split);
            bool ok = true;
            for (int v = 0; v < split && ok; ++v) {
                assign[static_cast<std::size_t>(v)] = head[static_cast<std::size_t>(v)];
                ok = (ctx.allowed[static_cast<std::size_t>(v)] >>
                          head[static_cast<std::size_t>(v)] & 1) &&
                     atoms_hold(ctx, assign, v);
            }
            if (ok) results[t] = count_from(ctx, assign, split);
        }
    };
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    std::uint64_t total = 0;
    for (std::uint64_t r : results) total += r;
    return total;
}

UniqueVerdict unique_model(const Instance& inst, const Budget& budget) {
    SearchCtx ctx = prepare(inst, budget);
    UniqueVerdict out;
    if (ctx.infeasible) return out;
    std::vector<Tuple> found;
    Tuple assign(static_cast<std::size_t>(ctx.nv), 0);
    walk(ctx, assign, 0, [&](const Tuple& m) {
        found.push_back(m);
        return found.size() < 2;  // stop at the second model
    });
    if (found.empty()) return out;
    if (found.size() == 1) {
        out.kind = UniqueVerdict::Kind::Unique;
        out.model = found[0];
    } else {
        out.kind = UniqueVerdict::Kind::Many;
        out.model = found[0];
        out.second = found[1];
    }
    return out;
}

std::vector<Tuple> enumerate_models(const Instance& inst, std::uint64_t limit,
                                    const Budget& budget) {
    SearchCtx ctx = prepare(inst, budget);
    std::vector<Tuple> out;
    if (ctx.infeasible) return out;
    Tuple assign(static_cast<std::size_t>(ctx.nv), 0);
    walk(ctx, assign, 0, [&](const Tuple& m) {
        out.push_back(m);
        return limit == 0 || out.size() < limit;
    });
    return out;
}

Instance dual_instance(const Instance& inst) {
    inst.validate();
    Instance out = inst;
    out.lang = std::make_shared<Language>(dual_language(*inst.lang));
    return out;
}

}  // namespace uclone
