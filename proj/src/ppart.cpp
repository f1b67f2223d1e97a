#include "uclone/ppart.hpp"

#include <algorithm>

namespace uclone {

namespace {

Tuple point_of(std::uint64_t idx, int domain, int k) { return index_tuple(idx, domain, k); }

PartialOperation dual_pop(const PartialOperation& f) {
    if (f.domain() != 2) throw error("dual of a non-Boolean partial operation");
    std::size_t cells = f.table().size();
    std::vector<std::int8_t> t(cells, -1);
    for (std::size_t i = 0; i < cells; ++i) {
        std::int8_t v = f.table()[cells - 1 - i];
        if (v >= 0) t[i] = static_cast<std::int8_t>(1 - v);
    }
    return PartialOperation::make("dual(" + f.name() + ")", f.arity(), f.domain(),
                                  std::move(t));
}

const Relation* find_same(const Language& g, const Relation& r) {
    for (const Relation& x : g.relations())
        if (x.same_tuples(r)) return &x;
    return nullptr;
}

CertifyResult reject(std::string why) { return {false, std::move(why)}; }

}  // namespace

bool is_meet_closed(const PartialOperation& f) {
    if (f.domain() != 2) throw error("is_meet_closed expects a Boolean operation");
    std::vector<std::uint64_t> dom;
    for (std::uint64_t i = 0; i < f.table().size(); ++i)
        if (f.table()[i] >= 0) dom.push_back(i);
    for (std::uint64_t a : dom)
        for (std::uint64_t b : dom)
            if (f.table()[a & b] < 0) return false;
    return true;
}

bool is_zero_closed(const PartialOperation& f) { return f.table()[0] >= 0; }

CertifyResult certify_not_upp(const Language& gamma, const Relation& target,
                              const PartialOperation& f, SeparationRoute route,
                              const CloneCatalog& cat, const Budget& budget) {
    if (route == SeparationRoute::Frozen)
        return reject("precondition: use certify_frozen_collapse for the frozen route");
    const char* want = route == SeparationRoute::IE0 ? "IE0" : "IE";
    CocloneId id = identify_coclone(gamma, cat);
    if (!id.exact || id.name != want)
        return reject(std::string("precondition: language does not generate ") + want);
    if (!is_meet_closed(f)) return reject("not meet-closed");
    if (route == SeparationRoute::IE0 && !is_zero_closed(f))
        return reject("not zero-closed");
    if (!preserves_all(f, gamma)) return reject("violates a language member");
    if (preserves(f, target)) return reject("preserves the target relation");
    (void)budget;
    return {true, ""};
}

CertifyResult certify_frozen_collapse(const Language& gw, const Language& gp,
                                      const PartialOperation& f, int n) {
    if (n < 2) return reject("precondition: chain index must be at least 2");
    if (f.arity() != n) return reject("witness arity does not match the chain index");
    // Dual side: plain base built on OR^n instead of NAND^n.
    if (find_same(gp, rel_or(n)) && !find_same(gp, rel_nand(n)))
        return certify_frozen_collapse(dual_language(gw), dual_language(gp),
                                       dual_pop(f), n);
    const Relation* nand = find_same(gp, rel_nand(n));
    if (!nand) return reject("precondition: plain base lacks the n-ary NAND relation");
    auto wb = table_weak_base("IS11^" + std::to_string(n));
    if (!wb || !find_same(gw, *wb))
        return reject("precondition: weak base does not match the shipped IS11 data");
    if (f.eval(Tuple(static_cast<std::size_t>(n), 0)) != 0)
        return reject("witness does not map the all-zero point to 0");
    for (int i = 0; i < n; ++i) {
        Tuple e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(i)] = 1;
        if (f.eval(e) != 1)
            return reject("witness is not 1 on every weight-one point");
    }
    if (!preserves_all(f, gw)) return reject("violates the weak base");
    if (preserves(f, *nand)) return reject("preserves the n-ary NAND relation");
    return {true, ""};
}

DeterminedShape ie0_determined_shape(const Relation& r, int i) {
    if (r.domain() != 2) throw error("ie0_determined_shape expects a Boolean relation");
    if (i < 1 || i > r.arity()) throw error("coordinate out of range");
    if (!preserves(Operation::b_and(), r) ||
        !preserves(Operation::constant(1, 0, 2), r))
        throw error("relation is not preserved by meet and constant 0");
    std::size_t c = static_cast<std::size_t>(i - 1);
    DeterminedShape out;
    bool all_zero = true;
    for (const Tuple& t : r.tuples()) all_zero = all_zero && t[c] == 0;
    if (all_zero) {
        out.kind = DeterminedShape::Kind::Constant0;
        return out;
    }
    std::vector<int> s;
    for (int j = 0; j < r.arity(); ++j) {
        if (j == static_cast<int>(c)) continue;
        bool above = true;
        for (const Tuple& t : r.tuples())
            above = above && t[static_cast<std::size_t>(j)] >= t[c];
        if (above) s.push_back(j + 1);
    }
    if (!s.empty()) {
        bool exact = true;
        for (const Tuple& t : r.tuples()) {
            std::uint8_t meet = 1;
            for (int j : s) meet &= t[static_cast<std::size_t>(j - 1)];
            exact = exact && meet == t[c];
        }
        if (exact) {
            out.kind = DeterminedShape::Kind::Conjunction;
            out.indices = std::move(s);
            return out;
        }
    }
    return out;
}

PartialOperation frozen_witness(int n) {
    std::vector<std::pair<Tuple, int>> pts;
    pts.emplace_back(Tuple(static_cast<std::size_t>(n), 0), 0);
    for (int i = 0; i < n; ++i) {
        Tuple e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(i)] = 1;
        pts.emplace_back(std::move(e), 1);
    }
    return PartialOperation::from_points("w" + std::to_string(n), n, 2, pts);
}

PartialOperation ie0_witness() {
    return PartialOperation::from_points(
        "f", 2, 2, {{{0, 0}, 0}, {{0, 1}, 1}, {{1, 0}, 1}});
}

}  // namespace uclone
