#include "uclone/catalog.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

namespace uclone {

namespace {

void require_boolean(const Operation& f) {
    if (f.domain() != 2) throw error("catalog properties are Boolean-only");
}

std::uint64_t cells_of(const Operation& f) { return f.table().size(); }

}  // namespace

bool op_in_r0(const Operation& f) {
    require_boolean(f);
    return f.table().front() == 0;
}

bool op_in_r1(const Operation& f) {
    require_boolean(f);
    return f.table().back() == 1;
}

bool op_monotone(const Operation& f) {
    require_boolean(f);
    std::uint64_t cells = cells_of(f);
    for (std::uint64_t i = 0; i < cells; ++i)
        for (int b = 0; b < f.arity(); ++b) {
            std::uint64_t bit = std::uint64_t(1) << b;
            if (!(i & bit) && f.table()[i] > f.table()[i | bit]) return false;
        }
    return true;
}

bool op_selfdual(const Operation& f) {
    require_boolean(f);
    std::uint64_t cells = cells_of(f);
    for (std::uint64_t i = 0; i < cells; ++i)
        if (f.table()[i] == f.table()[cells - 1 - i]) return false;
    return true;
}

bool op_affine(const Operation& f) {
    require_boolean(f);
    std::uint64_t cells = cells_of(f);
    std::uint8_t base = f.table()[0];
    // Candidate linear form from the unit points, then a full verification.
    std::uint64_t coef = 0;
    for (int b = 0; b < f.arity(); ++b) {
        std::uint64_t bit = std::uint64_t(1) << b;
        if (f.table()[bit] != base) coef |= bit;
    }
    for (std::uint64_t i = 0; i < cells; ++i) {
        int parity = std::popcount(i & coef) & 1;
        if (f.table()[i] != (base ^ parity)) return false;
    }
    return true;
}

namespace {

/// True iff some subset of `points` (coordinate bitmasks) of size <= m ORs
/// to the full mask; DFS branches on the first uncovered coordinate.
bool can_cover(const std::vector<std::uint32_t>& points, std::uint32_t full, std::uint32_t got,
               int m) {
    if (got == full) return true;
    if (m == 0) return false;
    std::uint32_t missing = full & ~got;
    int c = std::countr_zero(missing);
    for (std::uint32_t p : points)
        if (p >> c & 1)
            if (can_cover(points, full, got | p, m - 1)) return true;
    return false;
}

bool sep_zero_points(const Operation& f, int m, bool ones_side) {
    require_boolean(f);
    std::uint64_t cells = cells_of(f);
    std::vector<std::uint32_t> pts;
    for (std::uint64_t i = 0; i < cells; ++i) {
        if (f.table()[i] != (ones_side ? 1 : 0)) continue;
        // Coordinate b is "bad" (nonzero for the 0-side, non-one for the
        // 1-side) when the corresponding tuple digit breaks separation.
        std::uint32_t bad = 0;
        for (int b = 0; b < f.arity(); ++b) {
            bool digit = (i >> (f.arity() - 1 - b)) & 1;
            if (digit != ones_side) bad |= std::uint32_t(1) << b;
        }
        pts.push_back(bad);
    }
    std::uint32_t full = f.arity() == 32 ? ~std::uint32_t(0)
                                         : (std::uint32_t(1) << f.arity()) - 1;
    int limit = (m == 0 || m > f.arity()) ? f.arity() : m;
    if (static_cast<int>(pts.size()) < limit) limit = static_cast<int>(pts.size());
    // Separating of degree m <=> no <=m points jointly break every coordinate.
    return !can_cover(pts, full, 0, limit);
}

}  // namespace

bool op_sep0(const Operation& f, int m) { return sep_zero_points(f, m, false); }
bool op_sep1(const Operation& f, int m) { return sep_zero_points(f, m, true); }

bool op_trivial(const Operation& f) {
    require_boolean(f);
    return f.is_constant() || f.is_projection();
}

bool op_quasi_unary(const Operation& f) {
    require_boolean(f);
    if (f.is_constant() || f.is_projection()) return true;
    std::uint64_t cells = cells_of(f);
    for (int b = 0; b < f.arity(); ++b) {
        bool neg_proj = true;
        for (std::uint64_t i = 0; i < cells && neg_proj; ++i) {
            bool digit = (i >> (f.arity() - 1 - b)) & 1;
            neg_proj = f.table()[i] == (digit ? 0 : 1);
        }
        if (neg_proj) return true;
    }
    return false;
}

bool op_conjunctive(const Operation& f) {
    require_boolean(f);
    if (f.is_constant()) return true;
    std::uint64_t cells = cells_of(f);
    // Candidate variable set: coordinates whose single zero kills the output.
    std::uint64_t mask = 0;
    for (int b = 0; b < f.arity(); ++b) {
        std::uint64_t point = (cells - 1) & ~(std::uint64_t(1) << (f.arity() - 1 - b));
        if (f.table()[point] == 0) mask |= std::uint64_t(1) << (f.arity() - 1 - b);
    }
    if (mask == 0) return false;
    for (std::uint64_t i = 0; i < cells; ++i)
        if (f.table()[i] != ((i & mask) == mask ? 1 : 0)) return false;
    return true;
}

bool op_disjunctive(const Operation& f) { return op_conjunctive(dual_op(f)); }

bool CloneEntry::contains(const Operation& f) const {
    const CloneProps& p = props;
    if (p.r0 && !op_in_r0(f)) return false;
    if (p.r1 && !op_in_r1(f)) return false;
    if (p.mono && !op_monotone(f)) return false;
    if (p.selfdual && !op_selfdual(f)) return false;
    if (p.affine && !op_affine(f)) return false;
    if (p.conj && !op_conjunctive(f)) return false;
    if (p.disj && !op_disjunctive(f)) return false;
    if (p.quasi_unary && !op_quasi_unary(f)) return false;
    if (p.trivial && !op_trivial(f)) return false;
    if (p.sep0 >= 0 && !op_sep0(f, p.sep0)) return false;
    if (p.sep1 >= 0 && !op_sep1(f, p.sep1)) return false;
    return true;
}

// --- catalog construction ---------------------------------------------------

namespace {

Operation c0() { return Operation::constant(1, 0, 2); }
Operation c1() { return Operation::constant(1, 1, 2); }

std::vector<Relation> dual_all(const std::vector<Relation>& rels) {
    std::vector<Relation> out;
    for (const Relation& r : rels) out.push_back(dual_rel(r));
    return out;
}

}  // namespace

CloneCatalog::CloneCatalog(int chain_bound) : bound_(chain_bound) {
    if (chain_bound < 2) throw error("chain bound must be at least 2");
    auto add = [&](std::string name, std::string dual, std::vector<Operation> gens,
                   CloneProps props, Covered cov = Covered::Covered, bool limit = false,
                   int index = 0) {
        CloneEntry e;
        e.name = std::move(name);
        e.coclone = "I" + e.name;
        e.generators = std::move(gens);
        e.dual_name = std::move(dual);
        e.props = props;
        e.covered = cov;
        e.chain_limit = limit;
        e.chain_index = index;
        entries_.push_back(std::move(e));
    };
    using O = Operation;
    add("BF", "BF", {O::b_or(), O::b_not()}, {});
    add("R0", "R1", {O::b_and(), O::b_xor()}, {.r0 = true});
    add("R1", "R0", {O::b_or(), O::b_iff()}, {.r1 = true});
    add("R2", "R2", {O::b_or(), O::b_and_iff()}, {.r0 = true, .r1 = true});
    add("M", "M", {O::b_or(), O::b_and(), c0(), c1()}, {.mono = true});
    add("M0", "M1", {O::b_or(), O::b_and(), c0()}, {.r0 = true, .mono = true});
    add("M1", "M0", {O::b_or(), O::b_and(), c1()}, {.r1 = true, .mono = true});
    add("M2", "M2", {O::b_or(), O::b_and()}, {.r0 = true, .r1 = true, .mono = true});

    add("S0", "S1", {O::b_impl()}, {.sep0 = 0}, Covered::Covered, true);
    add("S02", "S12", {O::b_or_andnot()}, {.r0 = true, .r1 = true, .sep0 = 0},
        Covered::Covered, true);
    add("S01", "S11", {O::b_or_and(), c1()}, {.mono = true, .sep0 = 0},
        Covered::FrozenCollapse, true);
    add("S00", "S10", {O::b_or_and()}, {.r0 = true, .r1 = true, .mono = true, .sep0 = 0},
        Covered::Covered, true);
    add("S1", "S0", {O::b_andnot()}, {.sep1 = 0}, Covered::Covered, true);
    add("S12", "S02", {O::b_and_ornot()}, {.r0 = true, .r1 = true, .sep1 = 0},
        Covered::Covered, true);
    add("S11", "S01", {O::b_and_or(), c0()}, {.mono = true, .sep1 = 0},
        Covered::FrozenCollapse, true);
    add("S10", "S00", {O::b_and_or()}, {.r0 = true, .r1 = true, .mono = true, .sep1 = 0},
        Covered::Covered, true);
    for (int n = 2; n <= chain_bound; ++n) {
        std::string i = "^" + std::to_string(n);
        Operation hn = O::b_hn(n);
        Operation dhn = dual_op(hn);
        add("S0" + i, "S1" + i, {O::b_impl(), dhn}, {.sep0 = n}, Covered::Covered, false, n);
        add("S02" + i, "S12" + i, {O::b_or_andnot(), dhn},
            {.r0 = true, .r1 = true, .sep0 = n}, Covered::Covered, false, n);
        add("S01" + i, "S11" + i, {dhn, c1()}, {.mono = true, .sep0 = n},
            Covered::FrozenCollapse, false, n);
        add("S00" + i, "S10" + i, {O::b_or_and(), dhn},
            {.r0 = true, .r1 = true, .mono = true, .sep0 = n}, Covered::Covered, false, n);
        add("S1" + i, "S0" + i, {O::b_andnot(), hn}, {.sep1 = n}, Covered::Covered, false, n);
        add("S12" + i, "S02" + i, {O::b_and_ornot(), hn},
            {.r0 = true, .r1 = true, .sep1 = n}, Covered::Covered, false, n);
        add("S11" + i, "S01" + i, {hn, c0()}, {.mono = true, .sep1 = n},
            Covered::FrozenCollapse, false, n);
        add("S10" + i, "S00" + i, {O::b_and_or(), hn},
            {.r0 = true, .r1 = true, .mono = true, .sep1 = n}, Covered::Covered, false, n);
    }

    add("D", "D", {O::b_maj_nnn()}, {.selfdual = true});
    add("D1", "D1", {O::b_maj_n()}, {.r0 = true, .r1 = true, .selfdual = true});
    add("D2", "D2", {O::b_maj()}, {.mono = true, .selfdual = true});
    add("L", "L", {O::b_xor(), c1()}, {.affine = true});
    add("L0", "L1", {O::b_xor()}, {.r0 = true, .affine = true});
    add("L1", "L0", {O::b_iff()}, {.r1 = true, .affine = true});
    add("L2", "L2", {O::b_xor3()}, {.r0 = true, .r1 = true, .affine = true});
    add("L3", "L3", {O::b_xnor3()}, {.selfdual = true, .affine = true});
    add("V", "E", {O::b_or(), c0(), c1()}, {.disj = true}, Covered::NotCovered);
    add("V0", "E1", {O::b_or(), c0()}, {.r0 = true, .disj = true});
    add("V1", "E0", {O::b_or(), c1()}, {.r1 = true, .disj = true}, Covered::NotCovered);
    add("V2", "E2", {O::b_or()}, {.r0 = true, .r1 = true, .disj = true});
    add("E", "V", {O::b_and(), c0(), c1()}, {.conj = true}, Covered::NotCovered);
    add("E0", "V1", {O::b_and(), c0()}, {.r0 = true, .conj = true}, Covered::NotCovered);
    add("E1", "V0", {O::b_and(), c1()}, {.r1 = true, .conj = true});
    add("E2", "V2", {O::b_and()}, {.r0 = true, .r1 = true, .conj = true});
    add("N", "N", {O::b_not(), c0(), c1()}, {.quasi_unary = true});
    add("N2", "N2", {O::b_not()}, {.selfdual = true, .quasi_unary = true});
    add("I", "I", {c0(), c1()}, {.trivial = true});
    add("I0", "I1", {c0()}, {.r0 = true, .trivial = true});
    add("I1", "I0", {c1()}, {.r1 = true, .trivial = true});
    add("I2", "I2", {}, {.r0 = true, .r1 = true, .trivial = true});

    for (CloneEntry& e : entries_) {
        e.weak_base = table_weak_base(e.coclone);
        // Shipped plain bases; the S/E/V chain-limit families are infinite
        // and shipped truncated.
        auto nand_family = [&](int upto) {
            std::vector<Relation> out;
            for (int k = 1; k <= upto; ++k) out.push_back(rel_nand(k));
            return out;
        };
        auto horn_family = [&](int upto) {  // (¬x1 ∨ ... ∨ ¬xk ∨ x)
            std::vector<Relation> out;
            for (int k = 1; k <= upto; ++k) out.push_back(impl_ladder_target(k));
            return out;
        };
        auto append = [](std::vector<Relation>& v, std::vector<Relation> w) {
            for (auto& r : w) v.push_back(std::move(r));
        };
        int trunc = chain_bound + 1;
        const std::string& nm = e.name;
        if (nm == "D") {
            e.plain_base = {rel_ne()};
        } else if (nm == "D1") {
            e.plain_base = {rel_ne(), rel_f(), rel_t()};
        } else if (nm == "D2") {
            e.plain_base = {rel_or(2), rel_impl(), rel_nand(2)};
        } else if (nm == "E") {
            e.plain_base = horn_family(trunc);
            e.plain_base_truncated = true;
        } else if (nm == "E0") {
            e.plain_base = nand_family(trunc);
            append(e.plain_base, horn_family(trunc));
            e.plain_base_truncated = true;
        } else if (nm == "E1") {
            e.plain_base = {rel_t()};
            append(e.plain_base, horn_family(trunc));
            e.plain_base_truncated = true;
        } else if (nm == "E2") {
            e.plain_base = nand_family(trunc);
            e.plain_base.push_back(rel_t());
            append(e.plain_base, horn_family(trunc));
            e.plain_base_truncated = true;
        } else if (nm.rfind("S1^", 0) == 0) {
            e.plain_base = {rel_nand(e.chain_index)};
        } else if (nm.rfind("S12^", 0) == 0) {
            e.plain_base = {rel_nand(e.chain_index), rel_t()};
        } else if (nm.rfind("S11^", 0) == 0) {
            e.plain_base = {rel_nand(e.chain_index), rel_impl()};
        } else if (nm.rfind("S10^", 0) == 0) {
            e.plain_base = {rel_nand(e.chain_index), rel_impl(), rel_t()};
        } else if (nm == "S1") {
            e.plain_base = nand_family(trunc);
            e.plain_base_truncated = true;
        } else if (nm == "S12") {
            e.plain_base = nand_family(trunc);
            e.plain_base.push_back(rel_t());
            e.plain_base_truncated = true;
        } else if (nm == "S11") {
            e.plain_base = nand_family(trunc);
            e.plain_base.push_back(rel_impl());
            e.plain_base_truncated = true;
        } else if (nm == "S10") {
            e.plain_base = nand_family(trunc);
            e.plain_base.push_back(rel_impl());
            e.plain_base.push_back(rel_t());
            e.plain_base_truncated = true;
        }
    }
    // Dual side of the shipped plain bases.
    for (CloneEntry& e : entries_) {
        if (!e.plain_base.empty()) continue;
        const CloneEntry* d = find(e.dual_name);
        if (d && !d->plain_base.empty() && d->name != e.name) {
            e.plain_base = dual_all(d->plain_base);
            e.plain_base_truncated = d->plain_base_truncated;
        }
    }
}

const CloneEntry* CloneCatalog::find(const std::string& clone_name) const {
    for (const CloneEntry& e : entries_)
        if (e.name == clone_name) return &e;
    return nullptr;
}

const CloneEntry* CloneCatalog::find_coclone(const std::string& coclone_name) const {
    for (const CloneEntry& e : entries_)
        if (e.coclone == coclone_name) return &e;
    return nullptr;
}

const CloneEntry& CloneCatalog::at(const std::string& clone_name) const {
    if (const CloneEntry* e = find(clone_name)) return *e;
    throw error("unknown clone " + clone_name);
}

const CloneEntry& CloneCatalog::at_coclone(const std::string& coclone_name) const {
    if (const CloneEntry* e = find_coclone(coclone_name)) return *e;
    throw error("unknown co-clone " + coclone_name);
}

bool CloneCatalog::clone_leq(const CloneEntry& a, const CloneEntry& b) const {
    for (const Operation& g : a.generators)
        if (!b.contains(g)) return false;
    return true;
}

std::vector<const CloneEntry*> CloneCatalog::covers_of(const CloneEntry& e) const {
    std::vector<const CloneEntry*> above;
    for (const CloneEntry& o : entries_)
        if (&o != &e && clone_leq(e, o) && !clone_leq(o, e)) above.push_back(&o);
    std::vector<const CloneEntry*> covers;
    for (const CloneEntry* x : above) {
        bool minimal = true;
        for (const CloneEntry* y : above)
            if (y != x && clone_leq(*y, *x) && !clone_leq(*x, *y)) {
                minimal = false;
                break;
            }
        if (minimal) covers.push_back(x);
    }
    return covers;
}

// --- classification ---------------------------------------------------------

AtomProfile atom_profile(const Language& g) {
    if (g.domain() != 2) throw error("atom profile is Boolean-only");
    auto all = [&](const Operation& f) { return preserves_all(f, g); };
    AtomProfile p;
    p.c0 = all(c0());
    p.c1 = all(c1());
    p.neg = all(Operation::b_not());
    p.meet = all(Operation::b_and());
    p.join = all(Operation::b_or());
    p.maj = all(Operation::b_maj());
    p.minority = all(Operation::b_xor3());
    return p;
}

UsatVerdict usat_class(const Language& g) {
    AtomProfile p = atom_profile(g);
    UsatVerdict v;
    if (p.all_false()) {
        v.kind = UsatVerdict::Kind::USComplete;
    } else if (p.exactly_c0() || p.exactly_c1()) {
        v.kind = UsatVerdict::Kind::CoNPComplete;
    } else {
        v.kind = UsatVerdict::Kind::Tractable;
        if (p.c0 && p.c1)
            v.reason = "both-constants";
        else if (p.neg)
            v.reason = "complement-closed";
        else
            v.reason = "Schaefer-enumerable";
    }
    return v;
}

CocloneId identify_coclone(const Language& g, const CloneCatalog& cat) {
    if (g.domain() != 2) throw error("co-clone identification is Boolean-only");
    std::vector<const CloneEntry*> preserving;
    for (const CloneEntry& e : cat.entries()) {
        bool ok = true;
        for (const Operation& f : e.generators)
            if (!preserves_all(f, g)) {
                ok = false;
                break;
            }
        if (ok) preserving.push_back(&e);
    }
    // preserving is never empty: I2 has no generators.
    std::vector<const CloneEntry*> maximal;
    for (const CloneEntry* x : preserving) {
        bool is_max = true;
        for (const CloneEntry* y : preserving)
            if (y != x && cat.clone_leq(*x, *y) && !cat.clone_leq(*y, *x)) {
                is_max = false;
                break;
            }
        if (is_max) maximal.push_back(x);
    }
    CocloneId out;
    const CloneEntry* c = maximal.front();
    if (maximal.size() > 1) {  // defensive; the catalog lattice is join-closed
        out.exact = false;
        out.lower = out.upper = c->coclone;
        return out;
    }
    if (c->chain_limit) {
        out.exact = false;
        out.lower = "I" + c->name + "^" + std::to_string(cat.chain_bound());
        out.upper = c->coclone;
        return out;
    }
    out.exact = true;
    out.name = c->coclone;
    return out;
}

Covered covered_verdict(const std::string& coclone_name, const CloneCatalog& cat) {
    return cat.at_coclone(coclone_name).covered;
}

UcspVerdict ucsp_class(const Language& g, const Budget& budget) {
    UcspVerdict v;
    if (g.domain() == 2) {
        AtomProfile p = atom_profile(g);
        v.exact = true;
        if (p.all_false()) {
            v.kind = UcspVerdict::Kind::USComplete;
        } else if (p.exactly_c0() || p.exactly_c1()) {
            v.kind = UcspVerdict::Kind::CoNPComplete;
            v.const_value = p.exactly_c1() ? 1 : 0;
        } else {
            v.kind = UcspVerdict::Kind::Other;
        }
        return v;
    }
    int k = budget.pol_arity(g.domain());
    v.exact = false;
    v.bound = k;
    std::set<int> const_values;
    bool other = false;
    for (int j = 1; j <= k && !other; ++j) {
        for (const Operation& f : pol(g, j, budget)) {
            if (f.is_projection()) continue;
            bool is_const = true;
            for (std::uint8_t x : f.table())
                if (x != f.table()[0]) {
                    is_const = false;
                    break;
                }
            if (is_const)
                const_values.insert(f.table()[0]);
            else
                other = true;
        }
    }
    if (other || const_values.size() > 1) {
        v.kind = UcspVerdict::Kind::Other;
    } else if (const_values.size() == 1) {
        v.kind = UcspVerdict::Kind::CoNPComplete;
        v.const_value = *const_values.begin();
    } else {
        v.kind = UcspVerdict::Kind::USComplete;
    }
    return v;
}

std::vector<Operation> clone_fragment(const std::vector<Operation>& gens, int k,
                                      const Budget& budget) {
    if (k < 1) throw error("fragment arity must be positive");
    int domain = gens.empty() ? 2 : gens[0].domain();
    std::uint64_t cells = pow_u64(static_cast<std::uint64_t>(domain), static_cast<unsigned>(k));
    if (cells > 16) throw budget_error("fragment arity too large");
    std::set<std::vector<std::uint8_t>> seen;
    std::vector<Operation> work;
    for (int i = 1; i <= k; ++i) {
        Operation p = Operation::projection(k, i, domain);
        if (seen.insert(p.table()).second) work.push_back(std::move(p));
    }
    std::uint64_t steps = 0;
    for (bool grew = true; grew;) {
        grew = false;
        std::size_t snapshot = work.size();
        for (const Operation& gop : gens) {
            int m = gop.arity();
            std::vector<std::size_t> pick(static_cast<std::size_t>(m), 0);
            for (;;) {
                if (++steps > budget.closure_members)
                    throw budget_error("clone fragment exceeds composition budget");
                std::vector<std::uint8_t> table(cells);
                for (std::uint64_t c = 0; c < cells; ++c) {
                    Tuple args(static_cast<std::size_t>(m));
                    for (int a = 0; a < m; ++a)
                        args[static_cast<std::size_t>(a)] = work[pick[static_cast<std::size_t>(a)]].table()[c];
                    table[c] = gop.eval(args);
                }
                if (seen.insert(table).second) {
                    work.push_back(Operation::make("", k, domain, std::move(table)));
                    grew = true;
                }
                int pos = m - 1;
                while (pos >= 0 && pick[static_cast<std::size_t>(pos)] + 1 == snapshot) {
                    pick[static_cast<std::size_t>(pos)] = 0;
                    --pos;
                }
                if (pos < 0) break;
                ++pick[static_cast<std::size_t>(pos)];
            }
        }
        snapshot = work.size();
    }
    std::sort(work.begin(), work.end(),
              [](const Operation& a, const Operation& b) { return a.table() < b.table(); });
    return work;
}

// --- stock relations ---------------------------------------------------------

Relation rel_f() { return Relation::make("F", 1, 2, {{0}}); }
Relation rel_t() { return Relation::make("T", 1, 2, {{1}}); }
Relation rel_ne() { return Relation::make("Ne", 2, 2, {{0, 1}, {1, 0}}); }

Relation rel_or(int n) {
    std::vector<Tuple> ts;
    for (std::uint64_t i = 1; i < (std::uint64_t(1) << n); ++i) ts.push_back(index_tuple(i, 2, n));
    return Relation::make("OR" + std::to_string(n), n, 2, std::move(ts));
}

Relation rel_nand(int n) {
    std::vector<Tuple> ts;
    for (std::uint64_t i = 0; i + 1 < (std::uint64_t(1) << n); ++i)
        ts.push_back(index_tuple(i, 2, n));
    return Relation::make("NAND" + std::to_string(n), n, 2, std::move(ts));
}

Relation rel_impl() { return Relation::make("IMPL", 2, 2, {{0, 0}, {0, 1}, {1, 1}}); }

Relation rel_even(int n) {
    std::vector<Tuple> ts;
    for (std::uint64_t i = 0; i < (std::uint64_t(1) << n); ++i)
        if (!(std::popcount(i) & 1)) ts.push_back(index_tuple(i, 2, n));
    return Relation::make("EVEN" + std::to_string(n), n, 2, std::move(ts));
}

Relation rel_one_in_three() {
    return Relation::make("OneInThree", 3, 2, {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}});
}

Relation rel_iff_and() {
    return Relation::make("IFFAND", 3, 2, {{0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {1, 1, 1}});
}

Relation rel_r5() {
    return Relation::make("R5", 5, 2,
                          {{0, 0, 1, 0, 1}, {0, 1, 0, 0, 1}, {1, 0, 0, 0, 1}});
}

Relation rel_r5_zero() {
    return Relation::make("R5Z", 5, 2,
                          {{0, 0, 0, 0, 0}, {0, 0, 1, 0, 1}, {0, 1, 0, 0, 1}, {1, 0, 0, 0, 1}});
}

Relation rel_ror_source() {
    return Relation::make("R8", 8, 2,
                          {{0, 0, 1, 1, 1, 0, 0, 1},
                           {0, 1, 0, 1, 0, 1, 0, 1},
                           {1, 0, 0, 0, 1, 1, 0, 1}});
}

// --- shipped weak bases -------------------------------------------------------

namespace {

Relation wb_e() {
    // (x1 <-> x2 ∧ x3) ∧ (x2 ∨ x3 -> x4)
    return Relation::make("R_IE", 4, 2,
                          {{0, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 1}, {0, 1, 0, 1}, {1, 1, 1, 1}});
}

Relation append_const(const Relation& r, std::string name, std::uint8_t v) {
    std::vector<Tuple> ts;
    for (Tuple t : r.tuples()) {
        t.push_back(v);
        ts.push_back(std::move(t));
    }
    return Relation::make(std::move(name), r.arity() + 1, r.domain(), std::move(ts));
}

Relation wb_e1() {
    return Relation::make("R_IE1", 4, 2, {{0, 0, 0, 1}, {0, 0, 1, 1}, {0, 1, 0, 1}, {1, 1, 1, 1}});
}

Relation wb_e2() {
    return Relation::make(
        "R_IE2", 5, 2,
        {{0, 0, 0, 0, 1}, {0, 0, 1, 0, 1}, {0, 1, 0, 0, 1}, {1, 1, 1, 0, 1}});
}

Relation wb_d2() {
    return Relation::make("R_ID2", 6, 2,
                          {{0, 1, 1, 0, 0, 1}, {1, 0, 0, 1, 0, 1}, {1, 1, 0, 0, 0, 1}});
}

Relation wb_s1n(int n) {
    return append_const(rel_nand(n), "R_IS1^" + std::to_string(n), 0);
}

Relation wb_s12n(int n) {
    return append_const(wb_s1n(n), "R_IS12^" + std::to_string(n), 1);
}

Relation wb_s11n(int n) {
    // NAND^n(x1..xn) ∧ (¬x -> ¬x1 ∧ ... ∧ ¬xn) ∧ F(c0); coordinates
    // (x1, ..., xn, x, c0).
    std::vector<Tuple> ts;
    Relation nand = rel_nand(n);
    for (Tuple t : nand.tuples()) {
        t.push_back(1);
        t.push_back(0);
        ts.push_back(std::move(t));
    }
    Tuple zero(static_cast<std::size_t>(n + 2), 0);
    ts.push_back(zero);
    return Relation::make("R_IS11^" + std::to_string(n), n + 2, 2, std::move(ts));
}

Relation wb_s10n(int n) {
    return append_const(wb_s11n(n), "R_IS10^" + std::to_string(n), 1);
}

}  // namespace

std::optional<Relation> table_weak_base(const std::string& coclone) {
    if (coclone == "ID") return rel_ne().renamed("R_ID");
    if (coclone == "ID1")
        return Relation::make("R_ID1", 4, 2, {{0, 1, 0, 1}, {1, 0, 0, 1}});
    if (coclone == "ID2") return wb_d2();
    if (coclone == "IE") return wb_e();
    if (coclone == "IE0") return append_const(wb_e(), "R_IE0", 0);
    if (coclone == "IE1") return wb_e1();
    if (coclone == "IE2") return wb_e2();
    if (coclone == "IV") return dual_rel(wb_e()).renamed("R_IV");
    if (coclone == "IV1") return dual_rel(append_const(wb_e(), "", 0)).renamed("R_IV1");
    if (coclone == "IV0") return dual_rel(wb_e1()).renamed("R_IV0");
    if (coclone == "IV2") return dual_rel(wb_e2()).renamed("R_IV2");
    auto caret = coclone.find('^');
    if (caret != std::string::npos) {
        std::string fam = coclone.substr(0, caret);
        int n = 0;
        try {
            n = std::stoi(coclone.substr(caret + 1));
        } catch (const std::exception&) {
            return std::nullopt;
        }
        if (n < 2) return std::nullopt;
        if (fam == "IS1") return wb_s1n(n);
        if (fam == "IS12") return wb_s12n(n);
        if (fam == "IS11") return wb_s11n(n);
        if (fam == "IS10") return wb_s10n(n);
        if (fam == "IS0") return dual_rel(wb_s1n(n)).renamed("R_IS0^" + std::to_string(n));
        if (fam == "IS02") return dual_rel(wb_s12n(n)).renamed("R_IS02^" + std::to_string(n));
        if (fam == "IS01") return dual_rel(wb_s11n(n)).renamed("R_IS01^" + std::to_string(n));
        if (fam == "IS00") return dual_rel(wb_s10n(n)).renamed("R_IS00^" + std::to_string(n));
    }
    return std::nullopt;
}

// --- explicit definitions ------------------------------------------------------

namespace {

std::shared_ptr<const Language> lang_of(const Relation& r) {
    auto g = std::make_shared<Language>(r.domain());
    g->add(r);
    return g;
}

}  // namespace

std::vector<std::pair<ConjFormula, Relation>> id2_definitions() {
    auto lang = lang_of(wb_d2());
    auto make = [&](std::string name, std::vector<std::string> atom_args) {
        ConjFormula f;
        f.name = name;
        f.lang = lang;
        f.free_vars = {"x1", "x2"};
        f.bound_vars = {{"x3", Quant::ExistsUnique},
                        {"x4", Quant::ExistsUnique},
                        {"c0", Quant::Frozen},
                        {"c1", Quant::Frozen}};
        f.atoms = {Atom{"R_ID2", std::move(atom_args)}};
        return f;
    };
    std::vector<std::pair<ConjFormula, Relation>> out;
    out.emplace_back(make("OR2", {"x1", "x2", "x3", "x4", "c0", "c1"}), rel_or(2));
    out.emplace_back(make("IMPL", {"x3", "x2", "x1", "x4", "c0", "c1"}), rel_impl());
    out.emplace_back(make("NAND2", {"x3", "x4", "x1", "x2", "c0", "c1"}), rel_nand(2));
    return out;
}

ConjFormula impl_ladder(int k) {
    if (k < 1) throw error("ladder width must be positive");
    ConjFormula f;
    f.name = "IMP" + std::to_string(k);
    f.lang = lang_of(wb_e1());
    for (int i = 1; i <= k; ++i) f.free_vars.push_back("x" + std::to_string(i));
    f.free_vars.push_back("x");
    if (k == 1) {
        f.atoms.push_back(Atom{"R_IE1", {"x1", "x1", "x", "c1"}});
    } else {
        // w runs over the left-associated conjunction prefix x1 ∧ ... ∧ xi.
        std::string w = "x1";
        for (int i = 2; i <= k - 1; ++i) {
            std::string wi = "w" + std::to_string(i);
            f.atoms.push_back(Atom{"R_IE1", {wi, w, "x" + std::to_string(i), "c1"}});
            f.bound_vars.emplace_back(wi, Quant::ExistsUnique);
            w = wi;
        }
        f.atoms.push_back(Atom{"R_IE1", {"a", "x" + std::to_string(k), w, "c1"}});
        f.atoms.push_back(Atom{"R_IE1", {"a", "a", "x", "c1"}});
        f.bound_vars.emplace_back("a", Quant::ExistsUnique);
    }
    f.bound_vars.emplace_back("c1", Quant::ExistsUnique);
    return f;
}

Relation impl_ladder_target(int k) {
    std::vector<Tuple> ts;
    for (std::uint64_t i = 0; i < (std::uint64_t(1) << (k + 1)); ++i) {
        Tuple t = index_tuple(i, 2, k + 1);
        bool head = true;
        for (int j = 0; j < k; ++j) head = head && t[static_cast<std::size_t>(j)] == 1;
        if (head && t.back() == 0) continue;
        ts.push_back(std::move(t));
    }
    return Relation::make("IMP" + std::to_string(k), k + 1, 2, std::move(ts));
}

ConjFormula nand_definition(int k) {
    if (k < 1) throw error("width must be positive");
    ConjFormula f;
    f.name = "NAND" + std::to_string(k);
    f.lang = lang_of(wb_e2());
    for (int i = 1; i <= k; ++i) f.free_vars.push_back("x" + std::to_string(i));
    if (k == 1) {
        f.atoms.push_back(Atom{"R_IE2", {"x1", "x1", "x1", "x1", "c1"}});
        f.bound_vars.emplace_back("c1", Quant::ExistsUnique);
        return f;
    }
    std::string w = "x1";
    for (int i = 2; i <= k; ++i) {
        std::string wi = "w" + std::to_string(i);
        f.atoms.push_back(Atom{"R_IE2", {wi, w, "x" + std::to_string(i), "c0", "c1"}});
        f.bound_vars.emplace_back(wi, Quant::ExistsUnique);
        w = wi;
    }
    f.atoms.push_back(Atom{"R_IE2", {w, w, w, w, "c1"}});
    f.bound_vars.emplace_back("c0", Quant::ExistsUnique);
    f.bound_vars.emplace_back("c1", Quant::ExistsUnique);
    return f;
}

}  // namespace uclone
