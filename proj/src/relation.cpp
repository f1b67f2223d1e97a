#include "uclone/relation.hpp"

#include <algorithm>

namespace uclone {

// --- Relation -------------------------------------------------------------

Relation Relation::make(std::string name, int arity, int domain, std::vector<Tuple> tuples) {
    if (arity < 1) throw error("relation arity must be positive");
    if (domain < 2) throw error("domain size must be at least 2");
    for (const Tuple& t : tuples) {
        if (static_cast<int>(t.size()) != arity)
            throw error("tuple arity mismatch in relation " + name);
        for (std::uint8_t v : t)
            if (v >= domain) throw error("tuple value out of domain in relation " + name);
    }
    std::sort(tuples.begin(), tuples.end());
    if (std::adjacent_find(tuples.begin(), tuples.end()) != tuples.end())
        throw error("duplicate tuple in relation " + name);
    Relation r;
    r.name_ = std::move(name);
    r.arity_ = arity;
    r.domain_ = domain;
    r.tuples_ = std::move(tuples);
    return r;
}

bool Relation::contains(const Tuple& t) const {
    return std::binary_search(tuples_.begin(), tuples_.end(), t);
}

Bits Relation::mask() const {
    Bits b(pow_u64(static_cast<std::uint64_t>(domain_), static_cast<unsigned>(arity_)));
    for (const Tuple& t : tuples_) b.set(tuple_index(t, domain_));
    return b;
}

Relation Relation::renamed(std::string name) const {
    Relation r = *this;
    r.name_ = std::move(name);
    return r;
}

bool Relation::same_tuples(const Relation& o) const {
    return arity_ == o.arity_ && domain_ == o.domain_ && tuples_ == o.tuples_;
}

bool Relation::canonical_less(const Relation& a, const Relation& b) {
    if (a.arity_ != b.arity_) return a.arity_ < b.arity_;
    if (a.tuples_ != b.tuples_) return a.tuples_ < b.tuples_;
    return a.domain_ < b.domain_;
}

Relation Relation::eq(int domain) {
    std::vector<Tuple> ts;
    for (int d = 0; d < domain; ++d)
        ts.push_back({static_cast<std::uint8_t>(d), static_cast<std::uint8_t>(d)});
    return make("Eq", 2, domain, std::move(ts));
}

Relation Relation::full(int arity, int domain) {
    std::uint64_t n = pow_u64(static_cast<std::uint64_t>(domain), static_cast<unsigned>(arity));
    std::vector<Tuple> ts;
    ts.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) ts.push_back(index_tuple(i, domain, arity));
    return make("Full", arity, domain, std::move(ts));
}

Relation Relation::empty_rel(int arity, int domain) {
    return make("Empty", arity, domain, {});
}

Relation Relation::from_mask(std::string name, int arity, int domain, const Bits& mask) {
    std::vector<Tuple> ts;
    for (std::uint64_t i = 0; i < mask.size(); ++i)
        if (mask.test(i)) ts.push_back(index_tuple(i, domain, arity));
    return make(std::move(name), arity, domain, std::move(ts));
}

// --- Operation --------------------------------------------------------------

Operation Operation::make(std::string name, int arity, int domain,
                          std::vector<std::uint8_t> table) {
    if (arity < 1) throw error("operation arity must be positive");
    if (domain < 2) throw error("domain size must be at least 2");
    std::uint64_t cells =
        pow_u64(static_cast<std::uint64_t>(domain), static_cast<unsigned>(arity));
    if (table.size() != cells) throw error("operation table size mismatch for " + name);
    for (std::uint8_t v : table)
        if (v >= domain) throw error("operation value out of domain in " + name);
    Operation f;
    f.name_ = std::move(name);
    f.arity_ = arity;
    f.domain_ = domain;
    f.table_ = std::move(table);
    return f;
}

bool Operation::is_projection() const {
    for (int i = 0; i < arity_; ++i) {
        bool ok = true;
        for (std::uint64_t idx = 0; idx < table_.size() && ok; ++idx) {
            Tuple t = index_tuple(idx, domain_, arity_);
            ok = table_[idx] == t[static_cast<std::size_t>(i)];
        }
        if (ok) return true;
    }
    return false;
}

bool Operation::is_constant() const {
    for (std::uint8_t v : table_)
        if (v != table_[0]) return false;
    return true;
}

Operation Operation::projection(int arity, int i, int domain) {
    std::uint64_t cells =
        pow_u64(static_cast<std::uint64_t>(domain), static_cast<unsigned>(arity));
    std::vector<std::uint8_t> tab(cells);
    for (std::uint64_t idx = 0; idx < cells; ++idx)
        tab[idx] = index_tuple(idx, domain, arity)[static_cast<std::size_t>(i - 1)];
    return make("proj" + std::to_string(arity) + "_" + std::to_string(i), arity, domain,
                std::move(tab));
}

Operation Operation::constant(int arity, int value, int domain) {
    std::uint64_t cells =
        pow_u64(static_cast<std::uint64_t>(domain), static_cast<unsigned>(arity));
    return make("const" + std::to_string(value), arity, domain,
                std::vector<std::uint8_t>(cells, static_cast<std::uint8_t>(value)));
}

Operation Operation::from_formula(std::string name, int arity, int domain,
                                  std::uint8_t (*fn)(const Tuple&)) {
    std::uint64_t cells =
        pow_u64(static_cast<std::uint64_t>(domain), static_cast<unsigned>(arity));
    std::vector<std::uint8_t> tab(cells);
    for (std::uint64_t idx = 0; idx < cells; ++idx) tab[idx] = fn(index_tuple(idx, domain, arity));
    return make(std::move(name), arity, domain, std::move(tab));
}

Operation Operation::b_not() {
    return from_formula("not", 1, 2, [](const Tuple& t) -> std::uint8_t { return !t[0]; });
}
Operation Operation::b_and() {
    return from_formula("and", 2, 2, [](const Tuple& t) -> std::uint8_t { return t[0] & t[1]; });
}
Operation Operation::b_or() {
    return from_formula("or", 2, 2, [](const Tuple& t) -> std::uint8_t { return t[0] | t[1]; });
}
Operation Operation::b_xor() {
    return from_formula("xor", 2, 2, [](const Tuple& t) -> std::uint8_t { return t[0] ^ t[1]; });
}
Operation Operation::b_iff() {
    return from_formula("iff", 2, 2,
                        [](const Tuple& t) -> std::uint8_t { return t[0] == t[1] ? 1 : 0; });
}
Operation Operation::b_impl() {
    return from_formula("impl", 2, 2,
                        [](const Tuple& t) -> std::uint8_t { return (!t[0]) | t[1]; });
}
Operation Operation::b_maj() {
    return from_formula("maj", 3, 2, [](const Tuple& t) -> std::uint8_t {
        return (t[0] + t[1] + t[2]) >= 2 ? 1 : 0;
    });
}
Operation Operation::b_xor3() {
    return from_formula("xor3", 3, 2,
                        [](const Tuple& t) -> std::uint8_t { return t[0] ^ t[1] ^ t[2]; });
}
Operation Operation::b_xnor3() {
    return from_formula("xnor3", 3, 2,
                        [](const Tuple& t) -> std::uint8_t { return 1 ^ t[0] ^ t[1] ^ t[2]; });
}
Operation Operation::b_andnot() {
    return from_formula("andnot", 2, 2,
                        [](const Tuple& t) -> std::uint8_t { return t[0] & !t[1]; });
}
Operation Operation::b_ornot() {
    return from_formula("ornot", 2, 2,
                        [](const Tuple& t) -> std::uint8_t { return t[0] | !t[1]; });
}
Operation Operation::b_and_or() {
    return from_formula("and_or", 3, 2,
                        [](const Tuple& t) -> std::uint8_t { return t[0] & (t[1] | t[2]); });
}
Operation Operation::b_or_and() {
    return from_formula("or_and", 3, 2,
                        [](const Tuple& t) -> std::uint8_t { return t[0] | (t[1] & t[2]); });
}
Operation Operation::b_and_ornot() {
    return from_formula("and_ornot", 3, 2,
                        [](const Tuple& t) -> std::uint8_t { return t[0] & (t[1] | !t[2]); });
}
Operation Operation::b_or_andnot() {
    return from_formula("or_andnot", 3, 2,
                        [](const Tuple& t) -> std::uint8_t { return t[0] | (t[1] & !t[2]); });
}
Operation Operation::b_and_iff() {
    return from_formula("and_iff", 3, 2, [](const Tuple& t) -> std::uint8_t {
        return t[0] & (t[1] == t[2] ? 1 : 0);
    });
}
Operation Operation::b_or_xor() {
    return from_formula("or_xor", 3, 2,
                        [](const Tuple& t) -> std::uint8_t { return t[0] | (t[1] ^ t[2]); });
}
Operation Operation::b_maj_nnn() {
    return from_formula("maj_nnn", 3, 2, [](const Tuple& t) -> std::uint8_t {
        return (t[0] + !t[1] + !t[2]) >= 2 ? 1 : 0;
    });
}
Operation Operation::b_maj_n() {
    return from_formula("maj_n", 3, 2, [](const Tuple& t) -> std::uint8_t {
        return (t[0] + t[1] + !t[2]) >= 2 ? 1 : 0;
    });
}

Operation Operation::b_hn(int n) {
    // h_n(x_1..x_{n+1}) = 1 iff at least n of the n+1 arguments are 1.
    int arity = n + 1;
    std::uint64_t cells = pow_u64(2, static_cast<unsigned>(arity));
    std::vector<std::uint8_t> tab(cells);
    for (std::uint64_t idx = 0; idx < cells; ++idx) {
        Tuple t = index_tuple(idx, 2, arity);
        int ones = 0;
        for (std::uint8_t v : t) ones += v;
        tab[idx] = ones >= n ? 1 : 0;
    }
    return make("h" + std::to_string(n), arity, 2, std::move(tab));
}

Operation Operation::affine3(int domain) {
    std::uint64_t cells = pow_u64(static_cast<std::uint64_t>(domain), 3);
    std::vector<std::uint8_t> tab(cells);
    for (std::uint64_t idx = 0; idx < cells; ++idx) {
        Tuple t = index_tuple(idx, domain, 3);
        tab[idx] = static_cast<std::uint8_t>((t[0] + domain - t[1] + t[2]) % domain);
    }
    return make("affine3", 3, domain, std::move(tab));
}

// --- PartialOperation -------------------------------------------------------

PartialOperation PartialOperation::make(std::string name, int arity, int domain,
                                        std::vector<std::int8_t> table) {
    if (arity < 1) throw error("operation arity must be positive");
    if (domain < 2) throw error("domain size must be at least 2");
    std::uint64_t cells =
        pow_u64(static_cast<std::uint64_t>(domain), static_cast<unsigned>(arity));
    if (table.size() != cells) throw error("partial operation table size mismatch for " + name);
    for (std::int8_t v : table)
        if (v >= domain || v < -1)
            throw error("partial operation value out of domain in " + name);
    PartialOperation f;
    f.name_ = std::move(name);
    f.arity_ = arity;
    f.domain_ = domain;
    f.table_ = std::move(table);
    return f;
}

PartialOperation PartialOperation::total(const Operation& f) {
    std::vector<std::int8_t> tab(f.table().begin(), f.table().end());
    return make(f.name(), f.arity(), f.domain(), std::move(tab));
}

PartialOperation PartialOperation::from_points(std::string name, int arity, int domain,
                                               const std::vector<std::pair<Tuple, int>>& points) {
    std::uint64_t cells =
        pow_u64(static_cast<std::uint64_t>(domain), static_cast<unsigned>(arity));
    std::vector<std::int8_t> tab(cells, -1);
    for (const auto& [t, v] : points) {
        if (static_cast<int>(t.size()) != arity) throw error("point arity mismatch in " + name);
        tab[tuple_index(t, domain)] = static_cast<std::int8_t>(v);
    }
    return make(std::move(name), arity, domain, std::move(tab));
}

std::size_t PartialOperation::dom_size() const {
    std::size_t n = 0;
    for (std::int8_t v : table_) n += v >= 0;
    return n;
}

bool PartialOperation::suboperation_of(const PartialOperation& g) const {
    if (arity_ != g.arity_ || domain_ != g.domain_) return false;
    for (std::size_t i = 0; i < table_.size(); ++i)
        if (table_[i] >= 0 && table_[i] != g.table_[i]) return false;
    return true;
}

// --- Language ----------------------------------------------------------------

void Language::add(Relation r) {
    if (r.domain() != domain_) throw error("relation domain mismatch in language");
    if (r.name().empty()) throw error("language relations must be named");
    if (find(r.name())) throw error("duplicate relation name " + r.name());
    rels_.push_back(std::move(r));
}

const Relation* Language::find(const std::string& name) const {
    for (const Relation& r : rels_)
        if (r.name() == name) return &r;
    return nullptr;
}

const Relation& Language::at(const std::string& name) const {
    const Relation* r = find(name);
    if (!r) throw error("unknown relation " + name);
    return *r;
}

// --- apply / preserves ---------------------------------------------------------

namespace {

void check_rows(int arity, int domain, const std::vector<Tuple>& rows) {
    if (static_cast<int>(rows.size()) != arity) throw error("row count does not match arity");
    if (rows.empty()) throw error("empty row sequence");
    std::size_t n = rows[0].size();
    for (const Tuple& t : rows) {
        if (t.size() != n) throw error("rows of unequal arity");
        for (std::uint8_t v : t)
            if (v >= domain) throw error("row value out of domain");
    }
}

}  // namespace

std::optional<Tuple> apply_op(const Operation& f, const std::vector<Tuple>& rows) {
    check_rows(f.arity(), f.domain(), rows);
    std::size_t n = rows[0].size();
    Tuple out(n);
    Tuple col(rows.size());
    for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t j = 0; j < rows.size(); ++j) col[j] = rows[j][p];
        out[p] = f.eval(col);
    }
    return out;
}

std::optional<Tuple> apply_op(const PartialOperation& f, const std::vector<Tuple>& rows) {
    check_rows(f.arity(), f.domain(), rows);
    std::size_t n = rows[0].size();
    Tuple out(n);
    Tuple col(rows.size());
    for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t j = 0; j < rows.size(); ++j) col[j] = rows[j][p];
        std::int8_t v = f.eval(col);
        if (v < 0) return std::nullopt;
        out[p] = static_cast<std::uint8_t>(v);
    }
    return out;
}

namespace {

/// Iterates all |R|^k sequences of R-tuples, applying `body` until it
/// returns false. `body` receives the current sequence of row pointers.
template <typename Body>
void for_each_sequence(const Relation& r, int k, Body body) {
    if (r.empty()) return;
    std::vector<std::size_t> pick(static_cast<std::size_t>(k), 0);
    for (;;) {
        if (!body(pick)) return;
        int j = k - 1;
        while (j >= 0 && ++pick[static_cast<std::size_t>(j)] == r.size()) {
            pick[static_cast<std::size_t>(j)] = 0;
            --j;
        }
        if (j < 0) return;
    }
}

template <typename Op>
PreserveResult preserves_impl(const Op& f, const Relation& r) {
    if (f.domain() != r.domain()) throw error("domain mismatch in preserves");
    PreserveResult res;
    for_each_sequence(r, f.arity(), [&](const std::vector<std::size_t>& pick) {
        std::vector<Tuple> rows;
        rows.reserve(pick.size());
        for (std::size_t i : pick) rows.push_back(r.tuples()[i]);
        auto out = apply_op(f, rows);
        if (out && !r.contains(*out)) {
            res.ok = false;
            res.witness = std::move(rows);
            return false;
        }
        return true;
    });
    return res;
}

}  // namespace

PreserveResult preserves(const Operation& f, const Relation& r) { return preserves_impl(f, r); }
PreserveResult preserves(const PartialOperation& f, const Relation& r) {
    return preserves_impl(f, r);
}

bool preserves_all(const Operation& f, const Language& g) {
    for (const Relation& r : g.relations())
        if (!preserves(f, r)) return false;
    return true;
}

bool preserves_all(const PartialOperation& f, const Language& g) {
    for (const Relation& r : g.relations())
        if (!preserves(f, r)) return false;
    return true;
}

// --- pol / ppol ------------------------------------------------------------------

namespace {

/// One preservation constraint: the tuple read off `cells` must lie in *rel.
/// `last` is the largest cell index, i.e. the DFS depth where it fires.
struct Cons {
    std::vector<std::uint32_t> cells;
    const Bits* rel_mask;
    int rel_domain;
};

/// Builds the constraint table for k-ary candidate operations over g:
/// one constraint per relation R and per k-sequence of R-tuples.
std::vector<std::vector<Cons>> build_constraints(const Language& g, int k,
                                                 std::uint64_t cells,
                                                 std::vector<Bits>& masks) {
    std::vector<std::vector<Cons>> by_last(cells);
    masks.clear();
    masks.reserve(g.relations().size());
    for (const Relation& r : g.relations()) masks.push_back(r.mask());
    int domain = g.domain();
    for (std::size_t ri = 0; ri < g.relations().size(); ++ri) {
        const Relation& r = g.relations()[ri];
        for_each_sequence(r, k, [&](const std::vector<std::size_t>& pick) {
            Cons c;
            c.rel_mask = &masks[ri];
            c.rel_domain = domain;
            c.cells.reserve(static_cast<std::size_t>(r.arity()));
            std::uint32_t last = 0;
            Tuple col(pick.size());
            for (int p = 0; p < r.arity(); ++p) {
                for (std::size_t j = 0; j < pick.size(); ++j)
                    col[j] = r.tuples()[pick[j]][static_cast<std::size_t>(p)];
                auto cell = static_cast<std::uint32_t>(tuple_index(col, domain));
                c.cells.push_back(cell);
                last = std::max(last, cell);
            }
            by_last[last].push_back(std::move(c));
            return true;
        });
    }
    return by_last;
}

bool cons_holds_total(const Cons& c, const std::vector<std::int8_t>& table) {
    std::uint64_t idx = 0;
    for (std::uint32_t cell : c.cells)
        idx = idx * static_cast<std::uint64_t>(c.rel_domain) +
              static_cast<std::uint64_t>(table[cell]);
    return c.rel_mask->test(idx);
}

bool cons_holds_partial(const Cons& c, const std::vector<std::int8_t>& table) {
    std::uint64_t idx = 0;
    for (std::uint32_t cell : c.cells) {
        if (table[cell] < 0) return true;  // application undefined
        idx = idx * static_cast<std::uint64_t>(c.rel_domain) +
              static_cast<std::uint64_t>(table[cell]);
    }
    return c.rel_mask->test(idx);
}

}  // namespace

void pol_scan(const Language& g, int k, const std::function<bool(const Operation&)>& cb,
              const Budget& budget) {
    if (k < 1) throw error("pol arity must be positive");
    if (k > budget.pol_arity(g.domain()))
        throw budget_error("pol arity " + std::to_string(k) + " exceeds budget " +
                           std::to_string(budget.pol_arity(g.domain())));
    int domain = g.domain();
    std::uint64_t cells = pow_u64(static_cast<std::uint64_t>(domain), static_cast<unsigned>(k));
    std::vector<Bits> masks;
    auto by_last = build_constraints(g, k, cells, masks);

    std::vector<std::int8_t> table(cells, -1);
    bool stop = false;
    // DFS over table cells in index order; values ascending, so operations
    // are emitted in ascending table order.
    auto rec = [&](auto&& self, std::uint64_t cell) -> void {
        if (stop) return;
        if (cell == cells) {
            std::vector<std::uint8_t> tab(table.begin(), table.end());
            if (!cb(Operation::make("", k, domain, std::move(tab)))) stop = true;
            return;
        }
        for (int v = 0; v < domain && !stop; ++v) {
            table[cell] = static_cast<std::int8_t>(v);
            bool ok = true;
            for (const Cons& c : by_last[cell])
                if (!cons_holds_total(c, table)) {
                    ok = false;
                    break;
                }
            if (ok) self(self, cell + 1);
        }
        table[cell] = -1;
    };
    rec(rec, 0);
}

std::vector<Operation> pol(const Language& g, int k, const Budget& budget) {
    std::vector<Operation> out;
    pol_scan(g, k,
             [&](const Operation& f) {
                 out.push_back(f);
                 return true;
             },
             budget);
    return out;
}

std::vector<PartialOperation> ppol(const Language& g, int k,
                                   bool (*filter)(const PartialOperation&),
                                   const Budget& budget) {
    if (k < 1) throw error("ppol arity must be positive");
    if (k > budget.ppol_arity)
        throw budget_error("ppol arity " + std::to_string(k) + " exceeds budget " +
                           std::to_string(budget.ppol_arity));
    int domain = g.domain();
    std::uint64_t cells = pow_u64(static_cast<std::uint64_t>(domain), static_cast<unsigned>(k));
    if (cells > 16) throw budget_error("ppol candidate space too large");
    std::vector<Bits> masks;
    auto by_last = build_constraints(g, k, cells, masks);

    std::vector<PartialOperation> out;
    std::vector<std::int8_t> table(cells, -2);
    // Cell values enumerate 0..|D|-1 then "undefined" (-1).
    auto rec = [&](auto&& self, std::uint64_t cell) -> void {
        if (cell == cells) {
            auto f = PartialOperation::make("", k, domain,
                                            std::vector<std::int8_t>(table.begin(), table.end()));
            if (!filter || filter(f)) out.push_back(std::move(f));
            return;
        }
        for (int v = 0; v < domain + 1; ++v) {
            table[cell] = v < domain ? static_cast<std::int8_t>(v) : std::int8_t(-1);
            bool ok = true;
            for (const Cons& c : by_last[cell])
                if (!cons_holds_partial(c, table)) {
                    ok = false;
                    break;
                }
            if (ok) self(self, cell + 1);
        }
        table[cell] = -2;
    };
    rec(rec, 0);
    return out;
}

// --- determined / arg_kind --------------------------------------------------------

DeterminedResult determined(const Relation& r, int i, const std::vector<int>& s) {
    if (i < 1 || i > r.arity()) throw error("determined: coordinate out of range");
    for (int j : s) {
        if (j < 1 || j > r.arity()) throw error("determined: set coordinate out of range");
        if (j == i) throw error("determined: set must not contain the target coordinate");
    }
    DeterminedResult res;
    std::map<Tuple, const Tuple*> seen;
    for (const Tuple& t : r.tuples()) {
        Tuple key;
        key.reserve(s.size());
        for (int j : s) key.push_back(t[static_cast<std::size_t>(j - 1)]);
        auto [it, inserted] = seen.emplace(std::move(key), &t);
        if (!inserted &&
            (*it->second)[static_cast<std::size_t>(i - 1)] != t[static_cast<std::size_t>(i - 1)]) {
            res.yes = false;
            res.counterexample = {*it->second, t};
            return res;
        }
    }
    res.yes = true;
    for (const auto& [key, t] : seen) res.witness[key] = (*t)[static_cast<std::size_t>(i - 1)];
    return res;
}

ArgKind arg_kind(const Relation& r, int i) {
    if (i < 1 || i > r.arity()) throw error("arg_kind: coordinate out of range");
    ArgKind out;
    std::size_t ii = static_cast<std::size_t>(i - 1);
    for (int j = 1; j <= r.arity(); ++j) {
        if (j == i) continue;
        bool red = true;
        for (const Tuple& t : r.tuples())
            if (t[ii] != t[static_cast<std::size_t>(j - 1)]) {
                red = false;
                break;
            }
        if (red && !r.empty()) {
            out.kind = ArgKind::Kind::Redundant;
            out.j = j;
            return out;
        }
    }
    bool fict = true;
    for (const Tuple& t : r.tuples()) {
        for (int d = 0; d < r.domain() && fict; ++d) {
            Tuple t2 = t;
            t2[ii] = static_cast<std::uint8_t>(d);
            fict = r.contains(t2);
        }
        if (!fict) break;
    }
    if (fict && !r.empty()) {
        out.kind = ArgKind::Kind::Fictitious;
        return out;
    }
    if (!r.empty()) {
        std::uint8_t d = r.tuples()[0][ii];
        bool cons = true;
        for (const Tuple& t : r.tuples())
            if (t[ii] != d) {
                cons = false;
                break;
            }
        if (cons) {
            out.kind = ArgKind::Kind::Constant;
            out.d = d;
            return out;
        }
    }
    return out;
}

// --- duality / graph -----------------------------------------------------------------

Relation dual_rel(const Relation& r) {
    if (r.domain() != 2) throw error("dual_rel requires a Boolean relation");
    std::vector<Tuple> ts;
    ts.reserve(r.size());
    for (const Tuple& t : r.tuples()) {
        Tuple u(t.size());
        for (std::size_t p = 0; p < t.size(); ++p) u[p] = 1 - t[p];
        ts.push_back(std::move(u));
    }
    std::string name = r.name().empty() ? "" : "dual_" + r.name();
    return Relation::make(std::move(name), r.arity(), 2, std::move(ts));
}

Operation dual_op(const Operation& f) {
    if (f.domain() != 2) throw error("dual_op requires a Boolean operation");
    std::uint64_t cells = f.table().size();
    std::vector<std::uint8_t> tab(cells);
    for (std::uint64_t idx = 0; idx < cells; ++idx) {
        // dual(f)(x) = ¬f(¬x); flipping every argument bit maps index idx to
        // cells-1-idx in the lexicographic table.
        tab[idx] = 1 - f.table()[cells - 1 - idx];
    }
    std::string name = f.name().empty() ? "" : "dual_" + f.name();
    return Operation::make(std::move(name), f.arity(), 2, std::move(tab));
}

Language dual_language(const Language& g) {
    if (g.domain() != 2) throw error("dual_language requires a Boolean language");
    Language out(2);
    for (const Relation& r : g.relations()) out.add(dual_rel(r).renamed(r.name()));
    return out;
}

Relation project(const Relation& r, const std::vector<int>& coords) {
    for (int c : coords)
        if (c < 1 || c > r.arity()) throw error("project: coordinate out of range");
    if (coords.empty()) throw error("project: empty coordinate list");
    std::vector<Tuple> ts;
    ts.reserve(r.size());
    for (const Tuple& t : r.tuples()) {
        Tuple u;
        u.reserve(coords.size());
        for (int c : coords) u.push_back(t[static_cast<std::size_t>(c - 1)]);
        ts.push_back(std::move(u));
    }
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    return Relation::make("", static_cast<int>(coords.size()), r.domain(), std::move(ts));
}

Relation graph_of(const Operation& f) {
    std::vector<Tuple> ts;
    ts.reserve(f.table().size());
    for (std::uint64_t idx = 0; idx < f.table().size(); ++idx) {
        Tuple t = index_tuple(idx, f.domain(), f.arity());
        t.push_back(f.table()[idx]);
        ts.push_back(std::move(t));
    }
    std::string name = f.name().empty() ? "graph" : "graph_" + f.name();
    return Relation::make(std::move(name), f.arity() + 1, f.domain(), std::move(ts));
}

}  // namespace uclone
