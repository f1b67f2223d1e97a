#ifndef UCLONE_RELATION_HPP
#define UCLONE_RELATION_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "uclone/base.hpp"

namespace uclone {

/// A finite relation R ⊆ D^n with tuples kept in ascending lexicographic
/// order. Immutable after construction.
class Relation {
public:
    Relation() = default;

    /// Sorts the tuples; throws on arity/domain violations or duplicates.
    static Relation make(std::string name, int arity, int domain, std::vector<Tuple> tuples);

    const std::string& name() const { return name_; }
    int arity() const { return arity_; }
    int domain() const { return domain_; }
    const std::vector<Tuple>& tuples() const { return tuples_; }
    std::size_t size() const { return tuples_.size(); }
    bool empty() const { return tuples_.empty(); }

    bool contains(const Tuple& t) const;

    /// Membership mask over D^n assignment indices (ascending tuple_index).
    Bits mask() const;

    Relation renamed(std::string name) const;

    /// Compares arity, domain and tuple set; ignores names.
    bool same_tuples(const Relation& o) const;

    /// Canonical order: arity, then tuple list, then domain. Name-blind.
    static bool canonical_less(const Relation& a, const Relation& b);

    // --- stock relations -----------------------------------------------
    static Relation eq(int domain);                   ///< Eq_D
    static Relation full(int arity, int domain);      ///< D^n
    static Relation empty_rel(int arity, int domain); ///< ∅ ⊆ D^n
    static Relation from_mask(std::string name, int arity, int domain, const Bits& mask);

private:
    std::string name_;
    int arity_ = 0;
    int domain_ = 2;
    std::vector<Tuple> tuples_;
};

/// A total operation f : D^k → D stored as a value table indexed by
/// tuple_index of the argument tuple.
class Operation {
public:
    Operation() = default;
    static Operation make(std::string name, int arity, int domain, std::vector<std::uint8_t> table);

    const std::string& name() const { return name_; }
    int arity() const { return arity_; }
    int domain() const { return domain_; }
    const std::vector<std::uint8_t>& table() const { return table_; }

    std::uint8_t eval(const Tuple& args) const { return table_[tuple_index(args, domain_)]; }

    bool same_table(const Operation& o) const {
        return arity_ == o.arity_ && domain_ == o.domain_ && table_ == o.table_;
    }

    bool is_projection() const;           ///< equals some π^k_i
    bool is_constant() const;             ///< constant d on all of D^k

    // --- stock operations ----------------------------------------------
    static Operation projection(int arity, int i, int domain);  ///< π^k_i, 1-based i
    static Operation constant(int arity, int value, int domain);
    static Operation from_formula(std::string name, int arity, int domain,
                                  std::uint8_t (*fn)(const Tuple&));

    // Boolean stock: ¬, ∧, ∨, maj, x⊕y⊕z, x↔y, x⊕y, and named builders.
    static Operation b_not();
    static Operation b_and();
    static Operation b_or();
    static Operation b_xor();
    static Operation b_iff();
    static Operation b_impl();    ///< x → y
    static Operation b_maj();
    static Operation b_xor3();    ///< x ⊕ y ⊕ z
    static Operation b_xnor3();   ///< x ⊕ y ⊕ z ⊕ 1
    static Operation b_andnot();  ///< x ∧ ¬y
    static Operation b_ornot();   ///< x ∨ ¬y
    static Operation b_and_or();    ///< x ∧ (y ∨ z)
    static Operation b_or_and();    ///< x ∨ (y ∧ z)
    static Operation b_and_ornot(); ///< x ∧ (y ∨ ¬z)
    static Operation b_or_andnot(); ///< x ∨ (y ∧ ¬z)
    static Operation b_and_iff();   ///< x ∧ (y ↔ z)
    static Operation b_or_xor();    ///< x ∨ (y ⊕ z)
    static Operation b_maj_nnn();   ///< maj(x,¬y,¬z)
    static Operation b_maj_n();     ///< maj(x,y,¬z)
    static Operation b_hn(int n);   ///< h_n(x1..x_{n+1}) = ⋁_i ⋀_{j≠i} x_j
    static Operation affine3(int domain);  ///< x − y + z (mod |D|)

private:
    std::string name_;
    int arity_ = 0;
    int domain_ = 2;
    std::vector<std::uint8_t> table_;
};

/// A partial operation f : dom(f) → D, dom(f) ⊆ D^k; -1 marks "undefined".
class PartialOperation {
public:
    PartialOperation() = default;
    static PartialOperation make(std::string name, int arity, int domain,
                                 std::vector<std::int8_t> table);
    static PartialOperation total(const Operation& f);
    /// Builds from explicit (point, value) pairs; the rest is undefined.
    static PartialOperation from_points(std::string name, int arity, int domain,
                                        const std::vector<std::pair<Tuple, int>>& points);

    const std::string& name() const { return name_; }
    int arity() const { return arity_; }
    int domain() const { return domain_; }
    const std::vector<std::int8_t>& table() const { return table_; }

    bool defined(const Tuple& args) const { return table_[tuple_index(args, domain_)] >= 0; }
    std::int8_t eval(const Tuple& args) const { return table_[tuple_index(args, domain_)]; }
    std::size_t dom_size() const;

    /// f is a suboperation of g: dom(f) ⊆ dom(g) and they agree on dom(f).
    bool suboperation_of(const PartialOperation& g) const;

    bool same_table(const PartialOperation& o) const {
        return arity_ == o.arity_ && domain_ == o.domain_ && table_ == o.table_;
    }

private:
    std::string name_;
    int arity_ = 0;
    int domain_ = 2;
    std::vector<std::int8_t> table_;
};

/// A named constraint language over one domain. Eq_D is implicitly available
/// to every closure operation without being listed.
class Language {
public:
    explicit Language(int domain = 2) : domain_(domain) {}

    int domain() const { return domain_; }
    const std::vector<Relation>& relations() const { return rels_; }
    void add(Relation r);
    const Relation* find(const std::string& name) const;
    const Relation& at(const std::string& name) const;  ///< throws if absent

private:
    int domain_;
    std::vector<Relation> rels_;
};

// --- relcore operations -------------------------------------------------

/// Componentwise application to k rows of equal arity.
std::optional<Tuple> apply_op(const Operation& f, const std::vector<Tuple>& rows);
std::optional<Tuple> apply_op(const PartialOperation& f, const std::vector<Tuple>& rows);

struct PreserveResult {
    bool ok = true;
    std::vector<Tuple> witness;  ///< k rows of R violating preservation, on failure
    explicit operator bool() const { return ok; }
};

PreserveResult preserves(const Operation& f, const Relation& r);
PreserveResult preserves(const PartialOperation& f, const Relation& r);
bool preserves_all(const Operation& f, const Language& g);
bool preserves_all(const PartialOperation& f, const Language& g);

/// All k-ary operations preserving every relation of g, in ascending table
/// order. Budget-guarded.
std::vector<Operation> pol(const Language& g, int k, const Budget& budget = default_budget());

/// Streams pol(g, k) in ascending table order without materializing the
/// list; stops early when the callback returns false.
void pol_scan(const Language& g, int k, const std::function<bool(const Operation&)>& cb,
              const Budget& budget = default_budget());

/// Projection onto 1-based coordinates, in the given order (duplicates
/// allowed); tuples are deduplicated.
Relation project(const Relation& r, const std::vector<int>& coords);

/// All k-ary partial operations preserving every relation of g, optionally
/// filtered. Cell values enumerate 0..|D|-1 then "undefined".
std::vector<PartialOperation> ppol(const Language& g, int k,
                                   bool (*filter)(const PartialOperation&) = nullptr,
                                   const Budget& budget = default_budget());

struct DeterminedResult {
    bool yes = false;
    /// On yes: the induced map Proj_S(R) → D.
    std::map<Tuple, std::uint8_t> witness;
    /// On no: two tuples agreeing on S, differing at i.
    std::pair<Tuple, Tuple> counterexample;
    explicit operator bool() const { return yes; }
};

/// Is coordinate i (1-based) functionally dependent on coordinate set S?
DeterminedResult determined(const Relation& r, int i, const std::vector<int>& s);

struct ArgKind {
    enum class Kind { Redundant, Fictitious, Constant, None } kind = Kind::None;
    int j = 0;           ///< witness coordinate for Redundant (1-based)
    std::uint8_t d = 0;  ///< witness value for Constant
};

/// First applicable classification of coordinate i, in the order
/// redundant / fictitious / constant / none.
ArgKind arg_kind(const Relation& r, int i);

// Boolean duality (throws on |D| ≠ 2).
Relation dual_rel(const Relation& r);
Operation dual_op(const Operation& f);
Language dual_language(const Language& g);

/// (k+1)-ary graph {(x, f(x))} of a total operation.
Relation graph_of(const Operation& f);

}  // namespace uclone

#endif
