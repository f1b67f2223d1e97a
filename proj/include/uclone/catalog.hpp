#ifndef UCLONE_CATALOG_HPP
#define UCLONE_CATALOG_HPP

#include <optional>
#include <string>
#include <vector>

#include "uclone/formula.hpp"
#include "uclone/relation.hpp"

namespace uclone {

// --- Boolean operation properties ----------------------------------------
// Each catalog clone is exactly the set of operations satisfying a fixed
// combination of these closure properties.

bool op_in_r0(const Operation& f);  ///< f(0,...,0) = 0
bool op_in_r1(const Operation& f);  ///< f(1,...,1) = 1
bool op_monotone(const Operation& f);
bool op_selfdual(const Operation& f);
bool op_affine(const Operation& f);
/// 0-separating of degree m: every subset of f^{-1}(0) of size <= m has a
/// coordinate that is 0 on all of it; m = 0 means all of f^{-1}(0).
bool op_sep0(const Operation& f, int m);
bool op_sep1(const Operation& f, int m);
bool op_conjunctive(const Operation& f);  ///< constant, or a meet of variables
bool op_disjunctive(const Operation& f);  ///< constant, or a join of variables
bool op_quasi_unary(const Operation& f);  ///< constant, projection, or negated projection
bool op_trivial(const Operation& f);      ///< constant or projection

enum class Covered { Covered, NotCovered, FrozenCollapse };

/// Defining property combination of a catalog clone; sep degrees use
/// -1 = unconstrained, 0 = unbounded, m > 0 = degree m.
struct CloneProps {
    bool r0 = false, r1 = false, mono = false, selfdual = false, affine = false;
    bool conj = false, disj = false, quasi_unary = false, trivial = false;
    int sep0 = -1, sep1 = -1;
};

/// One Boolean clone C with its co-clone Inv(C) metadata.
struct CloneEntry {
    std::string name;     ///< clone name, e.g. "E0", "S11^2"
    std::string coclone;  ///< "I" + clone name
    std::vector<Operation> generators;
    std::string dual_name;
    CloneProps props;
    bool chain_limit = false;  ///< limit of an infinite chain (S0/S1 families)
    int chain_index = 0;       ///< n for indexed chain entries, else 0
    Covered covered = Covered::Covered;
    std::optional<Relation> weak_base;  ///< shipped data where known
    std::vector<Relation> plain_base;   ///< shipped data; possibly truncated
    bool plain_base_truncated = false;

    /// Exact membership of f in this clone, via the defining properties.
    bool contains(const Operation& f) const;
};

/// All Boolean clones, with the four chain families instantiated for
/// indices 2..chain_bound.
class CloneCatalog {
public:
    explicit CloneCatalog(int chain_bound = 3);

    int chain_bound() const { return bound_; }
    const std::vector<CloneEntry>& entries() const { return entries_; }
    const CloneEntry* find(const std::string& clone_name) const;
    const CloneEntry* find_coclone(const std::string& coclone_name) const;
    const CloneEntry& at(const std::string& clone_name) const;
    const CloneEntry& at_coclone(const std::string& coclone_name) const;

    /// a ⊆ b, decided by membership of a's generators in b.
    bool clone_leq(const CloneEntry& a, const CloneEntry& b) const;
    /// Upper covers of e within the catalog (transitive reduction).
    std::vector<const CloneEntry*> covers_of(const CloneEntry& e) const;

private:
    int bound_;
    std::vector<CloneEntry> entries_;
};

/// Preservation bits for the seven minimal Boolean clones' generators.
struct AtomProfile {
    bool c0 = false, c1 = false, neg = false, meet = false, join = false, maj = false,
         minority = false;
    bool all_false() const { return !(c0 || c1 || neg || meet || join || maj || minority); }
    bool exactly_c0() const { return c0 && !(c1 || neg || meet || join || maj || minority); }
    bool exactly_c1() const { return c1 && !(c0 || neg || meet || join || maj || minority); }
};

AtomProfile atom_profile(const Language& g);

struct UsatVerdict {
    enum class Kind { Tractable, CoNPComplete, USComplete } kind = Kind::Tractable;
    std::string reason;  ///< for Tractable: complement-closed | both-constants |
                         ///< Schaefer-enumerable
};

/// The unique-satisfiability trichotomy for Boolean languages.
UsatVerdict usat_class(const Language& g);

struct CocloneId {
    bool exact = false;
    std::string name;          ///< co-clone name when exact
    std::string lower, upper;  ///< co-clone interval bounds when not exact
};

/// Largest catalog clone whose generators all preserve g bounds ⟨g⟩ from
/// above; exact when no catalog cover also preserves and the clone is not a
/// chain limit.
CocloneId identify_coclone(const Language& g, const CloneCatalog& cat);

/// The ∃!-covered classification by co-clone name.
Covered covered_verdict(const std::string& coclone_name, const CloneCatalog& cat);

struct UcspVerdict {
    enum class Kind { USComplete, CoNPComplete, Other } kind = Kind::Other;
    bool exact = false;
    int bound = 0;        ///< polymorphism arity used when not exact
    int const_value = 0;  ///< witnessing constant for CoNPComplete
};

/// U-CSP classification: exact for |D| = 2, tagged bounded otherwise.
UcspVerdict ucsp_class(const Language& g, const Budget& budget = default_budget());

/// The k-ary part of the clone generated by gens: composition fixpoint over
/// projections. Deterministic ascending table order.
std::vector<Operation> clone_fragment(const std::vector<Operation>& gens, int k,
                                      const Budget& budget = default_budget());

// --- stock relations -------------------------------------------------------

Relation rel_f();                ///< {(0)}
Relation rel_t();                ///< {(1)}
Relation rel_ne();               ///< {(0,1),(1,0)}
Relation rel_or(int n);          ///< {0,1}^n minus the all-zero tuple
Relation rel_nand(int n);        ///< {0,1}^n minus the all-one tuple
Relation rel_impl();             ///< x1 -> x2
Relation rel_even(int n);       ///< even parity
Relation rel_one_in_three();     ///< exactly-one 3-ary
Relation rel_iff_and();          ///< x1 <-> x2 ∧ x3
Relation rel_r5();               ///< the 5-ary relation with an all-projections profile
Relation rel_r5_zero();          ///< rel_r5 plus the all-zero tuple
Relation rel_ror_source();       ///< the 8-ary source relation of the chain reduction

/// Shipped weak bases by co-clone name ("IE0", "IS11^3", "ID2", ...);
/// nullopt for co-clones without shipped data.
std::optional<Relation> table_weak_base(const std::string& coclone);

// --- explicit upp-definitions over shipped weak bases ----------------------

/// Three upp-definitions over the ID2 weak base, with their targets:
/// OR2, (x1 -> x2), NAND2.
std::vector<std::pair<ConjFormula, Relation>> id2_definitions();

/// (x1 ∧ ... ∧ xk -> x) over the IE1 weak base, with all aux determined.
ConjFormula impl_ladder(int k);
Relation impl_ladder_target(int k);

/// NAND^k over the IE2 weak base.
ConjFormula nand_definition(int k);

}  // namespace uclone

#endif
