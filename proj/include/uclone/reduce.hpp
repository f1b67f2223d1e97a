#ifndef UCLONE_REDUCE_HPP
#define UCLONE_REDUCE_HPP

#include <map>
#include <memory>
#include <string>

#include "uclone/csp.hpp"
#include "uclone/formula.hpp"

namespace uclone {

/// Definitions keyed by source relation name; every formula is over one
/// shared target language and must pass check_upp against its relation.
using UppDefs = std::map<std::string, ConjFormula>;

/// Replaces every constraint by its upp-definition. Fresh auxiliary
/// variables are named `<base>@<constraint index>#<aux index>`; Eq atoms
/// are realized by variable identification. Model counts are preserved
/// exactly.
Instance rewrite_upp(const Instance& inst, const UppDefs& defs,
                     const Budget& budget = default_budget());

/// The unsatisfiability-to-uniqueness step: every R5 constraint keeps its
/// first four arguments, the fifth becomes one shared fresh variable, and
/// the relation gains the all-zero tuple. The input is unsatisfiable iff
/// the output has a unique (all-zero) model. Requires at least one
/// constraint, all over R5.
Instance unsat_to_usat(const Instance& inst, const Budget& budget = default_budget());

/// R with an or-switch coordinate appended: (t,0) and (t,1) for t in R,
/// (u,1) for u outside R.
Relation switched_relation(const Relation& r);

/// Upp-definitions driving the subexponential-hardness construction:
/// one per switched source relation (named `<rel>v`, d_or aux each) plus
/// the implication definition (named IMP, e_imp aux).
struct EthPlan {
    UppDefs defs;
    int d_or = 0;
    int e_imp = 0;

    /// Throws unless every definition certifies against its relation:
    /// defs[name+"v"] against switched_relation(source.at(name)) and
    /// defs["IMP"] against the implication relation.
    void validate(const Language& source, const Budget& budget = default_budget()) const;
};

/// One fresh steering variable x, an implication gadget x -> v per source
/// variable, and a switch-augmented constraint per source constraint,
/// everything rewritten through the plan. Input unsatisfiable iff output
/// has a unique model. Requires |C| <= 2|V|.
Instance eth_reduction(const Instance& inst, const EthPlan& plan,
                       const Budget& budget = default_budget());

/// All eight 3-clause relations CL0..CL7; bit i of the index negates
/// argument i+1, so CL0 is OR3.
std::shared_ptr<const Language> three_clause_language();

/// The plan over 3-clauses built from the chain-reduction definitions
/// (d_or = 1, e_imp = 0), source language = 3-clauses.
EthPlan three_clause_plan();

/// (x1∨x2∨x3∨x4) ≡ ∃!y: (x1∨x2∨y) ∧ (x3∨x4∨¬y) — y is not actually
/// unique (both values fit the all-ones point), so check_upp rejects it.
ConjFormula or4_def_loose();

/// (x1∨x2∨x3∨x4) ≡ ∃!y: (x1∨x2∨y) ∧ (y ↔ (x3∨x4)) over 3-clauses; valid.
ConjFormula or4_def_upp();

/// Quantifier-free self-definition of r over lang (r must be in lang).
ConjFormula identity_def(const Relation& r, std::shared_ptr<const Language> lang);

}  // namespace uclone

#endif
