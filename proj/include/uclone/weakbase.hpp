#ifndef UCLONE_WEAKBASE_HPP
#define UCLONE_WEAKBASE_HPP

#include <memory>
#include <vector>

#include "uclone/formula.hpp"
#include "uclone/relation.hpp"

namespace uclone {

/// The canonical s-row relation U^s over D whose |D|^s columns enumerate
/// D^s in ascending lexicographic order.
struct CoreTable {
    int domain = 2;
    int s = 1;
    Relation rel;  ///< arity |D|^s, exactly s tuples
};

CoreTable u_relation(int domain, int s, const Budget& budget = default_budget());

/// Least superset of r preserved by every operation in fs, as a tuple-set
/// fixpoint under componentwise applications.
Relation f_closure(const std::vector<Operation>& fs, const Relation& r,
                   const Budget& budget = default_budget());

/// C(U^s) for the clone C generated by gens: the rows are exactly the value
/// tables of the s-ary members of C, which is the f_closure of U^s.
Relation weak_base(const std::vector<Operation>& gens, int domain, int s,
                   const Budget& budget = default_budget());

/// Quantifier-free definition of C(U^s) from any base g of Inv(C):
/// one atom R(x_{j(1)},...,x_{j(m)}) per R in g and per s-tuple of R-tuples,
/// where column j(p) is the D^s-element (t_1[p],...,t_s[p]).
ConjFormula emit_weakbase_qfpp(const std::shared_ptr<const Language>& g, int s,
                               const Budget& budget = default_budget());

/// Builds a upp-definition of r over the core relation F(U^|r|) when every
/// generator in fs is a constant or a projection. An Eq atom disambiguates
/// the constant rows whenever fs contains constants. Throws on precondition
/// violations; the returned certificate passes check_upp against r.
UppCertificate upp_via_core(const Relation& r, const std::vector<Operation>& fs,
                            const Budget& budget = default_budget());

/// Smallest s in 1..s_max such that pol({weak_base(gens,s)}, k) equals the
/// k-ary fragment of the clone generated by gens for all k <= k_max;
/// 0 when no s in range passes.
int probe_core_size(const std::vector<Operation>& gens, int domain, int s_max,
                    int k_max = 3, const Budget& budget = default_budget());

}  // namespace uclone

#endif
