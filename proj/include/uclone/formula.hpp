#ifndef UCLONE_FORMULA_HPP
#define UCLONE_FORMULA_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "uclone/relation.hpp"

namespace uclone {

enum class Quant { Exists, ExistsUnique, Frozen };

struct Atom {
    std::string rel;                ///< relation name; "Eq" is always available
    std::vector<std::string> args;
};

/// Conjunction of atoms over a language, with free and quantified variables.
/// The syntax of pp/qfpp/upp/fpp-definitions.
struct ConjFormula {
    std::string name;  ///< name of the defined relation (optional)
    std::shared_ptr<const Language> lang;
    std::vector<std::string> free_vars;
    std::vector<std::pair<std::string, Quant>> bound_vars;
    std::vector<Atom> atoms;

    /// Throws on undefined relations, arity mismatches, unknown or
    /// duplicated variables.
    void validate() const;
    int var_count() const { return static_cast<int>(free_vars.size() + bound_vars.size()); }
};

struct EvalResult {
    Relation result;          ///< projection onto the free variables
    Relation pre_projection;  ///< over free vars followed by bound vars
};

/// Satisfying-assignment semantics. Quantifier tags do not change the
/// projected set, only certificate checks.
EvalResult eval_formula(const ConjFormula& f, const Budget& budget = default_budget());

struct AuxWitness {
    std::string var;
    std::vector<int> dep;  ///< 1-based free-variable coordinates (all of them)
    std::map<Tuple, std::uint8_t> map;  ///< Proj_dep(pre-projection) → value
    bool is_frozen = false;
    std::uint8_t frozen_value = 0;
};

struct UppCertificate {
    ConjFormula formula;
    std::vector<AuxWitness> aux;
};

struct UppCheck {
    enum class Kind { Valid, WrongRelation, NotUnique, NotFrozen };
    Kind kind = Kind::Valid;
    UppCertificate cert;  ///< populated when valid
    // wrong_relation payload: tuples missing from / extra in the evaluation.
    std::vector<Tuple> missing, extra;
    // not_unique / not_frozen payload.
    std::string bad_var;
    std::pair<Tuple, Tuple> tuple_pair;  ///< two pre-projection tuples (not_unique)
};

/// Valid iff the formula evaluates to `target` and every ∃!-tagged variable
/// is determined by the free variables in the pre-projection relation;
/// frozen-tagged variables must additionally be constant. Exists-tagged
/// variables are not checked.
UppCheck check_upp(const ConjFormula& f, const Relation& target,
                   const Budget& budget = default_budget());

/// One member of a qfpp closure, with enough provenance to rebuild a
/// defining formula: indices into QfppClosure::atoms.
struct ClosureMember {
    Bits mask;
    std::vector<int> atom_ids;
};

struct QfppClosure {
    int n = 0;
    int domain = 2;
    std::vector<Atom> atoms;  ///< all distinct-cylinder atoms over x1..xn
    std::vector<ClosureMember> members;  ///< sorted in canonical relation order

    Relation member_relation(std::size_t i, std::string name = "") const;
    /// Quantifier-free formula (over x1..xn) whose atoms carve out member i.
    ConjFormula member_formula(std::size_t i, std::shared_ptr<const Language> lang) const;
};

/// Exactly the n-ary relations with a qfpp-definition over g ∪ {Eq}:
/// intersection closure of atom cylinders, including the full relation.
QfppClosure qfpp_closure_detailed(const std::shared_ptr<const Language>& g, int n,
                                  const Budget& budget = default_budget());
std::vector<Relation> qfpp_closure(const Language& g, int n,
                                   const Budget& budget = default_budget());

struct PpVerdict {
    enum class Kind { Yes, No, YesUpToArity };
    Kind kind = Kind::Yes;
    int arity_checked = 0;              ///< polymorphism arity used
    std::optional<Operation> witness;   ///< violating polymorphism on No
};

/// Galois-connection membership test: R ∈ ⟨Γ⟩ iff every |R|-ary polymorphism of Γ
/// preserves R. Exact when |R| fits the pol budget; otherwise the test runs
/// at the budget arity and a yes is reported as YesUpToArity.
PpVerdict pp_member(const Relation& r, const Language& g,
                    const Budget& budget = default_budget());

struct FindUppResult {
    bool found = false;
    UppCertificate cert;  ///< passes check_upp when found
    int searched_up_to = 0;
};

/// Searches qfpp_closure(g, n+j) for j = 0..max_aux for a relation projecting
/// onto r whose extra coordinates are determined by the first n. Sound
/// always; complete only up to max_aux.
FindUppResult find_upp(const Relation& r, const std::shared_ptr<const Language>& g, int max_aux,
                       const Budget& budget = default_budget());

struct NormalizeFail {
    std::string blocking_var;
};

/// Rewrites a pp-definition into a upp-definition by processing bound
/// variables last-to-first: determined → retag ∃!; fictitious → add
/// Eq(x1, y) and retag; otherwise fail naming the variable.
std::variant<ConjFormula, NormalizeFail> normalize_pp_to_upp(
    const ConjFormula& f, const Budget& budget = default_budget());

/// True iff x − y + z (mod |D|) preserves g; |D| must be prime.
bool affine_upp_applicable(const Language& g);

/// Alternative uniqueness semantics: keep reduced tuples with exactly one
/// extension at coordinate i (1-based).
Relation eval_alt_unique(const Relation& r, int i);

}  // namespace uclone

#endif
