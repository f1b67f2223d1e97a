#ifndef UCLONE_CSP_HPP
#define UCLONE_CSP_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "uclone/relation.hpp"

namespace uclone {

struct Constraint {
    std::string rel;        ///< relation name in the language
    std::vector<int> args;  ///< 0-based variable indices
};

/// A CSP/SAT instance over a named constraint language. A model is an
/// assignment of all variables satisfying every constraint.
struct Instance {
    int domain = 2;
    std::shared_ptr<const Language> lang;
    std::vector<std::string> vars;
    std::vector<Constraint> constraints;

    int var_index(const std::string& name) const;  ///< -1 if absent
    /// Throws on unknown relations, arity mismatches, or bad variable
    /// indices.
    void validate() const;
};

/// Exact model count; `jobs` > 1 splits the search on the leading variables
/// with a deterministic sum.
std::uint64_t count_models(const Instance& inst, int jobs = 1,
                           const Budget& budget = default_budget());

struct UniqueVerdict {
    enum class Kind { Zero, Unique, Many } kind = Kind::Zero;
    Tuple model;   ///< the model (Unique) or the first of two (Many)
    Tuple second;  ///< second witness model (Many)
};

UniqueVerdict unique_model(const Instance& inst, const Budget& budget = default_budget());

/// Models in ascending lexicographic order of the variable assignment;
/// limit 0 means no limit.
std::vector<Tuple> enumerate_models(const Instance& inst, std::uint64_t limit = 0,
                                    const Budget& budget = default_budget());

/// Boolean instance with every relation replaced by its dual (throws on
/// |D| != 2). Model counts match the original.
Instance dual_instance(const Instance& inst);

}  // namespace uclone

#endif
