#ifndef UCLONE_PPART_HPP
#define UCLONE_PPART_HPP

#include <string>
#include <vector>

#include "uclone/catalog.hpp"
#include "uclone/relation.hpp"

namespace uclone {

/// dom(f) closed under componentwise ∧ (Boolean f).
bool is_meet_closed(const PartialOperation& f);
/// The all-zero point lies in dom(f).
bool is_zero_closed(const PartialOperation& f);

enum class SeparationRoute { IE0, IE, Frozen };

/// A checkable negative certificate: witness f preserves the source
/// language but not the target relation, under the route's side conditions.
struct SeparationCertificate {
    Language gamma;
    Relation target;
    PartialOperation witness;
    SeparationRoute route = SeparationRoute::IE0;
    int n = 0;  ///< chain index for the frozen route
};

struct CertifyResult {
    bool certified = false;
    std::string reason;  ///< rejection reason, empty when certified
};

/// Certifies target ∉ ⟨gamma⟩_{∃!}: f must be meet-closed, zero-closed
/// (IE0 route; the zero condition is dropped on the IE route), preserve
/// every member of gamma, and violate target. The language must sit in the
/// matching co-clone.
CertifyResult certify_not_upp(const Language& gamma, const Relation& target,
                              const PartialOperation& f, SeparationRoute route,
                              const CloneCatalog& cat,
                              const Budget& budget = default_budget());

/// Certifies ⟨gw⟩_fr ⊂ ⟨gp⟩_fr for the weak/plain bases of IS11^n (or the
/// IS01^n duals): f(0^n) = 0, every Hamming-weight-1 point maps to 1, f
/// preserves gw and violates the n-ary NAND member of gp.
CertifyResult certify_frozen_collapse(const Language& gw, const Language& gp,
                                      const PartialOperation& f, int n);

struct DeterminedShape {
    enum class Kind { Conjunction, Constant0, NotDetermined } kind = Kind::NotDetermined;
    std::vector<int> indices;  ///< 1-based conjuncts for Conjunction
};

/// Shape of a determined argument of a relation preserved by ∧ and the
/// constant 0: a conjunction of other coordinates, or constant 0.
DeterminedShape ie0_determined_shape(const Relation& r, int i);

/// The canonical chain witness: dom = {0^n} ∪ weight-1 points, f(0^n) = 0,
/// f = 1 elsewhere on the domain.
PartialOperation frozen_witness(int n);

/// The binary witness with dom {(0,0),(0,1),(1,0)}, f(0,0) = 0,
/// f(0,1) = f(1,0) = 1.
PartialOperation ie0_witness();

}  // namespace uclone

#endif
