#ifndef UCLONE_BASE_HPP
#define UCLONE_BASE_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace uclone {

/// Base class for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input text (relation/instance/definition/certificate files).
struct parse_error : error {
    using error::error;
};

/// An enumeration limit was hit. Budgets are explicit configuration; this is
/// never downgraded to a silent partial answer.
struct budget_error : error {
    using error::error;
};

/// Enumeration limits. The constructions in the underlying theory are
/// unbounded; these make exhaustion honest and configurable.
struct Budget {
    int pol_arity_d2 = 4;        ///< max arity for total-op enumeration, |D| = 2
    int pol_arity_other = 3;     ///< max arity for total-op enumeration, |D| > 2
    int ppol_arity = 3;          ///< max arity for partial-op enumeration
    int qfpp_vars = 5;           ///< max variable count for qfpp closures
    int eval_vars = 24;          ///< max total variable count in formula evaluation
    int csp_vars = 30;           ///< max variable count for model enumeration
    std::uint64_t closure_members = 4000000;  ///< member cap in qfpp closures
    std::uint64_t tuple_cap = 1u << 22;       ///< tuple cap for relation-valued fixpoints

    int pol_arity(int domain) const { return domain == 2 ? pol_arity_d2 : pol_arity_other; }
};

inline const Budget& default_budget() {
    static const Budget b{};
    return b;
}

/// A tuple over {0..|D|-1}. Kept small and trivially comparable.
using Tuple = std::vector<std::uint8_t>;

/// domain^arity with overflow guard (throws budget_error past 2^62).
std::uint64_t pow_u64(std::uint64_t base, unsigned exp);

/// Lexicographic index of a tuple in D^n.
std::uint64_t tuple_index(const Tuple& t, int domain);

/// Inverse of tuple_index.
Tuple index_tuple(std::uint64_t idx, int domain, int arity);

/// Dynamic bit set sized at construction; used for assignment-space masks.
class Bits {
public:
    Bits() = default;
    explicit Bits(std::uint64_t nbits, bool fill = false);

    std::uint64_t size() const { return nbits_; }
    bool test(std::uint64_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::uint64_t i) { w_[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void reset(std::uint64_t i) { w_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
    std::uint64_t count() const;

    void and_with(const Bits& o);
    bool is_subset_of(const Bits& o) const;

    friend bool operator==(const Bits&, const Bits&) = default;
    auto operator<=>(const Bits& o) const { return w_ <=> o.w_; }

    /// Stable hash for closure dedup tables.
    std::size_t hash() const;

private:
    std::uint64_t nbits_ = 0;
    std::vector<std::uint64_t> w_;
};

}  // namespace uclone

#endif
