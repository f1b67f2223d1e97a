#include "uclone/base.hpp"

#include <bit>

namespace uclone {

std::uint64_t pow_u64(std::uint64_t base, unsigned exp) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (r > (std::uint64_t(1) << 62) / (base ? base : 1))
            throw budget_error("value space too large: " + std::to_string(base) + "^" +
                               std::to_string(exp));
        r *= base;
    }
    return r;
}

std::uint64_t tuple_index(const Tuple& t, int domain) {
    std::uint64_t idx = 0;
    for (std::uint8_t v : t) idx = idx * static_cast<std::uint64_t>(domain) + v;
    return idx;
}

Tuple index_tuple(std::uint64_t idx, int domain, int arity) {
    Tuple t(static_cast<std::size_t>(arity));
    for (int i = arity - 1; i >= 0; --i) {
        t[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(idx % domain);
        idx /= static_cast<std::uint64_t>(domain);
    }
    return t;
}

Bits::Bits(std::uint64_t nbits, bool fill) : nbits_(nbits), w_((nbits + 63) / 64, 0) {
    if (fill) {
        for (auto& x : w_) x = ~std::uint64_t(0);
        if (nbits_ & 63) w_.back() &= (std::uint64_t(1) << (nbits_ & 63)) - 1;
    }
}

std::uint64_t Bits::count() const {
    std::uint64_t c = 0;
    for (auto x : w_) c += static_cast<std::uint64_t>(std::popcount(x));
    return c;
}

void Bits::and_with(const Bits& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
}

bool Bits::is_subset_of(const Bits& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
        if (w_[i] & ~o.w_[i]) return false;
    return true;
}

std::size_t Bits::hash() const {
    std::size_t h = 1469598103934665603ull;
    for (auto x : w_) {
        h ^= static_cast<std::size_t>(x);
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace uclone
