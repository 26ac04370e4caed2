#pragma once

#include <optional>
#include <vector>

#include "oredim/ring.hpp"

namespace oredim {

/// A total self-map of a ring carrier, stored as a dense index array.
/// Verification is separate: a RingMap value carries no promise by itself.
class RingMap {
public:
    RingMap() = default;
    explicit RingMap(std::vector<Elem> images) : img_(std::move(images)) {}
    static RingMap identity(std::size_t n);
    static RingMap zero_map(const FiniteRing& ring);

    Elem operator()(Elem a) const { return img_[a]; }
    std::size_t size() const { return img_.size(); }
    const std::vector<Elem>& images() const { return img_; }

    bool is_bijective() const;
    /// Inverse of a bijection; throws std::invalid_argument otherwise.
    RingMap inverse() const;
    /// this ∘ g (apply g first).
    RingMap after(const RingMap& g) const;
    bool operator==(const RingMap& o) const { return img_ == o.img_; }

private:
    std::vector<Elem> img_;
};

/// Exhaustive check that f is a ring endomorphism (additive, multiplicative,
/// fixes one). The bijective flag is informational: endomorphisms need not be
/// automorphisms, but the skew-Ore construction requires one.
struct EndoReport {
    bool additive = true, multiplicative = true, fixes_one = true, bijective = false;
    std::vector<std::string> violations;
    bool valid() const { return additive && multiplicative && fixes_one; }
    bool valid_automorphism() const { return valid() && bijective; }
};
EndoReport verify_endomorphism(const FiniteRing& ring, const RingMap& f);

/// Exhaustive check of additivity and the twisted Leibniz law
/// d(rs) = sigma(r)d(s) + d(r)s.
struct DerivationReport {
    bool additive = true, leibniz = true;
    std::vector<std::string> violations;
    bool valid() const { return additive && leibniz; }
};
DerivationReport verify_sigma_derivation(const FiniteRing& ring, const RingMap& sigma,
                                         const RingMap& delta);

/// Smallest n <= bound with delta^n(r) = 0, or nullopt when the orbit never
/// reaches zero within the bound. On a finite carrier the orbit either hits
/// zero or cycles within |R| steps, so bound = |R|+1 decides divergence.
std::optional<unsigned> nilpotency_index(const FiniteRing& ring, const RingMap& delta, Elem r,
                                         std::size_t bound);

/// Per-element nilpotency table n(r); `divergent_at` holds the first element
/// whose orbit does not vanish, in which case delta is not locally nilpotent.
struct NilpotencyTable {
    bool locally_nilpotent = true;
    std::vector<unsigned> index;  // meaningful where locally nilpotent
    std::optional<Elem> divergent_at;
};
NilpotencyTable nilpotency_table(const FiniteRing& ring, const RingMap& delta);

/// The pair (sigma', delta') with sigma' = sigma^{-1} and
/// delta'(r) = -delta(sigma^{-1}(r)), governing the x^{-1} commutation
/// x^{-1} r = sigma'(r) x^{-1} + delta'(r).
struct DualPair {
    RingMap sigma_prime, delta_prime;
};

/// Builds the dual pair. Requires sigma bijective; verifies that delta'
/// satisfies the sigma'-derivation law before returning (a consequence of the
/// construction whenever the localized product is associative).
DualPair dual_maps(const FiniteRing& ring, const RingMap& sigma, const RingMap& delta);

}  // namespace oredim
