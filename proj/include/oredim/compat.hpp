#pragma once

#include <optional>
#include <string>
#include <vector>

#include "oredim/lattice.hpp"

namespace oredim {

/// Concrete counterexample for a failed compatibility flag. `quotient` is the
/// lattice index of the submodule N when the violation lives in M/N (absent
/// when it lives in M itself). Witnesses re-check as violations.
struct CompatWitness {
    Elem m = 0, r = 0;
    std::optional<std::size_t> quotient;
    std::string description;
};

struct CompatReport {
    bool sigma_compatible = true, delta_compatible = true;
    bool completely_sigma = true, completely_delta = true;
    std::optional<CompatWitness> sigma_witness, delta_witness;
    std::optional<CompatWitness> completely_sigma_witness, completely_delta_witness;

    bool compatible() const { return sigma_compatible && delta_compatible; }
    bool completely_compatible() const { return completely_sigma && completely_delta; }
};

/// mr = 0 iff m sigma(r) = 0, exhaustively over (m, r). The witness, when
/// present, is the first violating pair in canonical order.
bool is_sigma_compatible(const FiniteModule& m, const RingMap& sigma,
                         CompatWitness* witness = nullptr);

/// mr = 0 implies m delta(r) = 0. One-directional: the reverse implication is
/// not part of the notion being checked.
bool is_delta_compatible(const FiniteModule& m, const RingMap& delta,
                         CompatWitness* witness = nullptr);

/// Runs sigma- and delta-compatibility on M/N for every submodule N in the
/// lattice (N = 0 gives the plain flags).
CompatReport compat_report(const FiniteModule& m, const RingMap& sigma, const RingMap& delta,
                           const SubmoduleLattice& lat);

/// Re-evaluates a recorded witness from scratch; true when it still violates.
bool revalidate_witness(const FiniteModule& m, const RingMap& map, bool sigma_kind,
                        const SubmoduleLattice& lat, const CompatWitness& witness);

struct PropositionCheck {
    std::string id;
    bool holds = true;
    std::string note;
};

struct PropositionReport {
    std::vector<PropositionCheck> items;
    bool all_hold() const {
        for (const auto& c : items)
            if (!c.holds) return false;
        return true;
    }
};

/// Exhaustive checks of the closure properties a completely compatible module
/// satisfies: stability of submodules under sigma- and delta-twisted
/// multipliers (a1-a3), inheritance by quotients (b1-b2), and the same
/// property for the dual pair (c). Meaningful when M is completely
/// (sigma, delta)-compatible.
PropositionReport check_compat_propositions(const FiniteModule& m, const SkewOreRing& algebra,
                                            const SubmoduleLattice& lat,
                                            const LatticeLimits& lim = {});

}  // namespace oredim
