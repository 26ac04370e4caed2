#pragma once

// Test-only oracles, kept independent of the library's computation paths:
// f_j^i by brute-force word enumeration, the ring action by iterating the
// one-step rule, and submodule enumeration by sweeping all subsets.

#include <vector>

#include "oredim/lattice.hpp"
#include "oredim/skew.hpp"

namespace oredim::testing {

// Sum over all words with i letters sigma' and j-i letters delta', each word
// applied as a composition (leftmost letter applied last).
inline Elem word_sum(const SkewOreRing& alg, unsigned j, unsigned i, Elem r) {
    const FiniteRing& ring = alg.ring();
    Elem acc = ring.zero();
    for (unsigned long mask = 0; mask < (1ul << j); ++mask) {
        unsigned ones = 0;
        for (unsigned b = 0; b < j; ++b)
            if (mask & (1ul << b)) ++ones;
        if (ones != i) continue;
        Elem v = r;
        for (unsigned pos = j; pos-- > 0;) {
            // bit `pos` = letter at word position pos (0 = leftmost)
            v = (mask & (1ul << pos)) ? alg.sigma_prime()(v) : alg.delta_prime()(v);
        }
        acc = ring.add(acc, v);
    }
    return acc;
}

// m x^{-k} r by k-fold application of m x^{-1} r = m sigma'(r) x^{-1} + m delta'(r).
inline InversePoly iterated_ring_action(const InverseModule& inv, Elem m, unsigned k, Elem r) {
    const FiniteModule& mod = inv.base();
    if (k == 0) return inv.monomial(mod.act(m, r), 0);
    InversePoly upper = iterated_ring_action(inv, m, k - 1, inv.algebra().sigma_prime()(r));
    // multiply the recursive result by x^{-1}: every depth shifts one deeper
    std::vector<Elem> shifted(upper.coeffs().size() + 1, mod.zero());
    for (std::size_t i = 0; i < upper.coeffs().size(); ++i) shifted[i + 1] = upper.coeffs()[i];
    InversePoly deeper(std::move(shifted), mod.zero());
    return inv.add(deeper, iterated_ring_action(inv, m, k - 1, inv.algebra().delta_prime()(r)));
}

// Every subset that contains zero and is closed under addition and all
// generator actions. Only for tiny carriers.
inline std::vector<Bitset> brute_force_submodules(const ActionCarrier& c) {
    std::vector<Bitset> out;
    for (unsigned long mask = 0; mask < (1ul << c.size); ++mask) {
        if (!(mask & (1ul << c.zero))) continue;
        bool closed = true;
        for (std::size_t a = 0; a < c.size && closed; ++a) {
            if (!(mask & (1ul << a))) continue;
            for (std::size_t b = 0; b < c.size && closed; ++b) {
                if (!(mask & (1ul << b))) continue;
                if (!(mask & (1ul << c.add_at(static_cast<Elem>(a), static_cast<Elem>(b)))))
                    closed = false;
            }
            for (const auto* gen : c.gens)
                if (!(mask & (1ul << (*gen)[a]))) closed = false;
        }
        if (!closed) continue;
        Bitset b(c.size);
        for (std::size_t e = 0; e < c.size; ++e)
            if (mask & (1ul << e)) b.set(e);
        out.push_back(b);
    }
    return out;
}

inline SkewPtr make_algebra(FiniteRing ring, RingMap sigma, RingMap delta) {
    auto rp = std::make_shared<const FiniteRing>(std::move(ring));
    return std::make_shared<const SkewOreRing>(rp, std::move(sigma), std::move(delta), 8);
}

// F_2[t]/(t^4) with sigma = id, delta = t^2 d/dt.
inline SkewPtr jordan_algebra() {
    FiniteRing ring = FiniteRing::trunc_poly(2, 4);
    RingMap sigma = RingMap::identity(ring.size());
    std::vector<Elem> img(ring.size());
    for (Elem e = 0; e < ring.size(); ++e) {
        // digits of e base 2: coefficient of t^i; delta(t^i) = i t^{i+1}
        Elem acc = ring.zero();
        Elem v = e;
        for (unsigned i = 0; i < 4; ++i) {
            unsigned digit = (v >> i) & 1;
            if (digit && i % 2 == 1 && i + 1 < 4) {
                Elem ti = static_cast<Elem>(1u << (i + 1));  // t^{i+1}
                acc = ring.add(acc, ti);
            }
        }
        img[e] = acc;
    }
    return make_algebra(std::move(ring), std::move(sigma), RingMap(std::move(img)));
}

}  // namespace oredim::testing
