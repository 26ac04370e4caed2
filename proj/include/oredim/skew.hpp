#pragma once

#include <memory>
#include <string>
#include <vector>

#include "oredim/maps.hpp"
#include "oredim/ring.hpp"

namespace oredim {

/// Left-normal-form polynomial r_0 + r_1 x + ... + r_k x^k over a finite
/// ring. Trailing zero coefficients are trimmed; the zero polynomial is the
/// empty sequence, with degree -1.
class SkewPoly {
public:
    SkewPoly() = default;
    SkewPoly(std::vector<Elem> coeffs, Elem ring_zero) : c_(std::move(coeffs)) {
        normalize(ring_zero);
    }

    std::ptrdiff_t degree() const { return static_cast<std::ptrdiff_t>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    Elem coeff(std::size_t i, Elem ring_zero) const { return i < c_.size() ? c_[i] : ring_zero; }
    const std::vector<Elem>& coeffs() const { return c_; }
    bool operator==(const SkewPoly& o) const { return c_ == o.c_; }

private:
    void normalize(Elem ring_zero) {
        while (!c_.empty() && c_.back() == ring_zero) c_.pop_back();
    }
    std::vector<Elem> c_;
};

/// Polynomial r_0 + r_1 x^{-1} + ... + r_k x^{-k} with ring coefficients;
/// c_[k] is the coefficient of x^{-k}.
class InverseRingPoly {
public:
    InverseRingPoly() = default;
    InverseRingPoly(std::vector<Elem> coeffs, Elem ring_zero) : c_(std::move(coeffs)) {
        while (!c_.empty() && c_.back() == ring_zero) c_.pop_back();
    }
    std::ptrdiff_t depth() const { return static_cast<std::ptrdiff_t>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    Elem coeff(std::size_t k, Elem ring_zero) const { return k < c_.size() ? c_[k] : ring_zero; }
    const std::vector<Elem>& coeffs() const { return c_; }
    bool operator==(const InverseRingPoly& o) const { return c_ == o.c_; }

private:
    std::vector<Elem> c_;
};

/// The skew Ore polynomial ring A = R(x; sigma, delta): sigma an automorphism,
/// delta a locally nilpotent sigma-derivation, and the commutation rule
///
///   x r = sigma(r) x + sigma delta(r) x^2 + ... + sigma delta^{n(r)-1}(r) x^{n(r)}.
///
/// Construction verifies every hypothesis exhaustively (endomorphism laws,
/// bijectivity, the Leibniz law, local nilpotency) and precomputes the dual
/// operator family f_j^i up to a configured depth, so values of this class can
/// be shared freely across threads afterwards.
class SkewOreRing {
public:
    SkewOreRing(RingPtr ring, RingMap sigma, RingMap delta, unsigned op_depth = 8);

    const FiniteRing& ring() const { return *ring_; }
    RingPtr ring_ptr() const { return ring_; }
    const RingMap& sigma() const { return sigma_; }
    const RingMap& delta() const { return delta_; }
    const RingMap& sigma_prime() const { return dual_.sigma_prime; }
    const RingMap& delta_prime() const { return dual_.delta_prime; }
    /// n(r): least n with delta^n(r) = 0.
    unsigned nilpotency(Elem r) const { return nilp_.index[r]; }
    bool sigma_delta_commute() const { return sigma_delta_commute_; }
    unsigned op_depth() const { return op_depth_; }

    // --- elements of A -------------------------------------------------
    SkewPoly zero() const { return SkewPoly(); }
    SkewPoly one() const { return constant(ring_->one()); }
    SkewPoly constant(Elem r) const { return SkewPoly({r}, ring_->zero()); }
    /// r * x^k
    SkewPoly monomial(Elem r, unsigned k) const;
    SkewPoly x(unsigned k = 1) const { return monomial(ring_->one(), k); }

    SkewPoly add(const SkewPoly& f, const SkewPoly& g) const;
    SkewPoly neg(const SkewPoly& f) const;
    /// Normal form of x * r, per the commutation rule above; degree n(r) for r != 0.
    SkewPoly commute_right(Elem r) const;
    /// Normal form of x * f.
    SkewPoly lift(const SkewPoly& f) const;
    /// Associative product in left normal form, by rewriting every x that
    /// precedes a coefficient until none remains.
    SkewPoly mul(const SkewPoly& f, const SkewPoly& g) const;
    std::string to_string(const SkewPoly& f) const;

    // --- the operator family f_j^i --------------------------------------
    /// f_j^i(r): the sum of all words in sigma', delta' with i letters sigma'
    /// and j-i letters delta'. Computed by the Pascal-style recurrence
    /// f_{j+1}^i = sigma' . f_j^{i-1} + delta' . f_j^i, memoized at
    /// construction; the word-sum definition is kept as a test oracle only.
    Elem f_op(unsigned j, unsigned i, Elem r) const;
    const std::vector<Elem>& f_op_table(unsigned j, unsigned i) const;

    // --- the ring R[x^{-1}] ----------------------------------------------
    /// x^{-k} r = sum_{i=0..k} f_k^i(r) x^{-i}.
    InverseRingPoly inv_monomial_times(unsigned k, Elem r) const;
    InverseRingPoly inv_constant(Elem r) const { return InverseRingPoly({r}, ring_->zero()); }
    InverseRingPoly inv_monomial(Elem r, unsigned k) const;
    InverseRingPoly inv_add(const InverseRingPoly& f, const InverseRingPoly& g) const;
    /// (r x^{-k})(s x^{-k'}) = sum_{i=0..k} r f_k^i(s) x^{-(i+k')}, bilinear.
    InverseRingPoly inv_mul(const InverseRingPoly& f, const InverseRingPoly& g) const;
    std::string to_string(const InverseRingPoly& f) const;

private:
    std::size_t fop_slot(unsigned j, unsigned i) const { return j * (j + 1) / 2 + i; }

    RingPtr ring_;
    RingMap sigma_, delta_;
    DualPair dual_;
    NilpotencyTable nilp_;
    unsigned op_depth_;
    bool sigma_delta_commute_ = false;
    std::vector<std::vector<Elem>> fop_;  // triangular, slot(j,i)
};

using SkewPtr = std::shared_ptr<const SkewOreRing>;

}  // namespace oredim
