#include "oredim/skew.hpp"

#include <sstream>
#include <stdexcept>

namespace oredim {

SkewOreRing::SkewOreRing(RingPtr ring, RingMap sigma, RingMap delta, unsigned op_depth)
    : ring_(std::move(ring)), sigma_(std::move(sigma)), delta_(std::move(delta)),
      op_depth_(op_depth) {
    auto ring_laws = ring_->verify_laws();
    if (!ring_laws.ok)
        throw std::invalid_argument("coefficient ring fails its laws: " + ring_laws.violations.front());
    auto endo = verify_endomorphism(*ring_, sigma_);
    if (!endo.valid())
        throw std::invalid_argument("sigma is not an endomorphism: " + endo.violations.front());
    if (!endo.bijective) throw std::invalid_argument("sigma is not an automorphism");
    auto der = verify_sigma_derivation(*ring_, sigma_, delta_);
    if (!der.valid())
        throw std::invalid_argument("delta is not a sigma-derivation: " + der.violations.front());
    nilp_ = nilpotency_table(*ring_, delta_);
    if (!nilp_.locally_nilpotent)
        throw std::invalid_argument("delta is not locally nilpotent: orbit of " +
                                    ring_->element_name(*nilp_.divergent_at) +
                                    " never reaches zero");
    dual_ = dual_maps(*ring_, sigma_, delta_);

    sigma_delta_commute_ = sigma_.after(delta_) == delta_.after(sigma_);

    // f_0^0 = id; f_{j+1}^i = sigma' . f_j^{i-1} + delta' . f_j^i (out-of-range terms zero).
    const std::size_t n = ring_->size();
    fop_.resize(fop_slot(op_depth_, op_depth_) + 1);
    fop_[fop_slot(0, 0)] = RingMap::identity(n).images();
    for (unsigned j = 0; j < op_depth_; ++j) {
        for (unsigned i = 0; i <= j + 1; ++i) {
            std::vector<Elem> tab(n, ring_->zero());
            for (Elem r = 0; r < n; ++r) {
                Elem v = ring_->zero();
                if (i >= 1 && i - 1 <= j) v = ring_->add(v, dual_.sigma_prime(fop_[fop_slot(j, i - 1)][r]));
                if (i <= j) v = ring_->add(v, dual_.delta_prime(fop_[fop_slot(j, i)][r]));
                tab[r] = v;
            }
            fop_[fop_slot(j + 1, i)] = std::move(tab);
        }
    }
}

SkewPoly SkewOreRing::monomial(Elem r, unsigned k) const {
    std::vector<Elem> c(k + 1, ring_->zero());
    c[k] = r;
    return SkewPoly(std::move(c), ring_->zero());
}

SkewPoly SkewOreRing::add(const SkewPoly& f, const SkewPoly& g) const {
    std::vector<Elem> c(std::max(f.coeffs().size(), g.coeffs().size()), ring_->zero());
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = ring_->add(f.coeff(i, ring_->zero()), g.coeff(i, ring_->zero()));
    return SkewPoly(std::move(c), ring_->zero());
}

SkewPoly SkewOreRing::neg(const SkewPoly& f) const {
    std::vector<Elem> c = f.coeffs();
    for (Elem& v : c) v = ring_->neg(v);
    return SkewPoly(std::move(c), ring_->zero());
}

SkewPoly SkewOreRing::commute_right(Elem r) const {
    if (r == ring_->zero()) return SkewPoly();
    std::vector<Elem> c(nilpotency(r) + 1, ring_->zero());
    Elem cur = r;  // delta^{i-1}(r) at step i
    for (unsigned i = 1; i <= nilpotency(r); ++i) {
        c[i] = sigma_(cur);
        cur = delta_(cur);
    }
    return SkewPoly(std::move(c), ring_->zero());
}

SkewPoly SkewOreRing::lift(const SkewPoly& f) const {
    SkewPoly out;
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        SkewPoly term = commute_right(f.coeffs()[i]);
        if (term.is_zero()) continue;
        std::vector<Elem> shifted(term.coeffs().size() + i, ring_->zero());
        for (std::size_t u = 0; u < term.coeffs().size(); ++u) shifted[u + i] = term.coeffs()[u];
        out = add(out, SkewPoly(std::move(shifted), ring_->zero()));
    }
    return out;
}

SkewPoly SkewOreRing::mul(const SkewPoly& f, const SkewPoly& g) const {
    // f * g = sum_i r_i * (x^i * g); x^i * g computed by repeated lifting.
    SkewPoly out;
    SkewPoly xig = g;
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        Elem ri = f.coeffs()[i];
        if (ri != ring_->zero()) {
            std::vector<Elem> scaled = xig.coeffs();
            for (Elem& v : scaled) v = ring_->mul(ri, v);
            out = add(out, SkewPoly(std::move(scaled), ring_->zero()));
        }
        if (i + 1 < f.coeffs().size()) xig = lift(xig);
    }
    return out;
}

Elem SkewOreRing::f_op(unsigned j, unsigned i, Elem r) const { return f_op_table(j, i)[r]; }

const std::vector<Elem>& SkewOreRing::f_op_table(unsigned j, unsigned i) const {
    if (i > j || j > op_depth_) throw std::out_of_range("f_j^i index out of range");
    return fop_[fop_slot(j, i)];
}

InverseRingPoly SkewOreRing::inv_monomial_times(unsigned k, Elem r) const {
    std::vector<Elem> c(k + 1, ring_->zero());
    for (unsigned i = 0; i <= k; ++i) c[i] = f_op(k, i, r);
    return InverseRingPoly(std::move(c), ring_->zero());
}

InverseRingPoly SkewOreRing::inv_monomial(Elem r, unsigned k) const {
    std::vector<Elem> c(k + 1, ring_->zero());
    c[k] = r;
    return InverseRingPoly(std::move(c), ring_->zero());
}

InverseRingPoly SkewOreRing::inv_add(const InverseRingPoly& f, const InverseRingPoly& g) const {
    std::vector<Elem> c(std::max(f.coeffs().size(), g.coeffs().size()), ring_->zero());
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = ring_->add(f.coeff(i, ring_->zero()), g.coeff(i, ring_->zero()));
    return InverseRingPoly(std::move(c), ring_->zero());
}

InverseRingPoly SkewOreRing::inv_mul(const InverseRingPoly& f, const InverseRingPoly& g) const {
    InverseRingPoly out;
    for (std::size_t k = 0; k < f.coeffs().size(); ++k) {
        Elem r = f.coeffs()[k];
        if (r == ring_->zero()) continue;
        for (std::size_t kp = 0; kp < g.coeffs().size(); ++kp) {
            Elem s = g.coeffs()[kp];
            if (s == ring_->zero()) continue;
            // (r x^{-k})(s x^{-k'}): push s through x^{-k}, then shift by k'.
            std::vector<Elem> c(k + kp + 1, ring_->zero());
            for (unsigned i = 0; i <= k; ++i)
                c[i + kp] = ring_->mul(r, f_op(static_cast<unsigned>(k), i, s));
            out = inv_add(out, InverseRingPoly(std::move(c), ring_->zero()));
        }
    }
    return out;
}

namespace {
std::string coeff_token(const FiniteRing& ring, Elem r) {
    const std::string& nm = ring.element_name(r);
    bool needs_parens = nm.find_first_of("+ ,^") != std::string::npos;
    return needs_parens ? "(" + nm + ")" : nm;
}

template <typename Coeffs>
std::string render_poly(const FiniteRing& ring, const Coeffs& c, const char* var, bool inverse) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == ring.zero()) continue;
        if (!first) os << " + ";
        if (i == 0) {
            os << coeff_token(ring, c[i]);
        } else {
            os << coeff_token(ring, c[i]) << "*" << var;
            if (inverse) os << "^-" << i;
            else if (i > 1) os << "^" << i;
        }
        first = false;
    }
    if (first) os << ring.element_name(ring.zero());
    return os.str();
}
}  // namespace

std::string SkewOreRing::to_string(const SkewPoly& f) const {
    return render_poly(*ring_, f.coeffs(), "x", false);
}

std::string SkewOreRing::to_string(const InverseRingPoly& f) const {
    return render_poly(*ring_, f.coeffs(), "x", true);
}

}  // namespace oredim
