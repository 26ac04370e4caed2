#include "oredim/maps.hpp"

#include <stdexcept>

namespace oredim {

RingMap RingMap::identity(std::size_t n) {
    std::vector<Elem> img(n);
    for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<Elem>(i);
    return RingMap(std::move(img));
}

RingMap RingMap::zero_map(const FiniteRing& ring) {
    return RingMap(std::vector<Elem>(ring.size(), ring.zero()));
}

bool RingMap::is_bijective() const {
    std::vector<bool> seen(img_.size(), false);
    for (Elem v : img_) {
        if (v >= img_.size() || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

RingMap RingMap::inverse() const {
    if (!is_bijective()) throw std::invalid_argument("map is not bijective");
    std::vector<Elem> inv(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) inv[img_[i]] = static_cast<Elem>(i);
    return RingMap(std::move(inv));
}

RingMap RingMap::after(const RingMap& g) const {
    std::vector<Elem> img(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) img[i] = img_[g.img_[i]];
    return RingMap(std::move(img));
}

namespace {
constexpr std::size_t kViolationCap = 8;

void record(std::vector<std::string>& out, std::string msg) {
    if (out.size() < kViolationCap) out.push_back(std::move(msg));
}
}  // namespace

EndoReport verify_endomorphism(const FiniteRing& ring, const RingMap& f) {
    if (f.size() != ring.size()) throw std::invalid_argument("map size does not match ring");
    EndoReport rep;
    const std::size_t n = ring.size();
    auto nm = [&](Elem a) { return ring.element_name(a); };
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b) {
            if (f(ring.add(a, b)) != ring.add(f(a), f(b))) {
                rep.additive = false;
                record(rep.violations, "not additive at (" + nm(a) + "," + nm(b) + ")");
            }
            if (f(ring.mul(a, b)) != ring.mul(f(a), f(b))) {
                rep.multiplicative = false;
                record(rep.violations, "not multiplicative at (" + nm(a) + "," + nm(b) + "): f(" +
                                           nm(ring.mul(a, b)) + ") = " + nm(f(ring.mul(a, b))) +
                                           " but f(" + nm(a) + ")*f(" + nm(b) + ") = " +
                                           nm(ring.mul(f(a), f(b))));
            }
        }
    if (f(ring.one()) != ring.one()) {
        rep.fixes_one = false;
        record(rep.violations, "does not fix one: f(1) = " + nm(f(ring.one())));
    }
    rep.bijective = f.is_bijective();
    return rep;
}

DerivationReport verify_sigma_derivation(const FiniteRing& ring, const RingMap& sigma,
                                         const RingMap& delta) {
    if (delta.size() != ring.size() || sigma.size() != ring.size())
        throw std::invalid_argument("map size does not match ring");
    DerivationReport rep;
    const std::size_t n = ring.size();
    auto nm = [&](Elem a) { return ring.element_name(a); };
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b) {
            if (delta(ring.add(a, b)) != ring.add(delta(a), delta(b))) {
                rep.additive = false;
                record(rep.violations, "not additive at (" + nm(a) + "," + nm(b) + ")");
            }
            Elem lhs = delta(ring.mul(a, b));
            Elem rhs = ring.add(ring.mul(sigma(a), delta(b)), ring.mul(delta(a), b));
            if (lhs != rhs) {
                rep.leibniz = false;
                record(rep.violations, "Leibniz law fails at (" + nm(a) + "," + nm(b) + "): d(" +
                                           nm(ring.mul(a, b)) + ") = " + nm(lhs) +
                                           " but sigma(" + nm(a) + ")d(" + nm(b) + ") + d(" +
                                           nm(a) + ")" + nm(b) + " = " + nm(rhs));
            }
        }
    return rep;
}

std::optional<unsigned> nilpotency_index(const FiniteRing& ring, const RingMap& delta, Elem r,
                                         std::size_t bound) {
    Elem cur = r;
    for (unsigned k = 1; k <= bound; ++k) {
        cur = delta(cur);
        if (cur == ring.zero()) return k;
    }
    return std::nullopt;
}

NilpotencyTable nilpotency_table(const FiniteRing& ring, const RingMap& delta) {
    NilpotencyTable table;
    table.index.assign(ring.size(), 0);
    const std::size_t bound = ring.size() + 1;
    for (Elem r = 0; r < ring.size(); ++r) {
        auto n = nilpotency_index(ring, delta, r, bound);
        if (!n) {
            table.locally_nilpotent = false;
            if (!table.divergent_at) table.divergent_at = r;
        } else {
            table.index[r] = *n;
        }
    }
    return table;
}

DualPair dual_maps(const FiniteRing& ring, const RingMap& sigma, const RingMap& delta) {
    if (!sigma.is_bijective()) throw std::invalid_argument("sigma is not bijective");
    DualPair dual;
    dual.sigma_prime = sigma.inverse();
    std::vector<Elem> dp(ring.size());
    for (Elem r = 0; r < ring.size(); ++r) dp[r] = ring.neg(delta(dual.sigma_prime(r)));
    dual.delta_prime = RingMap(std::move(dp));

    auto rep = verify_sigma_derivation(ring, dual.sigma_prime, dual.delta_prime);
    if (!rep.valid())
        throw std::invalid_argument("dual map delta' is not a sigma'-derivation: " +
                                    (rep.violations.empty() ? std::string("unknown")
                                                            : rep.violations.front()));
    return dual;
}

}  // namespace oredim
