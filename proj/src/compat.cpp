#include "oredim/compat.hpp"

namespace oredim {

namespace {

std::string pair_desc(const FiniteModule& m, Elem me, Elem r, const std::string& what) {
    return "m=" + m.element_name(me) + ", r=" + m.ring().element_name(r) + ": " + what;
}

bool sigma_compat_at(const FiniteModule& m, const RingMap& sigma, Elem me, Elem r) {
    bool mr_zero = m.act(me, r) == m.zero();
    bool msr_zero = m.act(me, sigma(r)) == m.zero();
    return mr_zero == msr_zero;
}

bool delta_compat_at(const FiniteModule& m, const RingMap& delta, Elem me, Elem r) {
    if (m.act(me, r) != m.zero()) return true;
    return m.act(me, delta(r)) == m.zero();
}

}  // namespace

bool is_sigma_compatible(const FiniteModule& m, const RingMap& sigma, CompatWitness* witness) {
    for (Elem me = 0; me < m.size(); ++me)
        for (Elem r = 0; r < m.ring().size(); ++r)
            if (!sigma_compat_at(m, sigma, me, r)) {
                if (witness) {
                    witness->m = me;
                    witness->r = r;
                    witness->quotient.reset();
                    bool mr_zero = m.act(me, r) == m.zero();
                    witness->description = pair_desc(
                        m, me, r,
                        mr_zero ? "m*r = 0 but m*sigma(r) = " + m.element_name(m.act(me, sigma(r)))
                                : "m*sigma(r) = 0 but m*r = " + m.element_name(m.act(me, r)));
                }
                return false;
            }
    return true;
}

bool is_delta_compatible(const FiniteModule& m, const RingMap& delta, CompatWitness* witness) {
    for (Elem me = 0; me < m.size(); ++me)
        for (Elem r = 0; r < m.ring().size(); ++r)
            if (!delta_compat_at(m, delta, me, r)) {
                if (witness) {
                    witness->m = me;
                    witness->r = r;
                    witness->quotient.reset();
                    witness->description = pair_desc(
                        m, me, r, "m*r = 0 but m*delta(r) = " + m.element_name(m.act(me, delta(r))));
                }
                return false;
            }
    return true;
}

CompatReport compat_report(const FiniteModule& m, const RingMap& sigma, const RingMap& delta,
                           const SubmoduleLattice& lat) {
    CompatReport rep;
    CompatWitness w;
    rep.sigma_compatible = is_sigma_compatible(m, sigma, &w);
    if (!rep.sigma_compatible) rep.sigma_witness = w;
    rep.delta_compatible = is_delta_compatible(m, delta, &w);
    if (!rep.delta_compatible) rep.delta_witness = w;

    for (std::size_t i = 0; i < lat.count() && (rep.completely_sigma || rep.completely_delta); ++i) {
        auto quotient = FiniteModule::quotient(m, lat.sub(i).elements());
        if (rep.completely_sigma && !is_sigma_compatible(quotient, sigma, &w)) {
            rep.completely_sigma = false;
            w.quotient = i;
            w.description += " (in M/N, N = submodule #" + std::to_string(i) + ")";
            rep.completely_sigma_witness = w;
        }
        if (rep.completely_delta && !is_delta_compatible(quotient, delta, &w)) {
            rep.completely_delta = false;
            w.quotient = i;
            w.description += " (in M/N, N = submodule #" + std::to_string(i) + ")";
            rep.completely_delta_witness = w;
        }
    }
    return rep;
}

bool revalidate_witness(const FiniteModule& m, const RingMap& map, bool sigma_kind,
                        const SubmoduleLattice& lat, const CompatWitness& witness) {
    if (!witness.quotient) {
        return sigma_kind ? !sigma_compat_at(m, map, witness.m, witness.r)
                          : !delta_compat_at(m, map, witness.m, witness.r);
    }
    auto quotient = FiniteModule::quotient(m, lat.sub(*witness.quotient).elements());
    return sigma_kind ? !sigma_compat_at(quotient, map, witness.m, witness.r)
                      : !delta_compat_at(quotient, map, witness.m, witness.r);
}

namespace {

std::vector<RingMap> distinct_powers(const RingMap& f, std::size_t n) {
    std::vector<RingMap> powers{RingMap::identity(n)};
    while (true) {
        RingMap next = f.after(powers.back());
        bool repeat = false;
        for (const auto& p : powers)
            if (p == next) {
                repeat = true;
                break;
            }
        if (repeat) break;
        powers.push_back(std::move(next));
    }
    return powers;
}

}  // namespace

PropositionReport check_compat_propositions(const FiniteModule& m, const SkewOreRing& algebra,
                                            const SubmoduleLattice& lat,
                                            const LatticeLimits& lim) {
    PropositionReport rep;
    const FiniteRing& ring = algebra.ring();
    const RingMap& sigma = algebra.sigma();
    const RingMap& delta = algebra.delta();
    auto sig_pows = distinct_powers(sigma, ring.size());
    auto del_pows = distinct_powers(delta, ring.size());

    PropositionCheck a1{"a1", true, "mr in N implies m sigma^i(r), m delta^j(r) in N"};
    PropositionCheck a2{"a2", true,
                        "mrr' in N implies m sigma(delta^j(r)) delta(r'), m sigma^i(delta(r)) "
                        "delta^j(r'), m r delta^j(r'), m delta^j(r) r' in N"};
    PropositionCheck a3{"a3", true, "mrr' in N or m sigma(r) r' in N implies m delta(r) r' in N"};
    for (std::size_t ni = 0; ni < lat.count(); ++ni) {
        const Bitset& nset = lat.sub(ni);
        for (Elem me = 0; me < m.size(); ++me)
            for (Elem r = 0; r < ring.size(); ++r) {
                if (nset.test(m.act(me, r))) {
                    for (const auto& sp : sig_pows)
                        if (!nset.test(m.act(me, sp(r)))) a1.holds = false;
                    for (const auto& dp : del_pows)
                        if (!nset.test(m.act(me, dp(r)))) a1.holds = false;
                }
                for (Elem rp = 0; rp < ring.size(); ++rp) {
                    bool rr_in = nset.test(m.act(me, ring.mul(r, rp)));
                    if (rr_in) {
                        for (const auto& dp : del_pows) {
                            if (!nset.test(m.act(me, ring.mul(sigma(dp(r)), delta(rp)))))
                                a2.holds = false;
                            if (!nset.test(m.act(me, ring.mul(r, dp(rp))))) a2.holds = false;
                            if (!nset.test(m.act(me, ring.mul(dp(r), rp)))) a2.holds = false;
                            for (const auto& sp : sig_pows)
                                if (!nset.test(m.act(me, ring.mul(sp(delta(r)), dp(rp)))))
                                    a2.holds = false;
                        }
                    }
                    if (rr_in || nset.test(m.act(me, ring.mul(sigma(r), rp))))
                        if (!nset.test(m.act(me, ring.mul(delta(r), rp)))) a3.holds = false;
                }
            }
    }
    rep.items.push_back(a1);
    rep.items.push_back(a2);
    rep.items.push_back(a3);

    CompatReport base = compat_report(m, sigma, delta, lat);
    rep.items.push_back({"b1", base.completely_compatible() && base.compatible(),
                         "completely compatible implies compatible"});

    PropositionCheck b2{"b2", true, "complete compatibility is inherited by every quotient"};
    for (std::size_t ni = 0; ni < lat.count(); ++ni) {
        auto quotient = FiniteModule::quotient(m, lat.sub(ni).elements());
        auto qlat = SubmoduleLattice::enumerate(carrier_of(quotient), lim);
        if (!compat_report(quotient, sigma, delta, qlat).completely_compatible()) b2.holds = false;
    }
    rep.items.push_back(b2);

    PropositionCheck c{"c", true, "completely compatible for the dual pair (sigma', delta')"};
    c.holds = compat_report(m, algebra.sigma_prime(), algebra.delta_prime(), lat)
                  .completely_compatible();
    rep.items.push_back(c);
    return rep;
}

}  // namespace oredim
