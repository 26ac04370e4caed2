#include "oredim/lattice.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

namespace oredim {

// ---------------------------------------------------------------- Bitset ---

std::size_t Bitset::count() const {
    std::size_t c = 0;
    for (auto w : w_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

bool Bitset::any() const {
    for (auto w : w_)
        if (w) return true;
    return false;
}

bool Bitset::is_subset_of(const Bitset& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
        if (w_[i] & ~o.w_[i]) return false;
    return true;
}

Bitset Bitset::intersect(const Bitset& o) const {
    Bitset r(n_);
    for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] & o.w_[i];
    return r;
}

std::vector<Elem> Bitset::elements() const {
    std::vector<Elem> out;
    for (std::size_t i = 0; i < n_; ++i)
        if (test(i)) out.push_back(static_cast<Elem>(i));
    return out;
}

std::vector<bool> Bitset::as_bools() const {
    std::vector<bool> out(n_, false);
    for (std::size_t i = 0; i < n_; ++i) out[i] = test(i);
    return out;
}

std::size_t Bitset::hash() const {
    std::size_t h = 1469598103934665603ull;
    for (auto w : w_) {
        h ^= static_cast<std::size_t>(w);
        h *= 1099511628211ull;
    }
    return h;
}

bool Bitset::canonical_less(const Bitset& a, const Bitset& b) {
    std::size_t ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    return a.w_ < b.w_;
}

// ------------------------------------------------------------- carriers ---

ActionCarrier carrier_of(const FiniteModule& m) {
    ActionCarrier c;
    c.size = m.size();
    c.zero = m.zero();
    c.add = &m.add_table();
    for (const auto& row : m.action_tables()) c.gens.push_back(&row);
    return c;
}

ActionCarrier a_carrier_of(const TruncatedInverseModule& t) {
    ActionCarrier c = r_carrier_of(t);
    c.gens.push_back(&t.x_action_table());
    return c;
}

ActionCarrier r_carrier_of(const TruncatedInverseModule& t) {
    ActionCarrier c;
    c.size = t.size();
    c.zero = t.zero();
    c.add = &t.add_table();
    for (const auto& row : t.ring_action_tables()) c.gens.push_back(&row);
    return c;
}

// -------------------------------------------------------------- closure ---

namespace {

// Extend the subgroup bits by generator g (adds the whole coset chain).
void absorb(Bitset& bits, Elem g, const ActionCarrier& c) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t x = 0; x < c.size; ++x) {
            if (!bits.test(x)) continue;
            Elem v = c.add_at(static_cast<Elem>(x), g);
            if (!bits.test(v)) {
                bits.set(v);
                changed = true;
            }
        }
    }
}

}  // namespace

Bitset closure_of(const ActionCarrier& c, const std::vector<Elem>& seeds) {
    Bitset bits(c.size);
    bits.set(c.zero);
    std::vector<Elem> pending = seeds;
    while (!pending.empty()) {
        Elem e = pending.back();
        pending.pop_back();
        if (!bits.test(e)) {
            Bitset before = bits;
            absorb(bits, e, c);
            for (std::size_t x = 0; x < c.size; ++x)
                if (bits.test(x) && !before.test(x)) pending.push_back(static_cast<Elem>(x));
        }
        for (const auto* gen : c.gens) {
            Elem img = (*gen)[e];
            if (!bits.test(img)) pending.push_back(img);
        }
    }
    return bits;
}

// ---------------------------------------------------- SubmoduleLattice ---

Bitset SubmoduleLattice::join_bits(const Bitset& a, const Bitset& b) const {
    // Subgroup sum {x + y}: a subgroup again, and closed under every
    // generator action because both operands are.
    Bitset r(module_size_);
    std::vector<Elem> ea = a.elements(), eb = b.elements();
    for (Elem x : ea) {
        const Elem* row = add_.data() + static_cast<std::size_t>(x) * module_size_;
        for (Elem y : eb) r.set(row[y]);
    }
    return r;
}

SubmoduleLattice SubmoduleLattice::enumerate(const ActionCarrier& c, const LatticeLimits& lim) {
    if (c.size > lim.module_cap)
        throw std::invalid_argument("module size " + std::to_string(c.size) + " exceeds cap " +
                                    std::to_string(lim.module_cap));
    SubmoduleLattice lat;
    lat.module_size_ = c.size;
    lat.zero_ = c.zero;
    lat.add_ = *c.add;

    std::unordered_map<Bitset, std::size_t, BitsetHash> seen;
    std::vector<Bitset> subs;
    auto add_sub = [&](Bitset b) {
        if (seen.emplace(b, subs.size()).second) {
            subs.push_back(std::move(b));
            if (subs.size() > lim.submodule_cap)
                throw std::runtime_error("submodule count exceeds cap " +
                                         std::to_string(lim.submodule_cap));
        }
    };

    add_sub(closure_of(c, {}));
    for (std::size_t m = 0; m < c.size; ++m) add_sub(closure_of(c, {static_cast<Elem>(m)}));

    // Close under pairwise joins; new entries extend the sweep.
    for (std::size_t i = 0; i < subs.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) {
            if (subs[j].is_subset_of(subs[i]) || subs[i].is_subset_of(subs[j])) continue;
            add_sub(lat.join_bits(subs[i], subs[j]));
        }

    std::sort(subs.begin(), subs.end(), Bitset::canonical_less);
    lat.subs_ = std::move(subs);
    lat.index_.clear();
    for (std::size_t i = 0; i < lat.subs_.size(); ++i) lat.index_.emplace(lat.subs_[i], i);

    Bitset zero_sub(c.size);
    zero_sub.set(c.zero);
    lat.zero_idx_ = lat.index_of(closure_of(c, {}));
    Bitset full(c.size);
    for (std::size_t i = 0; i < c.size; ++i) full.set(i);
    lat.full_idx_ = lat.index_of(full);

    const std::size_t n = lat.subs_.size();
    lat.minimal_.assign(n, false);
    lat.maximal_.assign(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        if (i != lat.zero_idx_) {
            bool minimal = true;
            for (std::size_t j = 0; j < n && minimal; ++j)
                if (j != lat.zero_idx_ && j != i && lat.subs_[j].is_subset_of(lat.subs_[i]))
                    minimal = false;
            lat.minimal_[i] = minimal;
            if (minimal) lat.atoms_.push_back(i);
        }
        if (i != lat.full_idx_) {
            bool maximal = true;
            for (std::size_t j = 0; j < n && maximal; ++j)
                if (j != lat.full_idx_ && j != i && lat.subs_[i].is_subset_of(lat.subs_[j]))
                    maximal = false;
            lat.maximal_[i] = maximal;
            if (maximal) lat.maximals_.push_back(i);
        }
    }

    if (n <= lim.flag_cap) {
        std::vector<bool> esf(n), smf(n);
        for (std::size_t i = 0; i < n; ++i) {
            esf[i] = lat.is_essential(i);
            smf[i] = lat.is_small(i);
        }
        lat.essential_flags_ = std::move(esf);
        lat.small_flags_ = std::move(smf);
    }
    return lat;
}

std::optional<std::size_t> SubmoduleLattice::find(const Bitset& b) const {
    auto it = index_.find(b);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t SubmoduleLattice::index_of(const Bitset& b) const {
    auto idx = find(b);
    if (!idx) throw std::logic_error("element set is not a submodule of this lattice");
    return *idx;
}

std::size_t SubmoduleLattice::meet(std::size_t i, std::size_t j) const {
    return index_of(subs_[i].intersect(subs_[j]));
}

std::size_t SubmoduleLattice::join(std::size_t i, std::size_t j) const {
    return index_of(join_bits(subs_[i], subs_[j]));
}

bool SubmoduleLattice::is_essential(std::size_t i) const {
    if (essential_flags_) return (*essential_flags_)[i];
    // Every submodule contains zero, so nontrivial intersection means >= 2 elements.
    for (std::size_t j = 0; j < subs_.size(); ++j)
        if (j != zero_idx_ && subs_[i].intersect(subs_[j]).count() <= 1) return false;
    return true;
}

bool SubmoduleLattice::is_small(std::size_t i) const {
    if (small_flags_) return (*small_flags_)[i];
    for (std::size_t j = 0; j < subs_.size(); ++j)
        if (j != full_idx_ && join(i, j) == full_idx_) return false;
    return true;
}

bool SubmoduleLattice::is_uniform_within(std::size_t i) const {
    if (!subs_[i].any() || subs_[i].count() <= 1) return false;  // zero module is not uniform
    std::vector<std::size_t> inside;
    for (std::size_t j = 0; j < subs_.size(); ++j)
        if (j != zero_idx_ && subs_[j].is_subset_of(subs_[i])) inside.push_back(j);
    for (std::size_t a = 0; a < inside.size(); ++a)
        for (std::size_t b = a + 1; b < inside.size(); ++b)
            if (meet(inside[a], inside[b]) == zero_idx_) return false;
    return true;
}

// ------------------------------------------------------- module predicates ---

bool is_simple(const SubmoduleLattice& lat) { return lat.count() == 2; }

bool is_uniform(const SubmoduleLattice& lat) { return lat.is_uniform_within(lat.full_index()); }

bool is_hollow(const SubmoduleLattice& lat) {
    if (lat.module_size() <= 1) return false;
    for (std::size_t i = 0; i < lat.count(); ++i) {
        if (i == lat.full_index()) continue;
        for (std::size_t j = 0; j <= i; ++j) {
            if (j == lat.full_index()) continue;
            if (lat.join(i, j) == lat.full_index()) return false;
        }
    }
    return true;
}

bool is_semisimple(const SubmoduleLattice& lat) { return socle_index(lat) == lat.full_index(); }

bool is_bass(const SubmoduleLattice& lat) {
    for (std::size_t i = 0; i < lat.count(); ++i) {
        if (i == lat.full_index()) continue;
        bool covered = false;
        for (std::size_t p : lat.maximals())
            if (lat.sub(i).is_subset_of(lat.sub(p))) {
                covered = true;
                break;
            }
        if (!covered) return false;
    }
    return true;
}

std::size_t radical_index(const SubmoduleLattice& lat) {
    std::size_t acc = lat.full_index();
    for (std::size_t p : lat.maximals()) acc = lat.meet(acc, p);
    return acc;
}

std::size_t socle_index(const SubmoduleLattice& lat) {
    std::size_t acc = lat.zero_index();
    for (std::size_t a : lat.atoms()) acc = lat.join(acc, a);
    return acc;
}

// ----------------------------------------------------------------- rudim ---

namespace {

// Max independent family of atoms, depth-first in canonical order. A family
// of atoms is independent iff each atom avoids the join of the others, and
// an atom meets a submodule nontrivially iff it is contained in it.
void rudim_dfs(const SubmoduleLattice& lat, std::size_t start, std::size_t join_so_far,
               std::vector<std::size_t>& family, std::vector<std::size_t>& best) {
    const auto& atoms = lat.atoms();
    if (family.size() > best.size()) best = family;
    if (family.size() + (atoms.size() - start) <= best.size()) return;
    for (std::size_t t = start; t < atoms.size(); ++t) {
        std::size_t a = atoms[t];
        if (lat.sub(a).is_subset_of(lat.sub(join_so_far))) continue;
        family.push_back(a);
        rudim_dfs(lat, t + 1, lat.join(join_so_far, a), family, best);
        family.pop_back();
    }
}

}  // namespace

RudimResult rudim(const SubmoduleLattice& lat) {
    RudimResult res;
    std::vector<std::size_t> family, best;
    rudim_dfs(lat, 0, lat.zero_index(), family, best);
    res.independent_family = best;

    // Second characterization: greedily extend an independent family of
    // atoms until no atom avoids the sum; the sum is then essential and the
    // pieces are uniform.
    std::size_t sum = lat.zero_index();
    for (std::size_t a : lat.atoms()) {
        if (lat.sub(a).is_subset_of(lat.sub(sum))) continue;
        res.essential_family.push_back(a);
        sum = lat.join(sum, a);
    }
    if (!lat.is_essential(sum)) throw std::logic_error("greedy atom family has non-essential sum");
    for (std::size_t a : res.essential_family)
        if (!lat.is_uniform_within(a)) throw std::logic_error("atom is not uniform");
    if (res.essential_family.size() != best.size())
        throw std::logic_error("uniform dimension characterizations disagree");

    res.value = static_cast<unsigned>(best.size());
    return res;
}

// ---------------------------------------------------------------- corank ---

namespace {

bool coindependent(const SubmoduleLattice& lat, const std::vector<std::size_t>& family) {
    const std::size_t t = family.size();
    // prefix[i] = meet of family[0..i-1], suffix[i] = meet of family[i..t-1]
    std::vector<std::size_t> prefix(t + 1, lat.full_index()), suffix(t + 1, lat.full_index());
    for (std::size_t i = 0; i < t; ++i) prefix[i + 1] = lat.meet(prefix[i], family[i]);
    for (std::size_t i = t; i-- > 0;) suffix[i] = lat.meet(suffix[i + 1], family[i]);
    for (std::size_t i = 0; i < t; ++i) {
        std::size_t others = lat.meet(prefix[i], suffix[i + 1]);
        if (lat.join(family[i], others) != lat.full_index()) return false;
    }
    return true;
}

void corank_dfs(const SubmoduleLattice& lat, const std::vector<std::size_t>& proper,
                std::size_t start, std::vector<std::size_t>& family,
                std::vector<std::size_t>& best, unsigned bound) {
    if (family.size() > best.size()) best = family;
    if (family.size() >= bound) return;
    for (std::size_t t = start; t < proper.size(); ++t) {
        std::size_t k = proper[t];
        // cheap necessary condition: pairwise joins with the family are full
        bool pairwise = true;
        for (std::size_t f : family)
            if (lat.join(f, k) != lat.full_index()) {
                pairwise = false;
                break;
            }
        if (!pairwise) continue;
        family.push_back(k);
        if (coindependent(lat, family)) corank_dfs(lat, proper, t + 1, family, best, bound);
        family.pop_back();
    }
}

}  // namespace

CorankResult corank(const SubmoduleLattice& lat) {
    CorankResult res;
    if (lat.module_size() <= 1) return res;  // corank({0}) = 0
    std::vector<std::size_t> proper;
    for (std::size_t i = 0; i < lat.count(); ++i)
        if (i != lat.full_index()) proper.push_back(i);
    unsigned bound = 0;
    for (std::size_t n = lat.module_size(); n > 1; n /= 2) ++bound;  // k <= log2 |M|
    std::vector<std::size_t> family, best;
    corank_dfs(lat, proper, 0, family, best, bound);
    res.value = static_cast<unsigned>(best.size());
    res.coindependent_family = best;
    return res;
}

// ------------------------------------------------------- quotient search ---

ActionCarrier OwnedModule::carrier() const {
    ActionCarrier c;
    c.size = size;
    c.zero = zero;
    c.add = &add;
    for (const auto& g : gens) c.gens.push_back(&g);
    return c;
}

OwnedModule quotient_carrier(const ActionCarrier& c, const Bitset& sub) {
    std::vector<Elem> members = sub.elements();
    std::vector<Elem> leader(c.size);
    for (std::size_t e = 0; e < c.size; ++e) {
        Elem best = static_cast<Elem>(e);
        for (Elem nu : members) best = std::min(best, c.add_at(static_cast<Elem>(e), nu));
        leader[e] = best;
    }
    std::map<Elem, Elem> idx;
    std::vector<Elem> leaders;
    for (std::size_t e = 0; e < c.size; ++e)
        if (leader[e] == e) {
            idx[static_cast<Elem>(e)] = static_cast<Elem>(leaders.size());
            leaders.push_back(static_cast<Elem>(e));
        }
    auto coset = [&](Elem e) { return idx.at(leader[e]); };

    OwnedModule q;
    q.size = leaders.size();
    q.zero = coset(c.zero);
    q.add.resize(q.size * q.size);
    for (std::size_t i = 0; i < leaders.size(); ++i)
        for (std::size_t j = 0; j < leaders.size(); ++j)
            q.add[i * q.size + j] = coset(c.add_at(leaders[i], leaders[j]));
    for (const auto* gen : c.gens) {
        std::vector<Elem> row(q.size);
        for (std::size_t i = 0; i < leaders.size(); ++i) row[i] = coset((*gen)[leaders[i]]);
        q.gens.push_back(std::move(row));
    }
    return q;
}

namespace {

// Largest k with Q = Q_1 (+) ... (+) Q_k, all nonzero: depth-first over the
// nonzero submodules with a directness constraint and full-join success test.
void decompose_dfs(const SubmoduleLattice& lat, const std::vector<std::size_t>& nonzero,
                   std::size_t start, std::size_t join_so_far, std::size_t parts,
                   unsigned& best) {
    if (join_so_far == lat.full_index()) best = std::max(best, static_cast<unsigned>(parts));
    for (std::size_t t = start; t < nonzero.size(); ++t) {
        std::size_t q = nonzero[t];
        if (lat.meet(join_so_far, q) != lat.zero_index()) continue;
        decompose_dfs(lat, nonzero, t + 1, lat.join(join_so_far, q), parts + 1, best);
    }
}

unsigned max_direct_summands(const SubmoduleLattice& lat) {
    if (lat.module_size() <= 1) return 0;
    std::vector<std::size_t> nonzero;
    for (std::size_t i = 0; i < lat.count(); ++i)
        if (i != lat.zero_index()) nonzero.push_back(i);
    unsigned best = 0;
    decompose_dfs(lat, nonzero, 0, lat.zero_index(), 0, best);
    return best;
}

}  // namespace

unsigned corank_by_quotient_search(const ActionCarrier& c, const SubmoduleLattice& lat,
                                   const LatticeLimits& lim) {
    if (c.size > lim.corank_oracle_cap)
        throw std::invalid_argument("corank oracle refuses modules larger than " +
                                    std::to_string(lim.corank_oracle_cap));
    unsigned best = 0;
    for (std::size_t k = 0; k < lat.count(); ++k) {
        OwnedModule q = quotient_carrier(c, lat.sub(k));
        auto qlat = SubmoduleLattice::enumerate(q.carrier(), lim);
        best = std::max(best, max_direct_summands(qlat));
    }
    return best;
}

// ----------------------------------------------------------- right perfect ---

PerfectReport right_perfect_report(const RingPtr& ring, const LatticeLimits& lim) {
    PerfectReport rep;
    auto regular = FiniteModule::regular(ring);
    auto lat = SubmoduleLattice::enumerate(carrier_of(regular), lim);
    Bitset jac = lat.sub(radical_index(lat));
    rep.radical_size = jac.count();

    // Nilpotency of J: iterate J^{k+1} = additive span of {a b : a in J^k, b in J}.
    std::vector<Elem> j_elems = jac.elements();
    Bitset power = jac;
    unsigned k = 1;
    std::vector<Bitset> seen_powers{power};
    while (power.count() > 1) {
        std::vector<Elem> seeds;
        for (Elem a : power.elements())
            for (Elem b : j_elems) seeds.push_back(ring->mul(a, b));
        // additive span only: use a carrier with no generators
        ActionCarrier group;
        group.size = ring->size();
        group.zero = ring->zero();
        group.add = &regular.add_table();
        Bitset next = closure_of(group, seeds);
        ++k;
        bool repeated = false;
        for (const auto& p : seen_powers)
            if (p == next) repeated = true;
        power = next;
        if (repeated && power.count() > 1) {
            rep.radical_nilpotency = 0;  // stabilized without vanishing
            break;
        }
        seen_powers.push_back(power);
    }
    if (power.count() <= 1) rep.radical_nilpotency = k;

    auto quotient = FiniteModule::quotient(regular, jac.elements(), ring->label() + "/J");
    auto qlat = SubmoduleLattice::enumerate(carrier_of(quotient), lim);
    rep.quotient_semisimple = is_semisimple(qlat);
    rep.right_perfect = rep.quotient_semisimple && rep.radical_nilpotency > 0;
    return rep;
}

}  // namespace oredim
