#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "oredim/module.hpp"

namespace oredim {

/// Element subset of a module universe, packed into 64-bit words.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    std::size_t universe() const { return n_; }
    void set(std::size_t i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    std::size_t count() const;
    bool any() const;
    bool is_subset_of(const Bitset& o) const;
    Bitset intersect(const Bitset& o) const;
    std::vector<Elem> elements() const;
    std::vector<bool> as_bools() const;

    bool operator==(const Bitset& o) const { return n_ == o.n_ && w_ == o.w_; }
    std::size_t hash() const;
    /// Canonical order: by cardinality, then lexicographically by words.
    static bool canonical_less(const Bitset& a, const Bitset& b);

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

struct BitsetHash {
    std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

/// The data submodule enumeration needs: an abelian group table plus one
/// action map per generator. Views point into the owning module; keep it
/// alive while the carrier is in use.
struct ActionCarrier {
    std::size_t size = 0;
    Elem zero = 0;
    const std::vector<Elem>* add = nullptr;  // size*size, flattened
    std::vector<const std::vector<Elem>*> gens;

    Elem add_at(Elem a, Elem b) const { return (*add)[a * size + b]; }
};

ActionCarrier carrier_of(const FiniteModule& m);
/// Full A-action: every ring element plus x.
ActionCarrier a_carrier_of(const TruncatedInverseModule& t);
/// Scalar restriction to R: ring actions only, x forgotten.
ActionCarrier r_carrier_of(const TruncatedInverseModule& t);

struct LatticeLimits {
    std::size_t module_cap = 256;     // refuse modules larger than this
    std::size_t submodule_cap = 8192; // refuse lattices larger than this
    std::size_t flag_cap = 1024;      // precompute essential/small flags up to this count
    std::size_t corank_oracle_cap = 16;
};

/// Smallest submodule of the carrier containing the seeds.
Bitset closure_of(const ActionCarrier& c, const std::vector<Elem>& seeds);

/// The complete lattice of submodules, enumerated by closing the cyclic
/// submodules under pairwise sums. Order is canonical (cardinality, then
/// lexicographic), so witnesses and reports are reproducible.
class SubmoduleLattice {
public:
    static SubmoduleLattice enumerate(const ActionCarrier& c, const LatticeLimits& lim = {});

    std::size_t count() const { return subs_.size(); }
    const Bitset& sub(std::size_t i) const { return subs_[i]; }
    std::size_t zero_index() const { return zero_idx_; }
    std::size_t full_index() const { return full_idx_; }
    std::size_t module_size() const { return module_size_; }
    Elem module_zero() const { return zero_; }
    Elem elem_add(Elem a, Elem b) const { return add_[a * module_size_ + b]; }

    std::optional<std::size_t> find(const Bitset& b) const;
    std::size_t index_of(const Bitset& b) const;  // throws when absent

    std::size_t meet(std::size_t i, std::size_t j) const;
    std::size_t join(std::size_t i, std::size_t j) const;

    bool is_minimal(std::size_t i) const { return minimal_[i]; }
    bool is_maximal(std::size_t i) const { return maximal_[i]; }
    const std::vector<std::size_t>& atoms() const { return atoms_; }
    const std::vector<std::size_t>& maximals() const { return maximals_; }

    /// N meets every nonzero submodule nontrivially.
    bool is_essential(std::size_t i) const;
    /// N' + N = M forces N' = M.
    bool is_small(std::size_t i) const;
    /// Any two nonzero submodules of N intersect nontrivially.
    bool is_uniform_within(std::size_t i) const;

private:
    Bitset join_bits(const Bitset& a, const Bitset& b) const;

    std::vector<Bitset> subs_;
    std::unordered_map<Bitset, std::size_t, BitsetHash> index_;
    std::size_t zero_idx_ = 0, full_idx_ = 0;
    std::size_t module_size_ = 0;
    Elem zero_ = 0;
    std::vector<Elem> add_;  // owned copy of the carrier's addition table
    std::vector<bool> minimal_, maximal_;
    std::vector<std::size_t> atoms_, maximals_;
    // precomputed when count() <= flag_cap; accessors fall back to direct sweeps
    std::optional<std::vector<bool>> essential_flags_, small_flags_;
};

// --- predicates on the whole module ------------------------------------
bool is_simple(const SubmoduleLattice& lat);
bool is_uniform(const SubmoduleLattice& lat);
/// Nonzero, and the sum of any two proper submodules stays proper.
bool is_hollow(const SubmoduleLattice& lat);
bool is_semisimple(const SubmoduleLattice& lat);
/// Every proper submodule is contained in a maximal one.
bool is_bass(const SubmoduleLattice& lat);
/// Intersection of the maximal submodules (the whole module when none exist).
std::size_t radical_index(const SubmoduleLattice& lat);
/// Join of the minimal submodules.
std::size_t socle_index(const SubmoduleLattice& lat);

// --- dimensions ----------------------------------------------------------
struct RudimResult {
    unsigned value = 0;
    std::vector<std::size_t> independent_family;  // witness for the maximum
    std::vector<std::size_t> essential_family;    // uniform pieces with essential sum
};

/// Uniform (Goldie) dimension: maximum size of an independent family of
/// nonzero submodules. Also computed as the size of a maximal independent
/// family of uniform submodules whose sum is essential; the two
/// characterizations are asserted equal.
RudimResult rudim(const SubmoduleLattice& lat);

struct CorankResult {
    unsigned value = 0;
    std::vector<std::size_t> coindependent_family;  // proper K_i with K_i + meet(others) = M
};

/// Couniform dimension via coindependent-family search: the largest k
/// admitting proper K_1..K_k with K_i + meet_{j != i} K_j = M, which realizes
/// a surjection onto a direct sum of k nonzero quotients.
CorankResult corank(const SubmoduleLattice& lat);

/// Definitional oracle: max over kernels K of the largest k with M/K an
/// internal direct sum of k nonzero submodules. Only for small modules.
unsigned corank_by_quotient_search(const ActionCarrier& c, const SubmoduleLattice& lat,
                                   const LatticeLimits& lim = {});

// --- quotients of a carrier ---------------------------------------------
/// Self-owned module tables (used for quotients inside searches).
struct OwnedModule {
    std::size_t size = 0;
    Elem zero = 0;
    std::vector<Elem> add;
    std::vector<std::vector<Elem>> gens;
    ActionCarrier carrier() const;
};
OwnedModule quotient_carrier(const ActionCarrier& c, const Bitset& sub);

// --- ring-level predicates ------------------------------------------------
struct PerfectReport {
    bool right_perfect = false;
    std::size_t radical_size = 0;
    /// least k with J^k = 0, or 0 when J is not nilpotent
    unsigned radical_nilpotency = 0;
    bool quotient_semisimple = false;
};

/// R/J(R) semisimple and J(R) nilpotent. On a finite carrier nilpotency of
/// J decides right T-nilpotency, so this is exactly right perfection.
PerfectReport right_perfect_report(const RingPtr& ring, const LatticeLimits& lim = {});

}  // namespace oredim
