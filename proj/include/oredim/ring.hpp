#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace oredim {

/// Canonical element index into a finite carrier (ring or module universe).
using Elem = std::uint32_t;

/// Outcome of an exhaustive law check. `violations` holds human-readable
/// counterexamples, capped so reports stay short; `ok` covers the full sweep.
struct LawReport {
    bool ok = true;
    std::vector<std::string> violations;

    void fail(std::string msg, std::size_t cap = 8) {
        ok = false;
        if (violations.size() < cap) violations.push_back(std::move(msg));
    }
};

/// A finite associative unital ring given by dense operation tables.
///
/// Elements are the indices 0..size()-1. Family constructors fix a canonical
/// positional encoding (coefficient tuples in lexicographic order), so two
/// builds from the same description index elements identically.
class FiniteRing {
public:
    enum class Family { Zmod, GaloisField, TruncPoly, Product, UpperTriangular2, Table };

    static FiniteRing zmod(unsigned n);
    /// GF(p^k), constructed modulo the lexicographically first monic
    /// irreducible polynomial of degree k over F_p.
    static FiniteRing galois_field(unsigned p, unsigned k);
    /// F_p[t]/(t^m): truncated polynomial ring, index = sum c_i p^i.
    static FiniteRing trunc_poly(unsigned p, unsigned m);
    static FiniteRing product(const FiniteRing& a, const FiniteRing& b);
    /// Upper-triangular 2x2 matrices [[a,b],[0,d]] over F_p, index a + p*b + p^2*d.
    static FiniteRing upper_triangular2(unsigned p);
    static FiniteRing from_tables(std::vector<Elem> add, std::vector<Elem> mul, Elem one,
                                  std::string label);

    std::size_t size() const { return n_; }
    Elem zero() const { return zero_; }
    Elem one() const { return one_; }
    Elem add(Elem a, Elem b) const { return add_[a * n_ + b]; }
    Elem mul(Elem a, Elem b) const { return mul_[a * n_ + b]; }
    Elem neg(Elem a) const { return neg_[a]; }
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

    Family family() const { return family_; }
    const std::string& label() const { return label_; }
    const std::string& element_name(Elem a) const { return names_[a]; }
    bool is_commutative() const { return commutative_; }
    /// Additive order of 1.
    unsigned characteristic() const { return characteristic_; }
    /// a has a two-sided multiplicative inverse.
    bool is_unit(Elem a) const;

    /// Exhaustively re-checks the ring axioms: abelian addition, associative
    /// multiplication, two-sided distributivity and identity.
    LawReport verify_laws() const;

    /// Sizes of the factors when family() == Product.
    const std::vector<std::size_t>& product_arity() const { return product_sizes_; }

private:
    FiniteRing() = default;
    void finish_construction();  // neg table, flags, default names

    std::size_t n_ = 0;
    std::vector<Elem> add_, mul_, neg_;
    Elem zero_ = 0, one_ = 0;
    Family family_ = Family::Table;
    std::string label_;
    std::vector<std::string> names_;
    bool commutative_ = false;
    unsigned characteristic_ = 0;
    std::vector<std::size_t> product_sizes_;
};

using RingPtr = std::shared_ptr<const FiniteRing>;

}  // namespace oredim
