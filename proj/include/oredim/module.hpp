#pragma once

#include <memory>
#include <string>
#include <vector>

#include "oredim/skew.hpp"

namespace oredim {

/// A finite right R-module with dense tables: abelian group structure plus
/// one action map per ring element. Module axioms are checked exhaustively by
/// verify_laws; fixture loading refuses modules that fail them.
class FiniteModule {
public:
    static FiniteModule regular(RingPtr ring);
    /// Quotient by a submodule given as its full (closed) element set.
    static FiniteModule quotient(const FiniteModule& m, const std::vector<Elem>& submodule,
                                 std::string label = "");
    static FiniteModule direct_sum(const FiniteModule& a, const FiniteModule& b);
    static FiniteModule from_tables(RingPtr ring, std::vector<Elem> add,
                                    std::vector<std::vector<Elem>> action, std::string label);

    const FiniteRing& ring() const { return *ring_; }
    RingPtr ring_ptr() const { return ring_; }
    std::size_t size() const { return n_; }
    Elem zero() const { return zero_; }
    Elem add(Elem a, Elem b) const { return add_[a * n_ + b]; }
    Elem neg(Elem a) const { return neg_[a]; }
    Elem act(Elem m, Elem r) const { return act_[r][m]; }

    const std::string& label() const { return label_; }
    const std::string& element_name(Elem m) const { return names_[m]; }
    const std::vector<Elem>& add_table() const { return add_; }
    const std::vector<std::vector<Elem>>& action_tables() const { return act_; }

    LawReport verify_laws() const;

    /// Smallest submodule containing the seeds: closure under addition,
    /// negation and every ring action. Sorted ascending.
    std::vector<Elem> submodule_closure(const std::vector<Elem>& seeds) const;

private:
    FiniteModule() = default;
    void finish(Elem zero);

    RingPtr ring_;
    std::size_t n_ = 0;
    std::vector<Elem> add_, neg_;
    Elem zero_ = 0;
    std::vector<std::vector<Elem>> act_;
    std::string label_;
    std::vector<std::string> names_;
};

using ModulePtr = std::shared_ptr<const FiniteModule>;

/// m_0 + m_1 x^{-1} + ... + m_k x^{-k} with module coefficients; c_[k] is the
/// coefficient of x^{-k}. Normal form trims trailing zeros; for nonzero p the
/// negative degree is -depth(p) and lc(p) the coefficient at the most
/// negative exponent.
class InversePoly {
public:
    InversePoly() = default;
    InversePoly(std::vector<Elem> coeffs, Elem module_zero) : c_(std::move(coeffs)) {
        while (!c_.empty() && c_.back() == module_zero) c_.pop_back();
    }
    bool is_zero() const { return c_.empty(); }
    /// k for nonzero p = ... + m_k x^{-k}; -1 when zero.
    std::ptrdiff_t depth() const { return static_cast<std::ptrdiff_t>(c_.size()) - 1; }
    std::ptrdiff_t negative_degree() const { return -depth(); }
    Elem leading_coeff() const { return c_.back(); }
    /// lc(p) x^{-depth}, the deepest surviving monomial.
    InversePoly leading_term(Elem module_zero) const {
        std::vector<Elem> c(c_.size(), module_zero);
        if (!c_.empty()) c.back() = c_.back();
        return InversePoly(std::move(c), module_zero);
    }
    Elem coeff(std::size_t k, Elem module_zero) const { return k < c_.size() ? c_[k] : module_zero; }
    const std::vector<Elem>& coeffs() const { return c_; }
    /// The set C_m of coefficients, sorted, duplicates removed.
    std::vector<Elem> coefficient_set() const;
    bool operator==(const InversePoly& o) const { return c_ == o.c_; }

private:
    std::vector<Elem> c_;
};

class TruncatedInverseModule;

/// The right A-module M[x^{-1}]: inverse polynomials with coefficients in M,
/// acted on by A = R(x; sigma, delta) via
///
///   m x^{-k} r = sum_{i=0..k} m f_k^i(r) x^{-i}        (ring coefficients)
///   x^{-i} x^j = x^{-i+j} if j <= i, else 0            (powers of x)
///
/// extended additively. That this is a genuine module action, i.e.
/// (p.a).b = p.(a.b), is property-tested rather than assumed.
class InverseModule {
public:
    InverseModule(SkewPtr algebra, ModulePtr module);

    const SkewOreRing& algebra() const { return *alg_; }
    const FiniteModule& base() const { return *mod_; }
    SkewPtr algebra_ptr() const { return alg_; }
    ModulePtr base_ptr() const { return mod_; }

    InversePoly zero() const { return InversePoly(); }
    InversePoly monomial(Elem m, unsigned k) const;
    InversePoly add(const InversePoly& p, const InversePoly& q) const;
    /// Termwise application of the closed form m x^{-k} r = sum m f_k^i(r) x^{-i}.
    InversePoly act_ring(const InversePoly& p, Elem r) const;
    /// Rule x^{-i} x^j = x^{-i+j} (j <= i) or 0.
    InversePoly act_x_power(const InversePoly& p, unsigned j) const;
    /// Action of a = sum r_j x^j: p.a = sum act_x_power(act_ring(p, r_j), j).
    InversePoly act(const InversePoly& p, const SkewPoly& a) const;
    std::string to_string(const InversePoly& p) const;

    /// The finite sub-A-module of inverse polynomials of depth <= d, with
    /// dense action tables. Throws when |M|^{d+1} exceeds the cap.
    TruncatedInverseModule truncate(unsigned d, std::size_t cap = 256) const;

private:
    SkewPtr alg_;
    ModulePtr mod_;
};

/// M[x^{-1}]_{<= d}: element universe = coefficient tuples (m_0,...,m_d)
/// encoded little-endian by depth (index 0 = constant coefficient), so the
/// depth-d truncation sits inside the depth-(d+1) one as an initial segment.
class TruncatedInverseModule {
public:
    TruncatedInverseModule(const InverseModule& parent, unsigned d, std::size_t cap);

    unsigned depth() const { return d_; }
    std::size_t size() const { return n_; }
    Elem zero() const { return 0; }
    const FiniteModule& base() const { return *mod_; }
    const SkewOreRing& algebra() const { return *alg_; }

    Elem encode(const InversePoly& p) const;
    InversePoly decode(Elem e) const;

    Elem add(Elem a, Elem b) const { return add_[a * n_ + b]; }
    Elem neg(Elem a) const { return neg_[a]; }
    Elem act_ring_elem(Elem e, Elem r) const { return ract_[r][e]; }
    Elem act_x(Elem e) const { return xact_[e]; }
    Elem act_poly(Elem e, const SkewPoly& a) const;

    const std::vector<Elem>& add_table() const { return add_; }
    const std::vector<std::vector<Elem>>& ring_action_tables() const { return ract_; }
    const std::vector<Elem>& x_action_table() const { return xact_; }

    /// Element set of the induced submodule N[x^{-1}]_{<= d}: all tuples with
    /// every coefficient in N. N must be a submodule of the base module.
    std::vector<Elem> induced_submodule(const std::vector<Elem>& n_elements) const;

    /// P_k = { m in M | m x^{-k} in P }, returned as the R-submodule of M it
    /// generates. P is an element set over this truncation's universe.
    std::vector<Elem> section_submodule(const std::vector<bool>& p_members, unsigned k) const;

    std::string element_name(Elem e) const;

private:
    SkewPtr alg_;
    ModulePtr mod_;
    unsigned d_;
    std::size_t n_ = 0;
    std::vector<Elem> add_, neg_, xact_;
    std::vector<std::vector<Elem>> ract_;
};

}  // namespace oredim
