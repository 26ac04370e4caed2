#include "oredim/ring.hpp"

#include <sstream>
#include <stdexcept>

namespace oredim {

namespace {

// --- small polynomial helpers over F_p, used only while building families ---

using Poly = std::vector<unsigned>;  // coefficient of t^i at position i

Poly poly_trim(Poly f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

Poly poly_mul(const Poly& f, const Poly& g, unsigned p) {
    if (f.empty() || g.empty()) return {};
    Poly h(f.size() + g.size() - 1, 0);
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j) h[i + j] = (h[i + j] + f[i] * g[j]) % p;
    return poly_trim(std::move(h));
}

// Remainder of f by monic g.
Poly poly_mod(Poly f, const Poly& g, unsigned p) {
    f = poly_trim(std::move(f));
    while (f.size() >= g.size() && !f.empty()) {
        unsigned lead = f.back();
        std::size_t shift = f.size() - g.size();
        for (std::size_t i = 0; i < g.size(); ++i) {
            unsigned sub = (lead * g[i]) % p;
            f[i + shift] = (f[i + shift] + p - sub % p) % p;
        }
        f = poly_trim(std::move(f));
    }
    return f;
}

bool poly_is_zero(const Poly& f) { return poly_trim(f).empty(); }

// Monic poly of degree deg with coefficient tuple decoded from idx (c_0 least significant).
Poly monic_from_index(unsigned long idx, unsigned deg, unsigned p) {
    Poly f(deg + 1, 0);
    for (unsigned i = 0; i < deg; ++i) {
        f[i] = static_cast<unsigned>(idx % p);
        idx /= p;
    }
    f[deg] = 1;
    return f;
}

bool is_irreducible(const Poly& f, unsigned p) {
    unsigned deg = static_cast<unsigned>(f.size() - 1);
    for (unsigned d = 1; 2 * d <= deg; ++d) {
        unsigned long count = 1;
        for (unsigned i = 0; i < d; ++i) count *= p;
        for (unsigned long idx = 0; idx < count; ++idx) {
            Poly g = monic_from_index(idx, d, p);
            if (poly_is_zero(poly_mod(f, g, p))) return false;
        }
    }
    return true;
}

std::string poly_name(const std::vector<unsigned>& coeffs) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0) continue;
        if (!first) os << "+";
        if (i == 0) {
            os << coeffs[i];
        } else {
            if (coeffs[i] != 1) os << coeffs[i];
            os << "t";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

bool is_prime(unsigned p) {
    if (p < 2) return false;
    for (unsigned d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

void FiniteRing::finish_construction() {
    require(n_ > 0 && add_.size() == n_ * n_ && mul_.size() == n_ * n_, "malformed ring tables");
    for (Elem v : add_) require(v < n_, "addition table entry out of range");
    for (Elem v : mul_) require(v < n_, "multiplication table entry out of range");
    require(one_ < n_, "identity index out of range");

    bool found_zero = false;
    for (Elem z = 0; z < n_ && !found_zero; ++z) {
        bool ok = true;
        for (Elem a = 0; a < n_ && ok; ++a) ok = add(z, a) == a && add(a, z) == a;
        if (ok) {
            zero_ = z;
            found_zero = true;
        }
    }
    require(found_zero, "addition table has no identity element");

    // Best-effort inverse table; verify_laws reports missing inverses.
    neg_.assign(n_, zero_);
    for (Elem a = 0; a < n_; ++a)
        for (Elem b = 0; b < n_; ++b)
            if (add(a, b) == zero_) {
                neg_[a] = b;
                break;
            }

    commutative_ = true;
    for (Elem a = 0; a < n_ && commutative_; ++a)
        for (Elem b = 0; b < n_ && commutative_; ++b)
            if (mul(a, b) != mul(b, a)) commutative_ = false;

    characteristic_ = 1;
    Elem acc = one_;
    while (acc != zero_ && characteristic_ <= n_) {
        acc = add(acc, one_);
        ++characteristic_;
    }
    if (acc != zero_) characteristic_ = 0;  // degenerate table; rejected by verify_laws

    if (names_.empty()) {
        names_.reserve(n_);
        for (Elem a = 0; a < n_; ++a) names_.push_back("e" + std::to_string(a));
    }
}

FiniteRing FiniteRing::zmod(unsigned n) {
    require(n >= 1, "Z/n requires n >= 1");
    FiniteRing r;
    r.n_ = n;
    r.family_ = Family::Zmod;
    r.label_ = "Z/" + std::to_string(n);
    r.add_.resize(n * n);
    r.mul_.resize(n * n);
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b) {
            r.add_[a * n + b] = (a + b) % n;
            r.mul_[a * n + b] = (a * b) % n;
        }
    r.one_ = n == 1 ? 0 : 1;
    r.names_.reserve(n);
    for (Elem a = 0; a < n; ++a) r.names_.push_back(std::to_string(a));
    r.finish_construction();
    return r;
}

FiniteRing FiniteRing::trunc_poly(unsigned p, unsigned m) {
    require(is_prime(p), "F_p[t]/(t^m) requires prime p");
    require(m >= 1, "F_p[t]/(t^m) requires m >= 1");
    unsigned long n = 1;
    for (unsigned i = 0; i < m; ++i) n *= p;
    require(n <= 4096, "truncated polynomial ring too large");

    auto decode = [&](Elem e) {
        std::vector<unsigned> c(m, 0);
        for (unsigned i = 0; i < m; ++i) {
            c[i] = static_cast<unsigned>(e % p);
            e /= p;
        }
        return c;
    };
    auto encode = [&](const std::vector<unsigned>& c) {
        Elem e = 0;
        unsigned long w = 1;
        for (unsigned i = 0; i < m; ++i) {
            e += static_cast<Elem>((c[i] % p) * w);
            w *= p;
        }
        return e;
    };

    FiniteRing r;
    r.n_ = n;
    r.family_ = Family::TruncPoly;
    r.label_ = "F_" + std::to_string(p) + "[t]/(t^" + std::to_string(m) + ")";
    r.add_.resize(n * n);
    r.mul_.resize(n * n);
    for (Elem a = 0; a < n; ++a) {
        auto ca = decode(a);
        r.names_.push_back(poly_name(ca));
        for (Elem b = 0; b < n; ++b) {
            auto cb = decode(b);
            std::vector<unsigned> sum(m, 0), prod(m, 0);
            for (unsigned i = 0; i < m; ++i) sum[i] = (ca[i] + cb[i]) % p;
            for (unsigned i = 0; i < m; ++i)
                for (unsigned j = 0; i + j < m; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p;
            r.add_[a * n + b] = encode(sum);
            r.mul_[a * n + b] = encode(prod);
        }
    }
    std::vector<unsigned> one_coeffs(m, 0);
    one_coeffs[0] = 1;
    r.one_ = encode(one_coeffs);
    r.finish_construction();
    return r;
}

FiniteRing FiniteRing::galois_field(unsigned p, unsigned k) {
    require(is_prime(p), "GF(p^k) requires prime p");
    require(k >= 1, "GF(p^k) requires k >= 1");
    unsigned long n = 1;
    for (unsigned i = 0; i < k; ++i) n *= p;
    require(n <= 4096, "field too large");

    Poly irr;
    if (k == 1) {
        irr = {0, 1};  // unused; arithmetic is plain mod p
    } else {
        unsigned long count = n;  // p^k coefficient tuples
        for (unsigned long idx = 0; idx < count; ++idx) {
            Poly cand = monic_from_index(idx, k, p);
            if (is_irreducible(cand, p)) {
                irr = cand;
                break;
            }
        }
        require(!irr.empty(), "no irreducible polynomial found");
    }

    auto decode = [&](Elem e) {
        Poly c(k, 0);
        for (unsigned i = 0; i < k; ++i) {
            c[i] = static_cast<unsigned>(e % p);
            e /= p;
        }
        return c;
    };
    auto encode = [&](const Poly& c) {
        Elem e = 0;
        unsigned long w = 1;
        for (unsigned i = 0; i < k; ++i) {
            e += static_cast<Elem>(((i < c.size() ? c[i] : 0) % p) * w);
            w *= p;
        }
        return e;
    };

    FiniteRing r;
    r.n_ = n;
    r.family_ = Family::GaloisField;
    r.label_ = "GF(" + std::to_string(n) + ")";
    r.add_.resize(n * n);
    r.mul_.resize(n * n);
    for (Elem a = 0; a < n; ++a) {
        auto ca = decode(a);
        r.names_.push_back(poly_name(ca));
        for (Elem b = 0; b < n; ++b) {
            auto cb = decode(b);
            Poly sum(k, 0);
            for (unsigned i = 0; i < k; ++i) sum[i] = (ca[i] + cb[i]) % p;
            r.add_[a * n + b] = encode(sum);
            Poly prod = poly_mul(poly_trim(ca), poly_trim(cb), p);
            if (k > 1) prod = poly_mod(std::move(prod), irr, p);
            else if (!prod.empty()) prod = {prod[0]};
            r.mul_[a * n + b] = encode(prod);
        }
    }
    r.one_ = encode({1});
    r.finish_construction();
    return r;
}

FiniteRing FiniteRing::product(const FiniteRing& a, const FiniteRing& b) {
    std::size_t na = a.size(), nb = b.size(), n = na * nb;
    require(n <= 4096, "product ring too large");
    FiniteRing r;
    r.n_ = n;
    r.family_ = Family::Product;
    r.label_ = a.label() + " x " + b.label();
    r.product_sizes_ = {na, nb};
    r.add_.resize(n * n);
    r.mul_.resize(n * n);
    auto pack = [&](Elem i, Elem j) { return static_cast<Elem>(i + na * j); };
    for (Elem e = 0; e < n; ++e) {
        Elem i = static_cast<Elem>(e % na), j = static_cast<Elem>(e / na);
        r.names_.push_back("(" + a.element_name(i) + "," + b.element_name(j) + ")");
    }
    for (Elem x = 0; x < n; ++x) {
        Elem xi = static_cast<Elem>(x % na), xj = static_cast<Elem>(x / na);
        for (Elem y = 0; y < n; ++y) {
            Elem yi = static_cast<Elem>(y % na), yj = static_cast<Elem>(y / na);
            r.add_[x * n + y] = pack(a.add(xi, yi), b.add(xj, yj));
            r.mul_[x * n + y] = pack(a.mul(xi, yi), b.mul(xj, yj));
        }
    }
    r.one_ = pack(a.one(), b.one());
    r.finish_construction();
    return r;
}

FiniteRing FiniteRing::upper_triangular2(unsigned p) {
    require(is_prime(p), "UT2(F_p) requires prime p");
    unsigned long n = static_cast<unsigned long>(p) * p * p;
    require(n <= 4096, "matrix ring too large");
    // index = a + p*b + p^2*d for [[a,b],[0,d]]
    auto decode = [&](Elem e, unsigned& a, unsigned& b, unsigned& d) {
        a = e % p;
        b = (e / p) % p;
        d = (e / (p * p)) % p;
    };
    auto encode = [&](unsigned a, unsigned b, unsigned d) {
        return static_cast<Elem>((a % p) + p * (b % p) + p * p * (d % p));
    };
    FiniteRing r;
    r.n_ = n;
    r.family_ = Family::UpperTriangular2;
    r.label_ = "UT2(F_" + std::to_string(p) + ")";
    r.add_.resize(n * n);
    r.mul_.resize(n * n);
    for (Elem x = 0; x < n; ++x) {
        unsigned a, b, d;
        decode(x, a, b, d);
        std::ostringstream nm;
        nm << "[" << a << " " << b << ";0 " << d << "]";
        r.names_.push_back(nm.str());
        for (Elem y = 0; y < n; ++y) {
            unsigned a2, b2, d2;
            decode(y, a2, b2, d2);
            r.add_[x * n + y] = encode(a + a2, b + b2, d + d2);
            r.mul_[x * n + y] = encode(a * a2, a * b2 + b * d2, d * d2);
        }
    }
    r.one_ = encode(1, 0, 1);
    r.finish_construction();
    return r;
}

FiniteRing FiniteRing::from_tables(std::vector<Elem> add, std::vector<Elem> mul, Elem one,
                                   std::string label) {
    FiniteRing r;
    std::size_t n = 0;
    while (n * n < add.size()) ++n;
    require(n * n == add.size() && mul.size() == add.size(), "tables must be square and same size");
    r.n_ = n;
    r.family_ = Family::Table;
    r.label_ = label.empty() ? "table(" + std::to_string(n) + ")" : std::move(label);
    r.add_ = std::move(add);
    r.mul_ = std::move(mul);
    r.one_ = one;
    r.finish_construction();
    return r;
}

bool FiniteRing::is_unit(Elem a) const {
    for (Elem b = 0; b < n_; ++b)
        if (mul(a, b) == one_ && mul(b, a) == one_) return true;
    return false;
}

LawReport FiniteRing::verify_laws() const {
    LawReport rep;
    auto nm = [&](Elem a) { return element_name(a); };

    for (Elem a = 0; a < n_; ++a)
        for (Elem b = 0; b < n_; ++b)
            if (add(a, b) != add(b, a))
                rep.fail("addition not commutative at (" + nm(a) + "," + nm(b) + ")");
    for (Elem a = 0; a < n_; ++a)
        for (Elem b = 0; b < n_; ++b)
            for (Elem c = 0; c < n_; ++c)
                if (add(add(a, b), c) != add(a, add(b, c)))
                    rep.fail("addition not associative at (" + nm(a) + "," + nm(b) + "," + nm(c) + ")");
    for (Elem a = 0; a < n_; ++a) {
        if (add(zero_, a) != a) rep.fail("zero is not an additive identity at " + nm(a));
        if (add(a, neg_[a]) != zero_) rep.fail("no additive inverse for " + nm(a));
    }
    for (Elem a = 0; a < n_; ++a)
        for (Elem b = 0; b < n_; ++b)
            for (Elem c = 0; c < n_; ++c)
                if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                    rep.fail("multiplication not associative at (" + nm(a) + "," + nm(b) + "," +
                             nm(c) + "): (" + nm(a) + "*" + nm(b) + ")*" + nm(c) + " = " +
                             nm(mul(mul(a, b), c)) + " but " + nm(a) + "*(" + nm(b) + "*" + nm(c) +
                             ") = " + nm(mul(a, mul(b, c))));
    for (Elem a = 0; a < n_; ++a)
        for (Elem b = 0; b < n_; ++b)
            for (Elem c = 0; c < n_; ++c) {
                if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c)))
                    rep.fail("left distributivity fails at (" + nm(a) + "," + nm(b) + "," + nm(c) + ")");
                if (mul(add(a, b), c) != add(mul(a, c), mul(b, c)))
                    rep.fail("right distributivity fails at (" + nm(a) + "," + nm(b) + "," + nm(c) + ")");
            }
    for (Elem a = 0; a < n_; ++a) {
        if (mul(one_, a) != a) rep.fail("one is not a left identity at " + nm(a));
        if (mul(a, one_) != a) rep.fail("one is not a right identity at " + nm(a));
    }
    return rep;
}

}  // namespace oredim
