#include "oredim/module.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace oredim {

void FiniteModule::finish(Elem zero) {
    zero_ = zero;
    neg_.assign(n_, zero_);
    for (Elem a = 0; a < n_; ++a)
        for (Elem b = 0; b < n_; ++b)
            if (add(a, b) == zero_) {
                neg_[a] = b;
                break;
            }
    if (names_.empty()) {
        names_.reserve(n_);
        for (Elem a = 0; a < n_; ++a) names_.push_back("m" + std::to_string(a));
    }
}

FiniteModule FiniteModule::regular(RingPtr ring) {
    FiniteModule m;
    m.ring_ = ring;
    m.n_ = ring->size();
    m.add_ = std::vector<Elem>(m.n_ * m.n_);
    for (Elem a = 0; a < m.n_; ++a)
        for (Elem b = 0; b < m.n_; ++b) m.add_[a * m.n_ + b] = ring->add(a, b);
    m.act_.resize(ring->size());
    for (Elem r = 0; r < ring->size(); ++r) {
        m.act_[r].resize(m.n_);
        for (Elem a = 0; a < m.n_; ++a) m.act_[r][a] = ring->mul(a, r);
    }
    m.label_ = ring->label();
    m.names_.reserve(m.n_);
    for (Elem a = 0; a < m.n_; ++a) m.names_.push_back(ring->element_name(a));
    m.finish(ring->zero());
    return m;
}

FiniteModule FiniteModule::quotient(const FiniteModule& m, const std::vector<Elem>& submodule,
                                    std::string label) {
    std::vector<bool> in_n(m.size(), false);
    for (Elem e : submodule) in_n[e] = true;
    if (!in_n[m.zero()]) throw std::invalid_argument("submodule must contain zero");
    for (Elem nu : submodule) {
        for (Elem nu2 : submodule)
            if (!in_n[m.add(nu, nu2)])
                throw std::invalid_argument("quotient by a set that is not a submodule");
        for (Elem r = 0; r < m.ring().size(); ++r)
            if (!in_n[m.act(nu, r)])
                throw std::invalid_argument("quotient by a set that is not a submodule");
    }

    // Coset leader = least element of the coset; cosets indexed by ascending leader.
    std::vector<Elem> leader(m.size());
    for (Elem e = 0; e < m.size(); ++e) {
        Elem best = e;
        for (Elem nu : submodule) best = std::min(best, m.add(e, nu));
        leader[e] = best;
    }
    std::map<Elem, Elem> index_of_leader;
    std::vector<Elem> leaders;
    for (Elem e = 0; e < m.size(); ++e)
        if (leader[e] == e) {
            index_of_leader[e] = static_cast<Elem>(leaders.size());
            leaders.push_back(e);
        }
    auto coset = [&](Elem e) { return index_of_leader.at(leader[e]); };

    FiniteModule q;
    q.ring_ = m.ring_;
    q.n_ = leaders.size();
    q.add_.resize(q.n_ * q.n_);
    for (std::size_t i = 0; i < leaders.size(); ++i)
        for (std::size_t j = 0; j < leaders.size(); ++j)
            q.add_[i * q.n_ + j] = coset(m.add(leaders[i], leaders[j]));
    q.act_.resize(m.ring().size());
    for (Elem r = 0; r < m.ring().size(); ++r) {
        q.act_[r].resize(q.n_);
        for (std::size_t i = 0; i < leaders.size(); ++i) q.act_[r][i] = coset(m.act(leaders[i], r));
    }
    q.label_ = label.empty() ? m.label() + "/N" : std::move(label);
    q.names_.reserve(q.n_);
    for (Elem l : leaders) q.names_.push_back("[" + m.element_name(l) + "]");
    q.finish(coset(m.zero()));
    return q;
}

FiniteModule FiniteModule::direct_sum(const FiniteModule& a, const FiniteModule& b) {
    if (a.ring_ptr().get() != b.ring_ptr().get())
        throw std::invalid_argument("direct sum requires modules over the same ring");
    FiniteModule s;
    s.ring_ = a.ring_;
    std::size_t na = a.size();
    s.n_ = na * b.size();
    s.add_.resize(s.n_ * s.n_);
    auto pack = [&](Elem i, Elem j) { return static_cast<Elem>(i + na * j); };
    for (Elem x = 0; x < s.n_; ++x) {
        Elem xi = static_cast<Elem>(x % na), xj = static_cast<Elem>(x / na);
        for (Elem y = 0; y < s.n_; ++y) {
            Elem yi = static_cast<Elem>(y % na), yj = static_cast<Elem>(y / na);
            s.add_[x * s.n_ + y] = pack(a.add(xi, yi), b.add(xj, yj));
        }
    }
    s.act_.resize(a.ring().size());
    for (Elem r = 0; r < a.ring().size(); ++r) {
        s.act_[r].resize(s.n_);
        for (Elem x = 0; x < s.n_; ++x) {
            Elem xi = static_cast<Elem>(x % na), xj = static_cast<Elem>(x / na);
            s.act_[r][x] = pack(a.act(xi, r), b.act(xj, r));
        }
    }
    s.label_ = a.label() + " (+) " + b.label();
    s.names_.reserve(s.n_);
    for (Elem x = 0; x < s.n_; ++x) {
        Elem xi = static_cast<Elem>(x % na), xj = static_cast<Elem>(x / na);
        s.names_.push_back("(" + a.element_name(xi) + "|" + b.element_name(xj) + ")");
    }
    s.finish(pack(a.zero(), b.zero()));
    return s;
}

FiniteModule FiniteModule::from_tables(RingPtr ring, std::vector<Elem> add,
                                       std::vector<std::vector<Elem>> action, std::string label) {
    FiniteModule m;
    std::size_t n = 0;
    while (n * n < add.size()) ++n;
    if (n * n != add.size()) throw std::invalid_argument("addition table must be square");
    if (action.size() != ring->size()) throw std::invalid_argument("one action row per ring element");
    for (auto& row : action)
        if (row.size() != n) throw std::invalid_argument("action row size mismatch");
    m.ring_ = std::move(ring);
    m.n_ = n;
    m.add_ = std::move(add);
    m.act_ = std::move(action);
    m.label_ = std::move(label);

    Elem zero = 0;
    bool found = false;
    for (Elem z = 0; z < n && !found; ++z) {
        bool ok = true;
        for (Elem a = 0; a < n && ok; ++a) ok = m.add_[z * n + a] == a && m.add_[a * n + z] == a;
        if (ok) {
            zero = z;
            found = true;
        }
    }
    if (!found) throw std::invalid_argument("module addition table has no identity element");
    m.finish(zero);
    return m;
}

LawReport FiniteModule::verify_laws() const {
    LawReport rep;
    const FiniteRing& R = ring();
    auto mn = [&](Elem m) { return element_name(m); };
    auto rn = [&](Elem r) { return R.element_name(r); };

    for (Elem a = 0; a < n_; ++a)
        for (Elem b = 0; b < n_; ++b) {
            if (add(a, b) != add(b, a)) rep.fail("addition not commutative at (" + mn(a) + "," + mn(b) + ")");
            for (Elem c = 0; c < n_; ++c)
                if (add(add(a, b), c) != add(a, add(b, c)))
                    rep.fail("addition not associative at (" + mn(a) + "," + mn(b) + "," + mn(c) + ")");
        }
    for (Elem a = 0; a < n_; ++a)
        if (add(a, neg(a)) != zero_) rep.fail("no additive inverse for " + mn(a));

    for (Elem m = 0; m < n_; ++m) {
        if (act(m, R.one()) != m) rep.fail("m*1 != m at " + mn(m));
        for (Elem r = 0; r < R.size(); ++r) {
            for (Elem s = 0; s < R.size(); ++s)
                if (act(act(m, r), s) != act(m, R.mul(r, s)))
                    rep.fail("(m*r)*s != m*(rs) at (" + mn(m) + "," + rn(r) + "," + rn(s) + ")");
            for (Elem m2 = 0; m2 < n_; ++m2)
                if (act(add(m, m2), r) != add(act(m, r), act(m2, r)))
                    rep.fail("(m+m')*r != m*r + m'*r at (" + mn(m) + "," + mn(m2) + "," + rn(r) + ")");
            for (Elem s = 0; s < R.size(); ++s)
                if (act(m, R.add(r, s)) != add(act(m, r), act(m, s)))
                    rep.fail("m*(r+s) != m*r + m*s at (" + mn(m) + "," + rn(r) + "," + rn(s) + ")");
        }
    }
    return rep;
}

std::vector<Elem> FiniteModule::submodule_closure(const std::vector<Elem>& seeds) const {
    std::vector<bool> in(n_, false);
    in[zero_] = true;
    std::vector<Elem> members{zero_};

    // Extend the subgroup `members` by the generator g: keep adding x + g
    // until stable, which folds in every multiple of g.
    auto absorb = [&](Elem g) {
        bool changed = true;
        while (changed) {
            changed = false;
            std::vector<Elem> snapshot = members;
            for (Elem x : snapshot) {
                Elem v = add(x, g);
                if (!in[v]) {
                    in[v] = true;
                    members.push_back(v);
                    changed = true;
                }
            }
        }
    };

    std::vector<Elem> pending = seeds;
    while (!pending.empty()) {
        Elem e = pending.back();
        pending.pop_back();
        if (!in[e]) {
            std::size_t before = members.size();
            absorb(e);
            for (std::size_t i = before; i < members.size(); ++i) pending.push_back(members[i]);
        }
        for (const auto& row : act_)
            if (!in[row[e]]) pending.push_back(row[e]);
    }
    std::sort(members.begin(), members.end());
    return members;
}

std::vector<Elem> InversePoly::coefficient_set() const {
    std::vector<Elem> s = c_;
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

InverseModule::InverseModule(SkewPtr algebra, ModulePtr module)
    : alg_(std::move(algebra)), mod_(std::move(module)) {
    if (alg_->ring_ptr().get() != mod_->ring_ptr().get())
        throw std::invalid_argument("module and algebra must share the coefficient ring");
}

InversePoly InverseModule::monomial(Elem m, unsigned k) const {
    std::vector<Elem> c(k + 1, mod_->zero());
    c[k] = m;
    return InversePoly(std::move(c), mod_->zero());
}

InversePoly InverseModule::add(const InversePoly& p, const InversePoly& q) const {
    std::vector<Elem> c(std::max(p.coeffs().size(), q.coeffs().size()), mod_->zero());
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = mod_->add(p.coeff(i, mod_->zero()), q.coeff(i, mod_->zero()));
    return InversePoly(std::move(c), mod_->zero());
}

InversePoly InverseModule::act_ring(const InversePoly& p, Elem r) const {
    if (p.is_zero()) return p;
    std::vector<Elem> c(p.coeffs().size(), mod_->zero());
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
        Elem m = p.coeffs()[k];
        if (m == mod_->zero()) continue;
        for (unsigned i = 0; i <= k; ++i) {
            Elem scalar = alg_->f_op(static_cast<unsigned>(k), i, r);
            c[i] = mod_->add(c[i], mod_->act(m, scalar));
        }
    }
    return InversePoly(std::move(c), mod_->zero());
}

InversePoly InverseModule::act_x_power(const InversePoly& p, unsigned j) const {
    if (j == 0) return p;
    if (p.coeffs().size() <= j) return InversePoly();
    std::vector<Elem> c(p.coeffs().size() - j);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = p.coeffs()[i + j];
    return InversePoly(std::move(c), mod_->zero());
}

InversePoly InverseModule::act(const InversePoly& p, const SkewPoly& a) const {
    InversePoly out;
    for (std::size_t j = 0; j < a.coeffs().size(); ++j) {
        Elem rj = a.coeffs()[j];
        if (rj == alg_->ring().zero()) continue;
        out = add(out, act_x_power(act_ring(p, rj), static_cast<unsigned>(j)));
    }
    return out;
}

std::string InverseModule::to_string(const InversePoly& p) const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        if (p.coeffs()[i] == mod_->zero()) continue;
        if (!first) os << " + ";
        const std::string& nm = mod_->element_name(p.coeffs()[i]);
        bool parens = nm.find_first_of("+ ,^") != std::string::npos;
        if (i == 0) os << nm;
        else os << (parens ? "(" + nm + ")" : nm) << "*x^-" << i;
        first = false;
    }
    if (first) os << mod_->element_name(mod_->zero());
    return os.str();
}

TruncatedInverseModule InverseModule::truncate(unsigned d, std::size_t cap) const {
    return TruncatedInverseModule(*this, d, cap);
}

TruncatedInverseModule::TruncatedInverseModule(const InverseModule& parent, unsigned d,
                                               std::size_t cap)
    : alg_(parent.algebra_ptr()), mod_(parent.base_ptr()), d_(d) {
    std::size_t n = 1;
    for (unsigned i = 0; i <= d; ++i) {
        n *= mod_->size();
        if (n > cap)
            throw std::invalid_argument("truncation size " + std::to_string(n) + "+ exceeds cap " +
                                        std::to_string(cap));
    }
    n_ = n;

    add_.resize(n_ * n_);
    neg_.resize(n_);
    const std::size_t base = mod_->size();
    for (Elem a = 0; a < n_; ++a) {
        Elem av = a, nv = 0;
        std::size_t w = 1;
        for (unsigned i = 0; i <= d_; ++i) {
            nv += static_cast<Elem>(mod_->neg(av % base) * w);
            av /= static_cast<Elem>(base);
            w *= base;
        }
        neg_[a] = nv;
        for (Elem b = 0; b < n_; ++b) {
            Elem x = a, y = b, s = 0;
            std::size_t w2 = 1;
            for (unsigned i = 0; i <= d_; ++i) {
                s += static_cast<Elem>(mod_->add(x % base, y % base) * w2);
                x /= static_cast<Elem>(base);
                y /= static_cast<Elem>(base);
                w2 *= base;
            }
            add_[a * n_ + b] = s;
        }
    }

    ract_.resize(alg_->ring().size());
    for (Elem r = 0; r < alg_->ring().size(); ++r) {
        ract_[r].resize(n_);
        for (Elem e = 0; e < n_; ++e) ract_[r][e] = encode(parent.act_ring(decode(e), r));
    }
    xact_.resize(n_);
    for (Elem e = 0; e < n_; ++e) xact_[e] = encode(parent.act_x_power(decode(e), 1));
}

Elem TruncatedInverseModule::encode(const InversePoly& p) const {
    if (p.coeffs().size() > d_ + 1)
        throw std::invalid_argument("inverse polynomial deeper than truncation");
    Elem e = 0;
    std::size_t w = 1;
    for (unsigned i = 0; i <= d_; ++i) {
        e += static_cast<Elem>(p.coeff(i, mod_->zero()) * w);
        w *= mod_->size();
    }
    return e;
}

InversePoly TruncatedInverseModule::decode(Elem e) const {
    std::vector<Elem> c(d_ + 1);
    for (unsigned i = 0; i <= d_; ++i) {
        c[i] = static_cast<Elem>(e % mod_->size());
        e /= static_cast<Elem>(mod_->size());
    }
    return InversePoly(std::move(c), mod_->zero());
}

Elem TruncatedInverseModule::act_poly(Elem e, const SkewPoly& a) const {
    Elem out = 0;
    for (std::size_t j = 0; j < a.coeffs().size(); ++j) {
        Elem rj = a.coeffs()[j];
        if (rj == alg_->ring().zero()) continue;
        Elem t = ract_[rj][e];
        for (std::size_t shifts = 0; shifts < j; ++shifts) t = xact_[t];
        out = add(out, t);
    }
    return out;
}

std::vector<Elem> TruncatedInverseModule::induced_submodule(
    const std::vector<Elem>& n_elements) const {
    std::vector<bool> in_n(mod_->size(), false);
    for (Elem e : n_elements) in_n[e] = true;
    std::vector<Elem> out;
    for (Elem e = 0; e < n_; ++e) {
        Elem v = e;
        bool ok = true;
        for (unsigned i = 0; i <= d_ && ok; ++i) {
            ok = in_n[v % mod_->size()];
            v /= static_cast<Elem>(mod_->size());
        }
        if (ok) out.push_back(e);
    }
    return out;
}

std::vector<Elem> TruncatedInverseModule::section_submodule(const std::vector<bool>& p_members,
                                                            unsigned k) const {
    if (k > d_) throw std::out_of_range("section depth exceeds truncation depth");
    std::vector<Elem> seeds;
    for (Elem m = 0; m < mod_->size(); ++m) {
        std::vector<Elem> c(k + 1, mod_->zero());
        c[k] = m;
        if (p_members[encode(InversePoly(std::move(c), mod_->zero()))]) seeds.push_back(m);
    }
    return mod_->submodule_closure(seeds);
}

std::string TruncatedInverseModule::element_name(Elem e) const {
    std::ostringstream os;
    os << "(";
    for (unsigned i = 0; i <= d_; ++i) {
        if (i) os << ",";
        os << mod_->element_name(static_cast<Elem>(e % mod_->size()));
        e /= static_cast<Elem>(mod_->size());
    }
    os << ")";
    return os.str();
}

}  // namespace oredim
