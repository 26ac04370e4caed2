#include "oredim/fixture.hpp"

#include <fstream>

namespace oredim {

namespace {

void reject_unknown_keys(const Json& obj, std::initializer_list<const char*> allowed,
                         const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool known = false;
        for (const char* key : allowed)
            if (it.key() == key) known = true;
        if (!known) throw FixtureError(where, "unknown key '" + it.key() + "'");
    }
}

unsigned get_uint(const Json& obj, const char* key, const std::string& where) {
    if (!obj.contains(key)) throw FixtureError(where, std::string("missing key '") + key + "'");
    const Json& v = obj.at(key);
    if (!v.is_number_unsigned()) throw FixtureError(where + "." + key, "expected a nonnegative integer");
    return v.get<unsigned>();
}

std::vector<Elem> get_elem_array(const Json& v, const std::string& where) {
    if (!v.is_array()) throw FixtureError(where, "expected an array");
    std::vector<Elem> out;
    for (const auto& x : v) {
        if (!x.is_number_unsigned()) throw FixtureError(where, "expected nonnegative integers");
        out.push_back(x.get<Elem>());
    }
    return out;
}

ElemLiteral parse_literal(const Json& v, const std::string& where) {
    ElemLiteral lit;
    if (v.is_number_unsigned()) {
        lit.kind = ElemLiteral::Kind::Index;
        lit.index = v.get<Elem>();
        return lit;
    }
    if (v.is_object()) {
        reject_unknown_keys(v, {"coeffs", "matrix"}, where);
        if (v.contains("coeffs")) {
            lit.kind = ElemLiteral::Kind::Coeffs;
            for (const auto& c : v.at("coeffs")) {
                if (!c.is_number_unsigned()) throw FixtureError(where + ".coeffs", "expected digits");
                lit.values.push_back(c.get<unsigned>());
            }
            return lit;
        }
        if (v.contains("matrix")) {
            lit.kind = ElemLiteral::Kind::Matrix;
            for (const auto& c : v.at("matrix")) {
                if (!c.is_number_unsigned()) throw FixtureError(where + ".matrix", "expected digits");
                lit.values.push_back(c.get<unsigned>());
            }
            if (lit.values.size() != 3)
                throw FixtureError(where + ".matrix", "expected [a, b, d] for [[a,b],[0,d]]");
            return lit;
        }
    }
    throw FixtureError(where, "expected an element literal (index, {coeffs}, or {matrix})");
}

RingSpec parse_ring(const Json& v, const std::string& where) {
    if (!v.is_object()) throw FixtureError(where, "expected an object");
    RingSpec spec;
    std::string family = v.value("family", std::string{});
    if (family == "zmod") {
        reject_unknown_keys(v, {"family", "n"}, where);
        spec.family = RingSpec::Family::Zmod;
        spec.n = get_uint(v, "n", where);
    } else if (family == "gf") {
        reject_unknown_keys(v, {"family", "p", "k"}, where);
        spec.family = RingSpec::Family::GaloisField;
        spec.p = get_uint(v, "p", where);
        spec.k = get_uint(v, "k", where);
    } else if (family == "trunc_poly") {
        reject_unknown_keys(v, {"family", "p", "m"}, where);
        spec.family = RingSpec::Family::TruncPoly;
        spec.p = get_uint(v, "p", where);
        spec.m = get_uint(v, "m", where);
    } else if (family == "product") {
        reject_unknown_keys(v, {"family", "factors"}, where);
        spec.family = RingSpec::Family::Product;
        if (!v.contains("factors") || !v.at("factors").is_array() || v.at("factors").size() != 2)
            throw FixtureError(where + ".factors", "expected exactly two factor ring specs");
        for (std::size_t i = 0; i < 2; ++i)
            spec.factors.push_back(
                parse_ring(v.at("factors")[i], where + ".factors[" + std::to_string(i) + "]"));
    } else if (family == "ut2") {
        reject_unknown_keys(v, {"family", "p"}, where);
        spec.family = RingSpec::Family::UpperTriangular2;
        spec.p = get_uint(v, "p", where);
    } else if (family == "table") {
        reject_unknown_keys(v, {"family", "add", "mul", "one"}, where);
        spec.family = RingSpec::Family::Table;
        if (!v.contains("add") || !v.contains("mul"))
            throw FixtureError(where, "table ring requires 'add' and 'mul'");
        for (const auto& row : v.at("add")) {
            auto r = get_elem_array(row, where + ".add");
            spec.add_table.insert(spec.add_table.end(), r.begin(), r.end());
        }
        for (const auto& row : v.at("mul")) {
            auto r = get_elem_array(row, where + ".mul");
            spec.mul_table.insert(spec.mul_table.end(), r.begin(), r.end());
        }
        spec.one = get_uint(v, "one", where);
    } else {
        throw FixtureError(where + ".family",
                           "expected one of zmod, gf, trunc_poly, product, ut2, table");
    }
    return spec;
}

MapSpec parse_map(const Json& v, const std::string& where, bool is_delta) {
    if (!v.is_object()) throw FixtureError(where, "expected an object");
    MapSpec spec;
    std::string kind = v.value("kind", std::string{});
    if (!is_delta && kind == "identity") {
        reject_unknown_keys(v, {"kind"}, where);
        spec.kind = MapSpec::Kind::Identity;
    } else if (!is_delta && kind == "frobenius") {
        reject_unknown_keys(v, {"kind"}, where);
        spec.kind = MapSpec::Kind::Frobenius;
    } else if (!is_delta && kind == "t_scale") {
        reject_unknown_keys(v, {"kind", "unit"}, where);
        spec.kind = MapSpec::Kind::TScale;
        if (!v.contains("unit")) throw FixtureError(where, "t_scale requires 'unit'");
        spec.element = parse_literal(v.at("unit"), where + ".unit");
    } else if (!is_delta && kind == "swap") {
        reject_unknown_keys(v, {"kind"}, where);
        spec.kind = MapSpec::Kind::Swap;
    } else if (is_delta && kind == "zero") {
        reject_unknown_keys(v, {"kind"}, where);
        spec.kind = MapSpec::Kind::Zero;
    } else if (is_delta && kind == "trunc_derivative") {
        reject_unknown_keys(v, {"kind", "a"}, where);
        spec.kind = MapSpec::Kind::TruncDerivative;
        spec.exponent = get_uint(v, "a", where);
    } else if (is_delta && kind == "inner") {
        reject_unknown_keys(v, {"kind", "c"}, where);
        spec.kind = MapSpec::Kind::Inner;
        if (!v.contains("c")) throw FixtureError(where, "inner requires 'c'");
        spec.element = parse_literal(v.at("c"), where + ".c");
    } else if (kind == "table") {
        reject_unknown_keys(v, {"kind", "images"}, where);
        spec.kind = MapSpec::Kind::Table;
        if (!v.contains("images")) throw FixtureError(where, "table map requires 'images'");
        spec.images = get_elem_array(v.at("images"), where + ".images");
    } else {
        throw FixtureError(where + ".kind",
                           is_delta
                               ? "expected one of zero, trunc_derivative, inner, table"
                               : "expected one of identity, frobenius, t_scale, swap, table");
    }
    return spec;
}

ModuleSpec parse_module(const Json& v, const std::string& where) {
    if (!v.is_object()) throw FixtureError(where, "expected an object");
    ModuleSpec spec;
    std::string kind = v.value("kind", std::string{});
    if (kind == "regular") {
        reject_unknown_keys(v, {"kind"}, where);
        spec.kind = ModuleSpec::Kind::Regular;
    } else if (kind == "quotient") {
        reject_unknown_keys(v, {"kind", "generators"}, where);
        spec.kind = ModuleSpec::Kind::Quotient;
        if (!v.contains("generators") || !v.at("generators").is_array())
            throw FixtureError(where, "quotient requires 'generators'");
        std::size_t i = 0;
        for (const auto& g : v.at("generators"))
            spec.generators.push_back(
                parse_literal(g, where + ".generators[" + std::to_string(i++) + "]"));
    } else if (kind == "direct_sum") {
        reject_unknown_keys(v, {"kind", "summands"}, where);
        spec.kind = ModuleSpec::Kind::DirectSum;
        if (!v.contains("summands") || !v.at("summands").is_array() || v.at("summands").size() < 2)
            throw FixtureError(where, "direct_sum requires at least two summands");
        std::size_t i = 0;
        for (const auto& s : v.at("summands"))
            spec.summands.push_back(parse_module(s, where + ".summands[" + std::to_string(i++) + "]"));
    } else if (kind == "table") {
        reject_unknown_keys(v, {"kind", "add", "action"}, where);
        spec.kind = ModuleSpec::Kind::Table;
        if (!v.contains("add") || !v.contains("action"))
            throw FixtureError(where, "table module requires 'add' and 'action'");
        for (const auto& row : v.at("add")) {
            auto r = get_elem_array(row, where + ".add");
            spec.add_table.insert(spec.add_table.end(), r.begin(), r.end());
        }
        for (const auto& row : v.at("action"))
            spec.action_table.push_back(get_elem_array(row, where + ".action"));
    } else {
        throw FixtureError(where + ".kind",
                           "expected one of regular, quotient, direct_sum, table");
    }
    return spec;
}

}  // namespace

FixtureSpec parse_fixture_json(const Json& doc) {
    if (!doc.is_object()) throw FixtureError("$", "fixture must be a JSON object");
    reject_unknown_keys(doc, {"name", "ring", "sigma", "delta", "module", "submodule", "depth"},
                        "$");
    FixtureSpec spec;
    if (!doc.contains("name") || !doc.at("name").is_string())
        throw FixtureError("$.name", "fixture requires a string name");
    spec.name = doc.at("name").get<std::string>();
    if (!doc.contains("ring")) throw FixtureError("$", "missing 'ring'");
    spec.ring = parse_ring(doc.at("ring"), "$.ring");
    if (!doc.contains("sigma")) throw FixtureError("$", "missing 'sigma'");
    spec.sigma = parse_map(doc.at("sigma"), "$.sigma", false);
    if (!doc.contains("delta")) throw FixtureError("$", "missing 'delta'");
    spec.delta = parse_map(doc.at("delta"), "$.delta", true);
    if (!doc.contains("module")) throw FixtureError("$", "missing 'module'");
    spec.module = parse_module(doc.at("module"), "$.module");
    if (doc.contains("submodule")) {
        spec.has_submodule = true;
        spec.submodule_generators = get_elem_array(doc.at("submodule"), "$.submodule");
    }
    if (doc.contains("depth")) {
        if (!doc.at("depth").is_number_unsigned())
            throw FixtureError("$.depth", "expected a nonnegative integer");
        spec.depth = doc.at("depth").get<unsigned>();
    }
    return spec;
}

FixtureSpec parse_fixture(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw FixtureError("$", "cannot open fixture file " + path.string());
    Json doc;
    try {
        doc = Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw FixtureError("$", std::string("JSON parse error: ") + e.what());
    }
    return parse_fixture_json(doc);
}

Elem resolve_element(const ElemLiteral& lit, const FiniteRing& ring, const std::string& where) {
    switch (lit.kind) {
        case ElemLiteral::Kind::Index:
            if (lit.index >= ring.size())
                throw FixtureError(where, "element index " + std::to_string(lit.index) +
                                              " out of range for " + ring.label());
            return lit.index;
        case ElemLiteral::Kind::Coeffs: {
            if (ring.family() != FiniteRing::Family::TruncPoly &&
                ring.family() != FiniteRing::Family::GaloisField)
                throw FixtureError(where, "coefficient literals require a t-encoded ring family");
            unsigned p = ring.characteristic();
            Elem e = 0;
            std::size_t w = 1;
            for (unsigned d : lit.values) {
                if (w >= ring.size() && d % p != 0)
                    throw FixtureError(where, "coefficient tuple exceeds ring degree");
                e += static_cast<Elem>((d % p) * w);
                w *= p;
            }
            if (e >= ring.size()) throw FixtureError(where, "coefficient tuple out of range");
            return e;
        }
        case ElemLiteral::Kind::Matrix: {
            if (ring.family() != FiniteRing::Family::UpperTriangular2)
                throw FixtureError(where, "matrix literals require the ut2 family");
            unsigned p = ring.characteristic();
            return static_cast<Elem>((lit.values[0] % p) + p * (lit.values[1] % p) +
                                     p * p * (lit.values[2] % p));
        }
    }
    throw FixtureError(where, "unresolvable element literal");
}

namespace {

FiniteRing build_ring(const RingSpec& spec, const std::string& where) {
    try {
        switch (spec.family) {
            case RingSpec::Family::Zmod:
                return FiniteRing::zmod(spec.n);
            case RingSpec::Family::GaloisField:
                return FiniteRing::galois_field(spec.p, spec.k);
            case RingSpec::Family::TruncPoly:
                return FiniteRing::trunc_poly(spec.p, spec.m);
            case RingSpec::Family::Product: {
                FiniteRing a = build_ring(spec.factors[0], where + ".factors[0]");
                FiniteRing b = build_ring(spec.factors[1], where + ".factors[1]");
                return FiniteRing::product(a, b);
            }
            case RingSpec::Family::UpperTriangular2:
                return FiniteRing::upper_triangular2(spec.p);
            case RingSpec::Family::Table:
                return FiniteRing::from_tables(spec.add_table, spec.mul_table, spec.one, "");
        }
    } catch (const std::invalid_argument& e) {
        throw FixtureError(where, e.what());
    }
    throw FixtureError(where, "unsupported ring family");
}

Elem ring_pow(const FiniteRing& ring, Elem base, unsigned e) {
    Elem acc = ring.one();
    for (unsigned i = 0; i < e; ++i) acc = ring.mul(acc, base);
    return acc;
}

Elem scalar_mult(const FiniteRing& ring, unsigned c, Elem x) {
    Elem acc = ring.zero();
    for (unsigned i = 0; i < c; ++i) acc = ring.add(acc, x);
    return acc;
}

// Positional digit decomposition for the t-encoded families.
std::vector<unsigned> t_digits(const FiniteRing& ring, Elem e) {
    unsigned p = ring.characteristic();
    std::vector<unsigned> out;
    std::size_t n = ring.size();
    while (n > 1) {
        out.push_back(e % p);
        e /= p;
        n /= p;
    }
    return out;
}

RingMap build_sigma(const MapSpec& spec, const FiniteRing& ring, const std::string& where) {
    switch (spec.kind) {
        case MapSpec::Kind::Identity:
            return RingMap::identity(ring.size());
        case MapSpec::Kind::Frobenius: {
            unsigned p = ring.characteristic();
            if (p == 0) throw FixtureError(where, "frobenius requires prime characteristic");
            std::vector<Elem> img(ring.size());
            for (Elem a = 0; a < ring.size(); ++a) img[a] = ring_pow(ring, a, p);
            return RingMap(std::move(img));
        }
        case MapSpec::Kind::TScale: {
            if (ring.family() != FiniteRing::Family::TruncPoly)
                throw FixtureError(where, "t_scale requires the trunc_poly family");
            Elem b = resolve_element(spec.element, ring, where + ".unit");
            if (!ring.is_unit(b)) throw FixtureError(where + ".unit", "scale factor must be a unit");
            Elem t = static_cast<Elem>(ring.characteristic());  // index of t
            std::vector<Elem> img(ring.size());
            for (Elem a = 0; a < ring.size(); ++a) {
                auto digits = t_digits(ring, a);
                Elem acc = ring.zero();
                for (std::size_t i = 0; i < digits.size(); ++i) {
                    Elem bt = ring.mul(ring_pow(ring, b, static_cast<unsigned>(i)),
                                       ring_pow(ring, t, static_cast<unsigned>(i)));
                    acc = ring.add(acc, scalar_mult(ring, digits[i], bt));
                }
                img[a] = acc;
            }
            return RingMap(std::move(img));
        }
        case MapSpec::Kind::Swap: {
            if (ring.family() != FiniteRing::Family::Product ||
                ring.product_arity()[0] != ring.product_arity()[1])
                throw FixtureError(where, "swap requires a product of two equal factors");
            std::size_t na = ring.product_arity()[0];
            std::vector<Elem> img(ring.size());
            for (Elem e = 0; e < ring.size(); ++e) {
                Elem i = static_cast<Elem>(e % na), j = static_cast<Elem>(e / na);
                img[e] = static_cast<Elem>(j + na * i);
            }
            return RingMap(std::move(img));
        }
        case MapSpec::Kind::Table: {
            if (spec.images.size() != ring.size())
                throw FixtureError(where + ".images", "expected one image per ring element");
            for (Elem v : spec.images)
                if (v >= ring.size()) throw FixtureError(where + ".images", "image out of range");
            return RingMap(spec.images);
        }
        default:
            throw FixtureError(where, "not a sigma kind");
    }
}

RingMap build_delta(const MapSpec& spec, const FiniteRing& ring, const RingMap& sigma,
                    const std::string& where) {
    switch (spec.kind) {
        case MapSpec::Kind::Zero:
            return RingMap::zero_map(ring);
        case MapSpec::Kind::TruncDerivative: {
            if (ring.family() != FiniteRing::Family::TruncPoly)
                throw FixtureError(where, "trunc_derivative requires the trunc_poly family");
            unsigned p = ring.characteristic();
            Elem t = static_cast<Elem>(p);
            std::vector<Elem> img(ring.size());
            for (Elem e = 0; e < ring.size(); ++e) {
                auto digits = t_digits(ring, e);
                // delta(sum c_i t^i) = sum i*c_i t^{a+i-1}, truncated
                Elem acc = ring.zero();
                for (std::size_t i = 1; i < digits.size(); ++i) {
                    unsigned coeff = (digits[i] * i) % p;
                    if (coeff == 0) continue;
                    unsigned deg = spec.exponent + static_cast<unsigned>(i) - 1;
                    if (deg >= digits.size()) continue;  // t^deg = 0 in the truncation
                    acc = ring.add(acc, scalar_mult(ring, coeff, ring_pow(ring, t, deg)));
                }
                img[e] = acc;
            }
            return RingMap(std::move(img));
        }
        case MapSpec::Kind::Inner: {
            Elem c = resolve_element(spec.element, ring, where + ".c");
            std::vector<Elem> img(ring.size());
            for (Elem r = 0; r < ring.size(); ++r)
                img[r] = ring.sub(ring.mul(c, r), ring.mul(sigma(r), c));
            return RingMap(std::move(img));
        }
        case MapSpec::Kind::Table: {
            if (spec.images.size() != ring.size())
                throw FixtureError(where + ".images", "expected one image per ring element");
            for (Elem v : spec.images)
                if (v >= ring.size()) throw FixtureError(where + ".images", "image out of range");
            return RingMap(spec.images);
        }
        default:
            throw FixtureError(where, "not a delta kind");
    }
}

FiniteModule build_module(const ModuleSpec& spec, const RingPtr& ring, const std::string& where) {
    switch (spec.kind) {
        case ModuleSpec::Kind::Regular:
            return FiniteModule::regular(ring);
        case ModuleSpec::Kind::Quotient: {
            auto regular = FiniteModule::regular(ring);
            std::vector<Elem> gens;
            std::string gen_names;
            for (std::size_t i = 0; i < spec.generators.size(); ++i) {
                Elem g = resolve_element(spec.generators[i], *ring,
                                         where + ".generators[" + std::to_string(i) + "]");
                gens.push_back(g);
                if (i) gen_names += ",";
                gen_names += ring->element_name(g);
            }
            auto ideal = regular.submodule_closure(gens);
            return FiniteModule::quotient(regular, ideal, ring->label() + "/(" + gen_names + ")");
        }
        case ModuleSpec::Kind::DirectSum: {
            FiniteModule acc = build_module(spec.summands[0], ring, where + ".summands[0]");
            for (std::size_t i = 1; i < spec.summands.size(); ++i)
                acc = FiniteModule::direct_sum(
                    acc, build_module(spec.summands[i], ring, where + ".summands[" +
                                                                  std::to_string(i) + "]"));
            return acc;
        }
        case ModuleSpec::Kind::Table:
            try {
                return FiniteModule::from_tables(ring, spec.add_table, spec.action_table,
                                                 "table module");
            } catch (const std::invalid_argument& e) {
                throw FixtureError(where, e.what());
            }
    }
    throw FixtureError(where, "unsupported module kind");
}

}  // namespace

Fixture build_fixture(const FixtureSpec& spec, unsigned op_depth_floor) {
    Fixture fx;
    fx.spec = spec;
    fx.depth = spec.depth;

    auto ring = std::make_shared<const FiniteRing>(build_ring(spec.ring, "$.ring"));
    auto ring_laws = ring->verify_laws();
    if (!ring_laws.ok) throw FixtureError("$.ring", "ring laws fail", ring_laws.violations);
    fx.ring = ring;

    RingMap sigma = build_sigma(spec.sigma, *ring, "$.sigma");
    auto endo = verify_endomorphism(*ring, sigma);
    if (!endo.valid()) throw FixtureError("$.sigma", "sigma is not an endomorphism", endo.violations);
    if (!endo.bijective)
        throw FixtureError("$.sigma", "sigma must be an automorphism (map is not bijective)");

    RingMap delta = build_delta(spec.delta, *ring, sigma, "$.delta");
    auto der = verify_sigma_derivation(*ring, sigma, delta);
    if (!der.valid())
        throw FixtureError("$.delta", "delta is not a sigma-derivation", der.violations);
    auto nil = nilpotency_table(*ring, delta);
    if (!nil.locally_nilpotent)
        throw FixtureError("$.delta", "delta is not locally nilpotent",
                           {"orbit of " + ring->element_name(*nil.divergent_at) +
                            " never reaches zero"});

    unsigned op_depth = std::max({8u, op_depth_floor, spec.depth + 4u});
    fx.algebra = std::make_shared<const SkewOreRing>(ring, sigma, delta, op_depth);

    auto module = build_module(spec.module, ring, "$.module");
    auto module_laws = module.verify_laws();
    if (!module_laws.ok)
        throw FixtureError("$.module", "module axioms fail", module_laws.violations);
    fx.module = std::make_shared<const FiniteModule>(std::move(module));

    if (spec.has_submodule) {
        for (Elem g : spec.submodule_generators)
            if (g >= fx.module->size())
                throw FixtureError("$.submodule", "generator index out of range");
        fx.submodule = fx.module->submodule_closure(spec.submodule_generators);
    }
    return fx;
}

Fixture load_fixture(const std::filesystem::path& path, unsigned op_depth_floor) {
    return build_fixture(parse_fixture(path), op_depth_floor);
}

// ---------------------------------------------------------------- echo ---

namespace {

Json literal_to_json(const ElemLiteral& lit) {
    switch (lit.kind) {
        case ElemLiteral::Kind::Index:
            return lit.index;
        case ElemLiteral::Kind::Coeffs:
            return Json{{"coeffs", lit.values}};
        case ElemLiteral::Kind::Matrix:
            return Json{{"matrix", lit.values}};
    }
    return nullptr;
}

Json ring_to_json(const RingSpec& spec) {
    Json j;
    switch (spec.family) {
        case RingSpec::Family::Zmod:
            j["family"] = "zmod";
            j["n"] = spec.n;
            break;
        case RingSpec::Family::GaloisField:
            j["family"] = "gf";
            j["p"] = spec.p;
            j["k"] = spec.k;
            break;
        case RingSpec::Family::TruncPoly:
            j["family"] = "trunc_poly";
            j["p"] = spec.p;
            j["m"] = spec.m;
            break;
        case RingSpec::Family::Product: {
            j["family"] = "product";
            Json factors = Json::array();
            for (const auto& f : spec.factors) factors.push_back(ring_to_json(f));
            j["factors"] = factors;
            break;
        }
        case RingSpec::Family::UpperTriangular2:
            j["family"] = "ut2";
            j["p"] = spec.p;
            break;
        case RingSpec::Family::Table: {
            j["family"] = "table";
            std::size_t n = 0;
            while (n * n < spec.add_table.size()) ++n;
            Json add = Json::array(), mul = Json::array();
            for (std::size_t i = 0; i < n; ++i) {
                Json ra = Json::array(), rm = Json::array();
                for (std::size_t k = 0; k < n; ++k) {
                    ra.push_back(spec.add_table[i * n + k]);
                    rm.push_back(spec.mul_table[i * n + k]);
                }
                add.push_back(ra);
                mul.push_back(rm);
            }
            j["add"] = add;
            j["mul"] = mul;
            j["one"] = spec.one;
            break;
        }
    }
    return j;
}

Json map_to_json(const MapSpec& spec) {
    Json j;
    switch (spec.kind) {
        case MapSpec::Kind::Identity: j["kind"] = "identity"; break;
        case MapSpec::Kind::Frobenius: j["kind"] = "frobenius"; break;
        case MapSpec::Kind::TScale:
            j["kind"] = "t_scale";
            j["unit"] = literal_to_json(spec.element);
            break;
        case MapSpec::Kind::Swap: j["kind"] = "swap"; break;
        case MapSpec::Kind::Zero: j["kind"] = "zero"; break;
        case MapSpec::Kind::TruncDerivative:
            j["kind"] = "trunc_derivative";
            j["a"] = spec.exponent;
            break;
        case MapSpec::Kind::Inner:
            j["kind"] = "inner";
            j["c"] = literal_to_json(spec.element);
            break;
        case MapSpec::Kind::Table:
            j["kind"] = "table";
            j["images"] = spec.images;
            break;
    }
    return j;
}

Json module_to_json(const ModuleSpec& spec) {
    Json j;
    switch (spec.kind) {
        case ModuleSpec::Kind::Regular: j["kind"] = "regular"; break;
        case ModuleSpec::Kind::Quotient: {
            j["kind"] = "quotient";
            Json gens = Json::array();
            for (const auto& g : spec.generators) gens.push_back(literal_to_json(g));
            j["generators"] = gens;
            break;
        }
        case ModuleSpec::Kind::DirectSum: {
            j["kind"] = "direct_sum";
            Json sums = Json::array();
            for (const auto& s : spec.summands) sums.push_back(module_to_json(s));
            j["summands"] = sums;
            break;
        }
        case ModuleSpec::Kind::Table: {
            j["kind"] = "table";
            std::size_t n = 0;
            while (n * n < spec.add_table.size()) ++n;
            Json add = Json::array();
            for (std::size_t i = 0; i < n; ++i) {
                Json row = Json::array();
                for (std::size_t k = 0; k < n; ++k) row.push_back(spec.add_table[i * n + k]);
                add.push_back(row);
            }
            j["add"] = add;
            Json action = Json::array();
            for (const auto& row : spec.action_table) action.push_back(row);
            j["action"] = action;
            break;
        }
    }
    return j;
}

}  // namespace

Json spec_to_json(const FixtureSpec& spec) {
    Json j;
    j["name"] = spec.name;
    j["ring"] = ring_to_json(spec.ring);
    j["sigma"] = map_to_json(spec.sigma);
    j["delta"] = map_to_json(spec.delta);
    j["module"] = module_to_json(spec.module);
    if (spec.has_submodule) j["submodule"] = spec.submodule_generators;
    j["depth"] = spec.depth;
    return j;
}

// ------------------------------------------------------- bundled corpus ---

const std::vector<BundledFixture>& bundled_corpus() {
    static const std::vector<BundledFixture> corpus = {
        {"zmod4", R"json({
  "name": "zmod4",
  "ring": {"family": "zmod", "n": 4},
  "sigma": {"kind": "identity"},
  "delta": {"kind": "zero"},
  "module": {"kind": "regular"},
  "depth": 2
})json"},
        {"gf4-frob", R"json({
  "name": "gf4-frob",
  "ring": {"family": "gf", "p": 2, "k": 2},
  "sigma": {"kind": "frobenius"},
  "delta": {"kind": "zero"},
  "module": {"kind": "regular"},
  "depth": 2
})json"},
        {"qplane3", R"json({
  "name": "qplane3",
  "ring": {"family": "trunc_poly", "p": 3, "m": 3},
  "sigma": {"kind": "t_scale", "unit": {"coeffs": [2]}},
  "delta": {"kind": "zero"},
  "module": {"kind": "quotient", "generators": [{"coeffs": [0, 1]}]},
  "depth": 2
})json"},
        {"jordan4", R"json({
  "name": "jordan4",
  "ring": {"family": "trunc_poly", "p": 2, "m": 4},
  "sigma": {"kind": "identity"},
  "delta": {"kind": "trunc_derivative", "a": 2},
  "module": {"kind": "quotient", "generators": [{"coeffs": [0, 1]}]},
  "depth": 2
})json"},
        {"f2sq", R"json({
  "name": "f2sq",
  "ring": {"family": "zmod", "n": 2},
  "sigma": {"kind": "identity"},
  "delta": {"kind": "zero"},
  "module": {"kind": "direct_sum", "summands": [{"kind": "regular"}, {"kind": "regular"}]},
  "depth": 2
})json"},
        {"swap", R"json({
  "name": "swap",
  "ring": {"family": "product", "factors": [{"family": "zmod", "n": 2}, {"family": "zmod", "n": 2}]},
  "sigma": {"kind": "swap"},
  "delta": {"kind": "zero"},
  "module": {"kind": "regular"},
  "depth": 2
})json"},
        {"ut2", R"json({
  "name": "ut2",
  "ring": {"family": "ut2", "p": 2},
  "sigma": {"kind": "identity"},
  "delta": {"kind": "inner", "c": {"matrix": [0, 1, 0]}},
  "module": {"kind": "regular"},
  "depth": 2
})json"},
    };
    return corpus;
}

}  // namespace oredim
