#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "oredim/module.hpp"

namespace oredim {

using Json = nlohmann::ordered_json;

/// Parse or validation failure. `location` is a JSON-pointer-ish path into
/// the offending document; `witnesses` carries concrete law counterexamples
/// when a verification rejected the fixture.
class FixtureError : public std::runtime_error {
public:
    FixtureError(std::string location, std::string message,
                 std::vector<std::string> witnesses = {})
        : std::runtime_error(location + ": " + message), location_(std::move(location)),
          witnesses_(std::move(witnesses)) {}
    const std::string& location() const { return location_; }
    const std::vector<std::string>& witnesses() const { return witnesses_; }

private:
    std::string location_;
    std::vector<std::string> witnesses_;
};

/// Ring element literal: a canonical index, a coefficient tuple (families
/// with a positional t-encoding), or an [a, b, d] upper-triangular matrix.
struct ElemLiteral {
    enum class Kind { Index, Coeffs, Matrix };
    Kind kind = Kind::Index;
    Elem index = 0;
    std::vector<unsigned> values;
};

struct RingSpec {
    enum class Family { Zmod, GaloisField, TruncPoly, Product, UpperTriangular2, Table };
    Family family = Family::Zmod;
    unsigned n = 0, p = 0, k = 0, m = 0;
    std::vector<RingSpec> factors;
    std::vector<Elem> add_table, mul_table;
    Elem one = 0;
};

struct MapSpec {
    enum class Kind { Identity, Frobenius, TScale, Swap, Zero, TruncDerivative, Inner, Table };
    Kind kind = Kind::Identity;
    ElemLiteral element;  // t_scale unit, or inner element c
    unsigned exponent = 0;  // trunc_derivative: delta = t^a d/dt
    std::vector<Elem> images;
};

struct ModuleSpec {
    enum class Kind { Regular, Quotient, DirectSum, Table };
    Kind kind = Kind::Regular;
    std::vector<ElemLiteral> generators;  // quotient: right-ideal generators
    std::vector<ModuleSpec> summands;
    std::vector<Elem> add_table;
    std::vector<std::vector<Elem>> action_table;
};

struct FixtureSpec {
    std::string name;
    RingSpec ring;
    MapSpec sigma, delta;
    ModuleSpec module;
    std::vector<Elem> submodule_generators;  // module element indices; optional
    bool has_submodule = false;
    unsigned depth = 2;
};

FixtureSpec parse_fixture_json(const Json& doc);
FixtureSpec parse_fixture(const std::filesystem::path& path);
/// Canonical re-serialization, used for the fixture echo in reports.
Json spec_to_json(const FixtureSpec& spec);

/// A fully built and verified fixture. Construction refuses any description
/// whose ring, maps or module fail their exhaustive law checks.
struct Fixture {
    FixtureSpec spec;
    RingPtr ring;
    SkewPtr algebra;
    ModulePtr module;
    std::optional<std::vector<Elem>> submodule;  // closure of the generators
    unsigned depth = 2;
};

/// `op_depth_floor` raises the precomputed operator-family depth J when a
/// caller plans truncations deeper than the fixture's own depth field.
Fixture build_fixture(const FixtureSpec& spec, unsigned op_depth_floor = 8);
Fixture load_fixture(const std::filesystem::path& path, unsigned op_depth_floor = 8);

Elem resolve_element(const ElemLiteral& lit, const FiniteRing& ring, const std::string& where);

/// The bundled corpus, embedded so the binary is self-contained.
struct BundledFixture {
    const char* name;
    const char* json_text;
};
const std::vector<BundledFixture>& bundled_corpus();

}  // namespace oredim
