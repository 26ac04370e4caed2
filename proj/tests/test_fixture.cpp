#include <filesystem>

#include "doctest.h"
#include "oredim/fixture.hpp"

using namespace oredim;

namespace {
std::filesystem::path fixture_dir() { return OREDIM_FIXTURE_DIR; }
}  // namespace

TEST_CASE("every bundled fixture parses and builds") {
    for (const auto& bundled : bundled_corpus()) {
        CAPTURE(bundled.name);
        Fixture fx = build_fixture(parse_fixture_json(Json::parse(bundled.json_text)));
        CHECK(fx.spec.name == bundled.name);
        CHECK(fx.module->verify_laws().ok);
        CHECK(fx.ring->verify_laws().ok);
    }
}

TEST_CASE("fixture files agree with the embedded corpus") {
    for (const auto& bundled : bundled_corpus()) {
        CAPTURE(bundled.name);
        auto from_file = parse_fixture(fixture_dir() / (std::string(bundled.name) + ".json"));
        auto embedded = parse_fixture_json(Json::parse(bundled.json_text));
        CHECK(spec_to_json(from_file) == spec_to_json(embedded));
    }
}

TEST_CASE("bundled fixture structure") {
    SUBCASE("zmod4 is the regular Z/4 module") {
        Fixture fx = load_fixture(fixture_dir() / "zmod4.json");
        CHECK(fx.ring->size() == 4);
        CHECK(fx.module->size() == 4);
        CHECK(fx.depth == 2);
    }
    SUBCASE("jordan4 is R/(t) over F_2[t]/(t^4) with a nonzero derivation") {
        Fixture fx = load_fixture(fixture_dir() / "jordan4.json");
        CHECK(fx.ring->size() == 16);
        CHECK(fx.module->size() == 2);
        bool delta_nonzero = false;
        for (Elem r = 0; r < fx.ring->size(); ++r)
            if (fx.algebra->delta()(r) != fx.ring->zero()) delta_nonzero = true;
        CHECK(delta_nonzero);
        // delta(t) = t^2
        CHECK(fx.algebra->delta()(2) == 4);
    }
    SUBCASE("qplane3 scales t by a unit") {
        Fixture fx = load_fixture(fixture_dir() / "qplane3.json");
        CHECK(fx.ring->size() == 27);
        CHECK(fx.module->size() == 3);
        // sigma(t) = 2t: index of t is 3, index of 2t is 6
        CHECK(fx.algebra->sigma()(3) == 6);
        // sigma is an involution since 2*2 = 1 mod 3
        CHECK(fx.algebra->sigma_prime()(3) == 6);
    }
    SUBCASE("ut2 carries the inner derivation by the strictly upper unit") {
        Fixture fx = load_fixture(fixture_dir() / "ut2.json");
        CHECK(fx.ring->size() == 8);
        // delta(e11) = c e11 + e11 c = e12 (char 2)
        CHECK(fx.algebra->delta()(1) == 2);
        // delta^2 = 0
        for (Elem r = 0; r < fx.ring->size(); ++r)
            CHECK(fx.algebra->delta()(fx.algebra->delta()(r)) == fx.ring->zero());
    }
    SUBCASE("swap exchanges the factors") {
        Fixture fx = load_fixture(fixture_dir() / "swap.json");
        CHECK(fx.algebra->sigma()(1) == 2);
        CHECK(fx.algebra->sigma()(2) == 1);
    }
}

TEST_CASE("corrupted fixtures are rejected with concrete witnesses") {
    SUBCASE("non-associative multiplication table") {
        try {
            load_fixture(fixture_dir() / "corrupt" / "bad-table.json");
            FAIL("expected rejection");
        } catch (const FixtureError& e) {
            CHECK(e.location() == "$.ring");
            bool found = false;
            for (const auto& w : e.witnesses())
                if (w.find("not associative") != std::string::npos) found = true;
            CHECK(found);
        }
    }
    SUBCASE("non-multiplicative sigma") {
        try {
            load_fixture(fixture_dir() / "corrupt" / "bad-sigma.json");
            FAIL("expected rejection");
        } catch (const FixtureError& e) {
            CHECK(e.location() == "$.sigma");
            REQUIRE(!e.witnesses().empty());
            CHECK(e.witnesses().front().find("(t,t)") != std::string::npos);
        }
    }
    SUBCASE("Leibniz-violating delta") {
        try {
            load_fixture(fixture_dir() / "corrupt" / "bad-delta.json");
            FAIL("expected rejection");
        } catch (const FixtureError& e) {
            CHECK(e.location() == "$.delta");
            REQUIRE(!e.witnesses().empty());
            CHECK(e.witnesses().front().find("(1,1)") != std::string::npos);
        }
    }
}

TEST_CASE("validation errors carry locations") {
    SUBCASE("unknown keys are rejected") {
        Json doc = Json::parse(R"({"name": "x", "ring": {"family": "zmod", "n": 4, "extra": 1},
            "sigma": {"kind": "identity"}, "delta": {"kind": "zero"},
            "module": {"kind": "regular"}})");
        CHECK_THROWS_WITH_AS(parse_fixture_json(doc), "$.ring: unknown key 'extra'", FixtureError);
    }
    SUBCASE("unknown top-level key") {
        Json doc = Json::parse(R"({"name": "x", "ring": {"family": "zmod", "n": 4},
            "sigma": {"kind": "identity"}, "delta": {"kind": "zero"},
            "module": {"kind": "regular"}, "bogus": true})");
        CHECK_THROWS_AS(parse_fixture_json(doc), FixtureError);
    }
    SUBCASE("bad family") {
        Json doc = Json::parse(R"({"name": "x", "ring": {"family": "octonions"},
            "sigma": {"kind": "identity"}, "delta": {"kind": "zero"},
            "module": {"kind": "regular"}})");
        try {
            parse_fixture_json(doc);
            FAIL("expected rejection");
        } catch (const FixtureError& e) {
            CHECK(e.location() == "$.ring.family");
        }
    }
    SUBCASE("a sigma that is not bijective is rejected as not an automorphism") {
        Json doc = Json::parse(R"({"name": "x",
            "ring": {"family": "trunc_poly", "p": 2, "m": 2},
            "sigma": {"kind": "table", "images": [0, 1, 0, 1]},
            "delta": {"kind": "zero"}, "module": {"kind": "regular"}})");
        try {
            build_fixture(parse_fixture_json(doc));
            FAIL("expected rejection");
        } catch (const FixtureError& e) {
            CHECK(e.location() == "$.sigma");
            CHECK(std::string(e.what()).find("automorphism") != std::string::npos);
        }
    }
    SUBCASE("a derivation that never vanishes is rejected as not locally nilpotent") {
        Json doc = Json::parse(R"({"name": "x",
            "ring": {"family": "trunc_poly", "p": 2, "m": 2},
            "sigma": {"kind": "identity"},
            "delta": {"kind": "table", "images": [0, 0, 2, 2]},
            "module": {"kind": "regular"}})");
        try {
            build_fixture(parse_fixture_json(doc));
            FAIL("expected rejection");
        } catch (const FixtureError& e) {
            CHECK(e.location() == "$.delta");
            CHECK(std::string(e.what()).find("locally nilpotent") != std::string::npos);
        }
    }
}

TEST_CASE("explicit submodule generators are closed into a submodule") {
    Json doc = Json::parse(R"({"name": "x", "ring": {"family": "zmod", "n": 4},
        "sigma": {"kind": "identity"}, "delta": {"kind": "zero"},
        "module": {"kind": "regular"}, "submodule": [2], "depth": 1})");
    Fixture fx = build_fixture(parse_fixture_json(doc));
    REQUIRE(fx.submodule.has_value());
    CHECK(*fx.submodule == std::vector<Elem>{0, 2});
}

TEST_CASE("builds are deterministic") {
    auto a = build_fixture(parse_fixture_json(Json::parse(bundled_corpus()[3].json_text)));
    auto b = build_fixture(parse_fixture_json(Json::parse(bundled_corpus()[3].json_text)));
    REQUIRE(a.module->size() == b.module->size());
    for (Elem x = 0; x < a.module->size(); ++x)
        for (Elem y = 0; y < a.module->size(); ++y) CHECK(a.module->add(x, y) == b.module->add(x, y));
    CHECK(spec_to_json(a.spec) == spec_to_json(b.spec));
}
