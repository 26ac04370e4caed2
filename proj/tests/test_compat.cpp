#include "doctest.h"
#include "oracles.hpp"
#include "oredim/compat.hpp"

using namespace oredim;
using oredim::testing::jordan_algebra;
using oredim::testing::make_algebra;

namespace {

SkewPtr swap_algebra() {
    FiniteRing f2 = FiniteRing::zmod(2);
    FiniteRing prod = FiniteRing::product(f2, f2);
    std::vector<Elem> img(prod.size());
    for (Elem e = 0; e < prod.size(); ++e) {
        Elem i = e % 2, j = e / 2;
        img[e] = static_cast<Elem>(j + 2 * i);
    }
    return make_algebra(std::move(prod), RingMap(std::move(img)),
                        RingMap(std::vector<Elem>(4, 0)));
}

SkewPtr ut2_algebra() {
    FiniteRing r = FiniteRing::upper_triangular2(2);
    Elem c = 2;
    std::vector<Elem> img(r.size());
    for (Elem a = 0; a < r.size(); ++a) img[a] = r.sub(r.mul(c, a), r.mul(a, c));
    return make_algebra(std::move(r), RingMap::identity(r.size()), RingMap(std::move(img)));
}

}  // namespace

TEST_CASE("sigma-compatibility") {
    SUBCASE("identity sigma is always compatible") {
        auto A = jordan_algebra();
        auto m = FiniteModule::regular(A->ring_ptr());
        CHECK(is_sigma_compatible(m, A->sigma()));
    }
    SUBCASE("frobenius on the GF(4) regular module") {
        FiniteRing r = FiniteRing::galois_field(2, 2);
        std::vector<Elem> img(r.size());
        for (Elem a = 0; a < r.size(); ++a) img[a] = r.mul(a, a);
        auto A = make_algebra(std::move(r), RingMap(img), RingMap(std::vector<Elem>(4, 0)));
        auto m = FiniteModule::regular(A->ring_ptr());
        CHECK(is_sigma_compatible(m, A->sigma()));
    }
    SUBCASE("the swap automorphism is not compatible, with a re-checking witness") {
        auto A = swap_algebra();
        auto m = FiniteModule::regular(A->ring_ptr());
        CompatWitness w;
        REQUIRE(!is_sigma_compatible(m, A->sigma(), &w));
        // exactly one of m*r and m*sigma(r) vanishes at the witness pair
        CHECK((m.act(w.m, w.r) == m.zero()) != (m.act(w.m, A->sigma()(w.r)) == m.zero()));
        auto lat = SubmoduleLattice::enumerate(carrier_of(m));
        CHECK(revalidate_witness(m, A->sigma(), true, lat, w));
    }
}

TEST_CASE("delta-compatibility") {
    SUBCASE("zero delta is compatible") {
        auto A = swap_algebra();
        auto m = FiniteModule::regular(A->ring_ptr());
        CHECK(is_delta_compatible(m, A->delta()));
    }
    SUBCASE("the quotient R/(t) is delta-compatible for t^2 d/dt") {
        auto A = jordan_algebra();
        auto regular = FiniteModule::regular(A->ring_ptr());
        auto m = FiniteModule::quotient(regular, regular.submodule_closure({2}), "R/(t)");
        CHECK(is_delta_compatible(m, A->delta()));
    }
    SUBCASE("the UT2 regular module fails delta-compatibility") {
        auto A = ut2_algebra();
        auto m = FiniteModule::regular(A->ring_ptr());
        CompatWitness w;
        REQUIRE(!is_delta_compatible(m, A->delta(), &w));
        CHECK(m.act(w.m, w.r) == m.zero());
        CHECK(m.act(w.m, A->delta()(w.r)) != m.zero());
    }
    SUBCASE("the jordan regular module decides exhaustively") {
        auto A = jordan_algebra();
        auto m = FiniteModule::regular(A->ring_ptr());
        CompatWitness w;
        bool flag = is_delta_compatible(m, A->delta(), &w);
        if (!flag) {
            auto lat = SubmoduleLattice::enumerate(carrier_of(m));
            CHECK(revalidate_witness(m, A->delta(), false, lat, w));
        }
    }
}

TEST_CASE("complete compatibility") {
    SUBCASE("simple compatible modules are completely compatible") {
        auto A = jordan_algebra();
        auto regular = FiniteModule::regular(A->ring_ptr());
        auto m = FiniteModule::quotient(regular, regular.submodule_closure({2}), "R/(t)");
        auto lat = SubmoduleLattice::enumerate(carrier_of(m));
        auto rep = compat_report(m, A->sigma(), A->delta(), lat);
        CHECK(rep.completely_compatible());
    }
    SUBCASE("Z/4 over the maximal ideal: K/m is completely compatible") {
        FiniteRing z4 = FiniteRing::zmod(4);
        auto A = make_algebra(std::move(z4), RingMap::identity(4), RingMap(std::vector<Elem>(4, 0)));
        auto regular = FiniteModule::regular(A->ring_ptr());
        auto m = FiniteModule::quotient(regular, {0, 2}, "Z/4 / 2Z/4");
        auto lat = SubmoduleLattice::enumerate(carrier_of(m));
        CHECK(compat_report(m, A->sigma(), A->delta(), lat).completely_compatible());
    }
    SUBCASE("the swap fixture already fails at N = 0") {
        auto A = swap_algebra();
        auto m = FiniteModule::regular(A->ring_ptr());
        auto lat = SubmoduleLattice::enumerate(carrier_of(m));
        auto rep = compat_report(m, A->sigma(), A->delta(), lat);
        CHECK(!rep.sigma_compatible);
        CHECK(!rep.completely_sigma);
        REQUIRE(rep.completely_sigma_witness.has_value());
        CHECK(revalidate_witness(m, A->sigma(), true, lat, *rep.completely_sigma_witness));
    }
}

TEST_CASE("closure propositions for completely compatible modules") {
    auto run = [](const SkewPtr& A, const FiniteModule& m) {
        auto lat = SubmoduleLattice::enumerate(carrier_of(m));
        auto rep = compat_report(m, A->sigma(), A->delta(), lat);
        REQUIRE(rep.completely_compatible());
        auto props = check_compat_propositions(m, *A, lat);
        for (const auto& item : props.items) {
            CAPTURE(item.id);
            CHECK(item.holds);
        }
    };
    SUBCASE("jordan quotient") {
        auto A = jordan_algebra();
        auto regular = FiniteModule::regular(A->ring_ptr());
        run(A, FiniteModule::quotient(regular, regular.submodule_closure({2}), "R/(t)"));
    }
    SUBCASE("zmod4 regular (sigma = id, delta = 0)") {
        FiniteRing z4 = FiniteRing::zmod(4);
        auto A = make_algebra(std::move(z4), RingMap::identity(4), RingMap(std::vector<Elem>(4, 0)));
        run(A, FiniteModule::regular(A->ring_ptr()));
    }
    SUBCASE("GF(4) with frobenius: dual pair check is meaningful") {
        FiniteRing r = FiniteRing::galois_field(2, 2);
        std::vector<Elem> img(r.size());
        for (Elem a = 0; a < r.size(); ++a) img[a] = r.mul(a, a);
        auto A = make_algebra(std::move(r), RingMap(img), RingMap(std::vector<Elem>(4, 0)));
        run(A, FiniteModule::regular(A->ring_ptr()));
    }
}
