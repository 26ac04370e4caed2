#include "doctest.h"
#include "oracles.hpp"

using namespace oredim;
using oredim::testing::jordan_algebra;
using oredim::testing::make_algebra;
using oredim::testing::word_sum;

namespace {

SkewPtr zmod4_algebra() {
    FiniteRing r = FiniteRing::zmod(4);
    return make_algebra(std::move(r), RingMap::identity(4), RingMap(std::vector<Elem>(4, 0)));
}

SkewPtr gf4_algebra() {
    FiniteRing r = FiniteRing::galois_field(2, 2);
    std::vector<Elem> img(r.size());
    for (Elem a = 0; a < r.size(); ++a) img[a] = r.mul(a, a);
    return make_algebra(std::move(r), RingMap(std::move(img)), RingMap(std::vector<Elem>(4, 0)));
}

SkewPtr ut2_algebra() {
    FiniteRing r = FiniteRing::upper_triangular2(2);
    Elem c = 2;  // [[0,1],[0,0]]
    std::vector<Elem> img(r.size());
    for (Elem a = 0; a < r.size(); ++a) img[a] = r.sub(r.mul(c, a), r.mul(a, c));
    return make_algebra(std::move(r), RingMap::identity(r.size()), RingMap(std::move(img)));
}

std::vector<SkewPtr> all_algebras() {
    return {zmod4_algebra(), gf4_algebra(), jordan_algebra(), ut2_algebra()};
}

}  // namespace

TEST_CASE("commute_right") {
    SUBCASE("delta = 0 gives x r = sigma(r) x") {
        auto A = gf4_algebra();
        for (Elem r = 0; r < A->ring().size(); ++r) {
            SkewPoly p = A->commute_right(r);
            if (r == A->ring().zero()) {
                CHECK(p.is_zero());
            } else {
                REQUIRE(p.degree() == 1);
                CHECK(p.coeffs()[1] == A->sigma()(r));
            }
        }
    }
    SUBCASE("x t = t x + t^2 x^2 in the truncated-derivative algebra") {
        auto A = jordan_algebra();
        SkewPoly p = A->commute_right(2 /* t */);
        REQUIRE(p.degree() == 2);
        CHECK(p.coeffs()[0] == 0);
        CHECK(p.coeffs()[1] == 2);  // t
        CHECK(p.coeffs()[2] == 4);  // t^2
    }
    SUBCASE("x * 1 = x") {
        auto A = jordan_algebra();
        CHECK(A->commute_right(A->ring().one()) == A->x());
    }
    SUBCASE("degree equals the nilpotency index") {
        auto A = jordan_algebra();
        for (Elem r = 1; r < A->ring().size(); ++r)
            CHECK(A->commute_right(r).degree() == static_cast<std::ptrdiff_t>(A->nilpotency(r)));
    }
}

TEST_CASE("skew multiplication basics") {
    auto A = jordan_algebra();
    SkewPoly t_x = A->monomial(2, 1);
    SUBCASE("identities") {
        SkewPoly f = A->add(A->constant(3), A->monomial(5, 2));
        CHECK(A->mul(A->one(), f) == f);
        CHECK(A->mul(f, A->one()) == f);
        CHECK(A->mul(A->x(), A->x()) == A->x(2));
    }
    SUBCASE("(t x)(t x) = t^2 x^2 + t^3 x^3") {
        SkewPoly p = A->mul(t_x, t_x);
        REQUIRE(p.degree() == 3);
        CHECK(p.coeffs()[0] == 0);
        CHECK(p.coeffs()[1] == 0);
        CHECK(p.coeffs()[2] == 4);  // t^2
        CHECK(p.coeffs()[3] == 8);  // t^3
    }
}

TEST_CASE("mul is associative and distributive on monomials up to degree 3") {
    for (const auto& A : all_algebras()) {
        CAPTURE(A->ring().label());
        std::vector<SkewPoly> monos;
        for (Elem r = 0; r < A->ring().size(); ++r)
            for (unsigned k = 0; k <= 3; ++k) monos.push_back(A->monomial(r, k));
        for (const auto& f : monos)
            for (const auto& g : monos) {
                SkewPoly fg = A->mul(f, g);
                for (const auto& h : monos) {
                    if (!(A->mul(fg, h) == A->mul(f, A->mul(g, h)))) {
                        FAIL("associativity fails for " << A->to_string(f) << " * "
                                                        << A->to_string(g) << " * "
                                                        << A->to_string(h));
                    }
                }
            }
        for (const auto& f : monos)
            for (const auto& g : monos)
                for (const auto& h : monos) {
                    if (!(A->mul(f, A->add(g, h)) == A->add(A->mul(f, g), A->mul(f, h))) ||
                        !(A->mul(A->add(f, g), h) == A->add(A->mul(f, h), A->mul(g, h))))
                        FAIL("distributivity fails for " << A->to_string(f) << ", "
                                                         << A->to_string(g) << ", "
                                                         << A->to_string(h));
                }
    }
}

TEST_CASE("degree adds over domains when delta = 0") {
    auto A = gf4_algebra();
    for (Elem r = 1; r < A->ring().size(); ++r)
        for (Elem s = 1; s < A->ring().size(); ++s)
            for (unsigned a = 0; a <= 2; ++a)
                for (unsigned b = 0; b <= 2; ++b)
                    CHECK(A->mul(A->monomial(r, a), A->monomial(s, b)).degree() ==
                          static_cast<std::ptrdiff_t>(a + b));
}

TEST_CASE("f_op agrees with word enumeration for j <= 5") {
    for (const auto& A : all_algebras()) {
        CAPTURE(A->ring().label());
        for (unsigned j = 0; j <= 5; ++j)
            for (unsigned i = 0; i <= j; ++i)
                for (Elem r = 0; r < A->ring().size(); ++r)
                    CHECK(A->f_op(j, i, r) == word_sum(*A, j, i, r));
    }
}

TEST_CASE("f_op rejects out-of-range indices") {
    auto A = jordan_algebra();
    CHECK_THROWS_AS(A->f_op(1, 2, 0), std::out_of_range);
    CHECK_THROWS_AS(A->f_op(A->op_depth() + 1, 0, 0), std::out_of_range);
}

TEST_CASE("f_op boundary maps") {
    auto A = jordan_algebra();
    const FiniteRing& R = A->ring();
    for (Elem r = 0; r < R.size(); ++r) {
        CHECK(A->f_op(0, 0, r) == r);
        // f_j^j = sigma'^j, f_j^0 = delta'^j
        Elem sp = r, dp = r;
        for (unsigned j = 1; j <= 5; ++j) {
            sp = A->sigma_prime()(sp);
            dp = A->delta_prime()(dp);
            CHECK(A->f_op(j, j, r) == sp);
            CHECK(A->f_op(j, 0, r) == dp);
        }
        // f_2^1 = sigma' delta' + delta' sigma'
        CHECK(A->f_op(2, 1, r) ==
              R.add(A->sigma_prime()(A->delta_prime()(r)), A->delta_prime()(A->sigma_prime()(r))));
    }
}

TEST_CASE("binomial collapse when sigma and delta commute") {
    for (const auto& A : all_algebras()) {
        REQUIRE(A->sigma_delta_commute());
        const FiniteRing& R = A->ring();
        for (unsigned j = 0; j <= 5; ++j)
            for (unsigned i = 0; i <= j; ++i) {
                // binom(j, i) by the multiplicative formula
                unsigned long binom = 1;
                for (unsigned b = 0; b < i; ++b) binom = binom * (j - b) / (b + 1);
                for (Elem r = 0; r < R.size(); ++r) {
                    Elem v = r;
                    for (unsigned s = 0; s < j - i; ++s) v = A->delta_prime()(v);
                    for (unsigned s = 0; s < i; ++s) v = A->sigma_prime()(v);
                    Elem expected = R.zero();
                    for (unsigned long c = 0; c < binom % (R.characteristic()); ++c)
                        expected = R.add(expected, v);
                    CHECK(A->f_op(j, i, r) == expected);
                }
            }
    }
}

TEST_CASE("f_2^1 vanishes in characteristic 2 with a nonzero delta") {
    auto A = ut2_algebra();
    bool delta_nonzero = false;
    for (Elem r = 0; r < A->ring().size(); ++r) {
        if (A->delta_prime()(r) != A->ring().zero()) delta_nonzero = true;
        CHECK(A->f_op(2, 1, r) == A->ring().zero());
    }
    CHECK(delta_nonzero);
}

TEST_CASE("inverse monomial expansion") {
    auto A = jordan_algebra();
    const FiniteRing& R = A->ring();
    SUBCASE("k = 0 is the constant") {
        for (Elem r = 0; r < R.size(); ++r) CHECK(A->inv_monomial_times(0, r) == A->inv_constant(r));
    }
    SUBCASE("k = 1 is sigma'(r) x^-1 + delta'(r)") {
        for (Elem r = 0; r < R.size(); ++r) {
            InverseRingPoly p = A->inv_monomial_times(1, r);
            CHECK(p.coeff(0, R.zero()) == A->delta_prime()(r));
            CHECK(p.coeff(1, R.zero()) == A->sigma_prime()(r));
        }
    }
    SUBCASE("delta = 0 leaves a single term") {
        auto B = gf4_algebra();
        for (unsigned k = 0; k <= 4; ++k)
            for (Elem r = 0; r < B->ring().size(); ++r) {
                InverseRingPoly p = B->inv_monomial_times(k, r);
                Elem v = r;
                for (unsigned s = 0; s < k; ++s) v = B->sigma_prime()(v);
                CHECK(p == B->inv_monomial(v, k));
            }
    }
}

TEST_CASE("inverse polynomial product") {
    auto A = jordan_algebra();
    const FiniteRing& R = A->ring();
    SUBCASE("(r)(s) = rs") {
        for (Elem r = 0; r < R.size(); ++r)
            for (Elem s = 0; s < R.size(); ++s)
                CHECK(A->inv_mul(A->inv_constant(r), A->inv_constant(s)) ==
                      A->inv_constant(R.mul(r, s)));
    }
    SUBCASE("(r x^-1)(s x^-1) = r sigma'(s) x^-2 + r delta'(s) x^-1") {
        for (Elem r = 0; r < R.size(); ++r)
            for (Elem s = 0; s < R.size(); ++s) {
                InverseRingPoly p = A->inv_mul(A->inv_monomial(r, 1), A->inv_monomial(s, 1));
                CHECK(p.coeff(0, R.zero()) == R.zero());
                CHECK(p.coeff(1, R.zero()) == R.mul(r, A->delta_prime()(s)));
                CHECK(p.coeff(2, R.zero()) == R.mul(r, A->sigma_prime()(s)));
            }
    }
    SUBCASE("associative on monomials of depth <= 2") {
        for (const auto& B : all_algebras()) {
            CAPTURE(B->ring().label());
            std::vector<InverseRingPoly> monos;
            for (Elem r = 0; r < B->ring().size(); ++r)
                for (unsigned k = 0; k <= 2; ++k) monos.push_back(B->inv_monomial(r, k));
            for (const auto& f : monos)
                for (const auto& g : monos) {
                    InverseRingPoly fg = B->inv_mul(f, g);
                    for (const auto& h : monos)
                        if (!(B->inv_mul(fg, h) == B->inv_mul(f, B->inv_mul(g, h))))
                            FAIL("inv_mul associativity fails for " << B->to_string(f) << ", "
                                                                    << B->to_string(g) << ", "
                                                                    << B->to_string(h));
                }
        }
    }
}

TEST_CASE("printing is stable") {
    auto A = jordan_algebra();
    CHECK(A->to_string(A->zero()) == "0");
    CHECK(A->to_string(A->x()) == "1*x");
    SkewPoly p = A->add(A->constant(2), A->monomial(4, 2));
    CHECK(A->to_string(p) == "t + (t^2)*x^2");
    InverseRingPoly q = A->inv_add(A->inv_monomial(2, 1), A->inv_constant(1));
    CHECK(A->to_string(q) == "1 + t*x^-1");
}
