#include <doctest.h>

#include <algorithm>
#include <random>

#include "equicoh/mackey.hpp"
#include "equicoh/point_ring.hpp"

using namespace equicoh;

namespace {

ConeBasisElement random_basis(std::mt19937& rng, int maxExp) {
    std::uniform_int_distribution<int> exp(0, maxExp);
    std::uniform_int_distribution<int> cone(0, 1);
    if (cone(rng) == 0)
        return ConeBasisElement::top(exp(rng), exp(rng));
    return ConeBasisElement::bot(exp(rng), exp(rng));
}

RingElement expow(const ConeBasisElement& b) {
    return RingElement(b);
}

}  // namespace

TEST_CASE("basis_dim reproduces the two-cone support") {
    CHECK(basis_dim({0, 0}) == 1);   // unit at the origin
    CHECK(basis_dim({1, 1}) == 1);   // rho
    CHECK(basis_dim({0, -2}) == 1);  // theta
    CHECK(basis_dim({1, 0}) == 0);   // between the cones
    CHECK(basis_dim({-1, -3}) == 1); // theta/rho

    for (int p = -9; p <= 9; ++p)
        for (int q = -9; q <= 9; ++q) {
            const int d = basis_dim({p, q});
            CHECK((d == 0 || d == 1));
            const bool top = p >= 0 && q >= p;
            const bool bot = p <= 0 && q <= p - 2;
            CHECK(d == ((top || bot) ? 1 : 0));
            CHECK(element_at({p, q}).has_value() == (d == 1));
            if (auto e = element_at({p, q}))
                CHECK(e->degree() == Bidegree{p, q});
        }
}

TEST_CASE("element_at inverts the bidegree map on one-dimensional pieces") {
    CHECK(element_at({2, 3}) == ConeBasisElement::top(2, 1));   // rho^2 tau
    CHECK(element_at({0, -3}) == ConeBasisElement::bot(0, 1));  // theta/tau
    CHECK_FALSE(element_at({5, 2}).has_value());
}

TEST_CASE("free orbit ring is the Laurent algebra on t in (0,1)") {
    CHECK(free_orbit_dim({0, 5}) == 1);
    CHECK(free_orbit_dim({0, -7}) == 1);
    CHECK(free_orbit_dim({1, 0}) == 0);
    CHECK(free_orbit_dim({-2, 3}) == 0);
}

TEST_CASE("multiplication on basis elements") {
    const auto rho = ConeBasisElement::rho();
    const auto tau = ConeBasisElement::tau();
    const auto theta = ConeBasisElement::theta();

    CHECK(multiply_basis(rho, ConeBasisElement::bot(1, 0)) == theta);
    CHECK(multiply_basis(rho, tau) == ConeBasisElement::top(1, 1));

    // rho*theta lands in (1,-1), which supports nothing.
    CHECK(basis_dim(rho.degree() + theta.degree()) == 0);
    CHECK_FALSE(multiply_basis(rho, theta).has_value());

    CHECK_FALSE(multiply_basis(theta, theta).has_value());
    CHECK_FALSE(multiply_basis(ConeBasisElement::bot(2, 1), ConeBasisElement::bot(0, 4)).has_value());
}

TEST_CASE("divisibility identities") {
    for (int n = 0; n <= 6; ++n)
        for (int m = 0; m <= 6; ++m) {
            const auto div = ConeBasisElement::bot(n, m);
            const auto full = ConeBasisElement::top(n, m);     // rho^n tau^m
            const auto extra = ConeBasisElement::top(n + 1, m);
            CHECK(multiply_basis(full, div) == ConeBasisElement::theta());
            CHECK_FALSE(multiply_basis(extra, div).has_value());
        }
}

TEST_CASE("nonzero products land in the cones, exponentwise rule agrees there") {
    for (int a = 0; a <= 8; ++a)
        for (int b = 0; b <= 8; ++b)
            for (int n = 0; n <= 8; ++n)
                for (int m = 0; m <= 8; ++m) {
                    const auto t = ConeBasisElement::top(a, b);
                    const auto bot = ConeBasisElement::bot(n, m);
                    const auto prod = multiply_basis(t, bot);
                    if (n >= a && m >= b) {
                        REQUIRE(prod.has_value());
                        CHECK(prod == element_at(t.degree() + bot.degree()));
                    } else {
                        CHECK_FALSE(prod.has_value());
                    }
                    if (prod)
                        CHECK(basis_dim(t.degree() + bot.degree()) == 1);
                }
}

TEST_CASE("ring element arithmetic is commutative, associative, bilinear") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 1200; ++trial) {
        const RingElement x = expow(random_basis(rng, 6));
        const RingElement y = expow(random_basis(rng, 6));
        const RingElement z = expow(random_basis(rng, 6));
        CHECK(x * y == y * x);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
    }
}

TEST_CASE("homogeneity bookkeeping") {
    const RingElement mixed = RingElement(ConeBasisElement::rho()) + RingElement(ConeBasisElement::tau());
    CHECK_FALSE(mixed.is_homogeneous());
    CHECK_FALSE(mixed.degree().has_value());

    const RingElement sq = RingElement(ConeBasisElement::top(2, 0));
    CHECK(sq.is_homogeneous());
    CHECK(sq.degree() == Bidegree{2, 2});

    // x + x = 0 over F2
    const RingElement x = expow(ConeBasisElement::bot(3, 2));
    CHECK((x + x).is_zero());

    // additivity of bidegrees on homogeneous nonzero products
    for (int a = 0; a <= 4; ++a)
        for (int n = 0; n <= 4; ++n) {
            const RingElement t = expow(ConeBasisElement::top(a, 1));
            const RingElement b = expow(ConeBasisElement::bot(n, 3));
            const RingElement prod = t * b;
            if (!prod.is_zero())
                CHECK(prod.degree() == Bidegree{t.degree()->p + b.degree()->p, t.degree()->q + b.degree()->q});
        }
}

TEST_CASE("mackey axiom checker") {
    CHECK(check_mackey(MackeyFunctor::constant_z2()).empty());
    CHECK(check_mackey(MackeyFunctor::zero()).empty());

    SUBCASE("identity-everywhere functor fails the double coset identity") {
        MackeyFunctor M;
        M.dimTop = M.dimBot = 1;
        M.tStar = F2Matrix::identity(1);
        M.iStar = F2Matrix::identity(1);
        M.iLower = F2Matrix::identity(1);
        const auto v = check_mackey(M);
        REQUIRE(v.size() == 1);
        CHECK(v[0] == "i* i_* = id + t*");
    }

    SUBCASE("zero Weyl action fails the involution") {
        MackeyFunctor M;
        M.dimTop = M.dimBot = 1;
        M.tStar = F2Matrix(1, 1);
        M.iStar = F2Matrix::identity(1);
        M.iLower = F2Matrix(1, 1);
        const auto v = check_mackey(M);
        CHECK(std::find(v.begin(), v.end(), "(t*)^2 = id") != v.end());
    }

    SUBCASE("swap action with unstable restriction fails axiom 2") {
        MackeyFunctor M;
        M.dimTop = 2;
        M.dimBot = 1;
        F2Matrix swap(2, 2);
        swap.set(0, 1, 1);
        swap.set(1, 0, 1);
        M.tStar = swap;
        M.iStar = F2Matrix(1, 2);
        M.iStar.set(0, 0, 1);  // not Weyl-invariant
        M.iLower = F2Matrix(2, 1);
        const auto v = check_mackey(M);
        CHECK(std::find(v.begin(), v.end(), "t* i* = i*") != v.end());
    }

    SUBCASE("swap action with unstable transfer fails axiom 3") {
        MackeyFunctor M;
        M.dimTop = 2;
        M.dimBot = 1;
        F2Matrix swap(2, 2);
        swap.set(0, 1, 1);
        swap.set(1, 0, 1);
        M.tStar = swap;
        M.iStar = F2Matrix(1, 2);
        M.iLower = F2Matrix(2, 1);
        M.iLower.set(0, 0, 1);
        const auto v = check_mackey(M);
        CHECK(std::find(v.begin(), v.end(), "i_* (t*)^{-1} = i_*") != v.end());
    }

    SUBCASE("shape mismatch is an argument error") {
        MackeyFunctor M;
        M.dimTop = 2;
        M.dimBot = 1;
        M.tStar = F2Matrix::identity(1);  // wrong shape
        M.iStar = F2Matrix(1, 2);
        M.iLower = F2Matrix(2, 1);
        CHECK_THROWS_AS(check_mackey(M), std::invalid_argument);
    }

    SUBCASE("the Burnside-style functor with honest transfer passes") {
        // dims (1,1), t* = id, i* = id, i_* = 0 is the constant functor;
        // doubling the bottom with diagonal restriction also satisfies all axioms.
        MackeyFunctor M;
        M.dimTop = 1;
        M.dimBot = 2;
        M.tStar = F2Matrix::identity(1);
        M.iStar = F2Matrix(2, 1);
        M.iStar.set(0, 0, 1);
        M.iStar.set(1, 0, 1);
        M.iLower = F2Matrix(1, 2);
        CHECK(check_mackey(M).empty());
    }
}
