#include <doctest.h>

#include <map>
#include <random>

#include "equicoh/proj_ring.hpp"
#include "equicoh/textio.hpp"

using namespace equicoh;

namespace {

ProjRingElement random_element(std::mt19937& rng, const SpaceId& s, int maxTerms = 3) {
    std::uniform_int_distribution<int> nterms(0, maxTerms);
    std::uniform_int_distribution<int> exp(0, 2);
    std::uniform_int_distribution<int> coin(0, 1);
    std::vector<ProjMonomial> terms;
    const int k = nterms(rng);
    for (int i = 0; i < k; ++i) {
        ConeBasisElement coeff = coin(rng) ? ConeBasisElement::top(exp(rng), exp(rng))
                                           : ConeBasisElement::bot(exp(rng), exp(rng));
        const int c = (s.kind == SpaceId::Kind::P41) ? exp(rng) % 2 : 0;
        terms.push_back({coeff, exp(rng), exp(rng), c});
    }
    return {s, terms};
}

}  // namespace

TEST_CASE("the square of a is rho a + tau b") {
    const SpaceId inf = SpaceId::rpinf();
    const auto aa = multiply_ring(proj_a(inf), proj_a(inf));
    CHECK(print_proj(aa) == "rho a + tau b");

    const SpaceId s11 = SpaceId::s11();
    CHECK(print_proj(multiply_ring(proj_a(s11), proj_a(s11))) == "rho a");
}

TEST_CASE("P(R^{4,1}) relation table") {
    const SpaceId p41 = SpaceId::p41();
    CHECK(print_proj(multiply_ring(proj_a(p41), proj_b(p41))) == "tau c");
    CHECK(multiply_ring(proj_b(p41), proj_c(p41)).is_zero());
    CHECK(multiply_ring(proj_c(p41), proj_c(p41)).is_zero());
    // closure forced by associativity with the table above
    CHECK(multiply_ring(proj_b(p41), proj_b(p41)).is_zero());
    CHECK(print_proj(multiply_ring(proj_a(p41), proj_c(p41))) == "rho c");
}

TEST_CASE("a^2 b^k expands through the defining relation") {
    const SpaceId inf = SpaceId::rpinf();
    for (int k = 0; k <= 5; ++k) {
        ProjRingElement bk{inf, {{ConeBasisElement::one(), 0, k, 0}}};
        const auto prod = multiply_ring(multiply_ring(proj_a(inf), proj_a(inf)), bk);
        const ProjRingElement want{
            inf, {{ConeBasisElement::rho(), 1, k, 0}, {ConeBasisElement::tau(), 0, k + 1, 0}}};
        CHECK(prod == normal_form(want));
        // forgetful oracle: psi(a^2 b^k) = z^{2k+2}
        SingularElement z2k2;
        z2k2.exps = {2 * k + 2};
        CHECK(forgetful(prod) == z2k2);
    }
}

TEST_CASE("ring multiplication is commutative and associative") {
    std::mt19937 rng(321);
    for (const SpaceId s : {SpaceId::rpinf(), SpaceId::rptw(4), SpaceId::rptw(5), SpaceId::p41(), SpaceId::s11()}) {
        for (int trial = 0; trial < 300; ++trial) {
            const auto x = random_element(rng, s);
            const auto y = random_element(rng, s);
            const auto z = random_element(rng, s);
            CHECK(multiply_ring(x, y) == multiply_ring(y, x));
            CHECK(multiply_ring(multiply_ring(x, y), z) == multiply_ring(x, multiply_ring(y, z)));
        }
    }
    CHECK_THROWS_AS(multiply_ring(proj_a(SpaceId::rpinf()), proj_a(SpaceId::p41())), std::invalid_argument);
}

TEST_CASE("normal form is idempotent and confluent on random elements") {
    std::mt19937 rng(5);
    for (const SpaceId s : {SpaceId::rpinf(), SpaceId::rptw(3), SpaceId::rptw(8), SpaceId::p41(), SpaceId::s11()}) {
        for (int trial = 0; trial < 300; ++trial) {
            const auto x = random_element(rng, s, 4);
            const auto n1 = normal_form(x);
            CHECK(normal_form(n1) == n1);
        }
    }
}

TEST_CASE("powers of b truncate exactly at the module boundary") {
    // On RP^n_tw the monomial a^e b^k dies exactly when e + 2k > n.
    for (int n = 1; n <= 8; ++n) {
        const SpaceId s = SpaceId::rptw(n);
        for (int k = 0; k <= 5; ++k) {
            ProjRingElement bk{s, {{ConeBasisElement::one(), 0, k, 0}}};
            CHECK(normal_form(bk).is_zero() == (2 * k > n));
            ProjRingElement abk{s, {{ConeBasisElement::one(), 1, k, 0}}};
            CHECK(normal_form(abk).is_zero() == (2 * k + 1 > n));
        }
    }
    // rptw4 = P(R^{5,2}): b^2 survives, b^3 and a b^2 die
    const SpaceId r4 = SpaceId::rptw(4);
    CHECK_FALSE(normal_form({r4, {{ConeBasisElement::one(), 0, 2, 0}}}).is_zero());
    CHECK(normal_form({r4, {{ConeBasisElement::one(), 0, 3, 0}}}).is_zero());
    CHECK(normal_form({r4, {{ConeBasisElement::one(), 1, 2, 0}}}).is_zero());
}

TEST_CASE("the forgetful map") {
    const SpaceId inf = SpaceId::rpinf();
    const auto b2 = multiply_ring(proj_b(inf), proj_b(inf));
    CHECK(print_singular(forgetful(b2)) == "z^4");

    // rho kills everything it multiplies
    ProjRingElement rhoAnything{inf, {{ConeBasisElement::top(1, 2), 1, 3, 0}}};
    CHECK(forgetful(rhoAnything).is_zero());

    ProjRingElement tau3{inf, {{ConeBasisElement::top(0, 3), 0, 0, 0}}};
    CHECK(print_singular(forgetful(tau3)) == "1");

    // truncation by the singular ring of the space
    ProjRingElement b2p41{SpaceId::p41(), {{ConeBasisElement::one(), 0, 2, 0}}};
    CHECK(forgetful(b2p41).is_zero());  // z^4 = 0 on RP^3
}

TEST_CASE("psi is a ring homomorphism on 1000 random pairs") {
    std::mt19937 rng(777);
    int pairs = 0;
    for (const SpaceId s : {SpaceId::rpinf(), SpaceId::rptw(6), SpaceId::p41(), SpaceId::s11()}) {
        for (int trial = 0; trial < 260; ++trial) {
            const auto x = random_element(rng, s);
            const auto y = random_element(rng, s);
            CHECK(forgetful(multiply_ring(x, y)) == forgetful(x) * forgetful(y));
            CHECK(forgetful(add_ring(x, y)) == forgetful(x) + forgetful(y));
            ++pairs;
        }
    }
    CHECK(pairs >= 1000);
}

TEST_CASE("monomial counting reproduces the module dimensions") {
    const Window w(-4, 10, -8, 10);

    auto monomial_table = [&](const SpaceId& s) {
        DimensionTable T(w);
        // normal-form monomials: coeff x a^e b^k (c^d on P41), with the
        // letters fixed by the space's truncation
        std::vector<ProjMonomial> letters;
        const int top = (s.kind == SpaceId::Kind::RPtw)      ? s.n
                        : (s.kind == SpaceId::Kind::S11)     ? 1
                        : (s.kind == SpaceId::Kind::RPtwInf) ? w.pMax
                                                             : 3;
        if (s.kind == SpaceId::Kind::P41) {
            letters = {{ConeBasisElement::one(), 0, 0, 0},
                       {ConeBasisElement::one(), 1, 0, 0},
                       {ConeBasisElement::one(), 0, 1, 0},
                       {ConeBasisElement::one(), 0, 0, 1}};
        } else {
            for (int k = 0; k <= top; ++k) {
                const ProjMonomial m{ConeBasisElement::one(), k % 2, k / 2, 0};
                letters.push_back(m);
            }
        }
        for (const auto& m : letters) {
            REQUIRE_FALSE(normal_form({s, {m}}).is_zero());
            const Bidegree base = m.degree();
            for (int p = w.pMin; p <= w.pMax; ++p)
                for (int q = w.qMin; q <= w.qMax; ++q)
                    T.add(p, q, basis_dim(Bidegree{p, q} - base));
        }
        return T;
    };

    for (int n = 1; n <= 8; ++n) {
        const SpaceId s = SpaceId::rptw(n);
        CHECK(monomial_table(s) == dimension_table(space_module(s, w), w));
    }
    CHECK(monomial_table(SpaceId::p41()) == dimension_table(space_module(SpaceId::p41(), w), w));
    CHECK(monomial_table(SpaceId::rpinf()) == dimension_table(space_module(SpaceId::rpinf(), w), w));
}

TEST_CASE("unique classes in the stable range") {
    // For even n the only nonzero class of RP^inf_tw in (n, n/2) is b^{n/2};
    // for odd n, a b^{(n-1)/2} and rho b^{(n-1)/2} are independent.
    const SpaceId inf = SpaceId::rpinf();
    for (int n = 2; n <= 10; n += 2) {
        const ProjMonomial want{ConeBasisElement::one(), 0, n / 2, 0};
        CHECK(module_dim(space_module(inf, Window(-2, 12, -2, 12)), {n, n / 2}) == 1);
        CHECK(normal_form({inf, {want}}).terms == std::vector<ProjMonomial>{want});
    }
    for (int n = 3; n <= 9; n += 2) {
        const ProjMonomial ab{ConeBasisElement::one(), 1, (n - 1) / 2, 0};
        const ProjMonomial rb{ConeBasisElement::rho(), 0, (n - 1) / 2, 0};
        const ProjRingElement sum{inf, {ab, rb}};
        CHECK(normal_form(sum).terms.size() == 2);  // independent over F2
    }
}

TEST_CASE("restriction along the standard inclusions") {
    const SpaceId inf = SpaceId::rpinf();
    const auto a2 = multiply_ring(proj_a(inf), proj_a(inf));  // rho a + tau b

    SUBCASE("a^2 restricts to rho a on the sign sphere") {
        CHECK(print_proj(restrict_to(a2, SpaceId::s11())) == "rho a");
    }

    SUBCASE("ab restricts to tau c on P(R^{4,1})") {
        const auto ab = multiply_ring(proj_a(inf), proj_b(inf));
        CHECK(print_proj(restrict_to(ab, SpaceId::p41())) == "tau c");
    }

    SUBCASE("units restrict to units") {
        CHECK(restrict_to(proj_one(inf), SpaceId::rptw(3)) == proj_one(SpaceId::rptw(3)));
    }

    SUBCASE("classes above the truncation die") {
        const auto b2 = multiply_ring(proj_b(inf), proj_b(inf));
        CHECK(restrict_to(b2, SpaceId::rptw(3)).is_zero());
        CHECK(restrict_to(b2, SpaceId::p41()).is_zero());
        CHECK_FALSE(restrict_to(b2, SpaceId::rptw(4)).is_zero());
    }

    SUBCASE("restriction is a ring map and commutes with psi") {
        std::mt19937 rng(31337);
        for (const SpaceId target : {SpaceId::rptw(5), SpaceId::rptw(2), SpaceId::p41(), SpaceId::s11()}) {
            for (int trial = 0; trial < 120; ++trial) {
                ProjRingElement x = random_element(rng, inf);
                ProjRingElement y = random_element(rng, inf);
                CHECK(restrict_to(multiply_ring(x, y), target) ==
                      multiply_ring(restrict_to(x, target), restrict_to(y, target)));
                // psi then singular truncation == restrict then psi
                SingularElement viaSource = forgetful(x);
                SingularElement truncated;
                truncated.truncation = forgetful(restrict_to(x, target)).truncation;
                for (int e : viaSource.exps)
                    if (!truncated.truncation || e <= *truncated.truncation)
                        truncated.exps.insert(e);
                CHECK(truncated == forgetful(restrict_to(x, target)));
            }
        }
    }

    SUBCASE("unsupported pairs are argument errors") {
        CHECK_THROWS_AS(restrict_to(proj_a(SpaceId::s11()), SpaceId::rpinf()), std::invalid_argument);
        CHECK_THROWS_AS(restrict_to(proj_a(SpaceId::rptw(2)), SpaceId::rptw(5)), std::invalid_argument);
        CHECK_THROWS_AS(restrict_to(proj_a(SpaceId::p41()), SpaceId::s11()), std::invalid_argument);
    }
}

TEST_CASE("space names round-trip") {
    for (const SpaceId s : {SpaceId::s11(), SpaceId::rptw(7), SpaceId::rpinf(), SpaceId::p41()})
        CHECK(space_from_string(to_string(s)) == s);
    CHECK_FALSE(space_from_string("rptw").has_value());
    CHECK_FALSE(space_from_string("cp2").has_value());
}

TEST_CASE("c is rejected outside P(R^{4,1})") {
    CHECK_THROWS_AS(normal_form({SpaceId::rpinf(), {{ConeBasisElement::one(), 0, 0, 1}}}),
                    std::invalid_argument);
}
