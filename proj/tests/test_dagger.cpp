#include <random>

#include "doctest.h"
#include "drwitt/dagger.hpp"

using namespace drwitt;

namespace {

DaggerSeries rand_dagger(std::mt19937_64& rng, uint64_t p, uint32_t N, uint32_t nv, uint32_t maxdeg) {
    MPoly f(p, N, nv);
    std::uniform_int_distribution<uint32_t> dd(0, maxdeg);
    std::uniform_int_distribution<uint64_t> dc(0, upow(p, N) - 1);
    for (int t = 0; t < 4; ++t) {
        Mono mo;
        uint32_t budget = dd(rng);
        for (uint32_t i = 0; i < nv && budget; ++i) {
            std::uniform_int_distribution<uint32_t> de(0, budget);
            mo.e[i] = de(rng);
            budget -= mo.e[i];
        }
        f.add_term(mo, dc(rng));
    }
    return DaggerSeries(f);
}

}  // namespace

TEST_SUITE("dagger") {

TEST_CASE("series arithmetic") {
    auto x = DaggerSeries(parse_poly("x", 3, 2, 1));
    CHECK(x.mul(x) == DaggerSeries(parse_poly("x^2", 3, 2, 1)));
    CHECK(x.mul(x).layer(0) == parse_poly("x^2", 3, 1, 1));
    CHECK(x.mul(x).layer(1).is_zero());

    // (1 + 3x) + 6x = 1 + 9x = 1 mod 9
    auto a = DaggerSeries(parse_poly("1 + 3*x", 3, 2, 1));
    auto b = DaggerSeries(parse_poly("6*x", 3, 2, 1));
    CHECK(a.add(b) == DaggerSeries(parse_poly("1", 3, 2, 1)));

    auto one = DaggerSeries(parse_poly("1", 3, 2, 1));
    auto r = rand_dagger(*(new std::mt19937_64(3)), 3, 2, 1, 4);
    CHECK(r.mul(one) == r);
}

TEST_CASE("layer decomposition") {
    // 7x^2 + 5 = (x^2+2) + 3(2x^2+1) over p=3, N=2
    auto a = DaggerSeries(parse_poly("7*x^2 + 5", 3, 2, 1));
    CHECK(a.layer(0) == parse_poly("x^2 + 2", 3, 1, 1));
    CHECK(a.layer(1) == parse_poly("2*x^2 + 1", 3, 1, 1));
    CHECK(DaggerSeries::from_layers(3, 2, a.layers()) == a);
}

TEST_CASE("overconvergence certificates") {
    auto a = DaggerSeries(parse_poly("x", 3, 2, 1));
    CHECK(a.check_overconvergent(1));

    // f_1 of degree 5 fails C = 2 (5 > 2*2)
    auto b = DaggerSeries(parse_poly("3*x^5", 3, 2, 1));
    CHECK_FALSE(b.check_overconvergent(2));
    CHECK(b.check_overconvergent(3));

    // boundary equality: sum_k p^k x^(k+1), N = 3, C = 1
    std::vector<MPoly> ls;
    for (uint32_t k = 0; k < 3; ++k) {
        MPoly f(3, 1, 1);
        f.add_term(Mono::var(0, k + 1), 1);
        ls.push_back(f);
    }
    auto c = DaggerSeries::from_layers(3, 3, ls);
    CHECK(c.check_overconvergent(1));
}

TEST_CASE("certificates add under multiplication (random)") {
    std::mt19937_64 rng(31);
    for (int it = 0; it < 25; ++it) {
        auto a = rand_dagger(rng, 3, 3, 2, 4);
        auto b = rand_dagger(rng, 3, 3, 2, 4);
        auto [an, ad] = a.min_certificate();
        auto [bn, bd] = b.min_certificate();
        // C_a + C_b = (an*bd + bn*ad) / (ad*bd)
        uint64_t num = (uint64_t)an * bd + (uint64_t)bn * ad;
        uint64_t den = (uint64_t)ad * bd;
        CHECK(a.mul(b).check_overconvergent(num, den));
    }
}

TEST_CASE("frobenius lift construction and application") {
    Params par(3, 2, 6, 1);
    auto F = FrobeniusLift(par, {parse_poly("x^3", 3, 2, 1)});
    auto x = DaggerSeries(parse_poly("x", 3, 2, 1));
    CHECK(F.apply(x) == DaggerSeries(parse_poly("x^3", 3, 2, 1)));

    auto F2 = FrobeniusLift(par, {parse_poly("x^3 + 3*x", 3, 2, 1)});
    auto x2 = DaggerSeries(parse_poly("x^2", 3, 2, 1));
    // (x^3+3x)^2 = x^6 + 6x^4 + 9x^2 = x^6 + 6x^4 mod 9
    CHECK(F2.apply(x2) == DaggerSeries(parse_poly("x^6 + 6*x^4", 3, 2, 1)));

    auto one = DaggerSeries(parse_poly("1", 3, 2, 1));
    CHECK(F2.apply(one) == one);

    CHECK_THROWS_AS(FrobeniusLift(par, {parse_poly("x^3 + x", 3, 2, 1)}), NotDivisible);
}

TEST_CASE("exterior derivative") {
    auto f = MwForm::scalar(parse_poly("x^2", 3, 2, 1));
    auto df = f.d();
    CHECK(df.coeff(1) == parse_poly("2*x", 3, 2, 1));

    // d(dx) = 0
    auto dx = MwForm::monomial_form(parse_poly("1", 3, 2, 1), 1);
    CHECK(dx.d().is_zero());

    // d(xy dx) = -x dx^dy over two variables
    auto w = MwForm::monomial_form(parse_poly("x*y", 3, 2, 2), 1);
    auto dw = w.d();
    CHECK(dw.coeff(0b11) == parse_poly("x", 3, 2, 2).neg());
}

TEST_CASE("d^2 = 0 on random forms") {
    std::mt19937_64 rng(37);
    for (int it = 0; it < 30; ++it) {
        MwForm w(3, 2, 3, 0);
        w.add_coeff(0, rand_dagger(rng, 3, 2, 3, 4).poly());
        CHECK(w.d().d().is_zero());
        MwForm w1(3, 2, 3, 1);
        w1.add_coeff(1, rand_dagger(rng, 3, 2, 3, 4).poly());
        w1.add_coeff(2, rand_dagger(rng, 3, 2, 3, 4).poly());
        w1.add_coeff(4, rand_dagger(rng, 3, 2, 3, 4).poly());
        CHECK(w1.d().d().is_zero());
    }
}

TEST_CASE("connection apply and Leibniz") {
    Params par(3, 2, 6, 1);
    // trivial connection = exterior derivative
    MwConnection zero(par, 1);
    auto out = zero.apply({DaggerSeries(parse_poly("x^2", 3, 2, 1))});
    CHECK(out[0].coeff(1) == parse_poly("2*x", 3, 2, 1));

    // rank 1, M = f dx applied to 1 gives f dx
    MwConnection M(par, 1);
    auto f = parse_poly("x^2 + 2", 3, 2, 1);
    M.entry(0, 0) = MwForm::monomial_form(f, 1);
    auto one = DaggerSeries(parse_poly("1", 3, 2, 1));
    CHECK(M.apply({one})[0].coeff(1) == f);

    // M = f dx on g: (g' + fg) dx
    auto g = parse_poly("x^3 + x", 3, 2, 1);
    auto expect = g.derivative(0) + f * g;
    CHECK(M.apply({DaggerSeries(g)})[0].coeff(1) == expect);

    // Leibniz: nabla(w s) = w nabla(s) + s (x) dw on random data
    std::mt19937_64 rng(41);
    Params par2(3, 2, 6, 2);
    for (int it = 0; it < 15; ++it) {
        MwConnection C(par2, 2);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                MwForm e(3, 2, 2, 1);
                e.add_coeff(1, rand_dagger(rng, 3, 2, 2, 3).poly());
                e.add_coeff(2, rand_dagger(rng, 3, 2, 2, 3).poly());
                C.entry(i, j) = e;
            }
        auto w = rand_dagger(rng, 3, 2, 2, 3);
        std::vector<DaggerSeries> s = {rand_dagger(rng, 3, 2, 2, 3), rand_dagger(rng, 3, 2, 2, 3)};
        std::vector<DaggerSeries> ws = {w.mul(s[0]), w.mul(s[1])};
        auto lhs = C.apply(ws);
        auto rhs = C.apply(s);
        auto dw = MwForm::scalar(w.poly()).d();
        for (int i = 0; i < 2; ++i) {
            auto want = rhs[i].scale(w.poly()).add(dw.scale(s[i].poly()));
            CHECK(lhs[i] == want);
        }
    }
}

TEST_CASE("curvature") {
    Params par1(3, 2, 6, 1);
    MwConnection z(par1, 1);
    CHECK(z.is_integrable());

    // rank 1 over one variable: no 2-forms, structurally integrable
    MwConnection M1(par1, 1);
    M1.entry(0, 0) = MwForm::monomial_form(parse_poly("x^2", 3, 2, 1), 1);
    CHECK(M1.is_integrable());

    // rank 1, M = y dx over two variables: dM = -dx^dy != 0
    Params par2(3, 2, 6, 2);
    MwConnection M2(par2, 1);
    M2.entry(0, 0) = MwForm::monomial_form(parse_poly("y", 3, 2, 2), 1);
    CHECK_FALSE(M2.is_integrable());
    auto curv = M2.curvature();
    CHECK(curv[0].coeff(0b11) == parse_poly("1", 3, 2, 2).neg());

    // curvature 0 forces nabla^2 = 0 on random sections (rank 1, exact entry)
    std::mt19937_64 rng(43);
    for (int it = 0; it < 10; ++it) {
        auto g = rand_dagger(rng, 3, 2, 2, 3);
        MwConnection C(par2, 1);
        C.entry(0, 0) = MwForm::scalar(g.poly()).d();
        REQUIRE(C.is_integrable());
        auto s = rand_dagger(rng, 3, 2, 2, 3);
        auto first = C.apply({s})[0];
        // nabla on a 1-form w: dw + M ^ w
        auto second = first.d().add(C.entry(0, 0).wedge(first));
        CHECK(second.is_zero());
    }
}

}  // TEST_SUITE
