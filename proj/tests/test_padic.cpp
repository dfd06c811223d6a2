#include "doctest.h"
#include "drwitt/padic.hpp"

using namespace drwitt;

TEST_SUITE("padic") {

TEST_CASE("add and mul follow the min-precision rule") {
    PadicInt a(3, 2, 3), b(3, 2, 6);
    auto s = a.add(b);
    CHECK(s.residue() == 0);  // 9 = 0 mod 9
    CHECK(s.precision() == 2);

    PadicInt c(3, 3, 1), d(3, 2, 1);
    auto m = c.mul(d);
    CHECK(m.residue() == 1);
    CHECK(m.precision() == 2);

    PadicInt e(3, 3, 5), f(3, 3, 7);
    CHECK(e.mul(f).residue() == 35 % 27);  // 8
}

TEST_CASE("exact division by powers of p") {
    CHECK(PadicInt(3, 3, 9).div_pow_p(1).residue() == 3);
    CHECK(PadicInt(3, 3, 9).div_pow_p(1).precision() == 2);
    auto z = PadicInt(3, 3, 0).div_pow_p(2);
    CHECK(z.residue() == 0);
    CHECK(z.precision() == 1);
    CHECK(PadicInt(3, 2, 6).div_pow_p(1).residue() == 2);
    CHECK_THROWS_AS(PadicInt(3, 3, 5).div_pow_p(1), NotDivisible);
    CHECK_THROWS_AS(PadicInt(3, 2, 9).div_pow_p(2), PrecisionExhausted);
}

TEST_CASE("unit inversion") {
    auto i = PadicInt(3, 2, 2).invert();
    CHECK(i.residue() == 5);  // 2*5 = 10 = 1 mod 9
    CHECK(PadicInt(3, 3, 1).invert().residue() == 1);
    CHECK_THROWS_AS(PadicInt(3, 2, 3).invert(), NotAUnit);
    // double inversion returns the argument
    for (int64_t v : {1, 2, 4, 5, 7, 8}) {
        PadicInt x(3, 2, v);
        CHECK(x.invert().invert().residue() == x.residue());
    }
}

TEST_CASE("ring laws hold exactly at equal precision") {
    for (int64_t a = 0; a < 27; a += 5)
        for (int64_t b = 0; b < 27; b += 7)
            for (int64_t c = 0; c < 27; c += 4) {
                PadicInt x(3, 3, a), y(3, 3, b), z(3, 3, c);
                CHECK(x.add(y).add(z).residue() == x.add(y.add(z)).residue());
                CHECK(x.mul(y.add(z)).residue() == x.mul(y).add(x.mul(z)).residue());
            }
}

TEST_CASE("precision-0 values compare equal to everything") {
    PadicInt none(3, 0, 0), some(3, 2, 7);
    CHECK(none.congruent(some));
    CHECK(some.congruent(none));
}

TEST_CASE("divide then re-multiply reproduces the value at reduced precision") {
    PadicInt a(3, 4, 33);
    auto q = a.mul(PadicInt(3, 4, 9)).div_pow_p(2);
    CHECK(q.precision() == 2);
    CHECK(q.residue() == 33 % 9);
}

TEST_CASE("teichmuller representative") {
    CHECK(teichmuller_rep(1, 3, 3) == 1);
    uint64_t t = teichmuller_rep(2, 3, 3);
    CHECK(t == 26);  // -1 mod 27
    CHECK(powmod(t, 3, 27) == t);
}

}  // TEST_SUITE
