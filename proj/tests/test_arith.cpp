#include <gtest/gtest.h>

#include <random>
#include <sstream>
#include <stdexcept>

#include "lenscert/arith.hpp"

using namespace lenscert;

TEST(ReduceMod, Examples) {
    EXPECT_EQ(reduce_mod(12, 8).value, 4);
    EXPECT_EQ(reduce_mod(-3, 8).value, 5);
    EXPECT_EQ(reduce_mod(0, 5).value, 0);
    EXPECT_EQ(reduce_mod(-16, 8).value, 0);
    EXPECT_EQ(reduce_mod(7, 8).modulus, 8);
    EXPECT_THROW(reduce_mod(3, 0), std::invalid_argument);
}

TEST(ReduceMod, Idempotent) {
    for (Int p = 1; p <= 40; ++p)
        for (Int g = -100; g <= 100; ++g) {
            Residue r = reduce_mod(g, p);
            EXPECT_GE(r.value, 0);
            EXPECT_LT(r.value, p);
            EXPECT_EQ(reduce_mod(r, p), r);
        }
}

TEST(ModInverse, Examples) {
    EXPECT_EQ(mod_inverse(3, 8).value, 3);
    EXPECT_EQ(mod_inverse(5, 22).value, 9);
    for (Int p = 2; p < 30; ++p) EXPECT_EQ(mod_inverse(1, p).value, 1);
    EXPECT_THROW(mod_inverse(4, 8), std::invalid_argument);
    EXPECT_THROW(mod_inverse(0, 5), std::invalid_argument);
}

TEST(ModInverse, Involution) {
    for (Int p = 2; p <= 150; ++p)
        for (Int h = -p; h <= 2 * p; ++h) {
            if (gcd(h, p) != 1) continue;
            Residue hi = mod_inverse(h, p);
            EXPECT_EQ(reduce_mod(hi.value * reduce_mod(h, p).value, p).value, p == 1 ? 0 : 1);
            EXPECT_EQ(mod_inverse(hi, p), reduce_mod(h, p));
        }
}

TEST(Squares, Examples) {
    EXPECT_TRUE(is_square_mod(1, 8));
    EXPECT_TRUE(is_square_mod(3, 22));
    EXPECT_FALSE(is_square_mod(2, 5));
    EXPECT_FALSE(is_square_mod(13, 298));
    EXPECT_TRUE(is_square_mod(63, 298));
}

TEST(Squares, TableAgreesWithScan) {
    for (Int p = 1; p <= 120; ++p) {
        SquareTable t(p);
        for (Int q = -p; q < 2 * p; ++q) EXPECT_EQ(t.contains(q), is_square_mod(q, p)) << p << " " << q;
    }
}

TEST(FloorSum, MatchesDirectSum) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<Int> nd(0, 40), md(1, 30), ad(-50, 50);
    for (int trial = 0; trial < 3000; ++trial) {
        Int n = nd(rng), m = md(rng), a = ad(rng), b = ad(rng);
        Int direct = 0;
        for (Int j = 0; j < n; ++j) {
            Int x = a * j + b;
            direct += x >= 0 ? x / m : -((-x + m - 1) / m);
        }
        EXPECT_EQ(floor_sum(n, m, a, b), direct) << n << " " << m << " " << a << " " << b;
    }
}

TEST(Rational, LowestTerms) {
    Rational r(6, -4);
    EXPECT_EQ(r.num(), -3);
    EXPECT_EQ(r.den(), 2);
    EXPECT_EQ(Rational(0, -7).den(), 1);
    EXPECT_THROW(Rational(1, 0), std::domain_error);
    EXPECT_EQ(Rational(10, 5).str(), "2");
    EXPECT_EQ(Rational(-7, 4).str(), "-7/4");
    std::ostringstream os;
    os << Rational(1, 18);
    EXPECT_EQ(os.str(), "1/18");
}

TEST(Rational, Ordering) {
    EXPECT_LT(Rational(1, 3), Rational(1, 2));
    EXPECT_GT(Rational(-1, 3), Rational(-1, 2));
    EXPECT_EQ(Rational(321, 100) <=> Rational(642, 200), std::strong_ordering::equal);
}

TEST(Rational, FieldLaws) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<Int> nd(-30, 30), dd(1, 30);
    auto rnd = [&] { return Rational(nd(rng), dd(rng)); };
    for (int trial = 0; trial < 2000; ++trial) {
        Rational a = rnd(), b = rnd(), c = rnd();
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a - a, Rational(0));
        if (b != Rational(0)) EXPECT_EQ((a / b) * b, a);
    }
    EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
}

TEST(Rational, OverflowIsReported) {
    Rational big(Int{1} << 62);
    EXPECT_THROW(big * big, std::overflow_error);
}

TEST(Dedekind, Examples) {
    EXPECT_EQ(dedekind_sum(1, 2), Rational(0));
    EXPECT_EQ(dedekind_sum(1, 3), Rational(1, 18));
    EXPECT_EQ(dedekind_sum(2, 5), Rational(0));
    EXPECT_EQ(dedekind_sum(0, 1), Rational(0));
}

TEST(Dedekind, Reciprocity) {
    for (Int p = 1; p <= 100; ++p)
        for (Int q = 1; q <= 100; ++q) {
            if (gcd(p, q) != 1) continue;
            Rational lhs = dedekind_sum(q, p) + dedekind_sum(p, q);
            Rational rhs = Rational(-1, 4) + (Rational(p, q) + Rational(q, p) + Rational(1, p * q)) / Rational(12);
            EXPECT_EQ(lhs, rhs) << p << " " << q;
        }
}

TEST(Dedekind, DependsOnlyOnResidue) {
    for (Int p = 2; p <= 40; ++p)
        for (Int q = 1; q < p; ++q)
            if (gcd(p, q) == 1) EXPECT_EQ(dedekind_sum(q, p), dedekind_sum(q + 3 * p, p));
}
