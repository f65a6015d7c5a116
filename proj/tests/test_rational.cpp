#include <catch2/catch_amalgamated.hpp>

#include "qp/prng.hpp"
#include "qp/rational.hpp"

using namespace qp;

TEST_CASE("rationals stay canonical") {
    Rat q = make_rat(-4, 6);
    CHECK(q.get_num() == -2);
    CHECK(q.get_den() == 3);
    CHECK(make_rat(3, -9) == make_rat(-1, 3));
    CHECK(make_rat(0, 7) == 0);
    CHECK_THROWS_AS(make_rat(1, 0), BadParamsError);
}

TEST_CASE("string round trip uses p/q") {
    CHECK(to_string(make_rat(-2, 3)) == "-2/3");
    CHECK(to_string(make_rat(7)) == "7");
    CHECK(parse_rat("-2/3") == make_rat(-2, 3));
    CHECK(parse_rat("7") == make_rat(7));
    CHECK_THROWS_AS(parse_rat("x"), ParseError);
    CHECK_THROWS_AS(parse_rat("1/0"), ParseError);
}

TEST_CASE("field axioms on random triples") {
    Lcg64 rng(7);
    for (int t = 0; t < 300; ++t) {
        Rat a = rng.rat(), b = rng.rat(), c = rng.rat();
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a + 0 == a);
        CHECK(a * 1 == a);
        if (a != 0) CHECK(a * (1 / a) == 1);
        // results remain canonical
        Rat s = a * b + c;
        Int g;
        mpz_gcd(g.get_mpz_t(), s.get_num().get_mpz_t(), s.get_den().get_mpz_t());
        CHECK(g == 1);
        CHECK(s.get_den() > 0);
    }
}

TEST_CASE("integer powers") {
    CHECK(pow_rat(make_rat(2, 3), 3) == make_rat(8, 27));
    CHECK(pow_rat(make_rat(2, 3), -2) == make_rat(9, 4));
    CHECK(pow_rat(make_rat(-5), 0) == 1);
    CHECK(pow_rat(Rat(0), 4) == 0);
    CHECK_THROWS_AS(pow_rat(Rat(0), -1), BadParamsError);
}

TEST_CASE("exact square roots") {
    Rat r;
    CHECK(rat_sqrt(make_rat(9, 4), r));
    CHECK(r == make_rat(3, 2));
    CHECK(rat_sqrt(Rat(0), r));
    CHECK(r == 0);
    CHECK_FALSE(rat_sqrt(Rat(2), r));
    CHECK_FALSE(rat_sqrt(Rat(-1), r));
}
