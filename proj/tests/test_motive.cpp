#include "vgcalc/motive.hpp"

#include "vgcalc/scenario.hpp"

#include "doctest.h"

#include <random>

using namespace vgcalc;

namespace {

const Partition s2 = Partition::trivial(2);
const Partition s11 = Partition::sign_rep(2);

HGPoly P(const std::string& text) { return parse_poly(text); }

HGPoly random_poly(std::mt19937& rng, int terms = 4) {
    std::uniform_int_distribution<int> deg(-3, 6), tate(-3, 3), coeff(-2, 2), rep(0, 1);
    HGPoly p;
    for (int i = 0; i < terms; ++i) {
        int c = coeff(rng);
        if (c == 0) continue;
        p.add(deg(rng), MotiveClass::term(rep(rng) ? s2 : s11, tate(rng), c));
    }
    return p;
}

// Random polynomial with nonnegative coefficients and an invertible lowest
// term (for division round-trips).
HGPoly random_unit_divisor(std::mt19937& rng) {
    std::uniform_int_distribution<int> deg(1, 4), tate(0, 3), coeff(1, 2), rep(0, 1);
    HGPoly d = HGPoly::from_class(MotiveClass::term(s2, 0));
    for (int i = 0; i < 3; ++i)
        d.add(deg(rng), MotiveClass::term(rep(rng) ? s2 : s11, tate(rng), coeff(rng)));
    return d;
}

}  // namespace

TEST_CASE("class arithmetic is canonical and promotes the unit") {
    MotiveClass a = MotiveClass::term(s2, 1) + MotiveClass::term(s11, 1);
    MotiveClass b = a;
    b -= a;
    CHECK(b.is_zero());
    CHECK(b.n() == 0);

    // plain unit times a marked class
    MotiveClass u = MotiveClass::unit(2, 3);
    MotiveClass prod = u * MotiveClass::term(s11, 1);
    CHECK(prod == MotiveClass::term(s11, 3, 3));

    MotiveClass c3;
    c3.add_term(Partition(std::vector<int>{3}), 0, 1);
    CHECK_THROWS_AS(MotiveClass::term(s2, 0) + c3, CalcError);
}

TEST_CASE("poly_add: degreewise and canonical") {
    CHECK(P("s[2]*t^2") + P("s[1,1]*t^2") == P("(s[2]+s[1,1])*t^2"));
    HGPoly p = P("s[2] + L*t^2*(s[2]+s[1,1])");
    CHECK(p + HGPoly() == p);
    CHECK((p - p).is_zero());
}

TEST_CASE("poly_mul: Kunneth products with Kronecker coefficients") {
    // unit coefficient leaves the polynomial unchanged
    HGPoly p = P("s[2] + L*t*s[1,1]");
    CHECK(p * P("s[2]") == p);
    // sign times sign gives the trivial representation, Tate powers add
    CHECK(P("s[1,1]*L*t") * P("s[1,1]*L^2*t^2") == P("s[2]*L^3*t^3"));
}

TEST_CASE("tate_twist and t_reverse") {
    CHECK(tate_twist(P("s[2]"), 1) == P("s[2]*L"));
    HGPoly p = P("s[2] + (s[2]+s[1,1])*L*t^2 + s[2]*L^3*t^5");
    CHECK(tate_twist(tate_twist(p, 5), -5) == p);
    CHECK(t_reverse(t_reverse(p)) == p);
    CHECK(t_reverse(P("t^3")) == P("t^-3"));
    CHECK(t_reverse(P("1 + L^2*t^3 + L^3*t^5 + L^5*t^8")) ==
          P("1 + L^2*t^-3 + L^3*t^-5 + L^5*t^-8"));
    // Q(12) twisted by 13 lands at L
    CHECK(tate_twist(P("s[2]*L^-12"), 13) == P("s[2]*L"));
}

TEST_CASE("poincare_dual_bm") {
    // projective space is self-dual up to the sign of the Tate exponents
    HGPoly pn;
    HGPoly expect;
    for (int i = 0; i <= 3; ++i) {
        pn.add(2 * i, MotiveClass::unit(i));
        expect.add(2 * i, MotiveClass::unit(-i));
    }
    CHECK(poincare_dual_bm(pn, 3) == expect);

    // torus: coh 1 + L t, dim 1 -> t + L^-1 t^2
    CHECK(poincare_dual_bm(P("1 + L*t"), 1) == P("t + L^-1*t^2"));

    // the two transforms are mutually inverse
    std::mt19937 rng(99);
    for (int i = 0; i < 200; ++i) {
        HGPoly p = random_poly(rng);
        CHECK(poincare_dual_coh(poincare_dual_bm(p, 4), 4) == p);
        CHECK(poincare_dual_bm(poincare_dual_coh(p, 4), 4) == p);
    }
}

TEST_CASE("alexander_dual") {
    CHECK(alexander_dual(P("s[2]*L^-12*t^24"), 13) == P("s[2]*L*t"));
    CHECK(alexander_dual(HGPoly(), 5).is_zero());
    CHECK_THROWS_AS(alexander_dual(P("t"), 0), CalcError);

    // inverse transform recovers the input exactly
    std::mt19937 rng(3);
    for (int i = 0; i < 200; ++i) {
        HGPoly bm = random_poly(rng);
        HGPoly coh = alexander_dual(bm, 13);
        CHECK(tate_twist(shift_t(t_reverse(coh), 2 * 13 - 1), -13) == bm);
    }
}

TEST_CASE("with_unit adds the degree-0 trivial class") {
    CHECK(with_unit(P("L*t"), 0) == P("1 + L*t"));
    CHECK(with_unit(P("s[1,1]*L*t"), 2) == P("s[2] + s[1,1]*L*t"));
}

TEST_CASE("exact_divide") {
    HGPoly q = P("s[2] + L*t^2*s[1,1]");
    HGPoly d = P("1 + L*t");
    CHECK(exact_divide(q * d, d) == q);
    CHECK(exact_divide(q, P("s[2]")) == q);
    CHECK(exact_divide(q, P("1")) == q);

    // a nonzero remainder names the first failing degree
    CHECK_THROWS_WITH_AS(exact_divide(P("s[2]*t"), P("1 + L*t")),
                         "exact_divide: not divisible, first failing degree 1", CalcError);
    CHECK_THROWS_AS(exact_divide(P("s[2]"), P("2*s[2]")), CalcError);
    CHECK_THROWS_AS(exact_divide(P("s[2]"), P("s[1,1]")), CalcError);
    CHECK_THROWS_AS(exact_divide(P("s[2]"), HGPoly()), CalcError);

    std::mt19937 rng(42);
    for (int i = 0; i < 1000; ++i) {
        HGPoly quo = random_poly(rng);
        HGPoly div = random_unit_divisor(rng);
        CHECK(exact_divide(quo * div, div) == quo);
    }
}

TEST_CASE("euler_class") {
    CHECK(euler_class(P("1 + L*t^2")) == parse_poly("1 + L").coeff(0));
    CHECK(euler_class(P("s[2]*t - s[2]*t")).is_zero());
    // ring homomorphism to classes
    std::mt19937 rng(5);
    for (int i = 0; i < 500; ++i) {
        HGPoly p = random_poly(rng), q = random_poly(rng);
        CHECK(euler_class(p * q) == euler_class(p) * euler_class(q));
    }
}

TEST_CASE("betti forgets weights and measures dimensions") {
    CHECK(betti(P("s[2] + L*t^2*(s[2]+s[1,1])")) == P("1 + 2*t^2"));
    CHECK(betti(HGPoly()).is_zero());
    // multiplicativity via Kronecker dimensions
    std::mt19937 rng(6);
    for (int i = 0; i < 500; ++i) {
        HGPoly p = random_poly(rng), q = random_poly(rng);
        CHECK(betti(p * q) == betti(p) * betti(q));
    }
}

TEST_CASE("ring axioms on random inputs") {
    std::mt19937 rng(2024);
    const HGPoly one = HGPoly::unit(2);
    for (int i = 0; i < 1000; ++i) {
        HGPoly p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
        CHECK(p + q == q + p);
        CHECK((p + q) + r == p + (q + r));
        CHECK(p * q == q * p);
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
        CHECK(p * one == p);
    }
}

TEST_CASE("canonical rendering") {
    CHECK(P("s[2]").str() == "s[2]");
    CHECK(HGPoly().str() == "0");
    CHECK(P("s[2] + (s[2]+s[1,1])*L*t^2 + s[2]*L^3*t^5").str() ==
          "s[2] + (s[2]+s[1,1])*L*t^2 + s[2]*L^3*t^5");
    CHECK(P("s[1,1]*L^-9*t^19").str() == "s[1,1]*L^-9*t^19");
    CHECK(P("1 + 2*t^2 + 3*t^8").str() == "1 + 2*t^2 + 3*t^8");
    CHECK(P("2*s[2]*L^2*t^3 + s[1,1]*L^2*t^3").str() == "(2*s[2]+s[1,1])*L^2*t^3");
    CHECK((P("s[1,1]*t") - P("s[2]*t")).str() == "(-s[2]+s[1,1])*t");
    CHECK((HGPoly() - P("s[2]*t")).str() == "-s[2]*t");
    CHECK(P("s[2]*t^-3").str() == "s[2]*t^-3");
    // mixed Tate powers in one degree stay ordered by exponent
    CHECK(P("s[1,1]*L^-8*t^23 + (s[2]+s[1,1])*L^-9*t^23").str() ==
          "(s[2]+s[1,1])*L^-9*t^23 + s[1,1]*L^-8*t^23");
}

TEST_CASE("rendering round-trips through the parser") {
    std::mt19937 rng(77);
    for (int i = 0; i < 1000; ++i) {
        HGPoly p = random_poly(rng, 6);
        CHECK(parse_poly(p.str()) == p);
    }
}
