#include "vgcalc/strata.hpp"

#include "vgcalc/scenario.hpp"

#include "doctest.h"

#include <random>

using namespace vgcalc;

namespace {
HGPoly P(const std::string& text) { return parse_poly(text); }
}

TEST_CASE("stratum_bm applies the simplex and bundle factors") {
    // point pair with a rank-11 bundle
    StratumDescriptor d1{"1", P("s[2]+s[1,1]"), 0, 11};
    CHECK(stratum_bm(d1) == P("(s[2]+s[1,1])*L^-11*t^22"));

    // sign class on a one-simplex with a rank-9 bundle
    StratumDescriptor d3{"3", P("s[1,1]"), 1, 9};
    CHECK(stratum_bm(d3) == P("s[1,1]*L^-9*t^19"));

    // plane minus two points under a rank-10 bundle
    StratumDescriptor d2{"2", P("s[1,1]*t + s[2]*L^-1*t^2 + s[2]*L^-2*t^4"), 0, 10};
    CHECK(stratum_bm(d2) ==
          P("s[1,1]*L^-10*t^21 + s[2]*L^-11*t^22 + s[2]*L^-12*t^24"));

    CHECK_THROWS_AS(stratum_bm(StratumDescriptor{"bad", P("s[2]"), -1, 0}), CalcError);
}

TEST_CASE("stratum_bm is multiplicative in the bundle tower") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> rank(0, 6), simplex(0, 4);
    for (int i = 0; i < 300; ++i) {
        HGPoly base = P("s[1,1]*t + s[2]*L^-1*t^2");
        const int r = rank(rng), r1 = r / 2, r2 = r - r / 2, s = simplex(rng);
        StratumDescriptor whole{"w", base, s, r};
        StratumDescriptor first{"f", base, s, r1};
        StratumDescriptor second{"s", stratum_bm(first), 0, r2};
        CHECK(stratum_bm(whole) == stratum_bm(second));
    }
}

TEST_CASE("stratum_bm degree support") {
    HGPoly base = P("s[1,1]*t + s[2]*L^-1*t^2 + s[2]*L^-2*t^4");
    StratumDescriptor d{"x", base, 2, 5};
    HGPoly out = stratum_bm(d);
    const int lo = 2 + 2 * 5, hi = 2 + 2 * 5 + *base.max_degree();
    CHECK(*out.min_degree() >= lo);
    CHECK(*out.max_degree() <= hi);
}

TEST_CASE("cone_bm shifts the reduced base by one degree") {
    CHECK(cone_bm(HGPoly()).is_zero());
    CHECK(cone_bm(P("s[1,1]*t^3")) == P("s[1,1]*t^4"));
    // cone over two points is an interval: the reduced degree-0 class moves
    // to degree 1
    CHECK(cone_bm(P("s[1,1]")) == P("s[1,1]*t"));
}
