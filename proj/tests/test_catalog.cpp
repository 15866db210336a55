#include "vgcalc/catalog.hpp"

#include "vgcalc/scenario.hpp"

#include "doctest.h"

using namespace vgcalc;

namespace {

HGPoly P(const std::string& text) { return parse_poly(text); }

// Schubert-cell oracle: enumerate the partitions inside a k x (N-k) box.
std::vector<i64> schubert_cell_counts(int k, int N) {
    const int cols = N - k;
    std::vector<i64> counts(static_cast<std::size_t>(k * cols) + 1, 0);
    std::vector<int> parts;
    auto rec = [&](auto&& self, int row, int maxpart, int weight) -> void {
        if (row == k) {
            ++counts[static_cast<std::size_t>(weight)];
            return;
        }
        for (int p = 0; p <= maxpart; ++p)
            self(self, row + 1, p, weight + p);
    };
    rec(rec, 0, cols, 0);
    return counts;
}

}  // namespace

TEST_CASE("cohomology polynomials of the basic spaces") {
    CHECK(coh_poly(space_point()) == P("1"));
    CHECK(coh_poly(space_affine(3)) == P("1"));
    CHECK(coh_poly(space_torus()) == P("1 + L*t"));
    CHECK(coh_poly(space_projective(2)) == P("1 + L*t^2 + L^2*t^4"));
    CHECK(coh_poly({SpaceKind::gl3, 0, 0}) == P("(1+L*t)*(1+L^2*t^3)*(1+L^3*t^5)"));
    CHECK(coh_poly({SpaceKind::pgl3, 0, 0}) == P("(1+L^2*t^3)*(1+L^3*t^5)"));
    CHECK(coh_poly({SpaceKind::f2_projective_plane, 0, 0}) ==
          P("s[2] + (s[2]+s[1,1])*L*t^2 + (s[2]+s[1,1])*L^2*t^4 + s[1,1]*L^3*t^6"));
    CHECK(coh_poly({SpaceKind::f2_projective_line, 0, 0}) == P("s[2] + s[2]*L*t^2"));
    CHECK(coh_poly({SpaceKind::f2_projective_line_alt, 0, 0}) == P("s[2] + s[1,1]*L*t^2"));
    CHECK_THROWS_AS(coh_poly(space_projective(9)), CalcError);
}

TEST_CASE("Borel-Moore polynomials via the stored dimensions") {
    CHECK(bm_poly(space_point()) == P("1"));
    CHECK(bm_poly(space_torus()) == P("t + L^-1*t^2"));
    CHECK(bm_poly({SpaceKind::pgl3, 0, 0}) ==
          P("L^-8*t^16 + L^-6*t^13 + L^-5*t^11 + L^-3*t^8"));
    CHECK(bm_poly({SpaceKind::f2_projective_line, 0, 0}) ==
          P("s[2]*L^-1*t^2 + s[2]*L^-2*t^4"));
    CHECK(bm_poly({SpaceKind::f2_projective_line_alt, 0, 0}) ==
          P("s[1,1]*L^-1*t^2 + s[2]*L^-2*t^4"));

    // round-trip: dualizing the BM polynomial back gives the cohomology
    for (SpaceKind kind : {SpaceKind::projective, SpaceKind::gl3, SpaceKind::pgl3,
                           SpaceKind::f2_projective_plane, SpaceKind::torus}) {
        SpaceId id{kind, 2, 0};
        CHECK(poincare_dual_coh(bm_poly(id), space_dim(id)) == coh_poly(id));
    }
}

TEST_CASE("Grassmannian Betti numbers match Schubert cell enumeration") {
    for (int N = 0; N <= 6; ++N) {
        for (int k = 0; k <= N; ++k) {
            CHECK(gaussian_binomial(k, N) == schubert_cell_counts(k, N));
            // duality of the Gaussian binomial
            CHECK(gaussian_binomial(k, N) == gaussian_binomial(N - k, N));
        }
    }
    // [4 choose 2]_q = 1 + q + 2q^2 + q^3 + q^4
    CHECK(gaussian_binomial(2, 4) == std::vector<i64>{1, 1, 2, 1, 1});
}

TEST_CASE("projective space Betti sums") {
    for (int n = 0; n <= 6; ++n) {
        const HGPoly b = betti(coh_poly(space_projective(n)));
        i64 total = 0;
        for (const auto& [d, c] : b.coeffs())
            total += c.coeff(Partition(), 0);
        CHECK(total == n + 1);
    }
}

TEST_CASE("twisted configuration homology") {
    // affine ambient: trivial for k >= 2, BM of C^N for k = 1
    for (int k = 2; k <= 6; ++k)
        for (int N = 1; N <= 6; ++N)
            CHECK(twisted_config_bm(k, Ambient::affine, N).is_zero());
    CHECK(twisted_config_bm(1, Ambient::affine, 2) == P("L^-2*t^4"));

    // projective ambient: zero exactly when k >= N+2
    for (int k = 1; k <= 6; ++k)
        for (int N = 1; N <= 6; ++N)
            CHECK(twisted_config_bm(k, Ambient::projective, N).is_zero() == (k >= N + 2));

    CHECK(twisted_config_bm(3, Ambient::projective, 1).is_zero());
    CHECK(twisted_config_bm(2, Ambient::projective, 1) == P("t^2"));
    CHECK(twisted_config_bm(1, Ambient::projective, 2) == bm_poly(space_projective(2)));
    CHECK_THROWS_AS(twisted_config_bm(0, Ambient::projective, 1), CalcError);
}
