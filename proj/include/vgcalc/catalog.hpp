#pragma once

// Built-in cohomology / Borel-Moore polynomials for the recurring spaces:
// points, affine spaces, the torus, projective spaces, Grassmannians (via
// Gaussian binomial Betti numbers), the marked two-point configuration
// spaces of P^1 and P^2, and GL(3)/PGL(3). Also the twisted Borel-Moore
// homology of unordered configuration spaces B(k,Z) for affine and
// projective ambient spaces.
//
// Entries carry their complex dimension, so Poincare duality never needs a
// caller-supplied dimension. All lookups are stateless.

#include "vgcalc/motive.hpp"

namespace vgcalc {

enum class SpaceKind {
    point,
    affine,            // A(n)
    torus,             // Gm
    projective,        // P(n)
    grassmannian,      // Gr(k,N): k-dimensional linear subspaces of C^N
    f2_projective_line,      // F(2,P^1), S_2-marked, both classes invariant
    f2_projective_line_alt,  // F(2,P^1) with the sign marking on the degree-2 class
    f2_projective_plane,     // F(2,P^2), S_2-marked
    gl3,
    pgl3,
};

struct SpaceId {
    SpaceKind kind = SpaceKind::point;
    int a = 0;  // affine/projective n, grassmannian k
    int b = 0;  // grassmannian N
};

inline SpaceId space_point() { return {SpaceKind::point, 0, 0}; }
inline SpaceId space_affine(int n) { return {SpaceKind::affine, n, 0}; }
inline SpaceId space_torus() { return {SpaceKind::torus, 0, 0}; }
inline SpaceId space_projective(int n) { return {SpaceKind::projective, n, 0}; }
inline SpaceId space_grassmannian(int k, int N) { return {SpaceKind::grassmannian, k, N}; }

namespace detail {

inline void check_space(const SpaceId& id) {
    switch (id.kind) {
        case SpaceKind::affine:
        case SpaceKind::projective:
            if (id.a < 0 || id.a > kMaxN)
                throw CalcError("space: dimension out of range");
            break;
        case SpaceKind::grassmannian:
            if (id.a < 0 || id.b < 0 || id.a > id.b || id.b > kMaxN + 1)
                throw CalcError("space: Gr(k,N) needs 0 <= k <= N <= " +
                                std::to_string(kMaxN + 1));
            break;
        default:
            break;
    }
}

}  // namespace detail

// Coefficients of the Gaussian binomial [N choose k]_q, computed from the
// product formula prod_{i=1..k} (1 - q^(N-k+i)) / (1 - q^i) with exact
// polynomial division. These are the Betti numbers (in even degrees) of
// Gr(k,N), equivalently the number of partitions of each weight fitting in
// a k x (N-k) box.
inline std::vector<i64> gaussian_binomial(int k, int N) {
    if (k < 0 || N < 0 || k > N)
        throw CalcError("gaussian_binomial: need 0 <= k <= N");
    const int cols = N - k;
    std::vector<i64> poly{1};
    for (int i = 1; i <= k; ++i) {
        // multiply by (1 - q^(cols+i))
        std::vector<i64> next(poly.size() + static_cast<std::size_t>(cols + i), 0);
        for (std::size_t w = 0; w < poly.size(); ++w) {
            next[w] += poly[w];
            next[w + static_cast<std::size_t>(cols + i)] -= poly[w];
        }
        // divide by (1 - q^i): quotient[w] = next[w] + quotient[w-i]
        std::vector<i64> quot(next.size() - static_cast<std::size_t>(i), 0);
        for (std::size_t w = 0; w < quot.size(); ++w) {
            quot[w] = next[w];
            if (w >= static_cast<std::size_t>(i)) quot[w] += quot[w - static_cast<std::size_t>(i)];
        }
        poly.swap(quot);
    }
    poly.resize(static_cast<std::size_t>(k * cols) + 1);
    return poly;
}

inline int space_dim(const SpaceId& id) {
    detail::check_space(id);
    switch (id.kind) {
        case SpaceKind::point: return 0;
        case SpaceKind::affine: return id.a;
        case SpaceKind::torus: return 1;
        case SpaceKind::projective: return id.a;
        case SpaceKind::grassmannian: return id.a * (id.b - id.a);
        case SpaceKind::f2_projective_line: return 2;
        case SpaceKind::f2_projective_line_alt: return 2;
        case SpaceKind::f2_projective_plane: return 4;
        case SpaceKind::gl3: return 9;
        case SpaceKind::pgl3: return 8;
    }
    throw CalcError("space: unknown id");
}

inline HGPoly coh_poly(const SpaceId& id) {
    detail::check_space(id);
    const Partition s2 = Partition::trivial(2);
    const Partition s11 = Partition::sign_rep(2);
    HGPoly p;
    switch (id.kind) {
        case SpaceKind::point:
        case SpaceKind::affine:
            p.add(0, MotiveClass::unit());
            return p;
        case SpaceKind::torus:
            p.add(0, MotiveClass::unit());
            p.add(1, MotiveClass::unit(1));
            return p;
        case SpaceKind::projective:
            for (int i = 0; i <= id.a; ++i)
                p.add(2 * i, MotiveClass::unit(i));
            return p;
        case SpaceKind::grassmannian: {
            const auto counts = gaussian_binomial(id.a, id.b);
            for (std::size_t d = 0; d < counts.size(); ++d)
                if (counts[d] != 0)
                    p.add(2 * static_cast<int>(d),
                          MotiveClass::unit(static_cast<int>(d), counts[d]));
            return p;
        }
        case SpaceKind::f2_projective_line:
            p.add(0, MotiveClass::term(s2, 0));
            p.add(2, MotiveClass::term(s2, 1));
            return p;
        case SpaceKind::f2_projective_line_alt:
            p.add(0, MotiveClass::term(s2, 0));
            p.add(2, MotiveClass::term(s11, 1));
            return p;
        case SpaceKind::f2_projective_plane:
            p.add(0, MotiveClass::term(s2, 0));
            p.add(2, MotiveClass::term(s2, 1) + MotiveClass::term(s11, 1));
            p.add(4, MotiveClass::term(s2, 2) + MotiveClass::term(s11, 2));
            p.add(6, MotiveClass::term(s11, 3));
            return p;
        case SpaceKind::gl3: {
            HGPoly f1 = with_unit(HGPoly::from_class(MotiveClass::unit(1), 1), 0);
            HGPoly f2 = with_unit(HGPoly::from_class(MotiveClass::unit(2), 3), 0);
            HGPoly f3 = with_unit(HGPoly::from_class(MotiveClass::unit(3), 5), 0);
            return f1 * f2 * f3;
        }
        case SpaceKind::pgl3: {
            HGPoly f2 = with_unit(HGPoly::from_class(MotiveClass::unit(2), 3), 0);
            HGPoly f3 = with_unit(HGPoly::from_class(MotiveClass::unit(3), 5), 0);
            return f2 * f3;
        }
    }
    throw CalcError("space: unknown id");
}

inline HGPoly bm_poly(const SpaceId& id) {
    return poincare_dual_bm(coh_poly(id), space_dim(id));
}

enum class Ambient { affine, projective };

// Twisted Borel-Moore homology of the unordered configuration space
// B(k, ambient^N) with the sign local system:
//   - affine ambient, k >= 2: trivial;
//   - affine ambient, k  = 1: the Borel-Moore polynomial of C^N;
//   - projective ambient: a degree shift of the Grassmannian of
//     (k-1)-dimensional projective subspaces of P^N, zero iff k >= N+2.
inline HGPoly twisted_config_bm(int k, Ambient ambient, int N) {
    if (k < 1 || N < 1)
        throw CalcError("twisted_config_bm: need k >= 1 and N >= 1");
    if (ambient == Ambient::affine) {
        if (k >= 2)
            return HGPoly();
        return bm_poly(space_affine(N));
    }
    if (k > N + 1)
        return HGPoly();
    // (k-1)-dimensional projective subspaces of P^N = k-dimensional linear
    // subspaces of C^(N+1).
    return shift_t(bm_poly(space_grassmannian(k, N + 1)), k * (k - 1));
}

}  // namespace vgcalc
