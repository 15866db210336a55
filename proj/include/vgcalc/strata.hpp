#pragma once

// Stratum towers of the discriminant resolution: each stratum is a complex
// vector bundle over a simplex bundle over a configuration family. The
// descriptor stores the *twisted* Borel-Moore polynomial of the family, so
// the sign behaviour of the simplex bundle is already folded in.

#include "vgcalc/motive.hpp"

#include <string>

namespace vgcalc {

struct StratumDescriptor {
    std::string label;
    HGPoly base_bm;    // twisted BM polynomial of the configuration family
    int simplex_dim = 0;
    int bundle_rank = 0;
};

// BM polynomial of the stratum: base * t^simplex_dim * L^-rank * t^(2 rank).
inline HGPoly stratum_bm(const StratumDescriptor& d) {
    if (d.simplex_dim < 0 || d.bundle_rank < 0)
        throw CalcError("stratum_bm: negative simplex dimension or bundle rank");
    return tate_twist(shift_t(d.base_bm, d.simplex_dim + 2 * d.bundle_rank), -d.bundle_rank);
}

// BM polynomial of the open cone over a base with the given *reduced*
// homology polynomial: a degree shift by one. Zero input yields zero, which
// is how strata with no reduced homology drop out of the cone.
inline HGPoly cone_bm(const HGPoly& reduced_base) {
    return shift_t(reduced_base, 1);
}

}  // namespace vgcalc
