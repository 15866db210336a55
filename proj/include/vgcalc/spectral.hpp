#pragma once

// Bigraded pages with declared differentials, and three-term long exact
// sequence ledgers.
//
// Differentials are declared by *image class*, not by rank: an image is a
// MotiveClass that must embed constituent-by-constituent in both the source
// and the target entry (equivariance and weight-matching are structural).
// Pages are immutable; applying differentials returns a new page. Every
// application conserves the alternating-sum Euler class, and positions left
// with a nonzero admissible image are reported as unresolved warnings, so
// convergence is always explicit.

#include "vgcalc/motive.hpp"

#include <tuple>
#include <vector>

namespace vgcalc {

enum class Variance { homological, cohomological };

struct PagePos {
    int p = 0;
    int q = 0;
    bool operator==(const PagePos& o) const { return p == o.p && q == o.q; }
    bool operator<(const PagePos& o) const { return std::tie(p, q) < std::tie(o.p, o.q); }
};

inline std::string pos_str(const PagePos& pos) {
    return "(" + std::to_string(pos.p) + "," + std::to_string(pos.q) + ")";
}

class Page {
public:
    explicit Page(Variance v = Variance::homological) : variance_(v) {}

    Variance variance() const { return variance_; }
    bool empty() const { return entries_.empty(); }
    const std::map<PagePos, MotiveClass>& entries() const { return entries_; }

    MotiveClass entry(PagePos pos) const {
        auto it = entries_.find(pos);
        return it == entries_.end() ? MotiveClass() : it->second;
    }

    void add_entry(PagePos pos, const MotiveClass& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = entries_.emplace(pos, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) entries_.erase(it);
        }
    }

    void subtract_entry(PagePos pos, const MotiveClass& c) { add_entry(pos, c.negated()); }

    // Alternating sum of the entries over total degree p+q.
    MotiveClass euler_class() const {
        MotiveClass out;
        for (const auto& [pos, c] : entries_)
            out += ((pos.p + pos.q) % 2 == 0) ? c : c.negated();
        return out;
    }

    bool operator==(const Page& o) const {
        return variance_ == o.variance_ && entries_ == o.entries_;
    }

private:
    Variance variance_;
    std::map<PagePos, MotiveClass> entries_;
};

// Target of d_r out of `src`: homological (p-r, q+r-1), cohomological
// (p+r, q-r+1).
inline PagePos diff_target(Variance v, PagePos src, int r) {
    if (v == Variance::homological)
        return {src.p - r, src.q + r - 1};
    return {src.p + r, src.q - r + 1};
}

// E^1-style assembly: entry (p, q) is the coefficient of t^(p+q) in the
// column polynomial at p.
inline Page assemble_page(const std::vector<std::pair<int, HGPoly>>& columns,
                          Variance v = Variance::homological) {
    Page page(v);
    std::set<int> seen;
    for (const auto& [p, poly] : columns) {
        if (!seen.insert(p).second)
            throw CalcError("assemble_page: duplicate column " + std::to_string(p));
        for (const auto& [deg, c] : poly.coeffs())
            page.add_entry({p, deg - p}, c);
    }
    return page;
}

// Outer-product page of a locally trivial fibration with a degreewise
// Kunneth E_2 term: entry (p, q) = base_p (x) fiber_q.
inline Page fibration_page(const HGPoly& base, const HGPoly& fiber) {
    Page page(Variance::cohomological);
    for (const auto& [p, cb] : base.coeffs())
        for (const auto& [q, cf] : fiber.coeffs())
            page.add_entry({p, q}, cb * cf);
    return page;
}

// Constituent-wise minimum of the source and target entries; the zero class
// is the "forced zero" certificate for the differential.
inline MotiveClass admissible_image(const Page& page, int r, PagePos src) {
    return MotiveClass::constituent_min(page.entry(src),
                                        page.entry(diff_target(page.variance(), src, r)));
}

struct DifferentialDecl {
    int r = 1;
    PagePos source;
    MotiveClass image;  // nonnegative; may be zero to mark a resolved position
};

struct ApplyResult {
    Page page;
    std::vector<std::string> warnings;  // unresolved nonzero admissible positions
};

namespace detail {

inline std::string first_constituent(const MotiveClass& c) {
    const auto& [k, m] = *c.terms().begin();
    return MotiveClass::term(k.rep, k.tate, m).str();
}

inline int page_r_span(const Page& page) {
    if (page.empty()) return 0;
    int pmin = 0, pmax = 0, qmin = 0, qmax = 0;
    bool first = true;
    for (const auto& [pos, c] : page.entries()) {
        if (first) {
            pmin = pmax = pos.p;
            qmin = qmax = pos.q;
            first = false;
        } else {
            pmin = std::min(pmin, pos.p);
            pmax = std::max(pmax, pos.p);
            qmin = std::min(qmin, pos.q);
            qmax = std::max(qmax, pos.q);
        }
    }
    return (pmax - pmin) + (qmax - qmin) + 1;
}

}  // namespace detail

// Applies the declared differentials page by page (all r = 2 together on
// the r = 2 page, and so on). Each image is validated against the entering
// page state; the images of one round are then subtracted simultaneously
// from their sources and targets.
inline ApplyResult apply_differentials(const Page& start,
                                       std::vector<DifferentialDecl> decls) {
    for (const auto& d : decls) {
        if (d.r < 1)
            throw CalcError("apply_differentials: page index r must be >= 1");
        if (!d.image.is_nonnegative())
            throw CalcError("apply_differentials: image at " + pos_str(d.source) +
                            " has a negative constituent");
    }
    std::stable_sort(decls.begin(), decls.end(),
                     [](const DifferentialDecl& a, const DifferentialDecl& b) {
                         if (a.r != b.r) return a.r < b.r;
                         return a.source < b.source;
                     });

    const MotiveClass euler_before = start.euler_class();
    Page page = start;
    std::size_t i = 0;
    while (i < decls.size()) {
        const int r = decls[i].r;
        const Page entering = page;
        for (; i < decls.size() && decls[i].r == r; ++i) {
            const auto& d = decls[i];
            if (d.image.is_zero()) continue;
            const MotiveClass adm = admissible_image(entering, r, d.source);
            if (!d.image.leq(adm)) {
                MotiveClass excess = d.image;
                excess -= adm;
                MotiveClass bad;
                for (const auto& [k, c] : excess.terms())
                    if (c > 0) { bad.add_term(k.rep, k.tate, c); break; }
                throw CalcError("differential d_" + std::to_string(r) + " at " +
                                pos_str(d.source) + ": image constituent " +
                                detail::first_constituent(bad) +
                                " exceeds the admissible image " + adm.str());
            }
            page.subtract_entry(d.source, d.image);
            page.subtract_entry(diff_target(page.variance(), d.source, r), d.image);
        }
        for (const auto& [pos, c] : page.entries())
            if (!c.is_nonnegative())
                throw CalcError("differentials on page r=" + std::to_string(r) +
                                " overdraw the entry at " + pos_str(pos));
    }

    MotiveClass euler_after = page.euler_class();
    euler_after -= euler_before;
    if (!euler_after.is_zero())
        throw CalcError("apply_differentials: Euler class not conserved");

    ApplyResult res{page, {}};
    const int rmax = detail::page_r_span(res.page);
    std::set<std::pair<int, PagePos>> declared;
    for (const auto& d : decls)
        declared.emplace(d.r, d.source);
    for (const auto& [pos, c] : res.page.entries()) {
        for (int r = 1; r <= rmax; ++r) {
            const MotiveClass adm = admissible_image(res.page, r, pos);
            if (adm.is_zero() || declared.count({r, pos}))
                continue;
            res.warnings.push_back("unresolved differential d_" + std::to_string(r) + " at " +
                                   pos_str(pos) + " -> " +
                                   pos_str(diff_target(res.page.variance(), pos, r)) +
                                   ", admissible image " + adm.str());
        }
    }
    return res;
}

// Abutment: coefficient of t^k is the sum of the entries with p+q = k.
inline HGPoly total_poly(const Page& page) {
    HGPoly out;
    for (const auto& [pos, c] : page.entries())
        out.add(pos.p + pos.q, c);
    return out;
}

// Renders the page in table form: rows q descending, columns p ascending,
// entries in canonical class form, zero entries as "0".
inline std::string render_page(const Page& page) {
    if (page.empty()) return "(empty)\n";
    int pmin = page.entries().begin()->first.p, pmax = pmin;
    int qmin = page.entries().begin()->first.q, qmax = qmin;
    for (const auto& [pos, c] : page.entries()) {
        pmin = std::min(pmin, pos.p);
        pmax = std::max(pmax, pos.p);
        qmin = std::min(qmin, pos.q);
        qmax = std::max(qmax, pos.q);
    }
    std::vector<std::string> qlabels;
    for (int q = qmax; q >= qmin; --q)
        qlabels.push_back("q=" + std::to_string(q));
    std::size_t w0 = 2;  // "p:"
    for (const auto& s : qlabels) w0 = std::max(w0, s.size());

    std::vector<std::size_t> colw;
    std::vector<std::vector<std::string>> cells;
    for (int p = pmin; p <= pmax; ++p) {
        std::vector<std::string> col;
        std::size_t w = std::to_string(p).size();
        for (int q = qmax; q >= qmin; --q) {
            col.push_back(page.entry({p, q}).str());
            w = std::max(w, col.back().size());
        }
        colw.push_back(w);
        cells.push_back(std::move(col));
    }

    auto pad = [](const std::string& s, std::size_t w) {
        return s + std::string(w - s.size(), ' ');
    };
    auto rstrip = [](std::string s) {
        while (!s.empty() && s.back() == ' ') s.pop_back();
        return s;
    };

    std::string out;
    for (int q = qmax; q >= qmin; --q) {
        const std::size_t row = static_cast<std::size_t>(qmax - q);
        std::string line = pad(qlabels[row], w0);
        for (std::size_t j = 0; j < cells.size(); ++j)
            line += " | " + pad(cells[j][row], colw[j]);
        out += rstrip(line) + "\n";
    }
    std::string plabel = pad("p:", w0);
    for (int p = pmin; p <= pmax; ++p)
        plabel += " | " + pad(std::to_string(p), colw[static_cast<std::size_t>(p - pmin)]);
    out += rstrip(plabel) + "\n";
    return out;
}

// ---------------------------------------------------------------------------
// Long exact sequence ledgers.
//
// bm mode is the Borel-Moore sequence of a closed pair A c X with open
// complement U:
//     ... -> A_k -> X_k -> U_k --delta_k--> A_(k-1) -> ...
// A connecting declaration at degree k gives the image of delta_k, a class
// inside both U_k and A_(k-1).
//
// gysin mode is the cohomological sequence of a closed smooth pair with the
// Tate-twisted residue term:
//     ... -> A_k -> X_k --gamma_k--> (L*U)_(k-1) -> A_(k+1) -> ...
// A connecting declaration at degree k gives the image of gamma_k, a class
// inside both X_k and L*U_(k-1).

enum class LesMode { bm, gysin };
enum class LesRole { A, X, U };

struct ConnectingDecl {
    int degree = 0;
    MotiveClass image;
};

struct LesProblem {
    LesMode mode = LesMode::bm;
    std::optional<HGPoly> a, x, u;
    std::vector<ConnectingDecl> connecting;
};

namespace detail {

inline MotiveClass connecting_image(const std::vector<ConnectingDecl>& decls, int degree) {
    MotiveClass out;
    for (const auto& d : decls)
        if (d.degree == degree) out += d.image;
    return out;
}

}  // namespace detail

namespace detail {

// Canonical shape: ... -> a_k -> x_k -> u_k --delta_k--> a_(k-1) -> ...
// with img_k the image of delta_k, so that degreewise
//     x_k = (a_k - img_(k+1)) + (u_k - img_k),
// both summands being genuine subquotients (hence nonnegative).
inline HGPoly les_solve_bm_shape(LesRole solve, const std::optional<HGPoly>& a,
                                 const std::optional<HGPoly>& x,
                                 const std::optional<HGPoly>& u,
                                 const std::vector<ConnectingDecl>& connecting) {
    int lo = 0, hi = 0;
    bool any = false;
    auto widen = [&](const std::optional<HGPoly>& p) {
        if (!p || p->is_zero()) return;
        if (!any) { lo = *p->min_degree(); hi = *p->max_degree(); any = true; }
        else { lo = std::min(lo, *p->min_degree()); hi = std::max(hi, *p->max_degree()); }
    };
    widen(a);
    widen(x);
    widen(u);
    for (const auto& d : connecting) {
        if (!any) { lo = hi = d.degree; any = true; }
        lo = std::min(lo, d.degree - 1);
        hi = std::max(hi, d.degree);
    }
    HGPoly solved;
    if (!any)
        return solved;

    for (int k = lo - 1; k <= hi + 1; ++k) {
        const MotiveClass img_k = connecting_image(connecting, k);
        const MotiveClass img_k1 = connecting_image(connecting, k + 1);
        MotiveClass v;
        switch (solve) {
            case LesRole::X: {
                MotiveClass left = a->coeff(k);
                left -= img_k1;
                if (!left.is_nonnegative())
                    throw CalcError("les_solve: connecting image exceeds a known term at degree " +
                                    std::to_string(k + 1));
                MotiveClass right = u->coeff(k);
                right -= img_k;
                if (!right.is_nonnegative())
                    throw CalcError("les_solve: connecting image exceeds a known term at degree " +
                                    std::to_string(k));
                v = left + right;
                break;
            }
            case LesRole::A: {
                // a_k = x_k - (u_k - img_k) + img_(k+1)
                MotiveClass right = u->coeff(k);
                right -= img_k;
                if (!right.is_nonnegative())
                    throw CalcError("les_solve: connecting image exceeds a known term at degree " +
                                    std::to_string(k));
                v = x->coeff(k);
                v -= right;
                v += img_k1;
                break;
            }
            case LesRole::U: {
                // u_k = x_k - (a_k - img_(k+1)) + img_k
                MotiveClass left = a->coeff(k);
                left -= img_k1;
                if (!left.is_nonnegative())
                    throw CalcError("les_solve: connecting image exceeds a known term at degree " +
                                    std::to_string(k + 1));
                v = x->coeff(k);
                v -= left;
                v += img_k;
                break;
            }
        }
        if (!v.is_nonnegative())
            throw CalcError("les_solve: negative multiplicity forced at degree " +
                            std::to_string(k));
        if (!v.is_zero())
            solved.add(k, v);
    }

    // Close the ledger: with all three terms known, re-check that every
    // image embeds in both neighbours and that the sequence is exact.
    const HGPoly& fa = a ? *a : solved;
    const HGPoly& fx = x ? *x : solved;
    const HGPoly& fu = u ? *u : solved;
    for (const auto& d : connecting) {
        MotiveClass img = connecting_image(connecting, d.degree);
        if (img.is_zero()) continue;
        if (!img.leq(fu.coeff(d.degree)) || !img.leq(fa.coeff(d.degree - 1)))
            throw CalcError("les_solve: connecting image at degree " +
                            std::to_string(d.degree) + " does not embed in the adjacent terms");
    }
    for (int k = lo - 1; k <= hi + 1; ++k) {
        MotiveClass want = fa.coeff(k);
        want -= connecting_image(connecting, k + 1);
        want += fu.coeff(k);
        want -= connecting_image(connecting, k);
        want -= fx.coeff(k);
        if (!want.is_zero())
            throw CalcError("les_solve: sequence not exact at degree " + std::to_string(k));
    }
    return solved;
}

}  // namespace detail

// Solves the missing term of a three-periodic exact sequence degreewise and
// validates every declared connecting image against both adjacent terms.
// Any forced negative multiplicity is an error naming the failing degree.
//
// In gysin mode the sequence
//     ... -> A_k -> X_k --gamma_k--> (L*U)_(k-1) -> A_(k+1) -> ...
// is the canonical shape read with the roles of A and X swapped, the
// residue term L*U shifted up by two degrees and the connecting
// declarations re-indexed by one.
inline HGPoly les_solve(const LesProblem& prob) {
    const int missing = (!prob.a ? 1 : 0) + (!prob.x ? 1 : 0) + (!prob.u ? 1 : 0);
    if (missing != 1)
        throw CalcError("les_solve: exactly one of A, X, U must be unknown");
    for (const auto& d : prob.connecting)
        if (!d.image.is_nonnegative())
            throw CalcError("les_solve: connecting image at degree " +
                            std::to_string(d.degree) + " has a negative constituent");

    const LesRole role = !prob.a ? LesRole::A : (!prob.x ? LesRole::X : LesRole::U);
    if (prob.mode == LesMode::bm)
        return detail::les_solve_bm_shape(role, prob.a, prob.x, prob.u, prob.connecting);

    std::optional<HGPoly> a2 = prob.x;
    std::optional<HGPoly> x2 = prob.a;
    std::optional<HGPoly> u2;
    if (prob.u) u2 = shift_t(tate_twist(*prob.u, 1), 2);
    std::vector<ConnectingDecl> conn = prob.connecting;
    for (auto& d : conn) ++d.degree;
    LesRole role2 = role == LesRole::A ? LesRole::X : (role == LesRole::X ? LesRole::A : LesRole::U);
    HGPoly solved = detail::les_solve_bm_shape(role2, a2, x2, u2, conn);
    if (role == LesRole::U)
        return tate_twist(shift_t(solved, -2), -1);
    return solved;
}

}  // namespace vgcalc
