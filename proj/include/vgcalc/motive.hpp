#pragma once

// The ring K_0 of S_n-equivariant Tate-type Hodge structures and Laurent
// polynomials over it. A MotiveClass is an integer combination of
// (irreducible, Tate power) pairs; L denotes the Tate generator, so a term
// with tate exponent e is "S_lambda * L^e". An HGPoly collects such classes
// as coefficients of powers of a single grading variable t. All arithmetic
// is exact; virtual (negative) coefficients are allowed.
//
// Classes with n = 0 are "plain" (no group action, every term a multiple
// of the unit); they combine with marked classes by promoting the unit to
// the trivial representation of the other side's n.

#include "vgcalc/sym_char.hpp"

#include <optional>
#include <utility>

namespace vgcalc {

struct MotiveKey {
    int tate = 0;
    Partition rep;

    bool operator==(const MotiveKey& o) const { return tate == o.tate && rep == o.rep; }
};

// Orders terms by tate exponent, then partition in reverse-lex order; this
// is the canonical rendering order.
struct MotiveKeyLess {
    bool operator()(const MotiveKey& a, const MotiveKey& b) const {
        if (a.tate != b.tate) return a.tate < b.tate;
        return b.rep < a.rep;
    }
};

class MotiveClass {
public:
    MotiveClass() = default;

    static MotiveClass term(const Partition& rep, int tate, i64 coeff = 1) {
        MotiveClass c;
        c.add_term(rep, tate, coeff);
        return c;
    }

    // c * L^tate with the unit (empty-partition) coefficient.
    static MotiveClass unit(int tate = 0, i64 coeff = 1) {
        return term(Partition(), tate, coeff);
    }

    int n() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<MotiveKey, i64, MotiveKeyLess>& terms() const { return terms_; }

    i64 coeff(const Partition& rep, int tate) const {
        auto it = terms_.find(MotiveKey{tate, rep});
        return it == terms_.end() ? 0 : it->second;
    }

    void add_term(const Partition& rep, int tate, i64 coeff) {
        if (coeff == 0) return;
        if (terms_.empty()) {
            n_ = rep.n();
        } else if (rep.n() != n_) {
            throw CalcError("MotiveClass: mismatched n (" + std::to_string(rep.n()) +
                            " vs " + std::to_string(n_) + ")");
        }
        auto [it, inserted] = terms_.emplace(MotiveKey{tate, rep}, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
        if (terms_.empty()) n_ = 0;
    }

    // Rewrites the unit partition as the trivial representation of S_n.
    MotiveClass promoted(int n) const {
        if (n_ == n || n == 0 || is_zero())
            return *this;
        if (n_ != 0)
            throw CalcError("MotiveClass: cannot promote n=" + std::to_string(n_) +
                            " to n=" + std::to_string(n));
        MotiveClass out;
        for (const auto& [k, c] : terms_)
            out.add_term(Partition::trivial(n), k.tate, c);
        return out;
    }

    MotiveClass& operator+=(const MotiveClass& o) {
        MotiveClass rhs = o;
        if (n_ != 0 && o.n() == 0) rhs = o.promoted(n_);
        if (n_ == 0 && o.n() != 0) *this = promoted(o.n());
        for (const auto& [k, c] : rhs.terms_) add_term(k.rep, k.tate, c);
        return *this;
    }

    MotiveClass& operator-=(const MotiveClass& o) { return *this += o.negated(); }

    MotiveClass negated() const {
        MotiveClass out = *this;
        for (auto& [k, c] : out.terms_) c = -c;
        return out;
    }

    MotiveClass scaled(i64 s) const {
        if (s == 0) return MotiveClass();
        MotiveClass out = *this;
        for (auto& [k, c] : out.terms_) c *= s;
        return out;
    }

    MotiveClass twisted(int m) const {
        MotiveClass out;
        out.n_ = n_;
        for (const auto& [k, c] : terms_)
            out.terms_.emplace(MotiveKey{k.tate + m, k.rep}, c);
        return out;
    }

    friend MotiveClass operator+(MotiveClass a, const MotiveClass& b) { return a += b; }
    friend MotiveClass operator-(MotiveClass a, const MotiveClass& b) { return a -= b; }

    // Kronecker product on representations, additive on Tate exponents.
    friend MotiveClass operator*(const MotiveClass& a, const MotiveClass& b) {
        if (a.is_zero() || b.is_zero())
            return MotiveClass();
        MotiveClass out;
        if (a.n() == 0 || b.n() == 0 || a.n() == b.n()) {
            for (const auto& [ka, ca] : a.terms_) {
                for (const auto& [kb, cb] : b.terms_) {
                    if (ka.rep.empty() || kb.rep.empty()) {
                        out.add_term(ka.rep.empty() ? kb.rep : ka.rep, ka.tate + kb.tate, ca * cb);
                    } else {
                        for (const auto& [pc, mc] : detail::kronecker_irreps(ka.rep, kb.rep).terms())
                            out.add_term(pc, ka.tate + kb.tate, ca * cb * mc);
                    }
                }
            }
            return out;
        }
        throw CalcError("MotiveClass: product of classes with mismatched n");
    }

    bool operator==(const MotiveClass& o) const {
        if (n_ == o.n_) return terms_ == o.terms_;
        if (n_ == 0) return promoted(o.n_) == o;
        if (o.n_ == 0) return *this == o.promoted(n_);
        return false;
    }

    // Constituent-wise minimum of the positive parts; used for admissible
    // differential images.
    static MotiveClass constituent_min(const MotiveClass& a, const MotiveClass& b) {
        MotiveClass out;
        for (const auto& [k, c] : a.terms_) {
            if (c <= 0) continue;
            i64 cb = b.coeff(k.rep, k.tate);
            i64 m = std::min(c, cb);
            if (m > 0) out.add_term(k.rep, k.tate, m);
        }
        return out;
    }

    bool is_nonnegative() const {
        for (const auto& [k, c] : terms_)
            if (c < 0) return false;
        return true;
    }

    // True when every multiplicity of *this is <= the matching one in o.
    bool leq(const MotiveClass& o) const {
        MotiveClass d = o;
        d -= *this;
        return d.is_nonnegative();
    }

    // Total dimension: sum of coeff * dim(S_lambda); the "rank" of a class.
    i64 dim() const {
        i64 total = 0;
        for (const auto& [k, c] : terms_)
            total += c * irrep_dimension(k.rep);
        return total;
    }

    std::string str() const;

private:
    int n_ = 0;
    std::map<MotiveKey, i64, MotiveKeyLess> terms_;
};

// Laurent polynomial in t with MotiveClass coefficients.
class HGPoly {
public:
    HGPoly() = default;

    static HGPoly from_class(const MotiveClass& c, int degree = 0) {
        HGPoly p;
        p.add(degree, c);
        return p;
    }

    static HGPoly unit(int n = 0) {
        return from_class(n == 0 ? MotiveClass::unit() : MotiveClass::term(Partition::trivial(n), 0));
    }

    int n() const { return n_; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::map<int, MotiveClass>& coeffs() const { return coeffs_; }

    MotiveClass coeff(int degree) const {
        auto it = coeffs_.find(degree);
        return it == coeffs_.end() ? MotiveClass() : it->second;
    }

    std::optional<int> min_degree() const {
        if (coeffs_.empty()) return std::nullopt;
        return coeffs_.begin()->first;
    }
    std::optional<int> max_degree() const {
        if (coeffs_.empty()) return std::nullopt;
        return coeffs_.rbegin()->first;
    }

    void add(int degree, const MotiveClass& c) {
        if (c.is_zero()) return;
        MotiveClass v = c;
        if (n_ != 0 && c.n() == 0) {
            v = c.promoted(n_);
        } else if (n_ == 0 && c.n() != 0) {
            *this = promoted(c.n());
        } else if (c.n() != n_ && n_ != 0) {
            throw CalcError("HGPoly: mismatched n");
        }
        auto [it, inserted] = coeffs_.emplace(degree, v);
        if (!inserted) {
            it->second += v;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
        if (n_ == 0 && !coeffs_.empty()) n_ = v.n();
        if (coeffs_.empty()) n_ = 0;
    }

    HGPoly promoted(int n) const {
        if (n_ == n || n == 0 || is_zero())
            return *this;
        HGPoly out;
        out.n_ = n;
        for (const auto& [d, c] : coeffs_)
            out.coeffs_.emplace(d, c.promoted(n));
        return out;
    }

    HGPoly& operator+=(const HGPoly& o) {
        for (const auto& [d, c] : o.coeffs_) add(d, c);
        return *this;
    }
    HGPoly& operator-=(const HGPoly& o) {
        for (const auto& [d, c] : o.coeffs_) add(d, c.negated());
        return *this;
    }

    HGPoly negated() const {
        HGPoly out = *this;
        for (auto& [d, c] : out.coeffs_) c = c.negated();
        return out;
    }

    HGPoly scaled(i64 s) const {
        if (s == 0) return HGPoly();
        HGPoly out = *this;
        for (auto& [d, c] : out.coeffs_) c = c.scaled(s);
        return out;
    }

    friend HGPoly operator+(HGPoly a, const HGPoly& b) { return a += b; }
    friend HGPoly operator-(HGPoly a, const HGPoly& b) { return a -= b; }

    friend HGPoly operator*(const HGPoly& a, const HGPoly& b) {
        HGPoly out;
        for (const auto& [da, ca] : a.coeffs_)
            for (const auto& [db, cb] : b.coeffs_)
                out.add(da + db, ca * cb);
        return out;
    }

    bool operator==(const HGPoly& o) const {
        if (n_ == o.n_) return coeffs_ == o.coeffs_;
        if (n_ == 0) return promoted(o.n_) == o;
        if (o.n_ == 0) return *this == o.promoted(n_);
        return false;
    }

    std::string str() const;

private:
    int n_ = 0;
    std::map<int, MotiveClass> coeffs_;
};

// t^k |-> t^(k+shift).
inline HGPoly shift_t(const HGPoly& p, int shift) {
    HGPoly out;
    for (const auto& [d, c] : p.coeffs()) out.add(d + shift, c);
    return out;
}

// Every term's tate exponent increased by m; t-degrees unchanged.
inline HGPoly tate_twist(const HGPoly& p, int m) {
    HGPoly out;
    for (const auto& [d, c] : p.coeffs()) out.add(d, c.twisted(m));
    return out;
}

// t |-> t^-1.
inline HGPoly t_reverse(const HGPoly& p) {
    HGPoly out;
    for (const auto& [d, c] : p.coeffs()) out.add(-d, c);
    return out;
}

// Borel-Moore polynomial of a smooth variety of complex dimension n_dim
// from its cohomology polynomial: bm(t) = L^-n_dim * t^(2 n_dim) * coh(1/t).
inline HGPoly poincare_dual_bm(const HGPoly& coh, int n_dim) {
    return tate_twist(shift_t(t_reverse(coh), 2 * n_dim), -n_dim);
}

// Inverse transform: coh(t) = L^n_dim * t^(2 n_dim) * bm(1/t).
inline HGPoly poincare_dual_coh(const HGPoly& bm, int n_dim) {
    return tate_twist(shift_t(t_reverse(bm), 2 * n_dim), n_dim);
}

// Reduced cohomology of the complement in an affine space of dimension M,
// from the Borel-Moore polynomial of the closed subvariety:
// coh(t) = L^M * t^(2M-1) * bm(1/t).
inline HGPoly alexander_dual(const HGPoly& bm, int M) {
    if (M < 1)
        throw CalcError("alexander_dual: M must be >= 1");
    return tate_twist(shift_t(t_reverse(bm), 2 * M - 1), M);
}

// Adds the degree-0 trivial class, turning a reduced polynomial into the
// un-reduced one.
inline HGPoly with_unit(const HGPoly& reduced, int n) {
    HGPoly out = reduced;
    out.add(0, n == 0 ? MotiveClass::unit() : MotiveClass::term(Partition::trivial(n), 0));
    return out;
}

// Exact division, lowest t-degree first. The divisor's lowest coefficient
// must be invertible: a single unit-partition/trivial term with coefficient
// +-1 and one Tate power.
inline HGPoly exact_divide(const HGPoly& p, const HGPoly& d) {
    if (d.is_zero())
        throw CalcError("exact_divide: divisor is zero");
    const int d0 = *d.min_degree();
    const MotiveClass lead = d.coeff(d0);
    if (lead.terms().size() != 1)
        throw CalcError("exact_divide: divisor lowest term not invertible");
    const auto& [lead_key, lead_coeff] = *lead.terms().begin();
    const bool trivial_rep =
        lead_key.rep.empty() || lead_key.rep == Partition::trivial(lead_key.rep.n());
    if (!trivial_rep || (lead_coeff != 1 && lead_coeff != -1))
        throw CalcError("exact_divide: divisor lowest term not invertible");

    if (p.is_zero())
        return HGPoly();
    const int max_qdeg = *p.max_degree() - *d.max_degree();
    HGPoly q;
    HGPoly r = p;
    while (!r.is_zero()) {
        const int dr = *r.min_degree();
        const int qdeg = dr - d0;
        if (qdeg > max_qdeg)
            throw CalcError("exact_divide: not divisible, first failing degree " +
                            std::to_string(dr));
        const MotiveClass qc = r.coeff(dr).twisted(-lead_key.tate).scaled(lead_coeff);
        const HGPoly qterm = HGPoly::from_class(qc, qdeg);
        q += qterm;
        r -= qterm * d;
    }
    return q;
}

// Evaluation at t = -1: the Euler class in K_0.
inline MotiveClass euler_class(const HGPoly& p) {
    MotiveClass out;
    for (const auto& [d, c] : p.coeffs())
        out += (d % 2 == 0) ? c : c.negated();
    return out;
}

// Forgets the Tate twist and replaces each irreducible by its dimension;
// the result is a plain integer Laurent polynomial in t (an n = 0 HGPoly).
inline HGPoly betti(const HGPoly& p) {
    HGPoly out;
    for (const auto& [d, c] : p.coeffs()) {
        i64 dim = c.dim();
        if (dim != 0) out.add(d, MotiveClass::unit(0, dim));
    }
    return out;
}

// betti evaluated at t = -1: the topological Euler characteristic.
inline i64 euler_characteristic(const HGPoly& p) {
    i64 total = 0;
    for (const auto& [d, c] : p.coeffs())
        total += (d % 2 == 0) ? c.dim() : -c.dim();
    return total;
}

// ---------------------------------------------------------------------------
// Canonical text rendering.

namespace detail {

// One scalar term without its sign: pieces joined by '*', e.g. "2*s[2]*L^-3".
inline std::string term_body(i64 coeff, const Partition& rep, int tate, int tdeg) {
    std::string s;
    const i64 a = coeff < 0 ? -coeff : coeff;
    auto append = [&s](const std::string& piece) {
        if (!s.empty()) s += '*';
        s += piece;
    };
    if (a != 1) append(std::to_string(a));
    if (!rep.empty()) append("s[" + rep.str() + "]");
    if (tate == 1) append("L");
    else if (tate != 0) append("L^" + std::to_string(tate));
    if (tdeg == 1) append("t");
    else if (tdeg != 0) append("t^" + std::to_string(tdeg));
    if (s.empty()) s = "1";
    return s;
}

// The representation group of one (tate, degree) cell, e.g. "(s[2]+s[1,1])".
// `group` maps partitions (reverse-lex order) to coefficients.
inline std::string group_str(const std::vector<std::pair<Partition, i64>>& group, int tate,
                             int tdeg) {
    if (group.size() == 1)
        return std::string(group[0].second < 0 ? "-" : "") +
               term_body(group[0].second, group[0].first, tate, tdeg);
    std::string inner;
    for (std::size_t i = 0; i < group.size(); ++i) {
        const auto& [rep, c] = group[i];
        if (i == 0)
            inner += (c < 0 ? "-" : "");
        else
            inner += (c < 0 ? "-" : "+");
        inner += term_body(c, rep, 0, 0);
    }
    std::string factors;
    if (tate == 1) factors = "L";
    else if (tate != 0) factors = "L^" + std::to_string(tate);
    if (tdeg == 1) factors += std::string(factors.empty() ? "" : "*") + "t";
    else if (tdeg != 0) factors += std::string(factors.empty() ? "" : "*") + "t^" + std::to_string(tdeg);
    if (factors.empty())
        return inner;
    return "(" + inner + ")*" + factors;
}

// Appends one rendered group to a polynomial string with " + "/" - " joins.
inline void join_term(std::string& out, const std::string& term) {
    if (out.empty()) {
        out = term;
    } else if (term.size() > 1 && term[0] == '-') {
        out += " - " + term.substr(1);
    } else {
        out += " + " + term;
    }
}

inline void render_class_into(std::string& out, const MotiveClass& c, int tdeg) {
    // group terms by tate exponent (map order: tate asc, partitions revlex)
    auto it = c.terms().begin();
    while (it != c.terms().end()) {
        const int tate = it->first.tate;
        std::vector<std::pair<Partition, i64>> group;
        for (; it != c.terms().end() && it->first.tate == tate; ++it)
            group.emplace_back(it->first.rep, it->second);
        join_term(out, group_str(group, tate, tdeg));
    }
}

}  // namespace detail

inline std::string MotiveClass::str() const {
    if (is_zero()) return "0";
    std::string out;
    detail::render_class_into(out, *this, 0);
    return out;
}

inline std::string HGPoly::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (const auto& [d, c] : coeffs_)
        detail::render_class_into(out, c, d);
    return out;
}

}  // namespace vgcalc
