#pragma once

// Exact character theory for symmetric groups S_n, n <= 8: partitions,
// irreducible characters via the Murnaghan-Nakayama recursion, Kronecker
// products and invariant extraction. Everything is computed over exact
// 64-bit integers; the n <= 8 cap keeps all factorials and character sums
// far inside the representable range.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace vgcalc {

using i64 = std::int64_t;

struct CalcError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

constexpr int kMaxN = 8;

// A partition of n, stored as a weakly decreasing list of positive parts.
// The empty partition (n = 0) is allowed and acts as the scalar unit in
// every representation-theoretic product.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        std::sort(parts_.begin(), parts_.end(), std::greater<int>());
        int sum = 0;
        for (int p : parts_) {
            if (p < 1)
                throw CalcError("partition parts must be positive");
            sum += p;
        }
        if (sum > kMaxN)
            throw CalcError("partition of n > " + std::to_string(kMaxN) + " not supported");
        n_ = sum;
    }

    // The one-row partition (n); () for n = 0.
    static Partition trivial(int n) {
        if (n == 0)
            return Partition();
        return Partition(std::vector<int>{n});
    }

    static Partition sign_rep(int n) {
        return Partition(std::vector<int>(static_cast<std::size_t>(n), 1));
    }

    int n() const { return n_; }
    bool empty() const { return parts_.empty(); }
    const std::vector<int>& parts() const { return parts_; }

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    // Lexicographic on the part lists; with std::greater this iterates
    // partitions of a fixed n in the usual reverse-lexicographic order
    // ((n) first, (1^n) last).
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(parts_[i]);
        }
        return s;
    }

private:
    std::vector<int> parts_;
    int n_ = 0;
};

struct PartitionGreater {
    bool operator()(const Partition& a, const Partition& b) const { return b < a; }
};

// All partitions of n in reverse-lexicographic order, e.g.
// partitions_of(4) = (4), (3,1), (2,2), (2,1,1), (1,1,1,1).
inline std::vector<Partition> partitions_of(int n) {
    if (n < 1 || n > kMaxN)
        throw CalcError("partitions_of: n must be in 1.." + std::to_string(kMaxN));
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest, int maxpart) -> void {
        if (rest == 0) {
            out.push_back(Partition(cur));
            return;
        }
        for (int p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

inline i64 factorial(int n) {
    i64 f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// Size of the conjugacy class of cycle type mu, from the centralizer-order
// formula |class| = n! / prod_j j^{m_j} m_j!.
inline i64 class_size(const Partition& mu) {
    std::map<int, int> mult;
    for (int p : mu.parts()) ++mult[p];
    i64 z = 1;
    for (auto [part, m] : mult) {
        for (int i = 0; i < m; ++i) z *= part;
        z *= factorial(m);
    }
    return factorial(mu.n()) / z;
}

namespace detail {

// Murnaghan-Nakayama step on the beta-set encoding: removing a border strip
// of length r is subtracting r from one beta number, with sign given by the
// number of beta numbers jumped over.
inline i64 mn_character(const std::vector<int>& lambda, const std::vector<int>& mu) {
    if (mu.empty())
        return lambda.empty() ? 1 : 0;
    const int r = mu.front();
    const std::vector<int> rest(mu.begin() + 1, mu.end());
    const int len = static_cast<int>(lambda.size());
    std::vector<int> beta(lambda.size());
    for (int i = 0; i < len; ++i)
        beta[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + (len - 1 - i);
    std::set<int> beta_set(beta.begin(), beta.end());

    i64 total = 0;
    for (int b : beta) {
        const int b2 = b - r;
        if (b2 < 0 || beta_set.count(b2))
            continue;
        int jumped = 0;
        for (int c : beta)
            if (c > b2 && c < b) ++jumped;
        std::vector<int> nb;
        nb.reserve(beta.size());
        for (int c : beta)
            nb.push_back(c == b ? b2 : c);
        std::sort(nb.begin(), nb.end(), std::greater<int>());
        std::vector<int> nl;
        const int nlen = static_cast<int>(nb.size());
        for (int i = 0; i < nlen; ++i) {
            const int part = nb[static_cast<std::size_t>(i)] - (nlen - 1 - i);
            if (part > 0) nl.push_back(part);
        }
        const i64 sign = (jumped % 2) ? -1 : 1;
        total += sign * mn_character(nl, rest);
    }
    return total;
}

struct CharTable {
    std::vector<Partition> parts;                 // row/column index
    std::map<Partition, int, PartitionGreater> index;
    std::vector<std::vector<i64>> chi;            // chi[lambda][mu]
    std::vector<i64> cls;                         // |class mu|
};

inline const CharTable& char_table(int n) {
    static const std::vector<CharTable> tables = [] {
        std::vector<CharTable> ts(kMaxN + 1);
        for (int n = 1; n <= kMaxN; ++n) {
            CharTable& t = ts[static_cast<std::size_t>(n)];
            t.parts = partitions_of(n);
            const std::size_t m = t.parts.size();
            for (std::size_t i = 0; i < m; ++i)
                t.index.emplace(t.parts[i], static_cast<int>(i));
            t.chi.assign(m, std::vector<i64>(m, 0));
            t.cls.resize(m);
            for (std::size_t j = 0; j < m; ++j)
                t.cls[j] = class_size(t.parts[j]);
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < m; ++j)
                    t.chi[i][j] = mn_character(t.parts[i].parts(), t.parts[j].parts());
        }
        return ts;
    }();
    if (n < 1 || n > kMaxN)
        throw CalcError("character table: n out of range");
    return tables[static_cast<std::size_t>(n)];
}

}  // namespace detail

// chi_lambda evaluated on the conjugacy class of cycle type mu.
inline i64 character_value(const Partition& lambda, const Partition& mu) {
    if (lambda.n() != mu.n())
        throw CalcError("character_value: partitions of different n");
    if (lambda.n() == 0)
        return 1;
    const auto& t = detail::char_table(lambda.n());
    return t.chi[static_cast<std::size_t>(t.index.at(lambda))]
                [static_cast<std::size_t>(t.index.at(mu))];
}

// dim S_lambda = chi_lambda(identity).
inline i64 irrep_dimension(const Partition& lambda) {
    if (lambda.n() == 0)
        return 1;
    return character_value(lambda, Partition::sign_rep(lambda.n()));
}

// A virtual representation of S_n: an integer combination of irreducibles.
// Zero entries are dropped; the zero vector is compatible with every n.
class RepVector {
public:
    RepVector() = default;

    static RepVector irrep(const Partition& lambda, i64 mult = 1) {
        RepVector v;
        v.add_term(lambda, mult);
        return v;
    }

    int n() const { return n_; }
    bool is_zero() const { return mult_.empty(); }
    const std::map<Partition, i64, PartitionGreater>& terms() const { return mult_; }

    i64 multiplicity(const Partition& lambda) const {
        auto it = mult_.find(lambda);
        return it == mult_.end() ? 0 : it->second;
    }

    void add_term(const Partition& lambda, i64 mult) {
        if (mult == 0) return;
        if (mult_.empty())
            n_ = lambda.n();
        else if (lambda.n() != n_)
            throw CalcError("RepVector: mixed n");
        auto [it, inserted] = mult_.emplace(lambda, mult);
        if (!inserted) {
            it->second += mult;
            if (it->second == 0) mult_.erase(it);
        }
        if (mult_.empty()) n_ = 0;
    }

    RepVector& operator+=(const RepVector& o) {
        for (const auto& [p, m] : o.mult_) add_term(p, m);
        return *this;
    }

    friend RepVector operator+(RepVector a, const RepVector& b) { return a += b; }

    bool operator==(const RepVector& o) const { return mult_ == o.mult_; }

private:
    std::map<Partition, i64, PartitionGreater> mult_;
    int n_ = 0;
};

namespace detail {

// Decomposition of S_lambda (x) S_mu, memoized per n as a full table.
inline const RepVector& kronecker_irreps(const Partition& a, const Partition& b) {
    struct PairTable {
        std::vector<std::vector<RepVector>> prod;
    };
    static const std::vector<PairTable> tables = [] {
        std::vector<PairTable> ts(kMaxN + 1);
        for (int n = 1; n <= kMaxN; ++n) {
            const CharTable& ct = char_table(n);
            const std::size_t m = ct.parts.size();
            const i64 nfact = factorial(n);
            PairTable& pt = ts[static_cast<std::size_t>(n)];
            pt.prod.assign(m, std::vector<RepVector>(m));
            for (std::size_t i = 0; i < m; ++i) {
                for (std::size_t j = i; j < m; ++j) {
                    RepVector v;
                    for (std::size_t k = 0; k < m; ++k) {
                        i64 sum = 0;
                        for (std::size_t c = 0; c < m; ++c)
                            sum += ct.cls[c] * ct.chi[i][c] * ct.chi[j][c] * ct.chi[k][c];
                        if (sum % nfact != 0)
                            throw CalcError("kronecker: inner product not divisible by n!");
                        if (sum != 0)
                            v.add_term(ct.parts[k], sum / nfact);
                    }
                    pt.prod[i][j] = v;
                    pt.prod[j][i] = v;
                }
            }
        }
        return ts;
    }();
    const CharTable& ct = char_table(a.n());
    return tables[static_cast<std::size_t>(a.n())]
        .prod[static_cast<std::size_t>(ct.index.at(a))][static_cast<std::size_t>(ct.index.at(b))];
}

}  // namespace detail

// Tensor product of S_n-representations, extended bilinearly.
inline RepVector kronecker(const RepVector& a, const RepVector& b) {
    if (a.is_zero() || b.is_zero())
        return RepVector();
    if (a.n() != b.n())
        throw CalcError("kronecker: mismatched n");
    RepVector out;
    for (const auto& [pa, ma] : a.terms())
        for (const auto& [pb, mb] : b.terms())
            for (const auto& [pc, mc] : detail::kronecker_irreps(pa, pb).terms())
                out.add_term(pc, ma * mb * mc);
    return out;
}

// Multiplicity of the trivial representation (the partition (n)).
inline i64 invariant_multiplicity(const RepVector& a) {
    if (a.is_zero())
        return 0;
    return a.multiplicity(Partition::trivial(a.n()));
}

}  // namespace vgcalc
