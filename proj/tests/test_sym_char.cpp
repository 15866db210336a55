#include "vgcalc/sym_char.hpp"

#include "doctest.h"

#include <random>
#include <thread>

using namespace vgcalc;

namespace {

Partition part(std::vector<int> p) { return Partition(std::move(p)); }

// Independent dimension oracle: n! / product of hook lengths.
i64 hook_length_dimension(const Partition& lambda) {
    const auto& parts = lambda.parts();
    i64 hooks = 1;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        for (int j = 0; j < parts[i]; ++j) {
            int arm = parts[i] - j - 1;
            int leg = 0;
            for (std::size_t k = i + 1; k < parts.size(); ++k)
                if (parts[k] > j) ++leg;
            hooks *= arm + leg + 1;
        }
    }
    return factorial(lambda.n()) / hooks;
}

// Independent class-size oracle: enumerate all n! permutations and count
// cycle types.
std::map<Partition, i64, PartitionGreater> brute_force_class_sizes(int n) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
    std::map<Partition, i64, PartitionGreater> counts;
    do {
        std::vector<bool> seen(static_cast<std::size_t>(n), false);
        std::vector<int> cycles;
        for (int i = 0; i < n; ++i) {
            if (seen[static_cast<std::size_t>(i)]) continue;
            int len = 0, j = i;
            while (!seen[static_cast<std::size_t>(j)]) {
                seen[static_cast<std::size_t>(j)] = true;
                j = perm[static_cast<std::size_t>(j)];
                ++len;
            }
            cycles.push_back(len);
        }
        ++counts[Partition(cycles)];
    } while (std::next_permutation(perm.begin(), perm.end()));
    return counts;
}

RepVector random_rep(std::mt19937& rng, int n, int max_abs = 3) {
    const auto parts = partitions_of(n);
    std::uniform_int_distribution<int> pick(-max_abs, max_abs);
    RepVector v;
    for (const auto& p : parts) v.add_term(p, pick(rng));
    return v;
}

}  // namespace

TEST_CASE("partitions_of enumerates in reverse-lexicographic order") {
    auto p2 = partitions_of(2);
    REQUIRE(p2.size() == 2);
    CHECK(p2[0] == part({2}));
    CHECK(p2[1] == part({1, 1}));

    CHECK(partitions_of(1) == std::vector<Partition>{part({1})});
    CHECK(partitions_of(4).size() == 5);
    CHECK(partitions_of(7).size() == 15);
    CHECK(partitions_of(8).size() == 22);

    auto p6 = partitions_of(6);
    CHECK(p6.size() == 11);
    for (std::size_t i = 1; i < p6.size(); ++i)
        CHECK(p6[i] < p6[i - 1]);  // strictly decreasing in lex order

    CHECK_THROWS_AS(partitions_of(0), CalcError);
    CHECK_THROWS_AS(partitions_of(9), CalcError);
}

TEST_CASE("class sizes agree with permutation enumeration and sum to n!") {
    for (int n = 1; n <= 5; ++n) {
        auto brute = brute_force_class_sizes(n);
        i64 sum = 0;
        for (const auto& mu : partitions_of(n)) {
            CHECK(class_size(mu) == brute.at(mu));
            sum += class_size(mu);
        }
        CHECK(sum == factorial(n));
    }
}

TEST_CASE("character values: known small cases") {
    // sign character on a transposition
    CHECK(character_value(part({1, 1}), part({2})) == -1);
    // trivial character is 1 everywhere
    for (int n = 1; n <= 6; ++n)
        for (const auto& mu : partitions_of(n))
            CHECK(character_value(Partition::trivial(n), mu) == 1);
    // standard representation of S_3 at the identity
    CHECK(character_value(part({2, 1}), part({1, 1, 1})) == 2);
}

TEST_CASE("character table of S_3 matches the classical table") {
    // rows (3), (2,1), (1,1,1); columns (1^3), (2,1), (3)
    const Partition id3 = part({1, 1, 1}), tr = part({2, 1}), cyc = part({3});
    CHECK(character_value(part({3}), id3) == 1);
    CHECK(character_value(part({3}), tr) == 1);
    CHECK(character_value(part({3}), cyc) == 1);
    CHECK(character_value(part({2, 1}), id3) == 2);
    CHECK(character_value(part({2, 1}), tr) == 0);
    CHECK(character_value(part({2, 1}), cyc) == -1);
    CHECK(character_value(part({1, 1, 1}), id3) == 1);
    CHECK(character_value(part({1, 1, 1}), tr) == -1);
    CHECK(character_value(part({1, 1, 1}), cyc) == 1);
}

TEST_CASE("dimension at the identity equals the hook-length formula") {
    for (int n = 1; n <= 8; ++n)
        for (const auto& lam : partitions_of(n))
            CHECK(irrep_dimension(lam) == hook_length_dimension(lam));
}

TEST_CASE("character orthogonality for n <= 5") {
    for (int n = 1; n <= 5; ++n) {
        const auto parts = partitions_of(n);
        const i64 nfact = factorial(n);
        for (const auto& a : parts) {
            for (const auto& b : parts) {
                i64 sum = 0;
                for (const auto& mu : parts)
                    sum += class_size(mu) * character_value(a, mu) * character_value(b, mu);
                CHECK(sum == (a == b ? nfact : 0));
            }
        }
    }
}

TEST_CASE("kronecker: small known products") {
    const Partition s2 = part({2}), s11 = part({1, 1});
    CHECK(kronecker(RepVector::irrep(s11), RepVector::irrep(s11)) == RepVector::irrep(s2));
    CHECK(kronecker(RepVector::irrep(s2), RepVector::irrep(s11)) == RepVector::irrep(s11));

    const Partition s21 = part({2, 1});
    RepVector expect = RepVector::irrep(part({3})) + RepVector::irrep(s21) +
                       RepVector::irrep(part({1, 1, 1}));
    CHECK(kronecker(RepVector::irrep(s21), RepVector::irrep(s21)) == expect);

    RepVector a = RepVector::irrep(s2);
    RepVector b;
    b.add_term(part({3}), 1);
    CHECK_THROWS_AS(kronecker(a, b), CalcError);
}

TEST_CASE("kronecker is commutative and associative with the trivial unit") {
    std::mt19937 rng(20240811);
    for (int iter = 0; iter < 1200; ++iter) {
        const int n = 1 + iter % 4;
        RepVector a = random_rep(rng, n), b = random_rep(rng, n), c = random_rep(rng, n);
        CHECK(kronecker(a, b) == kronecker(b, a));
        CHECK(kronecker(kronecker(a, b), c) == kronecker(a, kronecker(b, c)));
        CHECK(kronecker(a, RepVector::irrep(Partition::trivial(n))) == a);
    }
}

TEST_CASE("invariant multiplicity") {
    const Partition s2 = part({2}), s11 = part({1, 1});
    CHECK(invariant_multiplicity(RepVector::irrep(s2) + RepVector::irrep(s11)) == 1);
    CHECK(invariant_multiplicity(RepVector::irrep(s11, 2)) == 0);

    // regular representation of S_3
    RepVector reg = RepVector::irrep(part({3})) + RepVector::irrep(part({2, 1}), 2) +
                    RepVector::irrep(part({1, 1, 1}));
    CHECK(invariant_multiplicity(reg) == 1);
    // oracle: average of the regular character over the group
    i64 avg = 0;
    for (const auto& mu : partitions_of(3)) {
        i64 chi = 0;
        for (const auto& [lam, m] : reg.terms()) chi += m * character_value(lam, mu);
        avg += class_size(mu) * chi;
    }
    CHECK(avg / factorial(3) == 1);
}

TEST_CASE("character and product tables are safe for concurrent readers") {
    std::vector<i64> sums(8, 0);
    std::vector<std::thread> threads;
    for (int tid = 0; tid < 8; ++tid) {
        threads.emplace_back([tid, &sums] {
            i64 acc = 0;
            for (int n = 2; n <= 6; ++n) {
                for (const auto& a : partitions_of(n)) {
                    for (const auto& b : partitions_of(n)) {
                        RepVector prod = kronecker(RepVector::irrep(a), RepVector::irrep(b));
                        acc += invariant_multiplicity(prod);
                        acc += character_value(a, b);
                    }
                }
            }
            sums[static_cast<std::size_t>(tid)] = acc;
        });
    }
    for (auto& th : threads) th.join();
    for (int tid = 1; tid < 8; ++tid)
        CHECK(sums[static_cast<std::size_t>(tid)] == sums[0]);
}

TEST_CASE("invariants of a tensor square count endomorphisms") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> pick(0, 2);
    for (int iter = 0; iter < 1000; ++iter) {
        const int n = 2 + iter % 3;
        RepVector a;  // genuine (nonnegative) representation
        for (const auto& p : partitions_of(n)) a.add_term(p, pick(rng));
        i64 expect = 0;
        for (const auto& [p, m] : a.terms()) expect += m * m;
        CHECK(invariant_multiplicity(kronecker(a, a)) == expect);
        CHECK(invariant_multiplicity(kronecker(a, a)) >= 0);
    }
}
