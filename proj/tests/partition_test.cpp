#include <gtest/gtest.h>

#include "helpers.hpp"

using namespace schubert;

namespace {

long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

} // namespace

TEST(Partition, StripsZerosAndRejectsBadParts) {
    EXPECT_EQ(Partition({3, 1, 0, 0}), Partition({3, 1}));
    EXPECT_EQ(Partition({0}).length(), 0u);
    EXPECT_THROW(Partition({1, 2}), PreconditionError);
    EXPECT_THROW(Partition({2, -1}), PreconditionError);
    EXPECT_THROW(StrictPartition({2, 2}), PreconditionError);
    EXPECT_EQ(Partition({3, 1}).weight(), 4);
    EXPECT_EQ(Partition({3, 1})[5], 0);
    EXPECT_EQ(Partition({3, 1}).to_string(), "[3,1]");
}

TEST(Partition, ConjugateExamples) {
    EXPECT_EQ(conjugate(Partition({3, 1})), Partition({2, 1, 1}));
    EXPECT_EQ(conjugate(Partition()), Partition());
    EXPECT_EQ(conjugate(Partition({2, 2})), Partition({2, 2}));
}

TEST(Partition, ConjugateIsAnInvolutionUpToWeight12) {
    for (int d = 0; d <= 12; ++d)
        for (const auto& p : enumerate_partitions(d)) {
            EXPECT_EQ(conjugate(conjugate(p)), p);
            EXPECT_EQ(conjugate(p).weight(), d);
        }
}

TEST(Partition, RectangleDualExamples) {
    EXPECT_EQ(rectangle_dual(Partition({1}), 2, 4), Partition({2, 1}));
    EXPECT_EQ(rectangle_dual(Partition(), 2, 4), Partition({2, 2}));
    EXPECT_EQ(rectangle_dual(Partition({2, 2}), 2, 4), Partition());
    EXPECT_THROW(rectangle_dual(Partition({3}), 2, 4), PreconditionError);
    EXPECT_THROW(rectangle_dual(Partition({1, 1, 1}), 2, 4), PreconditionError);
}

TEST(Partition, RectangleDualIsAnInvolution) {
    for (int n = 2; n <= 6; ++n)
        for (int r = 1; r < n; ++r)
            for (int d = 0; d <= r * (n - r); ++d)
                for (const auto& p : enumerate_partitions(d, n - r, r)) {
                    const Partition q = rectangle_dual(p, r, n);
                    EXPECT_EQ(p.weight() + q.weight(), r * (n - r));
                    EXPECT_EQ(rectangle_dual(q, r, n), p);
                }
}

TEST(Partition, StrictComplementExamples) {
    EXPECT_EQ(strict_complement(StrictPartition({1}), 2), StrictPartition({2}));
    for (int n = 1; n <= 5; ++n) EXPECT_EQ(strict_complement(staircase(n), n), StrictPartition());
    EXPECT_EQ(strict_complement(StrictPartition({3, 1}), 3), StrictPartition({2}));
    EXPECT_THROW(strict_complement(StrictPartition({4}), 3), PreconditionError);
}

TEST(Partition, StrictComplementIsAnInvolution) {
    for (int n = 1; n <= 6; ++n)
        for (int d = 0; d <= n * (n + 1) / 2; ++d)
            for (const auto& mu : enumerate_strict_partitions(d, n)) {
                const StrictPartition c = strict_complement(mu, n);
                EXPECT_EQ(mu.weight() + c.weight(), n * (n + 1) / 2);
                EXPECT_EQ(strict_complement(c, n), mu);
            }
}

TEST(Partition, EnumerationExamplesAndOrder) {
    EXPECT_EQ(enumerate_partitions(2), (std::vector<Partition>{Partition({2}), Partition({1, 1})}));
    EXPECT_EQ(enumerate_partitions(4, 2),
              (std::vector<Partition>{Partition({2, 2}), Partition({2, 1, 1}), Partition({1, 1, 1, 1})}));
    EXPECT_EQ(enumerate_partitions(0), std::vector<Partition>{Partition()});
    EXPECT_EQ(enumerate_partitions(4, std::nullopt, 2),
              (std::vector<Partition>{Partition({4}), Partition({3, 1}), Partition({2, 2})}));
}

TEST(Partition, PartitionNumbers) {
    const std::vector<std::size_t> p{1, 1, 2, 3, 5, 7, 11, 15, 22, 30};
    for (int d = 0; d < 10; ++d) EXPECT_EQ(enumerate_partitions(d).size(), p[static_cast<std::size_t>(d)]) << d;
}

TEST(Partition, StrictEnumeration) {
    EXPECT_EQ(enumerate_strict_partitions(3, 3), (std::vector<StrictPartition>{StrictPartition({3}), StrictPartition({2, 1})}));
    EXPECT_EQ(enumerate_strict_partitions(3, 2), std::vector<StrictPartition>{StrictPartition({2, 1})});
    std::size_t total = 0;
    for (int d = 0; d <= 10; ++d) total += enumerate_strict_partitions(d, 4).size();
    EXPECT_EQ(total, 16u);  // subsets of {1,2,3,4}
}

TEST(Partition, GlobalOrder) {
    GlobalOrder o;
    EXPECT_TRUE(o(Partition({3}), Partition({2, 1})));
    EXPECT_TRUE(o(Partition({2, 1}), Partition({1, 1, 1})));
    EXPECT_TRUE(o(Partition({1, 1, 1}), Partition({4})));
}

TEST(Tableaux, Examples) {
    EXPECT_EQ(enumerate_ssyt(Partition({2}), 2).size(), 3u);
    EXPECT_EQ(enumerate_ssyt(Partition({1, 1}), 2).size(), 1u);
    EXPECT_EQ(enumerate_ssyt(Partition({2, 1}), 2).size(), 2u);
    EXPECT_EQ(enumerate_ssyt(Partition({2, 1}), 3).size(), 8u);
    const auto t = enumerate_ssyt(Partition({2}), 2);
    EXPECT_EQ(t[0].rows, (std::vector<std::vector<int>>{{1, 1}}));
    EXPECT_EQ(t[2].rows, (std::vector<std::vector<int>>{{2, 2}}));
}

TEST(Tableaux, CountsMatchBinomials) {
    for (int n = 1; n <= 5; ++n)
        for (int k = 1; k <= 5; ++k) {
            EXPECT_EQ(static_cast<long>(enumerate_ssyt(Partition(std::vector<int>(static_cast<std::size_t>(k), 1)), n).size()),
                      binomial(n, k));
            EXPECT_EQ(static_cast<long>(enumerate_ssyt(Partition({k}), n).size()), binomial(n + k - 1, k));
        }
}

TEST(Tableaux, AllEnumeratedAreSemistandardAndDistinct) {
    for (const auto& shape : enumerate_partitions(4))
        for (int n = 1; n <= 3; ++n) {
            const auto all = enumerate_ssyt(shape, n);
            for (std::size_t i = 0; i < all.size(); ++i) {
                EXPECT_TRUE(all[i].is_semistandard(n));
                for (std::size_t j = i + 1; j < all.size(); ++j) EXPECT_FALSE(all[i] == all[j]);
            }
        }
}

TEST(Hook, Convention) {
    // lambda fits the (n,m)-hook iff lambda_{n+1} <= m
    EXPECT_TRUE(hook_contains(Partition({1, 1, 1}), 1, 3));
    EXPECT_TRUE(hook_contains(Partition({2, 2}), 1, 10));
    EXPECT_FALSE(hook_contains(Partition({2, 2}), 1, 1));
    EXPECT_TRUE(hook_contains(Partition({5}), 1, 0));
    EXPECT_FALSE(hook_contains(Partition({1, 1}), 1, 0));
    for (int d = 1; d <= 6; ++d) EXPECT_TRUE(hook_contains(Partition({d}), 1, 0));
    EXPECT_TRUE(hook_contains(Partition(), 0, 0));
}

TEST(Partition, ParsePartList) {
    EXPECT_EQ(parse_part_list("3,1"), (std::vector<int>{3, 1}));
    EXPECT_EQ(parse_part_list("[3, 1]"), (std::vector<int>{3, 1}));
    EXPECT_TRUE(parse_part_list("").empty());
    EXPECT_TRUE(parse_part_list("[]").empty());
    EXPECT_THROW(parse_part_list("3,,1"), PreconditionError);
    EXPECT_THROW(parse_part_list("[3,1"), PreconditionError);
    EXPECT_THROW(parse_part_list("a"), PreconditionError);
}
