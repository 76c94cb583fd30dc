#include <gtest/gtest.h>

#include <exotic/weyl.hpp>

#include "oracles.hpp"

using namespace exotic;

namespace {

Partition P(std::vector<int> parts) { return Partition{std::move(parts)}; }

} // namespace

TEST(WeylOrder, Examples)
{
    EXPECT_EQ(weyl_order(0), 1);
    EXPECT_EQ(weyl_order(2), 8);
    EXPECT_EQ(weyl_order(3), 48);
    EXPECT_THROW(weyl_order(-1), std::invalid_argument);
}

TEST(IrrDim, Examples)
{
    EXPECT_EQ(irr_dim({P({1}), P({1})}), 2);
    EXPECT_EQ(irr_dim({P({1, 1}), P({})}), 1);
    EXPECT_EQ(irr_dim({P({2, 1}), P({})}), 2);
}

TEST(StandardTableaux, HookFormulaMatchesCornerRecursion)
{
    for (int n = 0; n <= 12; ++n)
        for (const auto &lambda : enumerate_partitions(n))
            EXPECT_EQ(standard_tableaux(lambda), oracle::syt(lambda.parts));
}

TEST(IrrDim, SumOfSquaresIsGroupOrder)
{
    for (int n = 0; n <= 8; ++n) {
        count_t total = 0;
        for (const auto &row : irr_table(n))
            total += row.dim * row.dim;
        EXPECT_EQ(total, weyl_order(n));
    }
}

TEST(IrrDim, OneDimensionalAndSwapSymmetry)
{
    for (int n = 1; n <= 8; ++n) {
        const Partition row{{n}};
        const Partition column{std::vector<int>(static_cast<std::size_t>(n), 1)};
        for (const auto &bp : {BiPartition{row, P({})}, BiPartition{P({}), row}, BiPartition{column, P({})}, BiPartition{P({}), column}})
            EXPECT_EQ(irr_dim(bp), 1);
        for (const auto &bp : enumerate_bipartitions(n)) {
            EXPECT_GE(irr_dim(bp), 1);
            EXPECT_EQ(irr_dim(bp), irr_dim({bp.second, bp.first}));
        }
    }
}

TEST(IrrTable, RankTwoNamesAndDims)
{
    const auto rows = irr_table(2);
    ASSERT_EQ(rows.size(), 5u);
    std::map<std::string, count_t> by_name;
    for (const auto &r : rows) {
        ASSERT_TRUE(r.label.name.has_value());
        by_name[*r.label.name] = r.dim;
    }
    EXPECT_EQ(by_name.at("sign"), 1);
    EXPECT_EQ(by_name.at("Ssign"), 1);
    EXPECT_EQ(by_name.at("Lsign"), 1);
    EXPECT_EQ(by_name.at("regular"), 2);
    EXPECT_EQ(by_name.at("triv"), 1);
    for (const auto &entry : rank_two_reference())
        EXPECT_EQ(irr_dim(entry.bp), entry.dim) << entry.name;
}

TEST(IrrTable, SmallCases)
{
    const auto zero = irr_table(0);
    ASSERT_EQ(zero.size(), 1u);
    EXPECT_EQ(zero.front().dim, 1);
    EXPECT_FALSE(zero.front().label.name.has_value());
    EXPECT_EQ(irr_table(3).size(), 10u);
}
