#include <gtest/gtest.h>

#include <deque>
#include <set>

#include <exotic/orbit_reduction.hpp>

#include "oracles.hpp"

using namespace exotic;

namespace {

GeneralizedMarking GM(std::vector<int> lambda, std::vector<int> marks) { return {Partition{std::move(lambda)}, std::move(marks)}; }

MarkedPartition MP(std::vector<int> lambda, std::vector<int> marks) { return {Partition{std::move(lambda)}, std::move(marks)}; }

int nonzero(const std::vector<int> &a) { return static_cast<int>(std::count_if(a.begin(), a.end(), [](int v) { return v != 0; })); }

// Terminal states over the whole move graph, by breadth-first search.
std::set<MarkedPartition> terminals_bfs(const GeneralizedMarking &start)
{
    std::set<GeneralizedMarking> seen{start};
    std::deque<GeneralizedMarking> queue{start};
    std::set<MarkedPartition> out;
    while (!queue.empty()) {
        const auto cur = queue.front();
        queue.pop_front();
        const auto moves = applicable_moves(cur);
        if (moves.empty())
            out.insert(cur.as_marked());
        for (const auto &m : moves) {
            auto next = apply_move(cur, m);
            if (seen.insert(next).second)
                queue.push_back(std::move(next));
        }
    }
    return out;
}

} // namespace

TEST(ApplicableMoves, Examples)
{
    EXPECT_EQ(applicable_moves(GM({2, 1}, {1, 1})), (std::vector<Move>{{MoveKind::ZeroAtI, 1, 2}}));
    EXPECT_EQ(applicable_moves(GM({2, 1}, {2, 1})), (std::vector<Move>{{MoveKind::ZeroAtJ, 1, 2}}));
    for (int n = 0; n <= 7; ++n)
        for (const auto &mp : enumerate_marked(n))
            EXPECT_TRUE(applicable_moves(GeneralizedMarking::from(mp)).empty());
}

TEST(ApplicableMoves, PolicyOrder)
{
    const auto moves = applicable_moves(GM({2, 2}, {2, 1}));
    EXPECT_TRUE(std::is_sorted(moves.begin(), moves.end()));
    EXPECT_EQ(moves.front(), (Move{MoveKind::ZeroAtJ, 1, 2}));
    EXPECT_EQ(to_string(moves.front()), "ZeroAtJ(1,2)");
}

TEST(ApplicableMoves, ShiftPastAZeroInTheSameRun)
{
    const auto moves = applicable_moves(GM({1, 1, 1}, {1, 0, 0}));
    EXPECT_EQ(moves, (std::vector<Move>{{MoveKind::EqualBlockShift, 1, 2}, {MoveKind::EqualBlockShift, 1, 3}}));
}

TEST(ApplyMove, Examples)
{
    EXPECT_EQ(apply_move(GM({2, 1}, {1, 1}), {MoveKind::ZeroAtI, 1, 2}), GM({2, 1}, {0, 1}));
    EXPECT_EQ(apply_move(GM({2, 1}, {2, 1}), {MoveKind::ZeroAtJ, 1, 2}), GM({2, 1}, {2, 0}));
    EXPECT_EQ(apply_move(GM({2, 2}, {1, 0}), {MoveKind::EqualBlockShift, 1, 2}), GM({2, 2}, {0, 1}));
    EXPECT_THROW(apply_move(GM({2, 1}, {0, 1}), {MoveKind::ZeroAtI, 1, 2}), std::invalid_argument);
}

TEST(Reduce, Examples)
{
    EXPECT_EQ(reduce(GM({2, 1}, {1, 1})), MP({2, 1}, {0, 1}));
    EXPECT_EQ(reduce(GM({4, 2}, {3, 1})), MP({4, 2}, {3, 0}));
    EXPECT_EQ(reduce(GM({3}, {2})), MP({3}, {2}));
    EXPECT_THROW(reduce(GM({2}, {3})), std::invalid_argument);
}

TEST(Reduce, TraceRecordsEachStep)
{
    std::vector<TraceStep> trace;
    const auto out = reduce(GM({2, 2}, {2, 1}), &trace);
    ASSERT_EQ(trace.size(), 2u);
    EXPECT_EQ(trace.front().before, GM({2, 2}, {2, 1}));
    EXPECT_EQ(trace.back().after.as_marked(), out);
    for (std::size_t k = 1; k < trace.size(); ++k)
        EXPECT_EQ(trace[k - 1].after, trace[k].before);
}

TEST(ReduceAllOrders, Examples)
{
    EXPECT_EQ(reduce_all_orders(GM({2, 1}, {1, 1})), std::set<MarkedPartition>{MP({2, 1}, {0, 1})});
    EXPECT_EQ(reduce_all_orders(GM({2, 2}, {2, 1})), std::set<MarkedPartition>{MP({2, 2}, {0, 2})});
    EXPECT_EQ(reduce_all_orders(GM({3, 1}, {2, 1})), std::set<MarkedPartition>{MP({3, 1}, {2, 1})});
}

TEST(Reduce, SoundUpToEight)
{
    for (int n = 0; n <= 8; ++n) {
        std::set<MarkedPartition> fixpoints;
        for (const auto &gm : enumerate_generalized(n)) {
            const auto out = reduce(gm);
            ASSERT_TRUE(oracle::is_marked(out.lambda.parts, out.marks));
            ASSERT_EQ(out.lambda, gm.lambda);
            ASSERT_EQ(reduce(GeneralizedMarking::from(out)), out);
            for (int p = 1; p <= out.lambda.length(); ++p) {
                if (out.mark(p) == 0)
                    continue;
                bool found = false;
                for (int q = 1; q <= gm.lambda.length(); ++q)
                    found = found || (gm.lambda.part(q) == out.lambda.part(p) && gm.mark(q) == out.mark(p));
                ASSERT_TRUE(found);
            }
            if (applicable_moves(gm).empty())
                fixpoints.insert(gm.as_marked());
        }
        const auto all = enumerate_marked(n);
        EXPECT_EQ(fixpoints, std::set<MarkedPartition>(all.begin(), all.end())) << "n=" << n;
    }
}

TEST(Moves, NeverIncreaseMarkCount)
{
    for (int n = 0; n <= 7; ++n)
        for (const auto &gm : enumerate_generalized(n))
            for (const auto &m : applicable_moves(gm))
                ASSERT_LE(nonzero(apply_move(gm, m).marks), nonzero(gm.marks));
}

TEST(ReduceAllOrders, ConfluentUpToSeven)
{
    for (int n = 0; n <= 7; ++n)
        for (const auto &gm : enumerate_generalized(n)) {
            const auto all = reduce_all_orders(gm);
            ASSERT_EQ(all.size(), 1u);
            ASSERT_EQ(*all.begin(), reduce(gm));
            ASSERT_EQ(terminals_bfs(gm), all);
        }
}

TEST(GeneralizedMarking, Validation)
{
    EXPECT_TRUE(is_valid(GM({2, 1}, {2, 1})));
    EXPECT_EQ(validate(GM({2, 1}, {3, 0}))->rule, Rule::MarkOutOfRange);
    EXPECT_EQ(validate(GM({2, 1}, {0}))->rule, Rule::MarksLength);
    std::size_t count = 0;
    for (const auto &lambda : enumerate_partitions(4)) {
        std::size_t product = 1;
        for (int p : lambda.parts)
            product *= static_cast<std::size_t>(p + 1);
        count += product;
    }
    EXPECT_EQ(enumerate_generalized(4).size(), count);
}
