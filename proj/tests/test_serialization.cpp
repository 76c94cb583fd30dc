#include <gtest/gtest.h>

#include <exotic/serialization.hpp>
#include <exotic/table.hpp>
#include <exotic/verify.hpp>

using namespace exotic;

namespace {

Partition P(std::vector<int> parts) { return Partition{std::move(parts)}; }

} // namespace

TEST(Json, Encodings)
{
    EXPECT_EQ(json(P({4, 2, 1})).dump(), "[4,2,1]");
    EXPECT_EQ(json(BiPartition{P({1}), P({})}).dump(), R"({"first":[1],"second":[]})");
    EXPECT_EQ(json(MarkedPartition{P({2, 1}), {0, 1}}).dump(), R"({"lambda":[2,1],"marks":[0,1]})");
    EXPECT_EQ(json(SegmentedPartition{P({5, 2}), {{1, 2}, {4, 5}}}).dump(), R"({"lambda":[5,2],"segments":[[1,2],[4,5]]})");
    EXPECT_EQ(json(Move{MoveKind::ZeroAtJ, 1, 2}).dump(), R"({"i":1,"j":2,"kind":"ZeroAtJ"})");
}

TEST(Json, RoundTrips)
{
    for (const auto &sp : enumerate_segmented(6)) {
        EXPECT_EQ(json(sp).get<SegmentedPartition>(), sp);
        const auto mp = sp_to_mp(sp);
        EXPECT_EQ(json(mp).get<MarkedPartition>(), mp);
        const auto bp = sp_to_p2(sp);
        EXPECT_EQ(json(bp).get<BiPartition>(), bp);
        const auto x = build_normal_form(mp);
        EXPECT_EQ(json(x).get<WeightVector>(), x);
    }
}

TEST(Json, DecodeErrors)
{
    EXPECT_THROW(json::parse(R"({"lambda":[2]})").get<MarkedPartition>(), DecodeError);
    EXPECT_THROW(json::parse(R"({"lambda":"x","marks":[]})").get<MarkedPartition>(), DecodeError);
    EXPECT_THROW(json::parse(R"({"lambda":[3],"segments":[[1]]})").get<SegmentedPartition>(), DecodeError);
    EXPECT_THROW(json::parse(R"({"first":[1.5],"second":[]})").get<BiPartition>(), DecodeError);
    EXPECT_THROW(json::parse(R"({"n":2,"v1":[[3,1]],"v2":[]})").get<WeightVector>(), DecodeError);
}

TEST(Json, LargeCountsBecomeStrings)
{
    EXPECT_EQ(count_to_json(count_t(42)).dump(), "42");
    const count_t big = weyl_order(30);
    EXPECT_EQ(count_to_json(big).dump(), "\"" + big.str() + "\"");
}

TEST(Table, RankTwo)
{
    const auto rows = make_table(2);
    ASSERT_EQ(rows.size(), 5u);
    std::vector<std::string> forms;
    std::multiset<count_t> dims;
    for (const auto &r : rows) {
        forms.push_back(r.normal_form);
        dims.insert(r.irr_dim);
    }
    EXPECT_EQ(forms, (std::vector<std::string>{"a1", "a1 + e1", "a1 + e2", "0", "e2"}));
    EXPECT_EQ(dims, (std::multiset<count_t>{1, 1, 1, 1, 2}));
}

TEST(Table, RowCountIsBipartitionCount)
{
    for (int n = 0; n <= 8; ++n)
        EXPECT_EQ(make_table(n).size(), bipartition_count(n));
    EXPECT_EQ(render_table_csv(make_table(0)), std::string(table_csv_header) + "\n,,,,,0,1\n");
}

TEST(Verify, SmallRunPasses)
{
    const auto s = run_verification(6, 3);
    for (const auto &suite : s.suites)
        EXPECT_TRUE(suite.pass) << suite.name << ": " << suite.first_failure;
    EXPECT_TRUE(json(s)["pass"].get<bool>());
    EXPECT_TRUE(run_verification(0, 0).passed());
}
