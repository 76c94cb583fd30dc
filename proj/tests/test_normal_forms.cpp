#include <gtest/gtest.h>

#include <set>

#include <exotic/normal_forms.hpp>
#include <exotic/orbit_reduction.hpp>

using namespace exotic;

namespace {

Partition P(std::vector<int> parts) { return Partition{std::move(parts)}; }

WeightVector vec(int n, std::vector<Weight> ws)
{
    WeightVector v(n);
    for (const auto &w : ws)
        v.add(w, 1);
    return v;
}

Weight eps(int i) { return Weight::epsilon(i); }
Weight alpha(int k) { return Weight::simple_root(k); }

} // namespace

TEST(BlockVector, Examples)
{
    EXPECT_EQ(block_vector({1, 2, 0}, 2), vec(2, {eps(1), alpha(1)}));
    EXPECT_TRUE(block_vector({0, 1, 0}, 1).is_zero());
    EXPECT_EQ(block_vector({2, 2, 0}, 2), vec(2, {eps(2), alpha(1)}));
    EXPECT_THROW(block_vector({0, 3, 0}, 2), std::invalid_argument);
    EXPECT_THROW(block_vector({4, 3, 0}, 3), std::invalid_argument);
}

TEST(Support, Examples)
{
    EXPECT_EQ(support(block_vector({1, 3, 0}, 3)), (std::vector<int>{1, 2, 3}));
    EXPECT_TRUE(support(WeightVector(3)).empty());
    EXPECT_EQ(support(vec(4, {eps(2)})), std::vector<int>{2});
}

TEST(Support, SumIsContainedInUnion)
{
    const std::vector<WeightVector> samples{vec(4, {eps(1)}), vec(4, {alpha(1)}), vec(4, {alpha(3), eps(4)}),
                                            vec(4, {Weight::pair(1, 1, 4, 1)})};
    for (const auto &x : samples)
        for (const auto &y : samples) {
            const auto s = support(x + y);
            auto sx = support(x), sy = support(y);
            std::set<int> uni(sx.begin(), sx.end());
            uni.insert(sy.begin(), sy.end());
            for (int k : s)
                EXPECT_TRUE(uni.count(k));
            std::vector<int> common;
            std::set_intersection(sx.begin(), sx.end(), sy.begin(), sy.end(), std::back_inserter(common));
            if (common.empty())
                EXPECT_EQ(std::set<int>(s.begin(), s.end()), uni);
        }
}

TEST(WeightVector, ArithmeticAndRangeChecks)
{
    WeightVector v(2);
    v.add(eps(1), 1).add(eps(1), -1);
    EXPECT_TRUE(v.is_zero());
    EXPECT_THROW(v.add(eps(3), 1), std::out_of_range);
    EXPECT_THROW(Weight::pair(2, 1, 2, -1), std::invalid_argument);
    EXPECT_EQ(Weight::pair(3, 1, 1, -1), (Weight{Space::V2, 1, -1, 3, 1}));
    EXPECT_EQ(vec(2, {alpha(1)}) - vec(2, {alpha(1)}), WeightVector(2));
}

TEST(ToText, Notation)
{
    EXPECT_EQ(to_text(WeightVector(2)), "0");
    EXPECT_EQ(to_text(vec(2, {eps(1), alpha(1)})), "a1 + e1");
    EXPECT_EQ(to_text(vec(3, {alpha(1), alpha(2), eps(3)})), "a1 + a2 + e3");
}

TEST(BuildNormalForm, Examples)
{
    EXPECT_EQ(build_normal_form(MarkedPartition{P({2}), {1}}), vec(2, {eps(1), alpha(1)}));
    EXPECT_EQ(build_normal_form(MarkedPartition{P({1, 1}), {0, 1}}), vec(2, {eps(2)}));
    EXPECT_EQ(build_normal_form(MarkedPartition{P({2, 2}), {0, 0}}), vec(4, {alpha(1), alpha(3)}));
    const std::vector<int> bad{3};
    EXPECT_THROW(build_normal_form(P({2}), bad), std::invalid_argument);
}

TEST(ParseNormalForm, Examples)
{
    const auto a = parse_normal_form(vec(2, {eps(1), alpha(1)}));
    ASSERT_TRUE(a.ok());
    EXPECT_EQ(a.value(), (BlockDecomposition{P({2}), {1}, {0}}));
    const auto z = parse_normal_form(WeightVector(3));
    ASSERT_TRUE(z.ok());
    EXPECT_EQ(z.value(), (BlockDecomposition{P({1, 1, 1}), {0, 0, 0}, {0, 1, 2}}));
    EXPECT_FALSE(parse_normal_form(vec(2, {eps(1), eps(2), alpha(1)})).ok());
}

TEST(ParseNormalForm, RejectsNonNormalVectors)
{
    WeightVector twice(2);
    twice.add(alpha(1), 2);
    EXPECT_FALSE(parse_normal_form(twice).ok());
    EXPECT_FALSE(parse_normal_form(vec(3, {Weight::pair(1, 1, 3, -1)})).ok());
    EXPECT_FALSE(parse_normal_form(vec(2, {Weight::pair(1, 1, 2, 1)})).ok());
}

TEST(ParseNormalForm, LeftInverseOnGeneralizedMarkings)
{
    for (int n = 0; n <= 10; ++n)
        for (const auto &gm : enumerate_generalized(n)) {
            const auto parsed = parse_normal_form(build_normal_form(gm.lambda, gm.marks));
            ASSERT_TRUE(parsed.ok());
            EXPECT_EQ(parsed.value().lambda, gm.lambda);
            EXPECT_EQ(parsed.value().marks, gm.marks);
        }
}

TEST(BuildNormalForm, InjectiveOnMarkedPartitions)
{
    for (int n = 0; n <= 10; ++n) {
        std::set<std::map<Weight, WeightVector::coefficient>> seen;
        for (const auto &mp : enumerate_marked(n))
            EXPECT_TRUE(seen.insert(build_normal_form(mp).terms()).second);
    }
}

TEST(BuildNormalForm, SupportAndCoefficients)
{
    for (int n = 1; n <= 9; ++n)
        for (const auto &mp : enumerate_marked(n)) {
            const auto x = build_normal_form(mp);
            for (const auto &[w, c] : x.terms())
                EXPECT_EQ(c, 1);
            std::vector<int> expected;
            std::set<int> seen;
            for (int p = 1; p <= mp.lambda.length(); ++p) {
                const int pos = mp.lambda.offset(p);
                const auto block = support(block_vector({mp.mark(p), mp.lambda.part(p), pos}, n));
                for (int k : block)
                    EXPECT_TRUE(seen.insert(k).second) << "overlapping blocks";
                if (!(mp.lambda.part(p) == 1 && mp.mark(p) == 0))
                    for (int k = pos + 1; k <= pos + mp.lambda.part(p); ++k)
                        expected.push_back(k);
            }
            EXPECT_EQ(support(x), expected);
        }
}

TEST(OhtaSliceLabel, Examples)
{
    EXPECT_EQ(ohta_slice_label(vec(4, {alpha(1), alpha(3)})), P({2, 2}));
    EXPECT_EQ(ohta_slice_label(WeightVector(2)), P({1, 1}));
    EXPECT_EQ(ohta_slice_label(vec(2, {alpha(1)})), P({2}));
    EXPECT_THROW(ohta_slice_label(vec(2, {eps(1)})), std::invalid_argument);
}
