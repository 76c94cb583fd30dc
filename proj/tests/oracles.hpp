#ifndef EXOTIC_TESTS_ORACLES_HPP
#define EXOTIC_TESTS_ORACLES_HPP

// Reference computations for the test suites. Each one reaches its answer
// by a route that does not share code with the library.

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include <exotic/exotic.hpp>

namespace oracle {

// Partitions of n by the coin-change recurrence over allowed part sizes.
inline std::vector<std::uint64_t> partition_counts(int n_max)
{
    std::vector<std::uint64_t> ways(static_cast<std::size_t>(n_max + 1), 0);
    ways[0] = 1;
    for (int part = 1; part <= n_max; ++part)
        for (int total = part; total <= n_max; ++total)
            ways[static_cast<std::size_t>(total)] += ways[static_cast<std::size_t>(total - part)];
    return ways;
}

// Partitions of n by recursion on the largest part; returned as a set so
// comparisons are order-free.
inline void partitions_rec(int n, int max_part, std::vector<int> &prefix, std::set<std::vector<int>> &out)
{
    if (n == 0) {
        out.insert(prefix);
        return;
    }
    for (int p = std::min(n, max_part); p >= 1; --p) {
        prefix.push_back(p);
        partitions_rec(n - p, p, prefix, out);
        prefix.pop_back();
    }
}

inline std::set<std::vector<int>> partitions(int n)
{
    std::set<std::vector<int>> out;
    std::vector<int> prefix;
    partitions_rec(n, n, prefix, out);
    return out;
}

// Marked partition conditions, restated directly over 0-based vectors.
inline bool is_marked(const std::vector<int> &lambda, const std::vector<int> &a)
{
    const std::size_t len = lambda.size();
    if (a.size() != len)
        return false;
    for (std::size_t k = 0; k < len; ++k) {
        if (a[k] < 0 || a[k] > lambda[k])
            return false;
        if (k + 1 < len && lambda[k + 1] == lambda[k] && a[k] != 0)
            return false;
    }
    for (std::size_t p = 0; p < len; ++p)
        for (std::size_t q = p + 1; q < len; ++q)
            if (a[p] != 0 && a[q] != 0 && !(lambda[p] - lambda[q] > a[p] - a[q] && a[p] - a[q] > 0))
                return false;
    return true;
}

// All marked partitions of n, counted by brute force over every bounded marking.
inline std::uint64_t marked_count(int n)
{
    std::uint64_t count = 0;
    for (const auto &lambda : partitions(n)) {
        std::vector<int> a(lambda.size(), 0);
        while (true) {
            count += is_marked(lambda, a) ? 1 : 0;
            std::size_t k = 0;
            while (k < a.size() && a[k] == lambda[k])
                a[k++] = 0;
            if (k == a.size())
                break;
            ++a[k];
        }
    }
    return count;
}

// Standard Young tableaux by removing corners, memoized.
inline std::uint64_t syt(const std::vector<int> &shape, std::map<std::vector<int>, std::uint64_t> &memo)
{
    if (shape.empty())
        return 1;
    if (auto it = memo.find(shape); it != memo.end())
        return it->second;
    std::uint64_t total = 0;
    for (std::size_t r = 0; r < shape.size(); ++r) {
        const bool corner = r + 1 == shape.size() || shape[r + 1] < shape[r];
        if (!corner)
            continue;
        auto smaller = shape;
        if (--smaller[r] == 0)
            smaller.pop_back();
        total += syt(smaller, memo);
    }
    memo[shape] = total;
    return total;
}

inline std::uint64_t syt(const std::vector<int> &shape)
{
    std::map<std::vector<int>, std::uint64_t> memo;
    return syt(shape, memo);
}

// Inverse of sp_to_mp found by scanning every segmented partition of the
// same lambda.
inline std::vector<exotic::SegmentedPartition> preimages(const exotic::MarkedPartition &mp)
{
    std::vector<exotic::SegmentedPartition> out;
    for (const auto &sp : exotic::enumerate_segmented(mp.lambda.size()))
        if (sp.lambda == mp.lambda && exotic::sp_to_mp(sp) == mp)
            out.push_back(sp);
    return out;
}

// Torus character of a weight at t = (t_1, ..., t_n).
inline exotic::Rational character(const exotic::Weight &w, const std::vector<exotic::Rational> &t)
{
    auto factor = [&](int k, int sign) {
        const auto &tk = t[static_cast<std::size_t>(k - 1)];
        return sign > 0 ? tk : exotic::Rational(1) / tk;
    };
    if (w.space == exotic::Space::V1)
        return factor(w.i, w.si);
    return factor(w.i, w.si) * factor(w.j, w.sj);
}

} // namespace oracle

#endif
