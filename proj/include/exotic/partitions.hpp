#ifndef EXOTIC_PARTITIONS_HPP
#define EXOTIC_PARTITIONS_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

// Partition families: plain partitions, bipartitions, marked partitions and
// segmented partitions. All types are plain values; validity is checked by
// the validate() overloads rather than enforced at construction, so invalid
// objects can be built, reported on and rejected by the maps that need them.

namespace exotic {

using count_t = boost::multiprecision::cpp_int;

struct Partition {
    std::vector<int> parts;

    int length() const { return static_cast<int>(parts.size()); }
    bool empty() const { return parts.empty(); }

    int size() const
    {
        int n = 0;
        for (int p : parts)
            n += p;
        return n;
    }

    // 1-based access, zero past the end (the partition is implicitly
    // extended by zeros).
    int part(int p) const
    {
        return (p >= 1 && p <= length()) ? parts[static_cast<std::size_t>(p - 1)] : 0;
    }

    // Sum of the parts strictly before index p (1-based); this is the
    // position of block p when blocks are laid out consecutively.
    int offset(int p) const
    {
        int s = 0;
        for (int q = 1; q < p && q <= length(); ++q)
            s += part(q);
        return s;
    }

    friend auto operator<=>(const Partition &, const Partition &) = default;
};

struct BiPartition {
    Partition first;
    Partition second;

    int size() const { return first.size() + second.size(); }

    friend auto operator<=>(const BiPartition &, const BiPartition &) = default;
};

struct MarkedPartition {
    Partition lambda;
    std::vector<int> marks; // same length as lambda.parts

    // 1-based, zero past the end.
    int mark(int p) const
    {
        return (p >= 1 && p <= static_cast<int>(marks.size())) ? marks[static_cast<std::size_t>(p - 1)]
                                                               : 0;
    }

    friend auto operator<=>(const MarkedPartition &, const MarkedPartition &) = default;
};

// Closed integer interval [first, last].
struct Segment {
    int first = 0;
    int last = 0;

    int length() const { return last - first + 1; }
    bool contains(int k) const { return first <= k && k <= last; }

    friend auto operator<=>(const Segment &, const Segment &) = default;
};

struct SegmentedPartition {
    Partition lambda;
    std::vector<Segment> segments; // ascending, pairwise separated by a gap

    friend auto operator<=>(const SegmentedPartition &, const SegmentedPartition &) = default;
};

// Strictly decreasing list of positive indices.
struct MarkSupport {
    std::vector<int> indices;

    bool contains(int p) const { return std::find(indices.begin(), indices.end(), p) != indices.end(); }

    friend auto operator<=>(const MarkSupport &, const MarkSupport &) = default;
};

// ---------------------------------------------------------------------------
// Validation

enum class Rule {
    PartNotPositive,
    PartsIncreasing,
    MarksLength,
    MarkOutOfRange,    // 0 <= a_k <= lambda_k
    MarkOnRepeatedPart, // a_k = 0 when lambda_{k+1} = lambda_k
    MarkGap,           // lambda_p - lambda_q > a_p - a_q > 0 for marked p < q
    SegmentOutOfRange, // 1 <= r <= s <= lambda_1
    SegmentsNotSeparated,
    SegmentEndpointNotPart,
    SupportNotDecreasing,
    SupportIndexOutOfRange,
};

inline const char *to_string(Rule r)
{
    switch (r) {
    case Rule::PartNotPositive: return "part-not-positive";
    case Rule::PartsIncreasing: return "parts-increasing";
    case Rule::MarksLength: return "marks-length";
    case Rule::MarkOutOfRange: return "mark-out-of-range";
    case Rule::MarkOnRepeatedPart: return "mark-on-repeated-part";
    case Rule::MarkGap: return "mark-gap";
    case Rule::SegmentOutOfRange: return "segment-out-of-range";
    case Rule::SegmentsNotSeparated: return "segments-not-separated";
    case Rule::SegmentEndpointNotPart: return "segment-endpoint-not-part";
    case Rule::SupportNotDecreasing: return "support-not-decreasing";
    case Rule::SupportIndexOutOfRange: return "support-index-out-of-range";
    }
    return "unknown";
}

struct Violation {
    Rule rule;
    std::string detail;

    std::string message() const { return std::string(to_string(rule)) + ": " + detail; }
};

// Empty optional means valid.
using Validation = std::optional<Violation>;

inline Validation validate(const Partition &lambda)
{
    for (int p = 1; p <= lambda.length(); ++p) {
        if (lambda.part(p) < 1)
            return Violation{Rule::PartNotPositive, "part " + std::to_string(p) + " is " + std::to_string(lambda.part(p))};
        if (p > 1 && lambda.part(p) > lambda.part(p - 1))
            return Violation{Rule::PartsIncreasing, "part " + std::to_string(p) + " exceeds part " + std::to_string(p - 1)};
    }
    return std::nullopt;
}

inline Validation validate(const BiPartition &bp)
{
    if (auto v = validate(bp.first))
        return Violation{v->rule, "first: " + v->detail};
    if (auto v = validate(bp.second))
        return Violation{v->rule, "second: " + v->detail};
    return std::nullopt;
}

inline Validation validate(const MarkedPartition &mp)
{
    if (auto v = validate(mp.lambda))
        return v;
    const auto &lam = mp.lambda;
    if (static_cast<int>(mp.marks.size()) != lam.length())
        return Violation{Rule::MarksLength, "expected " + std::to_string(lam.length()) + " marks, got " + std::to_string(mp.marks.size())};
    for (int k = 1; k <= lam.length(); ++k) {
        if (mp.mark(k) < 0 || mp.mark(k) > lam.part(k))
            return Violation{Rule::MarkOutOfRange, "a_" + std::to_string(k) + " = " + std::to_string(mp.mark(k))};
    }
    for (int k = 1; k <= lam.length(); ++k) {
        if (mp.mark(k) != 0 && lam.part(k + 1) == lam.part(k))
            return Violation{Rule::MarkOnRepeatedPart, "a_" + std::to_string(k) + " != 0 but lambda_" + std::to_string(k) + " = lambda_" + std::to_string(k + 1)};
    }
    for (int p = 1; p <= lam.length(); ++p) {
        if (mp.mark(p) == 0)
            continue;
        for (int q = p + 1; q <= lam.length(); ++q) {
            if (mp.mark(q) == 0)
                continue;
            const int dl = lam.part(p) - lam.part(q);
            const int da = mp.mark(p) - mp.mark(q);
            if (!(dl > da && da > 0))
                return Violation{Rule::MarkGap, "pair (" + std::to_string(p) + "," + std::to_string(q) + "): lambda difference " + std::to_string(dl) + ", mark difference " + std::to_string(da)};
        }
    }
    return std::nullopt;
}

inline Validation validate(const SegmentedPartition &sp)
{
    if (auto v = validate(sp.lambda))
        return v;
    const int top = sp.lambda.part(1);
    for (std::size_t k = 0; k < sp.segments.size(); ++k) {
        const auto &s = sp.segments[k];
        if (s.first < 1 || s.first > s.last || s.last > top)
            return Violation{Rule::SegmentOutOfRange, "[" + std::to_string(s.first) + "," + std::to_string(s.last) + "]"};
        if (k > 0 && sp.segments[k - 1].last + 2 > s.first)
            return Violation{Rule::SegmentsNotSeparated, "segments " + std::to_string(k) + " and " + std::to_string(k + 1)};
        const auto &parts = sp.lambda.parts;
        if (std::find(parts.begin(), parts.end(), s.last) == parts.end())
            return Violation{Rule::SegmentEndpointNotPart, "right endpoint " + std::to_string(s.last)};
    }
    return std::nullopt;
}

inline Validation validate(const MarkSupport &x)
{
    for (std::size_t k = 0; k < x.indices.size(); ++k) {
        if (x.indices[k] < 1 || (k > 0 && x.indices[k] >= x.indices[k - 1]))
            return Violation{Rule::SupportNotDecreasing, "entry " + std::to_string(k + 1)};
    }
    return std::nullopt;
}

template <class T>
bool is_valid(const T &value)
{
    return !validate(value).has_value();
}

// Throws std::invalid_argument carrying the violation report.
template <class T>
void require_valid(const T &value, const char *what)
{
    if (auto v = validate(value))
        throw std::invalid_argument(std::string(what) + ": " + v->message());
}

// ---------------------------------------------------------------------------
// Enumeration

// All partitions of n, descending lexicographic order.
inline std::vector<Partition> enumerate_partitions(int n)
{
    if (n < 0)
        throw std::invalid_argument("enumerate_partitions: n must be non-negative");
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto &self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.push_back(Partition{cur});
            return;
        }
        for (int k = std::min(remaining, max_part); k >= 1; --k) {
            cur.push_back(k);
            self(self, remaining - k, k);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

// |first| runs from n down to 0; each component in descending lexicographic order.
inline std::vector<BiPartition> enumerate_bipartitions(int n)
{
    if (n < 0)
        throw std::invalid_argument("enumerate_bipartitions: n must be non-negative");
    std::vector<BiPartition> out;
    for (int k = n; k >= 0; --k) {
        const auto firsts = enumerate_partitions(k);
        const auto seconds = enumerate_partitions(n - k);
        for (const auto &a : firsts)
            for (const auto &b : seconds)
                out.push_back(BiPartition{a, b});
    }
    return out;
}

// Every marking 0 <= a_p <= lambda_p of one partition, ascending lexicographic.
template <class F>
void for_each_marking(const Partition &lambda, F &&f)
{
    std::vector<int> marks(lambda.parts.size(), 0);
    for (;;) {
        f(static_cast<const std::vector<int> &>(marks));
        int p = static_cast<int>(marks.size()) - 1;
        while (p >= 0 && marks[static_cast<std::size_t>(p)] == lambda.parts[static_cast<std::size_t>(p)]) {
            marks[static_cast<std::size_t>(p)] = 0;
            --p;
        }
        if (p < 0)
            return;
        ++marks[static_cast<std::size_t>(p)];
    }
}

// Exhaustive filter over all bounded markings; this is the reference
// enumeration the bijection code is checked against.
inline std::vector<MarkedPartition> enumerate_marked(int n)
{
    if (n < 0)
        throw std::invalid_argument("enumerate_marked: n must be non-negative");
    std::vector<MarkedPartition> out;
    for (const auto &lambda : enumerate_partitions(n)) {
        for_each_marking(lambda, [&](const std::vector<int> &marks) {
            MarkedPartition mp{lambda, marks};
            if (is_valid(mp))
                out.push_back(std::move(mp));
        });
    }
    return out;
}

// Maximal runs of a subset of [1, width] given as a bit mask (bit k-1 <-> k).
inline std::vector<Segment> segments_from_mask(std::uint64_t mask, int width)
{
    std::vector<Segment> segs;
    int k = 1;
    while (k <= width) {
        if (!(mask >> (k - 1) & 1u)) {
            ++k;
            continue;
        }
        int last = k;
        while (last + 1 <= width && (mask >> last & 1u))
            ++last;
        segs.push_back(Segment{k, last});
        k = last + 1;
    }
    return segs;
}

namespace detail {

inline bool flattened_less(const std::vector<Segment> &a, const std::vector<Segment> &b)
{
    std::vector<int> fa, fb;
    for (const auto &s : a) {
        fa.push_back(s.first);
        fa.push_back(s.last);
    }
    for (const auto &s : b) {
        fb.push_back(s.first);
        fb.push_back(s.last);
    }
    return fa < fb;
}

constexpr int max_subset_width = 62;

} // namespace detail

// Exhaustive filter over subsets I of [1, lambda_1].
inline std::vector<SegmentedPartition> enumerate_segmented(int n)
{
    if (n < 0)
        throw std::invalid_argument("enumerate_segmented: n must be non-negative");
    if (n > detail::max_subset_width)
        throw std::length_error("enumerate_segmented: n too large for exhaustive subset filter");
    std::vector<SegmentedPartition> out;
    for (const auto &lambda : enumerate_partitions(n)) {
        const int width = lambda.part(1);
        std::vector<SegmentedPartition> bucket;
        const std::uint64_t subsets = std::uint64_t{1} << width;
        for (std::uint64_t mask = 0; mask < subsets; ++mask) {
            SegmentedPartition sp{lambda, segments_from_mask(mask, width)};
            if (is_valid(sp))
                bucket.push_back(std::move(sp));
        }
        std::sort(bucket.begin(), bucket.end(), [](const auto &a, const auto &b) {
            return detail::flattened_less(a.segments, b.segments);
        });
        for (auto &sp : bucket)
            out.push_back(std::move(sp));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Supports and the partition sum

inline MarkSupport mark_support(const MarkedPartition &mp)
{
    MarkSupport x;
    for (int p = static_cast<int>(mp.marks.size()); p >= 1; --p)
        if (mp.mark(p) != 0)
            x.indices.push_back(p);
    return x;
}

// For each component [r, s], the largest index p with lambda_p = s.
inline MarkSupport segment_support(const SegmentedPartition &sp)
{
    MarkSupport x;
    for (const auto &seg : sp.segments) {
        int found = 0;
        for (int p = 1; p <= sp.lambda.length(); ++p)
            if (sp.lambda.part(p) == seg.last)
                found = p;
        if (found == 0)
            throw std::invalid_argument("segment_support: right endpoint is not a part");
        x.indices.push_back(found);
    }
    std::sort(x.indices.begin(), x.indices.end(), std::greater<>());
    return x;
}

// Entrywise sum, trailing zeros dropped.
inline Partition sum_partitions(const Partition &lhs, const Partition &rhs)
{
    const int len = std::max(lhs.length(), rhs.length());
    Partition out;
    for (int p = 1; p <= len; ++p) {
        const int v = lhs.part(p) + rhs.part(p);
        if (v > 0)
            out.parts.push_back(v);
    }
    return out;
}

// Drops trailing zeros from a sequence and wraps it as a partition.
inline Partition trimmed(std::vector<int> values)
{
    while (!values.empty() && values.back() == 0)
        values.pop_back();
    return Partition{std::move(values)};
}

// ---------------------------------------------------------------------------
// Counting

// p(n) by Euler's pentagonal recurrence.
inline std::vector<count_t> partition_counts(int n_max)
{
    std::vector<count_t> p(static_cast<std::size_t>(std::max(n_max, 0) + 1), 0);
    p[0] = 1;
    for (int m = 1; m <= n_max; ++m) {
        count_t acc = 0;
        for (int k = 1;; ++k) {
            const int g1 = k * (3 * k - 1) / 2;
            const int g2 = k * (3 * k + 1) / 2;
            if (g1 > m)
                break;
            const bool plus = (k % 2) == 1;
            const count_t &t1 = p[static_cast<std::size_t>(m - g1)];
            acc += plus ? t1 : count_t(-t1);
            if (g2 <= m) {
                const count_t &t2 = p[static_cast<std::size_t>(m - g2)];
                acc += plus ? t2 : count_t(-t2);
            }
        }
        p[static_cast<std::size_t>(m)] = acc;
    }
    return p;
}

// sum_k p(k) p(n-k).
inline count_t bipartition_count(int n)
{
    if (n < 0)
        return 0;
    const auto p = partition_counts(n);
    count_t total = 0;
    for (int k = 0; k <= n; ++k)
        total += p[static_cast<std::size_t>(k)] * p[static_cast<std::size_t>(n - k)];
    return total;
}

} // namespace exotic

#endif
