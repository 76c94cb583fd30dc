#ifndef EXOTIC_BIJECTIONS_HPP
#define EXOTIC_BIJECTIONS_HPP

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

#include "partitions.hpp"

// The combinatorial chain MP(n) <-> SP(n) <-> P2(n).
//
// Segmented -> marked is built by descending induction on the part index:
// a marked index p with component [j, lambda_p] gets
//
//     a_p = min({j} U {j - lambda_q + a_q - 1 : q > p, a_q != 0}),
//
// and the inverse reads the start back off as j = a_p - min(0, m) where
// m = min{a_q - lambda_q - 1 : q > p, a_q != 0}. Bipartitions (gamma, mu)
// correspond to (gamma + mu, I) with I the merged union of the intervals
// [gamma_p + mu_{p+1} + 1, gamma_p + mu_p].

namespace exotic {

inline MarkedPartition sp_to_mp(const SegmentedPartition &sp)
{
    require_valid(sp, "sp_to_mp");
    const auto &lam = sp.lambda;
    const MarkSupport x = segment_support(sp);

    std::map<int, int> start_of; // right endpoint -> left endpoint
    for (const auto &s : sp.segments)
        start_of[s.last] = s.first;

    std::vector<int> marks(lam.parts.size(), 0);
    for (int p = lam.length(); p >= 1; --p) {
        if (!x.contains(p))
            continue;
        const int j = start_of.at(lam.part(p));
        int a = j;
        for (int q = p + 1; q <= lam.length(); ++q) {
            const int aq = marks[static_cast<std::size_t>(q - 1)];
            if (aq != 0)
                a = std::min(a, j - lam.part(q) + aq - 1);
        }
        marks[static_cast<std::size_t>(p - 1)] = a;
    }

    MarkedPartition mp{lam, std::move(marks)};
    if (auto v = validate(mp))
        throw std::logic_error("sp_to_mp produced an invalid marked partition: " + v->message());
    return mp;
}

inline SegmentedPartition mp_to_sp(const MarkedPartition &mp)
{
    require_valid(mp, "mp_to_sp");
    const auto &lam = mp.lambda;
    std::vector<Segment> segs;
    for (int p = lam.length(); p >= 1; --p) {
        const int ap = mp.mark(p);
        if (ap == 0)
            continue;
        int m = 0; // min(0, m) is all that is used
        for (int q = p + 1; q <= lam.length(); ++q)
            if (mp.mark(q) != 0)
                m = std::min(m, mp.mark(q) - lam.part(q) - 1);
        segs.push_back(Segment{ap - m, lam.part(p)});
    }
    std::sort(segs.begin(), segs.end());

    SegmentedPartition sp{lam, std::move(segs)};
    if (auto v = validate(sp))
        throw std::logic_error("mp_to_sp produced an invalid segmented partition: " + v->message());
    return sp;
}

// bp.first plays gamma, bp.second plays mu.
inline SegmentedPartition p2_to_sp(const BiPartition &bp)
{
    require_valid(bp, "p2_to_sp");
    const auto &gamma = bp.first;
    const auto &mu = bp.second;
    const int len = std::max(gamma.length(), mu.length());

    std::vector<Segment> pieces;
    for (int p = 1; p <= len; ++p) {
        const int hi = gamma.part(p) + mu.part(p);
        const int lo = gamma.part(p) + mu.part(p + 1) + 1;
        if (lo <= hi)
            pieces.push_back(Segment{lo, hi});
    }
    std::sort(pieces.begin(), pieces.end());

    // [a, b] U [b + 1, c] = [a, c]
    std::vector<Segment> merged;
    for (const auto &s : pieces) {
        if (!merged.empty() && merged.back().last + 1 >= s.first)
            merged.back().last = std::max(merged.back().last, s.last);
        else
            merged.push_back(s);
    }

    SegmentedPartition sp{sum_partitions(gamma, mu), std::move(merged)};
    if (auto v = validate(sp))
        throw std::logic_error("p2_to_sp produced an invalid segmented partition: " + v->message());
    return sp;
}

inline BiPartition sp_to_p2(const SegmentedPartition &sp)
{
    require_valid(sp, "sp_to_p2");
    const auto &lam = sp.lambda;
    std::vector<int> gamma, mu;
    for (int p = 1; p <= lam.length(); ++p) {
        int covered = 0;
        for (const auto &s : sp.segments) {
            const int hi = std::min(s.last, lam.part(p));
            if (hi >= s.first)
                covered += hi - s.first + 1;
        }
        mu.push_back(covered);
        gamma.push_back(lam.part(p) - covered);
    }
    BiPartition bp{trimmed(std::move(gamma)), trimmed(std::move(mu))};
    if (auto v = validate(bp))
        throw std::logic_error("sp_to_p2 produced an invalid bipartition: " + v->message());
    return bp;
}

inline BiPartition mp_to_p2(const MarkedPartition &mp) { return sp_to_p2(mp_to_sp(mp)); }

inline MarkedPartition p2_to_mp(const BiPartition &bp) { return sp_to_mp(p2_to_sp(bp)); }

// ---------------------------------------------------------------------------
// Strata MP(lambda, x) and SP(lambda, x)

struct Stratum {
    Partition lambda;
    MarkSupport x;
};

inline Validation validate(const Stratum &st)
{
    if (auto v = validate(st.lambda))
        return v;
    if (auto v = validate(st.x))
        return v;
    for (int p : st.x.indices)
        if (p > st.lambda.length())
            return Violation{Rule::SupportIndexOutOfRange, "index " + std::to_string(p) + " exceeds the number of parts"};
    return std::nullopt;
}

// lambda_{x_1} * prod_{i >= 2} (lambda_{x_i} - lambda_{x_{i-1}} - 1), clamped at 0.
inline count_t stratum_count(const Stratum &st)
{
    require_valid(st, "stratum_count");
    const auto &lam = st.lambda;
    const auto &x = st.x.indices;
    for (int p : x)
        if (lam.part(p) == lam.part(p + 1))
            return 0;
    if (x.empty())
        return 1;
    count_t total = lam.part(x[0]);
    for (std::size_t i = 1; i < x.size(); ++i) {
        const int factor = lam.part(x[i]) - lam.part(x[i - 1]) - 1;
        if (factor <= 0)
            return 0;
        total *= factor;
    }
    return total;
}

// Brute force over markings supported exactly on x.
inline std::vector<MarkedPartition> stratum_marked(const Stratum &st)
{
    require_valid(st, "stratum_marked");
    std::vector<MarkedPartition> out;
    for_each_marking(st.lambda, [&](const std::vector<int> &marks) {
        MarkedPartition mp{st.lambda, marks};
        if (is_valid(mp) && mark_support(mp) == st.x)
            out.push_back(std::move(mp));
    });
    return out;
}

// Brute force over subsets of [1, lambda_1].
inline std::vector<SegmentedPartition> stratum_segmented(const Stratum &st)
{
    require_valid(st, "stratum_segmented");
    const int width = st.lambda.part(1);
    if (width > detail::max_subset_width)
        throw std::length_error("stratum_segmented: lambda_1 too large for exhaustive subset filter");
    std::vector<SegmentedPartition> out;
    const std::uint64_t subsets = std::uint64_t{1} << width;
    for (std::uint64_t mask = 0; mask < subsets; ++mask) {
        SegmentedPartition sp{st.lambda, segments_from_mask(mask, width)};
        if (is_valid(sp) && segment_support(sp) == st.x)
            out.push_back(std::move(sp));
    }
    std::sort(out.begin(), out.end(), [](const auto &a, const auto &b) {
        return detail::flattened_less(a.segments, b.segments);
    });
    return out;
}

// Every strictly decreasing index sequence drawn from [1, lambda.length()].
inline std::vector<MarkSupport> all_supports(const Partition &lambda)
{
    std::vector<MarkSupport> out;
    const int len = lambda.length();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << len); ++mask) {
        MarkSupport x;
        for (int p = len; p >= 1; --p)
            if (mask >> (p - 1) & 1u)
                x.indices.push_back(p);
        out.push_back(std::move(x));
    }
    return out;
}

} // namespace exotic

#endif
