#ifndef EXOTIC_WEYL_HPP
#define EXOTIC_WEYL_HPP

#include <optional>
#include <string>
#include <vector>

#include "partitions.hpp"

// Irreducible representations of the hyperoctahedral group W(C_n), labelled
// by bipartitions. dim(first, second) = C(n, |first|) f(first) f(second)
// where f counts standard Young tableaux (hook length formula).

namespace exotic {

inline count_t factorial(int n)
{
    count_t r = 1;
    for (int k = 2; k <= n; ++k)
        r *= k;
    return r;
}

inline count_t binomial(int n, int k)
{
    if (k < 0 || k > n)
        return 0;
    return factorial(n) / (factorial(k) * factorial(n - k));
}

// 2^n n!
inline count_t weyl_order(int n)
{
    if (n < 0)
        throw std::invalid_argument("weyl_order: n must be non-negative");
    return (count_t(1) << n) * factorial(n);
}

inline count_t standard_tableaux(const Partition &lambda)
{
    require_valid(lambda, "standard_tableaux");
    count_t hooks = 1;
    for (int r = 1; r <= lambda.length(); ++r) {
        for (int c = 1; c <= lambda.part(r); ++c) {
            int below = 0;
            while (lambda.part(r + below + 1) >= c)
                ++below;
            hooks *= (lambda.part(r) - c) + below + 1;
        }
    }
    return factorial(lambda.size()) / hooks;
}

inline count_t irr_dim(const BiPartition &bp)
{
    require_valid(bp, "irr_dim");
    return binomial(bp.size(), bp.first.size()) * standard_tableaux(bp.first) * standard_tableaux(bp.second);
}

struct IrrLabel {
    BiPartition bp;
    std::optional<std::string> name;
};

struct IrrRow {
    IrrLabel label;
    count_t dim;
};

// Names used for the five representations of W(C_2).
inline std::optional<std::string> rank_two_name(const BiPartition &bp)
{
    const Partition empty{};
    if (bp == BiPartition{Partition{{1, 1}}, empty})
        return "sign";
    if (bp == BiPartition{empty, Partition{{1, 1}}})
        return "Ssign";
    if (bp == BiPartition{Partition{{2}}, empty})
        return "Lsign";
    if (bp == BiPartition{Partition{{1}}, Partition{{1}}})
        return "regular";
    if (bp == BiPartition{empty, Partition{{2}}})
        return "triv";
    return std::nullopt;
}

inline std::vector<IrrRow> irr_table(int n)
{
    std::vector<IrrRow> rows;
    for (const auto &bp : enumerate_bipartitions(n)) {
        IrrLabel label{bp, n == 2 ? rank_two_name(bp) : std::nullopt};
        rows.push_back({std::move(label), irr_dim(bp)});
    }
    return rows;
}

// The rank-two reference table: representation name, orbit representative
// (text notation), bipartition and dimension, stored as data. The
// bipartition column here is the representation label; it is not claimed to
// agree with the combinatorial map from marked partitions.
struct RankTwoEntry {
    std::string name;
    std::string orbit_representative;
    BiPartition bp;
    int dim;
};

inline const std::vector<RankTwoEntry> &rank_two_reference()
{
    static const std::vector<RankTwoEntry> table = {
        {"sign", "0", {Partition{{1, 1}}, Partition{}}, 1},
        {"Ssign", "e1", {Partition{}, Partition{{1, 1}}}, 1},
        {"Lsign", "a1", {Partition{{2}}, Partition{}}, 1},
        {"regular", "a1 + e1", {Partition{{1}}, Partition{{1}}}, 2},
        {"triv", "a1 + e2", {Partition{}, Partition{{2}}}, 1},
    };
    return table;
}

} // namespace exotic

#endif
