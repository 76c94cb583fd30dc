#ifndef EXOTIC_ORBIT_REDUCTION_HPP
#define EXOTIC_ORBIT_REDUCTION_HPP

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "partitions.hpp"

// Rewriting of generalized markings (0 <= a_p <= lambda_p, nothing else
// required) down to marked partitions labelling the same orbit.
//
// For blocks i != j with lambda_i >= lambda_j and a_i, a_j both nonzero:
//   ZeroAtI(i, j)        when a_i <= a_j                      -> a_i := 0
//   ZeroAtJ(i, j)        when lambda_i - a_i <= lambda_j - a_j -> a_j := 0
// and for i < j with lambda_i = lambda_j, a_i != 0, a_j = 0:
//   EqualBlockShift(i,j) swaps a_i and a_j.
//
// The zeroing moves decrease the number of marks; the shift keeps it and
// increases the sum of marked indices, so every sequence of moves is finite.

namespace exotic {

struct GeneralizedMarking {
    Partition lambda;
    std::vector<int> marks;

    int mark(int p) const
    {
        return (p >= 1 && p <= static_cast<int>(marks.size())) ? marks[static_cast<std::size_t>(p - 1)] : 0;
    }

    static GeneralizedMarking from(const MarkedPartition &mp) { return {mp.lambda, mp.marks}; }
    MarkedPartition as_marked() const { return {lambda, marks}; }

    friend auto operator<=>(const GeneralizedMarking &, const GeneralizedMarking &) = default;
};

inline Validation validate(const GeneralizedMarking &gm)
{
    if (auto v = validate(gm.lambda))
        return v;
    if (static_cast<int>(gm.marks.size()) != gm.lambda.length())
        return Violation{Rule::MarksLength, "expected " + std::to_string(gm.lambda.length()) + " marks, got " + std::to_string(gm.marks.size())};
    for (int k = 1; k <= gm.lambda.length(); ++k)
        if (gm.mark(k) < 0 || gm.mark(k) > gm.lambda.part(k))
            return Violation{Rule::MarkOutOfRange, "a_" + std::to_string(k) + " = " + std::to_string(gm.mark(k))};
    return std::nullopt;
}

// Every generalized marking of n: partitions in descending lexicographic
// order, markings ascending.
inline std::vector<GeneralizedMarking> enumerate_generalized(int n)
{
    std::vector<GeneralizedMarking> out;
    for (const auto &lambda : enumerate_partitions(n))
        for_each_marking(lambda, [&](const std::vector<int> &marks) { out.push_back({lambda, marks}); });
    return out;
}

enum class MoveKind { ZeroAtI = 0, ZeroAtJ = 1, EqualBlockShift = 2 };

inline const char *to_string(MoveKind k)
{
    switch (k) {
    case MoveKind::ZeroAtI: return "ZeroAtI";
    case MoveKind::ZeroAtJ: return "ZeroAtJ";
    case MoveKind::EqualBlockShift: return "EqualBlockShift";
    }
    return "?";
}

struct Move {
    MoveKind kind;
    int i;
    int j;

    // Policy order: lowest (i, j) first, then ZeroAtI < ZeroAtJ < EqualBlockShift.
    friend auto operator<=>(const Move &a, const Move &b)
    {
        if (auto c = a.i <=> b.i; c != 0)
            return c;
        if (auto c = a.j <=> b.j; c != 0)
            return c;
        return static_cast<int>(a.kind) <=> static_cast<int>(b.kind);
    }
    friend bool operator==(const Move &, const Move &) = default;
};

inline std::string to_string(const Move &m)
{
    return std::string(to_string(m.kind)) + "(" + std::to_string(m.i) + "," + std::to_string(m.j) + ")";
}

// Sorted in policy order.
inline std::vector<Move> applicable_moves(const GeneralizedMarking &gm)
{
    require_valid(gm, "applicable_moves");
    const auto &lam = gm.lambda;
    const int len = lam.length();
    std::vector<Move> moves;
    for (int i = 1; i <= len; ++i) {
        for (int j = 1; j <= len; ++j) {
            if (i == j || lam.part(i) < lam.part(j))
                continue;
            const int ai = gm.mark(i);
            const int aj = gm.mark(j);
            if (ai != 0 && aj != 0) {
                if (ai <= aj)
                    moves.push_back({MoveKind::ZeroAtI, i, j});
                if (lam.part(i) - ai <= lam.part(j) - aj)
                    moves.push_back({MoveKind::ZeroAtJ, i, j});
            }
            if (i < j && lam.part(i) == lam.part(j) && ai != 0 && aj == 0)
                moves.push_back({MoveKind::EqualBlockShift, i, j});
        }
    }
    return moves;
}

inline bool is_applicable(const GeneralizedMarking &gm, const Move &m)
{
    for (const auto &c : applicable_moves(gm))
        if (c == m)
            return true;
    return false;
}

inline GeneralizedMarking apply_move(const GeneralizedMarking &gm, const Move &m)
{
    if (!is_applicable(gm, m))
        throw std::invalid_argument("apply_move: " + to_string(m) + " is not applicable");
    GeneralizedMarking out = gm;
    auto &a = out.marks;
    const auto i = static_cast<std::size_t>(m.i - 1);
    const auto j = static_cast<std::size_t>(m.j - 1);
    switch (m.kind) {
    case MoveKind::ZeroAtI: a[i] = 0; break;
    case MoveKind::ZeroAtJ: a[j] = 0; break;
    case MoveKind::EqualBlockShift: std::swap(a[i], a[j]); break;
    }
    return out;
}

struct TraceStep {
    Move move;
    GeneralizedMarking before;
    GeneralizedMarking after;
};

// Deterministic reduction; every step is recorded when trace is non-null.
inline MarkedPartition reduce(const GeneralizedMarking &gm, std::vector<TraceStep> *trace = nullptr)
{
    GeneralizedMarking cur = gm;
    for (;;) {
        const auto moves = applicable_moves(cur);
        if (moves.empty())
            break;
        GeneralizedMarking next = apply_move(cur, moves.front());
        if (trace)
            trace->push_back({moves.front(), cur, next});
        cur = std::move(next);
    }
    MarkedPartition out = cur.as_marked();
    if (auto v = validate(out))
        throw std::logic_error("reduce: terminal marking is not a marked partition: " + v->message());
    return out;
}

// Terminal markings over every maximal move sequence.
inline std::set<MarkedPartition> reduce_all_orders(const GeneralizedMarking &gm)
{
    require_valid(gm, "reduce_all_orders");
    std::map<std::vector<int>, std::set<std::vector<int>>> memo;
    auto explore = [&](auto &self, const GeneralizedMarking &cur) -> const std::set<std::vector<int>> & {
        if (auto it = memo.find(cur.marks); it != memo.end())
            return it->second;
        std::set<std::vector<int>> terminals;
        const auto moves = applicable_moves(cur);
        if (moves.empty())
            terminals.insert(cur.marks);
        for (const auto &m : moves) {
            const auto &sub = self(self, apply_move(cur, m));
            terminals.insert(sub.begin(), sub.end());
        }
        return memo.emplace(cur.marks, std::move(terminals)).first->second;
    };
    std::set<MarkedPartition> out;
    for (const auto &marks : explore(explore, gm))
        out.insert(MarkedPartition{gm.lambda, marks});
    return out;
}

} // namespace exotic

#endif
