#ifndef EXOTIC_NORMAL_FORMS_HPP
#define EXOTIC_NORMAL_FORMS_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "outcome.hpp"
#include "partitions.hpp"

// Symbolic vectors of V1 + V2 written in a fixed weight basis v[w].
//
// V1 carries the weights eps_i; V2 carries +-eps_i +- eps_j with i != j.
// A block of length L, mark j and position i is
//
//     (1 - delta_{j,0}) v[eps_{i+j}] + sum_{k=1}^{L-1} v[alpha_{i+k}],
//
// with alpha_k = eps_k - eps_{k+1}; a normal form is a sum of blocks with
// pairwise disjoint supports.

namespace exotic {

enum class Space { V1, V2 };

struct Weight {
    Space space = Space::V1;
    int i = 0;
    int si = 1;
    int j = 0; // V2 only
    int sj = 1;

    static Weight epsilon(int index) { return Weight{Space::V1, index, 1, 0, 1}; }

    // s_i eps_i + s_j eps_j, stored with i < j.
    static Weight pair(int a, int sa, int b, int sb)
    {
        if (a == b)
            throw std::invalid_argument("Weight::pair: indices must differ");
        if ((sa != 1 && sa != -1) || (sb != 1 && sb != -1))
            throw std::invalid_argument("Weight::pair: signs must be +1 or -1");
        if (a > b) {
            std::swap(a, b);
            std::swap(sa, sb);
        }
        return Weight{Space::V2, a, sa, b, sb};
    }

    // alpha_k = eps_k - eps_{k+1}
    static Weight simple_root(int k) { return pair(k, 1, k + 1, -1); }

    bool is_simple_root() const { return space == Space::V2 && si == 1 && sj == -1 && j == i + 1; }

    // Canonical order: V2 terms first by (i, j, signs), then V1 by index.
    friend bool operator<(const Weight &a, const Weight &b)
    {
        const int ka = a.space == Space::V2 ? 0 : 1;
        const int kb = b.space == Space::V2 ? 0 : 1;
        return std::tie(ka, a.i, a.j, a.si, a.sj) < std::tie(kb, b.i, b.j, b.si, b.sj);
    }
    friend bool operator==(const Weight &, const Weight &) = default;
};

class WeightVector {
public:
    using coefficient = std::int64_t;

    WeightVector() = default;
    explicit WeightVector(int n) : n_(n)
    {
        if (n < 0)
            throw std::invalid_argument("WeightVector: negative rank");
    }

    int rank() const { return n_; }
    const std::map<Weight, coefficient> &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    coefficient coefficient_of(const Weight &w) const
    {
        auto it = terms_.find(w);
        return it == terms_.end() ? 0 : it->second;
    }

    WeightVector &add(const Weight &w, coefficient c)
    {
        check_weight(w);
        if (c == 0)
            return *this;
        auto &slot = terms_[w];
        slot += c;
        if (slot == 0)
            terms_.erase(w);
        return *this;
    }

    WeightVector &operator+=(const WeightVector &o)
    {
        same_rank(o);
        for (const auto &[w, c] : o.terms_)
            add(w, c);
        return *this;
    }
    WeightVector &operator-=(const WeightVector &o)
    {
        same_rank(o);
        for (const auto &[w, c] : o.terms_)
            add(w, -c);
        return *this;
    }
    friend WeightVector operator+(WeightVector a, const WeightVector &b) { return a += b; }
    friend WeightVector operator-(WeightVector a, const WeightVector &b) { return a -= b; }
    friend bool operator==(const WeightVector &, const WeightVector &) = default;

    bool has_v1_terms() const
    {
        return std::any_of(terms_.begin(), terms_.end(), [](const auto &t) { return t.first.space == Space::V1; });
    }

private:
    void check_weight(const Weight &w) const
    {
        auto in_range = [this](int k) { return k >= 1 && k <= n_; };
        if (!in_range(w.i) || (w.space == Space::V2 && (!in_range(w.j) || w.i >= w.j)))
            throw std::out_of_range("WeightVector: weight index outside [1, n]");
    }
    void same_rank(const WeightVector &o) const
    {
        if (o.n_ != n_)
            throw std::invalid_argument("WeightVector: rank mismatch");
    }

    int n_ = 0;
    std::map<Weight, coefficient> terms_;
};

// Text notation: a<i> = v[alpha_i], e<i> = v[eps_i], joined by " + ", "0"
// for the empty sum. Weights outside that vocabulary and coefficients other
// than 1 use a longer form so that any vector prints unambiguously.
inline std::string to_text(const WeightVector &x)
{
    if (x.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto &[w, c] : x.terms()) {
        if (!first)
            os << (c < 0 ? " - " : " + ");
        else if (c < 0)
            os << "-";
        first = false;
        const auto mag = c < 0 ? -c : c;
        if (mag != 1)
            os << mag << "*";
        if (w.space == Space::V1)
            os << "e" << w.i;
        else if (w.is_simple_root())
            os << "a" << w.i;
        else
            os << "v[" << (w.si > 0 ? "+" : "-") << "e" << w.i << (w.sj > 0 ? "+" : "-") << "e" << w.j << "]";
    }
    return os.str();
}

inline std::vector<int> support(const WeightVector &x)
{
    std::vector<int> s;
    for (const auto &[w, c] : x.terms()) {
        s.push_back(w.i);
        if (w.space == Space::V2)
            s.push_back(w.j);
    }
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

struct Block {
    int mark = 0;   // 0 <= mark <= length
    int length = 1; // >= 1
    int pos = 0;    // >= 0
};

inline WeightVector block_vector(const Block &b, int n)
{
    if (b.length < 1 || b.mark < 0 || b.mark > b.length || b.pos < 0)
        throw std::invalid_argument("block_vector: invalid block");
    if (b.pos + b.length > n)
        throw std::invalid_argument("block_vector: block does not fit in rank " + std::to_string(n));
    WeightVector v(n);
    if (b.mark != 0)
        v.add(Weight::epsilon(b.pos + b.mark), 1);
    for (int k = 1; k <= b.length - 1; ++k)
        v.add(Weight::simple_root(b.pos + k), 1);
    return v;
}

// J(lambda, a): block p has length lambda_p, mark a_p and sits at
// position lambda_1 + ... + lambda_{p-1}. Accepts any bounded marking.
inline WeightVector build_normal_form(const Partition &lambda, std::span<const int> marks)
{
    require_valid(lambda, "build_normal_form");
    if (static_cast<int>(marks.size()) != lambda.length())
        throw std::invalid_argument("build_normal_form: marks length differs from the number of parts");
    const int n = lambda.size();
    WeightVector v(n);
    int pos = 0;
    for (int p = 1; p <= lambda.length(); ++p) {
        const int a = marks[static_cast<std::size_t>(p - 1)];
        if (a < 0 || a > lambda.part(p))
            throw std::invalid_argument("build_normal_form: mark out of range at block " + std::to_string(p));
        v += block_vector(Block{a, lambda.part(p), pos}, n);
        pos += lambda.part(p);
    }
    return v;
}

inline WeightVector build_normal_form(const MarkedPartition &mp) { return build_normal_form(mp.lambda, mp.marks); }

struct BlockDecomposition {
    Partition lambda;
    std::vector<int> marks;
    std::vector<int> positions;

    friend bool operator==(const BlockDecomposition &, const BlockDecomposition &) = default;
};

// Left inverse of build_normal_form. Blocks are reported longest first,
// ties in positional order, so that lambda is a partition.
inline Outcome<BlockDecomposition> parse_normal_form(const WeightVector &x)
{
    using Result = Outcome<BlockDecomposition>;
    const int n = x.rank();
    std::vector<bool> link(static_cast<std::size_t>(n + 1), false); // link[k]: alpha_k present
    std::vector<int> v1_terms;
    for (const auto &[w, c] : x.terms()) {
        if (c != 1)
            return Result::failure("coefficient " + std::to_string(c) + " is not 1");
        if (w.space == Space::V1) {
            v1_terms.push_back(w.i);
            continue;
        }
        if (!w.is_simple_root())
            return Result::failure("weight v[" + std::string(w.si > 0 ? "+" : "-") + "e" + std::to_string(w.i) +
                                   (w.sj > 0 ? "+" : "-") + "e" + std::to_string(w.j) + "] is not a simple root");
        link[static_cast<std::size_t>(w.i)] = true;
    }

    struct Raw {
        int pos, length, mark;
    };
    std::vector<Raw> blocks;
    std::vector<int> owner(static_cast<std::size_t>(n + 1), -1);
    for (int start = 1; start <= n;) {
        int end = start;
        while (end < n && link[static_cast<std::size_t>(end)])
            ++end;
        for (int k = start; k <= end; ++k)
            owner[static_cast<std::size_t>(k)] = static_cast<int>(blocks.size());
        blocks.push_back(Raw{start - 1, end - start + 1, 0});
        start = end + 1;
    }
    for (int m : v1_terms) {
        auto &b = blocks[static_cast<std::size_t>(owner[static_cast<std::size_t>(m)])];
        if (b.mark != 0)
            return Result::failure("two V1 terms (e" + std::to_string(b.pos + b.mark) + ", e" + std::to_string(m) +
                                   ") fall in the chain starting at " + std::to_string(b.pos + 1));
        b.mark = m - b.pos;
    }

    std::stable_sort(blocks.begin(), blocks.end(), [](const Raw &a, const Raw &b) { return a.length > b.length; });
    BlockDecomposition out;
    for (const auto &b : blocks) {
        out.lambda.parts.push_back(b.length);
        out.marks.push_back(b.mark);
        out.positions.push_back(b.pos);
    }
    return Result::success(std::move(out));
}

// Orbit label of a vector in the V2 slice: the lambda with X = J(lambda, 0).
inline Partition ohta_slice_label(const WeightVector &x)
{
    if (x.has_v1_terms())
        throw std::invalid_argument("ohta_slice_label: vector has V1 terms");
    auto parsed = parse_normal_form(x);
    if (!parsed)
        throw std::invalid_argument("ohta_slice_label: not a normal form: " + parsed.error());
    return parsed.value().lambda;
}

} // namespace exotic

#endif
