#ifndef EXOTIC_MATRIX_ORACLE_HPP
#define EXOTIC_MATRIX_ORACLE_HPP

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "matrix.hpp"
#include "normal_forms.hpp"
#include "orbit_reduction.hpp"
#include "outcome.hpp"
#include "partitions.hpp"

// Exact model of Sp(2n) acting on V1 = C^{2n} and V2 = Lambda^2 V1 / C.omega.
//
// Basis of V1 is (e_1..e_n, f_1..f_n) with <e_i, f_i> = 1. GL(n) sits inside
// as A -> diag(A, A^{-T}); its root vector for eps_i - eps_j sends e_j to e_i
// and f_i to -f_j. A 2-form is stored as the antisymmetric matrix
// M = sum c_pq (b_p b_q^T - b_q b_p^T); g acts by M -> g M g^T, and classes
// modulo omega = sum e_i ^ f_i are compared after removing the multiple of
// omega that clears the e_1 ^ f_1 coordinate.

namespace exotic {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::size_t e_index(int i) { return static_cast<std::size_t>(i - 1); }
inline std::size_t f_index(int i, int n) { return static_cast<std::size_t>(n + i - 1); }

template <class T>
Matrix<T> symplectic_form(int n)
{
    Matrix<T> om(static_cast<std::size_t>(2 * n), static_cast<std::size_t>(2 * n));
    for (int i = 1; i <= n; ++i) {
        om(e_index(i), f_index(i, n)) = T(1);
        om(f_index(i, n), e_index(i)) = T(-1);
    }
    return om;
}

template <class T>
bool is_symplectic(const Matrix<T> &m)
{
    if (!m.square() || m.rows() % 2 != 0)
        return false;
    const auto om = symplectic_form<T>(static_cast<int>(m.rows() / 2));
    return m.transpose() * om * m == om;
}

template <class T>
bool is_unipotent(const Matrix<T> &m)
{
    return m.square() && is_nilpotent(m - Matrix<T>::identity(m.rows()));
}

class SpElement {
public:
    explicit SpElement(Matrix<Integer> mat) : mat_(std::move(mat))
    {
        if (!is_symplectic(mat_))
            throw std::invalid_argument("SpElement: matrix does not preserve the symplectic form");
    }

    static SpElement identity(int n) { return SpElement(Matrix<Integer>::identity(static_cast<std::size_t>(2 * n))); }

    int rank() const { return static_cast<int>(mat_.rows() / 2); }
    const Matrix<Integer> &matrix() const { return mat_; }

    // -Omega M^T Omega
    SpElement inverse() const
    {
        const auto om = symplectic_form<Integer>(rank());
        return SpElement(-(om * mat_.transpose() * om));
    }

    bool unipotent() const { return is_unipotent(mat_); }

    friend SpElement operator*(const SpElement &a, const SpElement &b) { return SpElement(a.mat_ * b.mat_); }
    friend bool operator==(const SpElement &, const SpElement &) = default;

private:
    Matrix<Integer> mat_;
};

// ---------------------------------------------------------------------------
// V2 and the exotic vector space

template <class T>
class BasicV2Element {
public:
    BasicV2Element() = default;
    explicit BasicV2Element(int n) : n_(n), form_(static_cast<std::size_t>(2 * n), static_cast<std::size_t>(2 * n)) {}

    // From an antisymmetric 2n x 2n matrix; canonicalised modulo omega.
    BasicV2Element(int n, Matrix<T> form) : n_(n), form_(std::move(form))
    {
        if (form_.rows() != static_cast<std::size_t>(2 * n) || !(form_.transpose() == -form_))
            throw std::invalid_argument("V2Element: expected an antisymmetric 2n x 2n matrix");
        canonicalize();
    }

    // b_p ^ b_q for 0-based basis indices.
    static BasicV2Element wedge(int n, std::size_t p, std::size_t q)
    {
        Matrix<T> m(static_cast<std::size_t>(2 * n), static_cast<std::size_t>(2 * n));
        if (p != q) {
            m(p, q) = T(1);
            m(q, p) = T(-1);
        }
        return BasicV2Element(n, std::move(m));
    }

    static BasicV2Element omega(int n) { return BasicV2Element(n, symplectic_form<T>(n)); }

    int rank() const { return n_; }
    const Matrix<T> &form() const { return form_; }
    const T &coordinate(std::size_t p, std::size_t q) const { return form_(p, q); }
    bool is_zero() const { return form_.is_zero(); }

    BasicV2Element &operator+=(const BasicV2Element &o)
    {
        form_ += o.form_;
        canonicalize();
        return *this;
    }
    BasicV2Element &operator-=(const BasicV2Element &o)
    {
        form_ -= o.form_;
        canonicalize();
        return *this;
    }
    friend BasicV2Element operator+(BasicV2Element a, const BasicV2Element &b) { return a += b; }
    friend BasicV2Element operator-(BasicV2Element a, const BasicV2Element &b) { return a -= b; }
    friend BasicV2Element operator*(const T &s, BasicV2Element a)
    {
        a.form_ *= s;
        return a;
    }
    friend bool operator==(const BasicV2Element &, const BasicV2Element &) = default;

private:
    void canonicalize()
    {
        if (n_ == 0)
            return;
        const T c = form_(e_index(1), f_index(1, n_));
        if (c != 0)
            form_ -= symplectic_form<T>(n_) * c;
    }

    int n_ = 0;
    Matrix<T> form_;
};

template <class T>
struct BasicExoticVector {
    std::vector<T> v1;
    BasicV2Element<T> v2;

    static BasicExoticVector zero(int n)
    {
        return {std::vector<T>(static_cast<std::size_t>(2 * n), T(0)), BasicV2Element<T>(n)};
    }

    int rank() const { return v2.rank(); }

    BasicExoticVector &operator+=(const BasicExoticVector &o)
    {
        for (std::size_t k = 0; k < v1.size(); ++k)
            v1[k] += o.v1[k];
        v2 += o.v2;
        return *this;
    }
    BasicExoticVector &operator-=(const BasicExoticVector &o)
    {
        for (std::size_t k = 0; k < v1.size(); ++k)
            v1[k] -= o.v1[k];
        v2 -= o.v2;
        return *this;
    }
    friend BasicExoticVector operator+(BasicExoticVector a, const BasicExoticVector &b) { return a += b; }
    friend BasicExoticVector operator-(BasicExoticVector a, const BasicExoticVector &b) { return a -= b; }
    friend bool operator==(const BasicExoticVector &, const BasicExoticVector &) = default;
};

using V2Element = BasicV2Element<Integer>;
using ExoticVector = BasicExoticVector<Integer>;

template <class T>
BasicExoticVector<T> basis_e(int i, int n)
{
    auto x = BasicExoticVector<T>::zero(n);
    x.v1[e_index(i)] = T(1);
    return x;
}

template <class T>
BasicExoticVector<T> act(const Matrix<T> &g, const BasicExoticVector<T> &x)
{
    const int n = x.rank();
    if (g.rows() != static_cast<std::size_t>(2 * n))
        throw std::invalid_argument("act: rank mismatch");
    return {g.apply(x.v1), BasicV2Element<T>(n, g * x.v2.form() * g.transpose())};
}

inline ExoticVector act(const SpElement &g, const ExoticVector &x) { return act(g.matrix(), x); }

// v[eps_i] -> e_i, v[s_i eps_i + s_j eps_j] -> b(s_i, i) ^ b(s_j, j) with
// b(+, k) = e_k, b(-, k) = f_k.
template <class T>
BasicExoticVector<T> embed_as(const WeightVector &x)
{
    const int n = x.rank();
    auto out = BasicExoticVector<T>::zero(n);
    auto basis = [n](int sign, int k) { return sign > 0 ? e_index(k) : f_index(k, n); };
    for (const auto &[w, c] : x.terms()) {
        if (w.space == Space::V1) {
            out.v1[e_index(w.i)] += T(c);
        } else {
            out.v2 += T(c) * BasicV2Element<T>::wedge(n, basis(w.si, w.i), basis(w.sj, w.j));
        }
    }
    return out;
}

inline ExoticVector embed(const WeightVector &x) { return embed_as<Integer>(x); }

inline std::string basis_name(std::size_t k, int n)
{
    const int idx = static_cast<int>(k);
    return idx < n ? "e" + std::to_string(idx + 1) : "f" + std::to_string(idx - n + 1);
}

template <class T>
std::string to_string(const BasicExoticVector<T> &x)
{
    const int n = x.rank();
    std::ostringstream os;
    bool first = true;
    auto term = [&](const T &c, const std::string &name) {
        if (c == 0)
            return;
        if (!first)
            os << " + ";
        first = false;
        if (c != 1)
            os << "(" << c << ")*";
        os << name;
    };
    for (std::size_t k = 0; k < x.v1.size(); ++k)
        term(x.v1[k], basis_name(k, n));
    for (std::size_t p = 0; p < static_cast<std::size_t>(2 * n); ++p)
        for (std::size_t q = p + 1; q < static_cast<std::size_t>(2 * n); ++q)
            term(x.v2.coordinate(p, q), basis_name(p, n) + "^" + basis_name(q, n));
    return first ? "0" : os.str();
}

// ---------------------------------------------------------------------------
// Group elements

inline Matrix<Integer> root_vector(int i, int j, int n)
{
    if (i == j)
        throw std::invalid_argument("root_vector: indices must differ");
    if (i < 1 || j < 1 || i > n || j > n)
        throw std::out_of_range("root_vector: index outside [1, n]");
    Matrix<Integer> x(static_cast<std::size_t>(2 * n), static_cast<std::size_t>(2 * n));
    x(e_index(i), e_index(j)) = 1;
    x(f_index(j, n), f_index(i, n)) = -1;
    return x;
}

// Finite exponential series; every term must be integral.
inline Matrix<Integer> exp_series(const Matrix<Integer> &x)
{
    if (!is_nilpotent(x))
        throw std::invalid_argument("exp_nilpotent: matrix is not nilpotent");
    const auto dim = x.rows();
    Matrix<Integer> out = Matrix<Integer>::identity(dim);
    Matrix<Integer> term = out;
    for (std::size_t k = 1; k < dim; ++k) {
        term = term * x;
        if (term.is_zero())
            break;
        for (std::size_t r = 0; r < dim; ++r)
            for (std::size_t c = 0; c < dim; ++c) {
                Integer &v = term(r, c);
                if (v % k != 0)
                    throw std::domain_error("exp_nilpotent: exponential has non-integral entries");
                v /= k;
            }
        out += term;
    }
    return out;
}

inline SpElement exp_nilpotent(const Matrix<Integer> &x) { return SpElement(exp_series(x)); }

// v_{i,j} = exp(X_{eps_i - eps_j})
inline SpElement root_element(int i, int j, int n) { return exp_nilpotent(root_vector(i, j, n)); }

// diag(A, A^{-T}) for A in GL(n) with integral inverse a_inv.
inline SpElement embed_gl(const Matrix<Integer> &a, const Matrix<Integer> &a_inv)
{
    const auto n = a.rows();
    if (!(a * a_inv == Matrix<Integer>::identity(n)))
        throw std::invalid_argument("embed_gl: a_inv is not the inverse of a");
    Matrix<Integer> g(2 * n, 2 * n);
    const auto inv_t = a_inv.transpose();
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            g(r, c) = a(r, c);
            g(n + r, n + c) = inv_t(r, c);
        }
    return SpElement(std::move(g));
}

enum class ProductOrder { Ascending, Descending };

namespace detail {

inline void check_pair(int i, int j, const Partition &lambda)
{
    require_valid(lambda, "g_plus/g_minus");
    if (i == j)
        throw std::invalid_argument("g_plus/g_minus: block indices must differ");
    if (i < 1 || j < 1 || i > lambda.length() || j > lambda.length())
        throw std::out_of_range("g_plus/g_minus: block index outside the partition");
    if (lambda.part(i) < lambda.part(j))
        throw std::invalid_argument("g_plus/g_minus: requires lambda_i >= lambda_j");
}

inline Matrix<Integer> ordered_product(const std::vector<Matrix<Integer>> &factors, ProductOrder order, std::size_t dim)
{
    Matrix<Integer> out = Matrix<Integer>::identity(dim);
    if (order == ProductOrder::Ascending)
        for (const auto &f : factors)
            out = out * f;
    else
        for (auto it = factors.rbegin(); it != factors.rend(); ++it)
            out = out * *it;
    return out;
}

inline Matrix<Integer> g_plus_matrix(int i, int j, const Partition &lambda, ProductOrder order)
{
    check_pair(i, j, lambda);
    const int n = lambda.size();
    std::vector<Matrix<Integer>> factors;
    for (int k = 1; k <= lambda.part(j); ++k)
        factors.push_back(exp_series(root_vector(lambda.offset(i) + k, lambda.offset(j) + k, n)));
    return ordered_product(factors, order, static_cast<std::size_t>(2 * n));
}

inline Matrix<Integer> g_minus_matrix(int i, int j, const Partition &lambda, ProductOrder order)
{
    check_pair(i, j, lambda);
    const int n = lambda.size();
    std::vector<Matrix<Integer>> factors;
    for (int k = 0; k < lambda.part(j); ++k)
        factors.push_back(exp_series(root_vector(lambda.offset(j + 1) - k, lambda.offset(i + 1) - k, n)));
    return ordered_product(factors, order, static_cast<std::size_t>(2 * n));
}

} // namespace detail

// prod_{1 <= k <= lambda_j} v_{off_i + k, off_j + k}: copies block j into
// the top of block i.
inline SpElement g_plus(int i, int j, const Partition &lambda, ProductOrder order = ProductOrder::Ascending)
{
    return SpElement(detail::g_plus_matrix(i, j, lambda, order));
}

// prod_{0 <= k < lambda_j} v_{off_{j+1} - k, off_{i+1} - k}: copies the
// bottom of block i into block j.
inline SpElement g_minus(int i, int j, const Partition &lambda, ProductOrder order = ProductOrder::Ascending)
{
    return SpElement(detail::g_minus_matrix(i, j, lambda, order));
}

// ---------------------------------------------------------------------------
// Verification reports

struct Check {
    std::string name;
    bool pass = false;
    std::string lhs;
    std::string rhs;
};

struct ClaimReport {
    std::string case_name;
    std::vector<Check> checks;

    bool passed() const
    {
        for (const auto &c : checks)
            if (!c.pass)
                return false;
        return true;
    }
    std::vector<Check> failures() const
    {
        std::vector<Check> out;
        for (const auto &c : checks)
            if (!c.pass)
                out.push_back(c);
        return out;
    }
};

inline std::string partition_text(const Partition &lambda)
{
    std::string s = "(";
    for (int p = 1; p <= lambda.length(); ++p)
        s += (p > 1 ? "," : "") + std::to_string(lambda.part(p));
    return s + ")";
}

inline std::string marks_text(const std::vector<int> &marks)
{
    std::string s = "(";
    for (std::size_t p = 0; p < marks.size(); ++p)
        s += (p ? "," : "") + std::to_string(marks[p]);
    return s + ")";
}

inline ExoticVector embed_marking(const Partition &lambda, const std::vector<int> &marks)
{
    return embed(build_normal_form(lambda, marks));
}

// The stabiliser elements g_plus / g_minus for the block pair (i, j):
// symplectic and unipotent, independent of factor order, acting on the e_k
// by the two copy rules, fixing J(lambda, 0), and satisfying
// g_plus^{-1} J(lambda, a) = J(lambda, a) - e_{off_i + a_j} for a_j != 0.
inline ClaimReport verify_claim_identities(const Partition &lambda, int i, int j)
{
    ClaimReport report;
    report.case_name = "lambda=" + partition_text(lambda) + " i=" + std::to_string(i) + " j=" + std::to_string(j);
    const int n = lambda.size();
    auto add = [&](std::string name, bool pass, std::string lhs = {}, std::string rhs = {}) {
        report.checks.push_back({std::move(name), pass, std::move(lhs), std::move(rhs)});
    };

    const auto gp = detail::g_plus_matrix(i, j, lambda, ProductOrder::Ascending);
    const auto gp_rev = detail::g_plus_matrix(i, j, lambda, ProductOrder::Descending);
    const auto gm = detail::g_minus_matrix(i, j, lambda, ProductOrder::Ascending);
    const auto gm_rev = detail::g_minus_matrix(i, j, lambda, ProductOrder::Descending);

    add("g_plus symplectic", is_symplectic(gp));
    add("g_plus unipotent", is_unipotent(gp));
    add("g_minus symplectic", is_symplectic(gm));
    add("g_minus unipotent", is_unipotent(gm));
    add("g_plus product order", gp == gp_rev);
    add("g_minus product order", gm == gm_rev);

    const int off_i = lambda.offset(i);
    const int off_j = lambda.offset(j);
    const int end_i = lambda.offset(i + 1);
    const int end_j = lambda.offset(j + 1);
    const int lj = lambda.part(j);

    for (int m = 1; m <= n; ++m) {
        auto expected = basis_e<Integer>(m, n);
        const int k = m - off_j;
        if (k > 0 && k <= lj)
            expected += basis_e<Integer>(off_i + k, n);
        const auto got = act(gp, basis_e<Integer>(m, n));
        add("g_plus e" + std::to_string(m), got == expected, to_string(got), to_string(expected));
    }
    for (int m = 1; m <= n; ++m) {
        auto expected = basis_e<Integer>(m, n);
        const int k = end_i - m;
        if (k >= 0 && k < lj)
            expected += basis_e<Integer>(end_j - k, n);
        const auto got = act(gm, basis_e<Integer>(m, n));
        add("g_minus e" + std::to_string(m), got == expected, to_string(got), to_string(expected));
    }

    const auto j0 = embed_marking(lambda, std::vector<int>(lambda.parts.size(), 0));
    {
        const auto got = act(gp, j0);
        add("g_plus fixes J(lambda,0)", got == j0, to_string(got), to_string(j0));
    }
    {
        const auto got = act(gm, j0);
        add("g_minus fixes J(lambda,0)", got == j0, to_string(got), to_string(j0));
    }

    const auto gp_inv = SpElement(gp).inverse().matrix();
    for_each_marking(lambda, [&](const std::vector<int> &marks) {
        const int aj = marks[static_cast<std::size_t>(j - 1)];
        if (aj == 0)
            return;
        const auto jv = embed_marking(lambda, marks);
        const auto got = act(gp_inv, jv);
        const auto expected = jv - basis_e<Integer>(off_i + aj, n);
        add("g_plus^-1 J(lambda," + marks_text(marks) + ")", got == expected, to_string(got), to_string(expected));
    });
    return report;
}

// ---------------------------------------------------------------------------
// Witnesses for reduction moves

struct OracleConfig {
    int max_rank = 5;
    int search_bound = 2; // corrector coefficients range over [-bound, bound]
};

namespace detail {

// Nilpotent shift on block b: e_{off+k+1} -> e_{off+k}.
inline Matrix<Integer> block_shift(const Partition &lambda, int b)
{
    const int n = lambda.size();
    const int off = lambda.offset(b);
    Matrix<Integer> nil(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (int k = 1; k < lambda.part(b); ++k)
        nil(e_index(off + k), e_index(off + k + 1)) = 1;
    return nil;
}

// Unipotent u = I + sum_m c_m N^{m d} on block b with
// u (e_{off+low} - e_{off+high}) = -e_{off+high}, found by bounded search.
inline Outcome<Matrix<Integer>> find_corrector(const Partition &lambda, int b, int low, int high, int bound)
{
    const int n = lambda.size();
    const int off = lambda.offset(b);
    const int d = high - low;
    const int terms = (lambda.part(b) - 1) / d;
    const auto nil = block_shift(lambda, b);
    std::vector<Matrix<Integer>> powers;
    for (int m = 1; m <= terms; ++m)
        powers.push_back(power(nil, static_cast<unsigned>(m * d)));

    std::vector<Integer> w(static_cast<std::size_t>(n), 0), target(static_cast<std::size_t>(n), 0);
    w[e_index(off + low)] = 1;
    w[e_index(off + high)] = -1;
    target[e_index(off + high)] = -1;

    std::vector<int> coeffs(static_cast<std::size_t>(terms), -bound);
    const auto id = Matrix<Integer>::identity(static_cast<std::size_t>(n));
    for (;;) {
        Matrix<Integer> u = id;
        for (int m = 0; m < terms; ++m)
            u += powers[static_cast<std::size_t>(m)] * Integer(coeffs[static_cast<std::size_t>(m)]);
        if (u.apply(w) == target)
            return Outcome<Matrix<Integer>>::success(std::move(u));
        int m = terms - 1;
        while (m >= 0 && coeffs[static_cast<std::size_t>(m)] == bound)
            coeffs[static_cast<std::size_t>(m--)] = -bound;
        if (m < 0)
            break;
        ++coeffs[static_cast<std::size_t>(m)];
    }
    return Outcome<Matrix<Integer>>::failure("no corrector with coefficients in [-" + std::to_string(bound) + ", " +
                                             std::to_string(bound) + "] on block " + std::to_string(b));
}

inline SpElement block_swap(const Partition &lambda, int i, int j)
{
    const int n = lambda.size();
    Matrix<Integer> perm = Matrix<Integer>::identity(static_cast<std::size_t>(n));
    const int oi = lambda.offset(i);
    const int oj = lambda.offset(j);
    for (int k = 1; k <= lambda.part(i); ++k) {
        perm(e_index(oi + k), e_index(oi + k)) = 0;
        perm(e_index(oj + k), e_index(oj + k)) = 0;
        perm(e_index(oi + k), e_index(oj + k)) = 1;
        perm(e_index(oj + k), e_index(oi + k)) = 1;
    }
    return embed_gl(perm, perm.transpose());
}

} // namespace detail

// A group element g with g . J(gm) = J(apply_move(gm, m)).
//
// ZeroAtI: h = g_plus(i, j) moves the mark of block j onto block i at
// height a_j; if a_i = a_j then h^{-1} already cancels a_i, otherwise a
// corrector u in the centraliser of block i turns e_{a_i} - e_{a_j} into
// -e_{a_j} and h u h^{-1} does the job. ZeroAtJ is the mirror image with
// g_minus and the height b = a_i - lambda_i + lambda_j inside block j.
// EqualBlockShift permutes two blocks of equal length.
inline Outcome<SpElement> witness_reduction_step(const GeneralizedMarking &gm, const Move &m, const OracleConfig &cfg = {})
{
    using Result = Outcome<SpElement>;
    if (!is_applicable(gm, m))
        throw std::invalid_argument("witness_reduction_step: " + to_string(m) + " is not applicable");
    const auto &lambda = gm.lambda;
    const int n = lambda.size();
    if (n > cfg.max_rank)
        throw std::invalid_argument("witness_reduction_step: rank " + std::to_string(n) + " exceeds the configured bound");

    const auto after = apply_move(gm, m);
    const auto source = embed_marking(lambda, gm.marks);
    const auto target = embed_marking(lambda, after.marks);

    auto conjugated = [&](const SpElement &h, int block, int low, int high) -> Result {
        if (low == high)
            return Result::success(h.inverse());
        auto u = detail::find_corrector(lambda, block, low, high, cfg.search_bound);
        if (!u)
            return Result::failure(u.error());
        return Result::success(h * embed_gl(u.value(), unipotent_inverse(u.value())) * h.inverse());
    };

    Result candidate = Result::failure("unset");
    const int ai = gm.mark(m.i);
    const int aj = gm.mark(m.j);
    switch (m.kind) {
    case MoveKind::ZeroAtI:
        candidate = conjugated(g_plus(m.i, m.j, lambda), m.i, ai, aj);
        break;
    case MoveKind::ZeroAtJ:
        candidate = conjugated(g_minus(m.i, m.j, lambda), m.j, aj, ai - lambda.part(m.i) + lambda.part(m.j));
        break;
    case MoveKind::EqualBlockShift:
        candidate = Result::success(detail::block_swap(lambda, m.i, m.j));
        break;
    }
    if (!candidate)
        return candidate;
    const auto image = act(candidate.value(), source);
    if (!(image == target))
        return Result::failure("witness for " + to_string(m) + " maps " + to_string(source) + " to " + to_string(image) +
                               ", expected " + to_string(target));
    return candidate;
}

} // namespace exotic

#endif
