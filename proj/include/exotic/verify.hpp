#ifndef EXOTIC_VERIFY_HPP
#define EXOTIC_VERIFY_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "bijections.hpp"
#include "matrix_oracle.hpp"
#include "normal_forms.hpp"
#include "orbit_reduction.hpp"
#include "partitions.hpp"
#include "serialization.hpp"
#include "weyl.hpp"

// Invariant sweeps over every module, driven by the `verify` subcommand.

namespace exotic {

struct SuiteResult {
    std::string name;
    bool pass = true;
    std::uint64_t cases = 0;
    std::string first_failure;
};

struct VerificationSummary {
    int n_max = 0;
    int oracle_n_max = 0;
    std::vector<SuiteResult> suites;

    bool passed() const
    {
        return std::all_of(suites.begin(), suites.end(), [](const SuiteResult &s) { return s.pass; });
    }
};

namespace detail {

class SuiteRecorder {
public:
    explicit SuiteRecorder(std::string name) { result_.name = std::move(name); }

    void expect(bool ok, const std::function<std::string()> &describe)
    {
        ++result_.cases;
        if (!ok && result_.pass) {
            result_.pass = false;
            result_.first_failure = describe();
        }
    }

    SuiteResult take() { return std::move(result_); }

private:
    SuiteResult result_;
};

inline std::string dump(const json &j) { return j.dump(); }

} // namespace detail

inline SuiteResult verify_cardinalities(int n_max)
{
    detail::SuiteRecorder rec("cardinalities");
    for (int n = 0; n <= n_max; ++n) {
        const count_t mp = enumerate_marked(n).size();
        const count_t sp = enumerate_segmented(n).size();
        const count_t p2 = enumerate_bipartitions(n).size();
        const count_t conv = bipartition_count(n);
        rec.expect(mp == sp && sp == p2 && p2 == conv, [&] {
            return "n=" + std::to_string(n) + ": MP=" + mp.str() + " SP=" + sp.str() + " P2=" + p2.str() + " conv=" + conv.str();
        });
    }
    return rec.take();
}

inline SuiteResult verify_enumerations(int n_max)
{
    detail::SuiteRecorder rec("enumeration validity");
    auto check = [&](const auto &items, const char *kind, int n) {
        std::set<std::decay_t<decltype(items.front())>> seen;
        for (const auto &item : items) {
            rec.expect(is_valid(item) && seen.insert(item).second,
                       [&] { return std::string(kind) + " n=" + std::to_string(n) + ": " + detail::dump(json(item)); });
        }
    };
    for (int n = 0; n <= n_max; ++n) {
        check(enumerate_partitions(n), "partition", n);
        check(enumerate_bipartitions(n), "bipartition", n);
        check(enumerate_marked(n), "marked", n);
        check(enumerate_segmented(n), "segmented", n);
    }
    return rec.take();
}

inline SuiteResult verify_round_trips(int n_max)
{
    detail::SuiteRecorder rec("bijection round trips");
    for (int n = 0; n <= n_max; ++n) {
        for (const auto &sp : enumerate_segmented(n)) {
            const auto mp = sp_to_mp(sp);
            rec.expect(mp_to_sp(mp) == sp, [&] { return "mp_to_sp(sp_to_mp(sp)) != sp for " + detail::dump(json(sp)); });
            rec.expect(mark_support(mp) == segment_support(sp), [&] { return "support changed for " + detail::dump(json(sp)); });
            const auto bp = sp_to_p2(sp);
            rec.expect(p2_to_sp(bp) == sp, [&] { return "p2_to_sp(sp_to_p2(sp)) != sp for " + detail::dump(json(sp)); });
            rec.expect(sum_partitions(bp.first, bp.second) == sp.lambda,
                       [&] { return "gamma + mu != lambda for " + detail::dump(json(sp)); });
        }
        for (const auto &mp : enumerate_marked(n))
            rec.expect(sp_to_mp(mp_to_sp(mp)) == mp, [&] { return "sp_to_mp(mp_to_sp(mp)) != mp for " + detail::dump(json(mp)); });
        for (const auto &bp : enumerate_bipartitions(n))
            rec.expect(sp_to_p2(p2_to_sp(bp)) == bp, [&] { return "sp_to_p2(p2_to_sp(bp)) != bp for " + detail::dump(json(bp)); });
    }
    return rec.take();
}

inline SuiteResult verify_strata(int n_max)
{
    detail::SuiteRecorder rec("stratum counts");
    for (int n = 0; n <= n_max; ++n) {
        for (const auto &lambda : enumerate_partitions(n)) {
            for (const auto &x : all_supports(lambda)) {
                const Stratum st{lambda, x};
                const count_t closed = stratum_count(st);
                const count_t by_mp = stratum_marked(st).size();
                const count_t by_sp = stratum_segmented(st).size();
                rec.expect(closed == by_mp && by_mp == by_sp, [&] {
                    return "lambda=" + detail::dump(json(lambda)) + " x=" + detail::dump(json(x)) + ": formula " + closed.str() +
                           ", MP " + by_mp.str() + ", SP " + by_sp.str();
                });
            }
        }
    }
    return rec.take();
}

inline SuiteResult verify_normal_forms(int n_max)
{
    detail::SuiteRecorder rec("normal forms");
    for (int n = 0; n <= n_max; ++n) {
        for (const auto &gm : enumerate_generalized(n)) {
            const auto x = build_normal_form(gm.lambda, gm.marks);
            const auto parsed = parse_normal_form(x);
            std::vector<int> positions;
            for (int p = 1; p <= gm.lambda.length(); ++p)
                positions.push_back(gm.lambda.offset(p));
            rec.expect(parsed.ok() && parsed.value() == BlockDecomposition{gm.lambda, gm.marks, positions},
                       [&] { return "parse(build) mismatch for " + detail::dump(json(gm)); });
        }
        std::set<std::string> images;
        for (const auto &mp : enumerate_marked(n)) {
            const auto text = detail::dump(json(build_normal_form(mp)));
            rec.expect(images.insert(text).second, [&] { return "build_normal_form not injective at " + detail::dump(json(mp)); });
        }
    }
    return rec.take();
}

inline SuiteResult verify_reduction(int n_max)
{
    detail::SuiteRecorder rec("reduction soundness");
    for (int n = 0; n <= n_max; ++n) {
        std::set<MarkedPartition> fixpoints;
        for (const auto &gm : enumerate_generalized(n)) {
            const auto out = reduce(gm);
            rec.expect(is_valid(out) && out.lambda == gm.lambda, [&] { return "invalid reduction of " + detail::dump(json(gm)); });
            rec.expect(reduce(GeneralizedMarking::from(out)) == out, [&] { return "not idempotent at " + detail::dump(json(gm)); });
            for (int p = 1; p <= out.lambda.length(); ++p) {
                if (out.mark(p) == 0)
                    continue;
                bool found = false;
                for (int q = 1; q <= gm.lambda.length(); ++q)
                    found = found || (gm.lambda.part(q) == out.lambda.part(p) && gm.mark(q) == out.mark(p));
                rec.expect(found, [&] { return "new mark pair created from " + detail::dump(json(gm)); });
            }
            if (applicable_moves(gm).empty())
                fixpoints.insert(gm.as_marked());
        }
        const auto marked = enumerate_marked(n);
        rec.expect(fixpoints == std::set<MarkedPartition>(marked.begin(), marked.end()),
                   [&] { return "fixpoints differ from MP(" + std::to_string(n) + ")"; });
    }
    return rec.take();
}

inline SuiteResult verify_confluence(int n_max)
{
    detail::SuiteRecorder rec("confluence");
    for (int n = 0; n <= n_max; ++n) {
        for (const auto &gm : enumerate_generalized(n)) {
            const auto terminals = reduce_all_orders(gm);
            rec.expect(terminals.size() == 1 && *terminals.begin() == reduce(gm), [&] {
                return std::to_string(terminals.size()) + " terminal markings from " + detail::dump(json(gm));
            });
        }
    }
    return rec.take();
}

inline SuiteResult verify_oracle_claims(int n_max)
{
    detail::SuiteRecorder rec("oracle identities");
    for (int n = 1; n <= n_max; ++n) {
        for (const auto &lambda : enumerate_partitions(n)) {
            for (int i = 1; i <= lambda.length(); ++i) {
                for (int j = 1; j <= lambda.length(); ++j) {
                    if (i == j || lambda.part(i) < lambda.part(j))
                        continue;
                    const auto report = verify_claim_identities(lambda, i, j);
                    for (const auto &c : report.checks)
                        rec.expect(c.pass, [&] { return report.case_name + ": " + c.name + ": " + c.lhs + " != " + c.rhs; });
                }
            }
        }
    }
    return rec.take();
}

inline SuiteResult verify_oracle_witnesses(int n_max)
{
    detail::SuiteRecorder rec("move witnesses");
    OracleConfig cfg;
    cfg.max_rank = std::max(cfg.max_rank, n_max);
    for (int n = 1; n <= n_max; ++n) {
        for (const auto &gm : enumerate_generalized(n)) {
            for (const auto &m : applicable_moves(gm)) {
                const auto w = witness_reduction_step(gm, m, cfg);
                rec.expect(w.ok(), [&] { return to_string(m) + " on " + detail::dump(json(gm)) + ": " + w.error(); });
            }
        }
    }
    return rec.take();
}

inline SuiteResult verify_weyl(int n_max)
{
    detail::SuiteRecorder rec("weyl dimensions");
    for (int n = 0; n <= n_max; ++n) {
        count_t total = 0;
        for (const auto &row : irr_table(n))
            total += row.dim * row.dim;
        rec.expect(total == weyl_order(n), [&] { return "n=" + std::to_string(n) + ": sum of squares " + total.str(); });
    }
    return rec.take();
}

// n_max bounds the combinatorial sweeps (round trips and strata stop at 10,
// reduction at 8, confluence at 7); oracle_n_max bounds the matrix checks.
inline VerificationSummary run_verification(int n_max, int oracle_n_max)
{
    VerificationSummary s;
    s.n_max = n_max;
    s.oracle_n_max = oracle_n_max;
    s.suites.push_back(verify_cardinalities(n_max));
    s.suites.push_back(verify_enumerations(n_max));
    s.suites.push_back(verify_round_trips(std::min(n_max, 10)));
    s.suites.push_back(verify_strata(std::min(n_max, 10)));
    s.suites.push_back(verify_normal_forms(std::min(n_max, 10)));
    s.suites.push_back(verify_reduction(std::min(n_max, 8)));
    s.suites.push_back(verify_confluence(std::min(n_max, 7)));
    s.suites.push_back(verify_oracle_claims(oracle_n_max));
    s.suites.push_back(verify_oracle_witnesses(oracle_n_max));
    s.suites.push_back(verify_weyl(n_max));
    return s;
}

inline void to_json(json &j, const SuiteResult &r)
{
    j = json{{"name", r.name}, {"pass", r.pass}, {"cases", r.cases}};
    if (!r.pass)
        j["first_failure"] = r.first_failure;
}

inline void to_json(json &j, const VerificationSummary &s)
{
    j = json{{"n_max", s.n_max}, {"oracle_n_max", s.oracle_n_max}, {"pass", s.passed()}, {"suites", s.suites}};
}

} // namespace exotic

#endif
