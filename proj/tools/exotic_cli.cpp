// exotic: enumeration, bijections, orbit reduction, tables and verification
// for marked partitions.
//
// Exit codes: 0 ok, 1 verification failure, 2 usage error, 3 invalid input.

#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <exotic/exotic.hpp>

namespace {

using namespace exotic;

constexpr int exit_ok = 0;
constexpr int exit_verify_failed = 1;
constexpr int exit_usage = 2;
constexpr int exit_invalid = 3;

struct InvalidInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

template <class T>
void check_input(const T &value, const std::string &what)
{
    if (auto v = validate(value))
        throw InvalidInput(what + ": " + v->message());
}

json read_stdin_json()
{
    const std::string text{std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    try {
        return json::parse(text);
    } catch (const json::parse_error &e) {
        throw InvalidInput(std::string("malformed JSON: ") + e.what());
    }
}

// ---------------------------------------------------------------------------
// enumerate

template <class T, class Row>
void emit(const std::vector<T> &items, const std::string &format, const char *header, Row row)
{
    if (format == "json") {
        std::cout << json(items).dump() << '\n';
        return;
    }
    std::cout << header << '\n';
    for (const auto &item : items)
        std::cout << row(item) << '\n';
}

int cmd_enumerate(const std::string &kind, int n, const std::string &format)
{
    if (kind == "partition")
        emit(enumerate_partitions(n), format, "parts", [](const Partition &p) { return csv::list(p); });
    else if (kind == "bipartition")
        emit(enumerate_bipartitions(n), format, "first,second",
             [](const BiPartition &bp) { return csv::list(bp.first) + "," + csv::list(bp.second); });
    else if (kind == "marked")
        emit(enumerate_marked(n), format, "lambda,marks",
             [](const MarkedPartition &mp) { return csv::list(mp.lambda) + "," + csv::list(mp.marks); });
    else
        emit(enumerate_segmented(n), format, "lambda,segments",
             [](const SegmentedPartition &sp) { return csv::list(sp.lambda) + "," + csv::segments(sp.segments); });
    return exit_ok;
}

// ---------------------------------------------------------------------------
// map

SegmentedPartition decode_as_sp(const json &j, const std::string &from)
{
    if (from == "mp") {
        const auto mp = j.get<MarkedPartition>();
        check_input(mp, "marked partition");
        return mp_to_sp(mp);
    }
    if (from == "p2") {
        const auto bp = j.get<BiPartition>();
        check_input(bp, "bipartition");
        return p2_to_sp(bp);
    }
    const auto sp = j.get<SegmentedPartition>();
    check_input(sp, "segmented partition");
    return sp;
}

int cmd_map(const std::string &from, const std::string &to)
{
    const json input = read_stdin_json();
    SegmentedPartition sp;
    try {
        sp = decode_as_sp(input, from);
    } catch (const DecodeError &e) {
        throw InvalidInput(e.what());
    }
    json out;
    if (to == "mp")
        out = sp_to_mp(sp);
    else if (to == "p2")
        out = sp_to_p2(sp);
    else
        out = sp;
    std::cout << out.dump() << '\n';
    return exit_ok;
}

// ---------------------------------------------------------------------------
// reduce

int cmd_reduce(const std::vector<int> &lambda, const std::vector<int> &marks, bool trace)
{
    const GeneralizedMarking gm{Partition{lambda}, marks};
    check_input(gm, "generalized marking");
    std::vector<TraceStep> steps;
    const auto result = reduce(gm, trace ? &steps : nullptr);
    if (trace)
        std::cout << json{{"result", result}, {"trace", steps}}.dump() << '\n';
    else
        std::cout << json(result).dump() << '\n';
    return exit_ok;
}

// ---------------------------------------------------------------------------
// table, verify, claims

int cmd_table(int n, const std::string &format)
{
    const auto rows = make_table(n);
    std::cout << (format == "json" ? render_table_json(rows) : render_table_csv(rows));
    return exit_ok;
}

int cmd_verify(int n_max, int oracle_n_max)
{
    const auto summary = run_verification(n_max, oracle_n_max);
    std::cout << json(summary).dump(2) << '\n';
    return summary.passed() ? exit_ok : exit_verify_failed;
}

int cmd_claims(const std::vector<int> &lambda, int i, int j)
{
    const Partition p{lambda};
    check_input(p, "partition");
    if (i < 1 || j < 1 || i > p.length() || j > p.length() || i == j || p.part(i) < p.part(j))
        throw InvalidInput("need distinct part indices i, j with lambda_i >= lambda_j");
    const auto report = verify_claim_identities(p, i, j);
    std::cout << json(report).dump(2) << '\n';
    return report.passed() ? exit_ok : exit_verify_failed;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Marked partitions, segmented partitions and bipartitions"};
    app.require_subcommand(1);

    const std::vector<std::string> formats{"json", "csv"};
    const std::vector<std::string> families{"mp", "sp", "p2"};

    std::string kind;
    int n = 0;
    std::string format = "json";
    auto *enumerate = app.add_subcommand("enumerate", "List a family in canonical order");
    enumerate->add_option("--kind", kind)->required()->check(CLI::IsMember({"partition", "bipartition", "marked", "segmented"}));
    enumerate->add_option("--n", n)->required()->check(CLI::Range(0, 40));
    enumerate->add_option("--format", format)->check(CLI::IsMember(formats));

    std::string from, to;
    auto *map = app.add_subcommand("map", "Apply a bijection to a JSON object read from stdin");
    map->add_option("--from", from)->required()->check(CLI::IsMember(families));
    map->add_option("--to", to)->required()->check(CLI::IsMember(families));

    std::vector<int> lambda, marks;
    bool trace = false;
    auto *reduce_cmd = app.add_subcommand("reduce", "Reduce a generalized marking to a marked partition");
    reduce_cmd->add_option("--lambda", lambda)->required()->delimiter(',');
    reduce_cmd->add_option("--marks", marks)->required()->delimiter(',');
    reduce_cmd->add_flag("--trace", trace);

    int table_n = 0;
    std::string table_format = "csv";
    auto *table = app.add_subcommand("table", "Correspondence table for every marked partition of n");
    table->add_option("--n", table_n)->required()->check(CLI::Range(0, 40));
    table->add_option("--format", table_format)->check(CLI::IsMember(formats));

    int n_max = 6, oracle_n_max = 3;
    auto *verify = app.add_subcommand("verify", "Run every invariant suite");
    verify->add_option("--n-max", n_max)->check(CLI::Range(0, 12));
    verify->add_option("--oracle-n-max", oracle_n_max)->check(CLI::Range(0, 5));

    std::vector<int> claim_lambda;
    int ci = 0, cj = 0;
    auto *claims = app.add_subcommand("claims", "Check the unipotent element identities for one (lambda, i, j)");
    claims->add_option("--lambda", claim_lambda)->required()->delimiter(',');
    claims->add_option("--i", ci)->required();
    claims->add_option("--j", cj)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*enumerate)
            return cmd_enumerate(kind, n, format);
        if (*map)
            return cmd_map(from, to);
        if (*reduce_cmd)
            return cmd_reduce(lambda, marks, trace);
        if (*table)
            return cmd_table(table_n, table_format);
        if (*verify)
            return cmd_verify(n_max, oracle_n_max);
        if (*claims)
            return cmd_claims(claim_lambda, ci, cj);
    } catch (const InvalidInput &e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return exit_invalid;
    } catch (const std::invalid_argument &e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return exit_invalid;
    }
    return exit_usage;
}
