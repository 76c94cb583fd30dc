#ifndef EXOTIC_SERIALIZATION_HPP
#define EXOTIC_SERIALIZATION_HPP

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "matrix_oracle.hpp"
#include "normal_forms.hpp"
#include "orbit_reduction.hpp"
#include "partitions.hpp"
#include "weyl.hpp"

// JSON encodings:
//   Partition           [4,2,1]
//   BiPartition         {"first":[...],"second":[...]}
//   MarkedPartition     {"lambda":[...],"marks":[...]}
//   SegmentedPartition  {"lambda":[...],"segments":[[r,s],...]}
//   WeightVector        {"n":N,"v1":[[i,c],...],"v2":[[i,j,s1,s2,c],...]}
// Decoding checks structure only; family invariants are left to validate().

namespace exotic {

using json = nlohmann::json;

class DecodeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline int json_int(const json &j, const char *what)
{
    if (!j.is_number_integer())
        throw DecodeError(std::string(what) + ": expected an integer, got " + j.dump());
    const auto v = j.get<std::int64_t>();
    if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
        throw DecodeError(std::string(what) + ": integer out of range");
    return static_cast<int>(v);
}

inline std::vector<int> json_int_array(const json &j, const char *what)
{
    if (!j.is_array())
        throw DecodeError(std::string(what) + ": expected an array, got " + j.dump());
    std::vector<int> out;
    for (const auto &e : j)
        out.push_back(json_int(e, what));
    return out;
}

inline const json &json_field(const json &j, const char *key)
{
    if (!j.is_object())
        throw DecodeError(std::string("expected an object with key \"") + key + "\", got " + j.dump());
    auto it = j.find(key);
    if (it == j.end())
        throw DecodeError(std::string("missing key \"") + key + "\"");
    return *it;
}

} // namespace detail

// Counts are emitted as JSON numbers while they fit, as decimal strings beyond.
inline json count_to_json(const count_t &c)
{
    if (c >= 0 && c <= std::numeric_limits<std::uint64_t>::max())
        return json(c.convert_to<std::uint64_t>());
    return json(c.str());
}

inline void to_json(json &j, const Partition &p) { j = p.parts; }
inline void from_json(const json &j, Partition &p) { p.parts = detail::json_int_array(j, "partition"); }

inline void to_json(json &j, const BiPartition &bp) { j = json{{"first", bp.first}, {"second", bp.second}}; }
inline void from_json(const json &j, BiPartition &bp)
{
    bp.first = detail::json_field(j, "first").get<Partition>();
    bp.second = detail::json_field(j, "second").get<Partition>();
}

inline void to_json(json &j, const MarkedPartition &mp) { j = json{{"lambda", mp.lambda}, {"marks", mp.marks}}; }
inline void from_json(const json &j, MarkedPartition &mp)
{
    mp.lambda = detail::json_field(j, "lambda").get<Partition>();
    mp.marks = detail::json_int_array(detail::json_field(j, "marks"), "marks");
}

inline void to_json(json &j, const GeneralizedMarking &gm) { j = json{{"lambda", gm.lambda}, {"marks", gm.marks}}; }
inline void from_json(const json &j, GeneralizedMarking &gm)
{
    gm.lambda = detail::json_field(j, "lambda").get<Partition>();
    gm.marks = detail::json_int_array(detail::json_field(j, "marks"), "marks");
}

inline void to_json(json &j, const SegmentedPartition &sp)
{
    json segs = json::array();
    for (const auto &s : sp.segments)
        segs.push_back(json::array({s.first, s.last}));
    j = json{{"lambda", sp.lambda}, {"segments", segs}};
}
inline void from_json(const json &j, SegmentedPartition &sp)
{
    sp.lambda = detail::json_field(j, "lambda").get<Partition>();
    const auto &segs = detail::json_field(j, "segments");
    if (!segs.is_array())
        throw DecodeError("segments: expected an array");
    sp.segments.clear();
    for (const auto &s : segs) {
        const auto ends = detail::json_int_array(s, "segment");
        if (ends.size() != 2)
            throw DecodeError("segment: expected [r,s], got " + s.dump());
        sp.segments.push_back(Segment{ends[0], ends[1]});
    }
}

inline void to_json(json &j, const MarkSupport &x) { j = x.indices; }

inline void to_json(json &j, const WeightVector &x)
{
    json v1 = json::array();
    json v2 = json::array();
    for (const auto &[w, c] : x.terms()) {
        if (w.space == Space::V1)
            v1.push_back(json::array({w.i, c}));
        else
            v2.push_back(json::array({w.i, w.j, w.si, w.sj, c}));
    }
    j = json{{"n", x.rank()}, {"v1", v1}, {"v2", v2}};
}
inline void from_json(const json &j, WeightVector &x)
{
    WeightVector out(detail::json_int(detail::json_field(j, "n"), "n"));
    const auto &v1 = detail::json_field(j, "v1");
    const auto &v2 = detail::json_field(j, "v2");
    if (!v1.is_array() || !v2.is_array())
        throw DecodeError("weight vector: v1 and v2 must be arrays");
    try {
        for (const auto &t : v1) {
            const auto e = detail::json_int_array(t, "v1 term");
            if (e.size() != 2)
                throw DecodeError("v1 term: expected [i,c]");
            out.add(Weight::epsilon(e[0]), e[1]);
        }
        for (const auto &t : v2) {
            const auto e = detail::json_int_array(t, "v2 term");
            if (e.size() != 5)
                throw DecodeError("v2 term: expected [i,j,s1,s2,c]");
            out.add(Weight::pair(e[0], e[2], e[1], e[3]), e[4]);
        }
    } catch (const std::out_of_range &err) {
        throw DecodeError(err.what());
    } catch (const std::invalid_argument &err) {
        throw DecodeError(err.what());
    }
    x = std::move(out);
}

inline void to_json(json &j, const Move &m) { j = json{{"kind", to_string(m.kind)}, {"i", m.i}, {"j", m.j}}; }

inline void to_json(json &j, const TraceStep &s) { j = json{{"move", s.move}, {"before", s.before}, {"after", s.after}}; }

inline void to_json(json &j, const IrrRow &row)
{
    j = json{{"bipartition", row.label.bp}, {"dim", count_to_json(row.dim)}};
    if (row.label.name)
        j["name"] = *row.label.name;
}

inline void to_json(json &j, const Check &c)
{
    j = json{{"name", c.name}, {"pass", c.pass}, {"lhs", c.lhs}, {"rhs", c.rhs}};
}

inline void to_json(json &j, const ClaimReport &r) { j = json{{"case", r.case_name}, {"checks", r.checks}}; }

} // namespace exotic

#endif
