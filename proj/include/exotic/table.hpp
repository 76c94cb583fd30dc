#ifndef EXOTIC_TABLE_HPP
#define EXOTIC_TABLE_HPP

#include <sstream>
#include <string>
#include <vector>

#include "bijections.hpp"
#include "normal_forms.hpp"
#include "serialization.hpp"
#include "weyl.hpp"

// Correspondence tables and the CSV dialect used by the command line tool:
// comma separated, lists joined with ';', segments written r-s, header row
// always present, '\n' line endings.

namespace exotic {

struct TableRow {
    int n = 0;
    MarkedPartition mp;
    SegmentedPartition sp;
    BiPartition bp;
    std::string normal_form;
    count_t irr_dim;
};

// One row per marked partition of n, in enumeration order.
inline std::vector<TableRow> make_table(int n)
{
    std::vector<TableRow> rows;
    for (const auto &mp : enumerate_marked(n)) {
        TableRow row;
        row.n = n;
        row.mp = mp;
        row.sp = mp_to_sp(mp);
        row.bp = sp_to_p2(row.sp);
        row.normal_form = to_text(build_normal_form(mp));
        row.irr_dim = irr_dim(row.bp);
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace csv {

inline std::string list(const std::vector<int> &v)
{
    std::string s;
    for (std::size_t k = 0; k < v.size(); ++k)
        s += (k ? ";" : "") + std::to_string(v[k]);
    return s;
}

inline std::string list(const Partition &p) { return list(p.parts); }

inline std::string segments(const std::vector<Segment> &segs)
{
    std::string s;
    for (std::size_t k = 0; k < segs.size(); ++k)
        s += (k ? ";" : "") + std::to_string(segs[k].first) + "-" + std::to_string(segs[k].last);
    return s;
}

} // namespace csv

inline const char *table_csv_header = "lambda,marks,segments,gamma,mu,normal_form,irr_dim";

inline std::string render_table_csv(const std::vector<TableRow> &rows)
{
    std::ostringstream os;
    os << table_csv_header << '\n';
    for (const auto &r : rows)
        os << csv::list(r.mp.lambda) << ',' << csv::list(r.mp.marks) << ',' << csv::segments(r.sp.segments) << ','
           << csv::list(r.bp.first) << ',' << csv::list(r.bp.second) << ',' << r.normal_form << ',' << r.irr_dim
           << '\n';
    return os.str();
}

inline json table_json(const std::vector<TableRow> &rows)
{
    json out = json::array();
    for (const auto &r : rows) {
        json segs = json(r.sp)["segments"];
        out.push_back(json{{"lambda", r.mp.lambda},
                           {"marks", r.mp.marks},
                           {"segments", segs},
                           {"gamma", r.bp.first},
                           {"mu", r.bp.second},
                           {"normal_form", r.normal_form},
                           {"irr_dim", count_to_json(r.irr_dim)}});
    }
    return out;
}

inline std::string render_table_json(const std::vector<TableRow> &rows) { return table_json(rows).dump() + "\n"; }

} // namespace exotic

#endif
