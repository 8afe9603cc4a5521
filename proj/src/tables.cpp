#include "lenscert/tables.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

#include "fixtures.hpp"

namespace lenscert {

std::string_view bundled_table1_csv() { return fixtures::kTable1; }
std::string_view bundled_table2_csv() { return fixtures::kTable2; }
std::string_view bundled_errata_csv() { return fixtures::kErrata; }

std::vector<TableRow> bundled_table1() { return parse_table_csv(std::string(bundled_table1_csv())); }
std::vector<TableRow> bundled_table2() { return parse_table_csv(std::string(bundled_table2_csv())); }

std::vector<TableRow> bundled_rows(Int p_min, Int p_max) {
    std::vector<TableRow> out;
    for (const auto& table : {bundled_table1(), bundled_table2()})
        for (const auto& r : table)
            if (r.p >= p_min && r.p <= p_max) out.push_back(r);
    std::sort(out.begin(), out.end());
    return out;
}

std::string_view erratum_kind_name(ErratumKind kind) {
    switch (kind) {
        case ErratumKind::inverse: return "inverse";
        case ErratumKind::non_square: return "non-square";
        case ErratumKind::datum: return "datum";
    }
    return "unknown";
}

std::vector<TableErratum> bundled_errata() {
    std::vector<TableErratum> out;
    std::istringstream in{std::string(bundled_errata_csv())};
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line.rfind("table,", 0) == 0) continue;
        auto bad = [&] { return std::invalid_argument("errata: malformed line '" + line + "'"); };
        Int v[8];
        const char* ptr = line.data();
        const char* end = ptr + line.size();
        for (Int& x : v) {
            auto [next, ec] = std::from_chars(ptr, end, x);
            if (ec != std::errc() || next == end || *next != ',') throw bad();
            ptr = next + 1;
        }
        const std::string_view kind(ptr, static_cast<std::size_t>(end - ptr));
        TableErratum e{static_cast<int>(v[0]), {v[1], v[2], v[3], v[4]}, {v[1], v[5], v[6], v[7]}, ErratumKind::inverse};
        if (kind == "inverse") e.kind = ErratumKind::inverse;
        else if (kind == "non-square") e.kind = ErratumKind::non_square;
        else if (kind == "datum") e.kind = ErratumKind::datum;
        else throw bad();
        out.push_back(e);
    }
    return out;
}

std::vector<TableRow> printed_rows(int table) {
    if (table != 1 && table != 2) throw std::invalid_argument("printed_rows: table must be 1 or 2");
    std::vector<TableRow> rows = table == 1 ? bundled_table1() : bundled_table2();
    for (const auto& e : bundled_errata()) {
        if (e.table != table) continue;
        auto it = std::find(rows.begin(), rows.end(), e.row);
        if (it == rows.end()) throw std::logic_error("printed_rows: erratum row not in bundled table");
        *it = e.printed;
    }
    std::sort(rows.begin(), rows.end());
    return rows;
}

TableDiff diff_tables(const std::vector<TableRow>& actual, const std::vector<TableRow>& expected) {
    std::vector<TableRow> a = actual, e = expected;
    std::sort(a.begin(), a.end());
    std::sort(e.begin(), e.end());
    TableDiff d;
    std::set_difference(e.begin(), e.end(), a.begin(), a.end(), std::back_inserter(d.missing));
    std::set_difference(a.begin(), a.end(), e.begin(), e.end(), std::back_inserter(d.extra));
    return d;
}

}  // namespace lenscert
