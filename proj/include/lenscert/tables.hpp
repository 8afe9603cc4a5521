#pragma once

// Reference tables of d(Y) = 2 lens surgeries, bundled into the library at
// build time from data/*.csv.

#include <string>
#include <string_view>
#include <vector>

#include "lenscert/search.hpp"

namespace lenscert {

/// Table 1 covers 2 <= p <= 711, table 2 covers 712 <= p <= 2007.
struct TableRange {
    Int p_min;
    Int p_max;
};

inline constexpr TableRange kTable1Range{2, 711};
inline constexpr TableRange kTable2Range{712, 2007};

std::string_view bundled_table1_csv();
std::string_view bundled_table2_csv();
std::string_view bundled_errata_csv();

std::vector<TableRow> bundled_table1();
std::vector<TableRow> bundled_table2();

/// Rows of tables 1 and 2 with p in [p_min, p_max].
std::vector<TableRow> bundled_rows(Int p_min, Int p_max);

enum class ErratumKind {
    inverse,     // printed q is the inverse of the canonical q: the same lens space
    non_square,  // printed q is not a square mod p
    datum,       // printed (q, h, g) does not certify
};

std::string_view erratum_kind_name(ErratumKind kind);

/// A printed row that differs from the bundled (canonical, certified) row.
struct TableErratum {
    int table;
    TableRow row;
    TableRow printed;
    ErratumKind kind;
};

std::vector<TableErratum> bundled_errata();

/// Rows as printed in the source tables: the bundled rows with every erratum undone.
std::vector<TableRow> printed_rows(int table);

struct TableDiff {
    std::vector<TableRow> missing;  // expected but absent
    std::vector<TableRow> extra;    // present but not expected

    bool empty() const { return missing.empty() && extra.empty(); }
};

TableDiff diff_tables(const std::vector<TableRow>& actual, const std::vector<TableRow>& expected);

}  // namespace lenscert
