#pragma once

// Enumeration of lens surgeries on L-space homology spheres: full sweeps over
// (p, q, h), the quadratic surgery families, conjectured patterns and
// plot-data emission.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lenscert/certify.hpp"

namespace lenscert {

enum class SearchMode {
    square_filtered,  // q := [h^2]_p for h in [1, p/2]
    exhaustive,       // every coprime (q, h)
};

std::string_view mode_name(SearchMode mode);

struct SearchOptions {
    SearchMode mode = SearchMode::square_filtered;
    unsigned threads = 0;  // 0: hardware concurrency
    bool require_even_d = true;
};

struct SearchHit {
    SurgeryDatum datum;
    Int lens_q = 0;
    Int class_h = 0;
    bool boundary = false;

    friend bool operator==(const SearchHit&, const SearchHit&) = default;
};

struct SearchReport {
    Int p_min = 0;
    Int p_max = 0;
    SearchMode mode = SearchMode::square_filtered;
    Int candidates = 0;
    std::vector<SearchHit> hits;  // one per canonical datum, sorted by (p, q, h, d, g)
    std::map<RejectStage, Int> rejections;
    /// d of every candidate that passes all checks other than parity. Odd entries are near-misses.
    std::map<Int, Int> d_histogram;
};

SearchReport enumerate(Int p_min, Int p_max, const SearchOptions& options = {});

/// `p,q,h,g` rows for hits with the given d and 2g - 1 < p, with header line.
std::string table_csv(const SearchReport& report, Int d);

/// `p,q,h,d,g` rows for every hit, with header line.
std::string hits_csv(const SearchReport& report);

/// Rejection statistics and d histogram as a JSON document.
std::string report_json(const SearchReport& report);

struct TableRow {
    Int p, q, h, g;
    friend auto operator<=>(const TableRow&, const TableRow&) = default;
};

std::vector<TableRow> table_rows(const SearchReport& report, Int d);

/// Parses `p,q,h,g` CSV (header optional). Throws std::invalid_argument on malformed lines.
std::vector<TableRow> parse_table_csv(const std::string& text);

std::string format_table_csv(const std::vector<TableRow>& rows);

// ---------------------------------------------------------------------------
// Quadratic families

enum class GenusRule {
    none,              // sporadic member
    minus_abs,         // 2g = p + 1 - |l|
    minus_two_abs,     // 2g = p + 1 - 2|l|
    minus_abs_odd,     // 2g = p + 1 - |2l + 1|
};

struct FamilySpec {
    std::string label;
    Int p2 = 0, p1 = 0, p0 = 0;  // p(l) = p2 l^2 + p1 l + p0
    Int h1 = 0, h0 = 0;          // h(l) = h1 l + h0
    GenusRule rule = GenusRule::none;
    std::optional<SurgeryDatum> sporadic;  // p, q, h only

    Int p_at(Int l) const { return p2 * l * l + p1 * l + p0; }
    Int h_at(Int l) const { return h1 * l + h0; }
};

/// The twenty families a), b), ..., m) and the sporadic n).
const std::vector<FamilySpec>& family_specs();

/// 2g predicted by the rule, or nullopt for sporadic members.
std::optional<Int> expected_two_g(GenusRule rule, Int p, Int l);

struct FamilyInstance {
    std::string label;
    Int ell = 0;
    Int p = 0;
    Int h = 0;  // h(l) reduced into [0, p)
    CertifyResult result;
    bool genus_rule_ok = false;
};

/// Every family at every l in [l_min, l_max] \ {0}, plus the sporadic member once.
std::vector<FamilyInstance> families(Int l_min, Int l_max);

// ---------------------------------------------------------------------------
// Conjectured patterns

/// 1-4: L(p, q) in one of the explicit quadratic (p, q) families; 5: 3.21 <= h^2/p <= 3.61;
/// 6: 1.15 <= h^2/p <= 1.28 for some h in {+-h^{+-1}}. First match wins; nullopt if none.
std::optional<int> conjecture_check(const Certificate& cert);
std::optional<int> conjecture_check(const SurgeryDatum& datum);

// ---------------------------------------------------------------------------
// Plot data

struct PlotPoint {
    Int h, p;
    friend auto operator<=>(const PlotPoint&, const PlotPoint&) = default;
};

/// (least h in the class set, p) for each nontrivial d-certificate with p <= p_max, sorted by p.
std::vector<PlotPoint> plotdata(Int p_max, Int d, unsigned threads = 0);
std::string plot_csv(const std::vector<PlotPoint>& points);

}  // namespace lenscert
