#include <gtest/gtest.h>

#include <set>

#include "json.hpp"
#include "lenscert/search.hpp"
#include "lenscert/tables.hpp"

using namespace lenscert;

namespace {

std::set<SurgeryDatum> data_of(const SearchReport& r) {
    std::set<SurgeryDatum> out;
    for (const auto& h : r.hits) out.insert(h.datum);
    return out;
}

}  // namespace

TEST(Enumerate, SmallSquareSearch) {
    SearchReport r = enumerate(2, 30);
    EXPECT_EQ(r.mode, SearchMode::square_filtered);
    std::vector<TableRow> d2 = table_rows(r, 2);
    EXPECT_EQ(d2, (std::vector<TableRow>{{8, 1, 3, 4}, {22, 3, 5, 11}}));
    EXPECT_EQ(table_csv(r, 2), "p,q,h,g\n8,1,3,4\n22,3,5,11\n");
    for (const auto& h : r.hits) {
        EXPECT_TRUE(h.datum.d == 0 || h.datum.d == 2);
        if (h.datum.d == 0) EXPECT_LE(2 * h.datum.g - 1, h.datum.p);
    }
    EXPECT_TRUE(std::is_sorted(r.hits.begin(), r.hits.end(),
                               [](const SearchHit& a, const SearchHit& b) { return a.datum < b.datum; }));
}

TEST(Enumerate, ModeEquivalence) {
    SearchOptions ex;
    ex.mode = SearchMode::exhaustive;
    SearchReport a = enumerate(2, 60);
    SearchReport b = enumerate(2, 60, ex);
    EXPECT_EQ(data_of(a), data_of(b));
    EXPECT_EQ(a.hits.size(), b.hits.size());
    EXPECT_GT(b.candidates, a.candidates);
}

TEST(Enumerate, DeterministicAcrossThreadCounts) {
    SearchOptions one, four;
    one.threads = 1;
    four.threads = 4;
    SearchReport a = enumerate(2, 150, one);
    SearchReport b = enumerate(2, 150, four);
    EXPECT_EQ(hits_csv(a), hits_csv(b));
    EXPECT_EQ(report_json(a), report_json(b));
}

TEST(Enumerate, ReportJson) {
    SearchOptions ex;
    ex.mode = SearchMode::exhaustive;
    SearchReport r = enumerate(2, 40, ex);
    auto j = nlohmann::json::parse(report_json(r));
    EXPECT_EQ(j["mode"], "exhaustive");
    EXPECT_EQ(j["p_max"], 40);
    Int rejected = 0;
    for (auto s : kAllStages) rejected += j["rejections"][std::string(stage_name(s))].get<Int>();
    Int hist = 0;
    for (auto& [k, v] : j["d_histogram"].items()) hist += v.get<Int>();
    EXPECT_EQ(rejected + hist, r.candidates);
    for (auto& [k, v] : j["d_histogram"].items()) EXPECT_TRUE(k == "0" || k == "2") << k;
}

TEST(TableCsv, ParseAndFormat) {
    std::vector<TableRow> rows{{8, 1, 3, 4}, {22, 3, 5, 11}};
    EXPECT_EQ(parse_table_csv(format_table_csv(rows)), rows);
    EXPECT_EQ(parse_table_csv("8,1,3,4\r\n22,3,5,11\n"), rows);
    EXPECT_THROW(parse_table_csv("8,1,3\n"), std::invalid_argument);
    EXPECT_THROW(parse_table_csv("8,1,x,4\n"), std::invalid_argument);
}

TEST(Families, SpecsAndExamples) {
    EXPECT_EQ(family_specs().size(), 20u);
    auto inst = families(-1, 1);
    auto find = [&](const std::string& label, Int ell) -> const FamilyInstance& {
        for (const auto& f : inst)
            if (f.label == label && f.ell == ell) return f;
        throw std::runtime_error("missing instance");
    };
    const auto& a1 = std::get<Certificate>(find("a", 1).result);
    EXPECT_EQ(a1.datum, (SurgeryDatum{22, 3, 5, 2, 11}));
    const auto& am1 = std::get<Certificate>(find("a", -1).result);
    EXPECT_EQ(am1.datum, (SurgeryDatum{8, 1, 3, 2, 4}));
    const auto& n = std::get<Certificate>(find("n", 0).result);
    EXPECT_EQ(n.datum, (SurgeryDatum{191, 34, 15, 2, 95}));
    for (const auto& f : inst) EXPECT_NE(f.ell == 0, f.label != "n");
}

TEST(Families, AllCertifyWithGenusRule) {
    for (const auto& f : families(-7, 7)) {
        ASSERT_TRUE(accepted(f.result)) << f.label << " " << f.ell;
        EXPECT_TRUE(f.genus_rule_ok) << f.label << " " << f.ell;
        EXPECT_EQ(std::get<Certificate>(f.result).datum.d, 2);
    }
}

TEST(Families, GenusRules) {
    EXPECT_EQ(expected_two_g(GenusRule::minus_abs, 22, 1), 22);
    EXPECT_EQ(expected_two_g(GenusRule::minus_two_abs, 87, -1), 86);
    EXPECT_EQ(expected_two_g(GenusRule::minus_abs_odd, 246, 1), 244);
    EXPECT_FALSE(expected_two_g(GenusRule::none, 191, 0));
}

TEST(Conjecture, Examples) {
    auto f1 = std::get<Certificate>(certify_class(70, 31 * 31 % 70, 31));
    EXPECT_EQ(f1.datum.p, 70);
    EXPECT_EQ(conjecture_check(f1), 1);
    auto g1 = std::get<Certificate>(certify_class(87, 13, 10));
    EXPECT_EQ(conjecture_check(g1), 3);
    auto k2 = std::get<Certificate>(certify(8, 1, 3));
    EXPECT_EQ(conjecture_check(k2), std::nullopt);
    EXPECT_EQ(conjecture_check(k2.datum), conjecture_check(k2));
}

TEST(PlotData, Examples) {
    EXPECT_TRUE(plotdata(7, 2).empty());
    auto pts = plotdata(30, 2);
    EXPECT_EQ(pts, (std::vector<PlotPoint>{{3, 8}, {5, 22}}));
    EXPECT_EQ(plot_csv(pts), "h,p\n3,8\n5,22\n");
    auto d0 = plotdata(30, 0);
    EXPECT_FALSE(d0.empty());
    for (const auto& pt : d0) EXPECT_LE(pt.p, 30);
}

TEST(PlotData, OnePointPerTableRow) {
    auto pts = plotdata(200, 2);
    std::vector<TableRow> rows = bundled_rows(2, 200);
    ASSERT_EQ(pts.size(), rows.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        EXPECT_EQ(pts[i].p, rows[i].p);
        EXPECT_EQ(pts[i].h, rows[i].h);
    }
}
