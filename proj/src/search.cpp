#include "lenscert/search.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "lenscert/serialize.hpp"

namespace lenscert {

std::string_view mode_name(SearchMode mode) {
    return mode == SearchMode::square_filtered ? "square" : "exhaustive";
}

namespace {

struct Shard {
    Int candidates = 0;
    std::vector<SearchHit> hits;
    std::map<RejectStage, Int> rejections;
    std::map<Int, Int> d_histogram;
};

void search_slope(Int p, const SearchOptions& options, Shard& out) {
    DVectorCache cache;
    const SquareTable squares(p);
    CertifyOptions strict;
    strict.require_even_d = options.require_even_d;
    CertifyOptions lenient;
    lenient.require_even_d = false;

    auto consider = [&](Int q, Int h) {
        ++out.candidates;
        if (gcd(p, q) != 1 || gcd(p, h) != 1) {
            ++out.rejections[RejectStage::coprimality];
            return;
        }
        if (!squares.contains(q)) {
            ++out.rejections[RejectStage::square_test];
            return;
        }
        // The constant coefficient survives reduction untouched and must be +-1.
        const Int a0 = reduced_coeff(p, q, h, 0);
        if (a0 != 1 && a0 != -1) {
            ++out.rejections[RejectStage::os_form];
            return;
        }
        CertifyResult r = certify(p, q, h, strict, cache);
        if (const auto* rej = std::get_if<Rejection>(&r)) {
            ++out.rejections[rej->stage];
            if (rej->stage == RejectStage::odd_d) {
                CertifyResult near = certify(p, q, h, lenient, cache);
                if (const auto* c = std::get_if<Certificate>(&near)) ++out.d_histogram[c->datum.d];
            }
            return;
        }
        const auto& cert = std::get<Certificate>(r);
        ++out.d_histogram[cert.datum.d];
        out.hits.push_back({cert.datum, cert.lens_q, cert.class_h, cert.boundary});
    };

    if (options.mode == SearchMode::square_filtered) {
        for (Int h = 1; 2 * h <= p; ++h) {
            if (gcd(h, p) != 1) continue;
            consider((h * h) % p, h);
        }
    } else {
        for (Int q = 1; q < p; ++q)
            for (Int h = 1; h < p; ++h) consider(q, h);
    }
}

bool hit_less(const SearchHit& a, const SearchHit& b) {
    if (a.datum != b.datum) return a.datum < b.datum;
    if (a.lens_q != b.lens_q) return a.lens_q < b.lens_q;
    return a.class_h < b.class_h;
}

unsigned resolve_threads(unsigned requested) {
    if (requested != 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

}  // namespace

SearchReport enumerate(Int p_min, Int p_max, const SearchOptions& options) {
    if (p_min < 2 || p_min > p_max) throw std::invalid_argument("enumerate: need 2 <= p_min <= p_max");
    const auto count = static_cast<std::size_t>(p_max - p_min + 1);
    std::vector<Shard> shards(count);

    const unsigned threads = std::min<unsigned>(resolve_threads(options.threads), static_cast<unsigned>(count));
    if (threads <= 1) {
        for (std::size_t k = 0; k < count; ++k) search_slope(p_min + static_cast<Int>(k), options, shards[k]);
    } else {
        // Larger slopes cost more; hand them out first.
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t k; (k = next.fetch_add(1)) < count;) {
                std::size_t idx = count - 1 - k;
                search_slope(p_min + static_cast<Int>(idx), options, shards[idx]);
            }
        };
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    SearchReport report;
    report.p_min = p_min;
    report.p_max = p_max;
    report.mode = options.mode;
    for (auto& s : shards) {
        report.candidates += s.candidates;
        for (auto [stage, n] : s.rejections) report.rejections[stage] += n;
        for (auto [d, n] : s.d_histogram) report.d_histogram[d] += n;
        report.hits.insert(report.hits.end(), s.hits.begin(), s.hits.end());
    }
    std::sort(report.hits.begin(), report.hits.end(), hit_less);
    report.hits.erase(std::unique(report.hits.begin(), report.hits.end(),
                                  [](const SearchHit& a, const SearchHit& b) { return a.datum == b.datum; }),
                      report.hits.end());
    return report;
}

std::vector<TableRow> table_rows(const SearchReport& report, Int d) {
    std::vector<TableRow> rows;
    for (const auto& hit : report.hits) {
        const auto& x = hit.datum;
        if (x.d == d && 2 * x.g - 1 < x.p) rows.push_back({x.p, x.q, x.h, x.g});
    }
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    return rows;
}

std::string format_table_csv(const std::vector<TableRow>& rows) {
    std::ostringstream os;
    os << "p,q,h,g\n";
    for (const auto& r : rows) os << r.p << ',' << r.q << ',' << r.h << ',' << r.g << '\n';
    return os.str();
}

std::string table_csv(const SearchReport& report, Int d) { return format_table_csv(table_rows(report, d)); }

std::string hits_csv(const SearchReport& report) {
    std::ostringstream os;
    os << "p,q,h,d,g\n";
    for (const auto& hit : report.hits) {
        const auto& x = hit.datum;
        os << x.p << ',' << x.q << ',' << x.h << ',' << x.d << ',' << x.g << '\n';
    }
    return os.str();
}

std::string report_json(const SearchReport& report) {
    Json j;
    j["p_min"] = report.p_min;
    j["p_max"] = report.p_max;
    j["mode"] = std::string(mode_name(report.mode));
    j["candidates"] = report.candidates;
    j["certificates"] = report.hits.size();
    Json rej = Json::object();
    for (RejectStage s : kAllStages) {
        auto it = report.rejections.find(s);
        rej[std::string(stage_name(s))] = it == report.rejections.end() ? 0 : it->second;
    }
    j["rejections"] = std::move(rej);
    Json hist = Json::object();
    for (auto [d, n] : report.d_histogram) hist[std::to_string(d)] = n;
    j["d_histogram"] = std::move(hist);
    return dump(j);
}

std::vector<TableRow> parse_table_csv(const std::string& text) {
    std::vector<TableRow> rows;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line.rfind("p,", 0) == 0) continue;
        Int v[4];
        const char* ptr = line.data();
        const char* end = line.data() + line.size();
        for (int k = 0; k < 4; ++k) {
            auto [next, ec] = std::from_chars(ptr, end, v[k]);
            if (ec != std::errc()) throw std::invalid_argument("line " + std::to_string(lineno) + ": bad integer");
            ptr = next;
            if (k < 3) {
                if (ptr == end || *ptr != ',') throw std::invalid_argument("line " + std::to_string(lineno) + ": expected ','");
                ++ptr;
            }
        }
        if (ptr != end) throw std::invalid_argument("line " + std::to_string(lineno) + ": trailing characters");
        rows.push_back({v[0], v[1], v[2], v[3]});
    }
    return rows;
}

// ---------------------------------------------------------------------------

const std::vector<FamilySpec>& family_specs() {
    static const std::vector<FamilySpec> specs = [] {
        using G = GenusRule;
        std::vector<FamilySpec> s = {
            {"a", 14, 7, 1, 7, 2, G::minus_abs, {}},
            {"b", 20, 15, 3, 5, 2, G::minus_abs, {}},
            {"c", 30, 9, 1, 6, 1, G::minus_abs, {}},
            {"d", 42, 23, 3, 7, 2, G::minus_abs, {}},
            {"d'", 42, 47, 13, 7, 4, G::minus_abs, {}},
            {"e", 52, 15, 1, 13, 2, G::minus_abs, {}},
            {"e'", 52, 63, 19, 13, 8, G::minus_abs, {}},
            {"f", 54, 15, 1, 27, 4, G::minus_abs, {}},
            {"f'", 54, 39, 7, 27, 10, G::minus_abs, {}},
            {"g", 69, 17, 1, 23, 3, G::minus_two_abs, {}},
            {"g'", 69, 29, 3, 23, 5, G::minus_two_abs, {}},
            {"h", 85, 19, 1, 17, 2, G::minus_two_abs, {}},
            {"h'", 85, 49, 7, 17, 5, G::minus_two_abs, {}},
            {"i", 99, 35, 3, 11, 2, G::minus_two_abs, {}},
            {"i'", 99, 53, 7, 11, 3, G::minus_two_abs, {}},
            {"j", 120, 16, 1, 12, 1, G::minus_two_abs, {}},
            {"k", 120, 20, 1, 20, 2, G::minus_two_abs, {}},
            {"l", 120, 36, 3, 12, 2, G::minus_two_abs, {}},
            {"m", 120, 104, 22, 12, 5, G::minus_abs_odd, {}},
        };
        FamilySpec n;
        n.label = "n";
        n.sporadic = SurgeryDatum{191, 34, 15, 0, 0};
        s.push_back(n);
        return s;
    }();
    return specs;
}

std::optional<Int> expected_two_g(GenusRule rule, Int p, Int l) {
    const Int al = l < 0 ? -l : l;
    switch (rule) {
        case GenusRule::none: return std::nullopt;
        case GenusRule::minus_abs: return p + 1 - al;
        case GenusRule::minus_two_abs: return p + 1 - 2 * al;
        case GenusRule::minus_abs_odd: {
            Int t = 2 * l + 1;
            return p + 1 - (t < 0 ? -t : t);
        }
    }
    return std::nullopt;
}

namespace {

FamilyInstance certify_member(const std::string& label, Int ell, Int p, Int h_raw, GenusRule rule) {
    FamilyInstance inst{label, ell, p, 0, Rejection{p, 0, h_raw, RejectStage::coprimality, "p < 2"}, false};
    if (p < 2) return inst;
    inst.h = reduce_mod(h_raw, p).value;
    if (gcd(inst.h, p) != 1) {
        inst.result = Rejection{p, 0, inst.h, RejectStage::coprimality, "gcd(h, p) != 1"};
        return inst;
    }
    inst.result = certify(p, (inst.h * inst.h) % p, inst.h);
    if (const auto* cert = std::get_if<Certificate>(&inst.result)) {
        auto want = expected_two_g(rule, p, ell);
        inst.genus_rule_ok = !want || *want == 2 * cert->datum.g;
    }
    return inst;
}

}  // namespace

std::vector<FamilyInstance> families(Int l_min, Int l_max) {
    if (l_min > l_max) throw std::invalid_argument("families: need l_min <= l_max");
    std::vector<FamilyInstance> out;
    for (const auto& spec : family_specs()) {
        if (spec.sporadic) {
            const auto& s = *spec.sporadic;
            FamilyInstance inst{spec.label, 0, s.p, s.h, certify_class(s.p, s.q, s.h), false};
            inst.genus_rule_ok = accepted(inst.result);
            out.push_back(std::move(inst));
            continue;
        }
        for (Int l = l_min; l <= l_max; ++l) {
            if (l == 0) continue;
            out.push_back(certify_member(spec.label, l, spec.p_at(l), spec.h_at(l), spec.rule));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

namespace {

struct LensPattern {
    Int p2, p1, p0;
    Int q2, q1, q0;
};

constexpr LensPattern kLensPatterns[] = {
    {54, 15, 1, 27, 21, 3},
    {54, 39, 7, 27, 33, 9},
    {69, 17, 1, 46, 19, 2},
    {69, 29, 3, 46, 27, 4},
};

bool in_band(Int h, Int p, Int lo_pct, Int hi_pct) {
    // lo/100 <= h^2/p <= hi/100
    const Int lhs = 100 * h * h;
    return lhs >= lo_pct * p && lhs <= hi_pct * p;
}

}  // namespace

std::optional<int> conjecture_check(const SurgeryDatum& datum) {
    const Int p = datum.p;
    int label = 1;
    for (const auto& pat : kLensPatterns) {
        for (Int l = -64; l <= 64; ++l) {
            if (l == 0) continue;
            if (pat.p2 * l * l + pat.p1 * l + pat.p0 != p) continue;
            Int q = pat.q2 * l * l + pat.q1 * l + pat.q0;
            if (gcd(q, p) == 1 && canonical_q(p, q) == datum.q) return label;
        }
        ++label;
    }
    const auto hs = h_class_set(p, datum.h);
    for (Int h : hs)
        if (in_band(h, p, 321, 361)) return 5;
    for (Int h : hs)
        if (in_band(h, p, 115, 128)) return 6;
    return std::nullopt;
}

std::optional<int> conjecture_check(const Certificate& cert) { return conjecture_check(cert.datum); }

std::vector<PlotPoint> plotdata(Int p_max, Int d, unsigned threads) {
    if (p_max < 2) throw std::invalid_argument("plotdata: p_max must be at least 2");
    SearchOptions options;
    options.threads = threads;
    SearchReport report = enumerate(2, p_max, options);
    std::vector<PlotPoint> points;
    for (const auto& hit : report.hits) {
        const auto& x = hit.datum;
        if (x.d == d && x.g >= 1 && !hit.boundary) points.push_back({x.h, x.p});
    }
    std::sort(points.begin(), points.end(), [](const PlotPoint& a, const PlotPoint& b) {
        return a.p != b.p ? a.p < b.p : a.h < b.h;
    });
    points.erase(std::unique(points.begin(), points.end()), points.end());
    return points;
}

std::string plot_csv(const std::vector<PlotPoint>& points) {
    std::ostringstream os;
    os << "h,p\n";
    for (const auto& pt : points) os << pt.h << ',' << pt.p << '\n';
    return os.str();
}

}  // namespace lenscert
