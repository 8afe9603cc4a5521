#include "lenscert/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "lenscert/alex.hpp"
#include "lenscert/casson.hpp"
#include "lenscert/certify.hpp"
#include "lenscert/dinv.hpp"
#include "lenscert/fgroup.hpp"
#include "lenscert/search.hpp"
#include "lenscert/serialize.hpp"
#include "lenscert/tables.hpp"

namespace lenscert {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
    if (!ok) throw UsageError(what);
}

void require_coprime(Int a, Int b, const char* a_name, const char* b_name) {
    require(gcd(a, b) == 1, std::string("gcd(") + a_name + ", " + b_name + ") must be 1, got gcd(" +
                                std::to_string(a) + ", " + std::to_string(b) + ") = " + std::to_string(gcd(a, b)));
}

template <typename T>
std::string join(const std::vector<T>& v, const char* sep = ",") {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
    return os.str();
}

/// Writes to `path`, or to `out` when path is empty.
void emit(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
    f << text;
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

SearchMode parse_mode(const std::string& s) {
    if (s == "square") return SearchMode::square_filtered;
    if (s == "exhaustive") return SearchMode::exhaustive;
    throw UsageError("--mode must be 'square' or 'exhaustive'");
}

Lift parse_lift(const std::string& s) {
    if (s == "standard") return Lift::standard;
    if (s == "top") return Lift::top;
    throw UsageError("--lift must be 'standard' or 'top'");
}

IndexConvention parse_convention(const std::string& s) {
    for (IndexConvention c : kAllConventions)
        if (convention_name(c) == s) return c;
    throw UsageError("unknown --convention '" + s + "'");
}

void print_certificate(const Certificate& cert, std::ostream& out) {
    const auto& x = cert.datum;
    out << "certified L(" << x.p << "," << x.q << ") h=" << x.h << "\n";
    out << "p=" << x.p << " q=" << x.q << " h=" << x.h << " d=" << x.d << " g=" << x.g << "\n";
    out << "computed with q=" << cert.lens_q << " h=" << cert.class_h << " lift=" << lift_name(cert.lift)
        << (cert.boundary ? " (2g-1 = p)" : "") << "\n";
    out << "alexander: " << cert.poly.str() << "\n";
    out << "coefficients: " << join(cert.poly.half()) << "\n";
    out << "torsions: " << join(cert.torsions.entries) << "\n";
    out << "lambda(L(p,q)): " << cert.lambda_pq << "\n";
    out << "lambda(L(p,1)): " << cert.lambda_p1 << "\n";
    auto pattern = conjecture_check(cert);
    out << "pattern: " << (pattern ? std::to_string(*pattern) : std::string("none")) << "\n";
    for (const auto& c : cert.checks) out << "check " << c.name << " " << (c.passed ? "PASS" : "FAIL") << "\n";
}

int cmd_dinv(Int p, Int q, const std::optional<Int>& i, std::ostream& out) {
    require(p >= 1, "p must be positive");
    require_coprime(p, q, "p", "q");
    const Int qr = p == 1 ? 0 : reduce_mod(q, p).value;
    if (i) {
        require(*i >= 0 && *i < p, "i must lie in [0, p)");
        out << d_lens(p, qr, *i) << "\n";
    } else {
        for (Int k = 0; k < p; ++k) out << k << "," << d_lens(p, qr, k) << "\n";
    }
    return kExitOk;
}

int cmd_alex(Int p, Int q, Int h, std::ostream& out) {
    require(p >= 2, "p must be at least 2");
    require_coprime(p, q, "p", "q");
    require_coprime(p, h, "p", "h");
    ReducedVector v = reduced_coeffs(p, q, h);
    Int g = genus_from_reduced(v);
    out << "m: " << alex_m(p, h) << "\n";
    out << "reduced: " << join(v.entries) << "\n";
    out << "genus: " << g << "\n";
    auto poly = unreduce(v, g);
    if (!poly) {
        out << "alexander: none (reduced coefficients do not lift)\n";
        return kExitMismatch;
    }
    out << "alexander: " << poly->str() << "\n";
    auto form = os_form_check(*poly);
    out << "os-form: k=" << form->k << " n=" << join(form->n) << "\n";
    out << "torsions: " << join(torsion_from_poly(*poly).entries) << "\n";
    out << "dd1: " << dd1(*poly) << "\n";
    return kExitOk;
}

int cmd_lambda(Int p, Int q, std::ostream& out) {
    require(p >= 1, "p must be positive");
    require_coprime(p, q, "p", "q");
    const Int qr = p == 1 ? 0 : reduce_mod(q, p).value;
    Rational r = lambda_rustamov(p, qr);
    Rational s = lambda_dedekind(p, qr);
    out << "lambda_rustamov: " << r << "\n";
    out << "lambda_dedekind: " << s << "\n";
    return r == s ? kExitOk : kExitMismatch;
}

int cmd_certify(Int p, Int q, Int h, bool json, const std::string& lift, bool allow_odd, std::ostream& out) {
    require(p >= 2, "p must be at least 2");
    require_coprime(p, q, "p", "q");
    require_coprime(p, h, "p", "h");
    CertifyOptions options;
    options.lift = parse_lift(lift);
    options.require_even_d = !allow_odd;
    CertifyResult r = certify_class(p, q, h, options);
    if (const auto* rej = std::get_if<Rejection>(&r)) {
        out << "rejected L(" << p << "," << q << ") h=" << h << " at stage " << stage_name(rej->stage);
        if (!rej->detail.empty()) out << " (" << rej->detail << ")";
        out << "\n";
        return kExitMismatch;
    }
    const auto& cert = std::get<Certificate>(r);
    if (json) out << dump(certificate_to_json(cert));
    else print_certificate(cert, out);
    return kExitOk;
}

int cmd_tables_verify(const std::string& path, const std::string& which, std::ostream& out) {
    std::vector<TableRow> actual;
    try {
        actual = parse_table_csv(read_file(path));
    } catch (const std::invalid_argument& e) {
        throw UsageError(path + ": " + e.what());
    }
    TableRange range{kTable1Range.p_min, kTable2Range.p_max};
    if (which == "1") range = kTable1Range;
    else if (which == "2") range = kTable2Range;
    else if (which == "all") range = {kTable1Range.p_min, kTable2Range.p_max};
    else if (which == "auto") {
        // Smallest bundled range holding every row of the file.
        Int lo = kTable2Range.p_max, hi = kTable1Range.p_min;
        for (const auto& r : actual) {
            lo = std::min(lo, r.p);
            hi = std::max(hi, r.p);
        }
        if (!actual.empty() && hi <= kTable1Range.p_max) range = kTable1Range;
        else if (!actual.empty() && lo >= kTable2Range.p_min) range = kTable2Range;
    } else {
        throw UsageError("--table must be 1, 2, all or auto");
    }
    const auto expected = bundled_rows(range.p_min, range.p_max);
    TableDiff diff = diff_tables(actual, expected);
    for (const auto& r : diff.missing) out << "missing " << r.p << "," << r.q << "," << r.h << "," << r.g << "\n";
    for (const auto& r : diff.extra) out << "extra " << r.p << "," << r.q << "," << r.h << "," << r.g << "\n";
    for (const auto& e : bundled_errata()) {
        if (e.row.p < range.p_min || e.row.p > range.p_max) continue;
        const auto& x = e.printed;
        out << "note: table " << e.table << " prints " << x.p << "," << x.q << "," << x.h << "," << x.g << " for "
            << e.row.p << "," << e.row.q << "," << e.row.h << "," << e.row.g << " (" << erratum_kind_name(e.kind)
            << ")\n";
    }
    if (!diff.empty()) {
        out << "MISMATCH p in [" << range.p_min << "," << range.p_max << "]: " << diff.missing.size() << " missing, "
            << diff.extra.size() << " extra\n";
        return kExitMismatch;
    }
    out << "OK " << expected.size() << " rows match for p in [" << range.p_min << "," << range.p_max << "]\n";
    return kExitOk;
}

int cmd_group(Int p, Int q, Int h, Int max_cosets, const std::string& convention, std::ostream& out) {
    require(p >= 2, "p must be at least 2");
    require_coprime(p, q, "p", "q");
    require_coprime(p, h, "p", "h");
    require(max_cosets >= 1, "--max-cosets must be positive");
    CertifyResult r = certify_class(p, q, h);
    if (const auto* rej = std::get_if<Rejection>(&r)) {
        out << "rejected L(" << p << "," << q << ") h=" << h << " at stage " << stage_name(rej->stage) << "\n";
        return kExitMismatch;
    }
    const auto& cert = std::get<Certificate>(r);
    GroupPresentation pres = build_presentation(cert, parse_convention(convention));
    out << format_presentation(pres);
    out << "abelianization: " << abelianization_order(pres) << "\n";
    EnumerationResult e = group_order(pres, max_cosets);
    if (!e.closed) {
        out << "order: overflow after " << e.cosets_defined << " cosets\n";
        return kExitMismatch;
    }
    out << "order: " << e.order << "\n";
    out << "cosets defined: " << e.cosets_defined << "\n";
    return kExitOk;
}

int cmd_families(Int l_min, Int l_max, std::ostream& out) {
    require(l_min <= l_max, "--lmin must not exceed --lmax");
    int failures = 0;
    out << "family,l,p,q,h,d,g,status\n";
    for (const auto& inst : families(l_min, l_max)) {
        out << inst.label << "," << inst.ell << "," << inst.p << ",";
        if (const auto* cert = std::get_if<Certificate>(&inst.result)) {
            const auto& x = cert->datum;
            out << x.q << "," << x.h << "," << x.d << "," << x.g << "," << (inst.genus_rule_ok ? "ok" : "genus-mismatch");
            failures += inst.genus_rule_ok ? 0 : 1;
        } else {
            const auto& rej = std::get<Rejection>(inst.result);
            out << ",,,," << "rejected:" << stage_name(rej.stage);
            ++failures;
        }
        out << "\n";
    }
    return failures == 0 ? kExitOk : kExitMismatch;
}

int cmd_ras(Int p_max, std::ostream& out) {
    require(p_max >= 4, "--pmax must be at least 4");
    RasReport rep = ras_verify(p_max);
    out << "pairs checked: " << rep.pairs_checked << "\n";
    out << "pairs below threshold: " << rep.pairs_below_threshold << "\n";
    out << "violations: " << rep.violations.size() << "\n";
    for (const auto& v : rep.violations) out << "violation L(" << v.p << "," << v.q << ") lhs=" << v.lhs << "\n";
    return rep.violations.empty() ? kExitOk : kExitMismatch;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Certify and enumerate lens surgeries on L-space homology spheres", "lenscert"};
    app.set_help_flag("--help", "print this help and exit");
    app.require_subcommand(1);

    Int p = 0, q = 0, h = 0;
    std::optional<Int> label;

    auto* dinv = app.add_subcommand("dinv", "correction terms d(L(p,q), i)");
    dinv->add_option("p", p)->required();
    dinv->add_option("q", q)->required();
    dinv->add_option("i", label, "Spin^c label; all labels when omitted");

    auto* alex = app.add_subcommand("alex", "reduced coefficients and Alexander polynomial for (p,q,h)");
    alex->add_option("p", p)->required();
    alex->add_option("q", q)->required();
    alex->add_option("h", h)->required();

    auto* lambda = app.add_subcommand("lambda", "Casson-Walker invariant of L(p,q) by both routes");
    lambda->add_option("p", p)->required();
    lambda->add_option("q", q)->required();

    bool json = false, allow_odd = false;
    std::string lift = "standard";
    auto* cert = app.add_subcommand("certify", "certify the lens surgery datum (p,q,h)");
    cert->add_option("p", p)->required();
    cert->add_option("q", q)->required();
    cert->add_option("h", h)->required();
    cert->add_flag("--json", json, "print the certificate as JSON");
    cert->add_option("--lift", lift, "standard or top");
    cert->add_flag("--allow-odd-d", allow_odd, "accept odd d(Y)");

    Int p_min = 2, p_max = 0, d_filter = 0;
    std::string mode = "square", report_path, out_path;
    unsigned threads = 0;
    auto* search = app.add_subcommand("search", "enumerate certified surgeries");
    search->add_option("--pmin", p_min);
    search->add_option("--pmax", p_max)->required();
    search->add_option("--mode", mode, "square or exhaustive");
    auto* d_opt = search->add_option("--d", d_filter, "emit p,q,h,g rows with this d(Y)");
    search->add_option("--threads", threads, "worker threads (default: all cores)");
    search->add_option("--report", report_path, "write rejection statistics as JSON");
    search->add_option("--out", out_path, "write CSV here instead of stdout");
    search->add_flag("--allow-odd-d", allow_odd, "accept odd d(Y)");

    Int l_max = 7;
    std::optional<Int> l_min;
    auto* fam = app.add_subcommand("families", "certify the quadratic surgery families");
    fam->add_option("--lmax", l_max)->required();
    fam->add_option("--lmin", l_min, "default: -lmax");

    std::string verify_path, which = "auto";
    auto* tables = app.add_subcommand("tables", "bundled reference tables");
    auto* verify_opt = tables->add_option("--verify", verify_path, "diff a p,q,h,g CSV against the bundled tables");
    tables->add_option("--table", which, "1, 2, all or auto (default)");
    bool print_tables = false;
    tables->add_flag("--print", print_tables, "print the bundled tables");

    Int max_cosets = 1'000'000;
    std::string convention(convention_name(kPresentationConvention));
    auto* group = app.add_subcommand("group", "fundamental group presentation and coset enumeration");
    group->add_option("p", p)->required();
    group->add_option("q", q)->required();
    group->add_option("h", h)->required();
    group->add_option("--max-cosets", max_cosets);
    group->add_option("--convention", convention);

    auto* plot = app.add_subcommand("plotdata", "(h, p) points of certified surgeries");
    plot->add_option("--pmax", p_max)->required();
    plot->add_option("--d", d_filter)->required();
    plot->add_option("--threads", threads);
    plot->add_option("--out", out_path);

    auto* ras = app.add_subcommand("ras", "check the lambda threshold classification");
    ras->add_option("--pmax", p_max)->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (dinv->parsed()) return cmd_dinv(p, q, label, out);
        if (alex->parsed()) return cmd_alex(p, q, h, out);
        if (lambda->parsed()) return cmd_lambda(p, q, out);
        if (cert->parsed()) return cmd_certify(p, q, h, json, lift, allow_odd, out);
        if (search->parsed()) {
            require(p_min >= 2 && p_min <= p_max, "need 2 <= --pmin <= --pmax");
            SearchOptions options;
            options.mode = parse_mode(mode);
            options.threads = threads;
            options.require_even_d = !allow_odd;
            SearchReport report = enumerate(p_min, p_max, options);
            emit(out_path, d_opt->count() ? table_csv(report, d_filter) : hits_csv(report), out);
            if (!report_path.empty()) emit(report_path, report_json(report), out);
            return kExitOk;
        }
        if (fam->parsed()) return cmd_families(l_min.value_or(-l_max), l_max, out);
        if (tables->parsed()) {
            if (verify_opt->count()) return cmd_tables_verify(verify_path, which, out);
            require(print_tables, "tables needs --verify FILE or --print");
            if (which == "1") out << bundled_table1_csv();
            else if (which == "2") out << bundled_table2_csv();
            else out << format_table_csv(bundled_rows(kTable1Range.p_min, kTable2Range.p_max));
            return kExitOk;
        }
        if (group->parsed()) return cmd_group(p, q, h, max_cosets, convention, out);
        if (plot->parsed()) {
            require(p_max >= 2, "--pmax must be at least 2");
            emit(out_path, plot_csv(plotdata(p_max, d_filter, threads)), out);
            return kExitOk;
        }
        if (ras->parsed()) return cmd_ras(p_max, out);
    } catch (const UsageError& e) {
        err << "lenscert: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "lenscert: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace lenscert
