#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "lenscert/certify.hpp"
#include "lenscert/cli.hpp"
#include "lenscert/serialize.hpp"
#include "lenscert/tables.hpp"

using namespace lenscert;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / ("lenscert_test_" + name)).string();
}

}  // namespace

TEST(Cli, CertifyAnchor) {
    Outcome r = run({"certify", "8", "1", "3"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_NE(r.out.find("d=2 g=4"), std::string::npos);
    EXPECT_NE(r.out.find("alexander: t^-4 - t^-3 + t^-1 - 1 + t - t^3 + t^4"), std::string::npos);
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST(Cli, CertifyUnknot) {
    Outcome r = run({"certify", "4", "1", "1"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_NE(r.out.find("d=0 g=0"), std::string::npos);
}

TEST(Cli, CertifyJsonRoundTrips) {
    Outcome r = run({"certify", "22", "3", "5", "--json"});
    ASSERT_EQ(r.code, kExitOk);
    Certificate c = certificate_from_json(Json::parse(r.out));
    EXPECT_EQ(c, std::get<Certificate>(certify_class(22, 3, 5)));
}

TEST(Cli, Rejection) {
    Outcome r = run({"certify", "9", "2", "4"});
    EXPECT_EQ(r.code, kExitMismatch);
    EXPECT_NE(r.out.find("square-test"), std::string::npos);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run({}).code, kExitUsage);
    EXPECT_EQ(run({"bogus"}).code, kExitUsage);
    EXPECT_EQ(run({"certify", "8", "1"}).code, kExitUsage);
    EXPECT_EQ(run({"certify", "8", "x", "3"}).code, kExitUsage);
    EXPECT_EQ(run({"certify", "8", "1", "3", "--frobnicate"}).code, kExitUsage);
    Outcome r = run({"certify", "8", "2", "3"});
    EXPECT_EQ(r.code, kExitUsage);
    EXPECT_NE(r.err.find("gcd(p, q)"), std::string::npos);
    EXPECT_EQ(run({"dinv", "6", "4"}).code, kExitUsage);
    EXPECT_EQ(run({"search", "--pmax", "1"}).code, kExitUsage);
    EXPECT_EQ(run({"search", "--pmax", "10", "--mode", "fast"}).code, kExitUsage);
    EXPECT_EQ(run({"certify", "8", "1", "3", "--lift", "middle"}).code, kExitUsage);
    EXPECT_EQ(run({"ras", "--pmax", "3"}).code, kExitUsage);
}

TEST(Cli, Help) {
    Outcome r = run({"--help"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_NE(r.out.find("certify"), std::string::npos);
}

TEST(Cli, Dinv) {
    EXPECT_EQ(run({"dinv", "5", "2", "0"}).out, "2/5\n");
    EXPECT_EQ(run({"dinv", "2", "1"}).out, "0,1/4\n1,-1/4\n");
}

TEST(Cli, AlexAndLambda) {
    Outcome a = run({"alex", "8", "1", "3"});
    EXPECT_EQ(a.code, kExitOk);
    EXPECT_NE(a.out.find("reduced: -1,1,0,-1,2,-1,0,1"), std::string::npos);
    EXPECT_NE(a.out.find("genus: 4"), std::string::npos);
    Outcome l = run({"lambda", "3", "1"});
    EXPECT_EQ(l.code, kExitOk);
    EXPECT_EQ(l.out, "lambda_rustamov: -1/36\nlambda_dedekind: -1/36\n");
}

TEST(Cli, SearchThenVerify) {
    const std::string path = temp_path("t1.csv");
    Outcome s = run({"search", "--pmax", "120", "--d", "2", "--out", path});
    ASSERT_EQ(s.code, kExitOk);
    Outcome partial = run({"tables", "--verify", path});
    EXPECT_EQ(partial.code, kExitMismatch);
    EXPECT_NE(partial.out.find("missing 125,19,12,62"), std::string::npos);
    EXPECT_EQ(partial.out.find("\nextra "), std::string::npos);
    {
        std::ofstream f(path);
        f << run({"tables", "--print", "--table", "1"}).out;
    }
    Outcome v = run({"tables", "--verify", path});
    EXPECT_EQ(v.code, kExitOk) << v.out;
    EXPECT_NE(v.out.find("OK 96 rows"), std::string::npos) << v.out;
    {
        std::ofstream f(path, std::ios::app);
        f << "121,1,1,1\n";
    }
    Outcome bad = run({"tables", "--verify", path});
    EXPECT_EQ(bad.code, kExitMismatch);
    EXPECT_NE(bad.out.find("extra 121,1,1,1"), std::string::npos);
    std::remove(path.c_str());
    EXPECT_EQ(run({"tables", "--verify", temp_path("does-not-exist.csv")}).code, kExitUsage);
}

TEST(Cli, SearchOutputStableAcrossThreads) {
    Outcome a = run({"search", "--pmax", "80", "--threads", "1"});
    Outcome b = run({"search", "--pmax", "80", "--threads", "3"});
    EXPECT_EQ(a.code, kExitOk);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.out.rfind("p,q,h,d,g\n", 0), 0u);
}

TEST(Cli, SearchReport) {
    const std::string path = temp_path("report.json");
    Outcome s = run({"search", "--pmax", "30", "--mode", "exhaustive", "--report", path});
    ASSERT_EQ(s.code, kExitOk);
    std::ifstream f(path);
    Json j = Json::parse(f);
    EXPECT_EQ(j["mode"], "exhaustive");
    std::remove(path.c_str());
}

TEST(Cli, TablesPrint) {
    Outcome r = run({"tables", "--print", "--table", "1"});
    EXPECT_EQ(r.out, std::string(bundled_table1_csv()));
}

TEST(Cli, Group) {
    Outcome r = run({"group", "8", "1", "3"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_NE(r.out.find("order: 120"), std::string::npos);
    EXPECT_NE(r.out.find("abelianization: 1"), std::string::npos);
    Outcome o = run({"group", "8", "1", "3", "--max-cosets", "5"});
    EXPECT_EQ(o.code, kExitMismatch);
    EXPECT_NE(o.out.find("overflow"), std::string::npos);
}

TEST(Cli, FamiliesPlotRas) {
    Outcome f = run({"families", "--lmax", "2"});
    EXPECT_EQ(f.code, kExitOk);
    EXPECT_NE(f.out.find("a,1,22,3,5,2,11,ok"), std::string::npos);
    EXPECT_NE(f.out.find("n,0,191,34,15,2,95,ok"), std::string::npos);
    Outcome p = run({"plotdata", "--pmax", "30", "--d", "2"});
    EXPECT_EQ(p.out, "h,p\n3,8\n5,22\n");
    Outcome r = run({"ras", "--pmax", "50"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_NE(r.out.find("violations: 0"), std::string::npos);
}
