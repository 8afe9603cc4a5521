#include "lenscert/serialize.hpp"

#include <stdexcept>

namespace lenscert {

namespace {

Json rational_json(const Rational& r) { return Json::array({r.num(), r.den()}); }

Rational rational_from(const Json& j) {
    if (!j.is_array() || j.size() != 2) throw std::invalid_argument("rational must be [num, den]");
    return Rational(j.at(0).get<Int>(), j.at(1).get<Int>());
}

}  // namespace

Json certificate_to_json(const Certificate& cert) {
    Json j;
    j["p"] = cert.datum.p;
    j["q"] = cert.datum.q;
    j["h"] = cert.datum.h;
    j["d"] = cert.datum.d;
    j["g"] = cert.datum.g;
    j["lens_q"] = cert.lens_q;
    j["class_h"] = cert.class_h;
    j["lift"] = std::string(lift_name(cert.lift));
    j["boundary"] = cert.boundary;
    j["coefficients"] = cert.poly.half();
    j["reduced"] = cert.reduced.entries;
    j["torsions"] = cert.torsions.entries;
    j["lambda_pq"] = rational_json(cert.lambda_pq);
    j["lambda_p1"] = rational_json(cert.lambda_p1);
    Json checks = Json::array();
    for (const auto& c : cert.checks) checks.push_back(Json{{"name", c.name}, {"passed", c.passed}});
    j["checks"] = std::move(checks);
    return j;
}

Certificate certificate_from_json(const Json& j) {
    Certificate cert;
    cert.datum = {j.at("p").get<Int>(), j.at("q").get<Int>(), j.at("h").get<Int>(), j.at("d").get<Int>(),
                  j.at("g").get<Int>()};
    cert.lens_q = j.at("lens_q").get<Int>();
    cert.class_h = j.at("class_h").get<Int>();
    const auto lift = j.at("lift").get<std::string>();
    if (lift == "standard") cert.lift = Lift::standard;
    else if (lift == "top") cert.lift = Lift::top;
    else throw std::invalid_argument("unknown lift '" + lift + "'");
    cert.boundary = j.at("boundary").get<bool>();
    cert.poly = SymmetricPoly::from_half(j.at("coefficients").get<std::vector<Int>>());
    cert.reduced = {cert.datum.p, j.at("reduced").get<std::vector<Int>>()};
    if (static_cast<Int>(cert.reduced.entries.size()) != cert.datum.p)
        throw std::invalid_argument("reduced vector length must equal p");
    cert.torsions.entries = j.at("torsions").get<std::vector<Int>>();
    cert.lambda_pq = rational_from(j.at("lambda_pq"));
    cert.lambda_p1 = rational_from(j.at("lambda_p1"));
    for (const auto& c : j.at("checks")) cert.checks.push_back({c.at("name").get<std::string>(), c.at("passed").get<bool>()});
    return cert;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace lenscert
