#include "zhu/certificate.hpp"

#include <stdexcept>

#include <json.hpp>

namespace zhu {

using nlohmann::json;

std::string certificate_to_json(const MembershipCertificate& cert, const Presentation& p, int level) {
    json j;
    j["presentation"] = p.name();
    j["level"] = level;
    j["target"] = to_string(cert.target, p);
    j["combination"] = json::array();
    for (const auto& [sv, c] : cert.combination) {
        json t;
        t["kind"] = to_string(sv.kind);
        t["u"] = mono_string(sv.u, p);
        t["v"] = mono_string(sv.v, p);
        t["m"] = sv.m;
        t["k"] = sv.k;
        t["coefficient"] = c.str();
        j["combination"].push_back(std::move(t));
    }
    return j.dump(2);
}

namespace {

Mono parse_word(const std::string& s, Space& space) {
    Element e = parse_element(s, space);
    if (e.is_zero()) return Mono();  // never valid for an operand, caught below
    if (e.size() != 1 || e.terms().begin()->second != Coef(1))
        throw std::invalid_argument("operand '" + s + "' is not a PBW basis word");
    return e.terms().begin()->first;
}

}  // namespace

LoadedCertificate certificate_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("certificate is not valid JSON: ") + e.what());
    }
    LoadedCertificate out;
    try {
        out.presentation = &Presentation::by_name(j.at("presentation").get<std::string>());
        out.level = j.at("level").get<int>();
        if (out.level < 0) throw std::invalid_argument("level must be >= 0");
        Space space = Space::vacuum(*out.presentation);
        out.certificate.target = parse_element(j.at("target").get<std::string>(), space);
        for (const json& t : j.at("combination")) {
            SpanningVector sv;
            sv.kind = span_kind_from_string(t.at("kind").get<std::string>());
            sv.u = parse_word(t.at("u").get<std::string>(), space);
            sv.v = parse_word(t.at("v").get<std::string>(), space);
            sv.m = t.value("m", 0);
            sv.k = t.value("k", 0);
            add_to(out.certificate.combination, sv, Coef::parse(t.at("coefficient").get<std::string>()));
        }
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed certificate: ") + e.what());
    }
    return out;
}

bool recheck_certificate_json(const std::string& text) {
    LoadedCertificate c = certificate_from_json(text);
    ZhuEngine e(*c.presentation, c.level);
    return e.recheck(c.certificate);
}

}  // namespace zhu
