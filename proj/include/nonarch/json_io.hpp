#pragma once

#include <json.hpp>
#include <string>

#include "nonarch/affine.hpp"
#include "nonarch/field.hpp"
#include "nonarch/generators.hpp"
#include "nonarch/norms.hpp"
#include "nonarch/paradox.hpp"
#include "nonarch/report.hpp"

// serialization glue: everything numeric travels as exact decimal-free
// strings ("3/4", "(t + 1)/(t)"), never as floating point
namespace nonarch {

using Json = nlohmann::ordered_json;

inline Json json_of(const Rat& r) { return format_rat(r); }

inline Json json_of(const AuditReport& rep) {
    Json j;
    j["name"] = rep.name;
    j["checked"] = rep.checked;
    j["violations"] = Json::array();
    for (const auto& v : rep.violations)
        j["violations"].push_back({{"condition", v.condition}, {"detail", v.detail}});
    j["ok"] = rep.ok();
    return j;
}

inline Json json_of(const NormSpec& spec) {
    Json j;
    if (spec.kind == NormSpec::Kind::Max) {
        j["kind"] = "max";
    } else {
        j["kind"] = "weighted";
        j["weights"] = Json::array();
        for (const auto& w : spec.weights) j["weights"].push_back(format_rat(w));
    }
    return j;
}

inline NormSpec norm_spec_from_json(const Json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "max") return NormSpec::max();
    if (kind == "weighted") {
        std::vector<Rat> ws;
        for (const auto& w : j.at("weights")) ws.push_back(parse_rat(w.get<std::string>()));
        return NormSpec::weighted(ws);
    }
    throw ParseError("unknown norm kind: " + kind);
}

template <class Ctx>
Json json_of_map(const Ctx& ctx, const AffineMap<typename Ctx::Elem>& g) {
    Json j;
    j["L"] = Json::array();
    for (std::size_t i = 0; i < g.dim(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < g.dim(); ++k) row.push_back(format_elem(ctx, g.L.at(i, k)));
        j["L"].push_back(row);
    }
    j["tau"] = Json::array();
    for (const auto& c : g.tau) j["tau"].push_back(format_elem(ctx, c));
    return j;
}

template <class Ctx>
Json json_of_cert(const GeneratorCertificate<Ctx>& cert) {
    Json j;
    j["construction"] =
        cert.construction == Construction::MagnusDifferentChar ? "magnus" : "equal-char";
    if (cert.construction == Construction::MagnusDifferentChar) {
        j["s"] = cert.s;
        j["t"] = cert.t;
    } else {
        j["t_power"] = cert.t_power;
    }
    j["eps"] = format_rat(cert.eps);
    j["a"] = json_of_map(cert.ctx, cert.a);
    j["b"] = json_of_map(cert.ctx, cert.b);
    if (cert.h) j["h"] = json_of_map(cert.ctx, *cert.h);
    if (cert.aux) {
        static const char* names[] = {"alpha", "beta", "gamma", "delta", "tau1", "tau2", "lambda"};
        Json aux;
        for (int i = 0; i < 7; ++i) aux[names[i]] = format_elem(cert.ctx, (*cert.aux)[i]);
        j["aux"] = aux;
    }
    return j;
}

inline Json json_of(const Verdict& v) {
    Json j;
    if (v.paradoxical) {
        j["verdict"] = "ParadoxicalFourPieces";
        j["construction"] =
            v.construction == Construction::MagnusDifferentChar ? "magnus" : "equal-char";
        j["embedding_index"] = v.embedding_index;
    } else {
        j["verdict"] = "NotParadoxicalAmenable";
        switch (v.reason) {
            case AmenableReason::SolvableTriangular: j["reason"] = "SolvableTriangular"; break;
            case AmenableReason::SolvableGA1: j["reason"] = "SolvableGA1"; break;
            case AmenableReason::LocallyFinite: j["reason"] = "LocallyFinite"; break;
        }
    }
    j["detail"] = v.detail;
    return j;
}

}  // namespace nonarch
