#include "latticeiso/certificate_io.hpp"

#include <limits>

#include <json.hpp>

namespace latticeiso::certify {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr const char* kFormatVersion = "1";
constexpr const char* kCertificateType = "nonisomorphism-certificate";

i64 require_i64(const ordered_json& j, const char* key) {
    const auto it = j.find(key);
    if (it == j.end() || !it->is_number_integer()) {
        throw std::invalid_argument(std::string("certificate field missing or not an integer: ") + key);
    }
    return it->get<i64>();
}

}  // namespace

std::string certificate_to_json(const Certificate& certificate, int indent) {
    ordered_json j;
    j["format_version"] = kFormatVersion;
    j["type"] = kCertificateType;
    j["r1"] = certificate.r1;
    j["r2"] = certificate.r2;
    if (const auto* cc = std::get_if<ComponentCountCertificate>(&certificate.kind)) {
        j["kind"] = "component-count";
        j["k1"] = cc->k1;
        j["k2"] = cc->k2;
    } else {
        const auto& as = std::get<AngleSpectrumCertificate>(certificate.kind);
        j["kind"] = "angle-spectrum";
        j["core1"] = as.core1;
        j["core2"] = as.core2;
        ordered_json w;
        w["r1"] = as.witness.r1;
        w["r2"] = as.witness.r2;
        w["a"] = as.witness.a;
        w["b"] = as.witness.b;
        w["cosine"] = ordered_json{{"num", as.witness.cosine.num}, {"den", as.witness.cosine.den}};
        w["p"] = as.witness.p;
        w["n"] = as.witness.n;
        j["witness"] = std::move(w);
    }
    return j.dump(indent);
}

Certificate certificate_from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const ordered_json::parse_error& e) {
        throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
    }

    // Accept a CLI envelope and unwrap its result.
    if (j.is_object() && j.contains("result") && j["result"].is_object() &&
        j["result"].value("type", "") == kCertificateType) {
        j = j["result"];
    }
    if (!j.is_object() || j.value("type", "") != kCertificateType) {
        throw std::invalid_argument("not a certificate object");
    }
    if (j.value("format_version", "") != kFormatVersion) {
        throw std::invalid_argument("unsupported certificate format_version");
    }

    Certificate out;
    out.r1 = require_i64(j, "r1");
    out.r2 = require_i64(j, "r2");
    const std::string kind = j.value("kind", "");
    if (kind == "component-count") {
        out.kind = ComponentCountCertificate{require_i64(j, "k1"), require_i64(j, "k2")};
    } else if (kind == "angle-spectrum") {
        AngleSpectrumCertificate as;
        as.core1 = require_i64(j, "core1");
        as.core2 = require_i64(j, "core2");
        const auto wit = j.find("witness");
        if (wit == j.end() || !wit->is_object()) {
            throw std::invalid_argument("angle-spectrum certificate without witness");
        }
        as.witness.r1 = require_i64(*wit, "r1");
        as.witness.r2 = require_i64(*wit, "r2");
        as.witness.a = require_i64(*wit, "a");
        as.witness.b = require_i64(*wit, "b");
        const auto cos = wit->find("cosine");
        if (cos == wit->end() || !cos->is_object()) {
            throw std::invalid_argument("witness without cosine");
        }
        as.witness.cosine.num = require_i64(*cos, "num");
        as.witness.cosine.den = require_i64(*cos, "den");
        as.witness.p = require_i64(*wit, "p");
        const i64 n = require_i64(*wit, "n");
        if (n < 0 || n > std::numeric_limits<unsigned>::max()) {
            throw std::invalid_argument("witness exponent out of range");
        }
        as.witness.n = static_cast<unsigned>(n);
        out.kind = std::move(as);
    } else {
        throw std::invalid_argument("unknown certificate kind: " + kind);
    }
    return out;
}

std::optional<Certificate> try_certificate_from_json(const std::string& text) {
    try {
        return certificate_from_json(text);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

}  // namespace latticeiso::certify
