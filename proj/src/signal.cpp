#include "superosc/signal.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include <json.hpp>

namespace superosc {

namespace {

void validate_factor(const FactorSpec& f) {
    if (!(f.omega > 0.0))
        throw ValidationError("factor bandlimit must be strictly positive");
    if (f.sign != 1 && f.sign != -1)
        throw ValidationError("factor sign must be +1 or -1");
    if (!std::isfinite(f.eps))
        throw ValidationError("factor shift must be finite");
}

std::vector<FactorSpec> canonical_order(std::vector<FactorSpec> factors) {
    std::sort(factors.begin(), factors.end(), [](const FactorSpec& a, const FactorSpec& b) {
        return std::tie(a.omega, a.eps, a.kind, a.sign) < std::tie(b.omega, b.eps, b.kind, b.sign);
    });
    return factors;
}

// summed in canonical order so the value is independent of the declared
// factor order (floating addition is not associative)
double canonical_bandlimit_sum(const std::vector<FactorSpec>& factors) {
    double total = 0.0;
    for (const auto& f : canonical_order(factors)) total += f.omega;
    return total;
}

}  // namespace

ProductSignalSpec make_product(std::vector<FactorSpec> factors) {
    if (factors.empty())
        throw ValidationError("product signal needs at least one factor");
    for (const auto& f : factors) validate_factor(f);
    const double total = canonical_bandlimit_sum(factors);
    return ProductSignalSpec{std::move(factors), total};
}

double eval_factor(const FactorSpec& f, double t) {
    const double x = f.omega * (t - f.eps);
    if (f.kind == FactorKind::sine) return f.sign * std::sin(x);
    // sinc: series branch near the removable singularity to avoid 0/0
    // cancellation; 1 - x^2/6 + x^4/120 is exact to double precision for
    // |x| < 1e-4.
    if (std::abs(x) < 1e-4) {
        const double x2 = x * x;
        return f.sign * (1.0 - x2 / 6.0 + x2 * x2 / 120.0);
    }
    return f.sign * std::sin(x) / x;
}

double eval_product(const ProductSignalSpec& s, double t) {
    double p = 1.0;
    for (const auto& f : s.factors) p *= eval_factor(f, t);
    return p;
}

double product_bandlimit(const ProductSignalSpec& s) {
    return canonical_bandlimit_sum(s.factors);
}

std::string to_json_string(const ProductSignalSpec& s, int indent) {
    const auto canon = canonical_order(s.factors);
    nlohmann::json doc;
    doc["factors"] = nlohmann::json::array();
    for (const auto& f : canon) {
        doc["factors"].push_back({{"kind", f.kind == FactorKind::sine ? "sine" : "sinc"},
                                  {"omega", f.omega},
                                  {"eps", f.eps},
                                  {"sign", f.sign}});
    }
    doc["omega_total"] = s.omega_total;
    return doc.dump(indent);
}

ProductSignalSpec product_from_json_string(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("malformed product spec JSON: ") + e.what());
    }
    if (!doc.contains("factors") || !doc["factors"].is_array())
        throw ValidationError("product spec JSON missing \"factors\" array");
    std::vector<FactorSpec> factors;
    for (const auto& jf : doc["factors"]) {
        FactorSpec f;
        const std::string kind = jf.at("kind").get<std::string>();
        if (kind == "sine")
            f.kind = FactorKind::sine;
        else if (kind == "sinc")
            f.kind = FactorKind::sinc;
        else
            throw ValidationError("unknown factor kind \"" + kind + "\"");
        f.omega = jf.at("omega").get<double>();
        f.eps = jf.at("eps").get<double>();
        f.sign = jf.value("sign", 1);
        factors.push_back(f);
    }
    auto spec = make_product(std::move(factors));
    if (doc.contains("omega_total")) {
        const double declared = doc["omega_total"].get<double>();
        if (std::abs(declared - spec.omega_total) > 1e-9 * std::max(1.0, spec.omega_total))
            throw ValidationError("omega_total does not equal the sum of factor bandlimits");
    }
    return spec;
}

}  // namespace superosc
