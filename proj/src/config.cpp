#include "seqspace/config.hpp"

#include "json.hpp"

#include <cstdlib>

namespace seqspace {

namespace {

std::string scalar_field(const nlohmann::json& j, const char* key) {
    const auto& v = j.at(key);
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    if (v.is_number_float()) return nlohmann::json(v).dump();
    throw ParseError(std::string("config key '") + key + "' must be a rational string or number");
}

template <Scalar T>
void check_params(const RunConfig& config) {
    const T r = parse_scalar<T>(config.r);
    const T s = parse_scalar<T>(config.s);
    (void)parse_scalar<T>(config.alpha);
    if (is_zero(T(r + s))) throw DomainError("r + s must be nonzero");
}

} // namespace

LambdaPreset parse_lambda_preset(const std::string& name) {
    if (name == "cesaro") return LambdaPreset::cesaro;
    if (name == "squares") return LambdaPreset::squares;
    if (name == "powers2") return LambdaPreset::powers2;
    throw ParseError("unknown lambda preset '" + name + "' (expected cesaro, squares or powers2)");
}

Backend parse_backend(const std::string& name) {
    if (name == "exact") return Backend::exact;
    if (name == "float") return Backend::floating;
    throw ParseError("unknown backend '" + name + "' (expected exact or float)");
}

const char* backend_name(Backend b) {
    return b == Backend::exact ? "exact" : "float";
}

Backend default_backend() {
    const char* env = std::getenv("SEQSPACE_BACKEND");
    if (env == nullptr || *env == '\0') return Backend::exact;
    return parse_backend(env);
}

RunConfig load_config(const std::filesystem::path& path, RunConfig base) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open config '" + path.string() + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("config '" + path.string() + "': " + e.what());
    }
    if (!j.is_object()) throw ParseError("config '" + path.string() + "' must be an object");

    try {
        if (j.contains("alpha")) base.alpha = scalar_field(j, "alpha");
        if (j.contains("r")) base.r = scalar_field(j, "r");
        if (j.contains("s")) base.s = scalar_field(j, "s");
        if (j.contains("backend")) base.backend = parse_backend(j.at("backend").get<std::string>());
        if (j.contains("N")) {
            const auto n = j.at("N").get<long long>();
            if (n < 1) throw ParseError("config N must be >= 1");
            base.order = static_cast<std::size_t>(n);
        }
        if (j.contains("lambda")) {
            const auto& l = j.at("lambda");
            if (l.is_string()) {
                base.lambda = LambdaChoice{parse_lambda_preset(l.get<std::string>()), {}};
            } else if (l.contains("preset")) {
                base.lambda = LambdaChoice{parse_lambda_preset(l.at("preset").get<std::string>()), {}};
            } else if (l.contains("file")) {
                std::filesystem::path file = l.at("file").get<std::string>();
                if (file.is_relative()) file = path.parent_path() / file;
                base.lambda = LambdaChoice{std::nullopt, file};
            } else {
                throw ParseError("config lambda needs 'preset' or 'file'");
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("config '" + path.string() + "': " + e.what());
    }
    return base;
}

void validate(const RunConfig& config) {
    if (config.order && *config.order < 1) throw DomainError("N must be >= 1");
    if (config.backend == Backend::exact) check_params<Rational>(config);
    else check_params<double>(config);
}

} // namespace seqspace
