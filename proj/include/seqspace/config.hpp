#pragma once

#include "seqspace/errors.hpp"
#include "seqspace/lambda.hpp"
#include "seqspace/operators.hpp"
#include "seqspace/scalar.hpp"
#include "seqspace/transforms.hpp"

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <istream>
#include <optional>
#include <string>
#include <vector>

namespace seqspace {

/// Either a named preset or a file with one lambda_k per line.
struct LambdaChoice {
    std::optional<LambdaPreset> preset = LambdaPreset::cesaro;
    std::filesystem::path file;
};

/// Operator specification plus run settings, as read from a config file
/// and overridden by command-line flags.
struct RunConfig {
    std::string alpha = "0";
    std::string r = "1";
    std::string s = "1";
    LambdaChoice lambda;
    Backend backend = Backend::exact;
    std::optional<std::size_t> order;
};

LambdaPreset parse_lambda_preset(const std::string& name);
Backend parse_backend(const std::string& name);
const char* backend_name(Backend b);

/// SEQSPACE_BACKEND if set, exact otherwise. Throws ParseError on a bad value.
Backend default_backend();

/// Reads a JSON-shaped config:
///   { "alpha": "1/2", "r": "1", "s": "1",
///     "lambda": { "preset": "cesaro" } | { "file": "lambda.txt" },
///     "backend": "exact", "N": 16 }
/// All keys optional. A relative lambda file is resolved against the config's directory.
RunConfig load_config(const std::filesystem::path& path, RunConfig base = {});

/// Parses alpha, r, s under the configured backend and checks r + s != 0 and N >= 1.
void validate(const RunConfig& config);

/// One scalar per line; blank lines are skipped. ParseError names the line.
template <Scalar T>
SequenceWindow<T> read_sequence(std::istream& in) {
    std::vector<T> values;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            values.push_back(parse_scalar<T>(line));
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return SequenceWindow<T>(std::move(values));
}

template <Scalar T>
SequenceWindow<T> read_sequence_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path.string() + "'");
    try {
        return read_sequence<T>(in);
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

template <Scalar T>
LambdaSeq<T> build_lambda(const LambdaChoice& choice) {
    if (choice.preset) return LambdaSeq<T>::preset(*choice.preset);
    auto values = read_sequence_file<T>(choice.file);
    if (values.empty()) throw ParseError("lambda file '" + choice.file.string() + "' is empty");
    return LambdaSeq<T>::from_values(values.values(), choice.file.string());
}

template <Scalar T>
OperatorSpec<T> build_spec(const RunConfig& config) {
    return OperatorSpec<T>{BinomialParams<T>(parse_scalar<T>(config.r), parse_scalar<T>(config.s)),
                           FractionalOrder<T>{parse_scalar<T>(config.alpha)}, build_lambda<T>(config.lambda)};
}

} // namespace seqspace
