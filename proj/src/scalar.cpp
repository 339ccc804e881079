#include "seqspace/scalar.hpp"

#include "seqspace/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <regex>
#include <string>

namespace seqspace {

namespace {

std::string_view trim(std::string_view s) {
    const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
    while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
    return s;
}

const std::regex& rational_pattern() {
    static const std::regex re(R"(([+-]?)(\d+)(?:/(\d+))?)");
    return re;
}

bool parse_rational_literal(std::string_view text, Rational& out) {
    const std::string s(trim(text));
    std::smatch m;
    if (!std::regex_match(s, m, rational_pattern())) return false;
    mpz_class num(m[2].str(), 10);
    mpz_class den(1);
    if (m[3].matched) {
        den = mpz_class(m[3].str(), 10);
        if (den == 0) throw ParseError("zero denominator in '" + s + "'");
    }
    if (m[1].str() == "-") num = -num;
    out = Rational(num, den);
    out.canonicalize();
    return true;
}

} // namespace

Rational ScalarTraits<Rational>::parse(std::string_view text) {
    Rational q;
    if (!parse_rational_literal(text, q)) {
        throw ParseError("not a rational literal (expected p/q or integer): '" + std::string(trim(text)) + "'");
    }
    return q;
}

std::string ScalarTraits<Rational>::format(const Rational& x) {
    return x.get_str(10);
}

double ScalarTraits<double>::parse(std::string_view text) {
    const std::string_view s = trim(text);
    Rational q;
    if (parse_rational_literal(s, q)) return q.get_d();

    std::string_view body = s;
    if (!body.empty() && body.front() == '+') body.remove_prefix(1);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), v);
    if (ec != std::errc() || ptr != body.data() + body.size() || body.empty() || !std::isfinite(v)) {
        throw ParseError("not a real literal: '" + std::string(s) + "'");
    }
    return v;
}

std::string ScalarTraits<double>::format(double x) {
    if (x == 0.0) return "0";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
    std::string full(buf, res.ptr);
    // prefer the shortest representation when it round-trips to the same value
    const auto shortest = std::to_chars(buf, buf + sizeof buf, x);
    std::string compact(buf, shortest.ptr);
    return compact.size() <= full.size() ? compact : full;
}

double ScalarTraits<double>::abs(double x) {
    return std::fabs(x);
}

bool ScalarTraits<double>::equal(double a, double b) {
    const double diff = std::fabs(a - b);
    const double scale = std::max(std::fabs(a), std::fabs(b));
    return diff <= std::max(tolerance.absolute, tolerance.relative * scale);
}

} // namespace seqspace
