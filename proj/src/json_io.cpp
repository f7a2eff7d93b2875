#include "starlike/json_io.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace starlike {

namespace {

json pair(complex z) { return json::array({z.real(), z.imag()}); }

double parse_real(std::string_view text, std::string_view whole) {
    if (text.empty() || text == "+") {
        return 1.0;
    }
    if (text == "-") {
        return -1.0;
    }
    if (text.front() == '+') {
        text.remove_prefix(1);
    }
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw std::invalid_argument("malformed complex number '" + std::string(whole) + "'");
    }
    return v;
}

json finite_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

} // namespace

void to_json(json& j, const PowerSeries& s) {
    j = json::array();
    for (complex c : s.coeffs()) {
        j.push_back(pair(c));
    }
}

PowerSeries series_from_json(const json& j) {
    if (!j.is_array() || j.empty()) {
        throw std::invalid_argument("series JSON must be a non-empty array of [re, im] pairs");
    }
    std::vector<complex> c;
    c.reserve(j.size());
    for (const auto& item : j) {
        if (item.is_number()) {
            c.emplace_back(item.get<double>(), 0.0);
        } else if (item.is_array() && item.size() == 2 && item[0].is_number() && item[1].is_number()) {
            c.emplace_back(item[0].get<double>(), item[1].get<double>());
        } else {
            throw std::invalid_argument("series entries must be [re, im] pairs");
        }
    }
    return PowerSeries(std::move(c));
}

void to_json(json& j, const BoundEstimate& e) {
    j = json{{"value", e.value}, {"witness", pair(e.witness)}, {"radius", e.radius}, {"kind", to_string(e.kind)}};
}

void to_json(json& j, const RadialGrid& g) { j = json{{"radii", g.radii}, {"angular_count", g.angular_count}}; }

void to_json(json& j, const CriterionParams& p) {
    j = json{{"n", p.n}, {"mu", pair(p.mu)}, {"lambda", pair(p.lambda)}};
    j["c"] = p.c ? pair(*p.c) : json(nullptr);
}

void to_json(json& j, const VerificationReport& r) {
    json values = json::object();
    for (const auto& [name, v] : r.conclusion_values) {
        values[name] = finite_or_null(v);
    }
    j = json{{"theorem_id", to_string(r.theorem)},
             {"params", r.params},
             {"hypothesis_margin", finite_or_null(r.hypothesis_margin)},
             {"conclusion_margin", finite_or_null(r.conclusion_margin)},
             {"conclusion_values", std::move(values)},
             {"verdict", to_string(r.verdict)},
             {"grid", r.grid},
             {"ladder_monotone", r.ladder_monotone},
             {"notes", r.notes},
             {"seed", r.seed},
             {"trial", r.trial}};
}

complex parse_complex(std::string_view text) {
    if (text.empty()) {
        throw std::invalid_argument("empty complex number");
    }
    if (text.back() != 'i') {
        if (text == "+" || text == "-") {
            throw std::invalid_argument("malformed complex number '" + std::string(text) + "'");
        }
        return {parse_real(text, text), 0.0};
    }
    const std::string_view body = text.substr(0, text.size() - 1);
    // Split at the last sign that is not a leading sign or an exponent sign.
    std::size_t split = std::string_view::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    if (split == std::string_view::npos) {
        return {0.0, parse_real(body, text)};
    }
    const std::string_view real_part = body.substr(0, split);
    if (real_part == "+" || real_part == "-") {
        throw std::invalid_argument("malformed complex number '" + std::string(text) + "'");
    }
    return {parse_real(real_part, text), parse_real(body.substr(split), text)};
}

std::string format_double(double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return ec == std::errc{} ? std::string(buf, ptr) : std::string("nan");
}

std::string format_complex(complex z) {
    std::string out = format_double(z.real());
    if (z.imag() >= 0.0 || std::isnan(z.imag())) {
        out += '+';
    }
    return out + format_double(z.imag()) + "i";
}

} // namespace starlike
