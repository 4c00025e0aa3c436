#include "qwmix/times.hpp"

#include "qwmix/errors.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

namespace qwmix {

namespace {

long long parse_ll(std::string_view text, std::string_view whole)
{
    long long v = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (text.empty() || ec != std::errc{} || ptr != end) {
        throw InvalidArgument("bad time expression '" + std::string(whole) + "'");
    }
    return v;
}

std::string trim(std::string_view s)
{
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t");
    return std::string(s.substr(b, e - b + 1));
}

} // namespace

Time pi_fraction(long long a, long long b)
{
    if (b == 0) throw InvalidArgument("zero denominator in time expression");
    if (b < 0) {
        a = -a;
        b = -b;
    }
    const long long g = std::gcd(a < 0 ? -a : a, b);
    if (g > 1) {
        a /= g;
        b /= g;
    }
    Time t;
    t.pi_num = a;
    t.pi_den = b;
    t.value = static_cast<double>(a) * std::numbers::pi / static_cast<double>(b);
    std::ostringstream out;
    if (a == 0) out << "0";
    else {
        if (a == -1) out << "-";
        else if (a != 1) out << a << "*";
        out << "pi";
        if (b != 1) out << "/" << b;
    }
    t.expr = out.str();
    return t;
}

Time decimal_time(double value)
{
    std::ostringstream out;
    out.precision(12);
    out << value;
    return Time{value, out.str(), 0, 0};
}

Time parse_time(std::string_view raw)
{
    const std::string text = trim(raw);
    if (text.empty()) throw InvalidArgument("empty time expression");
    const auto pi = text.find("pi");
    if (pi == std::string::npos) {
        double v = 0.0;
        const auto* end = text.data() + text.size();
        const auto [ptr, ec] = std::from_chars(text.data(), end, v);
        if (ec != std::errc{} || ptr != end || !std::isfinite(v)) {
            throw InvalidArgument("bad time expression '" + text + "'");
        }
        Time t = decimal_time(v);
        t.expr = text;
        return t;
    }

    std::string_view s(text);
    long long sign = 1;
    if (s.front() == '-') {
        sign = -1;
        s.remove_prefix(1);
    }
    const auto p = s.find("pi");
    long long num = 1;
    if (p > 0) {
        if (s[p - 1] != '*') throw InvalidArgument("bad time expression '" + text + "'");
        num = parse_ll(s.substr(0, p - 1), text);
    }
    long long den = 1;
    const auto tail = s.substr(p + 2);
    if (!tail.empty()) {
        if (tail.front() != '/') throw InvalidArgument("bad time expression '" + text + "'");
        den = parse_ll(tail.substr(1), text);
        if (den <= 0) throw InvalidArgument("time denominator must be positive in '" + text + "'");
    }
    return pi_fraction(sign * num, den);
}

std::size_t TimeGrid::size() const
{
    if (!(step.value > 0.0) || stop.value < start.value) return 0;
    return static_cast<std::size_t>(std::floor((stop.value - start.value) / step.value + 1e-9)) + 1;
}

TimeGrid parse_grid(std::string_view text)
{
    const auto a = text.find(':');
    const auto b = a == std::string_view::npos ? a : text.find(':', a + 1);
    if (b == std::string_view::npos) throw InvalidArgument("grid must look like start:stop:step");
    TimeGrid g{parse_time(text.substr(0, a)), parse_time(text.substr(a + 1, b - a - 1)), parse_time(text.substr(b + 1))};
    if (!(g.step.value > 0.0)) throw InvalidArgument("grid step must be positive");
    if (g.stop.value < g.start.value) throw InvalidArgument("grid stop precedes start");
    return g;
}

} // namespace qwmix
