#pragma once

#include <cstddef>
#include <string>
#include <string_view>

namespace qwmix {

/// A time together with the expression it came from. Rational multiples of pi
/// keep their exact (a, b) so reports can print closed forms.
struct Time {
    double value = 0.0;
    std::string expr;
    long long pi_num = 0;   ///< value = pi_num * pi / pi_den when pi_den > 0
    long long pi_den = 0;

    [[nodiscard]] bool is_pi_multiple() const { return pi_den > 0; }
};

/// a*pi/b in lowest terms.
Time pi_fraction(long long a, long long b);
Time decimal_time(double t);

/// Accepts `<a>*pi/<b>`, `pi/<b>`, `<a>*pi`, `pi`, `-<expr>` and `<decimal>`.
Time parse_time(std::string_view text);

/// Uniform grid start, start + step, ... up to and including stop.
struct TimeGrid {
    Time start;
    Time stop;
    Time step;

    [[nodiscard]] std::size_t size() const;
    [[nodiscard]] double at(std::size_t i) const { return start.value + static_cast<double>(i) * step.value; }
};

/// `start:stop:step`, each field in parse_time syntax.
TimeGrid parse_grid(std::string_view text);

} // namespace qwmix
