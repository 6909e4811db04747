#include "oamrcs/angles.hpp"

#include <cmath>

namespace oamrcs {

double wrap_two_pi(double rad) noexcept {
    const long double period = kTwoPi;
    long double r = std::fmod(static_cast<long double>(rad), period);
    if (r < 0.0L) {
        r += period;
    }
    const double out = static_cast<double>(r);
    return out >= kTwoPi ? 0.0 : out;
}

double wrap_phase(long double rad) noexcept {
    constexpr long double two_pi = 6.283185307179586476925286766559005768L;
    constexpr long double pi = 3.141592653589793238462643383279502884L;
    long double r = std::remainder(rad, two_pi);
    if (r > pi) {
        r -= two_pi;
    } else if (r < -pi) {
        r += two_pi;
    }
    return static_cast<double>(r);
}

}  // namespace oamrcs
