#include "oamrcs/antenna.hpp"

#include <cmath>

#include "oamrcs/angles.hpp"
#include "oamrcs/error.hpp"

namespace oamrcs {

namespace {

void check_propagates(double free_space_wavelength, double wide_side) {
    if (!std::isfinite(free_space_wavelength) || free_space_wavelength <= 0.0) {
        throw DomainError("free-space wavelength must be positive");
    }
    if (!std::isfinite(wide_side) || wide_side <= 0.5 * free_space_wavelength) {
        throw DomainError("mode below cutoff: wide side must exceed half the free-space wavelength");
    }
}

}  // namespace

double guided_wavelength(double free_space_wavelength, double wide_side) {
    check_propagates(free_space_wavelength, wide_side);
    const double q = free_space_wavelength / (2.0 * wide_side);
    return free_space_wavelength / std::sqrt(1.0 - q * q);
}

double equivalent_mode(double radius, double wide_side, double free_space_wavelength) {
    check_propagates(free_space_wavelength, wide_side);
    if (!std::isfinite(radius) || radius <= 0.0) {
        throw DomainError("arc radius must be positive");
    }
    const double a = radius + 0.5 * wide_side;
    const double u = 2.0 / free_space_wavelength;
    const double v = 1.0 / wide_side;
    return a * kPi * std::sqrt((u - v) * (u + v));
}

double design_radius(double mode, double wide_side, double free_space_wavelength) {
    const double lambda_g = guided_wavelength(free_space_wavelength, wide_side);
    if (!std::isfinite(mode) || mode <= 0.0) {
        throw DomainError("mode unrealizable at this wide side: mode must be positive");
    }
    const double r = mode * lambda_g / kTwoPi - 0.5 * wide_side;
    if (!(r > 0.0)) {
        throw DomainError("mode unrealizable at this wide side: radius would be non-positive");
    }
    return r;
}

ArcDesign design_arc(double mode, double wide_side, double free_space_wavelength) {
    const double r = design_radius(mode, wide_side, free_space_wavelength);
    return {mode, guided_wavelength(free_space_wavelength, wide_side), r + 0.5 * wide_side, r};
}

void WaveguideSpec::validate() const {
    check_propagates(free_space_wavelength, wide_side);
    if (!(narrow_side > 0.0) || !(radius > 0.0)) {
        throw DomainError("waveguide narrow side and radius must be positive");
    }
}

double WaveguideSpec::equivalent_mode() const {
    validate();
    return oamrcs::equivalent_mode(radius, wide_side, free_space_wavelength);
}

}  // namespace oamrcs
