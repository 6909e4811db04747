#include "oamrcs/scattering.hpp"

#include <cmath>
#include <vector>

#include "oamrcs/angles.hpp"
#include "oamrcs/error.hpp"
#include "oamrcs/simd/kernels.hpp"

namespace oamrcs {

namespace {

void require_positive(double v, const char* what) {
    if (!std::isfinite(v) || v <= 0.0) {
        throw DomainError(std::string(what) + " must be positive");
    }
}

double raised_cosine(double phase) {
    double out = 0.0;
    simd::kernels().raised_cosine(std::span<const double>(&phase, 1), std::span<double>(&out, 1));
    return out;
}

double echo_prefactor(double range_m, double sigma0_m2) {
    require_positive(range_m, "range");
    if (!std::isfinite(sigma0_m2) || sigma0_m2 < 0.0) {
        throw DomainError("sigma0 must be finite and >= 0");
    }
    return std::sqrt(sigma0_m2) / (2.0 * std::sqrt(kPi * range_m));
}

struct PhasorTerms {
    std::vector<double> gain;
    std::vector<double> phase;
    double gain_sum = 0.0;
};

PhasorTerms phasor_terms(const TargetModel& target, const OamBeam& beam) {
    beam.validate();
    PhasorTerms t;
    t.gain.reserve(target.size());
    t.phase.reserve(target.size());
    for (const auto& s : target.scatterers()) {
        const double g = beam.gain.gain_at(azimuth(s.position), elevation(s.position));
        t.gain.push_back(g);
        t.phase.push_back(scatterer_phase(beam, s.position));
        t.gain_sum += g;
    }
    return t;
}

}  // namespace

double alpha(double wavenumber, double spacing, double phi_rad) {
    const long double c = std::cos(static_cast<long double>(wrap_two_pi(phi_rad)));
    return static_cast<double>((static_cast<long double>(wavenumber) + wavenumber) * spacing * c);
}

double beta(int mode, double spacing, double standoff, double phi_rad) {
    const long double s = std::sin(static_cast<long double>(wrap_two_pi(phi_rad)));
    const long double psi = std::atan(spacing * s / (2.0L * standoff));
    return static_cast<double>(2.0L * mode * psi);
}

double two_sphere_phase_difference(int mode, double wavenumber, double axial_wavenumber, double spacing,
                                   double standoff, double phi_rad) {
    const long double phi = wrap_two_pi(phi_rad);
    const long double radial =
        (static_cast<long double>(axial_wavenumber) + wavenumber) * spacing * std::cos(phi);
    long double lateral = 0.0L;
    if (mode != 0) {
        lateral = 2.0L * mode * std::atan(spacing * std::sin(phi) / (2.0L * standoff));
    }
    return wrap_phase(radial - lateral);
}

double plane_two_sphere_ratio(double wavenumber, double spacing, double phi_rad) {
    require_positive(wavenumber, "wavenumber");
    require_positive(spacing, "spacing");
    return raised_cosine(two_sphere_phase_difference(0, wavenumber, wavenumber, spacing, 1.0, phi_rad));
}

double two_sphere_oam_ratio(int mode, double wavenumber, double axial_wavenumber, double spacing,
                            double standoff, double phi_rad) {
    require_positive(wavenumber, "wavenumber");
    require_positive(spacing, "spacing");
    require_positive(standoff, "standoff");
    if (!std::isfinite(axial_wavenumber)) {
        throw DomainError("axial wavenumber must be finite");
    }
    return raised_cosine(
        two_sphere_phase_difference(mode, wavenumber, axial_wavenumber, spacing, standoff, phi_rad));
}

double scatterer_phase(const OamBeam& beam, const Vec3& p) {
    azimuth(p);  // throws on the beam axis
    long double helical = 0.0L;
    if (beam.mode != 0) {
        helical = static_cast<long double>(beam.mode) * std::atan2(static_cast<long double>(p.y),
                                                                   static_cast<long double>(p.x));
    }
    const long double axial = (static_cast<long double>(beam.axial_wavenumber) + beam.wavenumber) * p.z;
    return wrap_phase(axial - helical);
}

EchoField oam_echo_field(const TargetModel& target, const OamBeam& beam, double range_m, double sigma0_m2) {
    const double pre = echo_prefactor(range_m, sigma0_m2);
    const auto t = phasor_terms(target, beam);
    const auto sum = simd::kernels().phasor_sum(t.gain, t.phase);
    return {pre * sum, range_m};
}

double mean_incident_amplitude(const TargetModel& target, const OamBeam& beam, double range_m,
                               double sigma0_m2) {
    const double pre = echo_prefactor(range_m, sigma0_m2);
    beam.validate();
    double sum = 0.0;
    for (const auto& s : target.scatterers()) {
        sum += beam.gain.gain_at(azimuth(s.position), elevation(s.position));
    }
    return pre * sum / static_cast<double>(target.size());
}

double oam_rcs_ratio(const TargetModel& target, const OamBeam& beam) {
    const auto t = phasor_terms(target, beam);
    const auto sum = simd::kernels().phasor_sum(t.gain, t.phase);
    const double n = static_cast<double>(target.size());
    return n * n * std::norm(sum) / (t.gain_sum * t.gain_sum);
}

double anisotropic_oam_rcs(const TargetModel& target, const OamBeam& beam, double phi_rad) {
    auto t = phasor_terms(target, beam);
    std::vector<double> amp(t.gain.size());
    for (std::size_t i = 0; i < amp.size(); ++i) {
        amp[i] = std::sqrt(target.scatterers()[i].base_rcs.eval(phi_rad)) * t.gain[i];
    }
    const auto sum = simd::kernels().phasor_sum(amp, t.phase);
    const double n = static_cast<double>(target.size());
    return n * n * std::norm(sum) / (t.gain_sum * t.gain_sum);
}

bool gains_cancel(const TwoSphereLayout& layout, const OamBeam& beam, double phi_rad) {
    if (beam.gain.is_uniform()) {
        return true;
    }
    const auto [p1, p2] = two_sphere_positions(layout, phi_rad);
    const double g1 = beam.gain.gain_at(azimuth(p1), elevation(p1));
    const double g2 = beam.gain.gain_at(azimuth(p2), elevation(p2));
    return std::abs(g1 - g2) <= 1e-6 * std::max(g1, g2);
}

double two_sphere_ratio(const TwoSphereLayout& layout, const OamBeam& beam, double phi_rad) {
    layout.validate();
    beam.validate();
    if (gains_cancel(layout, beam, phi_rad)) {
        return two_sphere_oam_ratio(beam.mode, beam.wavenumber, beam.axial_wavenumber, layout.spacing_m,
                                    layout.standoff_m, phi_rad);
    }
    return oam_rcs_ratio(build_two_sphere_target(layout, phi_rad), beam);
}

}  // namespace oamrcs
