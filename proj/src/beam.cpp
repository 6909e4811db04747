#include "oamrcs/beam.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "oamrcs/angles.hpp"
#include "oamrcs/csv.hpp"
#include "oamrcs/error.hpp"

namespace oamrcs {

GainPattern GainPattern::uniform(double gain) {
    if (!std::isfinite(gain) || gain <= 0.0) {
        throw DomainError("uniform gain must be positive");
    }
    return GainPattern(Uniform{gain});
}

GainPattern GainPattern::gaussian_lobe(double boresight_gain, double half_power_beamwidth_rad,
                                       Vec3 boresight) {
    if (!std::isfinite(boresight_gain) || boresight_gain <= 0.0) {
        throw DomainError("boresight gain must be positive");
    }
    if (!(half_power_beamwidth_rad > 0.0 && half_power_beamwidth_rad < kPi)) {
        throw DomainError("half-power beamwidth must lie in (0, pi)");
    }
    const double n = boresight.norm();
    if (!boresight.finite() || n == 0.0) {
        throw DomainError("boresight direction must be a non-zero finite vector");
    }
    return GainPattern(GaussianLobe{boresight_gain, half_power_beamwidth_rad, (1.0 / n) * boresight});
}

GainPattern GainPattern::tabulated(std::vector<Sample> samples) {
    if (samples.empty()) {
        throw DomainError("tabulated gain pattern needs at least one sample");
    }
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const auto& s = samples[i];
        if (!std::isfinite(s.angle_rad) || !std::isfinite(s.phase_rad)) {
            throw DomainError("tabulated gain pattern values must be finite");
        }
        if (!std::isfinite(s.gain) || s.gain <= 0.0) {
            throw DomainError("tabulated gains must be positive");
        }
        if (i > 0 && !(s.angle_rad > samples[i - 1].angle_rad)) {
            throw DomainError("tabulated gain angles must be strictly increasing");
        }
    }
    return GainPattern(std::move(samples));
}

namespace {

// Linear interpolation over the table with clamping at both ends.
template <class Field>
double interpolate(const std::vector<GainPattern::Sample>& s, double angle, Field field) {
    if (angle <= s.front().angle_rad) {
        return field(s.front());
    }
    if (angle >= s.back().angle_rad) {
        return field(s.back());
    }
    const auto hi = std::upper_bound(s.begin(), s.end(), angle,
                                     [](double v, const GainPattern::Sample& smp) { return v < smp.angle_rad; });
    const auto& a = *(hi - 1);
    const auto& b = *hi;
    if (angle == a.angle_rad) {
        return field(a);
    }
    const double t = (angle - a.angle_rad) / (b.angle_rad - a.angle_rad);
    return field(a) + t * (field(b) - field(a));
}

}  // namespace

double GainPattern::gain_at(double theta_rad, double phi_rad) const {
    if (const auto* u = std::get_if<Uniform>(&repr_)) {
        return u->gain;
    }
    if (const auto* g = std::get_if<GaussianLobe>(&repr_)) {
        const Vec3 dir{std::sin(phi_rad) * std::cos(theta_rad), std::sin(phi_rad) * std::sin(theta_rad),
                       std::cos(phi_rad)};
        const double c = std::clamp(dir.x * g->boresight.x + dir.y * g->boresight.y + dir.z * g->boresight.z,
                                    -1.0, 1.0);
        const double off = std::acos(c) / g->half_power_beamwidth_rad;
        const double gain = g->boresight_gain * std::exp(-4.0 * std::numbers::ln2 * off * off);
        return std::max(gain, std::numeric_limits<double>::min());
    }
    return interpolate(std::get<std::vector<Sample>>(repr_), theta_rad,
                       [](const Sample& s) { return s.gain; });
}

double GainPattern::phase_at(double theta_rad) const {
    const auto* s = std::get_if<std::vector<Sample>>(&repr_);
    if (!s) {
        return 0.0;
    }
    return interpolate(*s, theta_rad, [](const Sample& smp) { return smp.phase_rad; });
}

GainPattern load_gain_csv(const std::filesystem::path& path) {
    const auto table = csv::read(path);
    csv::require_header(table, {"angle_deg", "gain_dbi", "phase_deg"});
    std::vector<GainPattern::Sample> samples;
    for (const auto& row : table.rows) {
        const double angle = deg_to_rad(csv::parse_number(table, row, 0));
        if (!samples.empty() && !(angle > samples.back().angle_rad)) {
            throw FormatError(table.source, row.line, "angle_deg must be strictly increasing");
        }
        samples.push_back({angle, std::pow(10.0, csv::parse_number(table, row, 1) / 10.0),
                           deg_to_rad(csv::parse_number(table, row, 2))});
    }
    if (samples.empty()) {
        throw FormatError(table.source, 0, "gain pattern has no samples");
    }
    return GainPattern::tabulated(std::move(samples));
}

void PlaneWaveBeam::validate() const {
    if (!std::isfinite(wavenumber) || wavenumber <= 0.0) {
        throw DomainError("wavenumber must be positive");
    }
}

OamBeam OamBeam::aligned(int mode, double wavenumber, GainPattern gain) {
    OamBeam beam{mode, wavenumber, wavenumber, std::move(gain)};
    beam.validate();
    return beam;
}

OamBeam OamBeam::tilted(int mode, double wavenumber, double tilt_rad, GainPattern gain) {
    OamBeam beam{mode, wavenumber, wavenumber * std::cos(tilt_rad), std::move(gain)};
    beam.validate();
    return beam;
}

OamBeam OamBeam::from_plane(const PlaneWaveBeam& plane) {
    plane.validate();
    return aligned(0, plane.wavenumber);
}

void OamBeam::validate() const {
    if (!std::isfinite(wavenumber) || wavenumber <= 0.0) {
        throw DomainError("wavenumber must be positive");
    }
    if (!std::isfinite(axial_wavenumber) || std::abs(axial_wavenumber) > wavenumber) {
        throw DomainError("axial wavenumber must satisfy |k_z| <= k");
    }
}

double azimuth(const Vec3& p) {
    if (p.x == 0.0 && p.y == 0.0) {
        throw DomainError("azimuth undefined at x=y=0");
    }
    return std::atan2(p.y, p.x);
}

double elevation(const Vec3& p) { return std::atan2(std::hypot(p.x, p.y), p.z); }

double helical_phase(const OamBeam& beam, const Vec3& p) {
    return static_cast<double>(beam.mode) * azimuth(p);
}

std::vector<WavefrontSample> synth_main_lobe_wavefront(int mode, double center_deg, double width_deg,
                                                       std::size_t n) {
    if (n < 2) {
        throw DomainError("wavefront synthesis needs at least 2 samples");
    }
    if (!(width_deg > 0.0)) {
        throw DomainError("main-lobe width must be positive");
    }
    std::vector<WavefrontSample> out;
    out.reserve(n);
    const double start = center_deg - 0.5 * width_deg;
    const double step = width_deg / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        const double offset = -0.5 * width_deg + step * static_cast<double>(i);
        out.push_back({start + step * static_cast<double>(i), static_cast<double>(mode) * offset, 0.0});
    }
    return out;
}

ModeEstimate fit_mode_from_wavefront(std::span<const WavefrontSample> samples) {
    if (samples.size() < 2) {
        throw DomainError("mode estimation needs at least 2 samples");
    }
    const double n = static_cast<double>(samples.size());
    double mean_x = 0.0;
    double mean_y = 0.0;
    for (const auto& s : samples) {
        mean_x += s.angle_deg;
        mean_y += s.phase_deg;
    }
    mean_x /= n;
    mean_y /= n;
    double sxx = 0.0;
    double sxy = 0.0;
    for (const auto& s : samples) {
        const double dx = s.angle_deg - mean_x;
        sxx += dx * dx;
        sxy += dx * (s.phase_deg - mean_y);
    }
    if (sxx == 0.0) {
        throw DomainError("degenerate abscissa");
    }
    const double slope = sxy / sxx;
    double ss = 0.0;
    for (const auto& s : samples) {
        const double r = s.phase_deg - (mean_y + slope * (s.angle_deg - mean_x));
        ss += r * r;
    }
    return {slope, std::sqrt(ss / n)};
}

std::vector<WavefrontSample> load_wavefront_csv(const std::filesystem::path& path) {
    const auto table = csv::read(path);
    csv::require_header(table, {"angle_deg", "phase_deg"});
    std::vector<WavefrontSample> out;
    for (const auto& row : table.rows) {
        out.push_back({csv::parse_number(table, row, 0), csv::parse_number(table, row, 1), 0.0});
    }
    return out;
}

}  // namespace oamrcs
