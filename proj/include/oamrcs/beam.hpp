#pragma once

#include <filesystem>
#include <span>
#include <variant>
#include <vector>

#include "oamrcs/scene.hpp"

namespace oamrcs {

/// Beam gain seen by a scatterer at azimuth theta = atan2(y, x) and
/// elevation phi measured from the +z axis.
class GainPattern {
public:
    struct Uniform {
        double gain = 1.0;
    };
    struct GaussianLobe {
        double boresight_gain;
        double half_power_beamwidth_rad;
        Vec3 boresight;  // unit vector
    };
    /// 1-D cut over azimuth: linear gain and phase per angle.
    struct Sample {
        double angle_rad;
        double gain;
        double phase_rad;
    };

    static GainPattern uniform(double gain = 1.0);
    static GainPattern gaussian_lobe(double boresight_gain, double half_power_beamwidth_rad,
                                     Vec3 boresight);
    static GainPattern tabulated(std::vector<Sample> samples);

    bool is_uniform() const { return std::holds_alternative<Uniform>(repr_); }

    /// Linear gain. Tabulated cuts interpolate linearly in azimuth and clamp
    /// at the table edges. Always positive and finite.
    double gain_at(double theta_rad, double phi_rad) const;

    /// Tabulated phase column at azimuth theta (0 for analytic patterns).
    double phase_at(double theta_rad) const;

private:
    using Repr = std::variant<Uniform, GaussianLobe, std::vector<Sample>>;
    explicit GainPattern(Repr repr) : repr_(std::move(repr)) {}

    Repr repr_;
};

inline double gain_at(const GainPattern& pattern, double theta_rad, double phi_rad) {
    return pattern.gain_at(theta_rad, phi_rad);
}

/// Reads `angle_deg,gain_dbi,phase_deg`; gains are converted with 10^(dBi/10).
GainPattern load_gain_csv(const std::filesystem::path& path);

/// Boresight gain of the analytic main-lobe stand-in (16 dB).
inline constexpr double kDefaultBoresightGainDb = 16.0;
/// Antenna tilt used in the turntable measurements.
inline constexpr double kMeasurementTiltDeg = 18.0;

struct PlaneWaveBeam {
    double wavenumber;  // rad/m

    void validate() const;
};

/// Non-divergent OAM pencil beam: integer mode, wavenumber k, axial
/// wavenumber k_z (|k_z| <= k) and a gain pattern.
struct OamBeam {
    int mode = 0;
    double wavenumber = 0.0;
    double axial_wavenumber = 0.0;
    GainPattern gain = GainPattern::uniform();

    /// k_z = k.
    static OamBeam aligned(int mode, double wavenumber, GainPattern gain = GainPattern::uniform());
    /// k_z = k·cos(tilt).
    static OamBeam tilted(int mode, double wavenumber, double tilt_rad,
                          GainPattern gain = GainPattern::uniform());
    /// ℓ = 0, uniform unit gain, k_z = k: reproduces plane-wave illumination.
    static OamBeam from_plane(const PlaneWaveBeam& plane);

    void validate() const;
};

using Beam = std::variant<PlaneWaveBeam, OamBeam>;

/// Azimuth atan2(y, x) of a scatterer; throws DomainError on the beam axis.
double azimuth(const Vec3& p);
/// Elevation from +z, atan2(sqrt(x² + y²), z).
double elevation(const Vec3& p);

/// ℓ·atan2(y, x). Throws DomainError "azimuth undefined at x=y=0".
double helical_phase(const OamBeam& beam, const Vec3& p);

struct WavefrontSample {
    double angle_deg;
    double phase_deg;         // unwrapped
    double amplitude_db = 0;  // optional, informational
};

/// n samples across [center − width/2, center + width/2] with phase slope
/// exactly ℓ degrees of phase per degree of angle.
std::vector<WavefrontSample> synth_main_lobe_wavefront(int mode, double center_deg, double width_deg,
                                                       std::size_t n);

struct ModeEstimate {
    double mode;              // least-squares slope, deg/deg
    double residual_rms_deg;  // RMS of the fit residual
};

/// Least-squares slope of unwrapped phase against angle. Throws DomainError
/// with "degenerate abscissa" when all angles coincide.
ModeEstimate fit_mode_from_wavefront(std::span<const WavefrontSample> samples);

inline double estimate_mode_from_wavefront(std::span<const WavefrontSample> samples) {
    return fit_mode_from_wavefront(samples).mode;
}

/// Reads `angle_deg,phase_deg`.
std::vector<WavefrontSample> load_wavefront_csv(const std::filesystem::path& path);

}  // namespace oamrcs
