#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "oamrcs/analysis.hpp"

namespace oamrcs {

/// Monostatic link budget. Powers in dBm, gains in dB, both converted to
/// linear exactly once inside the radar equation.
struct LinkBudget {
    double pt_dbm;
    double pr_dbm;
    double gt_db;
    double gr_db;
    double range_m;
    double wavelength_m;

    void validate() const;
};

/// σ = P_r·(4π)³·R⁴ / (P_t·G_t·G_r·λ²), in m².
double rcs_from_link_budget(const LinkBudget& budget);

/// Same equation evaluated entirely in the dB domain, in dBsm.
double rcs_dbsm_from_link_budget(const LinkBudget& budget);

/// Received power (dBm) that would produce σ under this budget; pr_dbm of
/// the argument is ignored. σ = 0 returns −infinity.
double predicted_received_power(double sigma_m2, const LinkBudget& budget);

/// Turntable measurement set-up. Defaults are the chamber values used for
/// the two-sphere experiments.
struct MeasurementConfig {
    double freq_ghz = 10.0;
    double range_m = 8.5;
    double rotation_rad_per_min = 1.0;
    double gt_db = 16.0;
    double gr_db = 16.0;
    double pt_dbm = 28.0;
    double pr_dbm = 20.0;
    double height_m = 1.5;
    double sphere_radius_m = 0.2;
    double sphere_spacing_m = 0.4;

    double wavelength_m() const;
    LinkBudget link_budget() const;
    void validate() const;
};

/// Reads a JSON object with keys freq_ghz, range_m, gt_db, gr_db, pt_dbm,
/// height_m, sphere_radius_m, sphere_spacing_m (plus optional pr_dbm and
/// rotation_rad_per_min). Missing keys keep their defaults; unknown keys
/// are rejected.
MeasurementConfig load_measurement_config(const std::filesystem::path& path);
MeasurementConfig parse_measurement_config(const std::string& json_text, const std::string& source = "<config>");

struct EchoSample {
    double angle_deg;
    double pr_dbm;
};

/// Received power against turntable angle; angles strictly increasing in [0, 360).
class EchoSweep {
public:
    EchoSweep(std::vector<EchoSample> samples, std::string label);

    const std::vector<EchoSample>& samples() const { return samples_; }
    const std::string& label() const { return label_; }
    std::size_t size() const { return samples_.size(); }

    RcsCurve as_curve() const;
    static EchoSweep from_curve(const RcsCurve& dbm_curve);

private:
    std::vector<EchoSample> samples_;
    std::string label_;
};

/// Reads `angle_deg,p_r_dbm`. Duplicate, out-of-order or out-of-range
/// angles are reported with their line number.
EchoSweep load_echo_sweep(const std::filesystem::path& path);

/// Applies the radar equation per angle; values in dBsm.
RcsCurve reduce_sweep_to_rcs(const EchoSweep& sweep, const MeasurementConfig& config);

/// Scales every curve so its value at ref_angle equals the first curve's:
/// additive for dB-valued curves, multiplicative for linear ones. Angles
/// are never shifted.
std::vector<RcsCurve> align_at_reference(std::span<const RcsCurve> curves, double ref_angle_deg = 90.0);

}  // namespace oamrcs
