#include "oamrcs/measurement.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "oamrcs/angles.hpp"
#include "oamrcs/csv.hpp"
#include "oamrcs/error.hpp"
#include "oamrcs/simd/kernels.hpp"

namespace oamrcs {

namespace {

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

// 10·log10((4π)³ R⁴ / λ²): the geometric part of the radar equation in dB.
double geometry_db(double range_m, double wavelength_m) {
    return 30.0 * std::log10(4.0 * kPi) + 40.0 * std::log10(range_m) - 20.0 * std::log10(wavelength_m);
}

}  // namespace

void LinkBudget::validate() const {
    if (!std::isfinite(range_m) || range_m <= 0.0) {
        throw DomainError("range must be positive");
    }
    if (!std::isfinite(wavelength_m) || wavelength_m <= 0.0) {
        throw DomainError("wavelength must be positive");
    }
    if (!std::isfinite(pt_dbm) || !std::isfinite(gt_db) || !std::isfinite(gr_db)) {
        throw DomainError("link budget powers and gains must be finite");
    }
}

double rcs_from_link_budget(const LinkBudget& b) {
    b.validate();
    if (!std::isfinite(b.pr_dbm)) {
        throw DomainError("received power must be finite");
    }
    const double four_pi = 4.0 * kPi;
    const double r2 = b.range_m * b.range_m;
    const double numerator = db_to_linear(b.pr_dbm) * four_pi * four_pi * four_pi * r2 * r2;
    const double denominator =
        db_to_linear(b.pt_dbm) * db_to_linear(b.gt_db) * db_to_linear(b.gr_db) * b.wavelength_m * b.wavelength_m;
    return numerator / denominator;
}

double rcs_dbsm_from_link_budget(const LinkBudget& b) {
    b.validate();
    return b.pr_dbm - b.pt_dbm - b.gt_db - b.gr_db + geometry_db(b.range_m, b.wavelength_m);
}

double predicted_received_power(double sigma_m2, const LinkBudget& b) {
    b.validate();
    if (!(sigma_m2 >= 0.0) || !std::isfinite(sigma_m2)) {
        throw DomainError("RCS must be finite and >= 0");
    }
    if (sigma_m2 == 0.0) {
        return -std::numeric_limits<double>::infinity();
    }
    return 10.0 * std::log10(sigma_m2) + b.pt_dbm + b.gt_db + b.gr_db - geometry_db(b.range_m, b.wavelength_m);
}

double MeasurementConfig::wavelength_m() const { return wavelength_from_ghz(freq_ghz); }

LinkBudget MeasurementConfig::link_budget() const {
    return {pt_dbm, pr_dbm, gt_db, gr_db, range_m, wavelength_m()};
}

void MeasurementConfig::validate() const {
    const auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
    if (!positive(freq_ghz) || !positive(range_m) || !positive(rotation_rad_per_min) || !positive(height_m) ||
        !positive(sphere_radius_m) || !positive(sphere_spacing_m)) {
        throw DomainError("frequency, range, rotation rate and lengths must be positive");
    }
    // Powers and gains are logarithmic and may be negative.
    if (!std::isfinite(gt_db) || !std::isfinite(gr_db) || !std::isfinite(pt_dbm) || !std::isfinite(pr_dbm)) {
        throw DomainError("powers and gains must be finite");
    }
}

MeasurementConfig parse_measurement_config(const std::string& json_text, const std::string& source) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw FormatError(source, 0, std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) {
        throw FormatError(source, 0, "configuration must be a JSON object");
    }
    MeasurementConfig cfg;
    const std::pair<const char*, double*> fields[] = {
        {"freq_ghz", &cfg.freq_ghz},
        {"range_m", &cfg.range_m},
        {"rotation_rad_per_min", &cfg.rotation_rad_per_min},
        {"gt_db", &cfg.gt_db},
        {"gr_db", &cfg.gr_db},
        {"pt_dbm", &cfg.pt_dbm},
        {"pr_dbm", &cfg.pr_dbm},
        {"height_m", &cfg.height_m},
        {"sphere_radius_m", &cfg.sphere_radius_m},
        {"sphere_spacing_m", &cfg.sphere_spacing_m},
    };
    for (const auto& [key, value] : j.items()) {
        double* target = nullptr;
        for (const auto& [name, slot] : fields) {
            if (key == name) {
                target = slot;
            }
        }
        if (!target) {
            throw FormatError(source, 0, "unknown configuration key '" + key + "'");
        }
        if (!value.is_number()) {
            throw FormatError(source, 0, "configuration key '" + key + "' must be a number");
        }
        *target = value.get<double>();
    }
    try {
        cfg.validate();
    } catch (const DomainError& e) {
        throw FormatError(source, 0, e.what());
    }
    return cfg;
}

MeasurementConfig load_measurement_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open '" + path.string() + "'");
    }
    std::ostringstream text;
    text << in.rdbuf();
    return parse_measurement_config(text.str(), path.string());
}

EchoSweep::EchoSweep(std::vector<EchoSample> samples, std::string label)
    : samples_(std::move(samples)), label_(std::move(label)) {
    if (samples_.size() < 2) {
        throw DomainError("echo sweep needs at least 2 samples");
    }
    for (std::size_t i = 0; i < samples_.size(); ++i) {
        const auto& s = samples_[i];
        if (!std::isfinite(s.angle_deg) || s.angle_deg < 0.0 || s.angle_deg >= 360.0) {
            throw DomainError("echo sweep angles must lie in [0, 360)");
        }
        if (!std::isfinite(s.pr_dbm)) {
            throw DomainError("echo sweep powers must be finite");
        }
        if (i > 0 && !(s.angle_deg > samples_[i - 1].angle_deg)) {
            throw DomainError("echo sweep angles must be strictly increasing");
        }
    }
}

RcsCurve EchoSweep::as_curve() const {
    std::vector<double> angles;
    std::vector<double> values;
    angles.reserve(samples_.size());
    values.reserve(samples_.size());
    for (const auto& s : samples_) {
        angles.push_back(s.angle_deg);
        values.push_back(s.pr_dbm);
    }
    return RcsCurve(std::move(angles), std::move(values), label_, CurveKind::Dbm);
}

EchoSweep EchoSweep::from_curve(const RcsCurve& dbm_curve) {
    if (dbm_curve.kind() != CurveKind::Dbm) {
        throw DomainError("echo sweep needs a received-power (dBm) curve");
    }
    std::vector<EchoSample> samples;
    for (std::size_t i = 0; i < dbm_curve.size(); ++i) {
        samples.push_back({dbm_curve.angles_deg()[i], dbm_curve.values()[i]});
    }
    return EchoSweep(std::move(samples), dbm_curve.label());
}

EchoSweep load_echo_sweep(const std::filesystem::path& path) {
    const auto table = csv::read(path);
    csv::require_header(table, {"angle_deg", "p_r_dbm"});
    std::vector<EchoSample> samples;
    for (const auto& row : table.rows) {
        if (row.fields.size() != 2) {
            throw FormatError(table.source, row.line, "expected 2 fields, got " + std::to_string(row.fields.size()));
        }
        const double angle = csv::parse_number(table, row, 0);
        const double power = csv::parse_number(table, row, 1);
        if (angle < 0.0 || angle >= 360.0) {
            throw FormatError(table.source, row.line, "angle_deg must lie in [0, 360)");
        }
        if (!samples.empty() && angle == samples.back().angle_deg) {
            throw FormatError(table.source, row.line, "duplicate angle_deg");
        }
        if (!samples.empty() && angle < samples.back().angle_deg) {
            throw FormatError(table.source, row.line, "angle_deg out of order");
        }
        samples.push_back({angle, power});
    }
    if (samples.size() < 2) {
        throw FormatError(table.source, 0, "echo sweep needs at least 2 samples");
    }
    return EchoSweep(std::move(samples), path.stem().string());
}

RcsCurve reduce_sweep_to_rcs(const EchoSweep& sweep, const MeasurementConfig& config) {
    config.validate();
    const LinkBudget b = config.link_budget();
    b.validate();
    const double offset = -b.pt_dbm - b.gt_db - b.gr_db + geometry_db(b.range_m, b.wavelength_m);
    std::vector<double> power;
    std::vector<double> angles;
    for (const auto& s : sweep.samples()) {
        angles.push_back(s.angle_deg);
        power.push_back(s.pr_dbm);
    }
    std::vector<double> dbsm(power.size());
    simd::kernels().add_scalar(power, offset, dbsm);
    return RcsCurve(std::move(angles), std::move(dbsm), sweep.label(), CurveKind::Dbsm);
}

std::vector<RcsCurve> align_at_reference(std::span<const RcsCurve> curves, double ref_angle_deg) {
    if (curves.empty()) {
        return {};
    }
    if (!std::isfinite(ref_angle_deg) || ref_angle_deg < 0.0 || ref_angle_deg >= 360.0) {
        throw DomainError("reference angle outside the [0, 360) grid");
    }
    const bool log_scale = curves.front().is_logarithmic();
    const double target = curves.front().value_at(ref_angle_deg);
    std::vector<RcsCurve> out;
    out.reserve(curves.size());
    for (const auto& c : curves) {
        if (c.is_logarithmic() != log_scale) {
            throw DomainError("cannot align dB-valued and linear curves together");
        }
        const double here = c.value_at(ref_angle_deg);
        std::vector<double> values(c.size());
        if (log_scale) {
            simd::kernels().add_scalar(c.values(), target - here, values);
        } else {
            if (here == 0.0) {
                throw DomainError("curve '" + c.label() + "' is zero at the reference angle");
            }
            const double scale = target / here;
            for (std::size_t i = 0; i < values.size(); ++i) {
                values[i] = c.values()[i] * scale;
            }
        }
        out.emplace_back(c.angles_deg(), std::move(values), c.label(), c.kind());
    }
    return out;
}

}  // namespace oamrcs
