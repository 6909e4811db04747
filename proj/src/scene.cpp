#include "oamrcs/scene.hpp"

#include <algorithm>
#include <cmath>
#include <string_view>

#include "oamrcs/angles.hpp"
#include "oamrcs/csv.hpp"
#include "oamrcs/error.hpp"

namespace oamrcs {

double Vec3::norm() const { return std::sqrt(x * x + y * y + z * z); }

bool Vec3::finite() const { return std::isfinite(x) && std::isfinite(y) && std::isfinite(z); }

double distance(const Vec3& a, const Vec3& b) { return (a - b).norm(); }

bool operator==(const RcsProfile::Sample& a, const RcsProfile::Sample& b) {
    return a.angle_rad == b.angle_rad && a.sigma_m2 == b.sigma_m2;
}

bool operator==(const RcsProfile& a, const RcsProfile& b) { return a.repr_ == b.repr_; }

RcsProfile RcsProfile::constant(double sigma_m2) {
    if (!std::isfinite(sigma_m2) || sigma_m2 < 0.0) {
        throw DomainError("scatterer RCS must be finite and >= 0");
    }
    return RcsProfile(sigma_m2);
}

RcsProfile RcsProfile::tabulated(std::vector<Sample> samples) {
    if (samples.empty()) {
        throw DomainError("tabulated RCS profile needs at least one sample");
    }
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const auto& s = samples[i];
        if (!std::isfinite(s.angle_rad) || s.angle_rad < 0.0 || s.angle_rad >= kTwoPi) {
            throw DomainError("tabulated RCS profile angles must lie in [0, 360) degrees");
        }
        if (!std::isfinite(s.sigma_m2) || s.sigma_m2 < 0.0) {
            throw DomainError("tabulated RCS profile values must be finite and >= 0");
        }
        if (i > 0 && !(s.angle_rad > samples[i - 1].angle_rad)) {
            throw DomainError("tabulated RCS profile angles must be strictly increasing");
        }
    }
    return RcsProfile(std::move(samples));
}

double RcsProfile::constant_value() const { return std::get<double>(repr_); }

double RcsProfile::eval(double phi_rad) const {
    if (const auto* c = std::get_if<double>(&repr_)) {
        return *c;
    }
    const auto& s = std::get<std::vector<Sample>>(repr_);
    if (s.size() == 1) {
        return s.front().sigma_m2;
    }
    const double phi = wrap_two_pi(phi_rad);
    // First knot strictly after phi; the bracketing segment may wrap past 2π.
    const auto hi = std::upper_bound(s.begin(), s.end(), phi,
                                     [](double v, const Sample& smp) { return v < smp.angle_rad; });
    const Sample& b = hi == s.end() ? s.front() : *hi;
    const Sample& a = hi == s.begin() ? s.back() : *(hi - 1);
    double span = b.angle_rad - a.angle_rad;
    double offset = phi - a.angle_rad;
    if (span <= 0.0) {
        span += kTwoPi;
    }
    if (offset < 0.0) {
        offset += kTwoPi;
    }
    const double t = offset / span;
    return a.sigma_m2 + t * (b.sigma_m2 - a.sigma_m2);
}

TargetModel::TargetModel(std::vector<ScattererPoint> scatterers, std::string label)
    : scatterers_(std::move(scatterers)), label_(std::move(label)) {
    if (scatterers_.empty()) {
        throw DomainError("target must contain at least one scatterer");
    }
    for (const auto& s : scatterers_) {
        if (!s.position.finite()) {
            throw DomainError("scatterer position must be finite");
        }
    }
}

Vec3 TargetModel::centroid() const {
    Vec3 sum;
    for (const auto& s : scatterers_) {
        sum = sum + s.position;
    }
    return (1.0 / static_cast<double>(scatterers_.size())) * sum;
}

bool TargetModel::uniform_constant_rcs() const {
    const auto& first = scatterers_.front().base_rcs;
    if (!first.is_constant()) {
        return false;
    }
    return std::all_of(scatterers_.begin(), scatterers_.end(), [&](const ScattererPoint& s) {
        return s.base_rcs.is_constant() && s.base_rcs.constant_value() == first.constant_value();
    });
}

void TwoSphereLayout::validate() const {
    const auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
    if (!positive(spacing_m) || !positive(standoff_m) || !positive(sphere_rcs_m2)) {
        throw DomainError("two-sphere layout needs positive spacing, standoff and sphere RCS");
    }
}

std::pair<Vec3, Vec3> two_sphere_positions(const TwoSphereLayout& layout, double phi_rad) {
    const double phi = wrap_two_pi(phi_rad);
    const double half = 0.5 * layout.spacing_m;
    const double s = half * std::sin(phi);
    const double c = half * std::cos(phi);
    return {Vec3{-s, layout.standoff_m, c}, Vec3{s, layout.standoff_m, -c}};
}

TargetModel build_two_sphere_target(const TwoSphereLayout& layout, double phi_rad) {
    layout.validate();
    const auto [p1, p2] = two_sphere_positions(layout, phi_rad);
    const auto sigma = RcsProfile::constant(layout.sphere_rcs_m2);
    return TargetModel({{p1, sigma}, {p2, sigma}}, "two-sphere");
}

namespace {

RcsProfile load_profile_csv(const std::filesystem::path& path) {
    const auto table = csv::read(path);
    csv::require_header(table, {"angle_deg", "sigma_m2"});
    std::vector<RcsProfile::Sample> samples;
    for (const auto& row : table.rows) {
        const double angle = csv::parse_number(table, row, 0);
        const double sigma = csv::parse_number(table, row, 1);
        if (sigma < 0.0) {
            throw FormatError(table.source, row.line, "negative sigma_m2");
        }
        if (angle < 0.0 || angle >= 360.0) {
            throw FormatError(table.source, row.line, "angle_deg must lie in [0, 360)");
        }
        if (!samples.empty() && !(deg_to_rad(angle) > samples.back().angle_rad)) {
            throw FormatError(table.source, row.line, "angle_deg must be strictly increasing");
        }
        samples.push_back({deg_to_rad(angle), sigma});
    }
    if (samples.empty()) {
        throw FormatError(table.source, 0, "profile has no samples");
    }
    return RcsProfile::tabulated(std::move(samples));
}

}  // namespace

TargetModel load_target_csv(const std::filesystem::path& path) {
    const auto table = csv::read(path);
    const bool with_profiles = table.header.size() == 5;
    if (with_profiles) {
        csv::require_header(table, {"x_m", "y_m", "z_m", "sigma_m2", "profile_file"});
    } else {
        csv::require_header(table, {"x_m", "y_m", "z_m", "sigma_m2"});
    }
    std::vector<ScattererPoint> points;
    for (const auto& row : table.rows) {
        if (row.fields.size() != table.header.size() &&
            !(with_profiles && row.fields.size() == 4)) {
            throw FormatError(table.source, row.line,
                              "expected " + std::to_string(table.header.size()) + " fields, got " +
                                  std::to_string(row.fields.size()));
        }
        const Vec3 p{csv::parse_number(table, row, 0), csv::parse_number(table, row, 1),
                     csv::parse_number(table, row, 2)};
        const double sigma = csv::parse_number(table, row, 3);
        if (sigma < 0.0) {
            throw FormatError(table.source, row.line, "negative sigma_m2");
        }
        auto profile = RcsProfile::constant(sigma);
        if (with_profiles && row.fields.size() == 5 && !row.fields[4].empty()) {
            profile = load_profile_csv(path.parent_path() / row.fields[4]);
        }
        points.push_back({p, std::move(profile)});
    }
    if (points.empty()) {
        throw FormatError(table.source, 0, "target must contain at least one scatterer");
    }
    return TargetModel(std::move(points), path.stem().string());
}

void save_target_csv(const TargetModel& target, const std::filesystem::path& path) {
    const bool any_profile = std::any_of(target.scatterers().begin(), target.scatterers().end(),
                                         [](const ScattererPoint& s) { return !s.base_rcs.is_constant(); });
    std::string out = any_profile ? "x_m,y_m,z_m,sigma_m2,profile_file\n" : "x_m,y_m,z_m,sigma_m2\n";
    std::size_t index = 0;
    for (const auto& s : target.scatterers()) {
        const auto& p = s.position;
        out += csv::format_number(p.x, 17) + "," + csv::format_number(p.y, 17) + "," +
               csv::format_number(p.z, 17) + ",";
        if (const auto* samples = s.base_rcs.samples()) {
            const std::string name = path.stem().string() + "_profile_" + std::to_string(index) + ".csv";
            std::string prof = "angle_deg,sigma_m2\n";
            for (const auto& smp : *samples) {
                prof += csv::format_number(rad_to_deg(smp.angle_rad), 17) + "," +
                        csv::format_number(smp.sigma_m2, 17) + "\n";
            }
            csv::write_file(path.parent_path() / name, prof);
            out += csv::format_number(samples->front().sigma_m2, 17) + "," + name;
        } else {
            out += csv::format_number(s.base_rcs.constant_value(), 17);
            if (any_profile) {
                out += ",";
            }
        }
        out += "\n";
        ++index;
    }
    csv::write_file(path, out);
}

}  // namespace oamrcs
