#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace oamrcs {

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    friend Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
    friend Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
    friend Vec3 operator*(double s, const Vec3& v) { return {s * v.x, s * v.y, s * v.z}; }
    friend bool operator==(const Vec3&, const Vec3&) = default;

    double norm() const;
    bool finite() const;
};

double distance(const Vec3& a, const Vec3& b);

/// Per-scatterer RCS as a function of orientation angle.
///
/// Either a constant (isotropic scatterer) or a table of (angle, σ) samples
/// with angles strictly increasing in [0, 2π). Tables are interpolated
/// piecewise-linearly with periodic wrap, so eval(φ) == eval(φ + 2π).
class RcsProfile {
public:
    struct Sample {
        double angle_rad;
        double sigma_m2;
    };

    /// Constant profile; throws DomainError on negative or non-finite σ.
    static RcsProfile constant(double sigma_m2);
    /// Tabulated profile; throws DomainError when the invariants above fail.
    static RcsProfile tabulated(std::vector<Sample> samples);

    double eval(double phi_rad) const;

    bool is_constant() const { return std::holds_alternative<double>(repr_); }
    /// Only meaningful when is_constant().
    double constant_value() const;
    const std::vector<Sample>* samples() const { return std::get_if<std::vector<Sample>>(&repr_); }

    friend bool operator==(const RcsProfile&, const RcsProfile&);

private:
    explicit RcsProfile(std::variant<double, std::vector<Sample>> repr) : repr_(std::move(repr)) {}

    std::variant<double, std::vector<Sample>> repr_;
};

bool operator==(const RcsProfile::Sample& a, const RcsProfile::Sample& b);

struct ScattererPoint {
    Vec3 position;
    RcsProfile base_rcs = RcsProfile::constant(1.0);

    friend bool operator==(const ScattererPoint&, const ScattererPoint&) = default;
};

/// Point-scatterer cloud, N >= 1, every position finite.
class TargetModel {
public:
    TargetModel(std::vector<ScattererPoint> scatterers, std::string label = {});

    const std::vector<ScattererPoint>& scatterers() const { return scatterers_; }
    std::size_t size() const { return scatterers_.size(); }
    const std::string& label() const { return label_; }

    Vec3 centroid() const;

    /// True when every scatterer has a constant profile with the same σ.
    bool uniform_constant_rcs() const;

    friend bool operator==(const TargetModel&, const TargetModel&) = default;

private:
    std::vector<ScattererPoint> scatterers_;
    std::string label_;
};

/// Canonical two-sphere target: spacing D, standoff y0 and per-sphere RCS σ0.
struct TwoSphereLayout {
    double spacing_m;
    double standoff_m;
    double sphere_rcs_m2;

    /// Throws DomainError unless all three are positive and finite.
    void validate() const;
};

/// Sphere positions for observation angle phi, rotating in the x–z plane
/// about (0, y0, 0):
///   p1 = (−D/2·sinφ, y0,  D/2·cosφ)
///   p2 = ( D/2·sinφ, y0, −D/2·cosφ)
std::pair<Vec3, Vec3> two_sphere_positions(const TwoSphereLayout& layout, double phi_rad);

TargetModel build_two_sphere_target(const TwoSphereLayout& layout, double phi_rad);

/// Reads a target CSV with header `x_m,y_m,z_m,sigma_m2[,profile_file]`.
/// A non-empty profile_file is resolved relative to the target file and read
/// as `angle_deg,sigma_m2`; it replaces the constant σ for that scatterer.
TargetModel load_target_csv(const std::filesystem::path& path);

/// Writes the base columns. Tabulated profiles are written as sibling
/// `<stem>_profile_<i>.csv` files referenced from the profile_file column.
void save_target_csv(const TargetModel& target, const std::filesystem::path& path);

}  // namespace oamrcs
