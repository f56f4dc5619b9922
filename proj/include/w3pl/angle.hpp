#pragma once

#include <compare>
#include <cstddef>
#include <numbers>
#include <vector>

namespace w3pl {

inline constexpr double two_pi = 2.0 * std::numbers::pi;

/// An angle in radians, normalized to the half-open interval [0, 2*pi).
class Angle {
public:
    Angle() = default;
    explicit Angle(double radians);

    double radians() const { return rad_; }

    friend bool operator==(Angle a, Angle b) { return a.rad_ == b.rad_; }
    friend std::partial_ordering operator<=>(Angle a, Angle b) { return a.rad_ <=> b.rad_; }

private:
    friend Angle normalize_angle(double x);

    double rad_ = 0.0;
};

/// Reduces any finite real modulo 2*pi into [0, 2*pi). Throws std::domain_error
/// on non-finite input. A result that rounds up to exactly 2*pi snaps to 0.
Angle normalize_angle(double x);

Angle degrees_to_radians(double degrees);
double radians_to_degrees(Angle a);

/// Hour of day h in {0,...,23} mapped to the equally spaced angle 2*pi*h/24.
Angle angle_from_hour(int hour);

enum class AngleUnit { Radians, Degrees, HourOfDay };

const char* angle_unit_name(AngleUnit unit);

/// An ordered, nonempty collection of angles plus the unit the raw data
/// carried before conversion.
class CircularSample {
public:
    explicit CircularSample(std::vector<Angle> angles,
                            AngleUnit source_unit = AngleUnit::Radians);

    static CircularSample from_radians(const std::vector<double>& values);
    static CircularSample from_degrees(const std::vector<double>& values);
    static CircularSample from_hours(const std::vector<int>& hours);

    std::size_t n() const { return angles_.size(); }
    Angle operator[](std::size_t i) const { return angles_[i]; }
    const std::vector<Angle>& angles() const { return angles_; }
    AngleUnit source_unit() const { return source_unit_; }

    auto begin() const { return angles_.begin(); }
    auto end() const { return angles_.end(); }

private:
    std::vector<Angle> angles_;
    AngleUnit source_unit_;
};

}  // namespace w3pl
