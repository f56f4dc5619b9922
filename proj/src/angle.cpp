#include "w3pl/angle.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace w3pl {

Angle::Angle(double radians) : rad_(normalize_angle(radians).radians()) {}

Angle normalize_angle(double x) {
    if (!std::isfinite(x)) {
        throw std::domain_error("normalize_angle: input must be finite");
    }
    double r = std::fmod(x, two_pi);
    if (r < 0.0) {
        r += two_pi;
    }
    // fmod keeps |r| < 2*pi, but the negative branch can round back up to 2*pi.
    if (r >= two_pi) {
        r = 0.0;
    }
    Angle a;
    a.rad_ = r;
    return a;
}

Angle degrees_to_radians(double degrees) {
    if (!std::isfinite(degrees)) {
        throw std::domain_error("degrees_to_radians: input must be finite");
    }
    return normalize_angle(degrees * (std::numbers::pi / 180.0));
}

double radians_to_degrees(Angle a) {
    return a.radians() * (180.0 / std::numbers::pi);
}

Angle angle_from_hour(int hour) {
    if (hour < 0 || hour > 23) {
        throw std::domain_error("angle_from_hour: hour must be in 0..23");
    }
    return normalize_angle(two_pi * (hour / 24.0));
}

const char* angle_unit_name(AngleUnit unit) {
    switch (unit) {
        case AngleUnit::Radians: return "radians";
        case AngleUnit::Degrees: return "degrees";
        case AngleUnit::HourOfDay: return "hour_of_day";
    }
    return "unknown";
}

CircularSample::CircularSample(std::vector<Angle> angles, AngleUnit source_unit)
    : angles_(std::move(angles)), source_unit_(source_unit) {
    if (angles_.empty()) {
        throw std::domain_error("CircularSample: sample must contain at least one angle");
    }
}

CircularSample CircularSample::from_radians(const std::vector<double>& values) {
    std::vector<Angle> angles;
    angles.reserve(values.size());
    for (double v : values) angles.push_back(normalize_angle(v));
    return CircularSample(std::move(angles), AngleUnit::Radians);
}

CircularSample CircularSample::from_degrees(const std::vector<double>& values) {
    std::vector<Angle> angles;
    angles.reserve(values.size());
    for (double v : values) angles.push_back(degrees_to_radians(v));
    return CircularSample(std::move(angles), AngleUnit::Degrees);
}

CircularSample CircularSample::from_hours(const std::vector<int>& hours) {
    std::vector<Angle> angles;
    angles.reserve(hours.size());
    for (int h : hours) angles.push_back(angle_from_hour(h));
    return CircularSample(std::move(angles), AngleUnit::HourOfDay);
}

}  // namespace w3pl
