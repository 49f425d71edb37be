#pragma once

#include <limits>
#include <optional>
#include <string>

#include "conjlab/errors.hpp"

namespace conjlab {

// A length that is either a finite positive real or the ideal "infinite" value.
class Extent {
public:
    constexpr Extent() = default; // infinite
    constexpr explicit Extent(double v) : value_(v) {}

    static constexpr Extent infinite() { return Extent{}; }

    constexpr bool is_infinite() const { return !value_.has_value(); }
    constexpr bool is_finite() const { return value_.has_value(); }

    double value() const {
        if (!value_) throw DomainError("infinite extent has no finite value");
        return *value_;
    }
    // finite value, or +inf for arithmetic comparisons
    double or_inf() const { return value_ ? *value_ : std::numeric_limits<double>::infinity(); }

    friend bool operator==(const Extent&, const Extent&) = default;

private:
    std::optional<double> value_;
};

Extent parse_extent(const std::string& text);
std::string to_string(const Extent& e);

} // namespace conjlab
