#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

namespace sizefn {

// Real number extended with +infinity. Arithmetic follows fixed conventions:
//   inf - y = y - inf = inf (finite y),  inf - inf = 0,  inf / 2 = inf,
//   |inf| = inf,  min(inf, c) = c,  max(inf, c) = inf.
// Plain double arithmetic would give NaN for inf - inf, so the difference
// goes through abs_diff() below.
class ExtendedReal {
public:
    ExtendedReal() : v_(0.0) {}
    ExtendedReal(double v) : v_(v) {
        if (std::isnan(v) || v == -std::numeric_limits<double>::infinity())
            throw std::invalid_argument("ExtendedReal: value must be finite or +inf");
    }

    static ExtendedReal infinity() {
        ExtendedReal r;
        r.v_ = std::numeric_limits<double>::infinity();
        return r;
    }

    bool is_infinite() const { return std::isinf(v_); }
    bool is_finite() const { return !is_infinite(); }

    // Finite value; +inf maps to the double infinity.
    double value() const { return v_; }

    friend bool operator==(ExtendedReal a, ExtendedReal b) { return a.v_ == b.v_; }
    friend bool operator!=(ExtendedReal a, ExtendedReal b) { return a.v_ != b.v_; }
    friend bool operator<(ExtendedReal a, ExtendedReal b) { return a.v_ < b.v_; }
    friend bool operator<=(ExtendedReal a, ExtendedReal b) { return a.v_ <= b.v_; }
    friend bool operator>(ExtendedReal a, ExtendedReal b) { return a.v_ > b.v_; }
    friend bool operator>=(ExtendedReal a, ExtendedReal b) { return a.v_ >= b.v_; }

    // inf + x = inf; finite + finite as usual.
    friend ExtendedReal operator+(ExtendedReal a, ExtendedReal b) {
        if (a.is_infinite() || b.is_infinite()) return infinity();
        return ExtendedReal(a.v_ + b.v_);
    }

private:
    double v_;
};

// |a - b| with the convention inf - inf = 0.
inline ExtendedReal abs_diff(ExtendedReal a, ExtendedReal b) {
    if (a.is_infinite() && b.is_infinite()) return ExtendedReal(0.0);
    if (a.is_infinite() || b.is_infinite()) return ExtendedReal::infinity();
    return ExtendedReal(std::abs(a.value() - b.value()));
}

// a / 2 with inf / 2 = inf.
inline ExtendedReal half(ExtendedReal a) {
    if (a.is_infinite()) return ExtendedReal::infinity();
    return ExtendedReal(a.value() / 2.0);
}

inline ExtendedReal min(ExtendedReal a, ExtendedReal b) { return a < b ? a : b; }
inline ExtendedReal max(ExtendedReal a, ExtendedReal b) { return a < b ? b : a; }

} // namespace sizefn
