#pragma once

#include <limits>
#include <stdexcept>
#include <string>

namespace nakalg {

// Natural number extended with infinity; used for pdim/idim/grade.
class ExtNat {
public:
    ExtNat() : v_(0) {}
    ExtNat(long v) : v_(v) {
        if (v < 0) throw std::invalid_argument("ExtNat must be non-negative");
    }

    static ExtNat infinity() {
        ExtNat e;
        e.v_ = kInf;
        return e;
    }

    bool is_finite() const { return v_ != kInf; }

    long value() const {
        if (!is_finite()) throw std::logic_error("value() of infinity");
        return v_;
    }

    bool operator==(const ExtNat& o) const { return v_ == o.v_; }
    bool operator!=(const ExtNat& o) const { return v_ != o.v_; }
    bool operator<(const ExtNat& o) const {
        if (!is_finite()) return false;
        if (!o.is_finite()) return true;
        return v_ < o.v_;
    }
    bool operator<=(const ExtNat& o) const { return *this == o || *this < o; }
    bool operator>(const ExtNat& o) const { return o < *this; }
    bool operator>=(const ExtNat& o) const { return o <= *this; }

    friend ExtNat min(const ExtNat& a, const ExtNat& b) { return a < b ? a : b; }
    friend ExtNat max(const ExtNat& a, const ExtNat& b) { return a < b ? b : a; }

    std::string str() const { return is_finite() ? std::to_string(v_) : "inf"; }

private:
    static constexpr long kInf = std::numeric_limits<long>::max();
    long v_;
};

}  // namespace nakalg
