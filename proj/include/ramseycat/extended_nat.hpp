#pragma once

#include <cstdint>
#include <string>

namespace ramseycat {

// Natural numbers >= 1 extended with infinity; infinity absorbs under
// multiplication. Degree computations and reports are valued here.
class ExtendedNat {
  public:
    constexpr ExtendedNat() : value_(1), infinite_(false) {}
    constexpr explicit ExtendedNat(std::uint64_t v) : value_(v), infinite_(false) {}

    static constexpr ExtendedNat infinity() {
        ExtendedNat e;
        e.infinite_ = true;
        e.value_ = 0;
        return e;
    }

    constexpr bool is_infinite() const { return infinite_; }

    // Only meaningful when finite.
    constexpr std::uint64_t value() const { return value_; }

    friend constexpr bool operator==(ExtendedNat a, ExtendedNat b) {
        if (a.infinite_ != b.infinite_) return false;
        return a.infinite_ || a.value_ == b.value_;
    }
    friend constexpr bool operator!=(ExtendedNat a, ExtendedNat b) { return !(a == b); }
    friend constexpr bool operator<(ExtendedNat a, ExtendedNat b) {
        if (a.infinite_) return false;
        if (b.infinite_) return true;
        return a.value_ < b.value_;
    }
    friend constexpr bool operator<=(ExtendedNat a, ExtendedNat b) { return a < b || a == b; }
    friend constexpr bool operator>(ExtendedNat a, ExtendedNat b) { return b < a; }
    friend constexpr bool operator>=(ExtendedNat a, ExtendedNat b) { return b <= a; }

    friend constexpr ExtendedNat operator*(ExtendedNat a, ExtendedNat b) {
        if (a.infinite_ || b.infinite_) return infinity();
        return ExtendedNat(a.value_ * b.value_);
    }

    std::string str() const { return infinite_ ? "inf" : std::to_string(value_); }

  private:
    std::uint64_t value_;
    bool infinite_;
};

} // namespace ramseycat
