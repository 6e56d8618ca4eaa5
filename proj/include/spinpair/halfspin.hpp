#pragma once

#include <compare>
#include <stdexcept>
#include <string>

namespace spinpair {

/**
 * Half-integer spin magnitude or component, stored exactly as twice its value.
 *
 * Keeping 2s as an integer makes bookkeeping of (-1)^{2s} exact and spares us
 * float equality on spin labels. The string form ("1/2", "-3/2", "2") is the
 * CLI/JSON boundary representation.
 */
class HalfSpin {
public:
  constexpr HalfSpin() : twice_(0) {}
  constexpr explicit HalfSpin(int twice) : twice_(twice) {}

  static constexpr HalfSpin from_twice(int twice) { return HalfSpin(twice); }

  // Parses "2", "1/2", "-3/2". Anything else throws.
  static HalfSpin parse(const std::string& text);

  constexpr int twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  constexpr double value() const { return 0.5 * twice_; }

  // True when m (this) is a valid z-component of spin magnitude s.
  constexpr bool is_component_of(HalfSpin s) const {
    const int a = twice_ < 0 ? -twice_ : twice_;
    return a <= s.twice_ && (s.twice_ - twice_) % 2 == 0;
  }

  std::string str() const;

  friend constexpr auto operator<=>(HalfSpin, HalfSpin) = default;
  friend constexpr HalfSpin operator+(HalfSpin a, HalfSpin b) {
    return HalfSpin(a.twice_ + b.twice_);
  }
  friend constexpr HalfSpin operator-(HalfSpin a, HalfSpin b) {
    return HalfSpin(a.twice_ - b.twice_);
  }
  constexpr HalfSpin operator-() const { return HalfSpin(-twice_); }

private:
  int twice_;
};

// (-1)^{2s} for spin s, computed from the exact integer 2s.
constexpr int parity_2s(HalfSpin s) { return (s.twice() % 2 == 0) ? 1 : -1; }

}  // namespace spinpair
