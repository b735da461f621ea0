#ifndef GLAB_FIELD_HPP
#define GLAB_FIELD_HPP

#include <cctype>
#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "glab/errors.hpp"

namespace glab {

constexpr bool is_prime(std::uint64_t p) noexcept {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::uint64_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

/// Coefficient field: the rationals (characteristic 0) or GF(p), p < 2^31.
class FieldSpec {
 public:
  static FieldSpec rationals() noexcept { return FieldSpec(0); }

  static FieldSpec prime(std::uint64_t p) {
    if (p >= (std::uint64_t{1} << 31)) throw usage_error("field characteristic must be below 2^31");
    if (!is_prime(p)) throw usage_error(std::to_string(p) + " is not prime");
    return FieldSpec(static_cast<std::uint32_t>(p));
  }

  /// Accepts "q"/"Q"/"0" for the rationals, otherwise a prime ("2", "GF(3)").
  static FieldSpec parse(std::string_view text) {
    if (text == "q" || text == "Q" || text == "0") return rationals();
    if (text.starts_with("GF(") && text.ends_with(")")) text = text.substr(3, text.size() - 4);
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), p);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
      throw usage_error("unrecognised field '" + std::string(text) + "'");
    }
    return prime(p);
  }

  std::uint32_t characteristic() const noexcept { return characteristic_; }
  bool is_rational() const noexcept { return characteristic_ == 0; }

  std::string name() const { return is_rational() ? "Q" : "GF(" + std::to_string(characteristic_) + ")"; }

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  explicit FieldSpec(std::uint32_t c) noexcept : characteristic_(c) {}

  std::uint32_t characteristic_ = 0;
};

/// {GF(2), GF(3), Q}.
inline std::vector<FieldSpec> default_fields() {
  return {FieldSpec::prime(2), FieldSpec::prime(3), FieldSpec::rationals()};
}

}  // namespace glab

#endif  // GLAB_FIELD_HPP
