#pragma once

#include <bit>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace paracon {

// Subset of carrier elements, bit i = element i in carrier order.
using Mask = std::uint64_t;

inline constexpr std::size_t kMaxCarrierSize = 64;
// Operations that materialize a full 2^n table refuse carriers above this.
inline constexpr std::size_t kDefaultEnumerationLimit = 16;

inline std::size_t mask_count(Mask m) { return static_cast<std::size_t>(std::popcount(m)); }

inline std::size_t mask_first(Mask m) { return static_cast<std::size_t>(std::countr_zero(m)); }

// Finite, ordered universe of named elements.
class Carrier {
 public:
  explicit Carrier(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty()) throw std::invalid_argument("carrier: must be nonempty");
    if (names_.size() > kMaxCarrierSize)
      throw std::invalid_argument("carrier: more than " + std::to_string(kMaxCarrierSize) +
                                  " elements");
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i].empty()) throw std::invalid_argument("carrier: empty element name");
      for (std::size_t j = i + 1; j < names_.size(); ++j)
        if (names_[i] == names_[j])
          throw std::invalid_argument("carrier: duplicate element name '" + names_[i] + "'");
    }
  }

  std::size_t size() const { return names_.size(); }

  Mask full() const {
    return names_.size() == 64 ? ~0ull : (Mask{1} << names_.size()) - 1;
  }

  const std::string& name(std::size_t i) const {
    if (i >= names_.size()) throw std::domain_error("carrier: element index out of range");
    return names_[i];
  }

  std::optional<std::size_t> index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return i;
    return std::nullopt;
  }

  std::size_t require(std::string_view name) const {
    auto i = index_of(name);
    if (!i) throw std::domain_error("carrier: unknown element '" + std::string(name) + "'");
    return *i;
  }

  const std::vector<std::string>& names() const { return names_; }

  bool operator==(const Carrier& o) const { return names_ == o.names_; }

 private:
  std::vector<std::string> names_;
};

using CarrierPtr = std::shared_ptr<const Carrier>;

inline CarrierPtr make_carrier(std::vector<std::string> names) {
  return std::make_shared<const Carrier>(std::move(names));
}

// Subset of a carrier with name-level construction and formatting.
class ElementSet {
 public:
  ElementSet(CarrierPtr carrier, Mask mask) : carrier_(std::move(carrier)), mask_(mask) {
    if (!carrier_) throw std::invalid_argument("element set: null carrier");
    if (mask_ & ~carrier_->full())
      throw std::domain_error("element set: mask covers indices outside the carrier");
  }

  static ElementSet from_names(CarrierPtr carrier, const std::vector<std::string>& names) {
    if (!carrier) throw std::invalid_argument("element set: null carrier");
    Mask m = 0;
    for (const auto& n : names) m |= Mask{1} << carrier->require(n);
    return ElementSet(std::move(carrier), m);
  }

  Mask mask() const { return mask_; }
  const Carrier& carrier() const { return *carrier_; }
  CarrierPtr carrier_ptr() const { return carrier_; }
  bool contains(std::size_t i) const { return (mask_ >> i) & 1; }
  std::size_t size() const { return mask_count(mask_); }

  std::vector<std::string> names() const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < carrier_->size(); ++i)
      if (contains(i)) out.push_back(carrier_->name(i));
    return out;
  }

 private:
  CarrierPtr carrier_;
  Mask mask_;
};

// Renders a mask as "{a, b}" in carrier order.
inline std::string format_mask(const Carrier& carrier, Mask m) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < carrier.size(); ++i)
    if ((m >> i) & 1) {
      if (!first) out += ", ";
      out += carrier.name(i);
      first = false;
    }
  return out + "}";
}

}  // namespace paracon
