#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace paracon {

// Fixed-length bit vector used for per-valuation and per-formula sets that can
// exceed 64 bits. Word layout is little-endian; spare bits are kept zero.
class Bitvec {
 public:
  Bitvec() = default;
  explicit Bitvec(std::size_t n, bool fill = false) : n_(n), w_((n + 63) / 64, fill ? ~0ull : 0ull) {
    trim();
  }

  std::size_t size() const { return n_; }

  void set(std::size_t i) { w_[i >> 6] |= (1ull << (i & 63)); }
  void reset(std::size_t i) { w_[i >> 6] &= ~(1ull << (i & 63)); }
  bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

  bool none() const {
    for (auto x : w_)
      if (x) return false;
    return true;
  }
  bool any() const { return !none(); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto x : w_) c += static_cast<std::size_t>(std::popcount(x));
    return c;
  }

  // First set bit, or size() when empty.
  std::size_t first() const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i]) return i * 64 + static_cast<std::size_t>(std::countr_zero(w_[i]));
    return n_;
  }

  Bitvec& operator&=(const Bitvec& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  Bitvec& operator|=(const Bitvec& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }

  // this ⊆ o
  bool subset_of(const Bitvec& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  bool intersects(const Bitvec& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  // First position set here but not in o, or size() when none.
  std::size_t first_not_in(const Bitvec& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      std::uint64_t d = w_[i] & ~o.w_[i];
      if (d) return i * 64 + static_cast<std::size_t>(std::countr_zero(d));
    }
    return n_;
  }

  bool operator==(const Bitvec& o) const { return n_ == o.n_ && w_ == o.w_; }

 private:
  void trim() {
    if (n_ & 63) w_.back() &= (1ull << (n_ & 63)) - 1;
  }

  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace paracon
