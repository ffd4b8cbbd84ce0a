#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "relcyl/config.hpp"

namespace relcyl {

// A subset of the atom index range {0..63}; every algebra value is one of these.
class Element {
 public:
  constexpr Element() = default;
  constexpr explicit Element(std::uint64_t bits) : bits_(bits) {}
  Element(std::initializer_list<int> atoms) {
    for (int a : atoms) bits_ |= bit(a);
  }

  static constexpr Element atom(int a) { return Element(bit(a)); }
  static constexpr Element full(int num_atoms) {
    return Element(num_atoms >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << num_atoms) - 1);
  }
  static Element from_atoms(const std::vector<int>& atoms) {
    Element e;
    for (int a : atoms) e.bits_ |= bit(a);
    return e;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int a) const { return (bits_ >> a) & 1U; }
  constexpr int count() const { return std::popcount(bits_); }
  constexpr bool is_atom() const { return std::has_single_bit(bits_); }
  // Index of the least atom; undefined on the empty element.
  constexpr int least() const { return std::countr_zero(bits_); }
  constexpr bool leq(Element o) const { return (bits_ & ~o.bits_) == 0; }

  std::vector<int> atoms() const {
    std::vector<int> out;
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  constexpr Element operator|(Element o) const { return Element(bits_ | o.bits_); }
  constexpr Element operator&(Element o) const { return Element(bits_ & o.bits_); }
  constexpr Element minus(Element o) const { return Element(bits_ & ~o.bits_); }
  constexpr Element complement(int num_atoms) const {
    return Element(~bits_ & full(num_atoms).bits_);
  }
  Element& operator|=(Element o) {
    bits_ |= o.bits_;
    return *this;
  }
  Element& operator&=(Element o) {
    bits_ &= o.bits_;
    return *this;
  }

  constexpr bool operator==(const Element&) const = default;
  constexpr auto operator<=>(const Element&) const = default;

 private:
  static constexpr std::uint64_t bit(int a) { return std::uint64_t{1} << a; }
  std::uint64_t bits_ = 0;
};

}  // namespace relcyl
