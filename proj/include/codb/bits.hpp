#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace codb {

/// Packed bit sequence, position 0 first. Bits past size() are kept zero.
/// Sequences of up to 64 bits live inline.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t n, bool value = false);

  /// Parses a string over {0,1}; throws std::invalid_argument otherwise.
  static BitVec from_string(std::string_view text);

  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }
  std::size_t word_count() const noexcept { return (size_ + 63) / 64; }

  bool test(std::size_t i) const noexcept { return (data()[i >> 6] >> (i & 63)) & 1u; }
  bool operator[](std::size_t i) const noexcept { return test(i); }
  void set(std::size_t i, bool value = true) noexcept;
  void push_back(bool value);

  std::size_t count() const noexcept;
  bool all() const noexcept { return count() == size_; }
  bool none() const noexcept;

  /// Number of set bits strictly before position i.
  std::size_t rank(std::size_t i) const noexcept;
  /// Position of the k-th set bit (k counted from 0); size() if there is none.
  std::size_t select(std::size_t k) const noexcept;

  bool is_subset_of(const BitVec& other) const noexcept;

  std::span<const std::uint64_t> words() const noexcept { return {data(), word_count()}; }

  std::string to_string() const;

  friend bool operator==(const BitVec& a, const BitVec& b) noexcept;
  friend BitVec operator|(const BitVec& a, const BitVec& b);
  friend BitVec operator&(const BitVec& a, const BitVec& b);

  static BitVec concat(const BitVec& a, const BitVec& b);
  BitVec slice(std::size_t begin, std::size_t length) const;

 private:
  const std::uint64_t* data() const noexcept { return size_ <= 64 ? &small_ : heap_.data(); }
  std::uint64_t* data() noexcept { return size_ <= 64 ? &small_ : heap_.data(); }
  void resize(std::size_t n);

  std::size_t size_ = 0;
  std::uint64_t small_ = 0;
  std::vector<std::uint64_t> heap_;

  friend BitVec deposit(const BitVec& src, const BitVec& mask);
  friend BitVec extract(const BitVec& src, const BitVec& mask);
};

/// Result has mask's length; its set positions are mask's set positions
/// filtered by src (src.size() must equal mask.count()).
BitVec deposit(const BitVec& src, const BitVec& mask);

/// Result has mask.count() bits: src read at mask's set positions.
BitVec extract(const BitVec& src, const BitVec& mask);

}  // namespace codb
