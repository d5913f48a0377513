#include "codb/bits.hpp"

#include <bit>
#include <cassert>
#include <stdexcept>

#include "codb/kernels.hpp"

namespace codb {

BitVec::BitVec(std::size_t n, bool value) {
  resize(n);
  if (value) {
    for (std::size_t i = 0; i < n; ++i) set(i);
  }
}

void BitVec::resize(std::size_t n) {
  const std::size_t old_words = word_count();
  std::vector<std::uint64_t> words(data(), data() + old_words);
  size_ = n;
  words.resize(word_count(), 0);
  if (n <= 64) {
    small_ = words.empty() ? 0 : words[0];
    heap_.clear();
  } else {
    heap_ = std::move(words);
  }
  if (n % 64 != 0 && word_count() > 0) data()[word_count() - 1] &= (std::uint64_t{1} << (n % 64)) - 1;
}

BitVec BitVec::from_string(std::string_view text) {
  BitVec out(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1') {
      out.set(i);
    } else if (text[i] != '0') {
      throw std::invalid_argument("bit string may only contain 0 and 1: " + std::string(text));
    }
  }
  return out;
}

void BitVec::set(std::size_t i, bool value) noexcept {
  assert(i < size_);
  const std::uint64_t bit = std::uint64_t{1} << (i & 63);
  if (value) {
    data()[i >> 6] |= bit;
  } else {
    data()[i >> 6] &= ~bit;
  }
}

void BitVec::push_back(bool value) {
  if (size_ == 64) {
    heap_.assign({small_, 0});
    ++size_;
  } else if (size_ > 64 && size_ % 64 == 0) {
    heap_.push_back(0);
    ++size_;
  } else {
    ++size_;
  }
  set(size_ - 1, value);
}

std::size_t BitVec::count() const noexcept {
  return kernels::active().popcount(data(), word_count());
}

bool BitVec::none() const noexcept {
  for (std::uint64_t w : words()) {
    if (w != 0) return false;
  }
  return true;
}

std::size_t BitVec::rank(std::size_t i) const noexcept {
  std::size_t total = 0;
  const std::uint64_t* d = data();
  for (std::size_t w = 0; w < (i >> 6); ++w) total += static_cast<std::size_t>(std::popcount(d[w]));
  if ((i & 63) != 0) total += static_cast<std::size_t>(std::popcount(d[i >> 6] & ((std::uint64_t{1} << (i & 63)) - 1)));
  return total;
}

std::size_t BitVec::select(std::size_t k) const noexcept {
  const std::uint64_t* d = data();
  for (std::size_t w = 0; w < word_count(); ++w) {
    std::uint64_t v = d[w];
    const auto here = static_cast<std::size_t>(std::popcount(v));
    if (k < here) {
      for (std::size_t j = 0; j < k; ++j) v &= v - 1;
      return w * 64 + static_cast<std::size_t>(std::countr_zero(v));
    }
    k -= here;
  }
  return size_;
}

bool BitVec::is_subset_of(const BitVec& other) const noexcept {
  assert(size_ == other.size_);
  const std::uint64_t* a = data();
  const std::uint64_t* b = other.data();
  for (std::size_t w = 0; w < word_count(); ++w) {
    if ((a[w] & ~b[w]) != 0) return false;
  }
  return true;
}

std::string BitVec::to_string() const {
  std::string out;
  out.reserve(size_);
  for (std::size_t i = 0; i < size_; ++i) out.push_back(test(i) ? '1' : '0');
  return out;
}

bool operator==(const BitVec& a, const BitVec& b) noexcept {
  if (a.size_ != b.size_) return false;
  const std::uint64_t* x = a.data();
  const std::uint64_t* y = b.data();
  for (std::size_t w = 0; w < a.word_count(); ++w) {
    if (x[w] != y[w]) return false;
  }
  return true;
}

BitVec operator|(const BitVec& a, const BitVec& b) {
  assert(a.size() == b.size());
  BitVec out(a.size());
  for (std::size_t w = 0; w < a.word_count(); ++w) out.data()[w] = a.data()[w] | b.data()[w];
  return out;
}

BitVec operator&(const BitVec& a, const BitVec& b) {
  assert(a.size() == b.size());
  BitVec out(a.size());
  for (std::size_t w = 0; w < a.word_count(); ++w) out.data()[w] = a.data()[w] & b.data()[w];
  return out;
}

BitVec BitVec::concat(const BitVec& a, const BitVec& b) {
  BitVec out(a.size() + b.size());
  for (std::size_t w = 0; w < a.word_count(); ++w) out.data()[w] = a.data()[w];
  // TODO: shift whole words when b is long; bitwise copy is fine at scope sizes seen so far.
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b.test(i)) out.set(a.size() + i);
  }
  return out;
}

BitVec BitVec::slice(std::size_t begin, std::size_t length) const {
  assert(begin + length <= size_);
  BitVec out(length);
  for (std::size_t i = 0; i < length; ++i) {
    if (test(begin + i)) out.set(i);
  }
  return out;
}

BitVec deposit(const BitVec& src, const BitVec& mask) {
  assert(src.size() == mask.count());
  BitVec out(mask.size());
  if (mask.word_count() > 0) kernels::active().deposit(src.data(), mask.data(), out.data(), mask.word_count());
  return out;
}

BitVec extract(const BitVec& src, const BitVec& mask) {
  assert(src.size() == mask.size());
  BitVec out(mask.count());
  if (mask.word_count() > 0) kernels::active().extract(src.data(), mask.data(), out.data(), mask.word_count());
  return out;
}

}  // namespace codb
