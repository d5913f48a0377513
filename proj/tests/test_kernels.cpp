#include <doctest.h>

#include <random>
#include <stdexcept>

#include "codb/bits.hpp"
#include "codb/kernels.hpp"

using namespace codb;

namespace {

std::vector<std::uint64_t> random_words(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::uint64_t> w(n);
  for (auto& x : w) {
    // mix dense, sparse and edge words
    switch (rng() % 4) {
      case 0: x = 0; break;
      case 1: x = ~0ull; break;
      case 2: x = rng() & rng(); break;
      default: x = rng(); break;
    }
  }
  return w;
}

std::size_t popcount_all(const std::vector<std::uint64_t>& w) { return kernels::scalar().popcount(w.data(), w.size()); }

}  // namespace

TEST_CASE("scalar kernels on small hand cases") {
  const auto& k = kernels::scalar();
  std::uint64_t mask = 0b10101, src = 0b101, out = 0;
  k.deposit(&src, &mask, &out, 1);
  CHECK(out == 0b10001);
  k.extract(&out, &mask, &src, 1);
  CHECK(src == 0b101);
  std::uint64_t words[2] = {~0ull, 0b1011};
  CHECK(k.popcount(words, 2) == 67);
}

TEST_CASE("every available variant agrees with scalar") {
  const auto names = kernels::available();
  REQUIRE(!names.empty());
  CHECK(names.front() == "scalar");
  std::mt19937_64 rng(7);
  const auto& ref = kernels::scalar();
  for (const auto* table : {kernels::bmi2()}) {
    if (table == nullptr) continue;
    for (int trial = 0; trial < 2000; ++trial) {
      const std::size_t words = 1 + rng() % 5;
      auto mask = random_words(rng, words);
      const std::size_t pc = popcount_all(mask);
      auto src = random_words(rng, words);
      std::vector<std::uint64_t> a(words), b(words);
      ref.deposit(src.data(), mask.data(), a.data(), words);
      table->deposit(src.data(), mask.data(), b.data(), words);
      CHECK(a == b);
      const std::size_t packed = (pc + 63) / 64;
      std::vector<std::uint64_t> c(std::max<std::size_t>(packed, 1)), d(std::max<std::size_t>(packed, 1));
      ref.extract(src.data(), mask.data(), c.data(), words);
      table->extract(src.data(), mask.data(), d.data(), words);
      for (std::size_t i = 0; i < packed; ++i) CHECK(c[i] == d[i]);
      CHECK(ref.popcount(src.data(), words) == table->popcount(src.data(), words));
    }
  }
}

TEST_CASE("switching the active table") {
  const std::string before(kernels::active().name);
  CHECK(kernels::use("scalar"));
  CHECK(kernels::active().name == "scalar");
  CHECK_FALSE(kernels::use("avx9000"));
  CHECK(kernels::use(before));
}

TEST_CASE("BitVec basics across the inline/heap boundary") {
  for (std::size_t n : {0u, 1u, 63u, 64u, 65u, 130u}) {
    BitVec v(n);
    CHECK(v.size() == n);
    CHECK(v.none());
    for (std::size_t i = 0; i < n; i += 3) v.set(i);
    CHECK(v.count() == (n + 2) / 3);
    for (std::size_t k = 0; k < v.count(); ++k) {
      CHECK(v.select(k) == 3 * k);
      CHECK(v.rank(v.select(k)) == k);
    }
    CHECK(BitVec::from_string(v.to_string()) == v);
  }
  CHECK_THROWS_AS(BitVec::from_string("10x"), std::invalid_argument);
}

TEST_CASE("concat and slice are inverse") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    std::string a, b;
    const std::size_t na = rng() % 150, nb = rng() % 150;
    for (std::size_t i = 0; i < na; ++i) a += (rng() & 1) ? '1' : '0';
    for (std::size_t i = 0; i < nb; ++i) b += (rng() & 1) ? '1' : '0';
    BitVec c = BitVec::concat(BitVec::from_string(a), BitVec::from_string(b));
    CHECK(c.to_string() == a + b);
    CHECK(c.slice(0, na).to_string() == a);
    CHECK(c.slice(na, nb).to_string() == b);
  }
}

TEST_CASE("deposit and extract agree between kernel tables on long vectors") {
  std::mt19937_64 rng(11);
  const std::string before(kernels::active().name);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = rng() % 300;
    BitVec mask(n);
    for (std::size_t i = 0; i < n; ++i) mask.set(i, rng() & 1);
    BitVec src(mask.count());
    for (std::size_t i = 0; i < src.size(); ++i) src.set(i, rng() & 1);
    BitVec whole(n);
    for (std::size_t i = 0; i < n; ++i) whole.set(i, rng() & 1);
    std::vector<std::string> deposits, extracts;
    for (auto name : kernels::available()) {
      REQUIRE(kernels::use(name));
      deposits.push_back(deposit(src, mask).to_string());
      extracts.push_back(extract(whole, mask).to_string());
    }
    for (std::size_t i = 1; i < deposits.size(); ++i) {
      CHECK(deposits[i] == deposits[0]);
      CHECK(extracts[i] == extracts[0]);
    }
    // deposit then extract returns the packed stream
    CHECK(extract(deposit(src, mask), mask) == src);
  }
  kernels::use(before);
}
