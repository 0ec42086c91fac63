#include "lowdeg/pauli.hpp"

#include <bit>
#include <stdexcept>

namespace lowdeg {

namespace {
void check_sites(int n, int max, const char* what) {
  if (n < 1 || n > max) {
    throw std::invalid_argument(std::string(what) + ": site count " +
                                std::to_string(n) + " out of range");
  }
}
}  // namespace

PauliString::PauliString(int n) : bits_(0), n_(n), weight_(0) {
  check_sites(n, kMaxSites, "PauliString");
}

PauliString::PauliString(int n, uint64_t base4_index) : bits_(base4_index), n_(n) {
  check_sites(n, kMaxSites, "PauliString");
  if (n < 32 && base4_index >> (2 * n)) {
    throw std::invalid_argument("PauliString: index too large for n");
  }
  recount();
}

PauliString PauliString::from_symbols(std::span<const int> symbols) {
  PauliString p(static_cast<int>(symbols.size()));
  for (size_t j = 0; j < symbols.size(); ++j) {
    if (symbols[j] < 0 || symbols[j] > 3) {
      throw std::invalid_argument("PauliString: symbol out of {0,1,2,3}");
    }
    p.bits_ |= static_cast<uint64_t>(symbols[j]) << p.shift(static_cast<int>(j));
  }
  p.recount();
  return p;
}

PauliString PauliString::from_digits(std::string_view digits) {
  PauliString p(static_cast<int>(digits.size()));
  for (size_t j = 0; j < digits.size(); ++j) {
    char c = digits[j];
    if (c < '0' || c > '3') {
      throw std::invalid_argument("PauliString: bad digit in \"" +
                                  std::string(digits) + "\"");
    }
    p.bits_ |= static_cast<uint64_t>(c - '0') << p.shift(static_cast<int>(j));
  }
  p.recount();
  return p;
}

PauliString PauliString::with_site(int j, int symbol) const {
  if (j < 0 || j >= n_) throw std::invalid_argument("PauliString: site index");
  if (symbol < 0 || symbol > 3) {
    throw std::invalid_argument("PauliString: symbol out of {0,1,2,3}");
  }
  PauliString p = *this;
  p.bits_ &= ~(3ull << shift(j));
  p.bits_ |= static_cast<uint64_t>(symbol) << shift(j);
  p.recount();
  return p;
}

bool PauliString::all_in(int lo, int hi) const {
  for (int j = 0; j < n_; ++j) {
    int s = site(j);
    if (s < lo || s > hi) return false;
  }
  return true;
}

std::string PauliString::digits() const {
  std::string out(static_cast<size_t>(n_), '0');
  for (int j = 0; j < n_; ++j) out[static_cast<size_t>(j)] = char('0' + site(j));
  return out;
}

void PauliString::recount() {
  // weight = number of non-zero base-4 digits
  uint64_t v = bits_;
  uint64_t nz = (v | (v >> 1)) & 0x5555555555555555ull;
  weight_ = std::popcount(nz);
}

BitString::BitString(int n) : bits_(0), n_(n) {
  check_sites(n, kMaxSites, "BitString");
}

BitString::BitString(int n, uint64_t index) : bits_(index), n_(n) {
  check_sites(n, kMaxSites, "BitString");
  if (index >> n) throw std::invalid_argument("BitString: index too large for n");
}

BitString BitString::from_digits(std::string_view digits) {
  BitString b(static_cast<int>(digits.size()));
  for (size_t j = 0; j < digits.size(); ++j) {
    char c = digits[j];
    if (c != '0' && c != '1') {
      throw std::invalid_argument("BitString: bad digit in \"" +
                                  std::string(digits) + "\"");
    }
    if (c == '1') b.bits_ |= 1ull << (b.n_ - 1 - static_cast<int>(j));
  }
  return b;
}

int BitString::weight() const { return std::popcount(bits_); }

BitString BitString::with_bit(int j, int value) const {
  if (j < 0 || j >= n_) throw std::invalid_argument("BitString: site index");
  BitString b = *this;
  uint64_t mask = 1ull << (n_ - 1 - j);
  if (value) b.bits_ |= mask; else b.bits_ &= ~mask;
  return b;
}

std::string BitString::digits() const {
  std::string out(static_cast<size_t>(n_), '0');
  for (int j = 0; j < n_; ++j) out[static_cast<size_t>(j)] = char('0' + bit(j));
  return out;
}

BitString star(const PauliString& s, const PauliString& x) {
  if (s.n() != x.n()) throw std::invalid_argument("star: length mismatch");
  BitString r(s.n());
  for (int j = 0; j < s.n(); ++j) {
    int sj = s.site(j);
    if (sj == 0) throw std::invalid_argument("star: probe word contains 0");
    int xj = x.site(j);
    bool commute = (xj == 0) || (xj == sj);
    if (!commute) r = r.with_bit(j, 1);
  }
  return r;
}

BitString operator^(const BitString& a, const BitString& b) {
  if (a.n() != b.n()) throw std::invalid_argument("BitString ^: length mismatch");
  return BitString(a.n(), a.index() ^ b.index());
}

}  // namespace lowdeg
