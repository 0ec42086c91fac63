#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace lowdeg {

/// A length-n word over {0,1,2,3} naming a tensor product of single-site
/// Pauli operators (0=I, 1=X, 2=Y, 3=Z). Site 0 is the leftmost symbol and
/// the most significant tensor factor. Packed two bits per site, so n <= 31.
class PauliString {
 public:
  static constexpr int kMaxSites = 31;

  PauliString() = default;
  explicit PauliString(int n);  // identity word 0^n
  PauliString(int n, uint64_t base4_index);

  static PauliString from_symbols(std::span<const int> symbols);
  static PauliString from_digits(std::string_view digits);  // e.g. "013"

  int n() const { return n_; }
  int weight() const { return weight_; }
  int site(int j) const { return static_cast<int>((bits_ >> shift(j)) & 3u); }
  PauliString with_site(int j, int symbol) const;

  /// Base-4 integer whose digits (most significant first) spell the word.
  uint64_t index() const { return bits_; }

  bool all_in(int lo, int hi) const;  // every symbol in [lo, hi]
  std::string digits() const;

  friend bool operator==(const PauliString& a, const PauliString& b) {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }
  /// Lexicographic on words; shorter n orders first.
  friend std::strong_ordering operator<=>(const PauliString& a,
                                          const PauliString& b) {
    if (a.n_ != b.n_) return a.n_ <=> b.n_;
    return a.bits_ <=> b.bits_;
  }

 private:
  int shift(int j) const { return 2 * (n_ - 1 - j); }
  void recount();

  uint64_t bits_ = 0;
  int n_ = 0;
  int weight_ = 0;
};

/// A length-n word over {0,1}; used for Fourier characters (subsets of
/// variables) and for measurement outcome records. Same site order as
/// PauliString: site 0 is the most significant bit. n <= 63.
class BitString {
 public:
  static constexpr int kMaxSites = 63;

  BitString() = default;
  explicit BitString(int n);
  BitString(int n, uint64_t index);

  static BitString from_digits(std::string_view digits);  // e.g. "0110"

  int n() const { return n_; }
  int weight() const;
  int bit(int j) const { return static_cast<int>((bits_ >> (n_ - 1 - j)) & 1u); }
  BitString with_bit(int j, int value) const;

  uint64_t index() const { return bits_; }
  std::string digits() const;

  friend bool operator==(const BitString& a, const BitString& b) {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }
  friend std::strong_ordering operator<=>(const BitString& a,
                                          const BitString& b) {
    if (a.n_ != b.n_) return a.n_ <=> b.n_;
    return a.bits_ <=> b.bits_;
  }

 private:
  uint64_t bits_ = 0;
  int n_ = 0;
};

/// Commutation pattern of a probe basis word s (symbols in {1,2,3}) against
/// an arbitrary word x: bit j is 0 iff the site-j Paulis commute, i.e. iff
/// x_j = 0 or x_j = s_j. Throws std::invalid_argument if s contains 0.
BitString star(const PauliString& s, const PauliString& x);

/// XOR of two equal-length bit words.
BitString operator^(const BitString& a, const BitString& b);

}  // namespace lowdeg
