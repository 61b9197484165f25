#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hgs/errors.hpp"

namespace hgs {

// Permutations act on at most 16 points; the project only needs degrees 2-11
// plus a little headroom for tests.
inline constexpr int kMaxDegree = 16;

// A permutation of {0,...,g-1} stored as sixteen packed 4-bit images.
// Point i's image sits in bits (60 - 4i)..(63 - 4i), i.e. point 0 occupies the
// top nibble, so that unsigned comparison of the packed words is exactly
// lexicographic comparison of image sequences. Points >= degree are always
// fixed, which lets compose/inverse run over the full 16 nibbles branch-free.
class Perm {
 public:
  // Identity on `degree` points.
  explicit Perm(int degree = 0) : packed_(kIdentity), degree_(uint8_t(degree)) {}

  static Perm from_images(std::span<const int> images);
  static Perm from_images(std::initializer_list<int> images) {
    return from_images(std::span<const int>(images.begin(), images.size()));
  }

  // Parses disjoint-cycle notation over 0-based points, e.g. "(0 7)(1 2)".
  // Accepts both spaces and commas inside cycles; identity is "()".
  static Perm parse_cycles(const std::string& text, int degree);

  // Inverse of key(): rebuilds the permutation from a packed image word.
  static Perm unpack(uint64_t key, int degree) {
    Perm p;
    p.packed_ = key;
    p.degree_ = uint8_t(degree);
    return p;
  }

  int degree() const { return degree_; }

  int operator[](int i) const { return int((packed_ >> shift(i)) & 0xF); }

  // this(other(x)): the right factor acts first.
  Perm compose(const Perm& other) const {
    check_degree(other);
    uint64_t r = 0;
    for (int i = 0; i < kMaxDegree; ++i) {
      const int mid = int((other.packed_ >> shift(i)) & 0xF);
      r |= ((packed_ >> shift(mid)) & 0xF) << shift(i);
    }
    Perm out;
    out.packed_ = r;
    out.degree_ = degree_;
    return out;
  }

  Perm inverse() const {
    uint64_t r = 0;
    for (int i = 0; i < kMaxDegree; ++i) {
      const int img = int((packed_ >> shift(i)) & 0xF);
      r |= uint64_t(i) << shift(img);
    }
    Perm out;
    out.packed_ = r;
    out.degree_ = degree_;
    return out;
  }

  // conj = s * this * s^-1 without building s^-1: conj(s(x)) = s(this(x)).
  Perm conjugated_by(const Perm& s) const {
    check_degree(s);
    uint64_t r = kIdentity;
    for (int i = 0; i < degree_; ++i) {
      const int from = int((s.packed_ >> shift(i)) & 0xF);
      const int img = int((packed_ >> shift(i)) & 0xF);
      const int to = int((s.packed_ >> shift(img)) & 0xF);
      r &= ~(uint64_t(0xF) << shift(from));
      r |= uint64_t(to) << shift(from);
    }
    Perm out;
    out.packed_ = r;
    out.degree_ = degree_;
    return out;
  }

  bool is_identity() const { return packed_ == kIdentity; }

  int order() const;

  // Packed image word; for equal degrees unsigned comparison agrees with
  // lexicographic comparison of image sequences.
  uint64_t key() const { return packed_; }

  std::vector<int> images() const {
    std::vector<int> v(degree_);
    for (int i = 0; i < degree_; ++i) v[i] = (*this)[i];
    return v;
  }

  // Disjoint-cycle string over 0-based points; identity prints "()".
  std::string cycles() const;

  friend bool operator==(const Perm& a, const Perm& b) {
    return a.packed_ == b.packed_ && a.degree_ == b.degree_;
  }
  friend bool operator<(const Perm& a, const Perm& b) {
    return a.packed_ < b.packed_;
  }

 private:
  static constexpr uint64_t kIdentity = 0x0123456789ABCDEFull;
  static constexpr int shift(int i) { return 60 - 4 * i; }

  void check_degree(const Perm& other) const {
    if (degree_ != other.degree_)
      throw DegreeMismatch("permutation degrees differ: " +
                           std::to_string(degree_) + " vs " +
                           std::to_string(other.degree_));
  }

  uint64_t packed_;
  uint8_t degree_;
};

}  // namespace hgs
