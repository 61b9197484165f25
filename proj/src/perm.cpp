#include "hgs/perm.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace hgs {

Perm Perm::from_images(std::span<const int> images) {
  const int g = int(images.size());
  if (g > kMaxDegree)
    throw DegreeMismatch("degree " + std::to_string(g) + " exceeds " +
                         std::to_string(kMaxDegree));
  uint64_t seen = 0;
  Perm out(g);
  uint64_t packed = kIdentity;
  for (int i = 0; i < g; ++i) {
    const int img = images[i];
    if (img < 0 || img >= g || (seen >> img) & 1)
      throw std::invalid_argument("image sequence is not a bijection");
    seen |= uint64_t(1) << img;
    packed &= ~(uint64_t(0xF) << shift(i));
    packed |= uint64_t(img) << shift(i);
  }
  out.packed_ = packed;
  return out;
}

int Perm::order() const {
  int n = 1;
  Perm p = *this;
  while (!p.is_identity()) {
    p = p.compose(*this);
    ++n;
  }
  return n;
}

std::string Perm::cycles() const {
  std::string out;
  uint32_t done = 0;
  for (int i = 0; i < degree_; ++i) {
    if ((done >> i) & 1 || (*this)[i] == i) continue;
    out += '(';
    int j = i;
    bool first = true;
    do {
      done |= uint32_t(1) << j;
      if (!first) out += ' ';
      out += std::to_string(j);
      first = false;
      j = (*this)[j];
    } while (j != i);
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

Perm Perm::parse_cycles(const std::string& text, int degree) {
  if (degree < 0 || degree > kMaxDegree)
    throw std::invalid_argument("bad degree " + std::to_string(degree));
  std::vector<int> images(degree);
  for (int i = 0; i < degree; ++i) images[i] = i;

  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(uint8_t(text[pos]))) ++pos;
  };
  skip_ws();
  bool any = false;
  while (pos < text.size()) {
    if (text[pos] != '(')
      throw std::invalid_argument("expected '(' in cycle notation: " + text);
    ++pos;
    std::vector<int> cyc;
    for (;;) {
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        skip_ws();
      }
      if (pos >= text.size())
        throw std::invalid_argument("unterminated cycle: " + text);
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (!std::isdigit(uint8_t(text[pos])))
        throw std::invalid_argument("expected point in cycle: " + text);
      int v = 0;
      while (pos < text.size() && std::isdigit(uint8_t(text[pos])))
        v = v * 10 + (text[pos++] - '0');
      if (v < 0 || v >= degree)
        throw std::invalid_argument("point " + std::to_string(v) +
                                    " out of range for degree " +
                                    std::to_string(degree));
      if (std::find(cyc.begin(), cyc.end(), v) != cyc.end())
        throw std::invalid_argument("point repeated inside a cycle: " + text);
      cyc.push_back(v);
    }
    any = true;
    for (size_t k = 0; k < cyc.size(); ++k) {
      const int from = cyc[k];
      const int to = cyc[(k + 1) % cyc.size()];
      if (images[from] != from)
        throw std::invalid_argument("point repeated across cycles: " + text);
      images[from] = to;
    }
    skip_ws();
  }
  if (!any) throw std::invalid_argument("empty permutation text");
  return from_images(images);
}

}  // namespace hgs
