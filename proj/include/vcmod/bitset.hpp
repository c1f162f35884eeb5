#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "vcmod/errors.hpp"

namespace vcmod {

// Fixed-length membership indicator over a finite domain. Bit i set <=> point i is a member.
using Bitset = boost::dynamic_bitset<std::uint64_t>;
using Concept = Bitset;
using PointSet = Bitset;
using Point = std::size_t;

inline constexpr Point kNoPoint = Bitset::npos;

// "0110" -> {1, 2}. Character i is point i (no boost-style bit reversal).
inline Bitset bits_from_string(std::string_view text) {
  Bitset out(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1') {
      out.set(i);
    } else if (text[i] != '0') {
      throw ParseError("indicator string must contain only 0/1, got '" + std::string(text) + "'");
    }
  }
  return out;
}

inline std::string bits_to_string(const Bitset& bits) {
  std::string out(bits.size(), '0');
  for (auto i = bits.find_first(); i != Bitset::npos; i = bits.find_next(i)) out[i] = '1';
  return out;
}

inline Bitset bits_from_indices(std::size_t size, const std::vector<Point>& points) {
  Bitset out(size);
  for (Point p : points) {
    if (p >= size) {
      throw InvalidArgument("point index " + std::to_string(p) + " outside domain of size " +
                            std::to_string(size));
    }
    out.set(p);
  }
  return out;
}

inline std::vector<Point> bits_to_indices(const Bitset& bits) {
  std::vector<Point> out;
  out.reserve(bits.count());
  for (auto i = bits.find_first(); i != Bitset::npos; i = bits.find_next(i)) out.push_back(i);
  return out;
}

inline Bitset full_set(std::size_t size) {
  Bitset out(size);
  out.set();
  return out;
}

// Order by sorted member lists (lexicographic); a proper prefix sorts first.
inline bool lex_less(const Bitset& a, const Bitset& b) {
  auto ia = a.find_first();
  auto ib = b.find_first();
  while (ia != Bitset::npos && ib != Bitset::npos) {
    if (ia != ib) return ia < ib;
    ia = a.find_next(ia);
    ib = b.find_next(ib);
  }
  return ia == Bitset::npos && ib != Bitset::npos;
}

}  // namespace vcmod
