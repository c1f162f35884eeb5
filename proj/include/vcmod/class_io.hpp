#pragma once

// Text formats for concept classes (.cls) and point sets (.set). Grammar, one item per line:
//
//   class-doc := comment* "vcmod-class 1" header* "count" K row{K}
//   header    := "m" M | "labels" L_0 ... L_{M-1} | "dedup" ("0"|"1")
//   row       := [01]{M}
//   set-doc   := comment* "vcmod-set 1" "m" M row
//
// Blank lines and lines starting with '#' are ignored anywhere. "m" is mandatory and must precede
// "labels" and "count". Labels are whitespace-free tokens.

#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "vcmod/bitset.hpp"
#include "vcmod/domain.hpp"
#include "vcmod/errors.hpp"

namespace vcmod {

inline constexpr int kClassFormatVersion = 1;

namespace detail {

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // Next non-blank, non-comment line, whitespace-trimmed.
  std::optional<std::string> next() {
    std::string line;
    while (std::getline(in_, line)) {
      ++number_;
      auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      auto last = line.find_last_not_of(" \t\r");
      return line.substr(first, last - first + 1);
    }
    return std::nullopt;
  }

  std::string where() const { return "line " + std::to_string(number_); }

 private:
  std::istream& in_;
  std::size_t number_ = 0;
};

inline std::size_t parse_count(const std::string& token, const std::string& what,
                               const LineReader& reader) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(token, &used);
    if (used != token.size() || v < 0) throw std::invalid_argument(token);
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw ParseError(reader.where() + ": bad " + what + " '" + token + "'");
  }
}

inline void expect_magic(LineReader& reader, const std::string& magic) {
  auto line = reader.next();
  if (!line) throw ParseError("empty document, expected '" + magic + "'");
  std::istringstream words(*line);
  std::string tag, version;
  words >> tag >> version;
  if (tag != magic) throw ParseError(reader.where() + ": expected '" + magic + "', got '" + tag + "'");
  if (version != std::to_string(kClassFormatVersion)) {
    throw ParseError(reader.where() + ": unsupported " + magic + " version '" + version + "'");
  }
}

inline Concept parse_row(const std::string& line, std::size_t m, const LineReader& reader) {
  if (line.size() != m) {
    throw ParseError(reader.where() + ": row has length " + std::to_string(line.size()) +
                     ", expected " + std::to_string(m));
  }
  try {
    return bits_from_string(line);
  } catch (const ParseError& e) {
    throw ParseError(reader.where() + ": " + e.what());
  }
}

}  // namespace detail

inline ConceptClass read_class(std::istream& in) {
  detail::LineReader reader(in);
  detail::expect_magic(reader, "vcmod-class");
  std::optional<std::size_t> m;
  std::optional<std::vector<std::string>> labels;
  bool dedup = false;
  std::optional<std::size_t> count;
  while (!count) {
    auto line = reader.next();
    if (!line) throw ParseError("class document ends before 'count'");
    std::istringstream words(*line);
    std::string key;
    words >> key;
    if (key == "m") {
      std::string v;
      words >> v;
      m = detail::parse_count(v, "m", reader);
    } else if (key == "labels") {
      if (!m) throw ParseError(reader.where() + ": 'labels' before 'm'");
      labels.emplace();
      std::string label;
      while (words >> label) labels->push_back(label);
    } else if (key == "dedup") {
      std::string v;
      words >> v;
      if (v != "0" && v != "1") throw ParseError(reader.where() + ": dedup must be 0 or 1");
      dedup = v == "1";
    } else if (key == "count") {
      if (!m) throw ParseError(reader.where() + ": 'count' before 'm'");
      std::string v;
      words >> v;
      count = detail::parse_count(v, "count", reader);
    } else {
      throw ParseError(reader.where() + ": unknown header key '" + key + "'");
    }
  }
  std::vector<Concept> rows;
  rows.reserve(*count);
  for (std::size_t i = 0; i < *count; ++i) {
    auto line = reader.next();
    if (!line) {
      throw ParseError("class document has " + std::to_string(i) + " rows, header says " +
                       std::to_string(*count));
    }
    rows.push_back(detail::parse_row(*line, *m, reader));
  }
  if (auto extra = reader.next()) throw ParseError(reader.where() + ": trailing content after rows");
  try {
    Domain domain(*m, std::move(labels));
    auto report = validate_class(domain, rows, dedup);
    if (!report.ok) throw ParseError(report.violations.front());
    return ConceptClass(std::move(domain), std::move(rows), dedup);
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

inline void write_class(std::ostream& out, const ConceptClass& cls) {
  out << "vcmod-class " << kClassFormatVersion << "\n";
  out << "m " << cls.domain_size() << "\n";
  if (cls.domain().labels()) {
    out << "labels";
    for (const auto& l : *cls.domain().labels()) out << ' ' << l;
    out << "\n";
  }
  if (cls.deduplicated()) out << "dedup 1\n";
  out << "count " << cls.size() << "\n";
  for (const auto& c : cls.concepts()) out << bits_to_string(c) << "\n";
}

inline PointSet read_point_set(std::istream& in) {
  detail::LineReader reader(in);
  detail::expect_magic(reader, "vcmod-set");
  auto line = reader.next();
  if (!line) throw ParseError("set document ends before 'm'");
  std::istringstream words(*line);
  std::string key, v;
  words >> key >> v;
  if (key != "m") throw ParseError(reader.where() + ": expected 'm'");
  const auto m = detail::parse_count(v, "m", reader);
  auto row = reader.next();
  if (!row) throw ParseError("set document has no membership row");
  auto set = detail::parse_row(*row, m, reader);
  if (reader.next()) throw ParseError(reader.where() + ": trailing content after row");
  return set;
}

inline void write_point_set(std::ostream& out, const PointSet& set) {
  out << "vcmod-set " << kClassFormatVersion << "\nm " << set.size() << "\n"
      << bits_to_string(set) << "\n";
}

inline ConceptClass load_class(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open class file '" + path + "'");
  return read_class(in);
}

inline PointSet load_point_set(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open set file '" + path + "'");
  return read_point_set(in);
}

}  // namespace vcmod
