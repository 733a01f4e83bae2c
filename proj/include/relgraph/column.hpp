#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "relgraph/common.hpp"

namespace relgraph {

enum class Encoding : uint8_t { Plain = 0, RunLength = 1, Dictionary = 2, Delta = 3 };

inline const char* encoding_name(Encoding e) {
  switch (e) {
    case Encoding::Plain: return "plain";
    case Encoding::RunLength: return "run_length";
    case Encoding::Dictionary: return "dictionary";
    case Encoding::Delta: return "delta";
  }
  return "?";
}

using Int64Vec = std::vector<int64_t>;
using Float64Vec = std::vector<double>;
using StringVec = std::vector<std::string>;
using ColumnData = std::variant<Int64Vec, Float64Vec, StringVec>;

inline LogicalType data_type(const ColumnData& d) {
  return static_cast<LogicalType>(d.index());
}

inline size_t data_size(const ColumnData& d) {
  return std::visit([](const auto& v) { return v.size(); }, d);
}

inline uint64_t data_bytes(const ColumnData& d) {
  if (const auto* iv = std::get_if<Int64Vec>(&d)) return iv->size() * 8;
  if (const auto* fv = std::get_if<Float64Vec>(&d)) return fv->size() * 8;
  const auto& sv = std::get<StringVec>(d);
  uint64_t b = 0;
  for (const auto& s : sv) b += s.size() + 4;
  return b;
}

// A named, typed column of values. Values are held decoded; `encoding` is the
// preferred storage encoding applied when the column is persisted or an
// encoded form is requested explicitly. An empty validity vector means every
// row is valid; otherwise validity[i] != 0 marks row i valid.
struct Column {
  std::string name;
  ColumnData values;
  std::vector<uint8_t> validity;
  Encoding encoding = Encoding::Plain;

  Column() = default;
  Column(std::string n, ColumnData v, Encoding enc = Encoding::Plain)
      : name(std::move(n)), values(std::move(v)), encoding(enc) {}

  LogicalType type() const { return data_type(values); }
  size_t size() const { return data_size(values); }
  uint64_t byte_size() const { return data_bytes(values) + validity.size(); }

  bool has_nulls() const {
    for (uint8_t v : validity)
      if (!v) return true;
    return false;
  }
  bool is_valid(size_t row) const { return validity.empty() || validity[row] != 0; }

  const Int64Vec& ints() const { return std::get<Int64Vec>(values); }
  const Float64Vec& floats() const { return std::get<Float64Vec>(values); }
  const StringVec& strings() const { return std::get<StringVec>(values); }
  Int64Vec& ints() { return std::get<Int64Vec>(values); }
  Float64Vec& floats() { return std::get<Float64Vec>(values); }
  StringVec& strings() { return std::get<StringVec>(values); }
};

inline Column int_column(std::string name, Int64Vec v) {
  return Column(std::move(name), ColumnData(std::move(v)));
}
inline Column float_column(std::string name, Float64Vec v) {
  return Column(std::move(name), ColumnData(std::move(v)));
}
inline Column string_column(std::string name, StringVec v) {
  return Column(std::move(name), ColumnData(std::move(v)));
}

inline ColumnData empty_data(LogicalType t) {
  switch (t) {
    case LogicalType::Int64: return Int64Vec{};
    case LogicalType::Float64: return Float64Vec{};
    case LogicalType::String: return StringVec{};
  }
  return Int64Vec{};
}

inline void data_reserve(ColumnData& d, size_t n) {
  std::visit([n](auto& v) { v.reserve(n); }, d);
}

inline void data_append_from(ColumnData& dst, const ColumnData& src, size_t row) {
  std::visit(
      [&](auto& out) {
        using V = std::decay_t<decltype(out)>;
        out.push_back(std::get<V>(src)[row]);
      },
      dst);
}

}  // namespace relgraph
