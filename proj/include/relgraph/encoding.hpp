#pragma once

#include <cstring>
#include <string>
#include <unordered_map>
#include <vector>

#include "relgraph/column.hpp"
#include "relgraph/common.hpp"

namespace relgraph {

// Byte-level column codecs. Each codec is lossless: decode(encode(c)) == c.
//
//   plain       fixed 8-byte little-endian numerics; length-prefixed strings
//   run_length  (value, run-length) pairs
//   dictionary  distinct values in first-appearance order + varint codes
//   delta       first value raw, then zigzag-varint deltas (int64 only)

namespace detail {

inline void put_u64(std::vector<uint8_t>& out, uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<uint8_t>(v >> (8 * i)));
}

inline uint64_t get_u64(const uint8_t* p) {
  uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<uint64_t>(p[i]) << (8 * i);
  return v;
}

inline void put_varint(std::vector<uint8_t>& out, uint64_t v) {
  while (v >= 0x80) {
    out.push_back(static_cast<uint8_t>(v) | 0x80);
    v >>= 7;
  }
  out.push_back(static_cast<uint8_t>(v));
}

inline uint64_t get_varint(const uint8_t*& p, const uint8_t* end) {
  uint64_t v = 0;
  int shift = 0;
  while (p < end) {
    uint8_t b = *p++;
    v |= static_cast<uint64_t>(b & 0x7f) << shift;
    if (!(b & 0x80)) return v;
    shift += 7;
  }
  throw IoError("truncated varint in encoded column");
}

inline uint64_t zigzag(int64_t v) {
  return (static_cast<uint64_t>(v) << 1) ^ static_cast<uint64_t>(v >> 63);
}

inline int64_t unzigzag(uint64_t v) {
  return static_cast<int64_t>((v >> 1) ^ (~(v & 1) + 1));
}

inline void put_string(std::vector<uint8_t>& out, const std::string& s) {
  put_varint(out, s.size());
  out.insert(out.end(), s.begin(), s.end());
}

inline std::string get_string(const uint8_t*& p, const uint8_t* end) {
  uint64_t len = get_varint(p, end);
  if (p + len > end) throw IoError("truncated string in encoded column");
  std::string s(reinterpret_cast<const char*>(p), len);
  p += len;
  return s;
}

inline double bits_to_double(uint64_t b) {
  double d;
  std::memcpy(&d, &b, 8);
  return d;
}

inline uint64_t double_to_bits(double d) {
  uint64_t b;
  std::memcpy(&b, &d, 8);
  return b;
}

}  // namespace detail

// Storage form of a column: a self-contained byte payload plus enough
// metadata to decode it.
struct EncodedColumn {
  std::string name;
  LogicalType type = LogicalType::Int64;
  Encoding encoding = Encoding::Plain;
  uint64_t rows = 0;
  std::vector<uint8_t> payload;
  std::vector<uint8_t> validity;  // raw bitmap, empty when all rows valid

  uint64_t byte_size() const { return payload.size() + validity.size(); }
};

inline bool encoding_applicable(LogicalType t, Encoding e) {
  if (e == Encoding::Delta) return t == LogicalType::Int64;
  return true;
}

inline EncodedColumn encode_column(const Column& col, Encoding enc) {
  if (!encoding_applicable(col.type(), enc)) {
    throw SchemaError(std::string("encoding ") + encoding_name(enc) +
                      " not supported for column '" + col.name + "' of type " +
                      type_name(col.type()));
  }
  EncodedColumn out;
  out.name = col.name;
  out.type = col.type();
  out.encoding = enc;
  out.rows = col.size();
  out.validity = col.validity;
  auto& buf = out.payload;

  auto put_value = [&](size_t row) {
    switch (col.type()) {
      case LogicalType::Int64: detail::put_varint(buf, detail::zigzag(col.ints()[row])); break;
      case LogicalType::Float64: detail::put_u64(buf, detail::double_to_bits(col.floats()[row])); break;
      case LogicalType::String: detail::put_string(buf, col.strings()[row]); break;
    }
  };
  auto values_equal = [&](size_t a, size_t b) {
    switch (col.type()) {
      case LogicalType::Int64: return col.ints()[a] == col.ints()[b];
      case LogicalType::Float64:
        return detail::double_to_bits(col.floats()[a]) == detail::double_to_bits(col.floats()[b]);
      case LogicalType::String: return col.strings()[a] == col.strings()[b];
    }
    return false;
  };

  const size_t n = col.size();
  switch (enc) {
    case Encoding::Plain:
      for (size_t i = 0; i < n; ++i) put_value(i);
      break;
    case Encoding::RunLength: {
      size_t i = 0;
      while (i < n) {
        size_t j = i + 1;
        while (j < n && values_equal(i, j)) ++j;
        put_value(i);
        detail::put_varint(buf, j - i);
        i = j;
      }
      break;
    }
    case Encoding::Dictionary: {
      std::vector<uint32_t> codes(n);
      if (col.type() == LogicalType::String) {
        std::unordered_map<std::string, uint32_t> dict;
        StringVec order;
        for (size_t i = 0; i < n; ++i) {
          auto [it, fresh] = dict.emplace(col.strings()[i], dict.size());
          if (fresh) order.push_back(col.strings()[i]);
          codes[i] = it->second;
        }
        detail::put_varint(buf, order.size());
        for (const auto& s : order) detail::put_string(buf, s);
      } else {
        std::unordered_map<uint64_t, uint32_t> dict;
        Int64Vec order;
        for (size_t i = 0; i < n; ++i) {
          uint64_t key = col.type() == LogicalType::Int64
                             ? static_cast<uint64_t>(col.ints()[i])
                             : detail::double_to_bits(col.floats()[i]);
          auto [it, fresh] = dict.emplace(key, dict.size());
          if (fresh) order.push_back(static_cast<int64_t>(key));
          codes[i] = it->second;
        }
        detail::put_varint(buf, order.size());
        for (int64_t raw : order) detail::put_u64(buf, static_cast<uint64_t>(raw));
      }
      for (uint32_t c : codes) detail::put_varint(buf, c);
      break;
    }
    case Encoding::Delta: {
      if (n > 0) {
        detail::put_u64(buf, static_cast<uint64_t>(col.ints()[0]));
        for (size_t i = 1; i < n; ++i) {
          uint64_t delta = static_cast<uint64_t>(col.ints()[i]) - static_cast<uint64_t>(col.ints()[i - 1]);
          detail::put_varint(buf, detail::zigzag(static_cast<int64_t>(delta)));
        }
      }
      break;
    }
  }
  return out;
}

inline Column decode_column(const EncodedColumn& enc) {
  Column out;
  out.name = enc.name;
  out.encoding = enc.encoding;
  out.validity = enc.validity;
  out.values = empty_data(enc.type);
  data_reserve(out.values, enc.rows);

  const uint8_t* p = enc.payload.data();
  const uint8_t* end = p + enc.payload.size();

  auto need = [&](size_t bytes) {
    if (p + bytes > end) throw IoError("truncated encoded column '" + enc.name + "'");
  };
  auto get_value = [&]() {
    switch (enc.type) {
      case LogicalType::Int64:
        std::get<Int64Vec>(out.values).push_back(detail::unzigzag(detail::get_varint(p, end)));
        break;
      case LogicalType::Float64:
        need(8);
        std::get<Float64Vec>(out.values).push_back(detail::bits_to_double(detail::get_u64(p)));
        p += 8;
        break;
      case LogicalType::String:
        std::get<StringVec>(out.values).push_back(detail::get_string(p, end));
        break;
    }
  };

  switch (enc.encoding) {
    case Encoding::Plain:
      for (uint64_t i = 0; i < enc.rows; ++i) get_value();
      break;
    case Encoding::RunLength: {
      while (data_size(out.values) < enc.rows) {
        get_value();
        uint64_t run = detail::get_varint(p, end);
        if (run == 0) throw IoError("zero-length run in column '" + enc.name + "'");
        std::visit(
            [&](auto& v) {
              auto last = v.back();
              for (uint64_t i = 1; i < run; ++i) v.push_back(last);
            },
            out.values);
      }
      break;
    }
    case Encoding::Dictionary: {
      uint64_t dict_size = detail::get_varint(p, end);
      if (enc.type == LogicalType::String) {
        StringVec dict;
        dict.reserve(dict_size);
        for (uint64_t i = 0; i < dict_size; ++i) dict.push_back(detail::get_string(p, end));
        auto& v = std::get<StringVec>(out.values);
        for (uint64_t i = 0; i < enc.rows; ++i) {
          uint64_t code = detail::get_varint(p, end);
          if (code >= dict.size()) throw IoError("dictionary code out of range");
          v.push_back(dict[code]);
        }
      } else {
        std::vector<uint64_t> dict;
        dict.reserve(dict_size);
        for (uint64_t i = 0; i < dict_size; ++i) {
          need(8);
          dict.push_back(detail::get_u64(p));
          p += 8;
        }
        for (uint64_t i = 0; i < enc.rows; ++i) {
          uint64_t code = detail::get_varint(p, end);
          if (code >= dict.size()) throw IoError("dictionary code out of range");
          if (enc.type == LogicalType::Int64)
            std::get<Int64Vec>(out.values).push_back(static_cast<int64_t>(dict[code]));
          else
            std::get<Float64Vec>(out.values).push_back(detail::bits_to_double(dict[code]));
        }
      }
      break;
    }
    case Encoding::Delta: {
      auto& v = std::get<Int64Vec>(out.values);
      if (enc.rows > 0) {
        need(8);
        v.push_back(static_cast<int64_t>(detail::get_u64(p)));
        p += 8;
        for (uint64_t i = 1; i < enc.rows; ++i) {
          uint64_t delta = static_cast<uint64_t>(detail::unzigzag(detail::get_varint(p, end)));
          v.push_back(static_cast<int64_t>(static_cast<uint64_t>(v.back()) + delta));
        }
      }
      break;
    }
  }
  if (data_size(out.values) != enc.rows)
    throw IoError("row count mismatch decoding column '" + enc.name + "'");
  return out;
}

// Smallest applicable encoding for a column; used when persisting stores.
inline Encoding choose_encoding(const Column& col) {
  Encoding best = Encoding::Plain;
  uint64_t best_size = encode_column(col, Encoding::Plain).byte_size();
  for (Encoding e : {Encoding::RunLength, Encoding::Dictionary, Encoding::Delta}) {
    if (!encoding_applicable(col.type(), e)) continue;
    uint64_t size = encode_column(col, e).byte_size();
    if (size < best_size) {
      best_size = size;
      best = e;
    }
  }
  return best;
}

}  // namespace relgraph
