#pragma once

#include <algorithm>
#include <memory>
#include <string>
#include <vector>

#include "relgraph/column.hpp"
#include "relgraph/common.hpp"

namespace relgraph {

// Immutable columnar table. "Updates" never mutate a ColumnTable; they build
// a new one (replace semantics) or an overlay delta applied by the caller.
class ColumnTable {
 public:
  ColumnTable() = default;

  ColumnTable(std::string name, std::vector<Column> columns)
      : name_(std::move(name)), columns_(std::move(columns)) {
    row_count_ = columns_.empty() ? 0 : columns_.front().size();
    for (const auto& c : columns_) {
      if (c.size() != row_count_)
        throw SchemaError("table '" + name_ + "': column '" + c.name +
                          "' length does not match row count");
    }
    bytes_ = 0;
    for (const auto& c : columns_) bytes_ += c.byte_size();
    MemoryGauge::instance().add(bytes_);
  }

  ColumnTable(const ColumnTable& other)
      : name_(other.name_), columns_(other.columns_), row_count_(other.row_count_), bytes_(other.bytes_) {
    MemoryGauge::instance().add(bytes_);
  }

  ColumnTable(ColumnTable&& other) noexcept
      : name_(std::move(other.name_)),
        columns_(std::move(other.columns_)),
        row_count_(other.row_count_),
        bytes_(other.bytes_) {
    other.bytes_ = 0;
    other.row_count_ = 0;
  }

  ColumnTable& operator=(ColumnTable other) noexcept {
    std::swap(name_, other.name_);
    std::swap(columns_, other.columns_);
    std::swap(row_count_, other.row_count_);
    std::swap(bytes_, other.bytes_);
    return *this;
  }

  ~ColumnTable() { MemoryGauge::instance().sub(bytes_); }

  const std::string& name() const { return name_; }
  size_t row_count() const { return row_count_; }
  size_t column_count() const { return columns_.size(); }
  const std::vector<Column>& columns() const { return columns_; }
  uint64_t byte_size() const { return bytes_; }

  bool has_column(const std::string& col) const {
    return std::any_of(columns_.begin(), columns_.end(),
                       [&](const Column& c) { return c.name == col; });
  }

  const Column& column(const std::string& col) const {
    for (const auto& c : columns_)
      if (c.name == col) return c;
    throw SchemaError("table '" + name_ + "' has no column '" + col + "'");
  }

  const Column& column(size_t idx) const { return columns_.at(idx); }

  size_t column_index(const std::string& col) const {
    for (size_t i = 0; i < columns_.size(); ++i)
      if (columns_[i].name == col) return i;
    throw SchemaError("table '" + name_ + "' has no column '" + col + "'");
  }

 private:
  std::string name_;
  std::vector<Column> columns_;
  size_t row_count_ = 0;
  uint64_t bytes_ = 0;
};

using TablePtr = std::shared_ptr<const ColumnTable>;

inline TablePtr make_table(std::string name, std::vector<Column> columns) {
  return std::make_shared<const ColumnTable>(std::move(name), std::move(columns));
}

}  // namespace relgraph
