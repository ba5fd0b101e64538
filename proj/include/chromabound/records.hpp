#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "chromabound/bound_engine.hpp"
#include "chromabound/lattice_theta.hpp"

namespace chromabound {

using FieldValue = std::variant<std::int64_t, double, bool, std::string>;

/// One flat output record; field order is preserved in every format.
struct Record {
  std::vector<std::pair<std::string, FieldValue>> fields;

  Record& add(std::string key, FieldValue value);
  const FieldValue* find(std::string_view key) const;
};

enum class OutputFormat { json, csv, plain };

/// Throws std::invalid_argument for anything but json, csv or plain.
OutputFormat parse_format(std::string_view name);

/// Shortest decimal that round-trips to the same double; always '.' as separator.
std::string format_double(double v);

/// json: {"command": ..., "records": [...]}; csv: header plus one row per
/// record (RFC 4180 quoting); plain: "key = value" lines, or an aligned table
/// for several records.
std::string render_records(std::string_view command, const std::vector<Record>& records,
                           OutputFormat format);

std::vector<std::vector<std::string>> parse_csv(std::string_view text);

Record to_record(const BoundResult& r);
Record to_record(const MuResult& r);

/// Coefficients are written as decimal strings since they exceed 64 bits.
nlohmann::json to_json(const ThetaSeries& series);
ThetaSeries theta_series_from_json(const nlohmann::json& j);

}  // namespace chromabound
