#include "chromabound/records.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace chromabound {

Record& Record::add(std::string key, FieldValue value) {
  fields.emplace_back(std::move(key), std::move(value));
  return *this;
}

const FieldValue* Record::find(std::string_view key) const {
  for (const auto& [k, v] : fields) {
    if (k == key) return &v;
  }
  return nullptr;
}

OutputFormat parse_format(std::string_view name) {
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  if (name == "plain") return OutputFormat::plain;
  throw std::invalid_argument("unknown output format '" + std::string(name) + "'");
}

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

namespace {

std::string to_text(const FieldValue& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, double>) {
          return format_double(x);
        } else if constexpr (std::is_same_v<T, bool>) {
          return x ? "true" : "false";
        } else if constexpr (std::is_same_v<T, std::string>) {
          return x;
        } else {
          return std::to_string(x);
        }
      },
      v);
}

nlohmann::ordered_json to_json_value(const FieldValue& v) {
  return std::visit([](const auto& x) { return nlohmann::ordered_json(x); }, v);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string render_records(std::string_view command, const std::vector<Record>& records,
                           OutputFormat format) {
  switch (format) {
    case OutputFormat::json: {
      nlohmann::ordered_json doc;
      doc["command"] = std::string(command);
      doc["records"] = nlohmann::ordered_json::array();
      for (const auto& r : records) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (const auto& [k, v] : r.fields) obj[k] = to_json_value(v);
        doc["records"].push_back(std::move(obj));
      }
      return doc.dump(2) + "\n";
    }
    case OutputFormat::csv: {
      std::string out;
      if (records.empty()) return out;
      for (std::size_t i = 0; i < records.front().fields.size(); ++i) {
        if (i) out += ',';
        out += csv_field(records.front().fields[i].first);
      }
      out += "\r\n";
      for (const auto& r : records) {
        for (std::size_t i = 0; i < r.fields.size(); ++i) {
          if (i) out += ',';
          out += csv_field(to_text(r.fields[i].second));
        }
        out += "\r\n";
      }
      return out;
    }
    case OutputFormat::plain: {
      std::string out;
      if (records.size() == 1) {
        for (const auto& [k, v] : records.front().fields) out += k + " = " + to_text(v) + "\n";
        return out;
      }
      if (records.empty()) return out;
      const auto& head = records.front().fields;
      std::vector<std::size_t> width(head.size());
      for (std::size_t i = 0; i < head.size(); ++i) width[i] = head[i].first.size();
      for (const auto& r : records) {
        for (std::size_t i = 0; i < r.fields.size() && i < width.size(); ++i) {
          width[i] = std::max(width[i], to_text(r.fields[i].second).size());
        }
      }
      auto pad = [](std::string s, std::size_t w) {
        s.resize(std::max(s.size(), w), ' ');
        return s;
      };
      auto end_line = [&out] {
        out.erase(out.find_last_not_of(' ') + 1);
        out += "\n";
      };
      for (std::size_t i = 0; i < head.size(); ++i) out += pad(head[i].first, width[i] + 2);
      end_line();
      for (const auto& r : records) {
        for (std::size_t i = 0; i < r.fields.size() && i < width.size(); ++i) {
          out += pad(to_text(r.fields[i].second), width[i] + 2);
        }
        end_line();
      }
      return out;
    }
  }
  return {};
}

std::vector<std::vector<std::string>> parse_csv(std::string_view text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false, field_started = false;
  auto end_field = [&] {
    row.push_back(std::move(field));
    field.clear();
    field_started = false;
  };
  auto end_row = [&] {
    end_field();
    rows.push_back(std::move(row));
    row.clear();
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
      continue;
    }
    if (c == '"' && !field_started) {
      quoted = field_started = true;
    } else if (c == ',') {
      end_field();
    } else if (c == '\r' || c == '\n') {
      if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
      end_row();
    } else {
      field += c;
      field_started = true;
    }
  }
  if (quoted) throw std::invalid_argument("parse_csv: unterminated quoted field");
  if (field_started || !row.empty()) end_row();
  return rows;
}

Record to_record(const BoundResult& r) {
  Record rec;
  rec.add("m", std::int64_t{r.m})
      .add("k", std::int64_t{r.k})
      .add("gamma", r.gamma)
      .add("l_star", std::int64_t{r.l_star})
      .add("t_star", r.t_star)
      .add("value", r.value);
  return rec;
}

Record to_record(const MuResult& r) {
  Record rec;
  rec.add("lattice", r.lattice_label)
      .add("dim", std::int64_t{r.dim})
      .add("t_star", r.t_star)
      .add("mu", r.mu)
      .add("tail_bound", r.tail_bound);
  return rec;
}

nlohmann::json to_json(const ThetaSeries& series) {
  nlohmann::json j;
  j["label"] = series.label();
  j["dim"] = series.dim();
  j["K"] = series.K();
  j["growth_exponent"] = series.growth_exponent();
  auto& coeffs = j["coefficients"] = nlohmann::json::array();
  for (const auto& c : series.coeffs()) coeffs.push_back(c.str());
  return j;
}

ThetaSeries theta_series_from_json(const nlohmann::json& j) {
  std::vector<BigInt> coeffs;
  for (const auto& c : j.at("coefficients")) coeffs.emplace_back(c.get<std::string>());
  if (static_cast<int>(coeffs.size()) != j.at("K").get<int>() + 1) {
    throw std::invalid_argument("theta_series_from_json: coefficient count does not match K");
  }
  return ThetaSeries(j.at("label").get<std::string>(), j.at("dim").get<int>(), std::move(coeffs),
                     j.at("growth_exponent").get<double>());
}

}  // namespace chromabound
