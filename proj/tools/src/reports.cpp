#include "ghgd_cli/reports.hpp"

#include <sstream>

namespace ghgd::cli {

namespace {

std::string csv_escape(const std::string& value) {
  if (value.find_first_of(",\"\n") == std::string::npos) return value;
  std::string escaped = "\"";
  for (const char c : value) {
    if (c == '"') escaped += '"';
    escaped += c;
  }
  return escaped + "\"";
}

std::string scalar_to_string(const OrderedJson& value) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_null()) return "";
  return value.dump();
}

void flatten(const OrderedJson& node, const std::string& prefix,
             std::vector<std::pair<std::string, std::string>>& rows) {
  if (node.is_object()) {
    for (const auto& [key, value] : node.items()) {
      flatten(value, prefix.empty() ? key : prefix + "." + key, rows);
    }
  } else if (node.is_array()) {
    std::size_t i = 0;
    for (const auto& value : node) {
      flatten(value, prefix + "." + std::to_string(i++), rows);
    }
  } else {
    rows.emplace_back(prefix, scalar_to_string(node));
  }
}

std::string render_csv(const OrderedJson& report) {
  std::ostringstream out;
  const std::string command = report.value("command", "");
  if (command == "pmf" || command == "oracle") {
    out << "k,rational,decimal\n";
    for (const auto& row : report.at("pmf")) {
      out << row.at("k").get<std::int64_t>() << ","
          << row.at("probability").at("rational").get<std::string>() << ","
          << row.at("probability").at("decimal").get<std::string>() << "\n";
    }
    return out.str();
  }
  if (command == "crosscheck") {
    out << "t,quantity,formula,oracle,equal\n";
    for (const auto& row : report.at("checks")) {
      out << row.at("t").get<int>() << "," << row.at("quantity").get<std::string>() << ","
          << csv_escape(row.at("formula").get<std::string>()) << ","
          << csv_escape(row.at("oracle").get<std::string>()) << ","
          << (row.at("equal").get<bool>() ? "true" : "false") << "\n";
    }
    return out.str();
  }
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(report, "", rows);
  out << "key,value\n";
  for (const auto& [key, value] : rows) out << key << "," << csv_escape(value) << "\n";
  return out.str();
}

std::string render_plain(const OrderedJson& report) {
  std::ostringstream out;
  const std::string command = report.value("command", "");
  if (command == "pmf" || command == "oracle") {
    for (const auto& [key, value] : report.items()) {
      if (key == "pmf") continue;
      out << key << ": " << scalar_to_string(value.is_primitive() ? value : OrderedJson(value.dump()))
          << "\n";
    }
    out << "k  probability  ~decimal\n";
    for (const auto& row : report.at("pmf")) {
      out << row.at("k").get<std::int64_t>() << "  "
          << row.at("probability").at("rational").get<std::string>() << "  "
          << row.at("probability").at("decimal").get<std::string>() << "\n";
    }
    return out.str();
  }
  if (command == "crosscheck") {
    for (const auto& row : report.at("checks")) {
      out << "t=" << row.at("t").get<int>() << " " << row.at("quantity").get<std::string>() << ": "
          << (row.at("equal").get<bool>() ? "ok" : "MISMATCH");
      const std::string formula = row.at("formula").get<std::string>();
      if (!formula.empty()) {
        out << " (formula " << formula << ", oracle " << row.at("oracle").get<std::string>() << ")";
      }
      out << "\n";
    }
    out << (report.at("all_equal").get<bool>() ? "all quantities equal\n" : "MISMATCH FOUND\n");
    return out.str();
  }
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(report, "", rows);
  for (const auto& [key, value] : rows) out << key << ": " << value << "\n";
  return out.str();
}

}  // namespace

OrderedJson rational_json(const Rational& value) {
  return OrderedJson{{"rational", rational_string(value)}, {"decimal", decimal_string(value)}};
}

std::string render(const OrderedJson& report, OutputFormat format) {
  switch (format) {
    case OutputFormat::Json: return report.dump(2) + "\n";
    case OutputFormat::Csv: return render_csv(report);
    case OutputFormat::Plain: return render_plain(report);
  }
  return "";
}

}  // namespace ghgd::cli
