#pragma once

#include <string>

#include <json.hpp>

#include "ghgd_cli/jobspec.hpp"
#include "ghgd/numeric.hpp"

namespace ghgd::cli {

using OrderedJson = nlohmann::ordered_json;

// {"rational":"num/den","decimal":"..."}. The rational field is
// authoritative, the decimal (12 significant digits, round half even) is a
// labeled approximation.
OrderedJson rational_json(const Rational& value);

// Render a report document in the requested format. JSON is the normative
// encoding; CSV flattens scalars to key,value rows except for the pmf and
// crosscheck tables, which become one row per entry; plain is human-oriented.
std::string render(const OrderedJson& report, OutputFormat format);

}  // namespace ghgd::cli
