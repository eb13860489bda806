#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "chebwidom/asymptotics.hpp"
#include "chebwidom/bands.hpp"
#include "chebwidom/chebyshev.hpp"
#include "chebwidom/jacobi.hpp"
#include "chebwidom/potential.hpp"
#include "chebwidom/realsets.hpp"

namespace chebwidom::cli {

using json = nlohmann::ordered_json;

/// Malformed command line or input document (exit status 3).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Inline JSON when the argument starts with '{', otherwise a file path.
std::string read_source(const std::string& arg);

IntervalSet set_from_json(const json& j);
IntervalSet parse_set(const std::string& text);
json set_to_json(const IntervalSet& set);

JacobiParams params_from_json(const json& j);
JacobiParams parse_params(const std::string& text);
json params_to_json(const JacobiParams& p);

json to_json(const ChebyshevResult& r);
json to_json(const EquilibriumData& eq);
json to_json(const DiscriminantFrame& f);
json to_json(const WidomEntry& e);

/// %.17g; nan/inf spelled out.
std::string fmt17(double v);

std::string widom_csv_header();
std::string widom_csv_row(int set_id, const WidomEntry& e);

/// Writes to a sibling temp file, then renames over the target.
void atomic_write(const std::filesystem::path& path, const std::string& content);

}  // namespace chebwidom::cli
