#ifndef DENSITYLAB_JSON_IO_HPP
#define DENSITYLAB_JSON_IO_HPP

#include <json.hpp>

#include "densitylab/periodic_set.hpp"
#include "densitylab/verifier.hpp"

namespace densitylab {

using nlohmann::json;

/// A parsed set file: {"halfline": bool, "intervals": [["num/den", ...]]}.
/// halfline = true requires positive endpoints and denotes a configuration.
struct ParsedSet {
  bool halfline = false;
  IntervalSet intervals;

  Configuration configuration() const { return Configuration(intervals); }
};

json set_to_json(const IntervalSet& s, bool halfline);
ParsedSet set_from_json(const json& j);

/// {"generator": [["0", "nu1"], ...]} with the [0,.) / (.,1] convention.
json goodset_to_json(const PeriodicSet& p);
PeriodicSet goodset_from_json(const json& j);

json report_to_json(const VerificationReport& r);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace densitylab

#endif
