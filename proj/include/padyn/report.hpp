#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "padyn/ergodicity.hpp"
#include "padyn/periodic_orbits.hpp"

namespace padyn {

/// Reports use insertion-ordered JSON with exact literals only (integers,
/// rational literals, rational exponents) so that emitted reports re-parse
/// and re-emit byte-identically.
using Json = nlohmann::ordered_json;

/// Map parameters as parsed from flags or a config record. A canonical
/// map supplies p, a, b; a general one adds c, d, e.
struct MapInput {
  std::uint64_t p = 0;
  std::optional<BigRat> a, b, c, d, e;
  bool is_general() const {
    return c.has_value() || d.has_value() || e.has_value();
  }
};

/// Parses the "key = value" map config record (keys p, a, b, c, d, e;
/// values in the rational literal grammar; '#' starts a comment line).
MapInput parse_map_config(const std::string& text);

struct PreparedMap {
  Map31 map;
  std::optional<PadicExact> x0;  // fixed point, when reduced from (3.1) form
  std::optional<Map31General> general;
};

/// Builds the canonical map, reducing a general-form input first.
PreparedMap prepare_map(const MapInput& input);

/// Known published-reference discrepancies for specific parameter sets,
/// reported as warnings (they never affect exit codes or verdicts).
std::vector<std::string> reference_warnings(const Map31& m);

struct RunConfig {
  MapInput map;
  std::vector<BigRat> r_exps;  // sphere radius exponents
  std::optional<BigRat> x;     // seed point
  std::size_t steps = 10000;
  std::size_t depth = 4;
  std::uint64_t iters = 0;
  std::optional<BigRat> q;
  std::size_t kmax = 10;
  unsigned mmax = 4;
  std::optional<long long> q_num_max;  // grid mode bounds
  long long q_den_max = 3;
  std::string out_path;
};

Json cmd_classify(const RunConfig& config);
Json cmd_reduce(const RunConfig& config);
Json cmd_orbit(const RunConfig& config);
Json cmd_spheres(const RunConfig& config);
Json cmd_ergodicity(const RunConfig& config);
Json cmd_periodic(const RunConfig& config);
Json cmd_radii(const RunConfig& config);

std::string orbit_csv(const OrbitTrace& trace);
std::string ladder_csv(const std::vector<NormExp>& ladder);
std::string probe_csv(const FrequencyTable& table);

Json map_summary_json(const Map31& m);
Json certificate_json(const PeriodicOrbitCert& cert);

/// Compact text rendering of a report for terminal output.
std::string render_text(const Json& report);

}  // namespace padyn
