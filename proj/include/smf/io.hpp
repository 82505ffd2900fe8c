// JSON plumbing: rational matrix literals, half-space points, JSON-lines
// coefficient tables, run configuration, and the fixed decimal image of
// floating values that the byte-identical output contract relies on.
#ifndef SMF_IO_HPP_
#define SMF_IO_HPP_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>

#include <json.hpp>

#include "smf/halfspace.hpp"
#include "smf/series.hpp"
#include "smf/symmat.hpp"
#include "smf/symplectic.hpp"

namespace smf {

using Json = nlohmann::json;

struct RunConfig {
  int precision = 64;                // fractional bits of the working type
  Real tolerance = 1e-8L;            // verification tolerance
  std::size_t enum_cap = 1000000;    // enumeration size guard
  std::size_t output_cap = 1000000;  // emitted-record guard
  std::map<int, Real> epsilon_n;     // per-genus floor overrides
  std::uint64_t seed = 0;            // randomized property runs
};

// Environment variable naming the config file, "SMF_CONFIG".
extern const char* const kConfigEnvVar;

// Throws unless 53 <= precision <= 64 (the working type carries 64
// fractional bits), tolerance > 0, caps >= 1, and overrides lie in (0, 1).
void validate_config(const RunConfig& config);

// Strict field-whitelist parse; unknown keys are errors.
RunConfig config_from_json(const Json& j);

// Loads the explicit path when given, else the file named by the
// environment variable, else the defaults. The result is validated.
RunConfig load_config(const std::string& path = "");

// 21-significant-digit decimal image, enough to round-trip the 64-bit
// mantissa deterministically.
std::string format_real(Real x);

// Accepts the decimal image or a rational literal.
Real parse_real(const std::string& s);

// Row-major array of rational strings, e.g. [["1","1/2"],["1/2","1"]].
Json matrix_to_json(const RatMat& m);
RatMat matrix_from_json(const Json& j);

Json symmat_to_json(const SymMatQ& t);
SymMatQ symmat_from_json(const Json& j);

// Floating symmetric matrices print in the same shape with decimal entries.
Json symmat_to_json(const SymMatR& t);

// {"X": matrix, "Y": matrix} with exact rational entries.
Json point_to_json(const HalfSpacePointQ& z);
HalfSpacePointQ point_from_json(const Json& j);

// JSON-lines: a header record {"n", "ell", "M", "convention"} followed by
// one record {"T", "a_re", "a_im"} per key, keys in their sorted order.
// Reading checks structure (shapes, parses, duplicates); the semantic key
// gates (canonical, dual lattice, definite) belong to the operations that
// consume the table, so raw tables can still be loaded for symmetry checks.
void write_coeff_table(std::ostream& os, const CoeffTable& table);
CoeffTable read_coeff_table(std::istream& is);

void write_coeff_table_file(const std::string& path, const CoeffTable& table);
CoeffTable read_coeff_table_file(const std::string& path);

Json read_json_file(const std::string& path);

}  // namespace smf

#endif  // SMF_IO_HPP_
