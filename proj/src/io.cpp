#include "smf/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace smf {

const char* const kConfigEnvVar = "SMF_CONFIG";

void validate_config(const RunConfig& config) {
  if (config.precision < 53) throw Error("config: precision below 53 bits");
  if (config.precision > 64) {
    throw Error("config: precision above the 64 fractional bits of this build");
  }
  if (!(config.tolerance > 0)) throw Error("config: tolerance must be positive");
  if (config.enum_cap < 1 || config.output_cap < 1) {
    throw Error("config: caps must be positive");
  }
  for (const auto& [n, eps] : config.epsilon_n) {
    if (n < 1) throw Error("config: epsilon_n genus must be positive");
    if (!(eps > 0 && eps < 1)) throw Error("config: epsilon_n outside (0, 1)");
  }
}

namespace {

Real number_or_string(const Json& j, const char* what) {
  if (j.is_number()) return static_cast<Real>(j.get<double>());
  if (j.is_string()) return parse_real(j.get<std::string>());
  throw Error(std::string("config: ") + what + " must be a number or string");
}

}  // namespace

RunConfig config_from_json(const Json& j) {
  if (!j.is_object()) throw Error("config: expected a JSON object");
  RunConfig config;
  for (const auto& [key, value] : j.items()) {
    if (key == "precision") {
      config.precision = value.get<int>();
    } else if (key == "tolerance") {
      config.tolerance = number_or_string(value, "tolerance");
    } else if (key == "enum_cap") {
      config.enum_cap = value.get<std::size_t>();
    } else if (key == "output_cap") {
      config.output_cap = value.get<std::size_t>();
    } else if (key == "seed") {
      config.seed = value.get<std::uint64_t>();
    } else if (key == "epsilon_n") {
      if (!value.is_object()) throw Error("config: epsilon_n must be an object");
      for (const auto& [genus, eps] : value.items()) {
        config.epsilon_n[std::stoi(genus)] = number_or_string(eps, "epsilon_n");
      }
    } else {
      throw Error("config: unknown field " + key);
    }
  }
  validate_config(config);
  return config;
}

RunConfig load_config(const std::string& path) {
  std::string file = path;
  if (file.empty()) {
    if (const char* env = std::getenv(kConfigEnvVar)) file = env;
  }
  if (file.empty()) return RunConfig{};
  return config_from_json(read_json_file(file));
}

std::string format_real(Real x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.21Lg", x);
  return buf;
}

Real parse_real(const std::string& s) {
  if (s.empty()) throw Error("parse_real: empty string");
  if (s.find_first_of(".eEnN") != std::string::npos && s.find('/') == std::string::npos) {
    char* end = nullptr;
    const Real x = std::strtold(s.c_str(), &end);
    if (end != s.c_str() + s.size()) throw Error("parse_real: trailing junk in " + s);
    if (!std::isfinite(x)) throw Error("parse_real: non-finite value " + s);
    return x;
  }
  return to_real<Real>(parse_rational(s));
}

Json matrix_to_json(const RatMat& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(format_rational(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

RatMat matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw Error("matrix: expected a nonempty array of rows");
  const std::size_t cols = j.at(0).is_array() ? j.at(0).size() : 0;
  if (cols == 0) throw Error("matrix: rows must be nonempty arrays");
  RatMat m(static_cast<Eigen::Index>(j.size()), static_cast<Eigen::Index>(cols));
  for (std::size_t i = 0; i < j.size(); ++i) {
    const Json& row = j.at(i);
    if (!row.is_array() || row.size() != cols) throw Error("matrix: ragged rows");
    for (std::size_t k = 0; k < cols; ++k) {
      if (!row.at(k).is_string()) throw Error("matrix: entries must be rational strings");
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) =
          parse_rational(row.at(k).get<std::string>());
    }
  }
  return m;
}

Json symmat_to_json(const SymMatQ& t) { return matrix_to_json(t.mat()); }

SymMatQ symmat_from_json(const Json& j) { return SymMatQ::fromMatrix(matrix_from_json(j)); }

Json symmat_to_json(const SymMatR& t) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < t.dim(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < t.dim(); ++j) row.push_back(format_real(t(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json point_to_json(const HalfSpacePointQ& z) {
  return Json{{"X", symmat_to_json(z.real_part())}, {"Y", symmat_to_json(z.imag_part())}};
}

HalfSpacePointQ point_from_json(const Json& j) {
  if (!j.is_object()) throw Error("point: expected an object with X and Y");
  return {symmat_from_json(j.at("X")), symmat_from_json(j.at("Y"))};
}

void write_coeff_table(std::ostream& os, const CoeffTable& table) {
  Json header;
  header["M"] = table.m.str();
  header["convention"] = table.sign_character;
  header["ell"] = format_rational(table.ell);
  header["n"] = static_cast<int>(table.n);
  os << header.dump() << "\n";
  for (const auto& [key, value] : table.entries) {
    Json record;
    record["T"] = symmat_to_json(key);
    record["a_im"] = format_real(value.imag());
    record["a_re"] = format_real(value.real());
    os << record.dump() << "\n";
  }
}

CoeffTable read_coeff_table(std::istream& is) {
  CoeffTable table;
  std::string line;
  bool have_header = false;
  while (std::getline(is, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    Json j;
    try {
      j = Json::parse(line);
    } catch (const Json::parse_error& e) {
      throw Error(std::string("coefficient table: ") + e.what());
    }
    if (!have_header) {
      if (!j.is_object() || !j.contains("n")) {
        throw Error("coefficient table: first record must be the header");
      }
      table.n = j.at("n").get<int>();
      table.ell = parse_rational(j.at("ell").get<std::string>());
      table.m = Integer(j.at("M").get<std::string>());
      table.sign_character = j.at("convention").get<int>();
      if (table.n < 1) throw Error("coefficient table: genus must be positive");
      if (table.m < 1) throw Error("coefficient table: M must be positive");
      have_header = true;
      continue;
    }
    const SymMatQ key = symmat_from_json(j.at("T"));
    if (key.dim() != table.n) throw Error("coefficient table: key dimension mismatch");
    const Cplx value(parse_real(j.at("a_re").get<std::string>()),
                     parse_real(j.at("a_im").get<std::string>()));
    if (!table.entries.emplace(key, value).second) {
      throw Error("coefficient table: duplicate key");
    }
  }
  if (!have_header) throw Error("coefficient table: missing header");
  return table;
}

void write_coeff_table_file(const std::string& path, const CoeffTable& table) {
  std::ofstream os(path);
  if (!os) throw Error("cannot open " + path + " for writing");
  write_coeff_table(os, table);
}

CoeffTable read_coeff_table_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw Error("cannot open " + path);
  return read_coeff_table(is);
}

Json read_json_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw Error("cannot open " + path);
  try {
    return Json::parse(is);
  } catch (const Json::parse_error& e) {
    throw Error(path + ": " + e.what());
  }
}

}  // namespace smf
