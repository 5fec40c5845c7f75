#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cansec/involution.hpp"
#include "cansec/model.hpp"

namespace cansec {

// Minimal TOML reader covering the model-file schema: top-level and [table]
// sections, integer and string values, and (nested) arrays of integers.
// Unknown syntax is a config_error, never undefined behavior.
struct TomlValue {
  std::variant<long long, std::string, std::vector<TomlValue>> v;

  bool is_int() const { return std::holds_alternative<long long>(v); }
  bool is_string() const { return std::holds_alternative<std::string>(v); }
  bool is_array() const { return std::holds_alternative<std::vector<TomlValue>>(v); }

  long long as_int() const;
  const std::string& as_string() const;
  const std::vector<TomlValue>& as_array() const;
};

using TomlTable = std::map<std::string, TomlValue>;
using TomlDocument = std::map<std::string, TomlTable>;  // "" holds top-level keys

TomlDocument parse_toml(const std::string& text);
TomlDocument parse_toml_file(const std::string& path);

// A model file:
//
//   p = 5
//   n = 3
//   A = 20
//   D = 24
//
//   [model]
//   e = 2
//   u = [[0, 0, 1]]        # monomial triples [i, j, coeff]
//   f = []
//   g = []
//
//   [pairing]              # optional
//   source = "model"
//   target = "model"
//   twist = [[0, 0, 1]]
//
// Additional [something] sections with e/u/f/g keys define further annuli;
// the pairing references them by section name.
struct Config {
  FieldDesc field;
  uint32_t D = 0;
  std::map<std::string, LocalModel> models;
  struct PairingSpec {
    std::string source;
    std::string target;
    std::vector<Monomial> twist;
  };
  std::optional<PairingSpec> pairing;
};

struct ConfigOverrides {
  std::optional<uint32_t> A;  // --precision
  std::optional<uint32_t> D;  // --degree
};

Config load_config(const std::string& path, const ConfigOverrides& ov = {});
Config config_from_toml(const TomlDocument& doc, const ConfigOverrides& ov = {});

const LocalModel& select_model(const Config& cfg, const std::string& name);
Pairing make_pairing(const Config& cfg);

// Point spec: "pi^k" for the bare monomial, or "val=k/n" to synthesize
// pi^k * (seeded random unit).
RamElem parse_point_spec(const std::string& spec, const FieldDesc& fd, uint64_t seed);

}  // namespace cansec
