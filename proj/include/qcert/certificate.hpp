#pragma once

#include "qcert/curve.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace qcert {

struct HeckeConfig {
  std::string mode = "file";  // compute | file | skip
  std::string path;
  std::vector<std::uint64_t> primes{2, 5};
};

struct Config {
  std::string curve_path;
  std::vector<std::uint64_t> frobenius_primes{2, 3, 5, 17, 19, 23, 41, 43, 73};
  HeckeConfig hecke;
  bool extended_checks = false;  // recompute ingested Hecke data
};

/// Relative paths inside the file are taken relative to its directory.
Config load_config(const std::string& path);
Config parse_config(const nlohmann::json& j, const std::string& base_dir = ".");

enum class ObligationStatus { Proved, Trusted, Failed };
std::string to_string(ObligationStatus s);

struct Obligation {
  std::string name;
  ObligationStatus status = ObligationStatus::Failed;
  std::string message;
  nlohmann::ordered_json evidence = nlohmann::ordered_json::object();
  std::vector<std::string> fact_refs;
};

struct Certificate {
  nlohmann::ordered_json curve;
  std::vector<Obligation> obligations;
  std::string verdict;       // "maximal adelic image" or "not certified"
  std::string failing_step;  // empty when certified
  std::vector<std::string> notes;

  bool certified() const { return verdict == "maximal adelic image"; }
  const Obligation& obligation(const std::string& name) const;
};

inline constexpr const char* kVerdictMaximal = "maximal adelic image";
inline constexpr const char* kVerdictNotCertified = "not certified";

Certificate run_pipeline(const Config& cfg);
Certificate run_pipeline(const TernaryQuarticForm& f, const Config& cfg);

/// format is "json" or "text"; throws std::invalid_argument otherwise.
std::string render_report(const Certificate& cert, const std::string& format);

}  // namespace qcert
