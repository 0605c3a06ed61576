#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "virtlink/ring/laurent.hpp"

namespace virtlink::cli {

enum class Format { Text, Json };

struct RunConfig {
  std::string command;
  std::vector<std::string> inputs;
  Format format = Format::Text;

  std::size_t k = 1;                       // minors
  int p = 3;                               // biquandle-check
  long long s = 1;
  long long t = 1;
  std::string instance;                    // axioms
  std::string rho_file;
  std::string gamma_file;
  std::string u = "T";
  std::string d = "T";
};

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kFailed = 1;
inline constexpr int kInputError = 2;

/// Dispatches one command. Results go to `out`, diagnostics to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Corpus directory: $VIRTLINK_CORPUS if set, else the shipped corpus.
std::string default_corpus_dir();

/// Schema shared by every polynomial in JSON output:
/// {"vars": "s,t", "terms": [[[m, n], [c0, c1, c2, c3]], ...], "normalized": b, "text": "..."}.
/// Coefficients that do not fit in 64 bits are emitted as decimal strings.
nlohmann::json poly_to_json(const ring::BiLaurent& p, bool normalized);
ring::BiLaurent poly_from_json(const nlohmann::json& j);

}  // namespace virtlink::cli
