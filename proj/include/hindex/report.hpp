#pragma once

#include <cstdint>
#include <exception>
#include <optional>
#include <string>

#include <json.hpp>

#include "hindex/germ_file.hpp"
#include "hindex/indices.hpp"

namespace hindex {

using Json = nlohmann::ordered_json;

inline constexpr int kReportSchema = 1;

struct RunOptions {
  std::uint64_t seed = 1;
  std::string order = "local";
  std::size_t precision = 16;     // starting series precision, doubled up to 256
  int bound = 12;                 // truncation bound for nu_direct; tau uses min(bound, 8)
  std::optional<long> radial;     // user-supplied radial index
  bool minimize = false;
  std::optional<std::size_t> module;  // hilbert: only Omega^p
  std::size_t terms = 10;         // hilbert: prefix length
  bool timing = false;            // adds wall-clock milliseconds (breaks byte identity)
};

// Commands: egz, hom, radial, nu, hilbert, milnor, tau, all.
Json run(const std::string& command, const GermFile& g, const RunOptions& opts);

// Exit codes: 0 ok, 1 internal, 2 parse, 3 precondition, 4 non-isolated,
// 5 resource cap, 6 precision exhausted, 64 usage.
int exit_code(const std::exception& e);
std::string error_kind(const std::exception& e);
Json error_report(const std::exception& e);

}  // namespace hindex
