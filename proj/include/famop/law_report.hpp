#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace famop {

struct Witness {
  std::string law;
  std::vector<std::string> args;

  bool operator==(const Witness&) const = default;
};

// Outcome of an exhaustive law check. passed() holds exactly when no witness was recorded.
struct LawReport {
  std::string kind;
  std::vector<Witness> witnesses;
  std::uint64_t instances = 0;
  std::map<std::string, std::int64_t> stats;

  LawReport() = default;
  explicit LawReport(std::string k) : kind(std::move(k)) {}

  bool passed() const { return witnesses.empty(); }
  void fail(std::string law, std::vector<std::string> args) {
    witnesses.push_back(Witness{std::move(law), std::move(args)});
  }
  void merge(const LawReport& other);
  std::string summary() const;
};

// Reads FAMOP_MAX_SIZE; returns fallback when unset or malformed.
std::int64_t size_bound(std::int64_t fallback);

}  // namespace famop
