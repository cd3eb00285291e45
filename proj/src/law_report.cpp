#include "famop/law_report.hpp"

#include <cstdlib>
#include <sstream>

namespace famop {

void LawReport::merge(const LawReport& other) {
  witnesses.insert(witnesses.end(), other.witnesses.begin(), other.witnesses.end());
  instances += other.instances;
  for (const auto& [k, v] : other.stats) stats[k] += v;
}

std::string LawReport::summary() const {
  std::ostringstream out;
  out << kind << ": " << (passed() ? "passed" : "FAILED") << " (" << instances << " instances";
  if (!passed()) out << ", " << witnesses.size() << " violations";
  out << ")";
  if (!passed()) {
    const auto& w = witnesses.front();
    out << "; first: " << w.law << " at (";
    for (std::size_t i = 0; i < w.args.size(); ++i) out << (i ? ", " : "") << w.args[i];
    out << ")";
  }
  return out.str();
}

std::int64_t size_bound(std::int64_t fallback) {
  const char* env = std::getenv("FAMOP_MAX_SIZE");
  if (!env || !*env) return fallback;
  char* end = nullptr;
  long long v = std::strtoll(env, &end, 10);
  if (*end != '\0' || v <= 0) return fallback;
  return v;
}

}  // namespace famop
