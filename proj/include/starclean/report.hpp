#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include "starclean/decision.hpp"

// Command implementations and their text / JSON renderings.
namespace starclean::report {

enum class Format { Text, Json };

inline constexpr std::uint64_t kMaxScanOrder = 1024;
inline constexpr const char* kSchema = "starclean/1";

struct Options {
  bool oracle = true;
  bool paranoid = false;
  std::uint64_t max_subsets = idem::kDefaultMaxSubsets;
  /// Largest group order for scan.
  std::uint64_t max_order = 100;
  /// Enumerate every idempotent instead of only counting.
  bool count_all = false;
  /// Exhaustive minimum distance for small codes.
  bool distance = false;
  /// Include generator matrices in text output.
  bool matrices = false;
};

/// Throws InvalidInput on out-of-range bounds.
void validate(const Options& opts);

struct Output {
  std::string text;
  /// Criterion and oracle disagreed somewhere.
  bool discrepancy = false;
};

std::string render(const decision::StarCleanReport& r, Format fmt);

decision::StarCleanReport analyze(std::shared_ptr<const gf::SmallField> f, const group::AbelianGroup& g,
                                  const algebra::Involution& inv, const Options& opts);

std::string idempotents(std::shared_ptr<const gf::SmallField> f, const group::AbelianGroup& g, const Options& opts,
                        Format fmt);
std::string codes(std::shared_ptr<const gf::SmallField> f, const group::AbelianGroup& g, const Options& opts,
                  Format fmt);
std::string involutions(std::shared_ptr<const gf::SmallField> f, const group::AbelianGroup& g, Format fmt);
/// All groups of order up to opts.max_order coprime to the characteristic.
/// JSON output is one analyze report per line.
Output scan(std::shared_ptr<const gf::SmallField> f, const algebra::Involution& inv, const Options& opts, Format fmt);

}  // namespace starclean::report
