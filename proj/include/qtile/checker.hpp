#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "qtile/identities.hpp"
#include "qtile/series.hpp"

namespace qtile {

class CheckerError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Oracle { None, BruteForce, ClosedForm };

std::string oracle_name(Oracle o);

struct Mismatch {
  std::size_t q = 0;
  std::size_t z = 0;
  Integer lhs;
  Integer rhs;
};

struct VerificationReport {
  std::string identity;
  std::optional<IdentityId> identity_id;
  std::size_t qmax = 0;
  std::optional<Mismatch> mismatch;  // empty means the two sides are equal
  double elapsed_ms = 0.0;
  Oracle oracle = Oracle::None;

  bool equal() const noexcept { return !mismatch.has_value(); }
};

nlohmann::json report_to_json(const VerificationReport& r);
std::string report_csv_header();
std::string report_to_csv_row(const VerificationReport& r);
std::string report_to_human(const VerificationReport& r);

/// Equal iff every coefficient agrees; otherwise the least (q, z) where they differ.
VerificationReport compare(const Series& a, const Series& b, std::string label = "compare");

struct CheckerConfig {
  std::size_t oracle_cap = 60;
};

/// Reads QTILE_ORACLE_CAP when set, otherwise the default cap.
CheckerConfig config_from_env();

/**
 * Builds both sides of an identity and compares them. ClosedForm pits the
 * closed form against the product (or the pentagonal series at z = -1);
 * BruteForce pits it against tiling enumeration, refined per rank where a rank
 * decomposition exists. Brute force is refused above config.oracle_cap.
 */
VerificationReport verify(const IdentityId& id, std::size_t qmax, Oracle against,
                          const CheckerConfig& config = {});

/// One report per (k, l), ordered lexicographically.
std::vector<VerificationReport> sweep(const std::vector<std::size_t>& k_range,
                                      const std::vector<std::size_t>& l_range, std::size_t qmax,
                                      Oracle against = Oracle::ClosedForm,
                                      const CheckerConfig& config = {});

}  // namespace qtile
