#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "qtile/series.hpp"

namespace qtile {

class TilingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/**
 * A tiling of the 1 x infinity board by black and white squares, identified
 * with the strictly increasing list of its black positions (all >= 1).
 * Equivalently, a partition into distinct parts.
 */
class Tiling {
 public:
  Tiling() = default;
  /// Throws TilingError on a zero position or a duplicate; sorts otherwise.
  explicit Tiling(std::vector<std::size_t> black_positions);

  const std::vector<std::size_t>& positions() const noexcept { return positions_; }
  std::size_t size() const noexcept { return positions_.size(); }
  bool empty() const noexcept { return positions_.empty(); }
  std::size_t max_position() const noexcept { return positions_.empty() ? 0 : positions_.back(); }

  friend auto operator<=>(const Tiling&, const Tiling&) = default;

 private:
  friend void for_each_tiling(std::size_t, const std::function<void(const Tiling&)>&);

  std::vector<std::size_t> positions_;
};

/// Comma-separated positive integers; the empty string is the all-white tiling.
Tiling parse_tiling(std::string_view text);
std::string format_tiling(const Tiling& t);

/// z^(number of black squares) q^(sum of black positions).
Monomial weight(const Tiling& t);

/// Number of black squares at positions strictly greater than m.
std::size_t b_count(const Tiling& t, std::size_t m);

struct ClassicRank {
  friend bool operator==(const ClassicRank&, const ClassicRank&) = default;
};

struct KLRank {
  std::size_t k = 1;
  std::size_t l = 1;
  friend bool operator==(const KLRank&, const KLRank&) = default;
};

/// Tables are indexed from m = 0; x strictly increasing, y nondecreasing.
struct XYRank {
  std::vector<std::size_t> x;
  std::vector<std::size_t> y;
  friend bool operator==(const XYRank&, const XYRank&) = default;
};

using RankKind = std::variant<ClassicRank, KLRank, XYRank>;

RankKind make_kl(std::size_t k, std::size_t l);
RankKind make_xy(std::vector<std::size_t> x, std::vector<std::size_t> y);
void validate(const RankKind& kind);

nlohmann::json rank_kind_to_json(const RankKind& kind);
RankKind rank_kind_from_json(const nlohmann::json& j);

/// Least m >= 0 with b(km) <= lm (Classic is k = l = 1; XY uses b(x_m) <= y_m).
std::size_t rank(const Tiling& t, const RankKind& kind);

/// Which boundary of the rank-m region the b-path leaves through.
/// Case 1: b(km) = lm - i with 0 <= i < l. Case 2: b(km - j) = lm - l and
/// b(km - j - 1) = lm - l + 1 with 0 <= j < k.
struct RankCase {
  int case_id = 1;
  std::size_t offset = 0;
  friend auto operator<=>(const RankCase&, const RankCase&) = default;
};

/// Every (case, offset) whose defining equalities hold at m. Exactly one for m = rank.
std::vector<RankCase> rank_case_candidates(const Tiling& t, std::size_t k, std::size_t l,
                                           std::size_t m);

/// The unique case at the (k,l)-rank. Throws if the tiling is empty or the case
/// characterization is not unique.
RankCase rank_case(const Tiling& t, std::size_t k, std::size_t l);

/**
 * Visits every tiling of weight q-degree <= qmax exactly once, in
 * lexicographic order of position lists. The visitor sees a reference to a
 * working buffer that is only valid for the duration of the call.
 */
void for_each_tiling(std::size_t qmax, const std::function<void(const Tiling&)>& visit);

std::vector<Tiling> enumerate_tilings(std::size_t qmax);

using TilingFilter = std::function<bool(const Tiling&)>;

/// Sum of weights of enumerated tilings passing the filter (all tilings when empty).
Series brute_gf(std::size_t qmax, const TilingFilter& filter = {});

/// Brute-force GF per rank: keys are exactly the ranks that occur.
std::map<std::size_t, Series> rank_histogram(std::size_t qmax, const RankKind& kind);

nlohmann::json histogram_to_json(const RankKind& kind, std::size_t qmax,
                                 const std::map<std::size_t, Series>& histogram);

/// Brute-force GF of the tilings with (k,l)-rank m in each case (rank 0 omitted).
std::map<std::pair<std::size_t, RankCase>, Series> case_histogram(std::size_t qmax, std::size_t k,
                                                                  std::size_t l);

}  // namespace qtile
