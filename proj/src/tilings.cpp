#include "qtile/tilings.hpp"

#include "qtile/series_io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <sstream>

namespace qtile {

Tiling::Tiling(std::vector<std::size_t> black_positions) : positions_(std::move(black_positions)) {
  std::sort(positions_.begin(), positions_.end());
  if (!positions_.empty() && positions_.front() == 0) {
    throw TilingError("tiling positions must be >= 1");
  }
  auto dup = std::adjacent_find(positions_.begin(), positions_.end());
  if (dup != positions_.end()) {
    throw TilingError("duplicate tiling position " + std::to_string(*dup));
  }
}

Tiling parse_tiling(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  std::vector<std::size_t> positions;
  if (text.empty()) return Tiling();
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    auto token = trim(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start));
    if (token.empty()) throw TilingError("empty position in tiling text");
    if (token.front() == '-') {
      throw TilingError("tiling positions must be >= 1, got '" + std::string(token) + "'");
    }
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw TilingError("not an integer position: '" + std::string(token) + "'");
    }
    positions.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Tiling(std::move(positions));
}

std::string format_tiling(const Tiling& t) {
  std::ostringstream out;
  for (std::size_t i = 0; i < t.size(); ++i) out << (i ? "," : "") << t.positions()[i];
  return out.str();
}

Monomial weight(const Tiling& t) {
  std::size_t sum = 0;
  for (auto p : t.positions()) sum += p;
  return Monomial{t.size(), sum, 1};
}

std::size_t b_count(const Tiling& t, std::size_t m) {
  const auto& p = t.positions();
  return static_cast<std::size_t>(p.end() - std::upper_bound(p.begin(), p.end(), m));
}

// Rank kinds

RankKind make_kl(std::size_t k, std::size_t l) {
  RankKind kind = KLRank{k, l};
  validate(kind);
  return kind;
}

RankKind make_xy(std::vector<std::size_t> x, std::vector<std::size_t> y) {
  RankKind kind = XYRank{std::move(x), std::move(y)};
  validate(kind);
  return kind;
}

void validate(const RankKind& kind) {
  if (const auto* kl = std::get_if<KLRank>(&kind)) {
    if (kl->k < 1) throw TilingError("k must be >= 1");
    if (kl->l < 1) throw TilingError("l must be >= 1");
  } else if (const auto* xy = std::get_if<XYRank>(&kind)) {
    if (xy->x.size() != xy->y.size()) throw TilingError("x and y tables must have equal length");
    if (xy->x.empty()) throw TilingError("x and y tables must be nonempty");
    for (std::size_t i = 1; i < xy->x.size(); ++i) {
      if (xy->x[i] <= xy->x[i - 1]) throw TilingError("x table must be strictly increasing");
      if (xy->y[i] < xy->y[i - 1]) throw TilingError("y table must be nondecreasing");
    }
  }
}

nlohmann::json rank_kind_to_json(const RankKind& kind) {
  return std::visit(
      [](const auto& k) -> nlohmann::json {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, ClassicRank>) {
          return {{"type", "classic"}};
        } else if constexpr (std::is_same_v<K, KLRank>) {
          return {{"type", "kl"}, {"k", k.k}, {"l", k.l}};
        } else {
          return {{"type", "xy"}, {"x", k.x}, {"y", k.y}};
        }
      },
      kind);
}

RankKind rank_kind_from_json(const nlohmann::json& j) {
  try {
    const auto type = j.at("type").get<std::string>();
    if (type == "classic") return ClassicRank{};
    if (type == "kl") return make_kl(j.at("k").get<std::size_t>(), j.at("l").get<std::size_t>());
    if (type == "xy") {
      return make_xy(j.at("x").get<std::vector<std::size_t>>(), j.at("y").get<std::vector<std::size_t>>());
    }
    throw TilingError("unknown rank kind '" + type + "'");
  } catch (const nlohmann::json::exception& e) {
    throw TilingError(std::string("malformed rank kind JSON: ") + e.what());
  }
}

namespace {

std::size_t kl_rank(const Tiling& t, std::size_t k, std::size_t l) {
  for (std::size_t m = 0;; ++m) {
    if (b_count(t, k * m) <= l * m) return m;
  }
}

}  // namespace

std::size_t rank(const Tiling& t, const RankKind& kind) {
  return std::visit(
      [&t](const auto& k) -> std::size_t {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, ClassicRank>) {
          return kl_rank(t, 1, 1);
        } else if constexpr (std::is_same_v<K, KLRank>) {
          if (k.k < 1 || k.l < 1) throw TilingError("k and l must be >= 1");
          return kl_rank(t, k.k, k.l);
        } else {
          const std::size_t n = std::min(k.x.size(), k.y.size());
          for (std::size_t m = 0; m < n; ++m) {
            if (b_count(t, k.x[m]) <= k.y[m]) return m;
          }
          throw TilingError("table too short to decide the (X,Y)-rank of tiling {" +
                            format_tiling(t) + "}");
        }
      },
      kind);
}

std::vector<RankCase> rank_case_candidates(const Tiling& t, std::size_t k, std::size_t l,
                                           std::size_t m) {
  std::vector<RankCase> found;
  if (m == 0) return found;
  const std::size_t top = l * m;
  const std::size_t b_km = b_count(t, k * m);
  if (b_km <= top && top - b_km <= l - 1) found.push_back(RankCase{1, top - b_km});
  for (std::size_t j = 0; j < k; ++j) {
    const std::size_t pos = k * m - j;
    if (b_count(t, pos) == top - l && b_count(t, pos - 1) == top - l + 1) {
      found.push_back(RankCase{2, j});
    }
  }
  return found;
}

RankCase rank_case(const Tiling& t, std::size_t k, std::size_t l) {
  if (k < 1 || l < 1) throw TilingError("k and l must be >= 1");
  const std::size_t m = kl_rank(t, k, l);
  if (m == 0) throw TilingError("the empty tiling has rank 0 and no rank case");
  auto found = rank_case_candidates(t, k, l, m);
  if (found.size() != 1) {
    throw TilingError("internal inconsistency: " + std::to_string(found.size()) +
                      " rank cases hold for tiling {" + format_tiling(t) + "}");
  }
  return found.front();
}

// Enumeration

void for_each_tiling(std::size_t qmax, const std::function<void(const Tiling&)>& visit) {
  Tiling work;
  auto& pos = work.positions_;
  std::size_t sum = 0;
  visit(work);
  // Depth-first over strictly increasing position lists; emitting on push gives
  // lexicographic order with every prefix before its extensions.
  std::size_t next = 1;
  while (true) {
    if (sum + next <= qmax) {
      pos.push_back(next);
      sum += next;
      visit(work);
      ++next;
      continue;
    }
    if (pos.empty()) break;
    const std::size_t last = pos.back();
    pos.pop_back();
    sum -= last;
    next = last + 1;
  }
}

std::vector<Tiling> enumerate_tilings(std::size_t qmax) {
  std::vector<Tiling> out;
  for_each_tiling(qmax, [&out](const Tiling& t) { out.push_back(t); });
  return out;
}

namespace {

// Tiling counts per (q, z) cell stay far below 2^64 at any enumerable qmax.
struct CountGrid {
  explicit CountGrid(std::size_t qmax) : qmax(qmax), cells((qmax + 1) * (qmax + 1), 0) {}

  void add(const Tiling& t) {
    std::size_t q = 0;
    for (auto p : t.positions()) q += p;
    ++cells[q * (qmax + 1) + t.size()];
  }

  Series to_series() const {
    std::vector<Term> terms;
    for (std::size_t q = 0; q <= qmax; ++q) {
      for (std::size_t z = 0; z <= qmax; ++z) {
        if (auto c = cells[q * (qmax + 1) + z]) terms.push_back(Term{q, z, Integer(c)});
      }
    }
    return Series::from_terms(qmax, std::move(terms));
  }

  std::size_t qmax;
  std::vector<std::uint64_t> cells;
};

template <class Key, class KeyFn>
std::map<Key, Series> grouped_gf(std::size_t qmax, KeyFn key_of) {
  std::map<Key, CountGrid> grids;
  for_each_tiling(qmax, [&](const Tiling& t) {
    std::optional<Key> key = key_of(t);
    if (!key) return;
    grids.try_emplace(*key, qmax).first->second.add(t);
  });
  std::map<Key, Series> out;
  for (const auto& [key, grid] : grids) out.emplace(key, grid.to_series());
  return out;
}

}  // namespace

Series brute_gf(std::size_t qmax, const TilingFilter& filter) {
  CountGrid grid(qmax);
  for_each_tiling(qmax, [&](const Tiling& t) {
    if (!filter || filter(t)) grid.add(t);
  });
  return grid.to_series();
}

std::map<std::size_t, Series> rank_histogram(std::size_t qmax, const RankKind& kind) {
  validate(kind);
  return grouped_gf<std::size_t>(qmax, [&kind](const Tiling& t) -> std::optional<std::size_t> {
    return rank(t, kind);
  });
}

nlohmann::json histogram_to_json(const RankKind& kind, std::size_t qmax,
                                 const std::map<std::size_t, Series>& histogram) {
  auto buckets = nlohmann::json::array();
  for (const auto& [m, s] : histogram) buckets.push_back({{"rank", m}, {"series", series_to_json(s)}});
  return {{"kind", rank_kind_to_json(kind)}, {"qmax", qmax}, {"buckets", std::move(buckets)}};
}

std::map<std::pair<std::size_t, RankCase>, Series> case_histogram(std::size_t qmax, std::size_t k,
                                                                  std::size_t l) {
  if (k < 1 || l < 1) throw TilingError("k and l must be >= 1");
  using Key = std::pair<std::size_t, RankCase>;
  return grouped_gf<Key>(qmax, [k, l](const Tiling& t) -> std::optional<Key> {
    if (t.empty()) return std::nullopt;
    return Key{kl_rank(t, k, l), rank_case(t, k, l)};
  });
}

}  // namespace qtile
