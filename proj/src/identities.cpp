#include "qtile/identities.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "qtile/tilings.hpp"

namespace qtile {

IdentityId IdentityId::kl(std::size_t k, std::size_t l) {
  IdentityId id = IdentityId::of(IdentityTag::KL);
  id.k = k;
  id.l = l;
  return id;
}

IdentityId IdentityId::heptagonal(int form) {
  IdentityId id = IdentityId::of(IdentityTag::Heptagonal);
  id.form = form;
  return id;
}

IdentityId IdentityId::k_equals_1(std::size_t l) {
  IdentityId id = IdentityId::of(IdentityTag::KEquals1);
  id.k = 1;
  id.l = l;
  return id;
}

IdentityId IdentityId::remark_transform(std::size_t x, std::size_t y) {
  IdentityId id = IdentityId::of(IdentityTag::RemarkTransform);
  id.x = x;
  id.y = y;
  return id;
}

IdentityId IdentityId::xy(std::vector<std::size_t> x_seq, std::vector<std::size_t> y_seq) {
  IdentityId id = IdentityId::of(IdentityTag::XYPartition);
  id.x_seq = std::move(x_seq);
  id.y_seq = std::move(y_seq);
  return id;
}

void validate(const IdentityId& id) {
  switch (id.tag) {
    case IdentityTag::KL:
      if (id.k < 1) throw IdentityError("k must be >= 1");
      if (id.l < 1) throw IdentityError("l must be >= 1");
      break;
    case IdentityTag::KEquals1:
      if (id.l < 1) throw IdentityError("l must be >= 1");
      break;
    case IdentityTag::Heptagonal:
      if (id.form != 1 && id.form != 2) throw IdentityError("heptagonal form must be 1 or 2");
      break;
    case IdentityTag::XYPartition:
      try {
        validate(RankKind{XYRank{id.x_seq, id.y_seq}});
      } catch (const TilingError& e) {
        throw IdentityError(e.what());
      }
      break;
    default:
      break;
  }
}

namespace {

const std::vector<std::pair<IdentityTag, std::string>>& tag_names() {
  static const std::vector<std::pair<IdentityTag, std::string>> names = {
      {IdentityTag::EulerProductVsSum, "euler"},
      {IdentityTag::Sylvester, "sylvester"},
      {IdentityTag::EPNT, "epnt"},
      {IdentityTag::KL, "kl"},
      {IdentityTag::Heptagonal, "heptagonal"},
      {IdentityTag::KEquals1, "k1"},
      {IdentityTag::RemarkTransform, "transform"},
      {IdentityTag::XYPartition, "xy"},
  };
  return names;
}

}  // namespace

std::string tag_name(IdentityTag tag) {
  for (const auto& [t, name] : tag_names()) {
    if (t == tag) return name;
  }
  throw IdentityError("unknown identity tag");
}

IdentityTag tag_from_name(const std::string& name) {
  for (const auto& [t, n] : tag_names()) {
    if (n == name) return t;
  }
  throw IdentityError("unknown identity tag '" + name + "'");
}

nlohmann::json identity_to_json(const IdentityId& id) {
  nlohmann::json params = nlohmann::json::object();
  switch (id.tag) {
    case IdentityTag::KL:
      params = {{"k", id.k}, {"l", id.l}};
      break;
    case IdentityTag::KEquals1:
      params = {{"l", id.l}};
      break;
    case IdentityTag::Heptagonal:
      params = {{"form", id.form}};
      break;
    case IdentityTag::RemarkTransform:
      params = {{"x", id.x}, {"y", id.y}};
      break;
    case IdentityTag::XYPartition:
      params = {{"x", id.x_seq}, {"y", id.y_seq}};
      break;
    default:
      break;
  }
  return {{"tag", tag_name(id.tag)}, {"params", std::move(params)}};
}

IdentityId identity_from_json(const nlohmann::json& j) {
  try {
    IdentityId id = IdentityId::of(tag_from_name(j.at("tag").get<std::string>()));
    const auto params = j.value("params", nlohmann::json::object());
    switch (id.tag) {
      case IdentityTag::KL:
        id.k = params.at("k").get<std::size_t>();
        id.l = params.at("l").get<std::size_t>();
        break;
      case IdentityTag::KEquals1:
        id.k = 1;
        id.l = params.at("l").get<std::size_t>();
        break;
      case IdentityTag::Heptagonal:
        id.form = params.at("form").get<int>();
        break;
      case IdentityTag::RemarkTransform:
        id.x = params.at("x").get<std::size_t>();
        id.y = params.at("y").get<std::size_t>();
        break;
      case IdentityTag::XYPartition:
        id.x_seq = params.at("x").get<std::vector<std::size_t>>();
        id.y_seq = params.at("y").get<std::vector<std::size_t>>();
        break;
      default:
        break;
    }
    validate(id);
    return id;
  } catch (const nlohmann::json::exception& e) {
    throw IdentityError(std::string("malformed identity JSON: ") + e.what());
  }
}

std::string label(const IdentityId& id) {
  std::string out = tag_name(id.tag);
  switch (id.tag) {
    case IdentityTag::KL:
      out += "(" + std::to_string(id.k) + "," + std::to_string(id.l) + ")";
      break;
    case IdentityTag::KEquals1:
      out += "(" + std::to_string(id.l) + ")";
      break;
    case IdentityTag::Heptagonal:
      out += std::to_string(id.form);
      break;
    case IdentityTag::RemarkTransform:
      out += "(" + std::to_string(id.x) + "," + std::to_string(id.y) + ")";
      break;
    default:
      break;
  }
  return out;
}

// Closed forms

namespace {

// (-zq;q)_t and 1/(q;q)_t for one truncation order, built on demand.
class FactorCache {
 public:
  explicit FactorCache(std::size_t qmax) : qmax_(qmax) { neg_zq_.push_back(Series::one(qmax)); }

  // (-zq;q)_t; factors past qmax are 1 modulo q^(qmax+1).
  const Series& neg_zq(std::size_t t) {
    t = std::min(t, qmax_);
    while (neg_zq_.size() <= t) {
      const std::size_t i = neg_zq_.size();
      const Series& prev = neg_zq_.back();
      neg_zq_.push_back(prev + prev.shifted(1, i));
    }
    return neg_zq_[t];
  }

  const Series& inv_q(std::size_t t) {
    t = std::min(t, qmax_);
    auto it = inv_q_.find(t);
    if (it == inv_q_.end()) it = inv_q_.emplace(t, inv_q_pochhammer(t, qmax_)).first;
    return it->second;
  }

  std::size_t qmax() const { return qmax_; }

 private:
  std::size_t qmax_;
  std::vector<Series> neg_zq_;
  std::map<std::size_t, Series> inv_q_;
};

// numerator * (1/(q;q)_denominator) * z^z_exp q^q_exp, shifting before multiplying.
Series projected_term(FactorCache& cache, std::size_t numerator, std::size_t denominator,
                      std::size_t z_exp, std::size_t q_exp) {
  const std::size_t qmax = cache.qmax();
  if (q_exp > qmax) return Series::zero(qmax);
  return cache.neg_zq(numerator) * cache.inv_q(denominator).shifted(z_exp, q_exp);
}

Series case_term(FactorCache& cache, const CaseTermSpec& spec, Case2Exponent variant) {
  const std::size_t twice = case_exponent_twice(spec, variant);
  if (twice % 2 != 0) {
    throw IdentityError("non-integer q-exponent " + std::to_string(twice) + "/2 for case " +
                        std::to_string(spec.case_id) + " at (k,l,m,offset)=(" +
                        std::to_string(spec.k) + "," + std::to_string(spec.l) + "," +
                        std::to_string(spec.m) + "," + std::to_string(spec.offset) + ")");
  }
  const std::size_t q_exp = twice / 2;
  const std::size_t lm = spec.l * spec.m;
  const std::size_t km = spec.k * spec.m;
  if (spec.case_id == 1) {
    const std::size_t n = lm - spec.offset;
    return projected_term(cache, km, n, n, q_exp);
  }
  const std::size_t n = lm - spec.l;
  return projected_term(cache, km - spec.offset - 1, n, n + 1, q_exp);
}

std::size_t saturating_half(std::size_t twice) { return twice / 2; }

}  // namespace

Series tiling_product(std::size_t qmax) { return pochhammer_neg_zq(qmax, qmax); }

Series euler_sum(std::size_t qmax) {
  FactorCache cache(qmax);
  Series total = Series::zero(qmax);
  for (std::size_t m = 0; m * (m + 1) / 2 <= qmax; ++m) {
    total += cache.inv_q(m).shifted(m, m * (m + 1) / 2);
  }
  return total;
}

void validate(const CaseTermSpec& spec) {
  if (spec.k < 1 || spec.l < 1 || spec.m < 1) throw IdentityError("k, l and m must be >= 1");
  if (spec.case_id == 1) {
    if (spec.offset > spec.l - 1) throw IdentityError("case 1 offset i must satisfy 0 <= i <= l-1");
  } else if (spec.case_id == 2) {
    if (spec.offset > spec.k - 1) throw IdentityError("case 2 offset j must satisfy 0 <= j <= k-1");
  } else {
    throw IdentityError("case id must be 1 or 2");
  }
}

std::size_t case_exponent_twice(const CaseTermSpec& spec, Case2Exponent variant) {
  validate(spec);
  const std::size_t k = spec.k, l = spec.l, m = spec.m;
  if (spec.case_id == 1) {
    const std::size_t i = spec.offset;
    return (l * m - i) * ((2 * k + l) * m - i + 1);
  }
  const std::size_t j = spec.offset;
  const std::size_t count = l * m - l + 1;
  if (variant == Case2Exponent::Standard) return count * ((2 * k + l) * m - 2 * j - l);
  return count * (2 * k * m - 2 * j + l * m - l + 1);
}

Series kl_case_gf(const CaseTermSpec& spec, std::size_t qmax, Case2Exponent variant) {
  FactorCache cache(qmax);
  return case_term(cache, spec, variant);
}

Series kl_rank_gf(std::size_t k, std::size_t l, std::size_t m, std::size_t qmax) {
  if (k < 1 || l < 1) throw IdentityError("k and l must be >= 1");
  if (m == 0) return Series::one(qmax);
  FactorCache cache(qmax);
  Series total = Series::zero(qmax);
  for (std::size_t i = 0; i < l; ++i) total += case_term(cache, {k, l, m, 1, i}, Case2Exponent::Standard);
  for (std::size_t j = 0; j < k; ++j) total += case_term(cache, {k, l, m, 2, j}, Case2Exponent::Standard);
  return total;
}

Series kl_rhs(std::size_t k, std::size_t l, std::size_t qmax, Case2Exponent variant) {
  if (k < 1 || l < 1) throw IdentityError("k and l must be >= 1");
  FactorCache cache(qmax);
  Series total = Series::one(qmax);
  for (std::size_t m = 1;; ++m) {
    // Every exponent grows with m, so the first m whose cheapest summand lies past
    // qmax ends the sum.
    std::vector<CaseTermSpec> specs;
    std::size_t cheapest = std::numeric_limits<std::size_t>::max();
    for (std::size_t i = 0; i < l; ++i) specs.push_back({k, l, m, 1, i});
    for (std::size_t j = 0; j < k; ++j) specs.push_back({k, l, m, 2, j});
    for (const auto& s : specs) cheapest = std::min(cheapest, saturating_half(case_exponent_twice(s, variant)));
    if (cheapest > qmax) break;
    for (const auto& s : specs) total += case_term(cache, s, variant);
  }
  return total;
}

Series kl_rhs_k1(std::size_t l, std::size_t qmax) {
  if (l < 1) throw IdentityError("l must be >= 1");
  FactorCache cache(qmax);
  Series total = Series::one(qmax);
  for (std::size_t m = 1;; ++m) {
    bool any = false;
    for (std::size_t i = 0; i < l; ++i) {
      const std::size_t n = l * m - i;
      const std::size_t e = n * ((2 + l) * m - i + 1) / 2;
      if (e > qmax) continue;
      any = true;
      total += projected_term(cache, m, n, n, e);
    }
    const std::size_t n = l * m - l + 1;
    const std::size_t e = n * ((2 + l) * m - l) / 2;
    if (e <= qmax) {
      any = true;
      total += projected_term(cache, m - 1, l * m - l, n, e);
    }
    if (!any) break;
  }
  return total;
}

Series sylvester_rhs_compact(std::size_t qmax) {
  FactorCache cache(qmax);
  Series total = Series::zero(qmax);
  for (std::size_t m = 0; m * (3 * m + 1) / 2 <= qmax; ++m) {
    Series base = projected_term(cache, m, m, m, m * (3 * m + 1) / 2);
    total += base + base.shifted(1, 2 * m + 1);
  }
  return total;
}

Series sylvester_rhs_expanded(std::size_t qmax) {
  FactorCache cache(qmax);
  Series total = Series::one(qmax);
  for (std::size_t m = 1; m * (3 * m - 1) / 2 <= qmax; ++m) {
    total += projected_term(cache, m - 1, m - 1, m, m * (3 * m - 1) / 2);
    total += projected_term(cache, m, m, m, m * (3 * m + 1) / 2);
  }
  return total;
}

Series sylvester_rhs(std::size_t qmax) {
  Series total = sylvester_rhs_expanded(qmax);
  if (total != sylvester_rhs_compact(qmax)) {
    throw IdentityError("Sylvester expanded and compact forms disagree at qmax " + std::to_string(qmax));
  }
  return total;
}

std::vector<std::pair<std::size_t, int>> generalized_pentagonal(std::size_t qmax) {
  std::vector<std::pair<std::size_t, int>> out{{0, 1}};
  for (std::size_t m = 1; m * (3 * m - 1) / 2 <= qmax; ++m) {
    const int sign = m % 2 ? -1 : 1;
    out.emplace_back(m * (3 * m - 1) / 2, sign);
    if (m * (3 * m + 1) / 2 <= qmax) out.emplace_back(m * (3 * m + 1) / 2, sign);
  }
  return out;
}

Series epnt_rhs(std::size_t qmax) {
  std::vector<Term> terms{{0, 0, 1}};
  for (std::size_t m = 1; m * (3 * m - 1) / 2 <= qmax; ++m) {
    const Integer sign = m % 2 ? -1 : 1;
    terms.push_back(Term{m * (3 * m - 1) / 2, 0, sign});
    terms.push_back(Term{m * (3 * m - 1) / 2 + m, 0, sign});
  }
  return Series::from_terms(qmax, std::move(terms));
}

namespace {

// (q^first;q)_n for n >= -first + 1, where a negative length means
// (a;q)_{-n} = 1 / (a q^{-n};q)_n.
Series signed_length_pochhammer(std::size_t first, long long n, std::size_t qmax) {
  if (n >= 0) return q_shifted_pochhammer(first, static_cast<std::size_t>(n), qmax);
  const auto len = static_cast<std::size_t>(-n);
  if (len >= first) throw IdentityError("negative-length q-Pochhammer reaches q^0");
  return inv_q_shifted_pochhammer(first - len, len, qmax);
}

Series heptagonal_form1(std::size_t qmax) {
  Series total = Series::one(qmax);
  for (std::size_t m = 1; m * (5 * m - 3) / 2 <= qmax; ++m) {
    const Integer sign = m % 2 ? -1 : 1;
    Series bracket = q_shifted_pochhammer(m + 1, m, qmax).shifted(0, m * (5 * m + 1) / 2) +
                     q_shifted_pochhammer(m, m, qmax).shifted(0, m * (5 * m - 1) / 2) +
                     q_shifted_pochhammer(m, m - 1, qmax).shifted(0, m * (5 * m - 3) / 2);
    total += bracket.shifted(0, 0, sign);
  }
  return total;
}

Series heptagonal_form2(std::size_t qmax) {
  Series total = Series::one(qmax);
  for (std::size_t m = 1; m * (5 * m - 3) / 2 <= qmax; ++m) {
    const Integer sign = m % 2 ? -1 : 1;
    const Series poly = Series::from_terms(
        qmax, {{0, 0, 1}, {3 * m - 1, 0, -1}, {4 * m, 0, -1}, {6 * m - 1, 0, 1}});
    const Series prefix = signed_length_pochhammer(m + 1, static_cast<long long>(m) - 2, qmax);
    total += (prefix * poly).shifted(0, m * (5 * m - 3) / 2, sign);
  }
  return total;
}

}  // namespace

Series heptagonal_rhs(int form, std::size_t qmax) {
  if (form == 1) return heptagonal_form1(qmax);
  if (form == 2) return heptagonal_form2(qmax);
  throw IdentityError("heptagonal form must be 1 or 2");
}

std::pair<Series, Series> remark_transform_identity(std::size_t x, std::size_t y, std::size_t qmax) {
  const Series one = Series::one(qmax);
  const Series qy = Series::from_monomial({0, y, 1}, qmax);
  const Series lhs = (one + Series::from_monomial({1, x, 1}, qmax)) * qy + (one - qy);
  const Series rhs = one + Series::from_monomial({1, x + y, 1}, qmax);
  return {lhs, rhs};
}

}  // namespace qtile
