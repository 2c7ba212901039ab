#include "qtile/checker.hpp"

#include <chrono>
#include <cstdlib>
#include <future>
#include <iomanip>
#include <sstream>

#include "qtile/tilings.hpp"

namespace qtile {

std::string oracle_name(Oracle o) {
  switch (o) {
    case Oracle::None:
      return "none";
    case Oracle::BruteForce:
      return "brute-force";
    case Oracle::ClosedForm:
      return "closed-form";
  }
  return "none";
}

nlohmann::json report_to_json(const VerificationReport& r) {
  nlohmann::json mismatch = nullptr;
  if (r.mismatch) {
    mismatch = {{"q", r.mismatch->q},
                {"z", r.mismatch->z},
                {"lhs", to_decimal(r.mismatch->lhs)},
                {"rhs", to_decimal(r.mismatch->rhs)}};
  }
  return {{"identity", r.identity_id ? identity_to_json(*r.identity_id) : nlohmann::json(r.identity)},
          {"qmax", r.qmax},
          {"status", r.equal() ? "equal" : "mismatch"},
          {"mismatch", std::move(mismatch)},
          {"elapsed_ms", r.elapsed_ms},
          {"oracle", oracle_name(r.oracle)}};
}

std::string report_csv_header() { return "identity,qmax,status,q,z,lhs,rhs,elapsed_ms,oracle"; }

std::string report_to_csv_row(const VerificationReport& r) {
  std::ostringstream out;
  out << '"' << r.identity << "\"," << r.qmax << ',' << (r.equal() ? "equal" : "mismatch") << ',';
  if (r.mismatch) {
    out << r.mismatch->q << ',' << r.mismatch->z << ',' << to_decimal(r.mismatch->lhs) << ','
        << to_decimal(r.mismatch->rhs);
  } else {
    out << ",,,";
  }
  out << ',' << std::fixed << std::setprecision(3) << r.elapsed_ms << ',' << oracle_name(r.oracle);
  return out.str();
}

std::string report_to_human(const VerificationReport& r) {
  std::ostringstream out;
  out << r.identity << " qmax=" << r.qmax << ": ";
  if (r.equal()) {
    out << "equal";
  } else {
    out << "MISMATCH at q^" << r.mismatch->q << " z^" << r.mismatch->z << ": lhs "
        << to_decimal(r.mismatch->lhs) << " vs rhs " << to_decimal(r.mismatch->rhs);
  }
  out << " (oracle " << oracle_name(r.oracle) << ", " << std::fixed << std::setprecision(1)
      << r.elapsed_ms << " ms)";
  return out.str();
}

VerificationReport compare(const Series& a, const Series& b, std::string label) {
  if (a.qmax() != b.qmax()) {
    throw SeriesError("truncation mismatch: qmax " + std::to_string(a.qmax()) + " vs " +
                      std::to_string(b.qmax()));
  }
  VerificationReport report;
  report.identity = std::move(label);
  report.qmax = a.qmax();
  auto ta = a.terms();
  auto tb = b.terms();
  std::size_t i = 0, j = 0;
  while (i < ta.size() || j < tb.size()) {
    const bool take_a = j == tb.size() || (i < ta.size() && (ta[i].q != tb[j].q ? ta[i].q < tb[j].q
                                                                                 : ta[i].z < tb[j].z));
    const bool take_b = i == ta.size() || (j < tb.size() && (tb[j].q != ta[i].q ? tb[j].q < ta[i].q
                                                                                 : tb[j].z < ta[i].z));
    if (take_a) {
      report.mismatch = Mismatch{ta[i].q, ta[i].z, ta[i].c, 0};
      return report;
    }
    if (take_b) {
      report.mismatch = Mismatch{tb[j].q, tb[j].z, 0, tb[j].c};
      return report;
    }
    if (ta[i].c != tb[j].c) {
      report.mismatch = Mismatch{ta[i].q, ta[i].z, ta[i].c, tb[j].c};
      return report;
    }
    ++i;
    ++j;
  }
  return report;
}

CheckerConfig config_from_env() {
  CheckerConfig config;
  if (const char* cap = std::getenv("QTILE_ORACLE_CAP")) {
    try {
      std::size_t used = 0;
      const std::string text(cap);
      const unsigned long value = std::stoul(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      config.oracle_cap = value;
    } catch (const std::exception&) {
      throw CheckerError(std::string("QTILE_ORACLE_CAP is not a nonnegative integer: '") + cap + "'");
    }
  }
  return config;
}

namespace {

// Brute-force comparison rank by rank, after the total has already matched.
std::optional<VerificationReport> per_rank_mismatch(std::size_t k, std::size_t l, std::size_t qmax,
                                                    const std::string& name) {
  const auto histogram = rank_histogram(qmax, KLRank{k, l});
  std::size_t last = histogram.empty() ? 0 : histogram.rbegin()->first;
  for (std::size_t m = 0; m <= last + 1; ++m) {
    auto it = histogram.find(m);
    const Series brute = it == histogram.end() ? Series::zero(qmax) : it->second;
    auto r = compare(kl_rank_gf(k, l, m, qmax), brute, name + " rank " + std::to_string(m));
    if (!r.equal()) return r;
  }
  return std::nullopt;
}

std::pair<std::size_t, std::size_t> rank_params(const IdentityId& id) {
  switch (id.tag) {
    case IdentityTag::Sylvester:
      return {1, 1};
    case IdentityTag::KL:
      return {id.k, id.l};
    case IdentityTag::KEquals1:
      return {1, id.l};
    default:
      return {0, 0};
  }
}

Series closed_side(const IdentityId& id, std::size_t qmax) {
  switch (id.tag) {
    case IdentityTag::EulerProductVsSum:
      return euler_sum(qmax);
    case IdentityTag::Sylvester:
      return sylvester_rhs_expanded(qmax);
    case IdentityTag::EPNT:
      return epnt_rhs(qmax);
    case IdentityTag::KL:
      return kl_rhs(id.k, id.l, qmax);
    case IdentityTag::Heptagonal:
      return heptagonal_rhs(id.form, qmax);
    case IdentityTag::KEquals1:
      return kl_rhs_k1(id.l, qmax);
    default:
      throw CheckerError("identity " + label(id) + " has no single closed side");
  }
}

bool at_minus_one(const IdentityId& id) {
  return id.tag == IdentityTag::EPNT || id.tag == IdentityTag::Heptagonal;
}

VerificationReport run(const IdentityId& id, std::size_t qmax, Oracle against,
                       const CheckerConfig& config) {
  const std::string name = label(id);
  auto require_cap = [&] {
    if (qmax > config.oracle_cap) {
      throw CheckerError("qmax " + std::to_string(qmax) + " exceeds brute-force oracle cap " +
                         std::to_string(config.oracle_cap));
    }
  };

  if (id.tag == IdentityTag::RemarkTransform) {
    if (against == Oracle::BruteForce) throw CheckerError("transform identity has no brute-force oracle");
    auto [lhs, rhs] = remark_transform_identity(id.x, id.y, qmax);
    auto r = compare(lhs, rhs, name);
    r.oracle = Oracle::ClosedForm;
    return r;
  }

  if (id.tag == IdentityTag::XYPartition) {
    require_cap();
    const auto histogram = rank_histogram(qmax, XYRank{id.x_seq, id.y_seq});
    DenseAccumulator sum(qmax);
    for (const auto& [m, s] : histogram) sum.add(s);
    auto r = compare(sum.to_series(), brute_gf(qmax), name);
    r.oracle = Oracle::BruteForce;
    return r;
  }

  Series closed = closed_side(id, qmax);
  if (against == Oracle::ClosedForm) {
    Series product = tiling_product(qmax);
    if (at_minus_one(id)) product = product.substitute_z(-1);
    auto r = compare(closed, product, name);
    if (r.equal() && id.tag == IdentityTag::Sylvester) {
      r = compare(closed, sylvester_rhs_compact(qmax), name + " compact form");
    }
    r.oracle = Oracle::ClosedForm;
    return r;
  }

  require_cap();
  Series brute = brute_gf(qmax);
  if (at_minus_one(id)) brute = brute.substitute_z(-1);
  auto r = compare(closed, brute, name);
  r.oracle = Oracle::BruteForce;
  if (!r.equal()) return r;
  if (auto [k, l] = rank_params(id); k > 0) {
    if (auto refined = per_rank_mismatch(k, l, qmax, name)) {
      refined->oracle = Oracle::BruteForce;
      return *refined;
    }
  }
  return r;
}

}  // namespace

VerificationReport verify(const IdentityId& id, std::size_t qmax, Oracle against,
                          const CheckerConfig& config) {
  validate(id);
  if (against == Oracle::None) throw CheckerError("verify needs an oracle: closed-form or brute-force");
  const auto start = std::chrono::steady_clock::now();
  VerificationReport r = run(id, qmax, against, config);
  r.identity = label(id);
  r.identity_id = id;
  r.qmax = qmax;
  r.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<VerificationReport> sweep(const std::vector<std::size_t>& k_range,
                                      const std::vector<std::size_t>& l_range, std::size_t qmax,
                                      Oracle against, const CheckerConfig& config) {
  std::vector<IdentityId> cells;
  for (auto k : k_range) {
    for (auto l : l_range) {
      cells.push_back(IdentityId::kl(k, l));
      validate(cells.back());
    }
  }
  if (against == Oracle::BruteForce && !cells.empty() && qmax > config.oracle_cap) {
    throw CheckerError("qmax " + std::to_string(qmax) + " exceeds brute-force oracle cap " +
                       std::to_string(config.oracle_cap));
  }
  std::vector<std::future<VerificationReport>> pending;
  pending.reserve(cells.size());
  for (const auto& id : cells) {
    pending.push_back(std::async(std::launch::async, [id, qmax, against, config] {
      return verify(id, qmax, against, config);
    }));
  }
  std::vector<VerificationReport> out;
  out.reserve(pending.size());
  for (auto& f : pending) out.push_back(f.get());
  return out;
}

}  // namespace qtile
