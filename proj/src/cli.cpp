#include "qtile/cli.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "qtile/checker.hpp"
#include "qtile/identities.hpp"
#include "qtile/series_io.hpp"
#include "qtile/tilings.hpp"

namespace qtile::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::size_t> parse_sequence(const std::string& text, const char* flag) {
  std::vector<std::size_t> out;
  std::stringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    try {
      std::size_t used = 0;
      if (token.empty() || token.front() == '-') throw std::invalid_argument(token);
      out.push_back(std::stoul(token, &used));
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw UsageError(std::string(flag) + " expects comma-separated nonnegative integers, got '" +
                       text + "'");
    }
  }
  return out;
}

Oracle parse_oracle(const std::string& name) {
  if (name == "closed") return Oracle::ClosedForm;
  if (name == "brute") return Oracle::BruteForce;
  throw UsageError("--oracle must be brute or closed");
}

std::size_t effective_cap(std::optional<std::size_t> flag) {
  return flag ? *flag : config_from_env().oracle_cap;
}

void print_reports(const std::vector<VerificationReport>& reports, const std::string& format,
                   std::ostream& out) {
  if (format == "json") {
    if (reports.size() == 1) {
      out << report_to_json(reports.front()).dump() << '\n';
    } else {
      auto arr = nlohmann::json::array();
      for (const auto& r : reports) arr.push_back(report_to_json(r));
      out << arr.dump() << '\n';
    }
  } else if (format == "csv") {
    out << report_csv_header() << '\n';
    for (const auto& r : reports) out << report_to_csv_row(r) << '\n';
  } else {
    for (const auto& r : reports) out << report_to_human(r) << '\n';
  }
}


Series named_series(const std::string& name, std::size_t qmax) {
  if (name == "product") return tiling_product(qmax);
  if (name == "euler-sum") return euler_sum(qmax);
  if (name == "sylvester") return sylvester_rhs(qmax);
  if (name == "epnt") return epnt_rhs(qmax);
  if (name == "heptagonal1") return heptagonal_rhs(1, qmax);
  if (name == "heptagonal2") return heptagonal_rhs(2, qmax);
  if (name.rfind("kl:", 0) == 0) {
    const auto params = parse_sequence(name.substr(3), "--series kl:");
    if (params.size() != 2) throw UsageError("--series kl:K,L needs exactly two integers");
    if (params[0] < 1) throw UsageError("k must be >= 1");
    if (params[1] < 1) throw UsageError("l must be >= 1");
    return kl_rhs(params[0], params[1], qmax);
  }
  throw UsageError("unknown series '" + name + "'");
}

void print_series(const Series& s, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << series_to_json(s).dump() << '\n';
  } else if (format == "human") {
    out << series_to_human(s) << '\n';
  } else {
    out << series_to_csv(s);
  }
}

RankKind kind_from_flags(std::size_t k, std::size_t l, const std::string& x_seq,
                         const std::string& y_seq) {
  if (!x_seq.empty() || !y_seq.empty()) {
    return make_xy(parse_sequence(x_seq, "--x-seq"), parse_sequence(y_seq, "--y-seq"));
  }
  if (k == 1 && l == 1) return ClassicRank{};
  return make_kl(k, l);
}

std::string monomial_text(const Monomial& m) {
  std::ostringstream s;
  s << "z^" << m.z_degree << " q^" << m.q_degree;
  return s.str();
}

}  // namespace

int exit_status(const std::vector<VerificationReport>& reports, std::ostream& err) {
  int code = kOk;
  for (const auto& r : reports) {
    if (!r.equal()) {
      err << "mismatch in " << r.identity << " at q^" << r.mismatch->q << " z^" << r.mismatch->z
          << ": " << to_decimal(r.mismatch->lhs) << " != " << to_decimal(r.mismatch->rhs) << '\n';
      code = kMismatch;
    }
  }
  return code;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"qtile: exact tiling generating functions and q-series identity checks", "qtile"};
  app.require_subcommand(1);

  // verify
  std::string identity, oracle = "closed", format_verify = "human", x_seq, y_seq;
  std::size_t k = 0, l = 0, x = 0, y = 0, qmax = 0;
  int form = 1;
  std::optional<std::size_t> oracle_cap;
  auto* verify_cmd = app.add_subcommand("verify", "verify an identity coefficient-exactly");
  verify_cmd->add_option("--identity", identity,
                         "euler | sylvester | epnt | kl | heptagonal | k1 | transform | xy")
      ->required();
  verify_cmd->add_option("--k", k, "k parameter (kl)");
  verify_cmd->add_option("--l", l, "l parameter (kl, k1)");
  verify_cmd->add_option("--form", form, "heptagonal form 1 or 2");
  verify_cmd->add_option("--x", x, "x exponent (transform)");
  verify_cmd->add_option("--y", y, "y exponent (transform)");
  verify_cmd->add_option("--x-seq", x_seq, "comma-separated x table (xy)");
  verify_cmd->add_option("--y-seq", y_seq, "comma-separated y table (xy)");
  verify_cmd->add_option("--qmax", qmax, "truncation order")->required();
  verify_cmd->add_option("--oracle", oracle, "closed | brute")->check(CLI::IsMember({"closed", "brute"}));
  verify_cmd->add_option("--format", format_verify, "json | csv | human")
      ->check(CLI::IsMember({"json", "csv", "human"}));
  verify_cmd->add_option("--oracle-cap", oracle_cap, "brute-force qmax cap");

  // sweep
  std::size_t k_max = 4, l_max = 4, sweep_qmax = 0;
  std::string sweep_oracle = "closed", format_sweep = "human";
  auto* sweep_cmd = app.add_subcommand("sweep", "verify the (k,l) family over a grid");
  sweep_cmd->add_option("--k-max", k_max, "k ranges over 1..k-max");
  sweep_cmd->add_option("--l-max", l_max, "l ranges over 1..l-max");
  sweep_cmd->add_option("--qmax", sweep_qmax, "truncation order")->required();
  sweep_cmd->add_option("--oracle", sweep_oracle, "closed | brute")->check(CLI::IsMember({"closed", "brute"}));
  sweep_cmd->add_option("--format", format_sweep, "json | csv | human")
      ->check(CLI::IsMember({"json", "csv", "human"}));
  sweep_cmd->add_option("--oracle-cap", oracle_cap, "brute-force qmax cap");

  // coeffs
  std::string series_name, zmode = "sym", format_coeffs = "csv";
  std::size_t coeffs_qmax = 0;
  auto* coeffs_cmd = app.add_subcommand("coeffs", "print a coefficient table");
  coeffs_cmd
      ->add_option("--series", series_name,
                   "product | euler-sum | sylvester | epnt | heptagonal1 | heptagonal2 | kl:K,L")
      ->required();
  coeffs_cmd->add_option("--qmax", coeffs_qmax, "truncation order")->required();
  coeffs_cmd->add_option("--z", zmode, "-1 | 1 | sym")->check(CLI::IsMember({"-1", "1", "sym"}));
  coeffs_cmd->add_option("--format", format_coeffs, "csv | json | human")
      ->check(CLI::IsMember({"json", "csv", "human"}));

  // rank
  std::string tiling_text, format_rank = "human";
  std::size_t rank_k = 1, rank_l = 1;
  bool trace = false;
  auto* rank_cmd = app.add_subcommand("rank", "rank, rank case and b-trace of one tiling");
  rank_cmd->add_option("--tiling", tiling_text, "comma-separated black positions")->required();
  rank_cmd->add_option("--k", rank_k, "k parameter");
  rank_cmd->add_option("--l", rank_l, "l parameter");
  rank_cmd->add_option("--x-seq", x_seq, "comma-separated x table for the (X,Y)-rank");
  rank_cmd->add_option("--y-seq", y_seq, "comma-separated y table for the (X,Y)-rank");
  rank_cmd->add_flag("--trace", trace, "print (m, b(m)) for m = 0..max position + 1");
  rank_cmd->add_option("--format", format_rank, "human | json")->check(CLI::IsMember({"json", "human"}));

  // enumerate
  std::size_t enum_qmax = 0, enum_k = 1, enum_l = 1;
  bool group = false;
  std::string format_enum = "json";
  auto* enum_cmd = app.add_subcommand("enumerate", "list tilings or their rank histogram");
  enum_cmd->add_option("--qmax", enum_qmax, "largest weight q-degree")->required();
  enum_cmd->add_flag("--group-by-rank", group, "emit the rank histogram instead of tilings");
  enum_cmd->add_option("--k", enum_k, "k parameter");
  enum_cmd->add_option("--l", enum_l, "l parameter");
  enum_cmd->add_option("--x-seq", x_seq, "comma-separated x table for the (X,Y)-rank");
  enum_cmd->add_option("--y-seq", y_seq, "comma-separated y table for the (X,Y)-rank");
  enum_cmd->add_option("--format", format_enum, "json | csv | human")
      ->check(CLI::IsMember({"json", "csv", "human"}));
  enum_cmd->add_option("--oracle-cap", oracle_cap, "enumeration qmax cap");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (verify_cmd->parsed()) {
      IdentityId id = IdentityId::of(tag_from_name(identity));
      id.k = id.tag == IdentityTag::KEquals1 ? 1 : k;
      id.l = l;
      id.form = form;
      id.x = x;
      id.y = y;
      if (id.tag == IdentityTag::XYPartition) {
        id.x_seq = parse_sequence(x_seq, "--x-seq");
        id.y_seq = parse_sequence(y_seq, "--y-seq");
      }
      validate(id);
      CheckerConfig config{effective_cap(oracle_cap)};
      std::vector<VerificationReport> reports{verify(id, qmax, parse_oracle(oracle), config)};
      print_reports(reports, format_verify, out);
      return exit_status(reports, err);
    }

    if (sweep_cmd->parsed()) {
      std::vector<std::size_t> ks, ls;
      for (std::size_t i = 1; i <= k_max; ++i) ks.push_back(i);
      for (std::size_t i = 1; i <= l_max; ++i) ls.push_back(i);
      CheckerConfig config{effective_cap(oracle_cap)};
      auto reports = sweep(ks, ls, sweep_qmax, parse_oracle(sweep_oracle), config);
      print_reports(reports, format_sweep, out);
      return exit_status(reports, err);
    }

    if (coeffs_cmd->parsed()) {
      Series s = named_series(series_name, coeffs_qmax);
      if (zmode != "sym") s = s.substitute_z(std::stoi(zmode));
      print_series(s, format_coeffs, out);
      return kOk;
    }

    if (rank_cmd->parsed()) {
      const Tiling t = parse_tiling(tiling_text);
      const RankKind kind = kind_from_flags(rank_k, rank_l, x_seq, y_seq);
      const std::size_t r = rank(t, kind);
      std::optional<RankCase> rc;
      if (!std::holds_alternative<XYRank>(kind) && !t.empty()) rc = rank_case(t, rank_k, rank_l);
      if (format_rank == "json") {
        nlohmann::json j = {{"tiling", t.positions()},
                            {"kind", rank_kind_to_json(kind)},
                            {"weight", {{"z", weight(t).z_degree}, {"q", weight(t).q_degree}}},
                            {"rank", r},
                            {"case", rc ? nlohmann::json{{"id", rc->case_id}, {"offset", rc->offset}}
                                        : nlohmann::json(nullptr)}};
        if (trace) {
          auto rows = nlohmann::json::array();
          for (std::size_t m = 0; m <= t.max_position() + 1; ++m) rows.push_back({m, b_count(t, m)});
          j["trace"] = std::move(rows);
        }
        out << j.dump() << '\n';
      } else {
        out << "weight " << monomial_text(weight(t)) << '\n';
        out << "rank " << r << '\n';
        if (rc) {
          out << "case " << rc->case_id << ' ' << (rc->case_id == 1 ? "i=" : "j=") << rc->offset << '\n';
        } else {
          out << "case none\n";
        }
        if (trace) {
          out << "m,b\n";
          for (std::size_t m = 0; m <= t.max_position() + 1; ++m) out << m << ',' << b_count(t, m) << '\n';
        }
      }
      return kOk;
    }

    if (enum_cmd->parsed()) {
      const std::size_t cap = effective_cap(oracle_cap);
      if (enum_qmax > cap) {
        throw UsageError("qmax " + std::to_string(enum_qmax) + " exceeds enumeration cap " +
                         std::to_string(cap));
      }
      if (group) {
        const RankKind kind = kind_from_flags(enum_k, enum_l, x_seq, y_seq);
        const auto histogram = rank_histogram(enum_qmax, kind);
        if (format_enum == "json") {
          out << histogram_to_json(kind, enum_qmax, histogram).dump() << '\n';
        } else if (format_enum == "csv") {
          out << "rank,q_deg,z_deg,coeff\n";
          for (const auto& [m, s] : histogram) {
            for (const auto& term : s.terms()) {
              out << m << ',' << term.q << ',' << term.z << ',' << to_decimal(term.c) << '\n';
            }
          }
        } else {
          for (const auto& [m, s] : histogram) out << "rank " << m << ": " << series_to_human(s) << '\n';
        }
        return kOk;
      }
      if (format_enum == "json") {
        auto tilings = nlohmann::json::array();
        for_each_tiling(enum_qmax, [&](const Tiling& t) { tilings.push_back(t.positions()); });
        out << nlohmann::json{{"qmax", enum_qmax}, {"count", tilings.size()}, {"tilings", tilings}}.dump()
            << '\n';
      } else if (format_enum == "csv") {
        out << "tiling,z_deg,q_deg\n";
        for_each_tiling(enum_qmax, [&](const Tiling& t) {
          const auto w = weight(t);
          out << '"' << format_tiling(t) << "\"," << w.z_degree << ',' << w.q_degree << '\n';
        });
      } else {
        for_each_tiling(enum_qmax, [&](const Tiling& t) {
          out << '{' << format_tiling(t) << "}  " << monomial_text(weight(t)) << '\n';
        });
      }
      return kOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::runtime_error& e) {
    // Identity, tiling, checker and series errors are all validation failures here.
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace qtile::cli
