#include "qtile/series_io.hpp"

#include <sstream>
#include <vector>

namespace qtile {

nlohmann::json series_to_json(const Series& s) {
  auto terms = nlohmann::json::array();
  for (const auto& t : s.terms()) {
    terms.push_back({{"q", t.q}, {"z", t.z}, {"c", to_decimal(t.c)}});
  }
  return {{"qmax", s.qmax()}, {"terms", std::move(terms)}};
}

Series series_from_json(const nlohmann::json& j) {
  try {
    const auto qmax = j.at("qmax").get<std::size_t>();
    std::vector<Term> terms;
    for (const auto& t : j.at("terms")) {
      const auto& c = t.at("c");
      Integer value = c.is_string() ? parse_integer(c.get<std::string>()) : Integer(c.get<long long>());
      terms.push_back(Term{t.at("q").get<std::size_t>(), t.at("z").get<std::size_t>(), value});
    }
    return Series::from_terms(qmax, std::move(terms));
  } catch (const nlohmann::json::exception& e) {
    throw SeriesError(std::string("malformed series JSON: ") + e.what());
  }
}

std::string series_to_csv(const Series& s) {
  std::ostringstream out;
  out << "q_deg,z_deg,coeff\n";
  for (const auto& t : s.terms()) out << t.q << ',' << t.z << ',' << to_decimal(t.c) << '\n';
  return out.str();
}

Series series_from_csv(const std::string& text, std::size_t qmax) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != "q_deg,z_deg,coeff") {
    throw SeriesError("series CSV must start with header q_deg,z_deg,coeff");
  }
  std::vector<Term> terms;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string q, z, c;
    if (!std::getline(row, q, ',') || !std::getline(row, z, ',') || !std::getline(row, c)) {
      throw SeriesError("malformed series CSV row: '" + line + "'");
    }
    const Integer qi = parse_integer(q);
    const Integer zi = parse_integer(z);
    if (qi < 0 || zi < 0) throw SeriesError("negative degree in CSV row: '" + line + "'");
    terms.push_back(Term{qi.convert_to<std::size_t>(), zi.convert_to<std::size_t>(), parse_integer(c)});
  }
  return Series::from_terms(qmax, std::move(terms));
}

namespace {

std::string power(const char* var, std::size_t e) {
  if (e == 0) return "";
  if (e == 1) return var;
  return std::string(var) + "^" + std::to_string(e);
}

// A coefficient in front of a (possibly empty) monomial string.
std::string scaled(const Integer& c, const std::string& mono) {
  if (mono.empty()) return to_decimal(c);
  if (c == 1) return mono;
  if (c == -1) return "-" + mono;
  return to_decimal(c) + " " + mono;
}

// Sum of signed pieces joined with " + " / " - ".
std::string join_signed(const std::vector<std::string>& pieces) {
  std::string out;
  for (const auto& p : pieces) {
    if (out.empty()) {
      out = p;
    } else if (p.front() == '-') {
      out += " - " + p.substr(1);
    } else {
      out += " + " + p;
    }
  }
  return out;
}

}  // namespace

std::string series_to_human(const Series& s) {
  if (s.is_zero()) return "0";
  std::vector<std::string> pieces;
  auto terms = s.terms();
  std::size_t i = 0;
  while (i < terms.size()) {
    std::size_t end = i;
    while (end < terms.size() && terms[end].q == terms[i].q) ++end;
    const std::string qpart = power("q", terms[i].q);
    if (end - i == 1) {
      std::string mono = power("z", terms[i].z);
      if (!mono.empty() && !qpart.empty()) mono += " ";
      pieces.push_back(scaled(terms[i].c, mono + qpart));
    } else {
      std::vector<std::string> zpieces;
      for (std::size_t k = i; k < end; ++k) zpieces.push_back(scaled(terms[k].c, power("z", terms[k].z)));
      std::string group = "(" + join_signed(zpieces) + ")";
      pieces.push_back(qpart.empty() ? group : group + " " + qpart);
    }
    i = end;
  }
  return join_signed(pieces);
}

}  // namespace qtile
