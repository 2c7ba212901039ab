#include "qtile/series.hpp"

#include <algorithm>
#include <cctype>

namespace qtile {

namespace {

void require_same_order(const Series& a, const Series& b) {
  if (a.qmax() != b.qmax()) {
    throw SeriesError("truncation mismatch: qmax " + std::to_string(a.qmax()) + " vs " +
                      std::to_string(b.qmax()));
  }
}

bool term_less(const Term& a, const Term& b) {
  return a.q != b.q ? a.q < b.q : a.z < b.z;
}

// Largest z-degree reachable below q^(qmax+1) by a product of distinct (1 + z q^i).
std::size_t distinct_part_z_bound(std::size_t qmax) {
  std::size_t z = 0;
  while ((z + 1) * (z + 2) / 2 <= qmax) ++z;
  return z;
}

}  // namespace

// DenseAccumulator

DenseAccumulator::DenseAccumulator(std::size_t qmax, std::size_t z_capacity)
    : qmax_(qmax), zcap_(std::max<std::size_t>(z_capacity, 1)), cells_((qmax + 1) * zcap_) {}

void DenseAccumulator::reserve_z(std::size_t zcap) {
  if (zcap <= zcap_) return;
  std::vector<Integer> grown((qmax_ + 1) * zcap);
  for (std::size_t q = 0; q <= qmax_; ++q) {
    for (std::size_t z = 0; z < zcap_; ++z) {
      grown[q * zcap + z] = std::move(cells_[q * zcap_ + z]);
    }
  }
  cells_ = std::move(grown);
  zcap_ = zcap;
}

Integer& DenseAccumulator::at(std::size_t q, std::size_t z) { return cells_[q * zcap_ + z]; }

const Integer& DenseAccumulator::at(std::size_t q, std::size_t z) const {
  return cells_[q * zcap_ + z];
}

void DenseAccumulator::add(std::size_t q, std::size_t z, const Integer& c) {
  if (q > qmax_) return;
  if (z >= zcap_) reserve_z(std::max(z + 1, 2 * zcap_));
  at(q, z) += c;
}

void DenseAccumulator::add(const Series& s) {
  if (s.qmax() != qmax_) {
    throw SeriesError("truncation mismatch: qmax " + std::to_string(s.qmax()) + " vs " +
                      std::to_string(qmax_));
  }
  if (!s.is_zero()) reserve_z(s.max_z_degree() + 1);
  for (const auto& t : s.terms()) at(t.q, t.z) += t.c;
}

Series DenseAccumulator::to_series() const {
  std::vector<Term> out;
  for (std::size_t q = 0; q <= qmax_; ++q) {
    for (std::size_t z = 0; z < zcap_; ++z) {
      const auto& c = at(q, z);
      if (!c.is_zero()) out.push_back(Term{q, z, c});
    }
  }
  return Series(qmax_, std::move(out));
}

// Series

Series Series::zero(std::size_t qmax) { return Series(qmax, {}); }

Series Series::one(std::size_t qmax) { return Series(qmax, {Term{0, 0, 1}}); }

Series Series::from_monomial(const Monomial& m, std::size_t qmax) {
  if (m.q_degree > qmax || m.coefficient.is_zero()) return zero(qmax);
  return Series(qmax, {Term{m.q_degree, m.z_degree, m.coefficient}});
}

Series Series::from_terms(std::size_t qmax, std::vector<Term> terms) {
  std::erase_if(terms, [qmax](const Term& t) { return t.q > qmax; });
  std::sort(terms.begin(), terms.end(), term_less);
  std::vector<Term> merged;
  merged.reserve(terms.size());
  for (auto& t : terms) {
    if (!merged.empty() && merged.back().q == t.q && merged.back().z == t.z) {
      merged.back().c += t.c;
    } else {
      merged.push_back(std::move(t));
    }
  }
  std::erase_if(merged, [](const Term& t) { return t.c.is_zero(); });
  return Series(qmax, std::move(merged));
}

std::size_t Series::max_z_degree() const noexcept {
  std::size_t z = 0;
  for (const auto& t : terms_) z = std::max(z, t.z);
  return z;
}

Integer Series::coefficient(std::size_t q, std::size_t z) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{q, z, 0}, term_less);
  if (it != terms_.end() && it->q == q && it->z == z) return it->c;
  return 0;
}

Series Series::truncated(std::size_t new_qmax) const {
  if (new_qmax > qmax_) {
    throw SeriesError("cannot extend truncation from qmax " + std::to_string(qmax_) + " to " +
                      std::to_string(new_qmax));
  }
  std::vector<Term> kept;
  for (const auto& t : terms_) {
    if (t.q > new_qmax) break;
    kept.push_back(t);
  }
  return Series(new_qmax, std::move(kept));
}

Series Series::shifted(std::size_t z_shift, std::size_t q_shift, const Integer& coeff) const {
  if (coeff.is_zero() || q_shift > qmax_) return zero(qmax_);
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.q > qmax_ - q_shift) break;
    out.push_back(Term{t.q + q_shift, t.z + z_shift, t.c * coeff});
  }
  return Series(qmax_, std::move(out));
}

Series Series::substitute_z(int v) const {
  if (v != 1 && v != -1) throw SeriesError("substitute_z accepts only -1 or +1");
  std::vector<Term> out;
  for (const auto& t : terms_) {
    Integer c = (v == -1 && t.z % 2 == 1) ? Integer(-t.c) : t.c;
    if (!out.empty() && out.back().q == t.q) {
      out.back().c += c;
    } else {
      out.push_back(Term{t.q, 0, std::move(c)});
    }
  }
  std::erase_if(out, [](const Term& t) { return t.c.is_zero(); });
  return Series(qmax_, std::move(out));
}

bool Series::is_triangular() const noexcept {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.z <= t.q; });
}

Series operator+(const Series& a, const Series& b) {
  require_same_order(a, b);
  std::vector<Term> out;
  out.reserve(a.terms_.size() + b.terms_.size());
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  while (ia != a.terms_.end() || ib != b.terms_.end()) {
    if (ib == b.terms_.end() || (ia != a.terms_.end() && term_less(*ia, *ib))) {
      out.push_back(*ia++);
    } else if (ia == a.terms_.end() || term_less(*ib, *ia)) {
      out.push_back(*ib++);
    } else {
      Integer c = ia->c + ib->c;
      if (!c.is_zero()) out.push_back(Term{ia->q, ia->z, std::move(c)});
      ++ia;
      ++ib;
    }
  }
  return Series(a.qmax_, std::move(out));
}

Series operator-(const Series& a) {
  std::vector<Term> out(a.terms_);
  for (auto& t : out) t.c = -t.c;
  return Series(a.qmax_, std::move(out));
}

Series operator-(const Series& a, const Series& b) { return a + (-b); }

Series& Series::operator+=(const Series& other) {
  *this = *this + other;
  return *this;
}

Series operator*(const Series& a, const Series& b) {
  require_same_order(a, b);
  if (a.is_zero() || b.is_zero()) return Series::zero(a.qmax_);
  const std::size_t qmax = a.qmax_;
  DenseAccumulator acc(qmax, a.max_z_degree() + b.max_z_degree() + 1);
  for (const auto& ta : a.terms_) {
    const std::size_t room = qmax - ta.q;
    for (const auto& tb : b.terms_) {
      if (tb.q > room) break;
      acc.at(ta.q + tb.q, ta.z + tb.z) += ta.c * tb.c;
    }
  }
  return acc.to_series();
}

Series add(const Series& a, const Series& b) { return a + b; }
Series mul(const Series& a, const Series& b) { return a * b; }
Series negate(const Series& a) { return -a; }

Series pochhammer_neg_zq(std::size_t n, std::size_t qmax) {
  const std::size_t factors = std::min(n, qmax);
  const std::size_t zcap = std::min(factors, distinct_part_z_bound(qmax)) + 1;
  DenseAccumulator acc(qmax, zcap);
  acc.at(0, 0) = 1;
  for (std::size_t i = 1; i <= factors; ++i) {
    // Multiply in place by (1 + z q^i); descending order reads only old values.
    for (std::size_t q = qmax; q >= i; --q) {
      for (std::size_t z = zcap - 1; z >= 1; --z) {
        const auto& src = acc.at(q - i, z - 1);
        if (!src.is_zero()) acc.at(q, z) += src;
      }
    }
  }
  return acc.to_series();
}

Series q_shifted_pochhammer(std::size_t first, std::size_t n, std::size_t qmax) {
  if (n > 0 && first == 0) throw SeriesError("q-shifted Pochhammer needs first exponent >= 1");
  std::vector<Integer> c(qmax + 1);
  c[0] = 1;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t e = first + i;
    if (e > qmax) break;
    for (std::size_t q = qmax; q >= e; --q) c[q] -= c[q - e];
  }
  std::vector<Term> out;
  for (std::size_t q = 0; q <= qmax; ++q) {
    if (!c[q].is_zero()) out.push_back(Term{q, 0, std::move(c[q])});
  }
  return Series::from_terms(qmax, std::move(out));
}

Series q_pochhammer(std::size_t n, std::size_t qmax) { return q_shifted_pochhammer(1, n, qmax); }

Series inv_q_shifted_pochhammer(std::size_t first, std::size_t n, std::size_t qmax) {
  if (n > 0 && first == 0) throw SeriesError("inverse q-shifted Pochhammer needs first exponent >= 1");
  std::vector<Integer> c(qmax + 1);
  c[0] = 1;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t e = first + i;
    if (e > qmax) break;
    for (std::size_t q = e; q <= qmax; ++q) c[q] += c[q - e];
  }
  std::vector<Term> out;
  for (std::size_t q = 0; q <= qmax; ++q) {
    if (!c[q].is_zero()) out.push_back(Term{q, 0, std::move(c[q])});
  }
  return Series::from_terms(qmax, std::move(out));
}

Series inv_q_pochhammer(std::size_t n, std::size_t qmax) { return inv_q_shifted_pochhammer(1, n, qmax); }

std::string to_decimal(const Integer& v) { return v.str(); }

Integer parse_integer(const std::string& text) {
  std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
  if (start == text.size() ||
      !std::all_of(text.begin() + static_cast<std::ptrdiff_t>(start), text.end(),
                   [](unsigned char ch) { return std::isdigit(ch) != 0; })) {
    throw SeriesError("not a decimal integer: '" + text + "'");
  }
  Integer v(text.substr(start));
  return text[0] == '-' ? Integer(-v) : v;
}

}  // namespace qtile
