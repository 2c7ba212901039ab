#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qtile {

/// Exact coefficient type. Arbitrary precision, so coefficient growth never wraps.
using Integer = boost::multiprecision::cpp_int;

class SeriesError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A single weight z^z_degree q^q_degree with an exact coefficient.
struct Monomial {
  std::size_t z_degree = 0;
  std::size_t q_degree = 0;
  Integer coefficient = 1;
};

/// One stored coefficient of a series.
struct Term {
  std::size_t q = 0;
  std::size_t z = 0;
  Integer c;

  friend bool operator==(const Term&, const Term&) = default;
};

/**
 * Truncated formal power series in q whose coefficients are polynomials in z.
 *
 * The value is stored modulo q^(qmax+1) as a sparse list of nonzero terms
 * sorted by (q, z). Every operation returns a canonical series: no zero
 * coefficient is stored and no term has q > qmax. Values are immutable.
 */
class Series {
 public:
  Series() = default;

  static Series zero(std::size_t qmax);
  static Series one(std::size_t qmax);
  /// Drops the term when its q-degree exceeds qmax.
  static Series from_monomial(const Monomial& m, std::size_t qmax);
  /// Sorts, merges duplicate (q, z) entries, drops zeros and anything above qmax.
  static Series from_terms(std::size_t qmax, std::vector<Term> terms);

  std::size_t qmax() const noexcept { return qmax_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  std::size_t max_z_degree() const noexcept;

  Integer coefficient(std::size_t q, std::size_t z) const;

  /// Re-truncates to a smaller order. Requires new_qmax <= qmax().
  Series truncated(std::size_t new_qmax) const;

  /// Multiplies by z^z_shift q^q_shift times coeff, discarding terms pushed past qmax.
  Series shifted(std::size_t z_shift, std::size_t q_shift, const Integer& coeff = 1) const;

  /// Evaluates z at v (v must be -1 or +1), leaving a series in q alone.
  Series substitute_z(int v) const;

  /// True when every term satisfies z <= q.
  bool is_triangular() const noexcept;

  friend Series operator+(const Series& a, const Series& b);
  friend Series operator-(const Series& a, const Series& b);
  friend Series operator*(const Series& a, const Series& b);
  friend Series operator-(const Series& a);
  Series& operator+=(const Series& other);

  friend bool operator==(const Series& a, const Series& b) = default;

 private:
  Series(std::size_t qmax, std::vector<Term> canonical_terms)
      : qmax_(qmax), terms_(std::move(canonical_terms)) {}

  friend class DenseAccumulator;

  std::size_t qmax_ = 0;
  std::vector<Term> terms_;
};

/**
 * Row-major (q, z) grid of coefficients used as scratch space while building
 * a series. Grows in z on demand; q is fixed at construction.
 */
class DenseAccumulator {
 public:
  explicit DenseAccumulator(std::size_t qmax, std::size_t z_capacity = 1);

  std::size_t qmax() const noexcept { return qmax_; }
  void add(std::size_t q, std::size_t z, const Integer& c);
  void add(const Series& s);
  Integer& at(std::size_t q, std::size_t z);
  const Integer& at(std::size_t q, std::size_t z) const;
  std::size_t z_capacity() const noexcept { return zcap_; }
  void reserve_z(std::size_t zcap);

  Series to_series() const;

 private:
  std::size_t qmax_;
  std::size_t zcap_;
  std::vector<Integer> cells_;
};

Series add(const Series& a, const Series& b);
Series mul(const Series& a, const Series& b);
Series negate(const Series& a);

/// (-zq;q)_n = prod_{i=1..n} (1 + z q^i) modulo q^(qmax+1).
Series pochhammer_neg_zq(std::size_t n, std::size_t qmax);

/// (q;q)_n = prod_{j=1..n} (1 - q^j) modulo q^(qmax+1).
Series q_pochhammer(std::size_t n, std::size_t qmax);

/// 1/(q;q)_n as the product of geometric series sum_t q^(jt), j = 1..n.
Series inv_q_pochhammer(std::size_t n, std::size_t qmax);

/// prod_{i=0..n-1} (1 - q^(first+i)); first must be >= 1 when n > 0.
Series q_shifted_pochhammer(std::size_t first, std::size_t n, std::size_t qmax);

/// 1 / prod_{i=0..n-1} (1 - q^(first+i)) as a product of geometric series; first >= 1.
Series inv_q_shifted_pochhammer(std::size_t first, std::size_t n, std::size_t qmax);

std::string to_decimal(const Integer& v);
Integer parse_integer(const std::string& text);

}  // namespace qtile
