#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qtile/series.hpp"

namespace qtile {

class IdentityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class IdentityTag {
  EulerProductVsSum,
  Sylvester,
  EPNT,
  KL,
  Heptagonal,
  KEquals1,
  RemarkTransform,
  XYPartition,
};

/// A named identity with its parameters. Unused parameters stay at zero/empty.
struct IdentityId {
  IdentityTag tag = IdentityTag::EulerProductVsSum;
  std::size_t k = 0;
  std::size_t l = 0;
  int form = 0;
  std::size_t x = 0;
  std::size_t y = 0;
  std::vector<std::size_t> x_seq;
  std::vector<std::size_t> y_seq;

  static IdentityId of(IdentityTag tag) {
    IdentityId id;
    id.tag = tag;
    return id;
  }
  static IdentityId euler() { return of(IdentityTag::EulerProductVsSum); }
  static IdentityId sylvester() { return of(IdentityTag::Sylvester); }
  static IdentityId epnt() { return of(IdentityTag::EPNT); }
  static IdentityId kl(std::size_t k, std::size_t l);
  static IdentityId heptagonal(int form);
  static IdentityId k_equals_1(std::size_t l);
  static IdentityId remark_transform(std::size_t x, std::size_t y);
  static IdentityId xy(std::vector<std::size_t> x_seq, std::vector<std::size_t> y_seq);

  friend bool operator==(const IdentityId&, const IdentityId&) = default;
};

/// Throws IdentityError when a parameter is out of range.
void validate(const IdentityId& id);

std::string tag_name(IdentityTag tag);
IdentityTag tag_from_name(const std::string& name);
std::string label(const IdentityId& id);

/// {"tag": "kl", "params": {"k": 4, "l": 3}}
nlohmann::json identity_to_json(const IdentityId& id);
IdentityId identity_from_json(const nlohmann::json& j);

/// (-zq;q)_infinity truncated: the generating function of all tilings.
Series tiling_product(std::size_t qmax);

/// sum_m z^m q^(m(m+1)/2) / (q;q)_m
Series euler_sum(std::size_t qmax);

/// One summand of the (k,l)-rank decomposition: tilings of (k,l)-rank m whose
/// b-path leaves the rank-m region through the given case and offset.
struct CaseTermSpec {
  std::size_t k = 1;
  std::size_t l = 1;
  std::size_t m = 1;
  int case_id = 1;
  std::size_t offset = 0;
};

void validate(const CaseTermSpec& spec);

/// Case-2 q-exponent choice. Standard is (lm-l+1)((2k+l)m-2j-l)/2; PlusOne is
/// the variant (lm-l+1)(2km-2j+lm-l+1)/2, which disagrees with enumeration.
enum class Case2Exponent { Standard, PlusOne };

/// Returns 2 * exponent so callers can detect a non-integral exponent.
std::size_t case_exponent_twice(const CaseTermSpec& spec, Case2Exponent variant = Case2Exponent::Standard);

/// Throws IdentityError on invalid offsets or when the exponent is not an integer.
Series kl_case_gf(const CaseTermSpec& spec, std::size_t qmax,
                  Case2Exponent variant = Case2Exponent::Standard);

/// Closed-form GF of all tilings with (k,l)-rank exactly m (1 when m = 0).
Series kl_rank_gf(std::size_t k, std::size_t l, std::size_t m, std::size_t qmax);

/// 1 + sum over m >= 1 of every case term.
Series kl_rhs(std::size_t k, std::size_t l, std::size_t qmax,
              Case2Exponent variant = Case2Exponent::Standard);

/// The k = 1 specialization written out with its own exponents.
Series kl_rhs_k1(std::size_t l, std::size_t qmax);

/// 1 + sum_m [(-zq;q)_{m-1}/(q;q)_{m-1} z^m q^(m(3m-1)/2) + (-zq;q)_m/(q;q)_m z^m q^(m(3m+1)/2)].
/// Also builds the compact form and throws IdentityError if the two disagree.
Series sylvester_rhs(std::size_t qmax);

/// The expanded form alone, without the cross-check against the compact form.
Series sylvester_rhs_expanded(std::size_t qmax);

/// sum_{m>=0} (-zq;q)_m/(q;q)_m z^m q^(m(3m+1)/2) (1 + z q^(2m+1))
Series sylvester_rhs_compact(std::size_t qmax);

/// 1 + sum_m (-1)^m q^(m(3m-1)/2) (1 + q^m)
Series epnt_rhs(std::size_t qmax);

/// form 1: three-term heptagonal expansion; form 2: the factored single-term form.
Series heptagonal_rhs(int form, std::size_t qmax);

/// Both sides of (1 + z q^x) q^y + (1 - q^y) = 1 + z q^(x+y).
std::pair<Series, Series> remark_transform_identity(std::size_t x, std::size_t y, std::size_t qmax);

/// Exponents m(3m -+ 1)/2 up to qmax with their signs (-1)^m, ascending.
std::vector<std::pair<std::size_t, int>> generalized_pentagonal(std::size_t qmax);

}  // namespace qtile
