#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace partasym {

enum class Family { nsp, basic, colored3, planestrict, prings, concave };

/// One of the six generating functions, each written as ∏_{d≥1} (1 - x^d)^{-e_d}:
///   nsp(r)       parts ≥ r                          e_d = [d ≥ r]
///   basic        ∏ (1+x^j)/(1-x^j)                  e_d = 2 (d odd), 1 (d even)
///   colored3     ∏ (1-x^{9j})³/((1-x^{3j})(1-x^j)³) e_d = 3 + [3|d] - 3[9|d]
///   planestrict  ∏ (1-x^j)^{-⌊(j+1)/2⌋}
///   prings       ∏_{j,k} (1-x^{jk²})^{-1}            e_d = #{k : k² | d}
///   concave      parts are triangular numbers       e_d = [d = j(j+1)/2]
struct FamilySpec {
  Family family = Family::basic;
  int r = 0;  // nsp only

  static FamilySpec nsp(int r);
  static FamilySpec of(Family f);
  /// Throws InvalidArgument for an unknown name, a missing/invalid r for nsp, or an r
  /// supplied for any other family.
  static FamilySpec parse(std::string_view name, std::optional<int> r);

  std::string name() const;
  /// "r=12" for nsp, "-" otherwise. Used in cache headers and reports.
  std::string params() const;
  /// Exponent e_d of the factor (1 - x^d)^{-e_d}.
  long exponent(long d) const;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
  friend auto operator<=>(const FamilySpec&, const FamilySpec&) = default;
};

std::string_view family_name(Family f);
std::optional<Family> parse_family_name(std::string_view name);

/// #{k ≥ 1 : k² | m} by scanning k.
long square_divisor_count(long m);
/// Same count by scanning all divisors of m and keeping the perfect squares.
long square_divisor_count_by_divisors(long m);

bool is_triangular(long m);

}  // namespace partasym
