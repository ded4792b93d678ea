#include "partasym/family.hpp"

#include <array>
#include <cmath>

#include "partasym/errors.hpp"

namespace partasym {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 6> kNames{{
    {Family::nsp, "nsp"},
    {Family::basic, "basic"},
    {Family::colored3, "colored3"},
    {Family::planestrict, "planestrict"},
    {Family::prings, "prings"},
    {Family::concave, "concave"},
}};

bool is_square(long m) {
  if (m < 0) return false;
  auto s = static_cast<long>(std::sqrt(static_cast<double>(m)));
  while (s * s > m) --s;
  while ((s + 1) * (s + 1) <= m) ++s;
  return s * s == m;
}

}  // namespace

std::string_view family_name(Family f) {
  for (const auto& [fam, name] : kNames) {
    if (fam == f) return name;
  }
  return "?";
}

std::optional<Family> parse_family_name(std::string_view name) {
  for (const auto& [fam, n] : kNames) {
    if (n == name) return fam;
  }
  return std::nullopt;
}

FamilySpec FamilySpec::nsp(int r) {
  if (r < 2) throw InvalidArgument("nsp requires r >= 2, got " + std::to_string(r));
  return {Family::nsp, r};
}

FamilySpec FamilySpec::of(Family f) {
  if (f == Family::nsp) throw InvalidArgument("nsp requires a parameter r");
  return {f, 0};
}

FamilySpec FamilySpec::parse(std::string_view name, std::optional<int> r) {
  const auto fam = parse_family_name(name);
  if (!fam) throw InvalidArgument("unknown family '" + std::string(name) + "'");
  if (*fam == Family::nsp) {
    if (!r) throw InvalidArgument("family nsp requires --r");
    return nsp(*r);
  }
  if (r) throw InvalidArgument("--r only applies to family nsp");
  return of(*fam);
}

std::string FamilySpec::name() const { return std::string(family_name(family)); }

std::string FamilySpec::params() const {
  return family == Family::nsp ? "r=" + std::to_string(r) : "-";
}

long FamilySpec::exponent(long d) const {
  if (d < 1) return 0;
  switch (family) {
    case Family::nsp:
      return d >= r ? 1 : 0;
    case Family::basic:
      return d % 2 == 1 ? 2 : 1;
    case Family::colored3:
      return 3 + (d % 3 == 0 ? 1 : 0) - (d % 9 == 0 ? 3 : 0);
    case Family::planestrict:
      return (d + 1) / 2;
    case Family::prings:
      return square_divisor_count(d);
    case Family::concave:
      return is_triangular(d) ? 1 : 0;
  }
  return 0;
}

long square_divisor_count(long m) {
  long count = 0;
  for (long k = 1; k * k <= m; ++k) {
    if (m % (k * k) == 0) ++count;
  }
  return count;
}

long square_divisor_count_by_divisors(long m) {
  long count = 0;
  for (long d = 1; d <= m; ++d) {
    if (m % d == 0 && is_square(d)) ++count;
  }
  return count;
}

bool is_triangular(long m) { return m >= 0 && is_square(8 * m + 1); }

}  // namespace partasym
