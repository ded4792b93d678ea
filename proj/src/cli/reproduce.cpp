#include "partasym/cli/reproduce.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>

#include "partasym/asymptotics/estimate.hpp"
#include "partasym/asymptotics/phi.hpp"
#include "partasym/asymptotics/transfer.hpp"
#include "partasym/cli/report.hpp"
#include "partasym/dedekind.hpp"
#include "partasym/errors.hpp"
#include "partasym/hp/complex.hpp"
#include "partasym/hp/special.hpp"
#include "partasym/qseries/coefficients.hpp"

namespace partasym::cli {

using nlohmann::ordered_json;
using hp::ExactRational;
using hp::PreciseReal;
namespace as = asymptotics;

namespace {

// A recomputed quantity: a real, an exact integer/rational, or both.
struct Value {
  std::optional<PreciseReal> real;
  std::string exact;
};

Value real(PreciseReal x) { return {std::move(x), {}}; }
Value exact(std::string s) { return {std::nullopt, std::move(s)}; }
Value count(long c, int digits) { return {PreciseReal::from_long(c, digits), std::to_string(c)}; }

using Values = std::map<std::string, Value>;

struct Context {
  int extra = 0;
  oracle::TableCache* cache = nullptr;
  const ordered_json* fixture = nullptr;

  int digits(int base) const { return base + extra; }
  oracle::TableCache& tables() const { return cache != nullptr ? *cache : oracle::default_cache(); }
  hp::BigCount count_of(const FamilySpec& f, long n) const {
    return tables().get(f, n)->coeffs[static_cast<size_t>(n)];
  }
};

as::PhiBreakdown run_estimate(const Context& ctx, const FamilySpec& f, long n, long kmax, int terms, int digits) {
  as::EstimateConfig c;
  c.kmax = kmax;
  c.terms = terms;
  c.digits = digits;
  c.oracle = as::OracleMode::always;
  return as::estimate(f, n, c, &ctx.tables());
}

void put_terms(Values& v, const as::PhiBreakdown& b) {
  for (const auto& t : b.terms) v["phi" + std::to_string(t.k)] = real(t.value);
  v["sum"] = real(b.total);
  v["exact"] = exact(b.exact->get_str());
}

Values sec2(const Context& ctx) {
  const int d = ctx.digits(60);
  Values v;
  const auto b = run_estimate(ctx, FamilySpec::nsp(12), 1200, 16, 16, d);
  put_terms(v, b);
  v["rounded"] = exact(b.rounded.get_str());
  for (const auto& [h, value] : as::nsp_phi_k_parts(12, 1200, 7, 16, d)) v["phi7_" + std::to_string(h)] = real(value);
  const auto c = qseries::expand_finite_product(11, 1, 7, 3, d);
  v["c1_re"] = real(c[1].re);
  v["c1_im"] = real(c[1].im);
  v["c2_re"] = real(c[2].re);
  v["c2_im"] = real(c[2].im);
  return v;
}

Values sec3(const Context& ctx) {
  Values v;
  const auto b = run_estimate(ctx, FamilySpec::of(Family::basic), 1000, 13, 0, ctx.digits(75));
  put_terms(v, b);
  v["error"] = real(*b.error);
  v["error_bound"] = real(hp::abs(*b.error));
  return v;
}

Values sec4(const Context& ctx) {
  const long n = 200;
  const int d = ctx.digits(60);
  Values v;
  const auto b = run_estimate(ctx, FamilySpec::of(Family::colored3), n, 7, 0, d);
  put_terms(v, b);
  // The second Bessel term of Φ₂, (-1)^n 3 B(72)/√(243π), absent from the printed value.
  const PreciseReal pi = hp::pi(d);
  const PreciseReal xi = PreciseReal::from_rational(as::colored3_xi(n), d);
  PreciseReal omitted = 3 * as::transfer_single(hp::ratio(1, 2), pi * pi / 72, xi, d) / hp::sqrt(243 * pi);
  if (n % 2 != 0) omitted = -omitted;
  v["phi2_printed"] = real(v.at("phi2").real.value() - omitted);
  const PreciseReal sum_printed = b.total - omitted;
  v["sum_printed"] = real(sum_printed);
  v["error_printed"] = real(sum_printed - PreciseReal::from_integer(*b.exact, d));
  v["error_bound"] = real(hp::abs(*b.error));
  return v;
}

Values sec5(const Context& ctx) {
  const long n = 200;
  const int d = ctx.digits(60);
  Values v;
  const auto a = ctx.count_of(FamilySpec::of(Family::planestrict), n);
  v["exact"] = exact(a.get_str());
  v["c2"] = exact(qseries::plane_correction_coeffs_exact(1, qseries::PlaneVariant::principal)[1].get_str());
  for (int k : {1, 2, 3}) {
    v["residue_t" + std::to_string(2 * k)] = exact(qseries::plane_residue(k, qseries::PlaneVariant::alternating).get_str());
  }
  const PreciseReal phi1 = as::plane_phi(n, 1, 8, d);
  const PreciseReal phi2 = as::plane_phi(n, 2, 8, d);
  v["phi1"] = real(phi1);
  v["phi1_digits"] = count(hp::leading_digit_agreement(a, phi1), d);
  v["phi2"] = real(phi2);
  v["sum_digits"] = count(hp::leading_digit_agreement(a, phi1 + phi2), d);
  // The alternating exponent exactly as printed: -13/5760 t² + 433/1451520 t⁴ + 7873/87091200 t⁶.
  std::vector<ExactRational> printed(8);
  printed[1] = hp::ratio(-13, 5760);
  printed[2] = hp::ratio(433, 1451520);
  printed[3] = hp::ratio(7873, 87091200);
  const PreciseReal phi2_printed = as::plane_phi_from_coeffs(n, 2, qseries::series_exp_exact(printed), d);
  v["phi2_printed_sign"] = real(phi2_printed);
  v["sum_printed_sign"] = real(phi1 + phi2_printed);
  return v;
}

Values sec6(const Context& ctx) {
  const long n = 200;
  const int d = ctx.digits(50);
  Values v;
  const auto s = ctx.count_of(FamilySpec::of(Family::prings), n);
  v["exact"] = exact(s.get_str());
  const PreciseReal phi1 = as::prings_phi(n, 1, d);
  const PreciseReal phi2 = as::prings_phi(n, 2, d);
  v["phi1"] = real(phi1);
  v["phi2"] = real(phi2);
  v["sum"] = real(phi1 + phi2);
  v["sum_digits"] = count(hp::leading_digit_agreement(s, phi1 + phi2), d);
  v["closed_form"] = real(as::prings_closed_form(n, d));
  return v;
}

Values sec7(const Context& ctx) {
  const long n = 2000;
  const int d = ctx.digits(50);
  Values v;
  const auto a = ctx.count_of(FamilySpec::of(Family::concave), n);
  v["exact"] = exact(a.get_str());
  PreciseReal sum(d);
  for (int k = 0; k <= 4; ++k) {
    const PreciseReal q = as::concave_q(n, k, d);
    v["q" + std::to_string(k)] = real(q);
    sum += q;
  }
  v["sum"] = real(sum);
  v["sum_digits"] = count(hp::leading_digit_agreement(a, sum), d);
  v["growth"] = real(as::concave_growth_constant(d));
  return v;
}

// Ã(k,n) = 2 Σ cos(2π m n/k - φπ) over the printed (m, φ) pairs; Ã(1,n) = 1.
PreciseReal atilde_closed(const ordered_json& pairs, long k, long n, int digits) {
  if (pairs.empty()) return PreciseReal::from_long(1, digits);
  PreciseReal sum(digits);
  for (const auto& p : pairs) {
    const long m = p.at(0).get<long>();
    const ExactRational phase(p.at(1).get<std::string>());
    sum += hp::cos_pi(hp::ratio(2 * m * n, k) - phase, digits);
  }
  return 2 * sum;
}

Values dedekind_table(const Context& ctx) {
  const int d = ctx.digits(50);
  Values v;
  for (long h : {1, 2, 3}) v["s_" + std::to_string(h) + "_7"] = exact(dedekind::dedekind_sum(h, 7).get_str());
  long failures = 0;
  for (long k = 1; k <= 60; ++k) {
    for (long h = 1; h <= 60; ++h) {
      if (std::gcd(h, k) != 1) continue;
      const ExactRational lhs = dedekind::dedekind_sum(h, k) + dedekind::dedekind_sum(k, h);
      const ExactRational rhs = hp::ratio(h * h + k * k + 1, 12 * h * k) - hp::ratio(1, 4);
      if (lhs != rhs) ++failures;
    }
  }
  v["reciprocity"] = exact(std::to_string(failures));
  const ordered_json& forms = ctx.fixture->at("atilde_closed_forms");
  for (const auto& [key, pairs] : forms.items()) {
    const long k = std::stol(key);
    PreciseReal worst(d);
    for (long n = 0; n <= 25; ++n) {
      worst = hp::max(worst, hp::abs(dedekind::a_tilde(k, n, d) - atilde_closed(pairs, k, n, d)));
    }
    v["atilde_" + key] = real(worst);
  }
  return v;
}

Values identities(const Context& ctx) {
  Values v;
  for (int k = 1; k <= 10; ++k) v["petersson_" + std::to_string(k)] = exact(as::petersson_check(k).get_str());
  v["zeta_prime_m1"] = real(hp::zeta_prime_minus1(ctx.digits(50)));
  return v;
}

const std::map<std::string, std::function<Values(const Context&)>, std::less<>>& builders() {
  static const std::map<std::string, std::function<Values(const Context&)>, std::less<>> m{
      {"sec2", sec2}, {"sec3", sec3}, {"sec4", sec4}, {"sec5", sec5},
      {"sec6", sec6}, {"sec7", sec7}, {"dedekind", dedekind_table}, {"identities", identities},
  };
  return m;
}

const ordered_json& fixtures() {
  static const ordered_json j = ordered_json::parse(paper_values_json());
  return j;
}

int decimals_of(const std::string& s) {
  const auto dot = s.find('.');
  if (dot == std::string::npos || s.find_first_of("eE") != std::string::npos) return 0;
  return static_cast<int>(s.size() - dot - 1);
}

void judge(ReproRow& row, const Value& value) {
  if (row.check == "equal") {
    row.computed = value.exact.empty() ? value.real->to_string() : value.exact;
    row.pass = row.computed == row.expected;
    return;
  }
  if (!value.real) throw NumericalError("reproduce: row '" + row.id + "' needs a numeric value");
  const PreciseReal& x = *value.real;
  const int d = std::max<int>(x.digits(), static_cast<int>(row.expected.size())) + 10;
  const PreciseReal expected = PreciseReal::parse(row.expected, d);
  if (row.check == "abs") {
    row.computed = x.to_fixed(decimals_of(row.expected) + 4);
    row.pass = hp::abs(x - expected) <= PreciseReal::parse(row.tolerance, d);
  } else if (row.check == "at_most" || row.check == "at_least") {
    row.computed = value.exact.empty() ? x.to_scientific(6) : value.exact;
    row.pass = row.check == "at_most" ? x <= expected : x >= expected;
  } else if (row.check == "factor") {
    const PreciseReal f = PreciseReal::parse(row.tolerance, d);
    row.computed = x.to_scientific(6);
    row.pass = x >= expected / f && x <= expected * f;
  } else {
    throw InvalidArgument("reproduce: unknown check '" + row.check + "'");
  }
}

std::string field(const ordered_json& j, const char* key) { return j.contains(key) ? j.at(key).get<std::string>() : ""; }

}  // namespace

bool ReproTable::passed() const {
  return std::all_of(rows.begin(), rows.end(), [](const ReproRow& r) { return r.pass; });
}

const std::vector<std::string>& table_names() {
  static const std::vector<std::string> names{"sec2", "sec3", "sec4", "sec5", "sec6", "sec7", "dedekind", "identities"};
  return names;
}

ReproTable reproduce(std::string_view table, const ReproduceOptions& options) {
  const auto& b = builders();
  const auto it = b.find(table);
  if (it == b.end()) throw InvalidArgument("unknown table '" + std::string(table) + "'");
  const ordered_json& fixture = fixtures().at("tables").at(std::string(table));
  const Context ctx{options.extra_digits, options.cache, &fixture};
  const Values values = it->second(ctx);

  ReproTable out{std::string(table), fixture.at("title").get<std::string>(), {}};
  for (const auto& r : fixture.at("rows")) {
    ReproRow row;
    row.id = r.at("id").get<std::string>();
    row.label = field(r, "label");
    row.check = field(r, "check");
    row.provenance = field(r, "provenance");
    row.note = field(r, "note");
    row.expected = field(r, "expected");
    row.printed = field(r, "printed");
    row.tolerance = field(r, "tol");
    const auto v = values.find(row.id);
    if (v == values.end()) throw NumericalError("reproduce: no value computed for row '" + row.id + "'");
    judge(row, v->second);
    out.rows.push_back(std::move(row));
  }
  return out;
}

std::string render_repro_text(const ReproTable& table, bool grouped) {
  auto show = [&](const std::string& s) { return grouped ? group_digits(s) : s; };
  size_t width = 0;
  for (const auto& r : table.rows) width = std::max(width, r.label.size());
  std::ostringstream out;
  out << "[" << table.name << "] " << table.title << "\n";
  for (const auto& r : table.rows) {
    out << (r.pass ? "PASS  " : "FAIL  ") << r.label << std::string(width + 2 - r.label.size(), ' ')
        << show(r.computed) << "\n";
    out << std::string(6 + width + 2, ' ');
    if (r.check == "abs") {
      out << "expected " << show(r.expected) << " +- " << r.tolerance;
    } else if (r.check == "equal") {
      out << "expected " << show(r.expected);
    } else if (r.check == "at_most") {
      out << "expected <= " << r.expected;
    } else if (r.check == "at_least") {
      out << "expected >= " << r.expected;
    } else {
      out << "expected within x" << r.tolerance << " of " << r.expected;
    }
    out << "  [" << r.provenance << "]\n";
    if (!r.printed.empty()) out << std::string(6 + width + 2, ' ') << "printed " << show(r.printed) << "\n";
    if (!r.note.empty()) out << std::string(6 + width + 2, ' ') << r.note << "\n";
  }
  const auto failed = std::count_if(table.rows.begin(), table.rows.end(), [](const ReproRow& r) { return !r.pass; });
  out << table.rows.size() - static_cast<size_t>(failed) << "/" << table.rows.size() << " rows pass\n";
  return out.str();
}

ordered_json repro_to_json(const ReproTable& table) {
  ordered_json rows = ordered_json::array();
  for (const auto& r : table.rows) {
    ordered_json j{{"id", r.id}, {"label", r.label}, {"check", r.check}, {"computed", r.computed},
                   {"expected", r.expected}};
    if (!r.tolerance.empty()) j["tol"] = r.tolerance;
    if (!r.printed.empty()) j["printed"] = r.printed;
    j["provenance"] = r.provenance;
    if (!r.note.empty()) j["note"] = r.note;
    j["pass"] = r.pass;
    rows.push_back(std::move(j));
  }
  return {{"table", table.name}, {"title", table.title}, {"rows", rows}, {"pass", table.passed()}};
}

}  // namespace partasym::cli
