#include "partasym/cli/report.hpp"

#include <algorithm>
#include <sstream>

namespace partasym::cli {

using nlohmann::ordered_json;

namespace {

constexpr int kIndent = 2;

std::string term_label(const asymptotics::PhiBreakdown& b, long k) {
  return (b.family.family == Family::concave ? "q_" : "Phi_") + std::to_string(k);
}

std::string show(const std::string& s, bool grouped) { return grouped ? group_digits(s) : s; }

}  // namespace

std::string group_digits(std::string_view decimal) {
  std::string_view sign;
  if (!decimal.empty() && (decimal.front() == '-' || decimal.front() == '+')) {
    sign = decimal.substr(0, 1);
    decimal.remove_prefix(1);
  }
  const size_t dot = std::min(decimal.find('.'), decimal.size());
  const std::string_view int_part = decimal.substr(0, dot);
  std::string out(sign);
  for (size_t i = 0; i < int_part.size(); ++i) {
    if (i > 0 && (int_part.size() - i) % 5 == 0) out += ' ';
    out += int_part[i];
  }
  out += decimal.substr(dot);
  return out;
}

ordered_json breakdown_to_json(const asymptotics::PhiBreakdown& b) {
  ordered_json j;
  j["family"] = b.family.name();
  ordered_json params = ordered_json::object();
  if (b.family.family == Family::nsp) params["r"] = b.family.r;
  j["params"] = params;
  j["n"] = b.n;
  j["xi"] = b.xi.get_str();
  j["config"] = {{"kmax", b.config.kmax}, {"terms", b.config.terms}, {"double_run", b.config.double_run}};
  ordered_json phi = ordered_json::array();
  for (const auto& t : b.terms) phi.push_back({{"k", t.k}, {"value", t.value.to_string()}});
  j["phi"] = phi;
  j["total"] = b.total.to_string();
  j["rounded"] = b.rounded.get_str();
  if (b.exact) j["exact"] = b.exact->get_str();
  if (b.error) j["error"] = b.error->to_string();
  j["digits"] = b.config.digits;
  if (b.agreement_digits) j["agreement_digits"] = *b.agreement_digits;
  return j;
}

std::string render_json(const asymptotics::PhiBreakdown& b) { return breakdown_to_json(b).dump(kIndent) + "\n"; }

std::string render_text(const asymptotics::PhiBreakdown& b, bool grouped, int decimals) {
  std::ostringstream out;
  out << "family  " << b.family.name();
  if (b.family.family == Family::nsp) out << " (r=" << b.family.r << ")";
  out << "\nn       " << b.n << "\nxi      " << b.xi.get_str() << "\ndigits  " << b.config.digits << "\n\n";
  size_t width = 0;
  for (const auto& t : b.terms) width = std::max(width, term_label(b, t.k).size());
  width = std::max<size_t>(width, 8);
  auto line = [&](const std::string& label, const std::string& value) {
    out << label << std::string(width + 2 - std::min(width, label.size()), ' ') << value << "\n";
  };
  for (const auto& t : b.terms) line(term_label(b, t.k), show(t.value.to_fixed(decimals), grouped));
  out << "\n";
  line("total", show(b.total.to_fixed(decimals), grouped));
  line("rounded", show(b.rounded.get_str(), grouped));
  if (b.exact) line("exact", show(b.exact->get_str(), grouped));
  if (b.error) line("error", b.error->to_fixed(decimals));
  if (b.exact) line("leading", std::to_string(hp::leading_digit_agreement(*b.exact, b.total)) + " digits agree");
  if (b.agreement_digits) line("stable", std::to_string(*b.agreement_digits) + " digits at +20");
  return out.str();
}

bool json_round_trips(std::string_view text) {
  const ordered_json parsed = ordered_json::parse(text);
  return parsed.dump(kIndent) + "\n" == text;
}

}  // namespace partasym::cli
