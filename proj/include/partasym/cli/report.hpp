#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "partasym/asymptotics/estimate.hpp"

namespace partasym::cli {

/// Splits the integer part of a decimal string into groups of five from the right, as the
/// paper prints its numbers: "49001590791729816727884124" → "4 90015 90791 72981 67278 84124".
/// Sign and fractional part are kept as they are.
std::string group_digits(std::string_view decimal);

/// {family, params, n, xi, config, phi:[{k, value}], total, rounded, exact?, error?, digits,
///  agreement_digits?}. Reals and big integers are decimal strings at full working precision;
/// xi is the exact rational. No timing, so equal inputs give equal bytes.
nlohmann::ordered_json breakdown_to_json(const asymptotics::PhiBreakdown& b);
std::string render_json(const asymptotics::PhiBreakdown& b);

/// Human-readable table; reals shown with `decimals` places.
std::string render_text(const asymptotics::PhiBreakdown& b, bool grouped, int decimals = 10);

/// Parses `text` and re-serializes it the way render_json does; true when the bytes match.
bool json_round_trips(std::string_view text);

}  // namespace partasym::cli
