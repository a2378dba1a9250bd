#ifndef WXCOMPRESS_TIMEUTIL_HPP
#define WXCOMPRESS_TIMEUTIL_HPP

#include <cstdint>
#include <optional>
#include <string>

namespace wxc {

// Unix timestamps (seconds, UTC) are the internal time representation.
using UnixTime = std::int64_t;

// Days since 1970-01-01 for a proleptic Gregorian civil date.
std::int64_t days_from_civil(int year, int month, int day);

// Parse an RFC-3339 UTC timestamp, e.g. "2021-01-18T17:53:00Z".
// Offsets other than 'Z'/"+00:00" are rejected.
std::optional<UnixTime> parse_rfc3339(const std::string& text);

std::string format_rfc3339(UnixTime t);

}  // namespace wxc

#endif
