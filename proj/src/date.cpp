#include "openspace/date.hpp"

#include <cctype>
#include <cstdio>

#include "openspace/raster.hpp"

namespace openspace {

Date::Date(std::chrono::year_month_day ymd) : ymd_(ymd) {
  if (!ymd.ok()) throw Error("invalid calendar date");
}

Date Date::parse(std::string_view text) {
  const auto bad = [&] { return Error("invalid ISO-8601 date '" + std::string(text) + "' (want YYYY-MM-DD)"); };
  if (text.size() != 10 || text[4] != '-' || text[7] != '-') throw bad();
  for (std::size_t i : {0u, 1u, 2u, 3u, 5u, 6u, 8u, 9u}) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) throw bad();
  }
  const auto num = [&](std::size_t pos, std::size_t len) {
    int v = 0;
    for (std::size_t i = pos; i < pos + len; ++i) v = v * 10 + (text[i] - '0');
    return v;
  };
  const std::chrono::year_month_day ymd{std::chrono::year(num(0, 4)),
                                        std::chrono::month(static_cast<unsigned>(num(5, 2))),
                                        std::chrono::day(static_cast<unsigned>(num(8, 2)))};
  if (!ymd.ok()) throw bad();
  return Date(ymd);
}

std::string Date::iso() const {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(ymd_.year()),
                static_cast<unsigned>(ymd_.month()), static_cast<unsigned>(ymd_.day()));
  return buf;
}

}  // namespace openspace
