#pragma once

#include <chrono>
#include <string>
#include <string_view>

namespace openspace {

/// Calendar date parsed from strict ISO-8601 `YYYY-MM-DD`.
class Date {
 public:
  Date() = default;
  explicit Date(std::chrono::year_month_day ymd);

  /// Throws Error on anything that is not a valid `YYYY-MM-DD` date.
  static Date parse(std::string_view text);

  std::chrono::year_month_day ymd() const noexcept { return ymd_; }
  std::string iso() const;

  friend bool operator==(const Date& a, const Date& b) noexcept { return a.ymd_ == b.ymd_; }
  friend auto operator<=>(const Date& a, const Date& b) noexcept {
    return std::chrono::sys_days(a.ymd_) <=> std::chrono::sys_days(b.ymd_);
  }

 private:
  std::chrono::year_month_day ymd_{std::chrono::year(1970), std::chrono::month(1), std::chrono::day(1)};
};

struct ImageMeta {
  Date acquisition_date;
  std::string source_label;
};

}  // namespace openspace
