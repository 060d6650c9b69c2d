#pragma once

#include <chrono>
#include <compare>
#include <cstdio>
#include <string>

#include "sentra/errors.hpp"

namespace sentra {

// Calendar date (ISO-8601 yyyy-mm-dd). Backed by std::chrono for validity
// and day arithmetic; no time-of-day, no timezones.
struct Date {
    int year = 1970;
    int month = 1;
    int day = 1;

    auto operator<=>(const Date&) const = default;

    bool ok() const {
        return std::chrono::year_month_day{std::chrono::year{year},
                                           std::chrono::month{unsigned(month)},
                                           std::chrono::day{unsigned(day)}}
            .ok();
    }

    std::chrono::sys_days to_sys_days() const {
        return std::chrono::sys_days{std::chrono::year_month_day{
            std::chrono::year{year}, std::chrono::month{unsigned(month)},
            std::chrono::day{unsigned(day)}}};
    }

    static Date from_sys_days(std::chrono::sys_days sd) {
        std::chrono::year_month_day ymd{sd};
        return Date{int(ymd.year()), int(unsigned(ymd.month())), int(unsigned(ymd.day()))};
    }

    Date plus_days(int n) const { return from_sys_days(to_sys_days() + std::chrono::days{n}); }

    // Mon..Fri
    bool is_weekday() const {
        std::chrono::weekday wd{to_sys_days()};
        return wd != std::chrono::Saturday && wd != std::chrono::Sunday;
    }

    std::string to_string() const {
        char buf[16];
        std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", year, month, day);
        return buf;
    }
};

inline Date parse_date(const std::string& s) {
    int y = 0, m = 0, d = 0;
    char trailing = 0;
    if (std::sscanf(s.c_str(), "%d-%d-%d%c", &y, &m, &d, &trailing) != 3) {
        throw DataError("bad date '" + s + "' (expected yyyy-mm-dd)");
    }
    Date date{y, m, d};
    if (!date.ok()) throw DataError("invalid calendar date '" + s + "'");
    return date;
}

// Inclusive date interval.
struct DateRange {
    Date start;
    Date end;

    bool valid() const { return start <= end; }
    bool contains(const Date& d) const { return start <= d && d <= end; }
};

}  // namespace sentra
