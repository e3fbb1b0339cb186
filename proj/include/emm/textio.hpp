#ifndef EMM_TEXTIO_HPP
#define EMM_TEXTIO_HPP

#include <charconv>
#include <string>
#include <string_view>
#include <system_error>

#include "emm/errors.hpp"

namespace emm {

// Locale-independent decimal serialization, 17 significant digits
// (round-trip exact for doubles).
inline std::string format_double(double x) {
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

inline double parse_double(std::string_view s) {
    double x = 0.0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), x);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size())
        throw data_error("bad floating point literal: '" + std::string(s) + "'");
    return x;
}

inline long long parse_int(std::string_view s) {
    long long x = 0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), x);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size())
        throw data_error("bad integer literal: '" + std::string(s) + "'");
    return x;
}

} // namespace emm

#endif
