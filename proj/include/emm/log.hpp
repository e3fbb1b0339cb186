#ifndef EMM_LOG_HPP
#define EMM_LOG_HPP

#include <sstream>
#include <string>

namespace emm::log {

enum class Level { error = 0, warn = 1, info = 2, debug = 3 };

// Active level comes from the EMM_LOG environment variable
// (error|warn|info|debug); defaults to warn.
Level level();
void set_level(Level lv);
void write(Level lv, const std::string& msg);

namespace detail {
struct Line {
    Level lv;
    std::ostringstream os;
    explicit Line(Level l) : lv(l) {}
    ~Line() { write(lv, os.str()); }
    template <class T> Line& operator<<(const T& v) { os << v; return *this; }
};
} // namespace detail

inline detail::Line error() { return detail::Line(Level::error); }
inline detail::Line warn()  { return detail::Line(Level::warn); }
inline detail::Line info()  { return detail::Line(Level::info); }
inline detail::Line debug() { return detail::Line(Level::debug); }

} // namespace emm::log

#endif
