#include "emm/log.hpp"

#include <cstdlib>
#include <cstring>
#include <iostream>
#include <mutex>

namespace emm::log {

namespace {

Level parse_env() {
    const char* e = std::getenv("EMM_LOG");
    if (!e) return Level::warn;
    if (std::strcmp(e, "error") == 0) return Level::error;
    if (std::strcmp(e, "warn") == 0) return Level::warn;
    if (std::strcmp(e, "info") == 0) return Level::info;
    if (std::strcmp(e, "debug") == 0) return Level::debug;
    return Level::warn;
}

Level g_level = parse_env();
std::mutex g_mutex;

const char* tag(Level lv) {
    switch (lv) {
        case Level::error: return "error";
        case Level::warn: return "warn";
        case Level::info: return "info";
        default: return "debug";
    }
}

} // namespace

Level level() { return g_level; }
void set_level(Level lv) { g_level = lv; }

void write(Level lv, const std::string& msg) {
    if (static_cast<int>(lv) > static_cast<int>(g_level)) return;
    std::lock_guard<std::mutex> lock(g_mutex);
    std::cerr << "[emm " << tag(lv) << "] " << msg << "\n";
}

} // namespace emm::log
