#include "rls/log.hpp"

#include <cstdlib>
#include <iostream>
#include <mutex>

namespace rls::log {

static Level parse_level() {
    const char* raw = std::getenv("LOCALIZER_LOG");
    if (!raw) return Level::warn;
    std::string s(raw);
    if (s == "error") return Level::error;
    if (s == "warn") return Level::warn;
    if (s == "info") return Level::info;
    if (s == "debug") return Level::debug;
    return Level::warn;
}

Level threshold() {
    static Level cached = parse_level();
    return cached;
}

void write(Level level, const std::string& message) {
    if (level > threshold()) return;
    static std::mutex mutex;
    static const char* names[] = {"error", "warn", "info", "debug"};
    std::lock_guard<std::mutex> lock(mutex);
    std::cerr << "[" << names[(int)level] << "] " << message << "\n";
}

} // namespace rls::log
