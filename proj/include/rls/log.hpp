#ifndef RLS_LOG_HPP
#define RLS_LOG_HPP

#include <string>

// Minimal stderr logger. The threshold comes from the LOCALIZER_LOG
// environment variable (error, warn, info, debug); default is warn.

namespace rls::log {

enum class Level { error = 0, warn = 1, info = 2, debug = 3 };

Level threshold();
void write(Level level, const std::string& message);

inline void error(const std::string& m) { write(Level::error, m); }
inline void warn(const std::string& m) { write(Level::warn, m); }
inline void info(const std::string& m) { write(Level::info, m); }
inline void debug(const std::string& m) { write(Level::debug, m); }

} // namespace rls::log

#endif
