#pragma once

#include <cstdlib>
#include <iostream>
#include <string>

namespace namegame {

// Diagnostics go to stderr.  Set NAMEGAME_LOG=quiet (or 0/off) to silence.
inline bool logging_enabled() {
  const char* v = std::getenv("NAMEGAME_LOG");
  if (v == nullptr) return true;
  const std::string s(v);
  return !(s == "quiet" || s == "0" || s == "off");
}

inline void log_warning(const std::string& msg) {
  if (logging_enabled()) std::cerr << "[namegame] warning: " << msg << "\n";
}

inline void log_info(const std::string& msg) {
  if (logging_enabled()) std::cerr << "[namegame] " << msg << "\n";
}

}  // namespace namegame
