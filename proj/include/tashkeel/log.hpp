#pragma once

#include <string_view>

namespace tashkeel {

enum class LogLevel { Debug = 0, Info, Warn, Error, Off };

// Level comes from TASHKEEL_EVAL_LOG (debug|info|warn|error|off),
// read once per process. Default is warn.
LogLevel log_level();

bool log_enabled(LogLevel level);

// Writes "tashkeel-eval <level>: <msg>\n" to stderr when enabled.
void log_msg(LogLevel level, std::string_view msg);

}  // namespace tashkeel
