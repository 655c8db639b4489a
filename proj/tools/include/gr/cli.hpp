#pragma once

#include <atomic>
#include <iosfwd>
#include <string>
#include <vector>

namespace gr::cli {

/// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kDomainError = 1;
inline constexpr int kUsageError = 2;

/// Environment variable holding the default thread count.
inline constexpr const char* kThreadsEnv = "GR_THREADS";

/// Runs one command line (args excludes the program name). `cancel`, when
/// given, stops a running survey at the next batch boundary.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const std::atomic<bool>* cancel = nullptr);

}  // namespace gr::cli
