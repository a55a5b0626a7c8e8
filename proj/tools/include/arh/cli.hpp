#pragma once

#include <iosfwd>

namespace arh::cli {

// Exit codes: 0 success, 1 usage or domain error, 2 verification failure.
inline constexpr int kOk = 0;
inline constexpr int kDomainError = 1;
inline constexpr int kVerifyFailed = 2;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace arh::cli
