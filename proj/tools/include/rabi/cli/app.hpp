#pragma once

#include <iosfwd>

namespace rabi::cli {

/// Entry point of the rabi_css executable; returns the process exit status.
int run_app(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rabi::cli
