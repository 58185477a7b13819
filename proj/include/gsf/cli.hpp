#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gsf::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kFail = 2, kOutside = 3 };

/// Runs one command line (argv[0] is the program name). The report goes to
/// out, diagnostics to err. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// A pinned certificate: file name inside the golden directory and the
/// command line that regenerates it.
struct GoldenEntry {
  std::string file;
  std::vector<std::string> args;
};

std::vector<GoldenEntry> golden_manifest();

}  // namespace gsf::cli
