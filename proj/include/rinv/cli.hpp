#pragma once

#include <iosfwd>
#include <string>

namespace rinv {

// Entry point for the command-line tool; returns the process exit code:
// 0 on success, 1 when a consistency check or table comparison fails,
// 2 on usage, parse, or validation errors.
int run_cli(int argc, const char* const* argv);

// The table command's core, exposed so the acceptance harness can run the
// same code path: reads <corpus_dir>/expected.txt, evaluates each listed
// diagram file, and compares rendered values exactly.  Returns 0 when all
// present rows match (missing files are reported as skipped), 1 otherwise.
int cmd_table(const std::string& corpus_dir, std::ostream& out, bool json);

}  // namespace rinv
