#pragma once

// Command-line front end.
//
//   hopfgr verify FILE
//   hopfgr filtration FILE (--sub NAME | --quot NAME) [--max-degree N]
//   hopfgr graded FILE (--sub NAME | --quot NAME) [--max-degree N]
//   hopfgr typeone FILE (--sub NAME | --quot NAME) [--max-degree N]
//   hopfgr zoo list
//   hopfgr zoo export NAME [--output FILE]
//
// FILE is a document path or zoo:NAME for a built-in example. Reports are
// text by default; --format machine prints one JSON document with sorted
// keys and the digest of the input. --max-degree defaults to 4, at most 8.

#include <iosfwd>
#include <string>
#include <vector>

namespace hopfgr {

enum ExitCode : int { exit_ok = 0, exit_failure = 1, exit_input = 2 };

/// Runs one command; args exclude the program name. Returns 0 on success,
/// 1 when an axiom, a graded identity or the type-one agreement fails, and 2
/// on malformed input or unusable arguments.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hopfgr
