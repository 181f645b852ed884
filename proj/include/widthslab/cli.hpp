#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace widthslab {

// Front end for the widths-lab executable. `args` excludes the program
// name. Writes results to `out` (or the --out file) and diagnostics to
// `err`. Identical invocations produce byte-identical output.
//
// Exit codes: 0 success; 2 parse failure (diagnostic names the offending
// token); 3 numeric-domain violation or unusable output path; 4 operation
// undefined for the family (e.g. strong-equivalence limits for gevrey with
// alpha >= 1).
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace widthslab
