#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace elltor::cli {

struct RunResult {
    int exit_code = 0;
    std::string out;
    std::string err;
};

// Full CLI entry point; `args` excludes the program name.  Results are
// printed as a single JSON object (JSON lines for `proell scan`) on stdout;
// exit 0 on success, 1 on domain errors (reported under "error" in the
// JSON), 2 on usage errors (reported on stderr).
RunResult run(const std::vector<std::string>& args);

// One coefficient entry: a plain integer (canonical image of Z) or a
// bracketed coefficient vector [c0:c1:...] over the prime subfield.
struct CoeffSpec {
    bool is_vector = false;
    int64_t value = 0;
    std::vector<int64_t> vec;
};

// a1, a2, a3, a4, a6.
std::array<CoeffSpec, 5> parse_coeff_list(const std::string& text);

} // namespace elltor::cli
