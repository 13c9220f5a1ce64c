#pragma once

#include <cstdint>
#include <string>

namespace apolar {

// One CLI invocation, already flag-parsed.  Form inputs come from `expr` or,
// when that is empty, from the file at `input_path`; structured inputs
// (matrices, pencils, tensors) are JSON, same two sources.
struct JobRequest {
    std::string subcommand;
    std::string expr;
    std::string input_path;
    std::string out_path;        // consumed by the front end, not by run()
    std::string format = "json";
    std::string mode = "auto";   // form syntax: auto|binary|ternary|bigraded|pnp1
    std::string B_text;          // "1,2"; empty means half the declared degree
    std::string point_text;      // blocks split by ';', coordinates by ','
    int d = 1;                   // sample-typical bidegree parameter (2, 2d)
    std::uint64_t seed = 42;
    std::int64_t samples = 200;
    int workers = 1;
};

// Exit codes: 0 success, 1 malformed input (parse/schema), 2 violated
// mathematical precondition, 3 unexpected failure.  `json` always carries the
// full payload (an error object on nonzero exit).
struct RunResult {
    int exit_code = 0;
    std::string json;
};

RunResult run(const JobRequest& req);

}  // namespace apolar
