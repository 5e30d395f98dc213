#pragma once

#include <string>
#include <vector>

#include "io.hpp"
#include "wittspan/error.hpp"

namespace wittspan::cli {

struct Options {
    bool oracle = false;
    unsigned threads = 0;
};

json analyze(Input const & input, Options const & opts);
json hilbert(std::string const & a, std::string const & b, std::string const & place);
json isotropy(Input const & input, std::string const & place, Options const & opts);
json delta(Input const & input);
json span(Input const & input);
json preimage(Input const & input);

/// Rows are analyzed concurrently; the result keeps row order. Failed rows
/// become error objects and raise `exit_code`.
std::vector<json> batch(std::vector<CsvRow> const & rows, Options const & opts,
                        int & exit_code);

/// Every catalog entry through `analyze`.
std::vector<json> analyze_fixtures(Options const & opts);

int exit_code_for(ErrorKind kind);
json error_object(std::string const & kind, std::string const & message);

} // namespace wittspan::cli
