#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"

#include "wittspan/forms.hpp"
#include "wittspan/knots.hpp"
#include "wittspan/witt.hpp"

namespace wittspan::cli {

using nlohmann::json;

/// Integers beyond 2^53 become decimal strings.
json integer_to_json(mpz_class const & n);
mpz_class integer_from_json(json const & j);
mpq_class rational_from_text(std::string_view text);

json form_to_json(DiagonalForm const & f);
json invariants_to_json(FormInvariants const & inv);
json del_to_json(DelImage const & d);
DelImage del_from_json(json const & j);

/// "1", "b", "1+b" for p = 1 mod 4; "1".."3" for p = 3 mod 4; "1" at 2.
std::string class_label(WfpElement const & x);
WfpElement class_from_label(mpz_class const & p, std::string const & label);

/// One of the three accepted input documents.
using Input = std::variant<KnotInput, DelImage>;

Input parse_input(json const & doc, std::string name = {});
Input parse_input_text(std::string const & text, std::string name = {});

struct CsvRow {
    std::string name;
    std::string kind;
    std::string payload;
};

/// RFC 4180 style: quoted fields may contain commas, newlines and "" escapes.
/// A first row whose first cell is "name" is treated as a header.
std::vector<CsvRow> parse_csv(std::string const & text);
std::string csv_escape(std::string const & field);

} // namespace wittspan::cli
