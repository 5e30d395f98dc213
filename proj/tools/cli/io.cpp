#include "io.hpp"

#include "wittspan/arith.hpp"
#include "wittspan/error.hpp"

namespace wittspan::cli {

namespace {

mpz_class const & json_safe_bound()
{
    static mpz_class const bound = mpz_class(1) << 53;
    return bound;
}

[[noreturn]] void invalid(std::string const & message)
{
    throw Error(ErrorKind::InvalidInput, message);
}

mpz_class parse_decimal(std::string const & s)
{
    mpz_class n;
    std::string t = s;
    if (!t.empty() && t[0] == '+')
        t.erase(0, 1);
    if (t.empty() || n.set_str(t, 10) != 0)
        invalid("not an integer: '" + s + "'");
    return n;
}

mpz_class prime_from_json(json const & j)
{
    mpz_class const p = integer_from_json(j);
    if (!is_prime(p))
        invalid(p.get_str() + " is not a prime");
    return p;
}

} // namespace

json integer_to_json(mpz_class const & n)
{
    if (abs(n) <= json_safe_bound())
        return json(n.get_si());
    return json(n.get_str());
}

mpz_class integer_from_json(json const & j)
{
    if (j.is_number_integer())
        return j.is_number_unsigned() ? mpz_class(j.get<unsigned long>())
                                      : mpz_class(j.get<long>());
    if (j.is_string())
        return parse_decimal(j.get<std::string>());
    invalid("expected an integer, got " + j.dump());
}

mpq_class rational_from_text(std::string_view text)
{
    std::string s(text);
    auto const slash = s.find('/');
    if (slash == std::string::npos)
        return mpq_class(parse_decimal(s));
    mpz_class const num = parse_decimal(s.substr(0, slash));
    mpz_class const den = parse_decimal(s.substr(slash + 1));
    if (den == 0)
        invalid("zero denominator in '" + s + "'");
    mpq_class r(num, den);
    r.canonicalize();
    return r;
}

json form_to_json(DiagonalForm const & f)
{
    json out = json::array();
    for (auto const & a : f.entries())
        out.push_back(integer_to_json(a));
    return out;
}

json invariants_to_json(FormInvariants const & inv)
{
    json hasse = json::object();
    for (auto const & [p, v] : inv.hasse)
        hasse[p.get_str()] = v;
    return json{{"rank", inv.rank},
                {"signature", inv.signature},
                {"disc", integer_to_json(inv.disc)},
                {"hasse", hasse}};
}

std::string class_label(WfpElement const & x) { return wfp_label(x); }

WfpElement class_from_label(mpz_class const & p, std::string const & label)
{
    WfpElement probe(p);
    auto bad = [&]() -> WfpElement {
        invalid("class '" + label + "' is not valid for p = " + p.get_str());
    };
    if (label == "0")
        return probe;
    switch (probe.kind()) {
    case WfpElement::Kind::Dyadic:
        return label == "1" ? WfpElement(p, 1, 0) : bad();
    case WfpElement::Kind::OneMod4:
        if (label == "1" || label == "-1")
            return WfpElement(p, 1, 0);
        if (label == "b" || label == "-b")
            return WfpElement(p, 0, 1);
        if (label == "1+b")
            return WfpElement(p, 1, 1);
        return bad();
    case WfpElement::Kind::ThreeMod4:
        if (label == "1" || label == "2" || label == "3")
            return WfpElement(p, label[0] - '0', 0);
        if (label == "-1")
            return WfpElement(p, 3, 0);
        return bad();
    }
    return bad();
}

json del_to_json(DelImage const & d)
{
    json out = json::array();
    for (auto const & [p, x] : d.parts())
        out.push_back(json{{"p", integer_to_json(p)}, {"class", class_label(x)}});
    return out;
}

DelImage del_from_json(json const & j)
{
    if (!j.is_array())
        invalid("\"delta\" must be a list of {\"p\", \"class\"} objects");
    DelImage out;
    for (auto const & item : j) {
        if (!item.is_object() || !item.contains("p") || !item.contains("class"))
            invalid("delta entries need \"p\" and \"class\": " + item.dump());
        mpz_class const p = prime_from_json(item.at("p"));
        auto const & cls = item.at("class");
        std::string const label =
            cls.is_string() ? cls.get<std::string>() : cls.dump();
        out.add(class_from_label(p, label));
    }
    return out;
}

Input parse_input(json const & doc, std::string name)
{
    if (!doc.is_object())
        invalid("input must be a JSON object");
    if (doc.contains("name") && doc.at("name").is_string() && name.empty())
        name = doc.at("name").get<std::string>();

    int const kinds = int(doc.contains("diagonal")) + int(doc.contains("seifert")) +
                      int(doc.contains("delta"));
    if (kinds != 1)
        invalid("input needs exactly one of \"diagonal\", \"seifert\", \"delta\"");

    if (doc.contains("delta"))
        return del_from_json(doc.at("delta"));

    if (doc.contains("diagonal")) {
        auto const & list = doc.at("diagonal");
        if (!list.is_array())
            invalid("\"diagonal\" must be a list of integers");
        std::vector<mpz_class> entries;
        for (auto const & a : list)
            entries.push_back(integer_from_json(a));
        return KnotInput{name, DiagonalForm(entries)};
    }

    auto const & rows = doc.at("seifert");
    if (!rows.is_array())
        invalid("\"seifert\" must be a list of integer rows");
    SeifertMatrix v;
    for (auto const & row : rows) {
        if (!row.is_array())
            invalid("\"seifert\" rows must be lists");
        std::vector<mpz_class> r;
        for (auto const & a : row)
            r.push_back(integer_from_json(a));
        v.rows.push_back(std::move(r));
    }
    for (auto const & r : v.rows)
        if (r.size() != v.rows.size())
            invalid("Seifert matrix must be square");
    return KnotInput{name, v};
}

Input parse_input_text(std::string const & text, std::string name)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (json::parse_error const & e) {
        invalid(std::string("malformed JSON: ") + e.what());
    }
    return parse_input(doc, std::move(name));
}

std::vector<CsvRow> parse_csv(std::string const & text)
{
    std::vector<std::vector<std::string>> records;
    std::vector<std::string> record;
    std::string field;
    bool quoted = false, field_started = false;

    auto end_field = [&] {
        record.push_back(field);
        field.clear();
        field_started = false;
    };
    auto end_record = [&] {
        end_field();
        bool blank = record.size() == 1 && record[0].empty();
        if (!blank)
            records.push_back(record);
        record.clear();
    };

    for (std::size_t i = 0; i < text.size(); ++i) {
        char const c = text[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                field += c;
            }
            continue;
        }
        if (c == '"' && !field_started) {
            quoted = true;
            field_started = true;
        } else if (c == ',') {
            end_field();
        } else if (c == '\n') {
            end_record();
        } else if (c == '\r') {
            continue;
        } else {
            field += c;
            field_started = true;
        }
    }
    if (quoted)
        invalid("unterminated quoted CSV field");
    if (field_started || !field.empty() || !record.empty())
        end_record();

    std::vector<CsvRow> rows;
    for (std::size_t i = 0; i < records.size(); ++i) {
        auto const & r = records[i];
        if (i == 0 && !r.empty() && r[0] == "name")
            continue;
        if (r.size() != 3)
            invalid("CSV row " + std::to_string(i + 1) + " has " +
                    std::to_string(r.size()) + " fields, expected 3");
        rows.push_back(CsvRow{r[0], r[1], r[2]});
    }
    return rows;
}

std::string csv_escape(std::string const & field)
{
    if (field.find_first_of(",\"\n\r") == std::string::npos)
        return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

} // namespace wittspan::cli
