#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <thread>

#include "wittspan/arith.hpp"
#include "wittspan/error.hpp"
#include "wittspan/hilbert.hpp"
#include "wittspan/local.hpp"
#include "wittspan/oracle.hpp"
#include "wittspan/span.hpp"

namespace wittspan::cli {

namespace {

struct Place {
    enum Kind { Real, Rational, Padic } kind = Rational;
    mpz_class p;
};

Place parse_place(std::string const & text)
{
    if (text == "R" || text == "inf")
        return {Place::Real, 0};
    if (text == "Q")
        return {Place::Rational, 0};
    std::string digits = text;
    if (digits.rfind("Qp(", 0) == 0 && digits.back() == ')')
        digits = digits.substr(3, digits.size() - 4);
    else if (digits.rfind("Qp:", 0) == 0)
        digits = digits.substr(3);
    mpz_class p;
    if (digits.empty() || p.set_str(digits, 10) != 0 || !is_prime(p))
        throw Error(ErrorKind::InvalidInput,
                    "place must be R, Q, Qp(p) or Qp:p with p prime, got '" +
                        text + "'");
    return {Place::Padic, p};
}

DiagonalForm form_of(Input const & input)
{
    if (auto const * k = std::get_if<KnotInput>(&input))
        return knot_witt_form(*k);
    return del_preimage(std::get<DelImage>(input));
}

json sorted_list(std::set<long> const & s)
{
    return json(std::vector<long>(s.begin(), s.end()));
}

json oracle_result(DiagonalForm const & f, mpz_class const & p)
{
    try {
        return oracle::mod_pk_solvable(f, p);
    } catch (Error const & e) {
        if (e.kind() != ErrorKind::OracleTooLarge)
            throw;
        return json(nullptr);
    }
}

json span_fields(SpanAnalysis const & s)
{
    json window = json::array();
    for (auto const & c : s.window)
        window.push_back(json{{"shift", c.shift},
                              {"signature", c.signature},
                              {"anisotropic_rank", c.anisotropic.rank}});
    auto const sets = s.signature_sets();
    json out{{"ws", s.ws}, {"window", window}};
    for (int r = 1; r <= 3; ++r)
        out["I" + std::to_string(r)] = sorted_list(sets.at(r));
    if (auto label = rank_two_case_label(sets.at(2)); label && s.ws == 2)
        out["case"] = *label;
    return out;
}

json error_from_exception(std::exception_ptr ep, int & code)
{
    try {
        std::rethrow_exception(ep);
    } catch (Error const & e) {
        code = std::max(code, exit_code_for(e.kind()));
        return error_object(std::string(to_string(e.kind())), e.what());
    } catch (std::exception const & e) {
        code = std::max(code, 1);
        return error_object("InvalidInput", e.what());
    }
}

} // namespace

int exit_code_for(ErrorKind kind)
{
    return Error(kind, "").is_limit() ? 2 : 1;
}

json error_object(std::string const & kind, std::string const & message)
{
    return json{{"error", kind}, {"message", message}};
}

json analyze(Input const & input, Options const & opts)
{
    json out = json::object();
    DiagonalForm f;
    std::optional<KnotInput> knot;
    if (auto const * k = std::get_if<KnotInput>(&input)) {
        knot = *k;
        if (!k->name.empty())
            out["name"] = k->name;
        f = knot_witt_form(*k);
    } else {
        f = del_preimage(std::get<DelImage>(input));
        out["preimage"] = form_to_json(f);
        knot = KnotInput{"", f};
    }

    FormInvariants const inv = invariants(f);
    Reduction const red = anisotropic_reduce(inv);
    SpanAnalysis const s = witt_span(f);
    DelImage const d = del(f);

    out["form"] = form_to_json(f);
    out["rank"] = inv.rank;
    out["signature"] = inv.signature;
    out["det"] = integer_to_json(knot_det(*knot));
    out["disc"] = integer_to_json(inv.disc);
    out["hasse"] = invariants_to_json(inv)["hasse"];
    out["delta"] = del_to_json(d);
    out["anisotropic_rank"] = red.anisotropic.rank;
    out["witt_index"] = red.peels;
    out.update(span_fields(s));
    out["gamma_c_lower"] = s.ws;
    out["gamma_3_lower"] = s.ws;
    if (auto r = rank_one_representative(f))
        out["rank_one_representative"] = integer_to_json(*r);
    if (auto sp = single_prime_span(d))
        out["single_prime_span"] = *sp;

    json qp = json::object();
    json oracle_trace = json::object();
    std::set<mpz_class> trace_primes;
    for (auto const & p : relevant_primes(inv))
        trace_primes.insert(p);
    for (auto const & a : f.entries())
        for (auto const & p : factorize(a).primes())
            trace_primes.insert(p);
    for (auto const & p : trace_primes) {
        qp[p.get_str()] = is_isotropic_over_Qp(inv, p);
        if (opts.oracle)
            oracle_trace[p.get_str()] = oracle_result(f, p);
    }
    out["isotropy"] = json{{"R", is_isotropic_over_R(inv)},
                           {"Q", is_isotropic_over_Q(inv)},
                           {"Qp", qp}};
    if (opts.oracle)
        out["oracle"] = oracle_trace;
    return out;
}

json hilbert(std::string const & a, std::string const & b, std::string const & place)
{
    mpq_class const x = rational_from_text(a);
    mpq_class const y = rational_from_text(b);
    if (x == 0 || y == 0)
        throw Error(ErrorKind::InvalidInput, "hilbert symbol arguments must be nonzero");
    Place const pl = parse_place(place);
    if (pl.kind == Place::Rational)
        throw Error(ErrorKind::InvalidInput, "hilbert symbol needs a place R or Qp");
    int const s = pl.kind == Place::Real ? hilbert_symbol_real(x, y)
                                         : hilbert_symbol(x, y, pl.p);
    return json{{"a", x.get_str()},
                {"b", y.get_str()},
                {"place", pl.kind == Place::Real ? std::string("R") : pl.p.get_str()},
                {"symbol", s}};
}

json isotropy(Input const & input, std::string const & place, Options const & opts)
{
    Place const pl = parse_place(place);
    DiagonalForm const f = form_of(input);
    FormInvariants const inv = invariants(f);
    json out{{"form", form_to_json(f)}, {"place", place}};
    switch (pl.kind) {
    case Place::Real:
        out["isotropic"] = is_isotropic_over_R(inv);
        break;
    case Place::Rational:
        out["isotropic"] = is_isotropic_over_Q(inv);
        break;
    case Place::Padic:
        out["isotropic"] = is_isotropic_over_Qp(inv, pl.p);
        if (opts.oracle)
            out["oracle"] = oracle_result(f, pl.p);
        break;
    }
    return out;
}

json delta(Input const & input)
{
    return json{{"delta", del_to_json(del(form_of(input)))}};
}

json span(Input const & input)
{
    DiagonalForm const f = form_of(input);
    json out = span_fields(witt_span(f));
    out["signature"] = invariants(f).signature;
    return out;
}

json preimage(Input const & input)
{
    DelImage const d = std::holds_alternative<DelImage>(input)
                           ? std::get<DelImage>(input)
                           : del(form_of(input));
    return json{{"diagonal", form_to_json(del_preimage(d))}};
}

std::vector<json> batch(std::vector<CsvRow> const & rows, Options const & opts,
                        int & exit_code)
{
    std::vector<json> results(rows.size());
    std::vector<int> codes(rows.size(), 0);
    std::atomic<std::size_t> next{0};

    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < rows.size();) {
            CsvRow const & row = rows[i];
            try {
                json payload;
                try {
                    payload = json::parse(row.payload);
                } catch (json::parse_error const & e) {
                    throw Error(ErrorKind::InvalidInput,
                                std::string("malformed JSON payload: ") + e.what());
                }
                if (row.kind != "diagonal" && row.kind != "seifert" &&
                    row.kind != "delta")
                    throw Error(ErrorKind::InvalidInput,
                                "unknown presentation kind '" + row.kind + "'");
                json doc{{row.kind, payload}};
                results[i] = analyze(parse_input(doc, row.name), opts);
                results[i]["name"] = row.name;
            } catch (...) {
                results[i] = error_from_exception(std::current_exception(), codes[i]);
                results[i]["name"] = row.name;
            }
        }
    };

    unsigned n = opts.threads ? opts.threads : std::thread::hardware_concurrency();
    n = std::max(1u, std::min<unsigned>(n, static_cast<unsigned>(rows.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < n; ++t)
        pool.emplace_back(worker);
    worker();
    for (auto & t : pool)
        t.join();

    for (int c : codes)
        exit_code = std::max(exit_code, c);
    return results;
}

std::vector<json> analyze_fixtures(Options const & opts)
{
    std::vector<json> out;
    for (auto const & fx : fixtures()) {
        json r = analyze(fx.knot, opts);
        if (fx.expected_ws)
            r["expected_ws"] = *fx.expected_ws;
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace wittspan::cli
