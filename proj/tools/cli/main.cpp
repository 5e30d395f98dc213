#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"

#include "commands.hpp"
#include "wittspan/arith.hpp"
#include "wittspan/error.hpp"

using namespace wittspan;
using namespace wittspan::cli;

namespace {

std::string read_stream(std::istream & in)
{
    return std::string(std::istreambuf_iterator<char>(in), {});
}

std::string read_file(std::string const & path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorKind::InvalidInput, "cannot read '" + path + "'");
    return read_stream(in);
}

/// Inline JSON, "-" for stdin, or "@path".
std::string read_document(std::string const & arg)
{
    if (arg == "-")
        return read_stream(std::cin);
    if (!arg.empty() && arg[0] == '@')
        return read_file(arg.substr(1));
    return arg;
}

void emit(json const & j) { std::cout << j.dump() << '\n'; }

void warn_even_determinant(Input const & input)
{
    auto const * k = std::get_if<KnotInput>(&input);
    if (!k || !std::holds_alternative<SeifertMatrix>(k->presentation))
        return;
    mpz_class const d = knot_det(*k);
    if (d % 2 == 0)
        std::cerr << json{{"warning", "det(V + V^T) = " + d.get_str() +
                                          " is even; not a knot Seifert matrix"}}
                         .dump()
                  << '\n';
}

} // namespace

int main(int argc, char ** argv)
{
    CLI::App app{"Witt classes, isotropy and Witt span of rational quadratic forms"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opts;
    std::uint64_t effort = default_factor_effort();
    app.add_option("--factor-effort", effort, "Pollard rho iteration budget")
        ->check(CLI::PositiveNumber);
    app.add_flag("--oracle", opts.oracle, "Also run the brute-force local oracle");

    std::string doc;
    std::string place;
    std::string a, b, p;
    std::string csv_path;
    bool run_fixtures = false;

    auto * analyze_cmd = app.add_subcommand("analyze", "Full report for a form, knot or delta image");
    analyze_cmd->add_option("input", doc, "JSON document, - for stdin, @file");
    analyze_cmd->add_flag("--fixtures", run_fixtures, "Analyze the built-in catalog");

    auto * hilbert_cmd = app.add_subcommand("hilbert", "Hilbert symbol (a, b) at a place");
    hilbert_cmd->add_option("a", a)->required();
    hilbert_cmd->add_option("b", b)->required();
    hilbert_cmd->add_option("place", p, "prime, Qp(p) or R")->required();

    auto * iso_cmd = app.add_subcommand("isotropy", "Isotropy over R, Q or Q_p");
    iso_cmd->add_option("input", doc)->required();
    iso_cmd->add_option("--place", place, "R, Q, Qp(p) or Qp:p")->required();

    auto * delta_cmd = app.add_subcommand("delta", "Residue image of the Witt class");
    delta_cmd->add_option("input", doc)->required();

    auto * ws_cmd = app.add_subcommand("ws", "Witt span with its witness window");
    ws_cmd->add_option("input", doc);
    ws_cmd->add_flag("--fixtures", run_fixtures, "Run the built-in catalog");

    auto * pre_cmd = app.add_subcommand("preimage", "A diagonal form with a given delta image");
    pre_cmd->add_option("input", doc)->required();

    auto * batch_cmd = app.add_subcommand("batch", "Analyze every row of a CSV file");
    batch_cmd->add_option("csv", csv_path, "columns: name, kind, payload")->required();
    batch_cmd->add_option("--threads", opts.threads, "worker threads (0 = all cores)");

    try {
        app.parse(argc, argv);
    } catch (CLI::CallForHelp const & e) {
        return app.exit(e);
    } catch (CLI::CallForAllHelp const & e) {
        return app.exit(e);
    } catch (CLI::ParseError const & e) {
        std::cerr << error_object("InvalidInput", e.what()).dump() << '\n';
        return 1;
    }

    set_default_factor_effort(effort);

    try {
        auto load = [&] {
            if (doc.empty())
                throw Error(ErrorKind::InvalidInput, "missing input document");
            Input in = parse_input_text(read_document(doc));
            warn_even_determinant(in);
            return in;
        };

        if (*analyze_cmd) {
            if (run_fixtures)
                for (auto const & r : analyze_fixtures(opts))
                    emit(r);
            else
                emit(analyze(load(), opts));
        } else if (*hilbert_cmd) {
            emit(hilbert(a, b, p));
        } else if (*iso_cmd) {
            emit(isotropy(load(), place, opts));
        } else if (*delta_cmd) {
            emit(delta(load()));
        } else if (*ws_cmd) {
            if (run_fixtures) {
                for (auto const & fx : fixtures()) {
                    json r = span(fx.knot);
                    r["name"] = fx.knot.name;
                    emit(r);
                }
            } else {
                emit(span(load()));
            }
        } else if (*pre_cmd) {
            emit(preimage(load()));
        } else if (*batch_cmd) {
            int code = 0;
            for (auto const & r : batch(parse_csv(read_file(csv_path)), opts, code))
                emit(r);
            return code;
        }
    } catch (Error const & e) {
        std::cerr << error_object(std::string(to_string(e.kind())), e.what()).dump()
                  << '\n';
        return exit_code_for(e.kind());
    } catch (std::exception const & e) {
        std::cerr << error_object("InvalidInput", e.what()).dump() << '\n';
        return 1;
    }
    return 0;
}
