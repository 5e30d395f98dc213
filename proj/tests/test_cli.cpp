#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "commands.hpp"
#include "io.hpp"
#include "wittspan/error.hpp"
#include "wittspan/span.hpp"

using namespace wittspan;
using namespace wittspan::cli;

namespace {

struct CliRun {
    int code = 0;
    std::string out;
};

CliRun run_cli(std::string const & args)
{
    std::string const cmd = std::string(WITTSPAN_CLI_PATH) + " " + args + " 2>/dev/null";
    CliRun r;
    FILE * pipe = popen(cmd.c_str(), "r");
    if (!pipe)
        return {-1, ""};
    std::array<char, 4096> buf{};
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe))
        r.out.append(buf.data(), n);
    int const status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::vector<json> lines(std::string const & text)
{
    std::vector<json> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);)
        if (!line.empty())
            out.push_back(json::parse(line));
    return out;
}

} // namespace

TEST(Io, IntegersRoundTrip)
{
    EXPECT_EQ(integer_to_json(mpz_class(-42)), json(-42));
    mpz_class const big("123456789012345678901234567890");
    json const j = integer_to_json(big);
    EXPECT_TRUE(j.is_string());
    EXPECT_EQ(integer_from_json(j), big);
    EXPECT_EQ(integer_from_json(json(7)), 7);
    EXPECT_THROW(integer_from_json(json(1.5)), Error);
    EXPECT_EQ(rational_from_text("-3/6"), mpq_class(-1, 2));
    EXPECT_THROW(rational_from_text("abc"), Error);
}

TEST(Io, DeltaRoundTrip)
{
    DelImage d;
    d.set(WfpElement(3, 1, 0));
    d.set(WfpElement(7, 3, 0));
    d.set(WfpElement(13, 0, 1));
    d.set(WfpElement(17, 1, 1));
    d.set(WfpElement(2, 1, 0));
    EXPECT_EQ(del_from_json(del_to_json(d)), d);
    json const j = json::parse(R"([{"p": 13, "class": "b"}, {"p": 7, "class": "-1"}])");
    DelImage const parsed = del_from_json(j);
    EXPECT_EQ(parsed.at(7), WfpElement(7, 3, 0));
    EXPECT_EQ(parsed.at(13), WfpElement(13, 0, 1));
    EXPECT_THROW(del_from_json(json::parse(R"([{"p": 15, "class": "1"}])")), Error);
    EXPECT_THROW(del_from_json(json::parse(R"([{"p": 13, "class": "7"}])")), Error);
}

TEST(Io, ParseInputKinds)
{
    Input const a = parse_input_text(R"({"name": "k", "diagonal": [-10, -30]})");
    ASSERT_TRUE(std::holds_alternative<KnotInput>(a));
    EXPECT_EQ(std::get<KnotInput>(a).name, "k");
    Input const b = parse_input_text(R"({"seifert": [[-1, 1], [0, -1]]})");
    EXPECT_TRUE(std::holds_alternative<KnotInput>(b));
    Input const c = parse_input_text(R"({"delta": [{"p": 3, "class": "1"}]})");
    EXPECT_TRUE(std::holds_alternative<DelImage>(c));

    EXPECT_THROW(parse_input_text("{"), Error);
    EXPECT_THROW(parse_input_text(R"({"diagonal": [1], "delta": []})"), Error);
    EXPECT_THROW(parse_input_text(R"({"seifert": [[1, 2]]})"), Error);
    EXPECT_THROW(parse_input_text(R"({"diagonal": [0]})"), Error);
}

TEST(Io, Csv)
{
    std::string const text = "name,kind,payload\n"
                             "a,diagonal,\"[-10,-30]\"\n"
                             "\"b,c\",delta,\"[{\"\"p\"\":3,\"\"class\"\":\"\"1\"\"}]\"\r\n"
                             "\n";
    auto const rows = parse_csv(text);
    ASSERT_EQ(rows.size(), 2u);
    EXPECT_EQ(rows[0].name, "a");
    EXPECT_EQ(rows[0].payload, "[-10,-30]");
    EXPECT_EQ(rows[1].name, "b,c");
    EXPECT_EQ(rows[1].payload, R"([{"p":3,"class":"1"}])");
    EXPECT_EQ(csv_escape("x,\"y\""), "\"x,\"\"y\"\"\"");
    EXPECT_EQ(csv_escape("plain"), "plain");
    EXPECT_THROW(parse_csv("a,b\n"), Error);
}

TEST(Commands, AnalyzeNineForty)
{
    json const r = analyze(parse_input_text(R"({"name": "9_40", "diagonal": [-10, -30]})"), {});
    EXPECT_EQ(r.at("ws"), 2);
    EXPECT_EQ(r.at("I2"), json({-2, 0, 2}));
    EXPECT_EQ(r.at("case"), "a1");
    EXPECT_EQ(r.at("signature"), -2);
    EXPECT_EQ(r.at("gamma_c_lower"), 2);
    EXPECT_FALSE(r.contains("rank_one_representative"));
}

TEST(Commands, AnalyzeEmptyAndTrace)
{
    EXPECT_EQ(analyze(parse_input_text(R"({"diagonal": []})"), {}).at("ws"), 0);
    json const r = analyze(parse_input_text(R"({"diagonal": [-5, 3, 21, 7]})"), {true, 0});
    auto const & qp = r.at("isotropy").at("Qp");
    EXPECT_EQ(qp.at("2"), true);
    EXPECT_EQ(qp.at("3"), false);
    EXPECT_EQ(qp.at("5"), true);
    EXPECT_EQ(qp.at("7"), true);
    EXPECT_EQ(r.at("isotropy").at("Q"), false);
    EXPECT_EQ(r.at("oracle"), qp);
}

TEST(Commands, HilbertAndIsotropy)
{
    EXPECT_EQ(hilbert("13", "24", "2").at("symbol"), -1);
    EXPECT_EQ(hilbert("-1", "-1", "R").at("symbol"), -1);
    EXPECT_EQ(hilbert("-1", "-1", "Qp(3)").at("symbol"), 1);
    EXPECT_THROW(hilbert("0", "1", "2"), Error);
    EXPECT_THROW(hilbert("1", "1", "Q"), Error);
    Input const in = parse_input_text(R"({"diagonal": [-5, 3, 21, 7]})");
    EXPECT_EQ(isotropy(in, "Q", {}).at("isotropic"), false);
    EXPECT_EQ(isotropy(in, "Qp:3", {true, 0}).at("oracle"), false);
    EXPECT_EQ(isotropy(in, "R", {}).at("isotropic"), true);
    EXPECT_THROW(isotropy(in, "Qp(4)", {}), Error);
}

TEST(Commands, DeltaAndPreimage)
{
    Input const in = parse_input_text(
        R"({"delta": [{"p": 3, "class": "1"}, {"p": 7, "class": "-1"}, {"p": 13, "class": "b"}]})");
    json const pre = preimage(in);
    DiagonalForm const f(std::vector<mpz_class>{3, -7, 871, 67});
    std::vector<long> got = pre.at("diagonal").get<std::vector<long>>();
    std::sort(got.begin(), got.end());
    EXPECT_EQ(got, (std::vector<long>{-7, 3, 67, 871}));
    EXPECT_EQ(delta(in).at("delta"), del_to_json(del(f)));
}

TEST(Commands, BatchKeepsOrderAndReportsErrors)
{
    std::vector<CsvRow> rows;
    for (int i = 0; i < 40; ++i)
        rows.push_back({"r" + std::to_string(i), "diagonal",
                        "[" + std::to_string(i % 2 ? -(2 * i + 1) : 3) + "]"});
    rows.push_back({"bad", "diagonal", "[0]"});
    rows.push_back({"unknown", "matrix", "[]"});
    int code = 0;
    auto const out = batch(rows, {false, 4}, code);
    ASSERT_EQ(out.size(), rows.size());
    for (std::size_t i = 0; i < 40; ++i) {
        EXPECT_EQ(out[i].at("name"), rows[i].name);
        EXPECT_TRUE(out[i].contains("ws"));
    }
    EXPECT_EQ(out[40].at("error"), "InvalidInput");
    EXPECT_EQ(out[41].at("error"), "InvalidInput");
    EXPECT_EQ(code, 1);

    int clean = 0;
    auto const one = batch({rows[0]}, {}, clean);
    EXPECT_EQ(clean, 0);
    EXPECT_EQ(one[0], out[0]);
}

TEST(Commands, ExitCodes)
{
    EXPECT_EQ(exit_code_for(ErrorKind::InvalidInput), 1);
    EXPECT_EQ(exit_code_for(ErrorKind::DegenerateForm), 1);
    EXPECT_EQ(exit_code_for(ErrorKind::FactorizationLimitExceeded), 2);
    EXPECT_EQ(exit_code_for(ErrorKind::OracleTooLarge), 2);
}

TEST(Commands, FixturesMatchCatalog)
{
    auto const out = analyze_fixtures({});
    ASSERT_EQ(out.size(), fixtures().size());
    for (auto const & r : out)
        if (r.contains("expected_ws"))
            EXPECT_EQ(r.at("ws"), r.at("expected_ws")) << r.at("name");
}

TEST(Binary, AnalyzeInline)
{
    CliRun const r = run_cli("analyze '{\"diagonal\": [-10, -30]}'");
    ASSERT_EQ(r.code, 0);
    auto const out = lines(r.out);
    ASSERT_EQ(out.size(), 1u);
    EXPECT_EQ(out[0].at("ws"), 2);
}

TEST(Binary, ErrorsAndLimits)
{
    EXPECT_EQ(run_cli("analyze '{\"diagonal\": [0]}'").code, 1);
    EXPECT_EQ(run_cli("analyze 'not json'").code, 1);
    EXPECT_EQ(run_cli("--factor-effort 10 analyze "
                      "'{\"diagonal\": [\"1000000000100000000002379\"]}'")
                  .code,
              2);
    EXPECT_EQ(run_cli("hilbert 13 24 2").code, 0);
}

TEST(Binary, BatchFile)
{
    auto const dir = std::filesystem::temp_directory_path() / "wittspan_cli_test";
    std::filesystem::create_directories(dir);
    auto const path = dir / "rows.csv";
    {
        std::ofstream f(path);
        f << "name,kind,payload\n"
          << "nine,diagonal,\"[-10,-30]\"\n"
          << "tref,seifert,\"[[-1,1],[0,-1]]\"\n"
          << "broken,diagonal,\"[\"\n";
    }
    CliRun const r = run_cli("batch " + path.string() + " --threads 2");
    EXPECT_EQ(r.code, 1);
    auto const out = lines(r.out);
    ASSERT_EQ(out.size(), 3u);
    EXPECT_EQ(out[0].at("name"), "nine");
    EXPECT_EQ(out[0].at("ws"), 2);
    EXPECT_EQ(out[1].at("ws"), 1);
    EXPECT_TRUE(out[2].contains("error"));
    std::filesystem::remove_all(dir);
}

TEST(Data, FixtureFileMatchesCatalog)
{
    std::ifstream in(WITTSPAN_FIXTURES_CSV);
    ASSERT_TRUE(in.good());
    std::stringstream text;
    text << in.rdbuf();
    auto const rows = parse_csv(text.str());
    auto const & catalog = fixtures();
    ASSERT_EQ(rows.size(), catalog.size());
    int code = 0;
    auto const out = batch(rows, {}, code);
    EXPECT_EQ(code, 0);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        EXPECT_EQ(rows[i].name, catalog[i].knot.name);
        DiagonalForm const f =
            knot_witt_form(std::get<KnotInput>(parse_input(json{{rows[i].kind, json::parse(rows[i].payload)}})));
        EXPECT_EQ(f, knot_witt_form(catalog[i].knot)) << rows[i].name;
        if (catalog[i].expected_ws)
            EXPECT_EQ(out[i].at("ws"), *catalog[i].expected_ws) << rows[i].name;
    }
}
