#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "charp/cli.hpp"
#include "charp/parse.hpp"
#include "support/random.hpp"

using namespace charp;
using charp::testing::Gen;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(const std::vector<std::string>& args, const char* env = nullptr) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err, env);
  return {code, out.str(), err.str()};
}

std::vector<std::string> split_words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> words;
  for (std::string w; in >> w;) words.push_back(w);
  return words;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

const std::filesystem::path kGolden = std::filesystem::path(CHARP_SOURCE_DIR) / "tests" / "golden";

}  // namespace

TEST_CASE("parse_poly") {
  auto r = ring_new(2, {"v"}, {"x", "y"});
  Polynomial f = parse_poly("x^2 + v*y^2", r);
  CHECK(f == Polynomial::variable(r, "x") * Polynomial::variable(r, "x") +
                 Polynomial::variable(r, "v") * Polynomial::variable(r, "y") *
                     Polynomial::variable(r, "y"));
  CHECK(parse_poly("0", r).is_zero());
  CHECK(parse_poly("3*x - 5", r) == parse_poly("x+1", r));
  CHECK(parse_poly("-x", r) == parse_poly("x", r));

  try {
    parse_poly("x + z", r);
    FAIL("expected UnknownIdentifier");
  } catch (const ParseError& e) {
    CHECK(e.code() == ErrorCode::UnknownIdentifier);
    CHECK(e.span().offset == 4);
    CHECK(e.span().length == 1);
    CHECK(e.span().column == 5);
  }
  for (const char* bad : {"x^", "x**y", "2 x", "x +", "(x", "x^-1", ""}) {
    try {
      parse_poly(bad, r);
      FAIL("expected SyntaxError for " << bad);
    } catch (const ParseError& e) {
      CHECK(e.code() == ErrorCode::SyntaxError);
    }
  }
}

TEST_CASE("parse lists, spans across lines, points and indices") {
  auto r = ring_new(3, {"v"}, {"x", "y"});
  CHECK(parse_poly_list("x;y\nx*y", r).size() == 3);
  CHECK(parse_poly_list("x;;y;", r).size() == 2);
  try {
    parse_poly_list("x\ny+w", r);
    FAIL("expected UnknownIdentifier");
  } catch (const ParseError& e) {
    CHECK(e.span().line == 2);
    CHECK(e.span().column == 3);
  }

  Point pt = parse_point("x=0,y=(v+1)/v", r);
  CHECK(pt.at("x").is_zero());
  CHECK(pt.at("y") == Fraction(parse_poly("v+1", r), parse_poly("v", r)));
  CHECK(parse_point(format_point(pt), r) == pt);
  CHECK_THROWS_AS(parse_point("x=1/0,y=0", r), Error);
  CHECK_THROWS_AS(parse_point("x=1,y=v*x", r), Error);
  CHECK_THROWS_AS(parse_fraction("v+1/v", r), Error);

  MultiIndex beta = parse_multi_index("v:1,x:2", r);
  CHECK(beta == MultiIndex{1, 2});
  CHECK(format_multi_index(beta, r) == "v:1,x:2");
  CHECK(parse_multi_index("0", r).is_zero());
  CHECK(format_multi_index(MultiIndex{}, r) == "0");
  CHECK_THROWS_AS(parse_multi_index("w:1", r), Error);
}

TEST_CASE("print/parse round trip") {
  Gen gen(5);
  for (std::uint32_t p : {2u, 3u, 5u, 65521u}) {
    auto r = ring_new(p, {"u", "v"}, {"x", "y", "z"});
    for (int trial = 0; trial < 100; ++trial) {
      Polynomial f = gen.poly(r, 6, 6);
      CHECK(parse_poly(f.to_string(), r) == f);
      Fraction c = gen.coordinate(r);
      CHECK(parse_fraction(c.to_string(), r) == c);
    }
  }
}

TEST_CASE("run: examples from the command line") {
  auto a = call({"--p", "2", "--base", "v", "--vars", "x,y", "sing-locus", "x^2+v*y^2", "--r", "1"});
  CHECK(a.code == cli::kExitOk);
  CHECK(a.out == "x^2+v*y^2\ny^2\n");

  auto b = call({"--p", "2", "--base", "v", "--vars", "x,y", "order", "x^2+v*y^2", "--point", "x=0,y=0"});
  CHECK(b.code == cli::kExitOk);
  CHECK(b.out == "2\n");

  auto c = call({"--p", "2", "--base", "v", "--vars", "x,y", "hasse", "x^2+v*y^2", "--beta", "v:1"});
  CHECK(c.code == cli::kExitOk);
  CHECK(c.out == "y^2\n");
}

TEST_CASE("run: exit codes") {
  // Input errors.
  CHECK(call({"--p", "4", "--vars", "x", "groebner", "x"}).code == cli::kExitInputError);
  CHECK(call({"--p", "2", "--vars", "x", "groebner", "x+w"}).code == cli::kExitInputError);
  CHECK(call({"--p", "2", "--vars", "x,x", "groebner", "x"}).code == cli::kExitInputError);
  CHECK(call({"--p", "2", "--vars", "x", "bogus"}).code == cli::kExitInputError);
  CHECK(call({"--vars", "x", "groebner", "x"}).code == cli::kExitInputError);
  CHECK(call({"--p", "2", "--vars", "x,y", "order", "x", "--point", "x=0"}).code ==
        cli::kExitInputError);
  CHECK(call({"--p", "2", "--vars", "x", "regular", "x", "--r", "1", "--prime-gens", "x"}).code ==
        cli::kExitInputError);
  CHECK(call({"--p", "2", "--vars", "x", "stratify", "x", "--nmax", "0"}).code ==
        cli::kExitInputError);

  // Mathematical errors.
  CHECK(call({"--p", "2", "--base", "v", "--vars", "x", "refit", "x^2", "--point", "x=0"}).code ==
        cli::kExitMathError);
  CHECK(call({"--p", "2", "--vars", "x,y", "regular", "x", "--r", "1", "--point", "x=1,y=0"}).code ==
        cli::kExitMathError);

  auto parse_failure = call({"--p", "2", "--vars", "x", "groebner", "x+w"});
  CHECK(parse_failure.err.find("UnknownIdentifier") != std::string::npos);
}

TEST_CASE("run: output format selection") {
  std::vector<std::string> args{"--p", "2", "--base", "v", "--vars", "x,y", "hasse", "x^2+v*y^2", "--beta", "v:1"};
  CHECK(call(args, "json").out.front() == '{');
  CHECK(call(args, "text").out == "y^2\n");
  auto explicit_text = args;
  explicit_text.insert(explicit_text.begin(), {"--format", "text"});
  CHECK(call(explicit_text, "json").out == "y^2\n");
  CHECK(call(args, "yaml").code == cli::kExitInputError);
}

TEST_CASE("run: @path arguments") {
  auto path = std::filesystem::temp_directory_path() / "charp_cli_gens.txt";
  {
    std::ofstream f(path);
    f << "x^2+v*y^2\ny^2\n";
  }
  auto expanded = cli::expand_file_arguments({"groebner", "@" + path.string()});
  CHECK(expanded[1].rfind("x^2+v*y^2\ny^2", 0) == 0);
  auto res = call({"--p", "2", "--base", "v", "--vars", "x,y", "groebner", "@" + path.string()});
  CHECK(res.code == cli::kExitOk);
  CHECK(res.out == "x^2\ny^2\n");
  std::filesystem::remove(path);
  CHECK(call({"--p", "2", "--vars", "x", "groebner", "@/nonexistent/charp"}).code ==
        cli::kExitInputError);
}

TEST_CASE("golden JSON outputs") {
  std::ifstream cases(kGolden / "cases.txt");
  REQUIRE(cases.good());
  int seen = 0;
  for (std::string line; std::getline(cases, line);) {
    if (line.empty()) continue;
    const auto bar = line.find('|');
    const std::string name = line.substr(0, bar);
    CAPTURE(name);
    auto args = split_words(line.substr(bar + 1));
    auto first = call(args);
    auto second = call(args);
    CHECK(first.out == slurp(kGolden / (name + ".json")));
    CHECK(first.out == second.out);
    CHECK(first.code == (name == "refit_rank_deficient" ? cli::kExitMathError : cli::kExitOk));
    ++seen;
  }
  CHECK(seen >= 10);
}
