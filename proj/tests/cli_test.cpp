#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include <symgb/cli.hpp>

namespace
{

struct Result
{
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args)
{
  std::ostringstream out, err;
  int const code = symgb::cli::run_command(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(std::string const &name, std::string const &content)
{
  auto const path = std::filesystem::temp_directory_path() / ("symgb_cli_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

} // namespace

TEST(Cli, CompareWitness)
{
  auto const r = run({"compare", "x1^3*x2^2*x5^5", "x1^5*x2*x3^4*x4^6*x5^9"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, 5), "(23)\n");
  EXPECT_NE(r.out.find("# one-line: [1 3 2 4 5]"), std::string::npos);

  auto const no = run({"compare", "x1*x2^2*x4^2", "x2^3*x3^4*x4"});
  EXPECT_EQ(no.code, 0);
  EXPECT_EQ(no.out, "incomparable\n");
}

TEST(Cli, GbAndMember)
{
  auto const gens = temp_file("gens.txt", "# intro\nx1 + x2\nx1*x2\n");
  auto const gb = run({"gb", gens});
  ASSERT_EQ(gb.code, 0) << gb.err;
  std::istringstream lines(gb.out);
  std::vector<std::string> body;
  for (std::string line; std::getline(lines, line);)
    if (!line.empty() && line[0] != '#')
      body.push_back(line);
  EXPECT_EQ(body, std::vector<std::string>{"x1"});

  auto const basis = temp_file("basis.txt", gb.out);
  auto const one = run({"member", "--basis", basis, "1"});
  EXPECT_EQ(one.code, 1);
  EXPECT_EQ(one.out.substr(0, 6), "false\n");
  auto const x3 = run({"member", "--basis", basis, "x3^2 - 5*x1"});
  EXPECT_EQ(x3.code, 0);
  EXPECT_EQ(x3.out.substr(0, 5), "true\n");

  // unmarked generators are completed first
  EXPECT_EQ(run({"member", "--basis", gens, "x7"}).code, 0);
}

TEST(Cli, Oracle)
{
  auto const r = run({"gb", "--oracle", "x1 + x2", "x1*x2"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("# oracle: agrees"), std::string::npos);
  EXPECT_EQ(run({"member", "--oracle", "--basis", "x1 + x2", "--basis", "x1*x2", "x2"}).code, 0);
}

TEST(Cli, Reduce)
{
  auto const r = run({"reduce", "--basis", "x3*x1 + x2*x1", "x3^2*x2^2 + x2*x1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "x2^3*x1 + x2*x1");
  auto const o = run({"reduce", "--order", "2", "--basis", "x1 + x2", "x1*x2"});
  EXPECT_EQ(o.out.substr(0, o.out.find('\n')), "-x1^2");
}

TEST(Cli, OrbitGb)
{
  auto const r = run({"orbit-gb", "x1^2*x3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("# minimal (2)\nx2*x1^2\nx2^2*x1\n"), std::string::npos);
}

TEST(Cli, ExitCodes)
{
  EXPECT_EQ(run({"gb", "x1 +"}).code, 2);
  EXPECT_EQ(run({"gb", "--field", "fp:8", "x1"}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"compare", "x1"}).code, 2);
  auto const r = run({"gb", "--max-order", "2", "x1 + x2", "x1*x2"});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("x2 + x1"), std::string::npos);
  EXPECT_EQ(run({"gb", "--field", "fp:7", "x1 + x2", "x1*x2"}).code, 0);
}
