#include <doctest.h>

#include <cstdio>
#include <string>

#include <json.hpp>

#include "process.hpp"

#ifndef HODGEPOLY_CLI
#error "HODGEPOLY_CLI must name the command-line executable"
#endif

namespace {

proc::Output cli(const std::string& args, const std::string& env = {})
{
    return proc::run(std::string(HODGEPOLY_CLI) + " " + args, env);
}

} // namespace

TEST_CASE("compute examples")
{
    auto a = cli("compute pair-fixed --genus 2 --degree 1 --tau 3/4 --format text");
    CHECK(a.exit_code == 0);
    CHECK(a.out == "1 + uv\n");

    auto b = cli("compute pair-fixed --genus 2 --degree 1 --tau 1");
    CHECK(b.exit_code == 2);
    CHECK(b.err.find("tau=1 is a critical value; use 1+ or 1-") != std::string::npos);

    auto c = cli("compute bundle-fixed --genus 2 --degree 1 --poincare");
    CHECK(c.exit_code == 0);
    CHECK(c.out == "1 + t^2 + 4 t^3 + t^4 + t^6\n");

    auto d = cli("compute triple --genus 2 --d1 5 --d2 0 --sigma 19/2 --format latex");
    CHECK(d.exit_code == 0);
    CHECK(d.out.find("(uv)^{9}") != std::string::npos);
}

TEST_CASE("exit codes")
{
    CHECK(cli("compute triple --genus 1 --d1 5 --d2 0 --sigma 3").exit_code == 2);
    CHECK(cli("compute triple --genus 2 --d1 5 --d2 0 --sigma 7").exit_code == 2);
    CHECK(cli("compute triple --genus 2 --d1 5 --d2 0 --sigma x/2").exit_code == 2);
    CHECK(cli("compute triple --genus 2 --d1 5 --sigma 3").exit_code == 2);
    CHECK(cli("compute bundle --genus 2 --degree 2").exit_code == 2);
    CHECK(cli("compute nonsense --genus 2").exit_code == 2);
    auto usage = cli("compute --genus 2");
    CHECK(usage.exit_code == 2);
    CHECK(usage.err.find("Usage") != std::string::npos);
    CHECK(cli("frobnicate").exit_code == 2);
    CHECK(cli("--help").exit_code == 0);
}

TEST_CASE("json output round-trips and is deterministic")
{
    const std::string args = "compute triple --genus 3 --rank 1,2 --d1 3 --d2 2 --sigma 7/2 --format json --poincare";
    auto a = cli(args);
    auto b = cli(args);
    REQUIRE(a.exit_code == 0);
    CHECK(a.out == b.out);
    auto j = nlohmann::ordered_json::parse(a.out);
    CHECK(j.dump() + "\n" == a.out);
    CHECK(j["request"]["sigma"] == "7/2");
    CHECK(j["request"]["rank"] == "1,2");
    CHECK(j["dim"] == 3 * 3 - 2 + 2 * 3 - 2);
    CHECK(j["terms"].front()["c"].is_string());
    CHECK(j["poincare"].is_array());

    auto empty = nlohmann::json::parse(cli("compute triple --genus 2 --d1 5 --d2 0 --sigma 21/2 --format json").out);
    CHECK(empty["dim"].is_null());
    CHECK(empty["terms"].empty());
}

TEST_CASE("chambers listing")
{
    auto a = cli("chambers --d1 5 --d2 0");
    CHECK(a.exit_code == 0);
    CHECK(a.out == "interval [5/2,10]\nwall 4 d_M=3\nwall 7 d_M=4\nwall 10 d_M=5\nchamber 13/4\nchamber 11/2\nchamber 17/2\n");
    auto b = cli("chambers --d1 0 --d2 1");
    CHECK(b.exit_code == 2);
    CHECK(b.err.find("moduli empty: mu1 < mu2") != std::string::npos);
    auto c = cli("chambers --d1 1 --d2 0");
    CHECK(c.exit_code == 0);
    CHECK(c.out.find("wall 2 d_M=1\n") != std::string::npos);
}

TEST_CASE("tables and cache")
{
    auto latex = cli("table --target bundle-fixed --genus 2 --degree 1..3 --format latex");
    CHECK(latex.exit_code == 0);
    CHECK(latex.out ==
          "2 & 1 & 3 & $1 + uv + 2uv^{2} + 2u^{2}v + (uv)^{2} + (uv)^{3}$ \\\\\n"
          "2 & 3 & 3 & $1 + uv + 2uv^{2} + 2u^{2}v + (uv)^{2} + (uv)^{3}$ \\\\\n");

    auto none = cli("table --target pair --degree 3..1");
    CHECK(none.exit_code == 0);
    CHECK(none.out.empty());

    char name[] = "/tmp/hodgepoly-cache-XXXXXX";
    int fd = mkstemp(name);
    REQUIRE(fd >= 0);
    close(fd);
    std::remove(name);
    const std::string args = "table --target triple --genus 2 --d1 1..6 --d2 -1..0 --poincare";
    const std::string env = std::string("HODGEPOLY_CACHE=") + name;
    auto cold = cli(args, env);
    auto warm = cli(args, env);
    CHECK(cold.exit_code == 0);
    CHECK(cold.out == warm.out);
    CHECK(cold.out == cli(args).out);

    {
        std::ofstream corrupt(name, std::ios::app);
        corrupt << "{not json\n";
    }
    auto recovered = cli(args, env);
    CHECK(recovered.exit_code == 0);
    CHECK(recovered.out == cold.out);
    CHECK(recovered.err.find("corrupt") != std::string::npos);
    CHECK(cli(args, env).err.empty());
    std::remove(name);

    auto csv = cli("table --target pair-fixed --genus 2 --degree 1 --format csv");
    CHECK(csv.out == "target,g,rank,d1,d2,d,stability,d0,dim,polynomial\npair-fixed,2,,,,1,3/4,1,1,1 + uv\n");
}

TEST_CASE("verify command")
{
    auto ok = cli("verify --checks cross-pipeline --g 2 --d1 1..8 --failures-only");
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("0 failed") != std::string::npos);
    auto bad = cli("verify --checks cross-pipeline --g 2 --d1 1..4 --inject-fault cross-pipeline");
    CHECK(bad.exit_code != 0);
    CHECK(bad.out.find("FAIL cross-pipeline") != std::string::npos);
    CHECK(cli("verify --checks nope").exit_code == 2);
    CHECK(cli("verify --g 3..2").exit_code == 2);
}
