// Acceptance gate: one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "hodgepoly/blocks.hpp"
#include "hodgepoly/error.hpp"
#include "hodgepoly/format.hpp"
#include "hodgepoly/triples.hpp"
#include "hodgepoly/verify.hpp"
#include "oracle.hpp"
#include "process.hpp"

using namespace hodge;
namespace o = oracle;

namespace {

std::string cli_path;

struct Outcome {
    bool ok = true;
    std::string note;

    void expect(bool condition, const std::string& what)
    {
        if (!condition && ok) {
            ok = false;
            note = what;
        }
    }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string spec_label(const TripleSpec& s, const StabilityValue& sigma)
{
    std::ostringstream os;
    os << "g=" << s.g << " d1=" << s.d1 << " d2=" << s.d2 << " sigma=" << sigma.to_string();
    return os.str();
}

Outcome cross_pipeline()
{
    Outcome r;
    const auto start = Clock::now();
    std::size_t chambers = 0;
    for (long g = 2; g <= 3; ++g)
        for (long d2 = -2; d2 <= 0; ++d2)
            for (long d1 = 2 * d2 + 1; d1 <= 2 * d2 + 8; ++d1) {
                const TripleSpec spec{g, RankPair::R21, d1, d2};
                for (const auto& sigma : chamber_representatives(spec)) {
                    ++chambers;
                    r.expect(hodge_triples_closed(spec, sigma) == hodge_triples_sum(spec, sigma),
                             "mismatch at " + spec_label(spec, sigma));
                }
            }
    const double t = seconds_since(start);
    r.expect(chambers > 0, "no chambers enumerated");
    r.expect(t < 10.0, "took " + std::to_string(t) + " s");
    if (r.ok)
        r.note = std::to_string(chambers) + " chambers";
    return r;
}

Outcome smallest_pairs()
{
    Outcome r;
    const StabilityValue tau{Rational(3, 4)};
    r.expect(o::from(hodge_pairs(2, 1, tau, true).poly) == 1 + o::uv(1), "fixed determinant is not 1 + uv");
    r.expect(o::from(hodge_pairs(2, 1, tau, false).poly) == o::jac(2) * (1 + o::uv(1)),
             "non-fixed is not (1+u)^2(1+v)^2(1+uv)");
    return r;
}

Outcome bundles_via_triples()
{
    Outcome r;
    const auto start = Clock::now();
    for (long g = 2; g <= 4; ++g)
        for (long d : {1L, 3L}) {
            try {
                r.expect(hodge_bundles_via_triples(g, d) == hodge_bundles_odd(g, d, false).poly,
                         "mismatch at g=" + std::to_string(g) + " d=" + std::to_string(d));
            } catch (const Error& e) {
                r.expect(false, std::string("division failed: ") + e.what());
            }
        }
    const double t = seconds_since(start);
    r.expect(t < 30.0, "took " + std::to_string(t) + " s");
    return r;
}

Outcome classical_fixture()
{
    Outcome r;
    const o::Poly expected{{1, 0, 0}, {1, 1, 1}, {2, 2, 1}, {2, 1, 2}, {1, 2, 2}, {1, 3, 3}};
    HodgeResult m = hodge_bundles_odd(2, 1, true);
    r.expect(o::from(m.poly) == expected, "Hodge polynomial differs: " + to_text(m.poly));
    r.expect(o::from(specialize_diagonal(m.poly)) == std::map<int, long long>{{0, 1}, {2, 1}, {3, 4}, {4, 1}, {6, 1}},
             "Poincare polynomial differs: " + to_text(specialize_diagonal(m.poly)));
    return r;
}

Outcome thaddeus()
{
    Outcome r;
    std::size_t n = 0;
    for (long g = 2; g <= 3; ++g)
        for (long d = 1; d <= 6; ++d)
            for (const auto& tau : pair_chamber_representatives(d)) {
                ++n;
                r.expect(specialize_diagonal(hodge_pairs(g, d, tau, true).poly) ==
                             poincare_pairs_fixed_det_thaddeus(g, d, tau),
                         "mismatch at g=" + std::to_string(g) + " d=" + std::to_string(d) + " tau=" + tau.to_string());
            }
    if (r.ok)
        r.note = std::to_string(n) + " chambers";
    return r;
}

Outcome duality()
{
    Outcome r;
    const std::vector<std::pair<long, long>> degrees{{2, 2}, {1, 0}, {1, 1}, {2, 1}, {3, 2}, {3, 4},
                                                     {4, 3}, {2, -1}, {5, 2}, {4, 6}};
    std::size_t n = 0;
    for (long g = 2; g <= 3; ++g)
        for (auto [d1, d2] : degrees) {
            const TripleSpec spec{g, RankPair::R12, d1, d2};
            const TripleSpec dual{g, RankPair::R21, -d2, -d1};
            r.expect(sigma_interval(spec).has_value(), "degree pair (" + std::to_string(d1) + "," + std::to_string(d2) +
                                                           ") is empty");
            for (const auto& sigma : chamber_representatives(spec)) {
                ++n;
                HodgeResult a = hodge_triples_closed(spec, sigma);
                HodgeResult b = hodge_triples_closed(dual, sigma);
                r.expect(a.poly == b.poly, "dual mismatch at " + spec_label(spec, sigma));
                const long d0 = ((sigma.value - Rational(d1 + d2)) / Rational(3)).floor().get_si() + 1;
                r.expect(o::from(a.poly) == o::rank12(static_cast<int>(g), static_cast<int>(d1), static_cast<int>(d2),
                                                      static_cast<int>(d0)),
                         "rank (1,2) formula mismatch at " + spec_label(spec, sigma));
            }
        }
    if (r.ok)
        r.note = std::to_string(n) + " chambers";
    return r;
}

Outcome suite(const std::vector<std::string>& checks, GridConfig grid)
{
    Outcome r;
    grid.checks = checks;
    auto reports = run_suite(grid);
    const SuiteSummary s = summarize(reports);
    for (const auto& rep : reports)
        if (rep.status == CheckStatus::Fail) {
            r.expect(false, rep.check_name + " [" + rep.parameters + "]: " + rep.detail);
            break;
        }
    for (const auto& name : checks) {
        bool seen = false;
        for (const auto& rep : reports)
            seen = seen || rep.check_name == name;
        r.expect(seen, "check " + name + " produced no reports");
    }
    if (r.ok)
        r.note = std::to_string(s.passed) + " checks";
    return r;
}

Outcome structural()
{
    GridConfig grid;
    grid.g_min = 2;
    grid.g_max = 3;
    grid.d1_min = -3;
    grid.d1_max = 8;
    grid.d2_min = -2;
    grid.d2_max = 0;
    grid.random_cases = 100;
    return suite({"hodge-symmetry", "palindrome-duality", "nonnegativity", "chamber-constancy", "ring-laws",
                  "geometric-series"},
                 grid);
}

Outcome residue()
{
    GridConfig grid;
    grid.g_min = 2;
    grid.g_max = 3;
    Outcome r = suite({"residue"}, grid);
    auto [s, v] = residue_extract_check(2, Rational(1), Rational(2), Rational(3), Rational(0), Rational(0));
    r.expect(s == Rational(25) && v == Rational(25), "fixture gave " + s.to_string() + ", " + v.to_string());
    return r;
}

Outcome symmetric_products()
{
    Outcome r;
    for (int g = 2; g <= 3; ++g)
        for (int k = 0; k <= 8; ++k)
            r.expect(o::from(sym_power(g, k)) == o::sym(g, k),
                     "mismatch at g=" + std::to_string(g) + " k=" + std::to_string(k));
    r.expect(o::from(sym_power(2, 1)) == o::Poly{{1, 0, 0}, {2, 1, 0}, {2, 0, 1}, {1, 1, 1}}, "Sym^1 fixture");
    r.expect(o::from(specialize_diagonal(sym_power(2, 2))) ==
                 std::map<int, long long>{{0, 1}, {1, 4}, {2, 7}, {3, 4}, {4, 1}},
             "Sym^2 diagonal fixture");
    return r;
}

Outcome cli_end_to_end()
{
    Outcome r;
    if (cli_path.empty()) {
        r.expect(false, "no CLI path given");
        return r;
    }
    auto run = [](const std::string& args, const std::string& env = {}) { return proc::run(cli_path + " " + args, env); };

    auto a = run("compute pair-fixed --genus 2 --degree 1 --tau 3/4 --format text");
    r.expect(a.exit_code == 0 && a.out == "1 + uv\n", "pair-fixed example: exit " + std::to_string(a.exit_code) + " '" + a.out + "'");
    auto b = run("compute pair-fixed --genus 2 --degree 1 --tau 1");
    r.expect(b.exit_code == 2 && b.err.find("tau=1 is a critical value; use 1+ or 1-") != std::string::npos,
             "wall example: exit " + std::to_string(b.exit_code) + " '" + b.err + "'");
    auto c = run("compute bundle-fixed --genus 2 --degree 1 --poincare");
    r.expect(c.exit_code == 0 && c.out == "1 + t^2 + 4 t^3 + t^4 + t^6\n",
             "bundle-fixed example: exit " + std::to_string(c.exit_code) + " '" + c.out + "'");

    char name[] = "/tmp/hodgepoly-accept-XXXXXX";
    int fd = mkstemp(name);
    if (fd < 0) {
        r.expect(false, "cannot create cache file");
        return r;
    }
    close(fd);
    std::remove(name);
    const std::string env = std::string("HODGEPOLY_CACHE=") + name;
    const std::string table = "table --target triple --genus 2..3 --d1 -3..8 --d2 -2..0 --poincare";
    auto cold = run(table, env);
    auto warm = run(table, env);
    std::remove(name);
    r.expect(cold.exit_code == 0 && warm.exit_code == 0, "table run failed: " + cold.err + warm.err);
    r.expect(!cold.out.empty(), "table produced no rows");
    r.expect(cold.out == warm.out, "warm-cache rerun differs");
    return r;
}

} // namespace

int main(int argc, char** argv)
{
    if (argc > 1)
        cli_path = argv[1];

    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"cross-pipeline closed form equals flip sum", cross_pipeline},
        {"smallest pair moduli", smallest_pairs},
        {"bundles recovered from small-sigma triples", bundles_via_triples},
        {"genus 2 fixed-determinant bundle fixture", classical_fixture},
        {"one-variable pair formula agreement", thaddeus},
        {"rank (1,2) duality", duality},
        {"structural invariant suite", structural},
        {"residue extraction", residue},
        {"symmetric product oracle", symmetric_products},
        {"command line end to end", cli_end_to_end},
    };

    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome r;
        try {
            r = criteria[i].second();
        } catch (const std::exception& e) {
            r.ok = false;
            r.note = std::string("exception: ") + e.what();
        }
        failed += !r.ok;
        std::cout << (r.ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first;
        if (!r.note.empty())
            std::cout << " (" << r.note << ")";
        std::cout << std::endl;
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
    return failed == 0 ? 0 : 1;
}
