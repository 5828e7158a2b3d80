#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hodgepoly/hodgepoly.h"

namespace {

using json = nlohmann::ordered_json;

constexpr int kCacheSchema = 1;

struct CliError {
    int exit_code;
    std::string message;
};

void check(hp_status status)
{
    if (status != HP_OK)
        throw CliError{hp_status_is_internal(status) ? 1 : 2, hp_last_error()};
}

struct Deleter {
    void operator()(hp_result* p) const { hp_result_free(p); }
    void operator()(hp_poly* p) const { hp_poly_free(p); }
    void operator()(hp_chambers* p) const { hp_chambers_free(p); }
    void operator()(hp_report* p) const { hp_report_free(p); }
};
template <typename T>
using Handle = std::unique_ptr<T, Deleter>;

struct Range {
    long lo = 0;
    long hi = -1;
};

Range parse_range(const std::string& text, const std::string& flag)
{
    auto to_long = [&](const std::string& s) {
        std::size_t used = 0;
        long value = 0;
        try {
            value = std::stol(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != s.size())
            throw CliError{2, "invalid range for " + flag + ": '" + text + "' (expected a or a..b)"};
        return value;
    };
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        long v = to_long(text);
        return {v, v};
    }
    return {to_long(text.substr(0, dots)), to_long(text.substr(dots + 2))};
}

std::pair<long, long> parse_rank(const std::string& text)
{
    if (text == "2,1" || text == "(2,1)")
        return {2, 1};
    if (text == "1,2" || text == "(1,2)")
        return {1, 2};
    throw CliError{2, "rank must be 2,1 or 1,2"};
}

// Everything printed for one computed value, independent of where it came from.
struct Rendered {
    std::optional<long> dim;
    json terms = json::array();
    json poincare = json::array();
    std::string text;
    std::string latex;
    std::string poincare_text;
    std::string poincare_latex;
};

Rendered render(const hp_result* result)
{
    Rendered r;
    if (!hp_result_is_empty(result))
        r.dim = hp_result_dim(result);
    const hp_poly* poly = hp_result_poly(result);
    const bool uni = hp_poly_is_univariate(poly);
    for (size_t i = 0; i < hp_poly_term_count(poly); ++i) {
        long u = 0, v = 0;
        const char* c = nullptr;
        check(hp_poly_term(poly, i, &u, &v, &c));
        if (uni)
            r.terms.push_back(json{{"t", u}, {"c", c}});
        else
            r.terms.push_back(json{{"u", u}, {"v", v}, {"c", c}});
    }
    r.text = hp_poly_text(poly);
    r.latex = hp_poly_latex(poly);

    hp_poly* raw = nullptr;
    check(hp_poly_diagonal(poly, &raw));
    Handle<hp_poly> diag(raw);
    for (size_t i = 0; i < hp_poly_term_count(diag.get()); ++i) {
        long t = 0;
        const char* c = nullptr;
        check(hp_poly_term(diag.get(), i, &t, nullptr, &c));
        r.poincare.push_back(json{{"t", t}, {"c", c}});
    }
    r.poincare_text = hp_poly_text(diag.get());
    r.poincare_latex = hp_poly_latex(diag.get());
    return r;
}

json record_json(const json& request, const Rendered& r, bool with_poincare)
{
    json out;
    out["request"] = request;
    out["dim"] = r.dim ? json(*r.dim) : json(nullptr);
    out["terms"] = r.terms;
    if (with_poincare)
        out["poincare"] = r.poincare;
    return out;
}

enum class Target { Triple, Pair, PairFixed, Bundle, BundleFixed };

Target parse_target(const std::string& name)
{
    static const std::map<std::string, Target> names{{"triple", Target::Triple},
                                                     {"pair", Target::Pair},
                                                     {"pair-fixed", Target::PairFixed},
                                                     {"bundle", Target::Bundle},
                                                     {"bundle-fixed", Target::BundleFixed}};
    auto it = names.find(name);
    if (it == names.end())
        throw CliError{2, "unknown target '" + name + "'"};
    return it->second;
}

// One fully specified computation.
struct Request {
    std::string target_name;
    Target target = Target::Triple;
    long g = 2;
    long n1 = 2, n2 = 1;
    long d1 = 0, d2 = 0;
    long d = 0;
    std::string stability;
};

long chamber_of(const Request& q)
{
    long d0 = 0;
    switch (q.target) {
    case Target::Triple:
        check(hp_triple_chamber_index(q.g, q.n1, q.n2, q.d1, q.d2, q.stability.c_str(), &d0));
        break;
    case Target::Pair:
    case Target::PairFixed:
        check(hp_pair_chamber_index(q.d, q.stability.c_str(), &d0));
        break;
    default:
        break;
    }
    return d0;
}

Handle<hp_result> evaluate(const Request& q)
{
    hp_result* raw = nullptr;
    switch (q.target) {
    case Target::Triple:
        check(hp_compute_triple(q.g, q.n1, q.n2, q.d1, q.d2, q.stability.c_str(), &raw));
        break;
    case Target::Pair:
    case Target::PairFixed:
        check(hp_compute_pair(q.g, q.d, q.stability.c_str(), q.target == Target::PairFixed, &raw));
        break;
    case Target::Bundle:
    case Target::BundleFixed:
        check(hp_compute_bundle(q.g, q.d, q.target == Target::BundleFixed, &raw));
        break;
    }
    return Handle<hp_result>(raw);
}

json request_json(const Request& q, long d0, const std::string& canonical_stability)
{
    json r;
    r["target"] = q.target_name;
    r["g"] = q.g;
    switch (q.target) {
    case Target::Triple:
        r["rank"] = std::to_string(q.n1) + "," + std::to_string(q.n2);
        r["d1"] = q.d1;
        r["d2"] = q.d2;
        r["sigma"] = canonical_stability;
        r["d0"] = d0;
        break;
    case Target::Pair:
    case Target::PairFixed:
        r["d"] = q.d;
        r["tau"] = canonical_stability;
        r["d0"] = d0;
        break;
    default:
        r["d"] = q.d;
        break;
    }
    return r;
}

std::string cache_key(const Request& q, long d0)
{
    std::ostringstream os;
    os << q.target_name << "|g=" << q.g;
    if (q.target == Target::Triple)
        os << "|rank=" << q.n1 << "," << q.n2 << "|d1=" << q.d1 << "|d2=" << q.d2;
    else
        os << "|d=" << q.d;
    os << "|d0=" << d0;
    return os.str();
}

class Cache {
public:
    explicit Cache(std::string path) : path_(std::move(path)) { load(); }

    const Rendered* find(const std::string& key) const
    {
        auto it = entries_.find(key);
        return it == entries_.end() ? nullptr : &it->second;
    }

    void store(const std::string& key, const Rendered& r)
    {
        entries_[key] = r;
        dirty_ = true;
    }

    void save() const
    {
        if (!dirty_ || path_.empty())
            return;
        std::ofstream out(path_, std::ios::trunc);
        if (!out) {
            std::cerr << "hodgepoly: warning: cannot write cache file " << path_ << "\n";
            return;
        }
        for (const auto& [key, r] : entries_) {
            json line;
            line["schema"] = kCacheSchema;
            line["key"] = key;
            line["dim"] = r.dim ? json(*r.dim) : json(nullptr);
            line["terms"] = r.terms;
            line["poincare"] = r.poincare;
            line["text"] = r.text;
            line["latex"] = r.latex;
            line["poincare_text"] = r.poincare_text;
            line["poincare_latex"] = r.poincare_latex;
            out << line.dump() << "\n";
        }
    }

private:
    void load()
    {
        if (path_.empty())
            return;
        std::ifstream in(path_);
        if (!in)
            return;
        std::string line;
        std::size_t number = 0;
        try {
            while (std::getline(in, line)) {
                ++number;
                if (line.empty())
                    continue;
                json j = json::parse(line);
                if (j.at("schema").get<int>() != kCacheSchema)
                    throw std::runtime_error("unsupported schema");
                Rendered r;
                if (!j.at("dim").is_null())
                    r.dim = j.at("dim").get<long>();
                r.terms = j.at("terms");
                r.poincare = j.at("poincare");
                r.text = j.at("text").get<std::string>();
                r.latex = j.at("latex").get<std::string>();
                r.poincare_text = j.at("poincare_text").get<std::string>();
                r.poincare_latex = j.at("poincare_latex").get<std::string>();
                if (!r.terms.is_array() || !r.poincare.is_array())
                    throw std::runtime_error("malformed term list");
                entries_[j.at("key").get<std::string>()] = std::move(r);
            }
        } catch (const std::exception& e) {
            std::cerr << "hodgepoly: warning: cache file " << path_ << " is corrupt at line " << number << " (" << e.what()
                      << "); recomputing\n";
            entries_.clear();
            dirty_ = true;
        }
    }

    std::string path_;
    std::map<std::string, Rendered> entries_;
    bool dirty_ = false;
};

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

// ---- compute ----

struct ComputeOptions {
    std::string target;
    long genus = 0;
    std::optional<long> degree, d1, d2;
    std::string rank = "2,1";
    std::optional<std::string> sigma, tau;
    std::string format = "text";
    bool poincare = false;
};

Request build_request(const ComputeOptions& o)
{
    Request q;
    q.target_name = o.target;
    q.target = parse_target(o.target);
    q.g = o.genus;
    auto need = [](const auto& opt, const char* flag) {
        if (!opt)
            throw CliError{2, std::string("missing required option ") + flag};
        return *opt;
    };
    switch (q.target) {
    case Target::Triple:
        std::tie(q.n1, q.n2) = parse_rank(o.rank);
        q.d1 = need(o.d1, "--d1");
        q.d2 = need(o.d2, "--d2");
        q.stability = need(o.sigma, "--sigma");
        break;
    case Target::Pair:
    case Target::PairFixed:
        q.d = need(o.degree, "--degree");
        q.stability = need(o.tau, "--tau");
        break;
    default:
        q.d = need(o.degree, "--degree");
        break;
    }
    return q;
}

int run_compute(const ComputeOptions& o)
{
    const Request q = build_request(o);
    Handle<hp_result> result = evaluate(q);
    const Rendered r = render(result.get());
    const json request = request_json(q, hp_result_chamber(result.get()), hp_result_stability(result.get()));
    if (o.format == "json") {
        std::cout << record_json(request, r, o.poincare).dump() << "\n";
    } else if (o.format == "latex") {
        std::cout << (o.poincare ? r.poincare_latex : r.latex) << "\n";
    } else {
        std::cout << (o.poincare ? r.poincare_text : r.text) << "\n";
    }
    return 0;
}

// ---- chambers ----

struct ChamberOptions {
    long genus = 2;
    std::string rank = "2,1";
    std::optional<long> d1, d2, degree;
    std::string format = "text";
};

int run_chambers(const ChamberOptions& o)
{
    hp_chambers* raw = nullptr;
    json request;
    if (o.degree && !o.d1 && !o.d2) {
        check(hp_pair_chambers(*o.degree, &raw));
        request = json{{"target", "pair"}, {"d", *o.degree}};
    } else {
        if (!o.d1 || !o.d2)
            throw CliError{2, "chambers needs --d1 and --d2 (or --degree for pairs)"};
        auto [n1, n2] = parse_rank(o.rank);
        check(hp_triple_chambers(o.genus, n1, n2, *o.d1, *o.d2, &raw));
        request = json{{"target", "triple"}, {"g", o.genus}, {"rank", o.rank}, {"d1", *o.d1}, {"d2", *o.d2}};
    }
    Handle<hp_chambers> c(raw);
    if (o.format == "json") {
        json out;
        out["request"] = request;
        out["lower"] = hp_chambers_lower(c.get());
        out["upper"] = hp_chambers_upper(c.get());
        out["walls"] = json::array();
        for (size_t i = 0; i < hp_chambers_wall_count(c.get()); ++i) {
            long dm = 0;
            const char* w = hp_chambers_wall(c.get(), i, &dm);
            out["walls"].push_back(json{{"value", w}, {"d_M", dm}});
        }
        out["representatives"] = json::array();
        for (size_t i = 0; i < hp_chambers_rep_count(c.get()); ++i)
            out["representatives"].push_back(hp_chambers_rep(c.get(), i));
        std::cout << out.dump() << "\n";
        return 0;
    }
    std::cout << "interval [" << hp_chambers_lower(c.get()) << "," << hp_chambers_upper(c.get()) << "]\n";
    for (size_t i = 0; i < hp_chambers_wall_count(c.get()); ++i) {
        long dm = 0;
        const char* w = hp_chambers_wall(c.get(), i, &dm);
        std::cout << "wall " << w << " d_M=" << dm << "\n";
    }
    for (size_t i = 0; i < hp_chambers_rep_count(c.get()); ++i)
        std::cout << "chamber " << hp_chambers_rep(c.get(), i) << "\n";
    return 0;
}

// ---- table ----

struct TableOptions {
    std::string target;
    std::string genus = "2";
    std::optional<std::string> degree, d1, d2;
    std::string rank = "2,1";
    std::string format = "json-lines";
    bool poincare = false;
    std::optional<std::string> cache;
};

std::vector<std::string> representatives(hp_chambers* c)
{
    std::vector<std::string> reps;
    for (size_t i = 0; i < hp_chambers_rep_count(c); ++i)
        reps.emplace_back(hp_chambers_rep(c, i));
    return reps;
}

std::vector<Request> table_requests(const TableOptions& o)
{
    const Target target = parse_target(o.target);
    const Range genus = parse_range(o.genus, "--genus");
    std::vector<Request> out;
    auto require = [](const std::optional<std::string>& v, const char* flag) {
        if (!v)
            throw CliError{2, std::string("missing required option ") + flag};
        return parse_range(*v, flag);
    };
    for (long g = genus.lo; g <= genus.hi; ++g) {
        Request base;
        base.target_name = o.target;
        base.target = target;
        base.g = g;
        if (target == Target::Triple) {
            std::tie(base.n1, base.n2) = parse_rank(o.rank);
            const Range r1 = require(o.d1, "--d1");
            const Range r2 = require(o.d2, "--d2");
            for (long d1 = r1.lo; d1 <= r1.hi; ++d1)
                for (long d2 = r2.lo; d2 <= r2.hi; ++d2) {
                    hp_chambers* raw = nullptr;
                    hp_status s = hp_triple_chambers(g, base.n1, base.n2, d1, d2, &raw);
                    if (s == HP_EMPTY_FAMILY)
                        continue;
                    check(s);
                    Handle<hp_chambers> c(raw);
                    for (const auto& rep : representatives(c.get())) {
                        Request q = base;
                        q.d1 = d1;
                        q.d2 = d2;
                        q.stability = rep;
                        out.push_back(q);
                    }
                }
        } else {
            const Range rd = require(o.degree, "--degree");
            for (long d = rd.lo; d <= rd.hi; ++d) {
                Request q = base;
                q.d = d;
                if (target == Target::Bundle || target == Target::BundleFixed) {
                    if (d % 2 != 0)
                        out.push_back(q);
                    continue;
                }
                if (d < 1)
                    continue;
                hp_chambers* raw = nullptr;
                check(hp_pair_chambers(d, &raw));
                Handle<hp_chambers> c(raw);
                for (const auto& rep : representatives(c.get())) {
                    q.stability = rep;
                    out.push_back(q);
                }
            }
        }
    }
    return out;
}

void print_table_row(const TableOptions& o, const Request& q, const json& request, const Rendered& r, bool first)
{
    if (o.format == "json-lines") {
        std::cout << record_json(request, r, o.poincare).dump() << "\n";
        return;
    }
    const std::string stability = request.contains("sigma")  ? request["sigma"].get<std::string>()
                                  : request.contains("tau") ? request["tau"].get<std::string>()
                                                            : std::string();
    const std::string d0 = request.contains("d0") ? std::to_string(request["d0"].get<long>()) : std::string();
    const std::string dim = r.dim ? std::to_string(*r.dim) : std::string();
    const bool triple = q.target == Target::Triple;
    if (o.format == "csv") {
        if (first)
            std::cout << "target,g,rank,d1,d2,d,stability,d0,dim,polynomial" << (o.poincare ? ",poincare" : "") << "\n";
        std::cout << q.target_name << "," << q.g << "," << (triple ? csv_field(request["rank"].get<std::string>()) : "")
                  << "," << (triple ? std::to_string(q.d1) : "") << "," << (triple ? std::to_string(q.d2) : "") << ","
                  << (triple ? "" : std::to_string(q.d)) << "," << stability << "," << d0 << "," << dim << ","
                  << csv_field(r.text);
        if (o.poincare)
            std::cout << "," << csv_field(r.poincare_text);
        std::cout << "\n";
        return;
    }
    std::cout << q.g << " & ";
    if (triple)
        std::cout << q.d1 << " & " << q.d2 << " & $" << stability << "$ & ";
    else if (!stability.empty())
        std::cout << q.d << " & $" << stability << "$ & ";
    else
        std::cout << q.d << " & ";
    std::cout << (r.dim ? dim : "--") << " & $" << r.latex << "$";
    if (o.poincare)
        std::cout << " & $" << r.poincare_latex << "$";
    std::cout << " \\\\\n";
}

int run_table(const TableOptions& o)
{
    if (o.format != "json-lines" && o.format != "csv" && o.format != "latex")
        throw CliError{2, "unknown table format '" + o.format + "'"};
    std::string cache_path;
    if (o.cache)
        cache_path = *o.cache;
    else if (const char* env = std::getenv("HODGEPOLY_CACHE"))
        cache_path = env;
    Cache cache(cache_path);

    bool first = true;
    for (const Request& q : table_requests(o)) {
        const long d0 = chamber_of(q);
        const std::string key = cache_key(q, d0);
        const Rendered* hit = cache.find(key);
        Rendered fresh;
        if (!hit) {
            Handle<hp_result> result = evaluate(q);
            fresh = render(result.get());
            cache.store(key, fresh);
        }
        const Rendered& r = hit ? *hit : fresh;
        print_table_row(o, q, request_json(q, d0, q.stability), r, first);
        first = false;
    }
    cache.save();
    return 0;
}

// ---- verify ----

struct VerifyOptions {
    std::string checks;
    std::optional<std::string> g, d1, d2, pair_d;
    std::uint64_t seed = 0;
    bool seed_set = false;
    std::optional<unsigned> cases;
    std::string inject_fault;
    std::string format = "text";
    bool failures_only = false;
};

int run_verify(const VerifyOptions& o)
{
    hp_verify_config config;
    hp_verify_config_default(&config);
    auto apply = [](const std::optional<std::string>& text, const char* flag, long& lo, long& hi) {
        if (!text)
            return;
        Range r = parse_range(*text, flag);
        lo = r.lo;
        hi = r.hi;
    };
    apply(o.g, "--g", config.g_min, config.g_max);
    apply(o.d1, "--d1", config.d1_min, config.d1_max);
    apply(o.d2, "--d2", config.d2_min, config.d2_max);
    apply(o.pair_d, "--pair-d", config.pair_d_min, config.pair_d_max);
    if (!o.checks.empty())
        config.checks = o.checks.c_str();
    if (o.seed_set)
        config.seed = o.seed;
    if (o.cases)
        config.random_cases = *o.cases;
    if (!o.inject_fault.empty())
        config.inject_fault = o.inject_fault.c_str();

    hp_report* raw = nullptr;
    check(hp_verify_run(&config, &raw));
    Handle<hp_report> report(raw);
    for (size_t i = 0; i < hp_report_count(report.get()); ++i) {
        const char *name = nullptr, *params = nullptr, *detail = nullptr;
        int passed = 0;
        check(hp_report_entry(report.get(), i, &name, &params, &passed, &detail));
        if (o.failures_only && passed)
            continue;
        if (o.format == "json-lines") {
            json line{{"check", name}, {"parameters", params}, {"status", passed ? "pass" : "fail"}};
            if (!passed)
                line["detail"] = detail;
            std::cout << line.dump() << "\n";
        } else {
            std::cout << (passed ? "PASS " : "FAIL ") << name << " [" << params << "]";
            if (!passed)
                std::cout << ": " << detail;
            std::cout << "\n";
        }
    }
    const size_t passed = hp_report_passed(report.get());
    const size_t failed = hp_report_failed(report.get());
    if (o.format == "json-lines")
        std::cout << json{{"summary", {{"passed", passed}, {"failed", failed}, {"seed", config.seed}}}}.dump() << "\n";
    else
        std::cout << "summary: " << passed << " passed, " << failed << " failed (seed " << config.seed << ")\n";
    return failed == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Hodge and Poincare polynomials of rank 2 pair and triple moduli"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "hodgepoly 1.0.0");

    ComputeOptions compute;
    auto* cmd_compute = app.add_subcommand("compute", "Evaluate one moduli space");
    cmd_compute->add_option("target", compute.target, "triple | pair | pair-fixed | bundle | bundle-fixed")->required();
    cmd_compute->add_option("--genus,-g", compute.genus, "Genus of the curve")->required();
    cmd_compute->add_option("--degree,-d", compute.degree, "Degree (pairs and bundles)");
    cmd_compute->add_option("--d1", compute.d1, "Degree of the first bundle (triples)");
    cmd_compute->add_option("--d2", compute.d2, "Degree of the second bundle (triples)");
    cmd_compute->add_option("--rank", compute.rank, "Rank pair, 2,1 or 1,2")->capture_default_str();
    cmd_compute->add_option("--sigma", compute.sigma, "Stability parameter for triples, e.g. 19/2 or 4+");
    cmd_compute->add_option("--tau", compute.tau, "Stability parameter for pairs, e.g. 3/4 or 1-");
    cmd_compute->add_option("--format", compute.format, "text | json | latex")
        ->check(CLI::IsMember({"text", "json", "latex"}))
        ->capture_default_str();
    cmd_compute->add_flag("--poincare", compute.poincare, "Use the Poincare specialization p(t,t)");

    ChamberOptions chambers;
    auto* cmd_chambers = app.add_subcommand("chambers", "List critical values and chamber representatives");
    cmd_chambers->add_option("--genus,-g", chambers.genus)->capture_default_str();
    cmd_chambers->add_option("--rank", chambers.rank)->capture_default_str();
    cmd_chambers->add_option("--d1", chambers.d1);
    cmd_chambers->add_option("--d2", chambers.d2);
    cmd_chambers->add_option("--degree,-d", chambers.degree, "List pair chambers of this degree instead");
    cmd_chambers->add_option("--format", chambers.format)->check(CLI::IsMember({"text", "json"}))->capture_default_str();

    TableOptions table;
    auto* cmd_table = app.add_subcommand("table", "Evaluate every chamber over parameter ranges");
    cmd_table->add_option("--target,-t", table.target, "triple | pair | pair-fixed | bundle | bundle-fixed")->required();
    cmd_table->add_option("--genus,-g", table.genus, "Range a..b")->capture_default_str();
    cmd_table->add_option("--degree,-d", table.degree, "Range a..b (pairs and bundles)");
    cmd_table->add_option("--d1", table.d1, "Range a..b (triples)");
    cmd_table->add_option("--d2", table.d2, "Range a..b (triples)");
    cmd_table->add_option("--rank", table.rank)->capture_default_str();
    cmd_table->add_option("--format", table.format, "json-lines | csv | latex")->capture_default_str();
    cmd_table->add_flag("--poincare", table.poincare, "Include the Poincare specialization");
    cmd_table->add_option("--cache", table.cache, "Cache file (default: $HODGEPOLY_CACHE)");

    VerifyOptions verify;
    auto* cmd_verify = app.add_subcommand("verify", "Run the invariant suite");
    cmd_verify->add_option("--checks", verify.checks, "Comma separated check names (default: all)");
    cmd_verify->add_option("--g", verify.g, "Genus range a..b");
    cmd_verify->add_option("--d1", verify.d1, "d1 range");
    cmd_verify->add_option("--d2", verify.d2, "d2 range");
    cmd_verify->add_option("--pair-d", verify.pair_d, "Pair degree range");
    auto* seed_opt = cmd_verify->add_option("--seed", verify.seed, "Seed for randomized checks");
    cmd_verify->add_option("--cases", verify.cases, "Randomized cases per check");
    cmd_verify->add_option("--inject-fault", verify.inject_fault, "Corrupt the named check (harness self-test)");
    cmd_verify->add_option("--format", verify.format)->check(CLI::IsMember({"text", "json-lines"}))->capture_default_str();
    cmd_verify->add_flag("--failures-only", verify.failures_only, "Print only failing reports and the summary");
    cmd_verify->add_flag("--list", [](std::int64_t) {
        std::cout << hp_verify_check_names() << "\n";
        std::exit(0);
    }, "List check names");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "hodgepoly: " << e.what() << "\n";
        std::cerr << app.help();
        return 2;
    }

    try {
        if (cmd_compute->parsed())
            return run_compute(compute);
        if (cmd_chambers->parsed())
            return run_chambers(chambers);
        if (cmd_table->parsed())
            return run_table(table);
        verify.seed_set = seed_opt->count() > 0;
        return run_verify(verify);
    } catch (const CliError& e) {
        std::cerr << "hodgepoly: " << e.message << "\n";
        return e.exit_code;
    }
}
