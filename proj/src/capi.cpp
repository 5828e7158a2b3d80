#include "hodgepoly/hodgepoly.h"

#include <memory>
#include <new>
#include <sstream>
#include <string>
#include <vector>

#include "hodgepoly/blocks.hpp"
#include "hodgepoly/error.hpp"
#include "hodgepoly/format.hpp"
#include "hodgepoly/triples.hpp"
#include "hodgepoly/verify.hpp"

struct hp_poly {
    bool univariate = false;
    hodge::LaurentPoly laurent;
    hodge::UniPoly uni;
    std::vector<std::string> coeff_text;
    std::string text;
    std::string latex;

    void cache()
    {
        coeff_text.clear();
        if (univariate) {
            for (const auto& [e, c] : uni.terms())
                coeff_text.push_back(c.get_str());
            text = hodge::to_text(uni);
            latex = hodge::to_latex(uni);
        } else {
            for (const auto& [m, c] : laurent.terms())
                coeff_text.push_back(c.get_str());
            text = hodge::to_text(laurent);
            latex = hodge::to_latex(laurent);
        }
    }
};

struct hp_result {
    hp_poly poly;
    long dim = -1;
    long d0 = 0;
    std::string stability;
};

struct hp_chambers {
    std::string lower;
    std::string upper;
    std::vector<std::pair<std::string, long>> walls;
    std::vector<std::string> reps;
};

struct hp_report {
    std::vector<hodge::CheckReport> entries;
    hodge::SuiteSummary summary;
};

namespace {

thread_local std::string last_error;

hp_status to_status(hodge::ErrorCode code)
{
    using hodge::ErrorCode;
    switch (code) {
    case ErrorCode::InvalidArgument: return HP_INVALID_ARGUMENT;
    case ErrorCode::Parse: return HP_PARSE;
    case ErrorCode::GenusOutOfRange: return HP_GENUS_OUT_OF_RANGE;
    case ErrorCode::OnWall: return HP_ON_WALL;
    case ErrorCode::EmptyFamily: return HP_EMPTY_FAMILY;
    case ErrorCode::EvenDegree: return HP_EVEN_DEGREE;
    case ErrorCode::RankMismatch: return HP_RANK_MISMATCH;
    case ErrorCode::WallAtSigmaM: return HP_WALL_AT_SIGMA_M;
    case ErrorCode::DegeneratePoles: return HP_DEGENERATE_POLES;
    case ErrorCode::NotDivisible: return HP_NOT_DIVISIBLE;
    case ErrorCode::OrderExceeded: return HP_ORDER_EXCEEDED;
    case ErrorCode::NotMonomial: return HP_NOT_MONOMIAL;
    case ErrorCode::ZeroAtPole: return HP_ZERO_AT_POLE;
    case ErrorCode::Internal: return HP_INTERNAL;
    }
    return HP_INTERNAL;
}

template <typename F>
hp_status guard(F&& body)
{
    last_error.clear();
    try {
        body();
        return HP_OK;
    } catch (const hodge::Error& e) {
        last_error = e.what();
        return to_status(e.code());
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
        return HP_INTERNAL;
    } catch (const std::exception& e) {
        last_error = e.what();
        return HP_INTERNAL;
    }
}

hp_status null_output()
{
    last_error = "output pointer is null";
    return HP_INVALID_ARGUMENT;
}

hodge::RankPair rank_of(long n1, long n2)
{
    if (n1 == 2 && n2 == 1)
        return hodge::RankPair::R21;
    if (n1 == 1 && n2 == 2)
        return hodge::RankPair::R12;
    throw hodge::Error(hodge::ErrorCode::RankMismatch, "rank must be (2,1) or (1,2)");
}

hodge::StabilityValue parse_stability(const char* text)
{
    if (text == nullptr)
        throw hodge::Error(hodge::ErrorCode::Parse, "missing stability parameter");
    return hodge::StabilityValue::parse(text);
}

std::unique_ptr<hp_result> make_result(const hodge::HodgeResult& r, long d0, std::string stability)
{
    auto out = std::make_unique<hp_result>();
    out->poly.laurent = r.poly;
    out->poly.cache();
    out->dim = r.complex_dim ? *r.complex_dim : -1;
    out->d0 = d0;
    out->stability = std::move(stability);
    return out;
}

std::unique_ptr<hp_poly> make_poly(const hodge::LaurentPoly& p)
{
    auto out = std::make_unique<hp_poly>();
    out->laurent = p;
    out->cache();
    return out;
}

std::unique_ptr<hp_poly> make_poly(const hodge::UniPoly& p)
{
    auto out = std::make_unique<hp_poly>();
    out->univariate = true;
    out->uni = p;
    out->cache();
    return out;
}

hp_status compute_triple(long g, long n1, long n2, long d1, long d2, const char* sigma, bool by_flips,
                         hp_result** out)
{
    if (out == nullptr)
        return null_output();
    return guard([&] {
        const hodge::TripleSpec spec{g, rank_of(n1, n2), d1, d2};
        const hodge::StabilityValue s = parse_stability(sigma);
        hodge::HodgeResult r = by_flips ? hodge::hodge_triples_sum(spec, s) : hodge::hodge_triples_closed(spec, s);
        const long d0 = hodge::chamber_d0(spec, s).d0;
        *out = make_result(r, d0, s.to_string()).release();
    });
}

} // namespace

extern "C" {

const char* hp_status_name(hp_status status)
{
    switch (status) {
    case HP_OK: return "Ok";
    case HP_INVALID_ARGUMENT: return "InvalidArgument";
    case HP_PARSE: return "Parse";
    case HP_GENUS_OUT_OF_RANGE: return "GenusOutOfRange";
    case HP_ON_WALL: return "OnWall";
    case HP_EMPTY_FAMILY: return "EmptyFamily";
    case HP_EVEN_DEGREE: return "EvenDegree";
    case HP_RANK_MISMATCH: return "RankMismatch";
    case HP_WALL_AT_SIGMA_M: return "WallAtSigmaM";
    case HP_DEGENERATE_POLES: return "DegeneratePoles";
    case HP_NOT_DIVISIBLE: return "NotDivisible";
    case HP_ORDER_EXCEEDED: return "OrderExceeded";
    case HP_NOT_MONOMIAL: return "NotMonomial";
    case HP_ZERO_AT_POLE: return "ZeroAtPole";
    case HP_INTERNAL: return "Internal";
    }
    return "Unknown";
}

int hp_status_is_internal(hp_status status)
{
    return status == HP_NOT_DIVISIBLE || status == HP_INTERNAL;
}

const char* hp_last_error(void)
{
    return last_error.c_str();
}

hp_status hp_compute_triple(long g, long n1, long n2, long d1, long d2, const char* sigma, hp_result** out)
{
    return compute_triple(g, n1, n2, d1, d2, sigma, false, out);
}

hp_status hp_compute_triple_by_flips(long g, long n1, long n2, long d1, long d2, const char* sigma, hp_result** out)
{
    return compute_triple(g, n1, n2, d1, d2, sigma, true, out);
}

hp_status hp_compute_pair(long g, long d, const char* tau, int fixed_det, hp_result** out)
{
    if (out == nullptr)
        return null_output();
    return guard([&] {
        const hodge::StabilityValue t = parse_stability(tau);
        hodge::HodgeResult r = hodge::hodge_pairs(g, d, t, fixed_det != 0);
        *out = make_result(r, hodge::pair_chamber(d, t).d0, t.to_string()).release();
    });
}

hp_status hp_compute_bundle(long g, long d, int fixed_det, hp_result** out)
{
    if (out == nullptr)
        return null_output();
    return guard([&] { *out = make_result(hodge::hodge_bundles_odd(g, d, fixed_det != 0), 0, "").release(); });
}

hp_status hp_compute_pair_poincare(long g, long d, const char* tau, hp_poly** out)
{
    if (out == nullptr)
        return null_output();
    return guard([&] {
        *out = make_poly(hodge::poincare_pairs_fixed_det_thaddeus(g, d, parse_stability(tau))).release();
    });
}

hp_status hp_flip_difference(long g, long d1, long d2, long d_m, hp_poly** out)
{
    if (out == nullptr)
        return null_output();
    return guard([&] {
        *out = make_poly(hodge::flip_difference({g, hodge::RankPair::R21, d1, d2}, d_m)).release();
    });
}

hp_status hp_triple_chamber_index(long g, long n1, long n2, long d1, long d2, const char* sigma, long* d0)
{
    if (d0 == nullptr)
        return null_output();
    return guard([&] {
        hodge::require_genus(g);
        const hodge::TripleSpec spec{g, rank_of(n1, n2), d1, d2};
        *d0 = hodge::chamber_d0(spec, parse_stability(sigma)).d0;
    });
}

hp_status hp_pair_chamber_index(long d, const char* tau, long* d0)
{
    if (d0 == nullptr)
        return null_output();
    return guard([&] { *d0 = hodge::pair_chamber(d, parse_stability(tau)).d0; });
}

int hp_result_is_empty(const hp_result* r)
{
    return r == nullptr || r->dim < 0;
}

long hp_result_dim(const hp_result* r)
{
    return r ? r->dim : -1;
}

long hp_result_chamber(const hp_result* r)
{
    return r ? r->d0 : 0;
}

const char* hp_result_stability(const hp_result* r)
{
    return r ? r->stability.c_str() : "";
}

const hp_poly* hp_result_poly(const hp_result* r)
{
    return r ? &r->poly : nullptr;
}

void hp_result_free(hp_result* r)
{
    delete r;
}

size_t hp_poly_term_count(const hp_poly* p)
{
    return p ? p->coeff_text.size() : 0;
}

hp_status hp_poly_term(const hp_poly* p, size_t i, long* u, long* v, const char** coeff)
{
    last_error.clear();
    if (p == nullptr || i >= p->coeff_text.size()) {
        last_error = "term index out of range";
        return HP_INVALID_ARGUMENT;
    }
    long eu = 0, ev = 0;
    if (p->univariate) {
        auto it = p->uni.terms().begin();
        std::advance(it, static_cast<long>(i));
        eu = it->first;
    } else {
        auto it = p->laurent.terms().begin();
        std::advance(it, static_cast<long>(i));
        eu = it->first.u;
        ev = it->first.v;
    }
    if (u)
        *u = eu;
    if (v)
        *v = ev;
    if (coeff)
        *coeff = p->coeff_text[i].c_str();
    return HP_OK;
}

int hp_poly_is_univariate(const hp_poly* p)
{
    return p && p->univariate;
}

int hp_poly_is_zero(const hp_poly* p)
{
    return p == nullptr || p->coeff_text.empty();
}

const char* hp_poly_text(const hp_poly* p)
{
    return p ? p->text.c_str() : "";
}

const char* hp_poly_latex(const hp_poly* p)
{
    return p ? p->latex.c_str() : "";
}

hp_status hp_poly_diagonal(const hp_poly* p, hp_poly** out)
{
    if (out == nullptr || p == nullptr)
        return null_output();
    return guard([&] {
        *out = p->univariate ? make_poly(p->uni).release() : make_poly(hodge::specialize_diagonal(p->laurent)).release();
    });
}

int hp_poly_equal(const hp_poly* a, const hp_poly* b)
{
    if (a == nullptr || b == nullptr)
        return a == b;
    if (a->univariate != b->univariate)
        return 0;
    return a->univariate ? a->uni == b->uni : a->laurent == b->laurent;
}

void hp_poly_free(hp_poly* p)
{
    delete p;
}

hp_status hp_triple_chambers(long g, long n1, long n2, long d1, long d2, hp_chambers** out)
{
    if (out == nullptr)
        return null_output();
    return guard([&] {
        hodge::require_genus(g);
        const hodge::TripleSpec spec{g, rank_of(n1, n2), d1, d2};
        auto walls = hodge::critical_values(spec);
        auto c = std::make_unique<hp_chambers>();
        auto interval = hodge::sigma_interval(spec);
        c->lower = interval->lower.to_string();
        c->upper = interval->upper.to_string();
        for (const auto& w : walls)
            c->walls.emplace_back(w.sigma.to_string(), w.d_m);
        for (const auto& r : hodge::chamber_representatives(spec))
            c->reps.push_back(r.to_string());
        *out = c.release();
    });
}

hp_status hp_pair_chambers(long d, hp_chambers** out)
{
    if (out == nullptr)
        return null_output();
    return guard([&] {
        if (d < 1)
            throw hodge::Error(hodge::ErrorCode::InvalidArgument, "pair degree must be positive");
        auto c = std::make_unique<hp_chambers>();
        c->lower = hodge::Rational(d, 2).to_string();
        c->upper = hodge::Rational(d).to_string();
        for (long w : hodge::pair_walls(d))
            c->walls.emplace_back(hodge::Rational(w).to_string(), w);
        for (const auto& r : hodge::pair_chamber_representatives(d))
            c->reps.push_back(r.to_string());
        *out = c.release();
    });
}

const char* hp_chambers_lower(const hp_chambers* c)
{
    return c ? c->lower.c_str() : "";
}

const char* hp_chambers_upper(const hp_chambers* c)
{
    return c ? c->upper.c_str() : "";
}

size_t hp_chambers_wall_count(const hp_chambers* c)
{
    return c ? c->walls.size() : 0;
}

const char* hp_chambers_wall(const hp_chambers* c, size_t i, long* d_m)
{
    if (c == nullptr || i >= c->walls.size())
        return nullptr;
    if (d_m)
        *d_m = c->walls[i].second;
    return c->walls[i].first.c_str();
}

size_t hp_chambers_rep_count(const hp_chambers* c)
{
    return c ? c->reps.size() : 0;
}

const char* hp_chambers_rep(const hp_chambers* c, size_t i)
{
    if (c == nullptr || i >= c->reps.size())
        return nullptr;
    return c->reps[i].c_str();
}

void hp_chambers_free(hp_chambers* c)
{
    delete c;
}

void hp_verify_config_default(hp_verify_config* config)
{
    if (config == nullptr)
        return;
    const hodge::GridConfig d;
    config->g_min = d.g_min;
    config->g_max = d.g_max;
    config->d1_min = d.d1_min;
    config->d1_max = d.d1_max;
    config->d2_min = d.d2_min;
    config->d2_max = d.d2_max;
    config->pair_d_min = d.pair_d_min;
    config->pair_d_max = d.pair_d_max;
    config->bundle_degrees = nullptr;
    config->bundle_degree_count = 0;
    config->checks = nullptr;
    config->seed = d.seed;
    config->random_cases = d.random_cases;
    config->inject_fault = nullptr;
}

hp_status hp_verify_run(const hp_verify_config* config, hp_report** out)
{
    if (out == nullptr || config == nullptr)
        return null_output();
    return guard([&] {
        hodge::GridConfig grid;
        grid.g_min = config->g_min;
        grid.g_max = config->g_max;
        grid.d1_min = config->d1_min;
        grid.d1_max = config->d1_max;
        grid.d2_min = config->d2_min;
        grid.d2_max = config->d2_max;
        grid.pair_d_min = config->pair_d_min;
        grid.pair_d_max = config->pair_d_max;
        if (config->bundle_degrees != nullptr)
            grid.bundle_degrees.assign(config->bundle_degrees, config->bundle_degrees + config->bundle_degree_count);
        if (config->checks != nullptr) {
            std::stringstream ss(config->checks);
            std::string name;
            while (std::getline(ss, name, ','))
                if (!name.empty())
                    grid.checks.push_back(name);
        }
        grid.seed = config->seed;
        grid.random_cases = config->random_cases;
        if (config->inject_fault != nullptr)
            grid.inject_fault = config->inject_fault;
        auto r = std::make_unique<hp_report>();
        r->entries = hodge::run_suite(grid);
        r->summary = hodge::summarize(r->entries);
        *out = r.release();
    });
}

size_t hp_report_count(const hp_report* r)
{
    return r ? r->entries.size() : 0;
}

size_t hp_report_passed(const hp_report* r)
{
    return r ? r->summary.passed : 0;
}

size_t hp_report_failed(const hp_report* r)
{
    return r ? r->summary.failed : 0;
}

hp_status hp_report_entry(const hp_report* r, size_t i, const char** check, const char** params, int* passed,
                          const char** detail)
{
    if (r == nullptr || i >= r->entries.size()) {
        last_error = "report index out of range";
        return HP_INVALID_ARGUMENT;
    }
    const auto& e = r->entries[i];
    if (check)
        *check = e.check_name.c_str();
    if (params)
        *params = e.parameters.c_str();
    if (passed)
        *passed = e.status == hodge::CheckStatus::Pass;
    if (detail)
        *detail = e.detail.c_str();
    return HP_OK;
}

void hp_report_free(hp_report* r)
{
    delete r;
}

const char* hp_verify_check_names(void)
{
    static const std::string names = [] {
        std::string s;
        for (const auto& n : hodge::check_names())
            s += (s.empty() ? "" : " ") + n;
        return s;
    }();
    return names.c_str();
}

} // extern "C"
