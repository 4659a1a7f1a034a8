#include "onegen/cert.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <sstream>

#include "onegen/cohomology.hpp"
#include "onegen/genericity.hpp"
#include "onegen/geometry.hpp"
#include "onegen/homological.hpp"

namespace onegen {

namespace {

const std::vector<std::pair<std::string, std::string>> &statement_table()
{
    static const std::vector<std::pair<std::string, std::string>> table = {
        {"one_generic", "M is 1-generic: lambda M mu != 0 for all nonzero lambda, mu"},
        {"height_check", "I_m(M) has height n-m+1"},
        {"dim_formula", "dim k[M]/I_m(M) = (r+1)-(n-m+1) >= 2m-2, with equality for Hankel matrices"},
        {"koszul_height", "the n bilinear forms sum_i y_i l_ij define an ideal of height n off y = 0"},
        {"en_build", "the Eagon-Northcott complex of M is a graded complex (d^2 = 0)"},
        {"en_exactness", "the Eagon-Northcott complex resolves k[M]/I_m(M)"},
        {"betti_match", "b_i = C(n, i+m-1) * C(i+m-2, m-1), in twist -(i+m-1) for i >= 1"},
        {"regularity_check", "k[M]/I_m(M) has regularity m-1"},
        {"hilbert_consistency", "the resolution and a Groebner basis of I_m(M) give the same Hilbert series"},
        {"a_invariant_negative", "the a-invariant of k[M]/I_m(M) is negative"},
        {"image_ideal_check", "O_X = pi_* O_Z: I_m(M) is the saturated elimination ideal of Z"},
        {"rank_ab_exhaustive", "rank A_b = n for every nonzero b"},
        {"fiber_stats", "on a dense open subset of X, M|_a has rank m-1 and a unique left kernel b"},
        {"submaximal_height", "height I_{m-1}(M') = n-m+2 for M' the first m-1 rows"},
    };
    return table;
}

// Checks that assume M is 1-generic.
bool conditional(const std::string &name)
{
    return name != "one_generic" && name != "en_build" && name != "rank_ab_exhaustive";
}

// Checks about maximal minors, meaningless when m > n.
bool needs_m_le_n(const std::string &name)
{
    return name != "one_generic" && name != "koszul_height" && name != "rank_ab_exhaustive";
}

Json count_json(const Count &c)
{
    if (c >= 0 && c <= Count(INT64_MAX))
        return c.convert_to<std::int64_t>();
    return c.str();
}

Json opt_json(const std::optional<std::size_t> &v)
{
    return v ? Json(*v) : Json(nullptr);
}

Json rationals_json(const std::vector<Rational> &v)
{
    Json out = Json::array();
    for (const auto &x : v)
        out.push_back(RationalField{}.to_string(x));
    return out;
}

Json witness_json(const LinearMatrix &M, const GenericityWitness &w)
{
    Json out;
    out["field"] = w.field.name();
    out["lambda"] = rationals_json(w.lambda);
    out["mu"] = rationals_json(w.mu);
    out["text"] = w.to_string();
    out["verified"] = verify_witness(M, w);
    return out;
}

Json verdict_json(const LinearMatrix &M, const GenericityVerdict &v)
{
    Json out;
    out["mode"] = v.mode_label();
    out["verdict"] = to_string(v.verdict);
    if (v.mode == GenericityMode::exhaustive)
        out["points_checked"] = v.points_checked;
    out["witness"] = v.witness ? witness_json(M, *v.witness) : Json(nullptr);
    out["note"] = v.note;
    return out;
}

Json betti_json(const BettiTable &B)
{
    Json out = Json::array();
    for (const auto &[key, rank] : B.entries)
        if (rank != 0)
            out.push_back(Json{{"i", key.first}, {"twist", key.second}, {"rank", count_json(rank)}});
    return out;
}

Json counts_json(const std::vector<BigInt> &v)
{
    Json out = Json::array();
    for (const auto &c : v)
        out.push_back(count_json(c));
    return out;
}

struct Outcome {
    CheckStatus status;
    std::string reason;
    Json details = Json::object();
};

Outcome verdict_of(bool ok, Json details)
{
    return {ok ? CheckStatus::pass : CheckStatus::fail, "", std::move(details)};
}

// State shared between checks of one run.
template <class K>
class Runner {
public:
    Runner(const LinearMatrix &M, const SuiteConfig &cfg, const K &field, std::uint32_t prime)
        : M_(M), cfg_(cfg), field_(field), prime_(prime), ring_(x_ring(M, field))
    {
    }

    Outcome run(const std::string &name)
    {
        static const std::map<std::string, Outcome (Runner::*)()> dispatch = {
            {"one_generic", &Runner::one_generic},
            {"height_check", &Runner::height_check},
            {"dim_formula", &Runner::dim_formula},
            {"koszul_height", &Runner::koszul_height},
            {"en_build", &Runner::en_build},
            {"en_exactness", &Runner::en_exactness},
            {"betti_match", &Runner::betti_match},
            {"regularity_check", &Runner::regularity_check},
            {"hilbert_consistency", &Runner::hilbert_consistency},
            {"a_invariant_negative", &Runner::a_invariant_negative},
            {"image_ideal_check", &Runner::image_ideal_check},
            {"rank_ab_exhaustive", &Runner::rank_ab_exhaustive},
            {"fiber_stats", &Runner::fiber_stats_check},
            {"submaximal_height", &Runner::submaximal},
        };
        return (this->*dispatch.at(name))();
    }

    bool hypothesis_failed() const { return hypothesis_failed_; }

private:
    Ideal<K> minor_ideal_() const { return Ideal<K>(ring_, minor_ideal(M_, M_.m(), ring_)); }

    const FreeComplex<K> &en()
    {
        if (!en_)
            en_ = eagon_northcott(M_, ring_);
        return *en_;
    }

    const GenericityVerdict &exhaustive()
    {
        if (!exhaustive_)
            exhaustive_ = is_one_generic_exhaustive(M_, prime_);
        return *exhaustive_;
    }

    std::size_t minor_height()
    {
        if (!height_) {
            auto h = height(minor_ideal_(), cfg_.limits);
            if (!h)
                throw DomainError("I_m(M) is the unit ideal");
            height_ = *h;
        }
        return *height_;
    }

    Outcome one_generic()
    {
        auto sym = is_one_generic_symbolic(M_, cfg_.limits);
        Json d;
        d["symbolic"] = verdict_json(M_, sym);
        std::optional<GenericityVerdict> ex;
        try {
            ex = exhaustive();
            d["exhaustive"] = verdict_json(M_, *ex);
        } catch (const ResourceLimit &e) {
            d["exhaustive"] = Json{{"mode", "exhaustive(p=" + std::to_string(prime_) + ")"},
                                   {"verdict", "not run"},
                                   {"note", e.what()}};
        }
        switch (sym.verdict) {
        case Verdict::one_generic:
            return {CheckStatus::pass, "", d};
        case Verdict::not_one_generic:
            hypothesis_failed_ = true;
            return {CheckStatus::fail, "", d};
        case Verdict::inconclusive:
            // Over GF(q) an exhaustive witness is a genuine counter-witness.
            if (M_.field().is_prime() && ex && ex->verdict == Verdict::not_one_generic) {
                hypothesis_failed_ = true;
                return {CheckStatus::fail, "", d};
            }
            return {CheckStatus::inconclusive, sym.note, d};
        }
        return {CheckStatus::error, "unreachable", d};
    }

    Outcome height_check()
    {
        std::size_t h = minor_height();
        std::size_t expected = M_.n() - M_.m() + 1;
        return verdict_of(h == expected,
                          {{"computed", h}, {"expected", expected}, {"primality", "not independently verified"}});
    }

    Outcome dim_formula()
    {
        auto rec = dim_formula_check(M_, minor_height());
        Json d{{"computed", rec.dimension},
               {"expected", rec.expected_dimension},
               {"lower_bound", rec.lower_bound},
               {"bound_holds", rec.bound_holds},
               {"lower_bound_attained", rec.equality}};
        return verdict_of(rec.dimension == rec.expected_dimension && rec.bound_holds, d);
    }

    Outcome koszul_height()
    {
        auto res = koszul_height_check(M_, field_, cfg_.limits);
        Json d{{"computed_height", opt_json(res.height())},
               {"expected_height", M_.n()},
               {"dimension_off_y0", opt_json(res.dimension)},
               {"expected_dimension", res.expected_dimension},
               {"unsaturated_dimension", opt_json(res.unsaturated_dimension)},
               {"ambient_variables", res.ambient}};
        return verdict_of(res.passed, d);
    }

    Outcome en_build()
    {
        const auto &C = en();
        auto bad = nonzero_composite(C);
        bool graded = degrees_consistent(C);
        Json ranks = Json::array();
        for (auto r : C.ranks())
            ranks.push_back(r);
        Json d{{"ranks", ranks},
               {"length", C.length()},
               {"nonzero_composite_at", opt_json(bad)},
               {"degrees_consistent", graded}};
        return verdict_of(!bad && graded, d);
    }

    Outcome en_exactness()
    {
        int D = cfg_.degree_bound.value_or(static_cast<int>(M_.n() + M_.m()));
        auto rep = graded_exactness(en(), prime_, D);
        Json d{{"prime", prime_}, {"degree_bound", D}, {"cells_checked", rep.cells.size()}};
        if (auto f = rep.first_failure())
            d["first_failure"] = Json{{"position", f->position},
                                      {"degree", f->degree},
                                      {"dimension", count_json(f->dimension)},
                                      {"rank_out", f->rank_out},
                                      {"rank_in", f->rank_in}};
        d["h0"] = counts_json(rep.h0);
        return verdict_of(rep.all_exact(), d);
    }

    Outcome betti_match()
    {
        auto computed = betti_table(en());
        auto predicted = predicted_betti(M_.m(), M_.n());
        return verdict_of(computed == predicted, {{"computed", betti_json(computed)},
                                                  {"expected", betti_json(predicted)},
                                                  {"table", computed.to_grid()}});
    }

    Outcome regularity_check()
    {
        int reg = regularity(betti_table(en()));
        int expected = static_cast<int>(M_.m()) - 1;
        return verdict_of(reg == expected, {{"computed", reg}, {"expected", expected}});
    }

    Outcome hilbert_consistency()
    {
        const std::size_t upto = 10;
        auto from_complex = hilbert_from_complex(en());
        auto from_groebner = hilbert_series(minor_ideal_(), cfg_.limits);
        auto a = from_complex.coefficients(upto), b = from_groebner.coefficients(upto);
        Json d{{"degrees", "0.." + std::to_string(upto)},
               {"computed", counts_json(a)},
               {"expected", counts_json(b)},
               {"series", from_complex.reduced().to_string()}};
        return verdict_of(a == b, d);
    }

    Outcome a_invariant_negative()
    {
        auto h = hilbert_from_complex(en());
        int a = a_invariant(h);
        return verdict_of(a < 0, {{"computed", a}, {"expected", "< 0"}, {"series", h.reduced().to_string()}});
    }

    Outcome image_ideal_check()
    {
        auto image = image_ideal(M_, field_, cfg_.limits);
        bool equal = ideal_equal(image, minor_ideal_(), cfg_.limits);
        Json gens = Json::array();
        auto gb = groebner(image, cfg_.limits);
        for (const auto &g : gb.elements())
            gens.push_back(g.to_string());
        return verdict_of(equal, {{"equal", equal}, {"image_groebner_basis", gens}});
    }

    Outcome rank_ab_exhaustive()
    {
        const auto &v = exhaustive();
        return verdict_of(v.verdict == Verdict::one_generic, verdict_json(M_, v));
    }

    Outcome fiber_stats_check()
    {
        if (M_.nvars() <= M_.n())
            return {CheckStatus::skipped, "r+1 <= n: ker A_b is zero"};
        auto s = fiber_stats(M_, prime_, cfg_.samples, cfg_.seed);
        const double threshold = 0.95;
        Json d{{"prime", s.prime},
               {"seed", s.seed},
               {"samples", s.samples},
               {"rank_eq_m_minus_1", s.rank_eq_m_minus_1},
               {"unique_kernel", s.unique_kernel},
               {"rank_eq_m", s.rank_eq_m},
               {"rejected_b", s.rejected_b},
               {"fraction", s.fraction()},
               {"threshold", threshold}};
        return verdict_of(s.rank_eq_m == 0 && s.unique_kernel == s.rank_eq_m_minus_1 && s.fraction() >= threshold,
                          d);
    }

    Outcome submaximal()
    {
        if (M_.m() < 2)
            return {CheckStatus::skipped, "m < 2"};
        auto s = submaximal_height(M_, field_, cfg_.limits);
        return verdict_of(s.passed(), {{"computed", opt_json(s.height_top)},
                                       {"expected", s.expected},
                                       {"height_full", opt_json(s.height_full)}});
    }

    const LinearMatrix &M_;
    const SuiteConfig &cfg_;
    K field_;
    std::uint32_t prime_;
    RingPtr<K> ring_;
    std::optional<FreeComplex<K>> en_;
    std::optional<GenericityVerdict> exhaustive_;
    std::optional<std::size_t> height_;
    bool hypothesis_failed_ = false;
};

template <class K>
void run_all(const LinearMatrix &M, const SuiteConfig &cfg, const K &field, std::uint32_t prime,
             const std::vector<std::string> &selected, CertificateReport &report)
{
    Runner<K> runner(M, cfg, field, prime);
    for (const auto &name : selected) {
        CheckRecord rec;
        rec.name = name;
        auto start = std::chrono::steady_clock::now();
        if (M.m() > M.n() && needs_m_le_n(name)) {
            rec.status = CheckStatus::skipped;
            rec.reason = "m > n: maximal-minor check";
        } else if (runner.hypothesis_failed() && conditional(name)) {
            rec.status = CheckStatus::skipped;
            rec.reason = "hypothesis not met";
        } else {
            try {
                auto out = runner.run(name);
                rec.status = out.status;
                rec.reason = std::move(out.reason);
                rec.details = std::move(out.details);
            } catch (const ResourceLimit &e) {
                rec.status = CheckStatus::inconclusive;
                rec.reason = e.what();
            } catch (const std::exception &e) {
                rec.status = CheckStatus::error;
                rec.reason = e.what();
            }
        }
        rec.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        report.checks.push_back(std::move(rec));
    }
}

} // namespace

std::string to_string(CheckStatus s)
{
    switch (s) {
    case CheckStatus::pass:
        return "pass";
    case CheckStatus::fail:
        return "fail";
    case CheckStatus::inconclusive:
        return "inconclusive";
    case CheckStatus::skipped:
        return "skipped";
    case CheckStatus::error:
        return "error";
    }
    return "?";
}

const std::vector<std::string> &suite_check_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto &[name, statement] : statement_table())
            out.push_back(name);
        return out;
    }();
    return names;
}

const std::string &check_statement(const std::string &name)
{
    for (const auto &[n, statement] : statement_table())
        if (n == name)
            return statement;
    throw DomainError("unknown check '" + name + "'");
}

std::size_t CertificateReport::count(CheckStatus s) const
{
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [&](const CheckRecord &c) { return c.status == s; }));
}

int CertificateReport::exit_code() const
{
    if (count(CheckStatus::fail))
        return 1;
    if (count(CheckStatus::inconclusive) || count(CheckStatus::error))
        return 2;
    return 0;
}

Json CertificateReport::to_json() const
{
    Json out;
    out["matrix"] = matrix;
    out["checks"] = Json::array();
    for (const auto &c : checks) {
        Json j;
        j["name"] = c.name;
        j["status"] = to_string(c.status);
        j["statement"] = check_statement(c.name);
        if (!c.reason.empty())
            j["reason"] = c.reason;
        j["details"] = c.details;
        if (timings)
            j["elapsed_ms"] = c.elapsed_ms;
        out["checks"].push_back(std::move(j));
    }
    Json summary;
    for (auto s : {CheckStatus::pass, CheckStatus::fail, CheckStatus::inconclusive, CheckStatus::skipped,
                   CheckStatus::error})
        summary[to_string(s)] = count(s);
    summary["exit_code"] = exit_code();
    summary["verdict"] = exit_code() == 0 ? "evidence suite passed (evidence, not a proof)"
                         : exit_code() == 1 ? "evidence suite failed"
                                            : "evidence suite incomplete";
    out["summary"] = summary;
    out["version"] = tool_version;
    out["seed"] = seed;
    return out;
}

std::string CertificateReport::to_text() const
{
    std::ostringstream out;
    out << "onegen-cert " << tool_version << ": " << matrix.value("source", std::string()) << ", "
        << matrix["m"].get<std::size_t>() << "x" << matrix["n"].get<std::size_t>() << " over "
        << matrix["field"].get<std::string>() << ", " << matrix["r_plus_1"].get<std::size_t>()
        << " variables, seed " << seed << "\n";
    for (const auto &w : matrix["warnings"])
        out << "warning: " << w.get<std::string>() << "\n";
    std::size_t width = 0;
    for (const auto &c : checks)
        width = std::max(width, c.name.size());
    for (const auto &c : checks) {
        std::string status = to_string(c.status);
        out << "  " << status << std::string(13 - status.size(), ' ') << c.name
            << std::string(width + 2 - c.name.size(), ' ') << check_statement(c.name);
        if (!c.reason.empty())
            out << " [" << c.reason << "]";
        if (timings)
            out << " (" << static_cast<long long>(c.elapsed_ms) << " ms)";
        out << "\n";
        if (c.name == "one_generic" && c.status == CheckStatus::fail)
            for (const char *mode : {"symbolic", "exhaustive"})
                if (c.details.contains(mode) && c.details[mode].contains("witness") &&
                    !c.details[mode]["witness"].is_null())
                    out << "    witness (" << mode << "): " << c.details[mode]["witness"]["text"].get<std::string>()
                        << "\n";
    }
    out << "summary: " << count(CheckStatus::pass) << " pass, " << count(CheckStatus::fail) << " fail, "
        << count(CheckStatus::inconclusive) << " inconclusive, " << count(CheckStatus::skipped) << " skipped, "
        << count(CheckStatus::error) << " error (exit " << exit_code() << ")\n";
    return out.str();
}

CertificateReport run_suite(const LinearMatrix &M, const SuiteConfig &config, const std::vector<std::string> &warnings)
{
    std::vector<std::string> selected;
    if (config.checks.empty()) {
        selected = suite_check_names();
    } else {
        for (const auto &name : config.checks)
            check_statement(name);
        for (const auto &name : suite_check_names())
            if (std::find(config.checks.begin(), config.checks.end(), name) != config.checks.end())
                selected.push_back(name);
    }
    if (!is_prime(config.prime))
        throw DomainError("--prime must be prime, got " + std::to_string(config.prime));
    if (config.samples == 0)
        throw DomainError("--samples must be at least 1");
    if (config.degree_bound && *config.degree_bound < 0)
        throw DomainError("--degree-bound must be non-negative");

    // A matrix over GF(q) is checked over GF(q) whatever --prime says.
    const std::uint32_t prime = M.field().is_prime() ? M.field().characteristic : config.prime;

    CertificateReport report;
    report.seed = config.seed;
    report.timings = config.timings;
    Json &mj = report.matrix;
    mj["source"] = M.source();
    mj["m"] = M.m();
    mj["n"] = M.n();
    mj["r_plus_1"] = M.nvars();
    mj["field"] = M.field().name();
    Json vars = Json::array();
    for (std::size_t k = 0; k < M.nvars(); ++k)
        vars.push_back(M.vars().name(k));
    mj["vars"] = vars;
    Json rows = Json::array();
    for (std::size_t i = 0; i < M.m(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < M.n(); ++j)
            row.push_back(M.entry_string(i, j));
        rows.push_back(row);
    }
    mj["entries"] = rows;
    mj["check_prime"] = prime;
    mj["groebner_field"] = config.exact && !M.field().is_prime() ? "QQ" : "GF(" + std::to_string(prime) + ")";
    const std::size_t span = M.entry_span_rank();
    mj["entry_span_rank"] = span;
    Json notes = warnings;
    if (span < M.nvars())
        notes.push_back("entries span " + std::to_string(span) + " of " + std::to_string(M.nvars()) +
                        " variables");
    mj["warnings"] = notes;

    if (config.exact && !M.field().is_prime())
        run_all(M, config, RationalField{}, prime, selected, report);
    else
        run_all(M, config, PrimeField(prime), prime, selected, report);
    return report;
}

} // namespace onegen
