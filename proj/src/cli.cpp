#include "volset/cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

#include <CLI11.hpp>

#include "volset/parallel.hpp"
#include "volset/pointset_io.hpp"
#include "volset/random.hpp"
#include "volset/report.hpp"
#include "volset/selftest.hpp"

namespace volset {

namespace {

using report::Json;

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Options {
    std::uint32_t p = 3;
    std::uint32_t k = 1;
    std::size_t d = 3;
    std::string mod;
    std::uint64_t seed = 0;
    std::uint64_t budget = kDefaultBudget;
    std::string out_path;
    std::string format = "json";
    bool timing = false;

    std::vector<std::string> inputs;
    std::size_t random_size = 0;
    std::size_t random_f_size = 0;
    bool full = false;

    std::string mode;
    bool dot = false;
    std::string form;
    std::optional<std::uint32_t> t;
    bool count_only = false;
    std::size_t sub_k = 1;
    std::uint32_t ext = 1;
    std::vector<std::size_t> sizes;
    std::uint32_t trials = 10;
    std::string family = "uniform";
    std::uint64_t samples = 4096;
    bool hyperplane = false;
};

struct Outcome {
    int status = kExitOk;
    Json params;
    Json result;
    std::string csv;  // set when the command emits csv
    std::string raw;  // set when the command emits a point-set file
};

std::vector<std::uint32_t> parse_int_list(const std::string& text, const char* what)
{
    std::vector<std::uint32_t> out;
    std::string s = text;
    for (char& c : s)
        if (c == ',' || c == ';')
            c = ' ';
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) {
        std::size_t used = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(tok, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != tok.size() || tok.front() == '-' || v > UINT32_MAX)
            throw UsageError(std::string("bad integer '") + tok + "' in " + what);
        out.push_back(static_cast<std::uint32_t>(v));
    }
    return out;
}

Field field_from(const Options& o, std::uint32_t degree)
{
    std::optional<std::vector<std::uint32_t>> mod;
    if (!o.mod.empty())
        mod = parse_int_list(o.mod, "--mod");
    return Field(make_field_spec(o.p, degree, std::move(mod)));
}

Json field_params(const Options& o, const Field& f)
{
    Json j = report::to_json(f.spec());
    j["d"] = o.d;
    return j;
}

// E (index 0) or F (index 1) from a file, the full space or a seeded sample.
PointSet load_input(const Options& o, std::size_t index, Json& params)
{
    const char* key = index == 0 ? "input" : "input_f";
    if (o.inputs.size() > index) {
        auto e = read_pointset(o.inputs[index]);
        params[key] = report::describe_input(e, o.inputs[index]);
        return e;
    }
    const std::size_t n = index == 0 ? o.random_size : (o.random_f_size ? o.random_f_size : o.random_size);
    if (!o.full && n == 0)
        throw UsageError("missing input: give a point-set file, --full or --random <size>");
    const Field f = field_from(o, o.k);
    if (o.d < 1 || o.d > detail::kMaxDim)
        throw UsageError("--d must be in [1, " + std::to_string(detail::kMaxDim) + "]");
    if (o.full) {
        auto e = PointSet::full_space(f, o.d);
        params[key] = report::describe_input(e, "full");
        return e;
    }
    Rng rng(derive_seed(o.seed, 1000 + index));
    auto e = random_subset(f, o.d, n, rng);
    params[key] = report::describe_input(e, "random");
    return e;
}

BilinearForm form_from(const Options& o, const Field& f, std::size_t d)
{
    if (o.dot == !o.form.empty())
        throw UsageError("give exactly one of --dot or --form");
    if (o.dot)
        return BilinearForm::dot_form(f, d);
    const auto entries = parse_int_list(o.form, "--form");
    if (entries.size() != d * d)
        throw UsageError("--form needs " + std::to_string(d * d) + " entries");
    Matrix m(d, d);
    for (std::size_t i = 0; i < d * d; ++i)
        m.data()[i] = f.element(entries[i]);
    return BilinearForm(f, std::move(m));
}

Outcome cmd_volset(const Options& o)
{
    Outcome r;
    const auto mode = parse_volume_mode(o.mode.empty() ? "wedge" : o.mode);
    r.params["mode"] = to_string(mode);
    r.params["budget"] = o.budget;
    const auto e = load_input(o, 0, r.params);
    r.params["seed"] = o.seed;
    const auto v = volume_set(e, mode, o.budget);
    r.result["vol"] = report::to_json(v);
    r.result["size"] = v.size();
    r.result["covered"] = v.size() == e.field().q();
    return r;
}

Outcome cmd_cross(const Options& o)
{
    Outcome r;
    CrossMode mode = CrossMode::brute;
    if (o.mode == "decomposed")
        mode = CrossMode::decomposed;
    else if (!o.mode.empty() && o.mode != "brute")
        throw UsageError("unknown cross mode '" + o.mode + "' (brute|decomposed)");
    r.params["mode"] = mode == CrossMode::brute ? "brute" : "decomposed";
    r.params["budget"] = o.budget;
    const auto e = load_input(o, 0, r.params);
    r.params["seed"] = o.seed;
    const auto c = cross_product_set(e, mode, o.budget);
    r.result["count"] = c.size();
    r.result["vectors"] = report::to_json(c.elements);
    return r;
}

Outcome cmd_nu(const Options& o)
{
    Outcome r;
    const auto e = load_input(o, 0, r.params);
    const auto g = (o.inputs.size() == 1 || (o.inputs.empty() && o.full)) ? e : load_input(o, 1, r.params);
    r.params["seed"] = o.seed;
    const auto b = form_from(o, e.field(), e.dim());
    r.params["form"] = o.dot ? Json("dot") : report::to_json(b.gram());
    const auto table = incidence_count(e, g, b);
    bool ok = true;
    for (std::uint32_t t = 1; t < table.q; ++t)
        ok = ok && table.deviation_bound_holds(Elem{t});
    if (o.t) {
        if (*o.t >= table.q)
            throw UsageError("--t must be an element index below q");
        r.params["t"] = *o.t;
        r.result["t"] = *o.t;
        r.result["nu"] = table.counts[*o.t];
    }
    r.result["bound_holds"] = ok;
    r.result["table"] = report::to_json(table);
    if (o.format == "csv") {
        std::ostringstream csv;
        csv << "t,nu,scaled_deviation,bound_holds\n";
        for (std::uint32_t t = 0; t < table.q; ++t)
            csv << t << ',' << table.counts[t] << ',' << table.scaled_deviation[t] << ','
                << (table.deviation_bound_holds(Elem{t}) ? "true" : "false") << '\n';
        r.csv = csv.str();
    }
    r.status = ok ? kExitOk : kExitFailed;
    return r;
}

Outcome cmd_bstar(const Options& o)
{
    Outcome r;
    const auto e = load_input(o, 0, r.params);
    r.params["seed"] = o.seed;
    if (e.dim() != 2)
        throw UsageError("bstar needs d = 2");
    const auto b = form_from(o, e.field(), 2);
    r.params["form"] = o.dot ? Json("dot") : report::to_json(b.gram());
    const auto s = bstar(e, b);
    const Surd bound = bstar_lower_bound(e.field().q(), e.size());
    const bool meets = (Surd(Rational(s.size())) - bound).sign() >= 0;
    r.result["bstar"] = report::to_json(s);
    r.result["size"] = s.size();
    r.result["bound"] = bound.str();
    r.result["meets_bound"] = meets;
    r.status = meets ? kExitOk : kExitFailed;
    return r;
}

Outcome cmd_grass(const Options& o)
{
    Outcome r;
    const Field f = field_from(o, o.ext);
    r.params["field"] = report::to_json(f.spec());
    r.params["k"] = o.sub_k;
    r.params["d"] = o.d;
    if (o.d < 1 || o.d > detail::kMaxDim)
        throw UsageError("--d must be in [1, " + std::to_string(detail::kMaxDim) + "]");
    if (o.sub_k > o.d)
        throw UsageError("--k must not exceed --d");
    const auto count = gaussian_binomial(o.sub_k, o.d, f.q());
    r.result["count"] = count;
    if (o.count_only) {
        if (o.format == "csv")
            r.csv = "k,d,q,count\n" + std::to_string(o.sub_k) + ',' + std::to_string(o.d) + ',' +
                    std::to_string(f.q()) + ',' + std::to_string(count) + '\n';
        return r;
    }
    if (count > (1u << 20))
        throw UsageError("G(k,d) has " + std::to_string(count) + " members; use --count");
    const auto fam = enumerate_subspaces(f, o.sub_k, o.d);
    Json members = Json::array();
    std::ostringstream csv;
    csv << "index,pivots,basis\n";
    for (std::size_t i = 0; i < fam.members.size(); ++i) {
        const auto& s = fam.members[i];
        members.push_back(report::to_json(s));
        csv << i << ',';
        for (std::size_t j = 0; j < s.pivots().size(); ++j)
            csv << (j ? " " : "") << s.pivots()[j];
        csv << ',';
        for (std::size_t j = 0; j < s.basis().size(); ++j) {
            csv << (j ? ";" : "");
            for (std::size_t c = 0; c < s.basis()[j].size(); ++c)
                csv << (c ? " " : "") << s.basis()[j][c].value;
        }
        csv << '\n';
    }
    r.result["members"] = std::move(members);
    if (o.format == "csv")
        r.csv = csv.str();
    return r;
}

SearchOptions search_options(const Options& o)
{
    return SearchOptions{o.budget, o.seed, o.samples};
}

Outcome cmd_verify(const Options& o)
{
    Outcome r;
    const auto e = load_input(o, 0, r.params);
    r.params["seed"] = o.seed;
    r.params["budget"] = o.budget;
    r.params["samples"] = o.samples;
    const auto cert = verify_theorem(e, search_options(o));
    r.result = report::to_json(cert);
    r.result["recheck"] = recheck(cert);
    r.status = cert.red_flag() || !recheck(cert) ? kExitFailed : kExitOk;
    return r;
}

Outcome cmd_trace(const Options& o, bool base)
{
    Outcome r;
    const auto e = load_input(o, 0, r.params);
    r.params["seed"] = o.seed;
    r.params["budget"] = o.budget;
    r.params["samples"] = o.samples;
    if (base && e.dim() != 3)
        throw UsageError("trace-base needs d = 3");
    if (!base && e.dim() < 4)
        throw UsageError("trace-induct needs d >= 4");
    const auto tr = base ? trace_base_case(e, search_options(o)) : trace_induction_step(e, search_options(o));
    r.result = report::to_json(tr);
    r.status = tr.passed() ? kExitOk : kExitFailed;
    return r;
}

Outcome cmd_scan(const Options& o)
{
    Outcome r;
    const Field f = field_from(o, o.k);
    if (o.d < 2 || o.d > detail::kMaxDim)
        throw UsageError("--d must be in [2, " + std::to_string(detail::kMaxDim) + "]");
    if (o.sizes.empty())
        throw UsageError("scan needs --sizes");
    const auto family = parse_subset_family(o.family);
    r.params["field"] = field_params(o, f);
    r.params["sizes"] = o.sizes;
    r.params["trials"] = o.trials;
    r.params["seed"] = o.seed;
    r.params["family"] = to_string(family);
    r.params["budget"] = o.budget;
    r.params["samples"] = o.samples;
    const auto scan = scan_threshold(f, o.d, o.sizes, o.trials, o.seed, family, search_options(o));

    std::uint64_t threshold = o.d - 1;
    for (std::size_t i = 0; i + 1 < o.d; ++i)
        threshold *= f.q();
    r.result = report::to_json(scan);
    r.result["hypothesis_size"] = threshold;
    bool flagged = false;
    std::ostringstream csv;
    csv << "seed,size,trials,covered,inconclusive,hypothesis_met\n";
    for (std::size_t i = 0; i < scan.rows.size(); ++i) {
        const auto& row = scan.rows[i];
        const bool met = row.size >= threshold;
        r.result["rows"][i]["hypothesis_met"] = met;
        flagged = flagged || (met && row.covered < row.trials);
        csv << o.seed << ',' << row.size << ',' << row.trials << ',' << row.covered << ',' << row.inconclusive << ','
            << (met ? "true" : "false") << '\n';
    }
    r.result["red_flag"] = flagged;
    if (o.format == "csv")
        r.csv = csv.str();
    r.status = flagged ? kExitFailed : kExitOk;
    return r;
}

Outcome cmd_sharp(const Options& o)
{
    Outcome r;
    std::optional<PointSet> e;
    if (!o.inputs.empty() || o.full || o.random_size) {
        e = load_input(o, 0, r.params);
    } else {
        const Field f = field_from(o, o.k);
        if (o.d < 2 || o.d > detail::kMaxDim)
            throw UsageError("--d must be in [2, " + std::to_string(detail::kMaxDim) + "]");
        e = PointSet::coordinate_hyperplane(f, o.d);
        r.params["input"] = report::describe_input(*e, "coordinate-hyperplane");
    }
    r.params["budget"] = o.budget;
    r.params["seed"] = o.seed;
    const auto res = sharpness_check(*e, search_options(o));
    r.result["vol"] = report::to_json(res.certificate.covered_values());
    r.result["confirmed"] = res.confirmed;
    r.result["exhaustive"] = res.certificate.exhaustive;
    r.result["evaluations"] = res.certificate.evaluations;
    r.status = res.confirmed ? kExitOk : kExitFailed;
    return r;
}

Outcome cmd_selftest(const Options& o)
{
    Outcome r;
    r.params["seed"] = o.seed;
    const auto suites = run_selftest(o.seed);
    bool ok = true;
    Json list = Json::array();
    for (const auto& s : suites) {
        Json j;
        j["name"] = s.name;
        j["q"] = s.q;
        j["d"] = s.dim;
        j["checks"] = s.checks;
        j["failures"] = s.failures;
        j["passed"] = s.passed();
        if (!s.messages.empty())
            j["messages"] = s.messages;
        list.push_back(std::move(j));
        ok = ok && s.passed();
    }
    r.result["suites"] = std::move(list);
    r.result["passed"] = ok;
    r.status = ok ? kExitOk : kExitFailed;
    return r;
}

Outcome cmd_gen(const Options& o)
{
    Outcome r;
    const Field f = field_from(o, o.k);
    if (o.d < 1 || o.d > detail::kMaxDim)
        throw UsageError("--d must be in [1, " + std::to_string(detail::kMaxDim) + "]");
    if (o.hyperplane) {
        r.raw = emit_pointset(PointSet::coordinate_hyperplane(f, o.d));
    } else {
        Json ignored;
        r.raw = emit_pointset(load_input(o, 0, ignored));
    }
    return r;
}

void write_atomically(const std::string& path, const std::string& text)
{
    const std::filesystem::path target(path);
    auto tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw std::runtime_error("cannot write " + tmp.string());
        out << text;
        if (!out)
            throw std::runtime_error("write failed: " + tmp.string());
    }
    std::filesystem::rename(tmp, target);
}

} // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    configure_threads_from_env();

    Options o;
    CLI::App app("Volume sets, cross-product sets and coverage checks over finite fields", "volset");
    app.require_subcommand(1);

    auto field_opts = [&](CLI::App* s, bool with_k) {
        s->add_option("--p", o.p, "field characteristic (odd prime)");
        if (with_k)
            s->add_option("--k", o.k, "extension degree");
        s->add_option("--d", o.d, "dimension");
        s->add_option("--mod", o.mod, "modulus coefficients c0,...,ck when k > 1");
    };
    auto common = [&](CLI::App* s) {
        s->add_option("--seed", o.seed, "random seed");
        s->add_option("--budget", o.budget, "maximum tuple evaluations");
        s->add_option("--out", o.out_path, "write the report to this path");
        s->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
        s->add_flag("--timing", o.timing, "include wall-clock seconds in the report");
    };
    auto input_opts = [&](CLI::App* s, bool two) {
        s->add_option("inputs", o.inputs, two ? "point-set files E [F]" : "point-set file E")
            ->expected(0, two ? 2 : 1);
        s->add_flag("--full", o.full, "use all of F_q^d");
        s->add_option("--random", o.random_size, "use a seeded random subset of this size");
        if (two)
            s->add_option("--random-f", o.random_f_size, "size of the random F (default: --random)");
        field_opts(s, true);
    };

    std::map<CLI::App*, std::function<Outcome()>> handlers;
    auto sub = [&](const char* name, const char* desc, std::function<Outcome()> h) {
        auto* s = app.add_subcommand(name, desc);
        handlers[s] = std::move(h);
        common(s);
        return s;
    };

    auto* s_vol = sub("volset", "volume set vol(E)", [&] { return cmd_volset(o); });
    input_opts(s_vol, false);
    s_vol->add_option("--mode", o.mode, "naive|wedge|decomposed");

    auto* s_cross = sub("cross", "cross-product set F*_E", [&] { return cmd_cross(o); });
    input_opts(s_cross, false);
    s_cross->add_option("--mode", o.mode, "brute|decomposed");

    auto* s_nu = sub("nu", "incidence counts nu_t(E, F) for a bilinear form", [&] { return cmd_nu(o); });
    input_opts(s_nu, true);
    s_nu->add_flag("--dot", o.dot, "use the dot product");
    s_nu->add_option("--form", o.form, "d*d Gram matrix entries, row-major");
    s_nu->add_option("--t", o.t, "report nu for this value");

    auto* s_bstar = sub("bstar", "B*(E) for E in F_q^2 against its lower bound", [&] { return cmd_bstar(o); });
    input_opts(s_bstar, false);
    s_bstar->add_flag("--dot", o.dot, "use the dot product");
    s_bstar->add_option("--form", o.form, "2*2 Gram matrix entries, row-major");

    auto* s_grass = sub("grass", "subspaces G(k, d) of F_q^d", [&] { return cmd_grass(o); });
    field_opts(s_grass, false);
    s_grass->add_option("--k", o.sub_k, "subspace dimension");
    s_grass->add_option("--ext", o.ext, "field extension degree");
    s_grass->add_flag("--count", o.count_only, "only the Gaussian binomial");

    auto* s_verify = sub("verify", "coverage certificate for vol(E) = F_q", [&] { return cmd_verify(o); });
    input_opts(s_verify, false);
    s_verify->add_option("--samples", o.samples, "random tuples before the sweep");

    auto* s_tb = sub("trace-base", "d = 3 counting chain", [&] { return cmd_trace(o, true); });
    input_opts(s_tb, false);
    s_tb->add_option("--samples", o.samples, "random tuples before the sweep");

    auto* s_ti = sub("trace-induct", "d >= 4 counting chain", [&] { return cmd_trace(o, false); });
    input_opts(s_ti, false);
    s_ti->add_option("--samples", o.samples, "random tuples before the sweep");

    auto* s_scan = sub("scan", "coverage rate of random subsets by size", [&] { return cmd_scan(o); });
    field_opts(s_scan, true);
    s_scan->add_option("--sizes", o.sizes, "subset sizes")->delimiter(',');
    s_scan->add_option("--trials", o.trials, "trials per size");
    s_scan->add_option("--family", o.family, "uniform|hyperplane");
    s_scan->add_option("--samples", o.samples, "random tuples before the sweep");

    auto* s_sharp = sub("sharp", "exhaustive check that a hyperplane has vol = {0}", [&] { return cmd_sharp(o); });
    input_opts(s_sharp, false);

    sub("selftest", "invariant suites at q in {3,5}, d in {2,3}", [&] { return cmd_selftest(o); });

    auto* s_gen = sub("gen", "write a point-set file", [&] { return cmd_gen(o); });
    field_opts(s_gen, true);
    s_gen->add_flag("--full", o.full, "all of F_q^d");
    s_gen->add_option("--random", o.random_size, "seeded random subset of this size");
    s_gen->add_flag("--hyperplane", o.hyperplane, "the hyperplane y_d = 0");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
    }

    CLI::App* chosen = app.get_subcommands().front();
    const auto start = std::chrono::steady_clock::now();
    Outcome res;
    try {
        res = handlers.at(chosen)();
    } catch (const BudgetExceeded& e) {
        err << "volset " << chosen->get_name() << ": " << e.what() << '\n';
        return kExitBudget;
    } catch (const std::invalid_argument& e) {
        err << "volset " << chosen->get_name() << ": " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        err << "volset " << chosen->get_name() << ": " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::length_error& e) {
        err << "volset " << chosen->get_name() << ": " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::overflow_error& e) {
        err << "volset " << chosen->get_name() << ": " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::runtime_error& e) {
        err << "volset " << chosen->get_name() << ": " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "volset " << chosen->get_name() << ": internal error: " << e.what() << '\n';
        return kExitFailed;
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    std::string text;
    if (!res.raw.empty()) {
        text = res.raw;
    } else if (o.format == "csv") {
        if (res.csv.empty()) {
            err << "volset " << chosen->get_name() << ": csv output is available for scan, nu and grass\n";
            return kExitUsage;
        }
        text = res.csv;
    } else {
        Json rep;
        rep["tool"] = report::kToolName;
        rep["version"] = report::kToolVersion;
        rep["command"] = chosen->get_name();
        rep["parameters"] = std::move(res.params);
        rep["result"] = std::move(res.result);
        if (o.timing)
            rep["timing"] = Json{{"seconds", seconds}};
        text = rep.dump(2) + "\n";
    }

    try {
        if (o.out_path.empty())
            out << text;
        else
            write_atomically(o.out_path, text);
    } catch (const std::exception& e) {
        err << "volset: " << e.what() << '\n';
        return kExitUsage;
    }
    return res.status;
}

} // namespace volset
