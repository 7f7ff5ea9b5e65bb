#include "weylcurves/cli.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "weylcurves/errors.hpp"
#include "weylcurves/fixtures.hpp"
#include "weylcurves/io.hpp"

namespace weylcurves {

namespace {

struct Options {
    std::string cls, divisor, seed, indices, type, suite, curves, mode = "multiset";
    std::optional<std::string> max_degree, max_count, bound, ldim;
    std::optional<int> point, r;
    bool labelled = false, as_json = false, trace = false, auto_curves = false;
};

Integer parse_integer(const std::string& flag, const std::string& text)
{
    Integer x;
    if (text.empty() || x.set_str(text, 10) != 0) throw ArgumentError(flag + " expects an integer, got \"" + text + "\"");
    return x;
}

std::vector<int> parse_indices(const std::string& text)
{
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        Integer x = parse_integer("--indices", item);
        if (!x.fits_sint_p()) throw ArgumentError("index " + item + " out of range");
        out.push_back(static_cast<int>(x.get_si()));
    }
    if (out.empty()) throw ArgumentError("--indices needs a comma-separated list");
    return out;
}

std::optional<int> parse_type(const std::string& text)
{
    if (text.empty()) return std::nullopt;
    if (text == "-1" || text == "0" || text == "1") return std::stoi(text);
    throw ArgumentError("--type must be -1, 0 or 1, got \"" + text + "\"");
}

const std::string& need(const std::string& value, const char* flag)
{
    if (value.empty()) throw ArgumentError(std::string(flag) + " is required");
    return value;
}

std::string scalar_text(const json& v)
{
    if (v.is_object() && v.contains("kind") && v.contains("m")) {
        auto any = class_from_json(v);
        return std::visit([](const auto& c) { return to_string(c); }, any);
    }
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

// human rendering: one line per field, classes in (d;m)_r notation
void render_text(std::ostream& out, const json& j, const std::string& indent = "")
{
    for (auto it = j.begin(); it != j.end(); ++it) {
        const json& v = it.value();
        if (v.is_array() && !v.empty() && (v.front().is_object() || v.front().is_array())) {
            out << indent << it.key() << ": " << v.size() << "\n";
            for (const auto& x : v) {
                if (x.is_object() && !(x.contains("kind") && x.contains("m"))) {
                    std::string line;
                    for (auto f = x.begin(); f != x.end(); ++f) line += (line.empty() ? "" : "  ") + f.key() + "=" + scalar_text(f.value());
                    out << indent << "  " << line << "\n";
                } else {
                    out << indent << "  " << scalar_text(x) << "\n";
                }
            }
        } else if (v.is_object() && !(v.contains("kind") && v.contains("m"))) {
            out << indent << it.key() << ":\n";
            render_text(out, v, indent + "  ");
        } else {
            out << indent << it.key() << ": " << scalar_text(v) << "\n";
        }
    }
}

OrbitBound bound_from(const Options& o, bool finite)
{
    OrbitBound b = OrbitBound::unbounded();
    if (o.max_degree) b.max_degree = parse_integer("--max-degree", *o.max_degree);
    if (o.max_count) {
        Integer n = parse_integer("--max-count", *o.max_count);
        if (n < 1 || !n.fits_ulong_p()) throw ArgumentError("--max-count must be positive");
        b.max_count = n.get_ui();
    }
    if (!finite && !b.max_degree && !b.max_count)
        throw ArgumentError("the Weyl group of this space is infinite: pass --max-degree or --max-count");
    return b;
}

OrbitMode mode_from(const std::string& m)
{
    if (m == "multiset") return OrbitMode::multiset;
    if (m == "full") return OrbitMode::full_subsets;
    if (m == "extremal") return OrbitMode::extremal;
    throw ArgumentError("--mode must be multiset, full or extremal");
}

json census_json(const OrbitCensus& c)
{
    return json{{"total", encode_integer(c.total)},
                {"effective", encode_integer(c.effective)},
                {"exceptional", encode_integer(c.exceptional)},
                {"other", encode_integer(c.other)},
                {"effective_shapes", c.effective_shapes}};
}

json do_orbit(const Options& o)
{
    auto seed = parse_class(need(o.seed, "--seed"));
    return std::visit(
        [&](const auto& c) {
            OrbitBound b = bound_from(o, is_weyl_finite(c.space()));
            auto orbit = enumerate_orbit(c, b, mode_from(o.mode));
            json j = to_json(orbit, o.labelled);
            if constexpr (std::decay_t<decltype(c)>::kind == Kind::curve) j["census"] = census_json(census(orbit));
            return j;
        },
        seed);
}

json do_reduce(const Options& o)
{
    CurveClass c = parse_curve(need(o.cls, "--class"));
    ReductionTrace t = cremona_reduce(c);
    json j;
    j["start"] = to_json(t.start);
    j["end"] = to_json(t.end);
    j["canonical_end"] = to_json(canonical(t.end));
    j["steps"] = t.steps.size();
    j["reduced"] = is_cremona_reduced(t.end);
    j["first_screen_failure"] = t.first_screen_failure ? json(*t.first_screen_failure) : json(nullptr);
    if (o.trace) {
        json steps = json::array();
        auto path = t.path();
        for (std::size_t k = 0; k < t.steps.size(); ++k)
            steps.push_back({{"indices", to_json(t.steps[k])}, {"result", to_json(path[k + 1])}});
        j["trace"] = steps;
    }
    return j;
}

json do_cremona(const Options& o)
{
    auto idx = parse_indices(need(o.indices, "--indices"));
    if (!o.cls.empty()) {
        CurveClass c = parse_curve(o.cls);
        return json{{"input", to_json(c)}, {"indices", idx}, {"result", to_json(cremona_curve(c, IndexSet(c.space(), idx)))}};
    }
    DivisorClass D = parse_divisor(need(o.divisor, "--class or --divisor"));
    return json{{"input", to_json(D)}, {"indices", idx}, {"result", to_json(cremona_divisor(D, IndexSet(D.space(), idx)))}};
}

json do_classify(const Options& o)
{
    CurveClass c = parse_curve(need(o.cls, "--class"));
    OrbitBound b = OrbitBound::defaults();
    if (o.bound) b.max_degree = parse_integer("--bound", *o.bound);
    return to_json(classify(c, parse_type(o.type), b));
}

json do_cone_check(const Options& o)
{
    DivisorClass D = parse_divisor(need(o.divisor, "--divisor"));
    auto facets = effective_membership(D);
    json list = json::array();
    bool ok = true;
    for (const auto& f : facets) {
        list.push_back(to_json(f));
        ok = ok && f.satisfied;
    }
    json j;
    j["divisor"] = to_json(D);
    j["effective"] = ok;
    j["facets"] = list;
    return j;
}

json do_rays(const Options& o)
{
    if (!o.r) throw ArgumentError("--r is required");
    Space sp(*o.r, *o.r + 3);
    json list = json::array();
    for (const auto& ray : movable_extremal_rays(sp)) list.push_back(to_json(ray));
    return json{{"r", sp.r}, {"s", sp.s}, {"count", list.size()}, {"rays", list}};
}

json do_dim(const Options& o)
{
    DivisorClass D = parse_divisor(need(o.divisor, "--divisor"));
    std::vector<CurveClass> curves;
    if (o.auto_curves) curves = auto_curves(D.space());
    if (!o.curves.empty()) {
        json arr;
        try {
            arr = json::parse(o.curves);
        } catch (const json::parse_error& e) {
            throw ArgumentError(std::string("malformed --curves JSON: ") + e.what());
        }
        if (!arr.is_array()) throw ArgumentError("--curves expects a JSON array of curve classes");
        for (const auto& x : arr) {
            auto any = class_from_json(x);
            auto* c = std::get_if<CurveClass>(&any);
            if (!c) throw ArgumentError("--curves entries must be curve classes");
            curves.push_back(*c);
        }
    }
    std::optional<Integer> ldim;
    if (o.ldim) ldim = parse_integer("--ldim", *o.ldim);
    json j = to_json(corrected_dimension(D, curves, ldim));
    return j;
}

json do_project(const Options& o)
{
    CurveClass c = parse_curve(need(o.cls, "--class"));
    int i = o.point.value_or(1);
    if (i < 1 || i > c.s()) throw ArgumentError("--point " + std::to_string(i) + " out of range 1.." + std::to_string(c.s()));
    CurveClass p = project(c, i);
    return json{{"input", to_json(c)}, {"point", i}, {"result", to_json(p)}, {"screen", projection_expectation_screen(c)}};
}

json do_fixtures(const Options& o)
{
    auto summary = run_fixtures(need(o.suite, "suite name"));
    json checks = json::array();
    for (const auto& c : summary.checks)
        checks.push_back({{"name", c.name}, {"status", c.passed ? "PASS" : "FAIL"}, {"detail", c.detail}});
    return json{{"suite", summary.suite}, {"passed", summary.passed()}, {"failures", summary.failures()}, {"checks", checks}};
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact arithmetic on curve and divisor classes of blown-up projective spaces", "weylcurves"};
    app.require_subcommand(1);
    Options o;

    auto json_flag = [&](CLI::App* sub) { sub->add_flag("--json", o.as_json, "JSON on stdout"); };

    auto* orbit = app.add_subcommand("orbit", "Weyl orbit of a class");
    orbit->add_option("--seed", o.seed, "seed class JSON")->required();
    orbit->add_option("--max-degree", o.max_degree, "bound on |d|");
    orbit->add_option("--max-count", o.max_count, "bound on the number of shapes");
    orbit->add_flag("--labelled", o.labelled, "count classes with point labels");
    orbit->add_option("--mode", o.mode, "multiset, full or extremal");
    json_flag(orbit);

    auto* reduce = app.add_subcommand("reduce", "greedy Cremona reduction");
    reduce->add_option("--class", o.cls, "curve class JSON")->required();
    reduce->add_flag("--trace", o.trace, "print every step");
    json_flag(reduce);

    auto* cremona = app.add_subcommand("cremona", "apply one Cremona transformation");
    cremona->add_option("--class", o.cls, "curve class JSON");
    cremona->add_option("--divisor", o.divisor, "divisor class JSON");
    cremona->add_option("--indices", o.indices, "r+1 point labels, e.g. 1,2,3")->required();
    json_flag(cremona);

    auto* cls = app.add_subcommand("classify", "classification report for a curve class");
    cls->add_option("--class", o.cls, "curve class JSON")->required();
    cls->add_option("--type", o.type, "-1, 0 or 1");
    cls->add_option("--bound", o.bound, "degree bound for orbit searches");
    json_flag(cls);

    auto* cone = app.add_subcommand("cone-check", "effective cone facets, s = r+2 or r+3");
    cone->add_option("--divisor", o.divisor, "divisor class JSON")->required();
    json_flag(cone);

    auto* rays = app.add_subcommand("rays", "extremal rays of the movable curve cone of Y^r_{r+3}");
    rays->add_option("--r", o.r, "dimension")->required();
    json_flag(rays);

    auto* dim = app.add_subcommand("dim", "dimension ledger for a divisor");
    dim->add_option("--divisor", o.divisor, "divisor class JSON")->required();
    dim->add_flag("--auto-curves", o.auto_curves, "lines through two points and RNCs through r+3 points");
    dim->add_option("--curves", o.curves, "JSON array of curve classes");
    dim->add_option("--ldim", o.ldim, "externally supplied linear expected dimension");
    json_flag(dim);

    auto* proj = app.add_subcommand("project", "projection from a point");
    proj->add_option("--class", o.cls, "curve class JSON")->required();
    proj->add_option("--point", o.point, "point label, default 1");
    json_flag(proj);

    auto* fix = app.add_subcommand("fixtures", "replay a fixture suite");
    fix->add_option("suite", o.suite, "paper-numbers, orbit-counts or invariance")->required();
    json_flag(fix);

    if (!args.empty() && !args.front().starts_with("-")) {
        const auto& subs = app.get_subcommands([](CLI::App*) { return true; });
        bool known = std::any_of(subs.begin(), subs.end(), [&](CLI::App* a) { return a->get_name() == args.front(); });
        if (!known) {
            err << "argument error: unknown verb \"" << args.front()
                << "\" (orbit, reduce, cremona, classify, cone-check, rays, dim, project, fixtures)\n";
            return exit_argument;
        }
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_argument;
    }

    try {
        json result;
        if (*orbit) result = do_orbit(o);
        else if (*reduce) result = do_reduce(o);
        else if (*cremona) result = do_cremona(o);
        else if (*cls) result = do_classify(o);
        else if (*cone) result = do_cone_check(o);
        else if (*rays) result = do_rays(o);
        else if (*dim) result = do_dim(o);
        else if (*proj) result = do_project(o);
        else if (*fix) result = do_fixtures(o);

        if (o.as_json)
            out << result.dump(2) << "\n";
        else
            render_text(out, result);
        if (*fix && !result["passed"].get<bool>()) return exit_internal;
        return exit_ok;
    } catch (const ArgumentError& e) {
        err << "argument error: " << e.what() << "\n";
        return exit_argument;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << "\n";
        return exit_domain;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return exit_internal;
    }
}

} // namespace weylcurves
