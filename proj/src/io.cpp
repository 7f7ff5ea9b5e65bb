#include "weylcurves/io.hpp"

#include "weylcurves/errors.hpp"

namespace weylcurves {

namespace {

const Integer kSafe("9007199254740991"); // 2^53 - 1

template <class T>
json list(const std::vector<T>& xs)
{
    json out = json::array();
    for (const auto& x : xs) out.push_back(to_json(x));
    return out;
}

json integers(const std::vector<Integer>& xs)
{
    json out = json::array();
    for (const auto& x : xs) out.push_back(encode_integer(x));
    return out;
}

template <class T>
json optional_or_null(const std::optional<T>& x)
{
    if (!x) return nullptr;
    if constexpr (std::is_same_v<T, Integer>)
        return encode_integer(*x);
    else if constexpr (std::is_arithmetic_v<T> || std::is_same_v<T, std::string>)
        return *x;
    else
        return to_json(*x);
}

template <Kind K>
json class_json(const ClassVector<K>& c)
{
    json j;
    j["kind"] = K == Kind::curve ? "curve" : "divisor";
    j["r"] = c.r();
    j["s"] = c.s();
    j["d"] = encode_integer(c.d());
    j["m"] = integers(c.m());
    return j;
}

int small_int(const json& j, const char* key)
{
    if (!j.contains(key)) throw ArgumentError(std::string("class JSON is missing \"") + key + "\"");
    const auto& v = j.at(key);
    if (!v.is_number_integer()) throw ArgumentError(std::string("\"") + key + "\" must be an integer");
    auto x = v.get<long long>();
    if (x < 0 || x > 100000) throw ArgumentError(std::string("\"") + key + "\" out of range");
    return static_cast<int>(x);
}

} // namespace

json encode_integer(const Integer& x)
{
    if (abs(x) <= kSafe) return json(x.get_si());
    return json(x.get_str());
}

Integer decode_integer(const json& j)
{
    if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
    if (j.is_number_unsigned()) return Integer(std::to_string(j.get<unsigned long long>()));
    if (j.is_string()) {
        Integer out;
        const auto& s = j.get_ref<const std::string&>();
        if (s.empty() || out.set_str(s, 10) != 0) throw ArgumentError("not a decimal integer: \"" + s + "\"");
        return out;
    }
    throw ArgumentError("expected an integer, got " + j.dump());
}

json to_json(const CurveClass& c) { return class_json(c); }
json to_json(const DivisorClass& D) { return class_json(D); }

AnyClass class_from_json(const json& j)
{
    if (!j.is_object()) throw ArgumentError("class JSON must be an object");
    if (!j.contains("kind") || !j["kind"].is_string()) throw ArgumentError("class JSON needs \"kind\": \"curve\" or \"divisor\"");
    const std::string kind = j["kind"].get<std::string>();
    const int r = small_int(j, "r");
    const int s = small_int(j, "s");
    if (!j.contains("d")) throw ArgumentError("class JSON is missing \"d\"");
    if (!j.contains("m") || !j["m"].is_array()) throw ArgumentError("class JSON needs an array \"m\"");
    std::vector<Integer> m;
    for (const auto& x : j["m"]) m.push_back(decode_integer(x));
    if (static_cast<int>(m.size()) != s)
        throw ArgumentError("\"m\" has " + std::to_string(m.size()) + " entries but s = " + std::to_string(s));
    Space sp(r, s);
    Integer d = decode_integer(j["d"]);
    if (kind == "curve") return CurveClass(sp, std::move(d), std::move(m));
    if (kind == "divisor") return DivisorClass(sp, std::move(d), std::move(m));
    throw ArgumentError("unknown class kind \"" + kind + "\"");
}

AnyClass parse_class(const std::string& text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ArgumentError(std::string("malformed class JSON: ") + e.what());
    }
    return class_from_json(j);
}

CurveClass parse_curve(const std::string& text)
{
    auto any = parse_class(text);
    if (auto* c = std::get_if<CurveClass>(&any)) return *c;
    throw ArgumentError("expected a curve class, got a divisor");
}

DivisorClass parse_divisor(const std::string& text)
{
    auto any = parse_class(text);
    if (auto* D = std::get_if<DivisorClass>(&any)) return *D;
    throw ArgumentError("expected a divisor class, got a curve");
}

json to_json(const IndexSet& I) { return I.indices(); }

json to_json(const ReductionTrace& t)
{
    json j;
    j["start"] = to_json(t.start);
    j["steps"] = list(t.steps);
    j["path"] = list(t.path());
    j["end"] = to_json(t.end);
    j["first_screen_failure"] = optional_or_null(t.first_screen_failure);
    return j;
}

json to_json(const ScreenViolation& v)
{
    return json{{"clause", std::string(1, v.clause)}, {"indices", v.indices}, {"message", v.message}};
}

json to_json(const WeylVerdict& v)
{
    json j;
    j["answer"] = to_string(v.answer);
    j["reason"] = v.reason;
    j["witness"] = optional_or_null(v.witness);
    j["trace"] = optional_or_null(v.trace);
    return j;
}

json to_json(const OneClassResult& r)
{
    return std::visit(
        [](const auto& x) -> json {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, WeylLine>)
                return json{{"kind", "weyl_line"}, {"verdict", to_json(x.verdict)}};
            else if constexpr (std::is_same_v<T, Decomposition>)
                return json{{"kind", "decomposition"},
                            {"m", x.m},
                            {"reduced", to_json(x.reduced)},
                            {"remainder", to_json(x.remainder)}};
            else
                return json{{"kind", "none"}, {"reduced", to_json(x.reduced)}, {"explanation", x.explanation}};
        },
        r);
}

json to_json(const ClassificationReport& r)
{
    json j;
    j["class"] = to_json(r.c);
    j["pairing_F"] = encode_integer(r.pairing_F);
    j["anticanonical_degree"] = encode_integer(r.pairing_F);
    j["quadratic"] = encode_integer(r.self);
    j["numerical_type"] = optional_or_null(r.numerical_type);
    j["quadratic_match"] = optional_or_null(r.quadratic_match);
    j["queried_type"] = optional_or_null(r.queried_type);
    j["weyl_class"] = to_string(r.weyl_class.answer);
    j["weyl_verdict"] = to_json(r.weyl_class);
    j["screens"] = list(r.screens);
    j["cremona_reduced"] = r.cremona_reduced;
    j["projection_screen"] = optional_or_null(r.projection_screen);
    j["virtual_dimension"] = encode_integer(r.virtual_dimension);
    j["rigidity"] = r.rigidity;
    j["decomposition"] = optional_or_null(r.decomposition);
    j["notes"] = r.notes;
    return j;
}

json to_json(const FacetReport& f)
{
    return json{{"facet", f.id.label()}, {"value", encode_integer(f.value)}, {"satisfied", f.satisfied}};
}

json to_json(const Ray& ray) { return json{{"facet", ray.id.label()}, {"ray", to_json(ray.c)}}; }

json to_json(const CorrectionLedger& l)
{
    json j;
    j["base"] = encode_integer(l.base);
    json entries = json::array();
    for (const auto& e : l.entries)
        entries.push_back(
            {{"curve", to_json(e.curve)}, {"k", encode_integer(e.k)}, {"contribution", encode_integer(e.contribution)}});
    j["entries"] = entries;
    j["total"] = encode_integer(l.total);
    j["ldim"] = optional_or_null(l.ldim);
    j["total_with_ldim"] = optional_or_null(l.total_with_ldim);
    j["remainder"] = l.remainder;
    j["notes"] = l.notes;
    return j;
}

template <Kind K>
json to_json(const OrbitResult<K>& orbit, bool labelled)
{
    json j;
    j["complete"] = orbit.complete;
    if (labelled) {
        const Integer n = orbit.labelled_count();
        j["count"] = encode_integer(n);
    } else {
        j["count"] = orbit.shape_count();
    }
    j["shape_count"] = orbit.shape_count();
    j["labelled"] = labelled;
    json shapes = json::array();
    for (const auto& c : orbit.representatives) {
        json s = to_json(c);
        s["labellings"] = encode_integer(labelled_multiplicity(c));
        shapes.push_back(std::move(s));
    }
    j["shapes"] = shapes;
    j["bound_hit"] = orbit.bound_hit ? json(orbit.bound_hit->description) : json(nullptr);
    return j;
}

template json to_json(const OrbitResult<Kind::curve>&, bool);
template json to_json(const OrbitResult<Kind::divisor>&, bool);

} // namespace weylcurves
