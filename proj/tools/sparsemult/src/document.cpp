#include "sparsemult_cli/document.hpp"

#include "sparsemult/error.hpp"

#include <sstream>

namespace sparsemult::cli {

using nlohmann::json;

namespace {

void expect(bool ok, const std::string& what)
{
    if (!ok) {
        throw InputError(what);
    }
}

template <typename T>
T unsigned_field(const json& j, const char* key)
{
    const auto& v = j.at(key);
    expect(v.is_number_unsigned(), std::string("\"") + key + "\" must be a nonnegative integer");
    return v.get<T>();
}

std::int64_t integer_field(const json& j, const char* key)
{
    const auto& v = j.at(key);
    expect(v.is_number_integer(), std::string("\"") + key + "\" must be an integer");
    return v.get<std::int64_t>();
}

json exact(const Integer& z) { return z.get_str(); }

Integer parse_exact(const json& j)
{
    expect(j.is_string(), "exact values are serialized as strings");
    const Rational q = parse_rational(j.get<std::string>());
    expect(is_integer(q), "expected an integral value, got " + j.get<std::string>());
    return q.get_num();
}

json index_set(IndexSet s) { return s.one_based(); }

IndexSet parse_index_set(const json& j)
{
    expect(j.is_array(), "index sets are arrays of 1-based indices");
    std::vector<int> idx;
    for (const auto& v : j) {
        expect(v.is_number_integer() && v.get<int>() >= 1 && v.get<int>() <= 32, "index out of range");
        idx.push_back(v.get<int>());
    }
    return IndexSet::from_one_based(idx);
}

json routes(const std::map<std::string, Integer>& r)
{
    json out = json::object();
    for (const auto& [name, value] : r) {
        out[name] = exact(value);
    }
    return out;
}

std::map<std::string, Integer> parse_routes(const json& j)
{
    std::map<std::string, Integer> out;
    for (const auto& [name, value] : j.items()) {
        out.emplace(name, parse_exact(value));
    }
    return out;
}

template <typename T>
void put(json& j, const char* key, const std::optional<T>& v)
{
    if (v) {
        j[key] = *v;
    }
}

template <typename T>
std::optional<T> get(const json& j, const char* key)
{
    if (!j.contains(key) || j.at(key).is_null()) {
        return std::nullopt;
    }
    return j.at(key).get<T>();
}

} // namespace

InputDocument parse_input(const json& j)
{
    expect(j.is_object(), "input must be a JSON object");
    expect(j.contains("n"), "missing \"n\"");
    expect(j.contains("supports"), "missing \"supports\"");
    const auto n = integer_field(j, "n");
    expect(n >= 1 && n <= 16, "\"n\" must lie in [1, 16]");
    const auto& supports = j.at("supports");
    expect(supports.is_array(), "\"supports\" must be an array");
    expect(supports.size() == static_cast<std::size_t>(n), "expected " + std::to_string(n) + " supports, got " +
                                                                std::to_string(supports.size()));
    std::vector<PointSet> sets;
    for (std::size_t k = 0; k < supports.size(); ++k) {
        const auto& s = supports[k];
        expect(s.is_array() && !s.empty(), "support " + std::to_string(k + 1) + " must be a nonempty array");
        std::vector<LatticePoint> pts;
        for (const auto& p : s) {
            expect(p.is_array() && p.size() == static_cast<std::size_t>(n),
                   "support " + std::to_string(k + 1) + ": exponent vectors must have length " + std::to_string(n));
            LatticePoint a;
            for (const auto& c : p) {
                expect(c.is_number_integer(), "support " + std::to_string(k + 1) + ": exponents must be integers");
                expect(c.get<std::int64_t>() >= 0, "support " + std::to_string(k + 1) + ": negative exponent");
                a.push_back(c.get<std::int64_t>());
            }
            pts.push_back(std::move(a));
        }
        sets.emplace_back(static_cast<std::size_t>(n), std::move(pts));
    }
    InputDocument doc{SupportFamily(std::move(sets)), {}, {}, {}, {}};
    if (j.contains("seed")) {
        doc.seed = unsigned_field<std::uint64_t>(j, "seed");
    }
    if (j.contains("bound")) {
        doc.bound = unsigned_field<std::uint64_t>(j, "bound");
        expect(*doc.bound >= 1, "\"bound\" must be positive");
    }
    if (j.contains("M")) {
        doc.M = integer_field(j, "M");
        expect(*doc.M >= 1, "\"M\" must be positive");
    }
    if (j.contains("K_max")) {
        doc.kmax = unsigned_field<std::size_t>(j, "K_max");
    }
    return doc;
}

json to_json(const InputDocument& doc)
{
    json supports = json::array();
    for (const auto& s : doc.family.sets()) {
        json pts = json::array();
        for (const auto& p : s) {
            pts.push_back(p);
        }
        supports.push_back(std::move(pts));
    }
    json j{{"n", doc.family.n()}, {"supports", std::move(supports)}};
    put(j, "seed", doc.seed);
    put(j, "bound", doc.bound);
    put(j, "M", doc.M);
    put(j, "K_max", doc.kmax);
    return j;
}

json to_json(const OutputDocument& doc)
{
    json command{{"name", doc.command.name}, {"format", doc.command.format}};
    put(command, "M", doc.command.M);
    put(command, "seed", doc.command.seed);
    put(command, "bound", doc.command.bound);
    put(command, "kmax", doc.command.kmax);
    put(command, "trials", doc.command.trials);

    json j{{"version", doc.version}, {"command", std::move(command)}};
    j["status"] = {{"exit_code", doc.status.exit_code},
                   {"error", doc.status.error ? json(*doc.status.error) : json(nullptr)}};
    if (doc.input) {
        j["input"] = to_json(*doc.input);
    }
    if (doc.conditions) {
        const auto& c = *doc.conditions;
        j["conditions"] = {{"h1", c.h1},
                           {"h2", c.h2},
                           {"h3", c.h3},
                           {"failing_I", c.failing_I ? index_set(*c.failing_I) : json(nullptr)}};
    }
    if (doc.strata) {
        json rows = json::array();
        for (const auto& s : *doc.strata) {
            json r{{"I", index_set(s.I)}, {"J", index_set(s.J)}, {"a1", s.a1}, {"a2", s.a2}, {"a3", s.a3}};
            if (s.count) {
                r["count"] = exact(*s.count);
            }
            if (s.multiplicity) {
                r["multiplicity"] = exact(*s.multiplicity);
                r["routes"] = routes(s.routes);
            }
            rows.push_back(std::move(r));
        }
        j["strata"] = std::move(rows);
    }
    if (doc.totals) {
        const auto& t = *doc.totals;
        j["totals"] = {{"mv", exact(t.mv)},
                       {"sm", exact(t.sm)},
                       {"mv_A0", exact(t.mv_A0)},
                       {"total_with_multiplicity", exact(t.total_with_multiplicity)}};
    }
    if (doc.mult0) {
        const auto& m = *doc.mult0;
        j["mult0"] = {{"M", m.M}, {"value", exact(m.value)}, {"routes", routes(m.routes)}, {"agree", m.agree}};
    }
    if (doc.oracle) {
        const auto& o = *doc.oracle;
        json trials = json::array();
        for (const auto& t : o.trials) {
            json r{{"seed", t.seed}, {"seeds", t.seeds}, {"expected", exact(t.expected)}, {"match", t.match},
                   {"resamples", t.seeds.empty() ? 0 : t.seeds.size() - 1}};
            r["observed"] = t.observed ? json(*t.observed) : json(nullptr);
            if (t.error) {
                r["error"] = *t.error;
            }
            trials.push_back(std::move(r));
        }
        j["oracle"] = {{"seed", o.seed}, {"bound", o.bound}, {"kmax", o.kmax}, {"trials", std::move(trials)},
                       {"all_match", o.all_match}};
    }
    return j;
}

OutputDocument parse_output(const json& j)
{
    try {
        OutputDocument doc;
        doc.version = j.at("version").get<std::string>();
        const auto& c = j.at("command");
        doc.command.name = c.at("name").get<std::string>();
        doc.command.format = c.at("format").get<std::string>();
        doc.command.M = get<Coord>(c, "M");
        doc.command.seed = get<std::uint64_t>(c, "seed");
        doc.command.bound = get<std::uint64_t>(c, "bound");
        doc.command.kmax = get<std::size_t>(c, "kmax");
        doc.command.trials = get<std::size_t>(c, "trials");
        doc.status.exit_code = j.at("status").at("exit_code").get<int>();
        doc.status.error = get<std::string>(j.at("status"), "error");
        if (j.contains("input")) {
            doc.input = parse_input(j.at("input"));
        }
        if (j.contains("conditions")) {
            const auto& k = j.at("conditions");
            Conditions cond{k.at("h1").get<bool>(), k.at("h2").get<bool>(), k.at("h3").get<bool>(), {}};
            if (!k.at("failing_I").is_null()) {
                cond.failing_I = parse_index_set(k.at("failing_I"));
            }
            doc.conditions = cond;
        }
        if (j.contains("strata")) {
            doc.strata.emplace();
            for (const auto& r : j.at("strata")) {
                StratumRow s;
                s.I = parse_index_set(r.at("I"));
                s.J = parse_index_set(r.at("J"));
                s.a1 = r.at("a1").get<bool>();
                s.a2 = r.at("a2").get<bool>();
                s.a3 = r.at("a3").get<bool>();
                if (r.contains("count")) {
                    s.count = parse_exact(r.at("count"));
                }
                if (r.contains("multiplicity")) {
                    s.multiplicity = parse_exact(r.at("multiplicity"));
                    s.routes = parse_routes(r.at("routes"));
                }
                doc.strata->push_back(std::move(s));
            }
        }
        if (j.contains("totals")) {
            const auto& t = j.at("totals");
            doc.totals = Totals{parse_exact(t.at("mv")), parse_exact(t.at("sm")), parse_exact(t.at("mv_A0")),
                                parse_exact(t.at("total_with_multiplicity"))};
        }
        if (j.contains("mult0")) {
            const auto& m = j.at("mult0");
            doc.mult0 = Mult0Section{m.at("M").get<Coord>(), parse_exact(m.at("value")), parse_routes(m.at("routes")),
                                     m.at("agree").get<bool>()};
        }
        if (j.contains("oracle")) {
            const auto& o = j.at("oracle");
            OracleSection sec;
            sec.seed = o.at("seed").get<std::uint64_t>();
            sec.bound = o.at("bound").get<std::uint64_t>();
            sec.kmax = o.at("kmax").get<std::size_t>();
            sec.all_match = o.at("all_match").get<bool>();
            for (const auto& r : o.at("trials")) {
                OracleTrial t;
                t.seed = r.at("seed").get<std::uint64_t>();
                t.seeds = r.at("seeds").get<std::vector<std::uint64_t>>();
                t.expected = parse_exact(r.at("expected"));
                t.observed = get<std::uint64_t>(r, "observed");
                t.match = r.at("match").get<bool>();
                t.error = get<std::string>(r, "error");
                sec.trials.push_back(std::move(t));
            }
            doc.oracle = std::move(sec);
        }
        return doc;
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed output document: ") + e.what());
    }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

namespace {

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string routes_text(const std::map<std::string, Integer>& r)
{
    std::string out;
    for (const auto& [name, value] : r) {
        out += (out.empty() ? "" : " ") + name + "=" + value.get_str();
    }
    return out;
}

} // namespace

std::string render_table(const OutputDocument& doc)
{
    std::ostringstream out;
    out << "sparsemult " << doc.version << "  " << doc.command.name << "\n";
    if (doc.input) {
        out << "n = " << doc.input->family.n() << "\n";
    }
    if (doc.conditions) {
        const auto& c = *doc.conditions;
        out << "H1 " << yes_no(c.h1) << "   H2 " << yes_no(c.h2) << "   H3 " << yes_no(c.h3);
        if (c.failing_I) {
            out << "   (H2 fails for I = " << c.failing_I->to_string() << ")";
        }
        out << "\n";
    }
    if (doc.strata) {
        out << "\n" << "I" << std::string(15, ' ') << "J_I" << std::string(13, ' ') << "A1 A2 A3  count  mult  routes\n";
        for (const auto& s : *doc.strata) {
            auto pad = [](std::string t, std::size_t w) { return t.size() < w ? t + std::string(w - t.size(), ' ') : t + " "; };
            out << pad(s.I.to_string(), 16) << pad(s.J.to_string(), 16) << (s.a1 ? "y  " : "n  ")
                << (s.a2 ? "y  " : "n  ") << (s.a3 ? "y  " : "n  ") << pad(s.count ? s.count->get_str() : "-", 7)
                << pad(s.multiplicity ? s.multiplicity->get_str() : "-", 6) << routes_text(s.routes) << "\n";
        }
    }
    if (doc.totals) {
        const auto& t = *doc.totals;
        out << "\nMV(A) = " << t.mv << "   SM(A) = " << t.sm << "   MV(A0) = " << t.mv_A0
            << "   total with multiplicity = " << t.total_with_multiplicity << "\n";
    }
    if (doc.mult0) {
        const auto& m = *doc.mult0;
        out << "mult0 = " << m.value << "   M = " << m.M << "   routes agree: " << yes_no(m.agree) << "\n"
            << "  " << routes_text(m.routes) << "\n";
    }
    if (doc.oracle) {
        const auto& o = *doc.oracle;
        out << "\noracle: bound " << o.bound << ", kmax " << o.kmax << "\n";
        for (const auto& t : o.trials) {
            out << "  seed " << t.seed << ": ";
            if (t.match) {
                out << "match: " << t.expected;
            } else {
                out << "MISMATCH expected " << t.expected << " observed "
                    << (t.observed ? std::to_string(*t.observed) : "-");
            }
            if (t.seeds.size() > 1) {
                out << " (" << t.seeds.size() - 1 << " resamples)";
            }
            if (t.error) {
                out << " [" << *t.error << "]";
            }
            out << "\n";
        }
        out << "all match: " << yes_no(o.all_match) << "\n";
    }
    if (doc.status.error) {
        out << "error: " << *doc.status.error << "\n";
    }
    out << "exit " << doc.status.exit_code << "\n";
    return out.str();
}

} // namespace sparsemult::cli
