#include "smm/io.hpp"

#include <cstdlib>
#include <map>

namespace smm {

namespace {

const char* kConditionNames[6] = {"i", "ii", "iii", "iv", "v", "vi"};

Json terms_json(CategoryModel& m, const std::vector<Term>& ts)
{
    Json a = Json::array();
    for (const auto& t : ts) a.push_back(m.label(t));
    return a;
}

std::size_t size_field(const Json& j, const char* key, std::size_t dflt)
{
    if (!j.contains(key)) return dflt;
    if (!j.at(key).is_number_unsigned()) throw RepError("InvalidModel", std::string("field '") + key + "' must be a non-negative integer");
    return j.at(key).get<std::size_t>();
}

Quiver quiver_from_json(const Json& j)
{
    Quiver q;
    for (const auto& v : j.at("vertices")) q.vertices.push_back(v.get<std::string>());
    for (const auto& a : j.at("arrows"))
        q.arrows.push_back({q.vertex_index(a.at("from").get<std::string>()),
                            q.vertex_index(a.at("to").get<std::string>()), a.value("name", std::string())});
    q.validate();
    return q;
}

}  // namespace

ModelConfig model_config_from_json(const Json& j)
{
    if (!j.is_object()) throw RepError("InvalidModel", "model definition must be a JSON object");
    try {
        ModelConfig c;
        if (j.contains("preset")) {
            std::vector<std::size_t> args;
            if (j.contains("args")) args = j.at("args").get<std::vector<std::size_t>>();
            c = preset_by_name(j.at("preset").get<std::string>(), args);
        } else {
            c.kind = model_kind_from_string(j.at("kind").get<std::string>());
            c.n = size_field(j, "n", 0);
            c.w = size_field(j, "w", 0);
            c.rank = size_field(j, "rank", 0);
            if (c.kind == ModelKind::OrbitCY) c.window_lo = c.window_hi = 0;
            if (j.contains("quiver")) c.quiver = quiver_from_json(j.at("quiver"));
            if (!c.quiver) {
                if (c.kind == ModelKind::DerivedHereditary || c.kind == ModelKind::OrbitCY) c.preset = "a_n";
                if (c.kind == ModelKind::TubeDerived) c.preset = "tube";
                if (c.kind == ModelKind::NilDerived) c.preset = "ky-counterexample";
                if (c.kind == ModelKind::OrbitCY) c.preset = "orbit";
            }
        }
        if (j.contains("truncation")) c.truncation = size_field(j, "truncation", 0);
        if (j.contains("window")) {
            auto w = j.at("window").get<std::vector<int>>();
            if (w.size() != 2 || w[0] > w[1]) throw RepError("InvalidModel", "window must be [lo, hi] with lo <= hi");
            c.window_lo = w[0];
            c.window_hi = w[1];
        }
        c.cap = size_field(j, "cap", c.cap);
        c.p = static_cast<Scalar>(size_field(j, "p", c.p));
        c.seed = size_field(j, "seed", c.seed);
        return c;
    } catch (const Json::exception& e) {
        throw RepError("InvalidModel", e.what());
    }
}

Json to_json(const ModelConfig& c)
{
    Json j;
    j["schema"] = kSchemaVersion;
    j["kind"] = to_string(c.kind);
    if (!c.preset.empty()) j["preset"] = c.preset;
    j["n"] = c.n;
    j["w"] = c.w;
    j["rank"] = c.rank;
    if (c.quiver) {
        Json q;
        q["vertices"] = c.quiver->vertices;
        q["arrows"] = Json::array();
        for (const auto& a : c.quiver->arrows)
            q["arrows"].push_back({{"from", c.quiver->vertices[a.source]}, {"to", c.quiver->vertices[a.target]}, {"name", a.name}});
        j["quiver"] = q;
    }
    if (c.truncation) j["truncation"] = *c.truncation;
    j["window"] = {c.window_lo, c.window_hi};
    j["cap"] = c.cap;
    j["p"] = c.p;
    j["seed"] = c.seed;
    return j;
}

void apply_env_overrides(ModelConfig& cfg)
{
    if (const char* p = std::getenv("SMM_MODULUS")) cfg.p = static_cast<Scalar>(std::strtoul(p, nullptr, 10));
    if (const char* w = std::getenv("SMM_WINDOW")) {
        std::string s(w);
        auto comma = s.find(',');
        if (comma == std::string::npos) throw RepError("InvalidModel", "SMM_WINDOW must be 'lo,hi'");
        cfg.window_lo = std::stoi(s.substr(0, comma));
        cfg.window_hi = std::stoi(s.substr(comma + 1));
    }
}

Json term_json(CategoryModel& m, Term t)
{
    return {{"id", t.id}, {"shift", t.shift}, {"label", m.label(t)}};
}

Json object_json(CategoryModel& m, const DObject& d) { return terms_json(m, d); }

Json to_json(CategoryModel& m, const Verdict& v)
{
    return {{"status", to_string(v.status)},
            {"witness", terms_json(m, v.witness)},
            {"notes", v.notes},
            {"window", {v.window_lo, v.window_hi}},
            {"cap", v.cap}};
}

Json to_json(CategoryModel& m, const Collection& c)
{
    Json j;
    j["kind"] = to_string(c.kind);
    j["w"] = c.w;
    j["members"] = terms_json(m, c.members);
    j["history"] = Json::array();
    for (const auto& step : c.history) {
        Json s;
        s["direction"] = to_string(step.direction);
        s["subset"] = step.subset;
        s["triangles"] = Json::array();
        for (const auto& t : step.triangles) s["triangles"].push_back(to_json(m, t));
        j["history"].push_back(s);
    }
    return j;
}

Collection collection_from_json(CategoryModel& m, const Json& j)
{
    try {
        Collection c;
        const std::string kind = j.value("kind", std::string("SMC"));
        if (kind == "SMC") c.kind = CollectionKind::SMC;
        else if (kind == "wSMS" || kind == "WSMS") c.kind = CollectionKind::WSMS;
        else throw RepError("InvalidCollection", "unknown collection kind '" + kind + "'");
        c.w = j.value("w", 0);
        for (const auto& x : j.at("members")) c.members.push_back(m.parse(x.get<std::string>()));
        for (const auto& s : j.value("history", Json::array())) {
            MutationStep step;
            step.direction = direction_from_string(s.at("direction").get<std::string>());
            step.subset = s.at("subset").get<std::vector<std::size_t>>();
            for (const auto& t : s.at("triangles")) {
                Triangle tri;
                for (const auto& x : t.at("source")) tri.source.push_back(m.parse(x.get<std::string>()));
                tri.object = m.parse(t.at("object").get<std::string>());
                for (const auto& x : t.at("cone")) tri.cone.push_back(m.parse(x.get<std::string>()));
                step.triangles.push_back(tri);
            }
            c.history.push_back(step);
        }
        return c;
    } catch (const Json::exception& e) {
        throw RepError("InvalidCollection", e.what());
    }
}

Json to_json(CategoryModel& m, const Triangle& t)
{
    return {{"source", terms_json(m, t.source)}, {"object", m.label(t.object)}, {"cone", terms_json(m, t.cone)}};
}

Json to_json(CategoryModel& m, const ApproxResult& r)
{
    Json j;
    j["status"] = to_string(r.status);
    j["summands"] = terms_json(m, r.approx.summands);
    j["cone"] = terms_json(m, r.approx.cone);
    j["verified"] = r.approx.verified;
    j["chain"] = terms_json(m, r.chain);
    j["chain_cones"] = Json::array();
    for (const auto& c : r.chain_cones) j["chain_cones"].push_back(terms_json(m, c));
    j["cap"] = r.cap;
    return j;
}

Json to_json(CategoryModel& m, const MutationResult& r)
{
    Json j;
    j["ok"] = r.ok;
    j["result"] = to_json(m, r.result);
    if (r.normalized) j["normalized"] = terms_json(m, r.normalized->members);
    j["axioms"] = to_json(m, r.axioms);
    if (r.missing) {
        j["missing"] = *r.missing;
        j["evidence"] = to_json(m, r.evidence);
    }
    return j;
}

Json to_json(CategoryModel& m, const TorsionPairSpec& tp)
{
    return {{"heart", terms_json(m, tp.heart)},
            {"torsion", terms_json(m, tp.torsion)},
            {"torsionfree", terms_json(m, tp.torsionfree)},
            {"verdict", to_json(m, tp.verdict)}};
}

Json to_json(CategoryModel& m, const TiltResult& t)
{
    return {{"simples", terms_json(m, t.simples)}, {"pair", to_json(m, t.pair)}, {"checks", to_json(m, t.checks)}};
}

Json to_json(CategoryModel& m, const Theorem1Report& r)
{
    Json c;
    for (std::size_t i = 0; i < 6; ++i) c[kConditionNames[i]] = to_json(m, r.conditions[i]);
    return {{"conditions", c}, {"consistent", r.consistent}};
}

Json to_json(CategoryModel& m, const AdjacencyReport& r)
{
    return {{"silting", to_json(m, r.silting)},
            {"cosilting", to_json(m, r.cosilting)},
            {"bisilting", r.silting.holds() && r.cosilting.holds()},
            {"aisle", terms_json(m, r.aisle)},
            {"coaisle", terms_json(m, r.coaisle)},
            {"projective_coheart", terms_json(m, r.projective_coheart)},
            {"injective_coheart", terms_json(m, r.injective_coheart)}};
}

Json to_json(CategoryModel& m, const ReductionContext& ctx)
{
    Json up = Json::object(), down = Json::object();
    for (const auto& [a, b] : ctx.up) up[m.label(a)] = m.label(b);
    for (const auto& [a, b] : ctx.down) down[m.label(a)] = m.label(b);
    return {{"s", terms_json(m, ctx.s)},
            {"kind", to_string(ctx.kind)},
            {"w", ctx.w},
            {"members", terms_json(m, ctx.members)},
            {"shift", up},
            {"unshift", down},
            {"setup", to_json(m, ctx.setup)}};
}

Json to_json(CategoryModel& m, const IterationTrace& tr)
{
    Json j;
    j["steps"] = Json::array();
    for (const auto& c : tr.steps) j["steps"].push_back(terms_json(m, c.members));
    j["verdicts"] = Json::array();
    for (const auto& v : tr.verdicts) j["verdicts"].push_back(to_json(m, v));
    j["period"] = tr.period ? Json(*tr.period) : Json(nullptr);
    j["cycle_start"] = tr.cycle_start ? Json(*tr.cycle_start) : Json(nullptr);
    j["aborted"] = tr.aborted;
    if (tr.failure) j["failure"] = to_json(m, *tr.failure);
    return j;
}

Json to_json(const Charge& z) { return {z.x.num, z.x.den, z.y.num, z.y.den}; }

Json to_json(CategoryModel& m, const PhaseGapResult& r)
{
    Json j;
    j["verdict"] = to_json(m, r.verdict);
    if (r.phi) {
        j["phi"] = to_json(*r.phi);
        j["phase"] = phase_value(*r.phi);
    }
    j["family"] = terms_json(m, r.family);
    j["family_charges"] = Json::array();
    for (const auto& z : r.family_charges) j["family_charges"].push_back(to_json(z));
    return j;
}

Json catalog_json(Workbench& wb)
{
    auto& m = wb.model();
    auto layout = m.layout();
    Json j;
    j["model"] = to_json(m.config());
    j["window"] = {m.config().window_lo, m.config().window_hi};
    j["cap"] = m.cap();
    j["nodes"] = Json::array();
    for (const auto& n : layout.nodes) {
        Json node = term_json(m, n.term);
        node["x"] = n.x;
        node["y"] = n.y;
        node["length"] = m.length(n.term);
        j["nodes"].push_back(node);
    }
    j["arrows"] = Json::array();
    for (const auto& [a, b] : layout.arrows) j["arrows"].push_back({a, b});
    return j;
}

CentralCharge charge_from_json(CategoryModel& m, const Collection& u, const Json& j)
{
    CentralCharge z;
    std::map<Term, Charge> given;
    try {
        for (const auto& [label, v] : j.items()) {
            auto q = v.get<std::vector<long long>>();
            if (q.size() != 4 || q[1] == 0 || q[3] == 0)
                throw RepError("InvalidCharge", "charge of '" + label + "' must be [num_x, den_x, num_y, den_y]");
            given[m.shift(m.parse(label), 0)] = {Rational(q[0], q[1]), Rational(q[2], q[3])};
        }
    } catch (const Json::exception& e) {
        throw RepError("InvalidCharge", e.what());
    }
    for (const auto& t : u.members) {
        auto it = given.find(m.shift(t, 0));
        if (it == given.end()) throw RepError("InvalidCharge", "no charge for member " + m.label(t));
        if (!in_upper_half_plane(it->second))
            throw RepError("InvalidCharge", "charge of " + m.label(t) + " is not in the upper half plane");
        z.values.push_back(it->second);
    }
    return z;
}

Json error_json(const std::string& code, const std::string& message)
{
    return {{"error", {{"code", code}, {"message", message}}}};
}

}  // namespace smm
