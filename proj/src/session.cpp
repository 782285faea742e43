#include "smm/session.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace smm {

namespace {

std::vector<Term> member_key(CategoryModel& m, const Collection& c)
{
    std::vector<Term> k;
    for (const auto& t : c.members) k.push_back(m.shift(t, 0));
    std::sort(k.begin(), k.end());
    return k;
}

std::string subset_tag(const std::vector<std::size_t>& subset)
{
    std::string s;
    for (std::size_t i = 0; i < subset.size(); ++i) s += (i ? "," : "") + std::to_string(subset[i]);
    return s;
}

Json labels(CategoryModel& m, const std::vector<Term>& ts)
{
    Json a = Json::array();
    for (const auto& t : ts) a.push_back(m.label(t));
    return a;
}

}  // namespace

Session::Session(const ModelConfig& cfg)
    : cfg_(cfg), model_(make_model(cfg)), wb_(std::make_unique<Workbench>(*model_))
{
}

std::unique_ptr<Session> Session::from_json(const Json& j)
{
    try {
        auto s = std::make_unique<Session>(model_config_from_json(j.at("model")));
        for (const auto& e : j.value("collections", Json::array())) {
            RegistryEntry r;
            r.name = e.at("name").get<std::string>();
            r.collection = collection_from_json(*s->model_, e.at("collection"));
            if (e.contains("parent") && !e.at("parent").is_null()) r.parent = e.at("parent").get<std::string>();
            r.tombstone = e.value("tombstone", false);
            s->entries_.push_back(std::move(r));
        }
        for (const auto& e : j.value("edges", Json::array()))
            s->edges_.push_back({e.at("from").get<std::string>(), e.at("to").get<std::string>(),
                                 direction_from_string(e.at("dir").get<std::string>()),
                                 e.at("subset").get<std::vector<std::size_t>>()});
        return s;
    } catch (const Json::exception& e) {
        throw ServiceError("InvalidSession", e.what());
    }
}

std::unique_ptr<Session> Session::load(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ServiceError("NoSession", "cannot read session file '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const Json::exception& e) {
        throw ServiceError("InvalidSession", e.what());
    }
    return from_json(j);
}

Json Session::to_json() const
{
    Json j;
    j["schema"] = kSchemaVersion;
    j["model"] = smm::to_json(cfg_);
    j["collections"] = Json::array();
    for (const auto& e : entries_)
        j["collections"].push_back({{"name", e.name},
                                    {"collection", smm::to_json(*model_, e.collection)},
                                    {"parent", e.parent ? Json(*e.parent) : Json(nullptr)},
                                    {"tombstone", e.tombstone}});
    j["edges"] = Json::array();
    for (const auto& e : edges_)
        j["edges"].push_back({{"from", e.from}, {"to", e.to}, {"dir", to_string(e.direction)}, {"subset", e.subset}});
    return j;
}

void Session::save(const std::string& path) const
{
    std::ofstream out(path);
    if (!out) throw ServiceError("NoSession", "cannot write session file '" + path + "'");
    out << to_json().dump(2) << "\n";
}

Json Session::window() const
{
    return {{"window", {cfg_.window_lo, cfg_.window_hi}}, {"cap", cfg_.cap}};
}

bool Session::has(const std::string& name) const
{
    return std::any_of(entries_.begin(), entries_.end(), [&](const auto& e) { return e.name == name; });
}

const RegistryEntry& Session::get(const std::string& name) const
{
    for (const auto& e : entries_)
        if (e.name == name) {
            if (e.tombstone) throw ServiceError("UnknownName", "collection '" + name + "' was removed");
            return e;
        }
    throw ServiceError("UnknownName", "no collection named '" + name + "'");
}

Json Session::add(const std::string& name, Collection c, std::optional<std::string> parent)
{
    if (name.empty()) throw ServiceError("InvalidName", "collection name is empty");
    if (has(name)) throw ServiceError("DuplicateName", "collection '" + name + "' already exists");
    entries_.push_back({name, std::move(c), std::move(parent), false});
    return check(name);
}

void Session::tombstone(const std::string& name)
{
    get(name);
    for (auto& e : entries_)
        if (e.name == name) e.tombstone = true;
}

std::vector<std::size_t> Session::parse_subset(const Collection& c, const Json& subset)
{
    if (!subset.is_array()) throw ServiceError("InvalidSubset", "subset must be an array");
    std::vector<std::size_t> out;
    for (const auto& x : subset) {
        if (x.is_number_integer() && x.get<long long>() >= 0) {
            out.push_back(x.get<std::size_t>());
        } else if (x.is_string()) {
            auto one = parse_subset(c, std::vector<std::string>{x.get<std::string>()});
            out.push_back(one[0]);
        } else {
            throw ServiceError("InvalidSubset", "subset entries must be member labels or indices");
        }
    }
    wb_->subset_terms(c, out);
    return out;
}

std::vector<std::size_t> Session::parse_subset(const Collection& c, const std::vector<std::string>& names)
{
    std::vector<std::size_t> out;
    for (const auto& n : names) {
        Term t;
        try {
            t = model_->shift(model_->parse(n), 0);
        } catch (const RepError&) {
            throw ServiceError("InvalidSubset", "cannot parse subset member '" + n + "'");
        }
        std::optional<std::size_t> hit;
        for (std::size_t i = 0; i < c.members.size(); ++i)
            if (model_->shift(c.members[i], 0) == t) hit = i;
        if (!hit) throw ServiceError("InvalidSubset", "'" + n + "' is not a member of the collection");
        out.push_back(*hit);
    }
    wb_->subset_terms(c, out);
    return out;
}

Json Session::catalog()
{
    if (!catalog_) catalog_ = catalog_json(*wb_);
    return *catalog_;
}

Json Session::check(const std::string& name)
{
    const auto& c = get(name).collection;
    Json j = window();
    j["name"] = name;
    j["collection"] = smm::to_json(*model_, c);
    if (c.kind == CollectionKind::WSMS) {
        j["verdicts"] = {{"orthogonality", smm::to_json(*model_, wb_->check_orthogonality(c, OrthMode::W))}};
    } else {
        j["verdicts"] = {{"orthogonality", smm::to_json(*model_, wb_->check_orthogonality(c, OrthMode::Infinity))}};
    }
    j["verdicts"]["generation"] = smm::to_json(*model_, wb_->check_generation(c));
    j["verdicts"]["collection"] = smm::to_json(*model_, wb_->check_collection(c));
    return j;
}

Json Session::mutate(const std::string& name, const std::vector<std::size_t>& subset, Direction dir,
                     std::optional<std::string> new_name)
{
    const Collection c = get(name).collection;
    auto r = wb_->mutate(c, subset, dir);
    if (!r.ok) {
        const bool missing = r.evidence.status != ApproxStatus::Found;
        throw ServiceError(missing ? "ApproximationMissing" : "MutationFailed", r.axioms.notes, smm::to_json(*model_, r));
    }
    std::string target = new_name.value_or(name + "/" + (dir == Direction::Right ? "r" : "l") + "{" + subset_tag(subset) + "}");
    if (!new_name) {
        std::string base = target;
        for (int k = 2; has(target); ++k) target = base + "#" + std::to_string(k);
    }
    add(target, r.result, name);
    edges_.push_back({name, target, dir, subset});
    Json j = window();
    j["newName"] = target;
    j["collection"] = smm::to_json(*model_, r.result);
    if (r.normalized) j["normalized"] = labels(*model_, r.normalized->members);
    j["verdicts"] = {{"axioms", smm::to_json(*model_, r.axioms)}};
    j["triangles"] = Json::array();
    for (const auto& t : r.result.history.back().triangles) j["triangles"].push_back(smm::to_json(*model_, t));
    return j;
}

Json Session::tilt(const std::string& name, const std::vector<std::size_t>& subset, Direction dir)
{
    const Collection c = get(name).collection;
    TiltResult t;
    try {
        t = wb_->simple_tilt(c, subset, dir);
    } catch (const ServiceError&) {
        throw;
    } catch (const RepError& e) {
        if (e.code() != "ApproximationMissing") throw;
        auto r = wb_->mutate(c, subset, dir);
        throw ServiceError(e.code(), e.what(), smm::to_json(*model_, r));
    }
    Json j = window();
    j["name"] = name;
    j["tilt"] = smm::to_json(*model_, t);
    return j;
}

Json Session::theorem1(const std::string& name, const std::vector<std::size_t>& subset)
{
    Json j = window();
    j["name"] = name;
    j["subset"] = subset;
    j["report"] = smm::to_json(*model_, wb_->check_theorem1(get(name).collection, subset));
    return j;
}

Json Session::phasegap(const std::string& name, const std::vector<std::size_t>& subset)
{
    const Collection c = get(name).collection;
    Json j = window();
    j["name"] = name;
    j["subset"] = subset;
    auto r = phase_gap_check(*wb_, c, subset);
    j["phasegap"] = smm::to_json(*model_, r);
    j["charges"] = Json::object();
    auto z = canonical_charge(c, subset);
    for (std::size_t i = 0; i < c.members.size(); ++i) j["charges"][model_->label(c.members[i])] = smm::to_json(z.values[i]);
    return j;
}

Json Session::stability(const std::string& name, const Json& charges)
{
    const Collection c = get(name).collection;
    HeartStability st(*wb_, c, charge_from_json(*model_, c, charges));
    if (!st.supported()) throw ServiceError("Unsupported", "stability needs a heart of modules (vertex simples at one shift)");
    auto* e = model_->engine();
    Json j = window();
    j["name"] = name;
    j["objects"] = Json::array();
    for (const auto& t : wb_->catalog()) {
        if (t.shift != st.heart_shift()) continue;
        auto hn = st.hn_filtration(e->module(t.id));
        Json o;
        o["object"] = model_->label(t);
        o["charge"] = smm::to_json(st.charge(t));
        o["phase"] = phase_value(st.charge(t));
        o["semistable"] = hn.factors.size() == 1;
        o["inconclusive"] = hn.inconclusive;
        o["factors"] = Json::array();
        for (const auto& f : hn.factors)
            o["factors"].push_back({{"dims", f.rep.dims}, {"multiplicities", f.multiplicities}, {"charge", smm::to_json(f.charge)}});
        j["objects"].push_back(o);
    }
    return j;
}

Json Session::reduce(const std::string& name, const std::vector<std::size_t>& subset)
{
    const Collection c = get(name).collection;
    auto s = wb_->subset_terms(c, subset);
    ReductionContext ctx;
    try {
        ctx = smm::reduce(*wb_, s, c.kind, c.w);
    } catch (const RepError& e) {
        throw ServiceError(e.code(), e.what(), smm::to_json(*model_, wb_->check_setup(s, c.kind, c.w)));
    }
    Json j = window();
    j["name"] = name;
    j["subset"] = subset;
    j["reduction"] = smm::to_json(*model_, ctx);
    j["reduce_shift_lift"] = smm::to_json(*model_, verify_reduce_shift_lift(*wb_, c, subset));
    return j;
}

Json Session::iterate(const std::string& name, const std::vector<std::size_t>& subset, Direction dir, std::size_t n)
{
    Json j = window();
    j["name"] = name;
    j["subset"] = subset;
    j["trace"] = smm::to_json(*model_, iterate_mutation(*wb_, get(name).collection, subset, dir, n));
    return j;
}

Json Session::adjacency(const std::string& name)
{
    Json j = window();
    j["name"] = name;
    j["adjacency"] = smm::to_json(*model_, wb_->check_adjacency(get(name).collection));
    return j;
}

Json Session::graph() const
{
    Json j = window();
    j["nodes"] = Json::array();
    for (const auto& e : entries_)
        j["nodes"].push_back({{"name", e.name},
                              {"members", labels(*model_, e.collection.members)},
                              {"parent", e.parent ? Json(*e.parent) : Json(nullptr)},
                              {"tombstone", e.tombstone}});
    j["edges"] = Json::array();
    for (const auto& e : edges_)
        j["edges"].push_back({{"from", e.from}, {"to", e.to}, {"dir", to_string(e.direction)}, {"subset", e.subset}});
    return j;
}

Json Session::explore(const std::string& name, std::size_t depth)
{
    const Collection start = get(name).collection;
    std::map<std::vector<Term>, std::size_t> index;
    std::vector<Collection> nodes{start};
    std::vector<std::size_t> level{0};
    index[member_key(*model_, start)] = 0;
    Json edges = Json::array();
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
        const std::size_t at = queue.front();
        queue.pop_front();
        if (level[at] >= depth) continue;
        for (const auto& sub : all_subsets(nodes[at].members.size())) {
            if (sub.size() == nodes[at].members.size()) continue;
            for (Direction dir : {Direction::Right, Direction::Left}) {
                auto r = wb_->mutate(nodes[at], sub, dir);
                if (!r.ok) continue;
                r.result.history.clear();
                auto key = member_key(*model_, r.result);
                auto [it, fresh] = index.emplace(key, nodes.size());
                if (fresh) {
                    nodes.push_back(r.result);
                    level.push_back(level[at] + 1);
                    queue.push_back(it->second);
                }
                edges.push_back({{"from", at}, {"to", it->second}, {"dir", to_string(dir)}, {"subset", sub},
                                 {"axioms", to_string(r.axioms.status)}});
            }
        }
    }
    Json j = window();
    j["root"] = name;
    j["depth"] = depth;
    j["nodes"] = Json::array();
    for (std::size_t i = 0; i < nodes.size(); ++i)
        j["nodes"].push_back({{"id", i}, {"level", level[i]}, {"members", labels(*model_, nodes[i].members)}});
    j["edges"] = edges;
    return j;
}

std::string Session::explore_dot(const Json& g)
{
    std::ostringstream s;
    s << "digraph mutations {\n";
    for (const auto& n : g.at("nodes")) {
        std::string label;
        for (const auto& m : n.at("members")) label += (label.empty() ? "" : ", ") + m.get<std::string>();
        s << "  n" << n.at("id").get<std::size_t>() << " [label=\"{" << label << "}\"];\n";
    }
    for (const auto& e : g.at("edges")) {
        std::string sub;
        for (const auto& i : e.at("subset")) sub += (sub.empty() ? "" : ",") + std::to_string(i.get<std::size_t>());
        s << "  n" << e.at("from").get<std::size_t>() << " -> n" << e.at("to").get<std::size_t>() << " [label=\""
          << (e.at("dir") == "right" ? "r" : "l") << "{" << sub << "}\"];\n";
    }
    s << "}\n";
    return s.str();
}

}  // namespace smm
