#include <csignal>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "smm/server.hpp"

using namespace smm;

namespace {

// Splits at commas outside brackets and parentheses, so "(2,2),s1" gives two labels.
std::vector<std::string> split_members(const std::string& s)
{
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char ch : s) {
        if (ch == '(' || ch == '[') ++depth;
        if (ch == ')' || ch == ']') --depth;
        if (ch == ',' && depth == 0) {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
            continue;
        }
        if (ch != ' ') cur += ch;
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

Json subset_json(const std::string& at)
{
    Json j = Json::array();
    for (const auto& x : split_members(at)) {
        if (!x.empty() && std::all_of(x.begin(), x.end(), ::isdigit)) j.push_back(std::stoul(x));
        else j.push_back(x);
    }
    return j;
}

Json read_json(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ServiceError("NoFile", "cannot read '" + path + "'");
    Json j = Json::parse(in, nullptr, false);
    if (j.is_discarded()) throw ServiceError("BadJson", "'" + path + "' is not valid JSON");
    return j;
}

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path);
    if (!out) throw ServiceError("NoFile", "cannot write '" + path + "'");
    out << text;
}

void print(const Json& j) { std::cout << j.dump(2) << "\n"; }

Service* g_service = nullptr;

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Simple-minded mutation workbench"};
    app.require_subcommand(1);
    std::string session_path = "smm_session.json";
    app.add_option("--session", session_path, "Session file")->envname("SMM_SESSION");

    std::string name, at, dir = "right", file, as, dot, svg, host = "127.0.0.1", kind = "SMC";
    std::vector<std::string> members;
    std::size_t steps = 1, depth = 1;
    int w = 0, port = 8080;
    bool force = false;

    auto* model = app.add_subcommand("model", "Model definition");
    model->require_subcommand(1);
    auto* model_define = model->add_subcommand("define", "Create a session from a model file");
    std::vector<std::size_t> preset_args;
    model_define->add_option("file", file, "Model JSON, or a preset: a_n N, orbit N W, tube R, ky-counterexample [CAP]")
        ->required();
    model_define->add_option("args", preset_args, "Preset arguments");
    model_define->add_flag("--force", force, "Replace an existing session file");
    auto* model_show = model->add_subcommand("show", "Print the model and catalog size");

    auto* catalog = app.add_subcommand("catalog", "Print the catalog with AR adjacency");

    auto* collection = app.add_subcommand("collection", "Named collections");
    collection->require_subcommand(1);
    auto* coll_add = collection->add_subcommand("add", "Register a collection");
    coll_add->add_option("name", name)->required();
    coll_add->add_option("members", members)->required();
    coll_add->add_option("--kind", kind, "SMC or wSMS")->check(CLI::IsMember({"SMC", "wSMS"}));
    coll_add->add_option("--w", w, "w for a w-SMS");
    auto* coll_check = collection->add_subcommand("check", "Axiom verdicts");
    coll_check->add_option("name", name)->required();
    auto* coll_list = collection->add_subcommand("list", "List collections");
    auto* coll_export = collection->add_subcommand("export", "Print a collection as JSON");
    coll_export->add_option("name", name)->required();
    auto* coll_import = collection->add_subcommand("import", "Register a collection from JSON");
    coll_import->add_option("name", name)->required();
    coll_import->add_option("file", file)->required();

    auto add_at = [&](CLI::App* c, bool with_dir) {
        c->add_option("name", name)->required();
        c->add_option("--at", at, "Subset S as member labels or indices, comma separated")->required();
        if (with_dir) c->add_option("--dir", dir)->check(CLI::IsMember({"right", "left"}));
    };
    auto* mutate = app.add_subcommand("mutate", "Mutate at a subset and register the result");
    add_at(mutate, true);
    mutate->add_option("--as", as, "Name of the new collection");
    auto* tilt = app.add_subcommand("tilt", "Simple tilt at a subset");
    add_at(tilt, true);
    auto* theorem1 = app.add_subcommand("theorem1", "Six-condition table");
    add_at(theorem1, false);
    auto* phasegap = app.add_subcommand("phasegap", "Phase-gap check for the canonical charge");
    add_at(phasegap, false);
    phasegap->add_option("--svg", svg, "Write a charge plot");
    auto* stability = app.add_subcommand("stability", "HN filtrations for a given charge");
    stability->add_option("name", name)->required();
    stability->add_option("--charge", file, "Charges {label: [nx, dx, ny, dy]}")->required();
    stability->add_option("--svg", svg, "Write a charge plot");
    auto* reduce = app.add_subcommand("reduce", "Simple-minded reduction at a subset");
    add_at(reduce, false);
    auto* iterate = app.add_subcommand("iterate", "Iterated mutation with period detection");
    add_at(iterate, true);
    iterate->add_option("-n", steps, "Number of steps");
    auto* adjacency = app.add_subcommand("adjacency", "Silting and cosilting verdicts");
    adjacency->add_option("name", name)->required();
    auto* graph = app.add_subcommand("graph", "Mutation graphs");
    graph->require_subcommand(1);
    auto* graph_show = graph->add_subcommand("show", "Registry history graph");
    auto* graph_explore = graph->add_subcommand("explore", "Search over all subset mutations");
    graph_explore->add_option("name", name)->required();
    graph_explore->add_option("--depth", depth);
    graph_explore->add_option("--dot", dot, "Write the graph as DOT");
    auto* serve = app.add_subcommand("serve", "Serve the JSON API");
    serve->add_option("--port", port);
    serve->add_option("--host", host);

    CLI11_PARSE(app, argc, argv);

    try {
        if (model_define->parsed()) {
            if (!force && std::ifstream(session_path)) throw ServiceError("SessionExists", "'" + session_path + "' exists; use --force");
            auto cfg = std::ifstream(file) ? model_config_from_json(read_json(file))
                                           : model_config_from_json(Json{{"preset", file}, {"args", preset_args}});
            apply_env_overrides(cfg);
            Session s(cfg);
            s.save(session_path);
            Json j = to_json(cfg);
            j["catalog_size"] = s.workbench().catalog().size();
            print(j);
            return 0;
        }
        auto s = Session::load(session_path);
        bool dirty = false;
        auto subset = [&] { return s->parse_subset(s->get(name).collection, subset_json(at)); };
        if (model_show->parsed()) {
            Json j = to_json(s->model().config());
            j["catalog_size"] = s->workbench().catalog().size();
            print(j);
        } else if (catalog->parsed()) {
            print(s->catalog());
        } else if (coll_add->parsed()) {
            Collection c;
            c.kind = kind == "wSMS" ? CollectionKind::WSMS : CollectionKind::SMC;
            c.w = w;
            for (const auto& m : members)
                for (const auto& x : split_members(m)) c.members.push_back(s->model().parse(x));
            print(s->add(name, c));
            dirty = true;
        } else if (coll_check->parsed()) {
            print(s->check(name));
        } else if (coll_list->parsed()) {
            print(s->graph()["nodes"]);
        } else if (coll_export->parsed()) {
            print(to_json(s->model(), s->get(name).collection));
        } else if (coll_import->parsed()) {
            print(s->add(name, collection_from_json(s->model(), read_json(file))));
            dirty = true;
        } else if (mutate->parsed()) {
            std::optional<std::string> target;
            if (!as.empty()) target = as;
            print(s->mutate(name, subset(), direction_from_string(dir), target));
            dirty = true;
        } else if (tilt->parsed()) {
            print(s->tilt(name, subset(), direction_from_string(dir)));
        } else if (theorem1->parsed()) {
            print(s->theorem1(name, subset()));
        } else if (phasegap->parsed()) {
            Json j = s->phasegap(name, subset());
            if (!svg.empty()) {
                std::vector<std::pair<std::string, Charge>> pts;
                for (const auto& [label, q] : j["charges"].items())
                    pts.push_back({label, {Rational(q[0], q[1]), Rational(q[2], q[3])}});
                const auto& fam = j["phasegap"]["family"];
                for (std::size_t i = 0; i < fam.size(); ++i) {
                    const auto& q = j["phasegap"]["family_charges"][i];
                    pts.push_back({fam[i], {Rational(q[0], q[1]), Rational(q[2], q[3])}});
                }
                write_file(svg, charge_svg(pts));
            }
            print(j);
        } else if (stability->parsed()) {
            Json j = s->stability(name, read_json(file));
            if (!svg.empty()) {
                std::vector<std::pair<std::string, Charge>> pts;
                for (const auto& o : j["objects"]) {
                    const auto& q = o["charge"];
                    pts.push_back({o["object"], {Rational(q[0], q[1]), Rational(q[2], q[3])}});
                }
                write_file(svg, charge_svg(pts));
            }
            print(j);
        } else if (reduce->parsed()) {
            print(s->reduce(name, subset()));
        } else if (iterate->parsed()) {
            print(s->iterate(name, subset(), direction_from_string(dir), steps));
        } else if (adjacency->parsed()) {
            print(s->adjacency(name));
        } else if (graph_show->parsed()) {
            print(s->graph());
        } else if (graph_explore->parsed()) {
            Json g = s->explore(name, depth);
            if (!dot.empty()) write_file(dot, Session::explore_dot(g));
            print(g);
        } else if (serve->parsed()) {
            const std::string path = session_path;
            Service svc(*s, [path](const Session& sess) { sess.save(path); });
            if (!svc.bind(host, port)) throw ServiceError("BindFailed", "cannot bind " + host + ":" + std::to_string(port));
            g_service = &svc;
            std::signal(SIGINT, [](int) {
                if (g_service) g_service->stop();
            });
            std::cerr << "listening on " << host << ":" << port << "\n";
            svc.serve();
            g_service = nullptr;
        }
        if (dirty) s->save(session_path);
    } catch (const ServiceError& e) {
        Json j = error_json(e.code(), e.what());
        if (!e.details().empty()) j["error"]["details"] = e.details();
        print(j);
        return 1;
    } catch (const RepError& e) {
        print(error_json(e.code(), e.what()));
        return 1;
    } catch (const std::exception& e) {
        print(error_json("Internal", e.what()));
        return 1;
    }
    return 0;
}
