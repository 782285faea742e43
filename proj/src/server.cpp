#include "smm/server.hpp"

#include <mutex>
#include <shared_mutex>

#include "httplib.h"

namespace smm {

struct Service::Impl {
    Session& session;
    std::function<void(const Session&)> on_write;
    std::shared_mutex mutex;
    Json catalog;
    httplib::Server http;
};

namespace {

Response error(int status, const std::string& code, const std::string& message, const Json& details = Json::object())
{
    Json body = error_json(code, message);
    if (!details.empty()) body["error"]["details"] = details;
    return {status, body};
}

Json parse_body(const std::string& body)
{
    if (body.empty()) return Json::object();
    Json j = Json::parse(body, nullptr, false);
    if (j.is_discarded() || !j.is_object()) throw ServiceError("BadRequest", "request body must be a JSON object");
    return j;
}

std::string field(const Json& j, const char* key)
{
    if (!j.contains(key) || !j.at(key).is_string())
        throw ServiceError("BadRequest", std::string("missing string field '") + key + "'");
    return j.at(key).get<std::string>();
}

}  // namespace

Service::Service(Session& s, std::function<void(const Session&)> on_write)
    : impl_(new Impl{s, std::move(on_write), {}, {}, {}})
{
    impl_->catalog = s.catalog();
    auto route = [this](const httplib::Request& req, httplib::Response& res) {
        auto r = handle(req.method, req.path, req.body);
        res.status = r.status;
        res.set_content(r.body.dump(), "application/json");
    };
    for (const char* p : {"/catalog", "/collections", "/graph"}) impl_->http.Get(p, route);
    for (const char* p : {"/collections", "/mutate", "/tilt", "/theorem1", "/phasegap", "/reduce", "/iterate",
                          "/adjacency", "/explore"})
        impl_->http.Post(p, route);
}

Service::~Service() = default;

Response Service::handle(const std::string& method, const std::string& path, const std::string& body)
{
    auto& s = impl_->session;
    try {
        if (method == "GET") {
            if (path == "/catalog") return {200, impl_->catalog};
            std::shared_lock lock(impl_->mutex);
            if (path == "/collections") {
                Json j = s.window();
                j["collections"] = Json::array();
                for (const auto& e : s.entries())
                    j["collections"].push_back({{"name", e.name},
                                                {"collection", to_json(s.model(), e.collection)},
                                                {"parent", e.parent ? Json(*e.parent) : Json(nullptr)},
                                                {"tombstone", e.tombstone}});
                return {200, j};
            }
            if (path == "/graph") return {200, s.graph()};
            return error(404, "NotFound", "no route " + method + " " + path);
        }
        if (method != "POST") return error(405, "MethodNotAllowed", method + " is not supported");
        const Json req = parse_body(body);
        std::unique_lock lock(impl_->mutex);
        Response out;
        auto subset = [&](const Collection& c) { return s.parse_subset(c, req.value("subset", Json::array())); };
        auto dir = [&] { return direction_from_string(req.value("dir", std::string("right"))); };
        if (path == "/collections") {
            const std::string name = field(req, "name");
            Collection c = collection_from_json(s.model(), req);
            out = {200, s.add(name, c)};
        } else if (path == "/mutate") {
            const std::string name = field(req, "name");
            std::optional<std::string> target;
            if (req.contains("newName")) target = field(req, "newName");
            out = {200, s.mutate(name, subset(s.get(name).collection), dir(), target)};
        } else if (path == "/tilt") {
            const std::string name = field(req, "name");
            out = {200, s.tilt(name, subset(s.get(name).collection), dir())};
        } else if (path == "/theorem1") {
            const std::string name = field(req, "name");
            out = {200, s.theorem1(name, subset(s.get(name).collection))};
        } else if (path == "/phasegap") {
            const std::string name = field(req, "name");
            out = {200, s.phasegap(name, subset(s.get(name).collection))};
        } else if (path == "/reduce") {
            const std::string name = field(req, "name");
            out = {200, s.reduce(name, subset(s.get(name).collection))};
        } else if (path == "/iterate") {
            const std::string name = field(req, "name");
            out = {200, s.iterate(name, subset(s.get(name).collection), dir(), req.value("n", std::size_t{1}))};
        } else if (path == "/adjacency") {
            out = {200, s.adjacency(field(req, "name"))};
        } else if (path == "/explore") {
            out = {200, s.explore(field(req, "name"), req.value("depth", std::size_t{1}))};
        } else {
            return error(404, "NotFound", "no route " + method + " " + path);
        }
        if ((path == "/collections" || path == "/mutate") && impl_->on_write) impl_->on_write(s);
        return out;
    } catch (const ServiceError& e) {
        return error(400, e.code(), e.what(), e.details());
    } catch (const RepError& e) {
        return error(400, e.code(), e.what());
    } catch (const Json::exception& e) {
        return error(400, "BadRequest", e.what());
    }
}

int Service::bind_any_port(const std::string& host) { return impl_->http.bind_to_any_port(host); }

bool Service::bind(const std::string& host, int port) { return impl_->http.bind_to_port(host, port); }

void Service::serve() { impl_->http.listen_after_bind(); }

void Service::stop() { impl_->http.stop(); }

}  // namespace smm
