#pragma once

#include <functional>
#include <memory>
#include <string>

#include "smm/session.hpp"

namespace smm {

struct Response {
    int status = 200;
    Json body;
};

// JSON-over-HTTP front end of a session. Reads share a lock, writes are serialized.
class Service {
public:
    explicit Service(Session& s, std::function<void(const Session&)> on_write = {});
    ~Service();

    Response handle(const std::string& method, const std::string& path, const std::string& body);

    // Binds to an ephemeral port on host and returns it; serve() then blocks until stop().
    int bind_any_port(const std::string& host);
    bool bind(const std::string& host, int port);
    void serve();
    void stop();

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace smm
