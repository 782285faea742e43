#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "smm/io.hpp"

namespace smm {

// Error carrying a machine-readable payload next to the code.
class ServiceError : public RepError {
public:
    ServiceError(std::string code, std::string message, Json details = Json::object())
        : RepError(std::move(code), std::move(message)), details_(std::move(details))
    {
    }
    const Json& details() const { return details_; }

private:
    Json details_;
};

struct RegistryEntry {
    std::string name;
    Collection collection;
    std::optional<std::string> parent;
    bool tombstone = false;
};

struct GraphEdge {
    std::string from;
    std::string to;
    Direction direction = Direction::Right;
    std::vector<std::size_t> subset;
};

// One model, an append-only registry of named collections and the mutation graph between them.
class Session {
public:
    explicit Session(const ModelConfig& cfg);

    static std::unique_ptr<Session> from_json(const Json& j);
    static std::unique_ptr<Session> load(const std::string& path);
    Json to_json() const;
    void save(const std::string& path) const;

    CategoryModel& model() { return *model_; }
    Workbench& workbench() { return *wb_; }
    const std::vector<RegistryEntry>& entries() const { return entries_; }
    const std::vector<GraphEdge>& edges() const { return edges_; }

    const RegistryEntry& get(const std::string& name) const;
    bool has(const std::string& name) const;
    // Adds a collection; names are unique and never reused.
    Json add(const std::string& name, Collection c, std::optional<std::string> parent = std::nullopt);
    void tombstone(const std::string& name);

    // Subset given by member labels or indices.
    std::vector<std::size_t> parse_subset(const Collection& c, const Json& subset);
    std::vector<std::size_t> parse_subset(const Collection& c, const std::vector<std::string>& labels);

    Json catalog();
    Json check(const std::string& name);
    Json mutate(const std::string& name, const std::vector<std::size_t>& subset, Direction dir,
                std::optional<std::string> new_name = std::nullopt);
    Json tilt(const std::string& name, const std::vector<std::size_t>& subset, Direction dir);
    Json theorem1(const std::string& name, const std::vector<std::size_t>& subset);
    Json phasegap(const std::string& name, const std::vector<std::size_t>& subset);
    Json stability(const std::string& name, const Json& charges);
    Json reduce(const std::string& name, const std::vector<std::size_t>& subset);
    Json iterate(const std::string& name, const std::vector<std::size_t>& subset, Direction dir, std::size_t n);
    Json adjacency(const std::string& name);
    Json graph() const;
    // Breadth-first search over all subset mutations in both directions, nodes deduplicated by member set.
    Json explore(const std::string& name, std::size_t depth);
    static std::string explore_dot(const Json& explored);

    Json window() const;

private:
    ModelConfig cfg_;
    std::unique_ptr<CategoryModel> model_;
    std::unique_ptr<Workbench> wb_;
    std::vector<RegistryEntry> entries_;
    std::vector<GraphEdge> edges_;
    std::optional<Json> catalog_;
};

}  // namespace smm
