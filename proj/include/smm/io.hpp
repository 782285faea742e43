#pragma once

#include <string>

#include "json.hpp"
#include "smm/reduction.hpp"
#include "smm/stability.hpp"

namespace smm {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

// Model definition: {kind or preset, quiver, n, w, rank, truncation, window, cap, p, seed}.
ModelConfig model_config_from_json(const Json& j);
Json to_json(const ModelConfig& cfg);
// SMM_MODULUS and SMM_WINDOW ("lo,hi") override the corresponding fields when set.
void apply_env_overrides(ModelConfig& cfg);

Json term_json(CategoryModel& m, Term t);
Json object_json(CategoryModel& m, const DObject& d);
Json to_json(CategoryModel& m, const Verdict& v);
Json to_json(CategoryModel& m, const Collection& c);
Collection collection_from_json(CategoryModel& m, const Json& j);
Json to_json(CategoryModel& m, const Triangle& t);
Json to_json(CategoryModel& m, const ApproxResult& r);
Json to_json(CategoryModel& m, const MutationResult& r);
Json to_json(CategoryModel& m, const TorsionPairSpec& tp);
Json to_json(CategoryModel& m, const TiltResult& t);
Json to_json(CategoryModel& m, const Theorem1Report& r);
Json to_json(CategoryModel& m, const AdjacencyReport& r);
Json to_json(CategoryModel& m, const ReductionContext& ctx);
Json to_json(CategoryModel& m, const IterationTrace& tr);
Json to_json(CategoryModel& m, const PhaseGapResult& r);
Json to_json(const Charge& z);
Json catalog_json(Workbench& wb);

// Charges keyed by member label: {label: [num_x, den_x, num_y, den_y]}.
CentralCharge charge_from_json(CategoryModel& m, const Collection& u, const Json& j);

Json error_json(const std::string& code, const std::string& message);

}  // namespace smm
