#pragma once

#include <string>

#include <json.hpp>

#include "proxi/estimators.hpp"
#include "proxi/latent_law.hpp"
#include "proxi/nuisance.hpp"
#include "proxi/recovery.hpp"
#include "proxi/study.hpp"

namespace proxi {

nlohmann::json to_json(const LatentLaw& law);
LatentLaw latent_law_from_json(const nlohmann::json& j);

nlohmann::json to_json(const StratifiedRecovery& rec);

nlohmann::json to_json(const NuisanceSet& nuis);
NuisanceSet nuisance_from_json(const nlohmann::json& j);

nlohmann::json to_json(const DgpSpec& spec);
nlohmann::json to_json(const StudyConfig& cfg);

// run record for a single estimate: kind, n, seed, folds, psi, CI, log
nlohmann::json estimate_run_json(const EstimateResult& r, std::uint64_t seed,
                                 const CrossfitConfig& cf,
                                 const std::vector<std::string>& corruption_log);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace proxi
