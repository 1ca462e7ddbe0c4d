#pragma once

#include <map>
#include <optional>
#include <utility>

#include <json.hpp>

#include "ltorus/algebra.hpp"
#include "ltorus/dga.hpp"
#include "ltorus/front.hpp"
#include "ltorus/ruling.hpp"
#include "ltorus/skein.hpp"

namespace ltorus {

using nlohmann::json;

json to_json(const ZPoly& p);
json to_json(const AZPoly& p);
json to_json(const SkeinElement& s);
ZPoly zpoly_from_json(const json& j);
AZPoly azpoly_from_json(const json& j);
SkeinElement skein_from_json(const json& j);

// Front diagram files may carry an orientation and a Maslov seed alongside
// the combinatorial data.
struct FrontInput {
    FrontDiagram diagram;
    std::optional<Orientation> orientation;
    std::optional<int> maslov_p;
    std::optional<std::vector<int>> maslov_seam_values;
};

json to_json(const FrontDiagram& d, const std::optional<Orientation>& o = std::nullopt,
             const std::optional<MaslovPotential>& mu = std::nullopt);
FrontInput front_from_json(const json& j);

json to_json(const SmoothDiagram& d);
SmoothDiagram smooth_from_json(const json& j);

json ruling_to_json(const FrontDiagram& d, const Ruling& r);

json to_json(const Dga& g);
json augmentation_to_json(const Dga& g, const Augmentation& eps);

// HOMFLY-PT coefficient file for the 2-graded certificate search:
// {"terms":[{"pos":[..],"neg":[..],"poly":{...}}]}.
std::map<std::pair<Partition, Partition>, ZPoly> homfly_coeff_from_json(const json& j);

}  // namespace ltorus
