// SPDX-License-Identifier: Apache-2.0
#pragma once

// JSON encodings of results. Rationals are exact "p/q" strings; every
// encoder has a decoder so that decode(encode(x)) == x.

#include <json.hpp>

#include "supergr/grassmannian.hpp"
#include "supergr/localization.hpp"
#include "supergr/rational.hpp"
#include "supergr/root_system.hpp"
#include "supergr/splitting.hpp"
#include "supergr/symmetric_pair.hpp"
#include "supergr/volume_expr.hpp"

namespace supergr::cli {

using nlohmann::json;

json encode(const Rational& q);
Rational decode_rational(const json& j);

json encode(const VolumeExpr& v);
VolumeExpr decode_volume(const json& j);

json encode(const SuperDim& d);
SuperDim decode_superdim(const json& j);

json encode(const GrassSpec& g);
GrassSpec decode_grass_spec(const json& j);

json encode(const WeightVector& w);
WeightVector decode_weight(const json& j);

json encode(const ParamVector& a);
ParamVector decode_params(const json& j);

json encode(const LocalizationReport& report);
LocalizationReport decode_localization(const json& j);

json encode(const ChainStep& step);
ChainStep decode_step(const json& j);

/// Includes derived fields (bottom, counts, validity) that the decoder
/// ignores.
json encode(const SubgroupChain& chain);
SubgroupChain decode_chain(const json& j);

SplitRule decode_rule(const std::string& name);

}  // namespace supergr::cli
