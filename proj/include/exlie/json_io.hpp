#pragma once

#include <json.hpp>

#include "exlie/albert.hpp"
#include "exlie/cubic.hpp"
#include "exlie/rootdata.hpp"
#include "exlie/verify.hpp"

namespace exlie {

using nlohmann::json;

json rat_json(const Rat& r);
json scalar_json(const Scalar& s);
json octonion_json(const Octonion<Rat>& x);
json albert_json(const AlbertElement<Rat>& a);
json cubic_json(const BinaryCubic<Rat>& f);
json packet_json(const std::vector<DiscreteSeriesDatum>& packet);
json suite_json(const SuiteResult& s);
json report_json(const std::vector<SuiteResult>& suites);

}  // namespace exlie
