#pragma once

#include <json.hpp>

#include "mpt/bounds.hpp"
#include "mpt/critical.hpp"
#include "mpt/oracle.hpp"
#include "mpt/reversal.hpp"
#include "mpt/scheduling.hpp"
#include "mpt/synchronizer.hpp"

namespace mpt {

// JSON reports. Every rational is a string ("19/3", "-inf"); node indices are
// 1-based. Keys keep insertion order, so output is byte-stable.

using Json = nlohmann::ordered_json;

Json to_json(const ExtendedRational& x);
Json to_json(const Rational& q);
Json to_json(const MaxPlusMatrix& a);
Json to_json(const MaxPlusVector& v);
Json to_json(const CriticalAnalysis& p);
Json to_json(const SystemBoundReport& r);
Json to_json(const MatrixBoundReport& r);
Json to_json(const TransientMeasurement& m);
Json to_json(const ScheduleReport& r);
Json to_json(const SynchronizerReport& r);
Json to_json(const ReversalReport& r);

/// Names of the formulas behind each reported bound.
Json bounds_provenance();

}  // namespace mpt
