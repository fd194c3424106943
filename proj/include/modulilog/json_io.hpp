#pragma once

// JSON interchange: partitions as {"n": n, "part": ["0","s1",...]} with the
// inf-free part, faces as arrays of partition objects, and machine-readable
// renderings of the analysis reports. Keys keep insertion order so identical
// inputs produce byte-identical output.

#include <complex>

#include "json.hpp"

#include "modulilog/itint.hpp"
#include "modulilog/period.hpp"
#include "modulilog/polylog.hpp"
#include "modulilog/sing_divisor.hpp"
#include "modulilog/stasheff.hpp"

namespace modulilog {

using OrderedJson = nlohmann::ordered_json;

OrderedJson complex_json(std::complex<double> v);
std::complex<double> complex_from_json(const nlohmann::json& j);

OrderedJson partition_json(const StablePartition& p);
StablePartition partition_from_json(const nlohmann::json& j);

OrderedJson face_json(const Face& f);
Face face_from_json(const nlohmann::json& j);

OrderedJson locus_json(const SingularLocus& locus);
OrderedJson avoidance_json(const AvoidanceReport& report);

OrderedJson series_json(const SeriesResult& r);
OrderedJson quadrature_json(const QuadratureResult& r);
OrderedJson homotopy_json(const HomotopyReport& r);

OrderedJson period_matrix_json(const PeriodMatrix& m);
OrderedJson degeneration_json(const DegenerationReport& r);

} // namespace modulilog
