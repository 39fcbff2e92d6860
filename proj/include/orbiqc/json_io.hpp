/**
 * @file json_io.hpp
 * @brief JSON serialization of every report type (schema "orbiqc/1") and
 *        the parsers that make reports lossless round-trips.
 *
 * Rationals, Novikov scalars and z-Laurent coefficients serialize as their
 * canonical text forms, never as floats; objects use sorted keys, so
 * identical inputs produce byte-identical reports.
 */
#ifndef ORBIQC_JSON_IO_HPP
#define ORBIQC_JSON_IO_HPP

#include <nlohmann/json.hpp>

#include "orbiqc/complete_intersection.hpp"
#include "orbiqc/j_function.hpp"
#include "orbiqc/quantum_ring.hpp"
#include "orbiqc/sector_geometry.hpp"

namespace orbiqc {

using json = nlohmann::json;

json sector_to_json(const Sector& s);
Sector sector_from_json(const json& j);

json matrix_to_json(const QuantumMatrix& m);
QuantumMatrix matrix_from_json(const json& j);

json orb_to_json(const SectorSet& s, const OrbClass& x);
OrbClass orb_from_json(const SectorSet& s, const json& j);

json table_to_json(const SectorSet& s, const MultiplicationTable& t);
MultiplicationTable table_from_json(const SectorSet& s, const json& j);

json presentation_to_json(const SectorSet& s, const RingPresentation& p);
RingPresentation presentation_from_json(const SectorSet& s, const json& j);

json series_to_json(const SectorSet& s, const JSeries& series);
JSeries series_from_json(const SectorSet& s, const json& j);

json pf_report_to_json(const PFReport& r);
json mirror_to_json(const MirrorData& m);
json series_hypothesis_to_json(const SeriesHypothesisReport& r);
json terminal_to_json(const TerminalReport& r);
json k_bounds_to_json(const KBoundsReport& r);
json reid_tai_to_json(long r, const std::vector<long>& a, const ReidTaiReport& rep);

} // namespace orbiqc

#endif
