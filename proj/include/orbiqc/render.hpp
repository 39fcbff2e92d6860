/**
 * @file render.hpp
 * @brief Text and LaTeX rendering of ring-level values.
 */
#ifndef ORBIQC_RENDER_HPP
#define ORBIQC_RENDER_HPP

#include <string>

#include "orbiqc/quantum_ring.hpp"
#include "orbiqc/sector_geometry.hpp"

namespace orbiqc {

/// "1/2*Q^(1/2)*1_(1/2) + P^2" style rendering; the untwisted unit 1_(0)
/// and unit coefficients are omitted.
std::string orb_to_string(const SectorSet& s, const OrbClass& x);

/// "P^3 = 1/2*Q^(1/2)*1_(1/2)"
std::string relation_to_string(const SectorSet& s, const Relation& rel);

/// "P^4 = 1/4*Q"
std::string top_relation_to_string(const RingPresentation& pr);

std::string novikov_to_latex(const NovikovScalar& c);

/// The cyclic matrix as a pmatrix display.
std::string matrix_to_latex(const QuantumMatrix& m);

} // namespace orbiqc

#endif
