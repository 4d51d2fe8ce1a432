#ifndef QDOM_IO_HPP
#define QDOM_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "qdom/co_map.hpp"
#include "qdom/optimizer.hpp"

namespace qdom {

// Shortest round-trip decimal rendering of a double.
std::string format_double(double x);

Orientation parse_orientation(const std::string& name);
std::string orientation_name(Orientation o);

// CSV: header row names the objectives, one row per sample. The label
// defaults to the file stem.
SampleSet read_samples_csv(const std::string& path);

// JSON: {"label": ..., "orientation": ..., "points": [[...], ...]}.
SampleSet read_samples_json(const std::string& path);

// Dispatch on extension (.json vs anything else -> CSV).
SampleSet read_samples(const std::string& path);

void write_samples_csv(const SampleSet& set, std::ostream& out);

// Grid dump: k,radius,dir_index,x0,...,x{d-1}; origin copies have k=0.
void write_grid_csv(const AugmentedGrid& grid, std::ostream& out);

// Map dump: sample_index,rank,sign_0..sign_{d-1},grid_index.
void write_map_csv(const EmpiricalCOMap& map, std::ostream& out);

// History dump: replication,generation,evaluations,delta_hv.
void write_history_csv(const std::vector<RunHistory>& replications, std::ostream& out);

}  // namespace qdom

#endif
