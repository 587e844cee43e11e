#pragma once

#include "trajsimp/representation.hpp"

#include <istream>
#include <ostream>
#include <string>
#include <vector>

namespace trajsimp {

struct NamedTrajectory {
    std::string id;
    Trajectory points;
};

// Reads `traj_id,t,x,y` rows. Rows are grouped by id in order of first
// appearance. A row repeating the previous timestamp of its trajectory is
// dropped; any other non-increasing timestamp is rejected. With geo set, x
// and y are longitude and latitude in degrees and are projected to meters
// about each trajectory's first point. Throws DataError on bad input.
std::vector<NamedTrajectory> ingest_csv(std::istream& in, bool geo = false);
std::vector<NamedTrajectory> ingest_csv(const std::string& path, bool geo = false);

void write_trajectories_csv(std::ostream& out, const std::vector<NamedTrajectory>& trajs);
void write_trajectories_csv(const std::string& path, const std::vector<NamedTrajectory>& trajs);

struct NamedRepresentation {
    std::string id;
    Representation rep;
};

// Header `traj_id,seg_index,sx,sy,st,ex,ey,et,covered,patched_start`, values
// printed with nine significant digits.
void emit_segments(std::ostream& out, const std::vector<NamedRepresentation>& reps);
void emit_segments(const std::string& path, const std::vector<NamedRepresentation>& reps);

// Parses the format written by emit_segments. Throws DataError on bad input.
std::vector<NamedRepresentation> read_segments(std::istream& in);
std::vector<NamedRepresentation> read_segments(const std::string& path);

// "%.9g"
std::string format_number(double v);

} // namespace trajsimp
