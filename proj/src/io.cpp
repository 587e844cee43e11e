#include "trajsimp/io.hpp"

#include "trajsimp/errors.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <string_view>
#include <unordered_map>

namespace trajsimp {

namespace {

std::vector<std::string_view> split(std::string_view line)
{
    std::vector<std::string_view> fields;
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = line.find(',', pos);
        fields.push_back(line.substr(pos, comma - pos));
        if (comma == std::string_view::npos)
            break;
        pos = comma + 1;
    }
    return fields;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.back() == '\r' || s.back() == ' '))
        s.remove_suffix(1);
    while (!s.empty() && s.front() == ' ')
        s.remove_prefix(1);
    return s;
}

std::string where(std::size_t line)
{
    return "line " + std::to_string(line);
}

double parse_double(std::string_view text, std::size_t line, const char* field)
{
    text = trim(text);
    if (!text.empty() && text.front() == '+')
        text.remove_prefix(1);
    double v = 0.0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || end != text.data() + text.size() || text.empty() || !std::isfinite(v))
        throw DataError(where(line) + ": field '" + field + "' is not a finite number: '" + std::string(text) + "'");
    return v;
}

std::size_t parse_count(std::string_view text, std::size_t line, const char* field)
{
    text = trim(text);
    std::size_t v = 0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || end != text.data() + text.size() || text.empty())
        throw DataError(where(line) + ": field '" + field + "' is not a non-negative integer");
    return v;
}

std::ifstream open_input(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw DataError("cannot open '" + path + "' for reading");
    return in;
}

std::ofstream open_output(const std::string& path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw DataError("cannot open '" + path + "' for writing");
    return out;
}

void expect_header(std::istream& in, std::string_view header, std::size_t& line_no)
{
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty())
            continue;
        if (trim(line) != header)
            throw DataError(where(line_no) + ": expected header '" + std::string(header) + "'");
        return;
    }
    throw DataError("input is empty; expected header '" + std::string(header) + "'");
}

} // namespace

std::string format_number(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

std::vector<NamedTrajectory> ingest_csv(std::istream& in, bool geo)
{
    std::size_t line_no = 0;
    expect_header(in, "traj_id,t,x,y", line_no);

    std::vector<NamedTrajectory> out;
    std::unordered_map<std::string, std::size_t> index;
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string_view row = trim(line);
        if (row.empty())
            continue;
        const std::vector<std::string_view> f = split(row);
        if (f.size() != 4)
            throw DataError(where(line_no) + ": expected 4 fields, found " + std::to_string(f.size()));
        const std::string id(trim(f[0]));
        if (id.empty())
            throw DataError(where(line_no) + ": empty traj_id");
        const Point p{parse_double(f[2], line_no, "x"), parse_double(f[3], line_no, "y"),
                      parse_double(f[1], line_no, "t")};

        auto [it, inserted] = index.try_emplace(id, out.size());
        if (inserted)
            out.push_back({id, {}});
        Trajectory& traj = out[it->second].points;
        if (!traj.empty()) {
            if (p.t == traj.back().t)
                continue;
            if (p.t < traj.back().t)
                throw DataError(where(line_no) + ": timestamp of trajectory '" + id + "' goes backwards");
        }
        traj.push_back(p);
    }

    if (geo) {
        for (NamedTrajectory& nt : out) {
            const GeoProjection proj{nt.points.front().x, nt.points.front().y};
            for (Point& p : nt.points)
                p = proj.project(p);
        }
    }
    return out;
}

std::vector<NamedTrajectory> ingest_csv(const std::string& path, bool geo)
{
    std::ifstream in = open_input(path);
    return ingest_csv(in, geo);
}

void write_trajectories_csv(std::ostream& out, const std::vector<NamedTrajectory>& trajs)
{
    out << "traj_id,t,x,y\n";
    for (const NamedTrajectory& nt : trajs)
        for (const Point& p : nt.points)
            out << nt.id << ',' << format_number(p.t) << ',' << format_number(p.x) << ',' << format_number(p.y)
                << '\n';
}

void write_trajectories_csv(const std::string& path, const std::vector<NamedTrajectory>& trajs)
{
    std::ofstream out = open_output(path);
    write_trajectories_csv(out, trajs);
    if (!out)
        throw DataError("failed writing '" + path + "'");
}

void emit_segments(std::ostream& out, const std::vector<NamedRepresentation>& reps)
{
    out << "traj_id,seg_index,sx,sy,st,ex,ey,et,covered,patched_start\n";
    for (const NamedRepresentation& nr : reps) {
        std::size_t i = 0;
        for (const Segment& s : nr.rep.segments) {
            out << nr.id << ',' << i++ << ',' << format_number(s.start.x) << ',' << format_number(s.start.y) << ','
                << format_number(s.start.t) << ',' << format_number(s.end.x) << ',' << format_number(s.end.y)
                << ',' << format_number(s.end.t) << ',' << s.covered << ','
                << (s.patched_start ? "true" : "false") << '\n';
        }
    }
}

void emit_segments(const std::string& path, const std::vector<NamedRepresentation>& reps)
{
    std::ofstream out = open_output(path);
    emit_segments(out, reps);
    if (!out)
        throw DataError("failed writing '" + path + "'");
}

std::vector<NamedRepresentation> read_segments(std::istream& in)
{
    std::size_t line_no = 0;
    expect_header(in, "traj_id,seg_index,sx,sy,st,ex,ey,et,covered,patched_start", line_no);

    std::vector<NamedRepresentation> out;
    std::unordered_map<std::string, std::size_t> index;
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string_view row = trim(line);
        if (row.empty())
            continue;
        const std::vector<std::string_view> f = split(row);
        if (f.size() != 10)
            throw DataError(where(line_no) + ": expected 10 fields, found " + std::to_string(f.size()));
        const std::string id(trim(f[0]));
        Segment s;
        s.start = {parse_double(f[2], line_no, "sx"), parse_double(f[3], line_no, "sy"),
                   parse_double(f[4], line_no, "st")};
        s.end = {parse_double(f[5], line_no, "ex"), parse_double(f[6], line_no, "ey"),
                 parse_double(f[7], line_no, "et")};
        s.covered = parse_count(f[8], line_no, "covered");
        const std::string_view flag = trim(f[9]);
        if (flag != "true" && flag != "false")
            throw DataError(where(line_no) + ": patched_start must be 'true' or 'false'");
        s.patched_start = flag == "true";

        auto [it, inserted] = index.try_emplace(id, out.size());
        if (inserted)
            out.push_back({id, {}});
        Representation& rep = out[it->second].rep;
        if (parse_count(f[1], line_no, "seg_index") != rep.segments.size())
            throw DataError(where(line_no) + ": segments of '" + id + "' are out of order");
        rep.segments.push_back(s);
        if (s.anomalous())
            ++rep.anomalous_candidates;
        if (s.patched_start)
            ++rep.patches;
    }
    return out;
}

std::vector<NamedRepresentation> read_segments(const std::string& path)
{
    std::ifstream in = open_input(path);
    return read_segments(in);
}

} // namespace trajsimp
