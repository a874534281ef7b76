#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "egonet/experiment.hpp"
#include "egonet/graph.hpp"

namespace egonet {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Whitespace-separated edge list, '#' comment lines, duplicates and
/// self-loops dropped. Node count is max id + 1 unless overridden.
AdjacencyMatrix load_edge_list(const std::string& path, bool one_based = false,
                               int n_override = 0);

/// Matrix files: header line "rows cols", then row-major decimals.
void write_matrix(const Matrix& m, std::ostream& out);
void write_matrix_file(const Matrix& m, const std::string& path);
Matrix read_matrix(std::istream& in, const std::string& context = "matrix");
Matrix read_matrix_file(const std::string& path);

void write_ego_view(const EgoView& view, std::ostream& out);
void write_ego_view_file(const EgoView& view, const std::string& path);
EgoView read_ego_view(std::istream& in, const std::string& context = "ego view");
EgoView read_ego_view_file(const std::string& path);

/// Sectioned key=value config; files ending in .json are parsed as JSON
/// with the same section/key names.
ExperimentConfig parse_config_file(const std::string& path);
ExperimentConfig parse_config_text(const std::string& text,
                                   const std::string& context = "config");

}  // namespace egonet
