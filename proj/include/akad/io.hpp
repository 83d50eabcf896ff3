#pragma once

#include <Eigen/Core>

#include <iosfwd>
#include <string>
#include <vector>

namespace akad {

// Matrix exchange format: first line "rows cols", then row-major
// whitespace-separated decimals. Numbers are written with shortest
// round-trip precision and parsed with std::from_chars, so no locale is
// involved in either direction.
Eigen::MatrixXd read_matrix(std::istream& in);
Eigen::MatrixXd read_matrix_file(const std::string& path);
void write_matrix(std::ostream& out, const Eigen::MatrixXd& m);
void write_matrix_file(const std::string& path, const Eigen::MatrixXd& m);

// Triangular-array exchange format: line 1 "num_levels ambient_dim", then for
// each level a line "m_n" followed by m_n lines of ambient_dim decimals.
std::vector<Eigen::MatrixXd> read_triangular(std::istream& in);
std::vector<Eigen::MatrixXd> read_triangular_file(const std::string& path);
void write_triangular(std::ostream& out, const std::vector<Eigen::MatrixXd>& levels);
void write_triangular_file(const std::string& path,
                           const std::vector<Eigen::MatrixXd>& levels);

// Locale-free double formatting/parsing used by the formats above.
std::string format_double(double value);
double parse_double(const std::string& token);

}  // namespace akad
