#include "akad/io.hpp"

#include "akad/errors.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <system_error>

namespace akad {

std::string format_double(double value) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

double parse_double(const std::string& token) {
    double value = 0.0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto res = std::from_chars(first, last, value);
    if (res.ec != std::errc() || res.ptr != last)
        throw ParseError("expected a decimal number, got '" + token + "'");
    return value;
}

namespace {

long parse_count(const std::string& token, const char* what) {
    long value = 0;
    auto res = std::from_chars(token.data(), token.data() + token.size(), value);
    if (res.ec != std::errc() || res.ptr != token.data() + token.size() || value < 0)
        throw ParseError(std::string("expected a nonnegative ") + what + ", got '" +
                         token + "'");
    return value;
}

std::string next_token(std::istream& in, const char* context) {
    std::string token;
    if (!(in >> token))
        throw ParseError(std::string("unexpected end of input while reading ") + context);
    return token;
}

}  // namespace

Eigen::MatrixXd read_matrix(std::istream& in) {
    const long rows = parse_count(next_token(in, "matrix row count"), "row count");
    const long cols = parse_count(next_token(in, "matrix column count"), "column count");
    Eigen::MatrixXd m(rows, cols);
    for (long i = 0; i < rows; ++i)
        for (long j = 0; j < cols; ++j)
            m(i, j) = parse_double(next_token(in, "matrix entry"));
    return m;
}

Eigen::MatrixXd read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open matrix file '" + path + "'");
    return read_matrix(in);
}

void write_matrix(std::ostream& out, const Eigen::MatrixXd& m) {
    out << m.rows() << ' ' << m.cols() << '\n';
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (j) out << ' ';
            out << format_double(m(i, j));
        }
        out << '\n';
    }
}

void write_matrix_file(const std::string& path, const Eigen::MatrixXd& m) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open '" + path + "' for writing");
    write_matrix(out, m);
}

std::vector<Eigen::MatrixXd> read_triangular(std::istream& in) {
    const long levels = parse_count(next_token(in, "level count"), "level count");
    const long dim = parse_count(next_token(in, "ambient dimension"), "dimension");
    if (dim < 1) throw ParseError("triangular array: ambient dimension must be >= 1");
    std::vector<Eigen::MatrixXd> out;
    out.reserve(static_cast<size_t>(levels));
    for (long n = 0; n < levels; ++n) {
        const long m_n = parse_count(next_token(in, "row count m_n"), "row count");
        Eigen::MatrixXd level(m_n, dim);
        for (long i = 0; i < m_n; ++i)
            for (long j = 0; j < dim; ++j)
                level(i, j) = parse_double(next_token(in, "functional entry"));
        out.push_back(std::move(level));
    }
    return out;
}

std::vector<Eigen::MatrixXd> read_triangular_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open triangular-array file '" + path + "'");
    return read_triangular(in);
}

void write_triangular(std::ostream& out, const std::vector<Eigen::MatrixXd>& levels) {
    const Eigen::Index dim = levels.empty() ? 0 : levels.front().cols();
    out << levels.size() << ' ' << dim << '\n';
    for (const auto& level : levels) {
        out << level.rows() << '\n';
        for (Eigen::Index i = 0; i < level.rows(); ++i) {
            for (Eigen::Index j = 0; j < level.cols(); ++j) {
                if (j) out << ' ';
                out << format_double(level(i, j));
            }
            out << '\n';
        }
    }
}

void write_triangular_file(const std::string& path,
                           const std::vector<Eigen::MatrixXd>& levels) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open '" + path + "' for writing");
    write_triangular(out, levels);
}

}  // namespace akad
