#include "mset/pointset_io.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "mset/errors.hpp"

namespace mset {

namespace {

bool is_blank_or_comment(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

[[noreturn]] void fail(std::size_t line_no, const std::string& what) {
    std::ostringstream msg;
    msg << "line " << line_no << ": " << what;
    throw FormatError(msg.str());
}

}  // namespace

SphericalConfiguration read_pointset(std::istream& in, bool normalize) {
    std::string line;
    std::size_t line_no = 0;
    std::size_t n = 0;
    std::size_t m = 0;
    bool have_header = false;
    std::vector<double> coords;
    std::size_t points_read = 0;

    while (std::getline(in, line)) {
        ++line_no;
        if (is_blank_or_comment(line)) continue;
        std::istringstream tokens(line);
        if (!have_header) {
            long long n_in = 0, m_in = 0;
            if (!(tokens >> n_in >> m_in)) fail(line_no, "expected header 'n m'");
            std::string extra;
            if (tokens >> extra) fail(line_no, "unexpected token '" + extra + "' after header");
            if (n_in < 1 || m_in < 1) fail(line_no, "header values must be positive");
            n = static_cast<std::size_t>(n_in);
            m = static_cast<std::size_t>(m_in);
            coords.reserve(n * m);
            have_header = true;
            continue;
        }
        if (points_read == m) fail(line_no, "more data lines than the declared point count");
        for (std::size_t c = 0; c < n; ++c) {
            double v = 0.0;
            if (!(tokens >> v)) {
                std::ostringstream what;
                what << "expected " << n << " coordinates, failed at token " << c + 1;
                fail(line_no, what.str());
            }
            coords.push_back(v);
        }
        std::string extra;
        if (tokens >> extra) fail(line_no, "unexpected token '" + extra + "' after " + std::to_string(n) + " coordinates");
        ++points_read;
    }
    if (!have_header) fail(line_no, "missing header 'n m'");
    if (points_read != m) {
        std::ostringstream what;
        what << "declared " << m << " points but found " << points_read;
        fail(line_no, what.str());
    }
    try {
        return SphericalConfiguration::from_flat(n, std::move(coords), normalize);
    } catch (const Error& e) {
        throw FormatError(std::string("point data invalid: ") + e.what());
    }
}

SphericalConfiguration read_pointset_file(const std::string& path, bool normalize) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open '" + path + "' for reading");
    return read_pointset(in, normalize);
}

void write_pointset(std::ostream& out, const SphericalConfiguration& x) {
    out << x.dimension() << " " << x.size() << "\n";
    char buf[64];
    for (std::size_t i = 0; i < x.size(); ++i) {
        auto p = x.point(i);
        for (std::size_t c = 0; c < p.size(); ++c) {
            std::snprintf(buf, sizeof(buf), "%.17g", p[c]);
            if (c) out << " ";
            out << buf;
        }
        out << "\n";
    }
}

void write_pointset_file(const std::string& path, const SphericalConfiguration& x) {
    std::ofstream out(path);
    if (!out) throw FormatError("cannot open '" + path + "' for writing");
    write_pointset(out, x);
}

}  // namespace mset
