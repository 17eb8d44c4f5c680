#include "coxarr/cli/arrangement_file.h"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>

namespace coxarr::cli {

namespace {

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
        const std::size_t j = i;
        while (i < s.size() && s[i] != ' ' && s[i] != '\t' && s[i] != '\r') ++i;
        if (i > j) out.push_back(s.substr(j, i - j));
    }
    return out;
}

double parse_real(std::string_view tok, std::size_t line_no) {
    if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || !std::isfinite(v)) {
        throw ParseError("line " + std::to_string(line_no) + ": '" + std::string(tok) + "' is not a real number");
    }
    return v;
}

std::string shortest(double v) {
    if (v == 0.0) v = 0.0;  // print -0 as 0
    std::array<char, 64> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), ptr);
}

}  // namespace

Tolerance ArrangementFile::tolerance() const {
    const Tolerance def;
    return Tolerance(abs_eps.value_or(def.abs_eps()), angle_eps.value_or(def.angle_eps()));
}

ArrangementFile parse_arrangement_file(std::istream& in) {
    ArrangementFile f;
    bool have_dim = false;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view s = line;
        if (const auto hash = s.find('#'); hash != std::string_view::npos) s = s.substr(0, hash);
        const auto tok = split_ws(s);
        if (tok.empty()) continue;
        const std::string where = "line " + std::to_string(line_no) + ": ";

        if (!have_dim) {
            if (tok.size() != 2 || tok[0] != "dim") throw ParseError(where + "expected 'dim <d>' header");
            long d = 0;
            const auto [ptr, ec] = std::from_chars(tok[1].data(), tok[1].data() + tok[1].size(), d);
            if (ec != std::errc{} || ptr != tok[1].data() + tok[1].size())
                throw ParseError(where + "dimension '" + std::string(tok[1]) + "' is not an integer");
            if (d < 1) throw ParseError(where + "dimension must be at least 1");
            f.dim = static_cast<std::size_t>(d);
            have_dim = true;
            continue;
        }
        if (tok[0] == "eps" || tok[0] == "angle_eps") {
            if (tok.size() != 2) throw ParseError(where + "expected '" + std::string(tok[0]) + " <value>'");
            const double v = parse_real(tok[1], line_no);
            if (!(v > 0.0)) throw ParseError(where + "tolerance must be positive");
            (tok[0] == "eps" ? f.abs_eps : f.angle_eps) = v;
            continue;
        }
        if (tok.size() != f.dim) {
            throw ParseError(where + "expected " + std::to_string(f.dim) + " coordinates, got " +
                             std::to_string(tok.size()));
        }
        VecD v(f.dim);
        for (std::size_t i = 0; i < f.dim; ++i) v[i] = parse_real(tok[i], line_no);
        f.normals.push_back(std::move(v));
    }
    if (!have_dim) throw ParseError("missing 'dim <d>' header");
    return f;
}

ArrangementFile read_arrangement_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return parse_arrangement_file(in);
}

void write_arrangement_file(std::ostream& out, const ArrangementFile& f) {
    out << "dim " << f.dim << '\n';
    if (f.abs_eps) out << "eps " << shortest(*f.abs_eps) << '\n';
    if (f.angle_eps) out << "angle_eps " << shortest(*f.angle_eps) << '\n';
    for (const auto& v : f.normals) {
        for (std::size_t i = 0; i < v.dim(); ++i) out << (i ? " " : "") << shortest(v[i]);
        out << '\n';
    }
}

std::string format_arrangement_file(const ArrangementFile& f) {
    std::ostringstream os;
    write_arrangement_file(os, f);
    return os.str();
}

ArrangementFile to_file(const Arrangement& a) {
    ArrangementFile f;
    f.dim = a.dim();
    f.normals = a.normals();
    const Tolerance def;
    if (a.tol().abs_eps() != def.abs_eps()) f.abs_eps = a.tol().abs_eps();
    if (a.tol().angle_eps() != def.angle_eps()) f.angle_eps = a.tol().angle_eps();
    return f;
}

}  // namespace coxarr::cli
