#include "semiprimes/table_io.hpp"

#include <unistd.h>

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "semiprimes/errors.hpp"

namespace semiprimes {

std::string format_value(const BigReal& v, int sig) { return v.to_decimal(sig); }

std::string constants_csv(const ConstantsTable& table, int sig) {
    std::ostringstream out;
    out << "n,B_n,C_n\n";
    for (size_t n = 0; n < table.B.size(); ++n) {
        out << n << ',' << format_value(table.B[n], sig) << ',' << format_value(table.C[n], sig) << '\n';
    }
    return out.str();
}

std::string constants_json(const ConstantsTable& table, int sig) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (size_t n = 0; n < table.B.size(); ++n) {
        rows.push_back({{"n", n}, {"B_n", format_value(table.B[n], sig)}, {"C_n", format_value(table.C[n], sig)}});
    }
    return rows.dump(2) + "\n";
}

std::string error_table_csv(const std::vector<ErrorTableRow>& rows) {
    std::ostringstream out;
    out << "x,n,a_n,pi2,eps_n\n";
    for (const auto& r : rows) {
        out << r.x << ',' << r.n << ',' << r.a_n.to_string() << ',' << r.pi2_exact << ',' << r.eps_n.to_string()
            << '\n';
    }
    return out.str();
}

std::string error_table_json(const std::vector<ErrorTableRow>& rows) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
        arr.push_back({{"x", r.x},
                       {"n", r.n},
                       {"a_n", r.a_n.to_string()},
                       {"pi2", r.pi2_exact},
                       {"eps_n", r.eps_n.to_string()}});
    }
    return arr.dump(2) + "\n";
}

std::vector<ErrorTableRow> parse_error_table_csv(const std::string& text, int digits) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != "x,n,a_n,pi2,eps_n") {
        throw std::invalid_argument("parse_error_table_csv: missing or unexpected header");
    }
    std::vector<ErrorTableRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string f[5];
        for (int i = 0; i < 5; ++i) {
            if (!std::getline(ls, f[i], ',')) throw std::invalid_argument("parse_error_table_csv: short row");
        }
        ErrorTableRow r;
        r.x = std::stoull(f[0]);
        r.n = std::stoi(f[1]);
        r.a_n = BigReal::from_string(f[2], digits);
        r.pi2_exact = std::stoull(f[3]);
        r.eps_n = BigReal::from_string(f[4], digits);
        rows.push_back(std::move(r));
    }
    return rows;
}

void write_atomic(const std::string& path, const std::string& content) {
    std::string tmp = path + ".tmp.XXXXXX";
    // mkstemp mutates its template in place
    std::vector<char> buf(tmp.begin(), tmp.end());
    buf.push_back('\0');
    int fd = mkstemp(buf.data());
    if (fd < 0) throw ResourceError("write_atomic: cannot create temp file near " + path);
    std::string tmppath(buf.data());
    {
        FILE* fp = fdopen(fd, "wb");
        if (!fp) {
            close(fd);
            std::remove(tmppath.c_str());
            throw ResourceError("write_atomic: fdopen failed for " + tmppath);
        }
        size_t written = fwrite(content.data(), 1, content.size(), fp);
        int rc = fclose(fp);
        if (written != content.size() || rc != 0) {
            std::remove(tmppath.c_str());
            throw ResourceError("write_atomic: short write to " + tmppath);
        }
    }
    if (std::rename(tmppath.c_str(), path.c_str()) != 0) {
        std::remove(tmppath.c_str());
        throw ResourceError("write_atomic: rename to " + path + " failed: " + std::strerror(errno));
    }
}

}  // namespace semiprimes
