#include "qwalk/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <system_error>
#include <unistd.h>

#include "qwalk/error.hpp"

namespace qwalk::io {

std::string format_double(double v)
{
    if (v == 0.0) {
        return "0";  // also for -0.0
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_atomic(const std::filesystem::path& path, std::string_view content)
{
    namespace fs = std::filesystem;
    if (path.has_parent_path()) {
        std::error_code dir_ec;
        fs::create_directories(path.parent_path(), dir_ec);
        if (dir_ec) {
            throw ConfigError("cannot create output directory " + path.parent_path().string() +
                              ": " + dir_ec.message());
        }
    }
    fs::path tmp = path;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw ConfigError("cannot open " + tmp.string() + " for writing");
        }
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        out.flush();
        if (!out) {
            throw Error("write to " + tmp.string() + " failed");
        }
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) {
        fs::remove(tmp);
        throw Error("rename to " + path.string() + " failed: " + ec.message());
    }
}

CsvTable::CsvTable(std::vector<std::string> header) : columns_(header.size())
{
    add_row(header);
    rows_ = 0;
}

void CsvTable::add_row(const std::vector<double>& values)
{
    std::vector<std::string> cells;
    cells.reserve(values.size());
    for (double v : values) {
        cells.push_back(format_double(v));
    }
    add_row(cells);
}

void CsvTable::add_row(const std::vector<std::string>& cells)
{
    if (cells.size() != columns_) {
        throw Error("CSV row has " + std::to_string(cells.size()) + " cells, expected " +
                    std::to_string(columns_));
    }
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) {
            text_ += ',';
        }
        text_ += cells[i];
    }
    text_ += '\n';
    ++rows_;
}

std::string CsvTable::str() const
{
    return text_;
}

std::string distribution_csv(const Distribution& d)
{
    CsvTable t({"x", "prob"});
    for (std::size_t k = 0; k < d.probs.size(); ++k) {
        t.add_row(std::vector<std::string>{
            std::to_string(d.offset + static_cast<std::int64_t>(k)), format_double(d.probs[k])});
    }
    return t.str();
}

std::string state_csv(const WalkState& st)
{
    CsvTable t({"x", "re1", "im1", "re2", "im2"});
    for (std::size_t k = 0; k < st.amps.size(); ++k) {
        const Spinor& u = st.amps[k];
        t.add_row(std::vector<std::string>{
            std::to_string(st.offset + static_cast<std::int64_t>(k)), format_double(u[0].real()),
            format_double(u[0].imag()), format_double(u[1].real()), format_double(u[1].imag())});
    }
    return t.str();
}

std::string transfer_csv(const TransferQuadruple& tq)
{
    CsvTable t({"x", "p1", "p2", "q1", "q2"});
    for (std::int64_t x = -tq.n; x <= tq.n; ++x) {
        t.add_row(std::vector<std::string>{std::to_string(x), format_double(tq.p1.coeff(x)),
                                           format_double(tq.p2.coeff(x)),
                                           format_double(tq.q1.coeff(x)),
                                           format_double(tq.q2.coeff(x))});
    }
    return t.str();
}

nlohmann::json relation_json(const RelationReport& report)
{
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [name, r] : report.residuals) {
        j[name] = r;
    }
    return j;
}

Distribution parse_distribution_csv(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string line;
    if (!std::getline(in, line) || line != "x,prob") {
        throw ConfigError("distribution CSV must start with header x,prob");
    }
    Distribution d;
    bool first = true;
    std::int64_t expected = 0;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        const auto comma = line.find(',');
        if (comma == std::string::npos) {
            throw ConfigError("malformed distribution row: " + line);
        }
        std::int64_t x = 0;
        double p = 0.0;
        try {
            x = std::stoll(line.substr(0, comma));
            p = std::stod(line.substr(comma + 1));
        } catch (const std::exception&) {
            throw ConfigError("malformed distribution row: " + line);
        }
        if (first) {
            d.offset = x;
            expected = x;
            first = false;
        }
        if (x != expected) {
            throw ConfigError("distribution rows must cover consecutive sites");
        }
        d.probs.push_back(p);
        ++expected;
    }
    return d;
}

}  // namespace qwalk::io
