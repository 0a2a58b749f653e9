#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "qwalk/algebra_check.hpp"
#include "qwalk/cheb_engine.hpp"
#include "qwalk/direct_walk.hpp"

namespace qwalk::io {

/// 17 significant digits with a '.' separator, so doubles round-trip exactly.
std::string format_double(double v);

/// Writes content to path via a temporary sibling and rename().
void write_atomic(const std::filesystem::path& path, std::string_view content);

/// Minimal CSV builder: header once, then rows of already formatted cells.
class CsvTable {
public:
    explicit CsvTable(std::vector<std::string> header);

    void add_row(const std::vector<double>& values);
    void add_row(const std::vector<std::string>& cells);
    std::string str() const;
    std::size_t rows() const { return rows_; }

private:
    std::size_t columns_;
    std::size_t rows_ = 0;
    std::string text_;
};

/// `x,prob`
std::string distribution_csv(const Distribution& d);
/// `x,re1,im1,re2,im2`
std::string state_csv(const WalkState& st);
/// `x,p1,p2,q1,q2`
std::string transfer_csv(const TransferQuadruple& tq);
/// `{identity_name: residual}`
nlohmann::json relation_json(const RelationReport& report);

/// Parses a `x,prob` table back; throws ConfigError on malformed input.
Distribution parse_distribution_csv(std::string_view text);

}  // namespace qwalk::io
