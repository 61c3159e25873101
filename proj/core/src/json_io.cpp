#include "tokenalg/json_io.hpp"

#include <json.hpp>

namespace tokenalg {

using nlohmann::json;

std::string matrix_to_json(const Matrix& m) {
    json entries = json::array();
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) entries.push_back(rat_to_string(m(r, c)));
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}}.dump();
}

Matrix matrix_from_json(const std::string& text) {
    json j = json::parse(text);
    int rows = j.at("rows").get<int>();
    int cols = j.at("cols").get<int>();
    const json& entries = j.at("entries");
    if (static_cast<int>(entries.size()) != rows * cols) throw InputError("matrix entry count mismatch");
    Matrix m(rows, cols);
    int idx = 0;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m(r, c) = rat_from_string(entries[idx++].get<std::string>());
    return m;
}

std::string poly_to_json(const Poly& p) {
    json coeffs = json::array();
    for (const Rat& c : p.coeffs()) coeffs.push_back(rat_to_string(c));
    return coeffs.dump();
}

Poly poly_from_json(const std::string& text) {
    json j = json::parse(text);
    std::vector<Rat> coeffs;
    for (const auto& c : j) coeffs.push_back(rat_from_string(c.get<std::string>()));
    return Poly(std::move(coeffs));
}

std::string spectrum_to_json(const Spectrum& s) {
    json entries = json::array();
    if (s.mode == Spectrum::Mode::exact) {
        for (auto& [value, mult] : s.rational) entries.push_back(json::array({rat_to_string(value), mult}));
        return json{{"mode", "exact"}, {"entries", entries}}.dump();
    }
    for (auto& [value, mult] : s.numeric) entries.push_back(json::array({value, mult}));
    return json{{"mode", "approximate"}, {"tolerance", s.tolerance}, {"entries", entries}}.dump();
}

Spectrum spectrum_from_json(const std::string& text) {
    json j = json::parse(text);
    Spectrum s;
    std::string mode = j.at("mode").get<std::string>();
    if (mode == "exact") {
        s.mode = Spectrum::Mode::exact;
        for (const auto& entry : j.at("entries"))
            s.rational.push_back({rat_from_string(entry.at(0).get<std::string>()), entry.at(1).get<int>()});
    } else if (mode == "approximate") {
        s.mode = Spectrum::Mode::approximate;
        s.tolerance = j.at("tolerance").get<double>();
        for (const auto& entry : j.at("entries")) s.numeric.push_back({entry.at(0).get<double>(), entry.at(1).get<int>()});
    } else {
        throw InputError("unknown spectrum mode: " + mode);
    }
    return s;
}

}  // namespace tokenalg
