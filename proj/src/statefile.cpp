#include "fano7/statefile.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "fano7/errors.hpp"

namespace fano7 {

namespace {

std::string fmt17(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

SevenQubitState parse_state(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw StateFileError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("lines"))
        throw StateFileError("expected a top-level object with a \"lines\" mapping");
    for (const auto& item : j.items())
        if (item.key() != "lines") throw StateFileError("unknown top-level key: " + item.key());

    const auto& lines = j["lines"];
    if (!lines.is_object()) throw StateFileError("\"lines\" must be an object");

    SevenQubitState psi;
    for (const auto& item : lines.items()) {
        const int idx = line_index_by_name(item.key());
        if (idx < 0) throw StateFileError("unknown line name: " + item.key());
        const auto& arr = item.value();
        if (!arr.is_array() || arr.size() != 8)
            throw StateFileError("line " + item.key() + " must list exactly 8 entries");
        for (int k = 0; k < 8; ++k) {
            const auto& pair = arr[static_cast<size_t>(k)];
            if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() ||
                !pair[1].is_number())
                throw StateFileError("line " + item.key() + " entry " + std::to_string(k) +
                                     " must be [re, im]");
            const double re = pair[0].get<double>();
            const double im = pair[1].get<double>();
            if (!std::isfinite(re) || !std::isfinite(im))
                throw StateFileError("non-finite amplitude in line " + item.key());
            psi[idx].a[static_cast<size_t>(k)] = Complex{re, im};
        }
    }
    return psi;
}

SevenQubitState load_state_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw StateFileError("cannot open state file: " + path);
    std::ostringstream buf;
    buf << f.rdbuf();
    return parse_state(buf.str());
}

std::string serialize_state(const SevenQubitState& psi) {
    std::string out = "{\"lines\": {";
    bool first_line = true;
    for (const Line& l : canonical_lines()) {
        const Hypermatrix& h = psi[l.index];
        if (h.is_zero()) continue;
        if (!first_line) out += ", ";
        first_line = false;
        out += "\"" + l.name() + "\": [";
        for (int k = 0; k < 8; ++k) {
            if (k) out += ", ";
            out += "[" + fmt17(h.a[static_cast<size_t>(k)].real()) + ", " +
                   fmt17(h.a[static_cast<size_t>(k)].imag()) + "]";
        }
        out += "]";
    }
    out += "}}\n";
    return out;
}

}  // namespace fano7
