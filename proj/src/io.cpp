#include "sftirr/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace sftirr {

Sft sft_from_json_text(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error("ParseError", e.what());
    }
    if (!doc.is_object() || !doc.contains("d") || !doc.contains("matrix"))
        throw Error("ParseError", "expected an object with \"d\" and \"matrix\"");
    if (!doc["d"].is_number_integer())
        throw Error("ParseError", "\"d\" must be an integer");
    long long d = doc["d"].get<long long>();
    if (d < 0) throw Error("ParseError", "\"d\" must be non-negative");
    if (!doc["matrix"].is_array())
        throw Error("ParseError", "\"matrix\" must be an array of rows");
    std::vector<std::vector<int>> matrix;
    for (const auto& row : doc["matrix"]) {
        if (!row.is_array())
            throw Error("ParseError", "matrix rows must be arrays");
        std::vector<int> r;
        for (const auto& v : row) {
            if (!v.is_number_integer())
                throw Error("ParseError", "matrix entries must be integers");
            r.push_back(v.get<int>());
        }
        matrix.push_back(std::move(r));
    }
    return build_sft(static_cast<std::size_t>(d), matrix);
}

Sft load_sft(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("ParseError", "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return sft_from_json_text(buf.str());
}

}  // namespace sftirr
