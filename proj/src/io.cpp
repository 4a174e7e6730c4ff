#include "tweight/io.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

namespace tweight {

namespace {

using nlohmann::json;

int hex_digit(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

json parse_or_throw(const std::string& text, const char* what) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw std::runtime_error(std::string(what) + ": malformed JSON");
    return j;
}

}  // namespace

std::string field_to_json(const FieldContext& ctx) {
    json j;
    j["m"] = ctx.m();
    std::ostringstream os;
    os << "0x" << std::hex << ctx.modulus();
    j["modulus"] = os.str();
    return j.dump(2) + "\n";
}

FieldContext field_from_json(const std::string& text) {
    json j = parse_or_throw(text, "field file");
    if (!j.contains("m") || !j["m"].is_number_integer())
        throw std::runtime_error("field file: missing integer field \"m\"");
    if (!j.contains("modulus") || !j["modulus"].is_string())
        throw std::runtime_error("field file: missing string field \"modulus\"");
    const int m = j["m"].get<int>();
    const std::uint32_t modulus = std::stoul(j["modulus"].get<std::string>(), nullptr, 16);
    return FieldContext(m, modulus);
}

std::string row_to_hex(const BitRow& row) {
    const int n = row.size();
    const int digits = (n + 3) / 4;
    std::string out(digits, '0');
    for (int t = 0; t < digits; ++t) {
        int nibble = 0;
        for (int b = 0; b < 4; ++b) {
            const int j = 4 * t + b;
            if (j < n && row.get(j)) nibble |= 1 << b;
        }
        out[digits - 1 - t] = "0123456789abcdef"[nibble];  // most significant digit first
    }
    return out;
}

BitRow row_from_hex(const std::string& hex, int n) {
    const int digits = (n + 3) / 4;
    if (static_cast<int>(hex.size()) != digits)
        throw std::runtime_error("row \"" + hex + "\" has " + std::to_string(hex.size()) +
                                 " hex digits, expected " + std::to_string(digits));
    BitRow row(n);
    for (int t = 0; t < digits; ++t) {
        const int nibble = hex_digit(hex[digits - 1 - t]);
        if (nibble < 0) throw std::runtime_error("row contains a non-hex character");
        for (int b = 0; b < 4; ++b) {
            const int j = 4 * t + b;
            if (nibble & (1 << b)) {
                if (j >= n) throw std::runtime_error("row has bits beyond the code length");
                row.set(j, true);
            }
        }
    }
    return row;
}

std::string code_to_json(const LinearCode& code) {
    json j;
    j["n"] = code.length();
    j["k"] = code.dimension();
    json rows = json::array();
    for (const BitRow& r : code.rows()) rows.push_back(row_to_hex(r));
    j["rows"] = rows;
    if (code.provenance().empty()) {
        j["provenance"] = nullptr;
    } else {
        json prov = json::parse(code.provenance(), nullptr, false);
        j["provenance"] = prov.is_discarded() ? json(code.provenance()) : prov;
    }
    return j.dump(2) + "\n";
}

LinearCode code_from_json(const std::string& text) {
    json j = parse_or_throw(text, "code file");
    for (const char* key : {"n", "k", "rows"}) {
        if (!j.contains(key))
            throw std::runtime_error(std::string("code file: missing field \"") + key + "\"");
    }
    const int n = j["n"].get<int>();
    const int k = j["k"].get<int>();
    if (!j["rows"].is_array() || static_cast<int>(j["rows"].size()) != k)
        throw std::runtime_error("code file: \"rows\" must be an array of k row masks");
    std::vector<BitRow> rows;
    rows.reserve(k);
    for (const auto& r : j["rows"]) {
        if (!r.is_string()) throw std::runtime_error("code file: rows must be hex strings");
        rows.push_back(row_from_hex(r.get<std::string>(), n));
    }
    std::string provenance;
    if (j.contains("provenance") && !j["provenance"].is_null()) provenance = j["provenance"].dump();
    return LinearCode(n, std::move(rows), std::move(provenance));
}

std::string distribution_to_csv(const WeightDistribution& w) {
    std::ostringstream os;
    os << "weight,count\n";
    for (int i = 0; i <= w.n; ++i) os << i << "," << w.counts[i].str() << "\n";
    return os.str();
}

std::string design_to_json(const Design& d) {
    json j;
    j["v"] = d.v;
    j["r"] = d.r;
    j["t"] = d.t;
    if (d.lambda)
        j["lambda"] = *d.lambda;
    else
        j["lambda"] = nullptr;
    j["blocks"] = d.blocks;
    return j.dump() + "\n";  // blocks can be large; keep one line
}

Design design_from_json(const std::string& text) {
    json j = parse_or_throw(text, "design file");
    Design d;
    d.v = j.at("v").get<int>();
    d.r = j.at("r").get<int>();
    d.t = j.at("t").get<int>();
    if (j.contains("lambda") && !j["lambda"].is_null()) d.lambda = j["lambda"].get<long long>();
    d.blocks = j.at("blocks").get<std::vector<std::vector<int>>>();
    return d;
}

std::string design_verdict_to_json(const DesignVerdict& v) {
    json j;
    switch (v.status) {
        case DesignStatus::Confirmed: j["status"] = "confirmed"; break;
        case DesignStatus::Refuted: j["status"] = "refuted"; break;
        case DesignStatus::Degenerate: j["status"] = "degenerate"; break;
    }
    j["is_design"] = v.is_design;
    if (v.is_design) {
        j["lambda"] = v.lambda;
        j["identity_ok"] = v.identity_ok;
    }
    if (v.status == DesignStatus::Refuted && !v.witness.empty()) {
        j["witness"] = v.witness;
        j["witness_count"] = v.witness_count;
    }
    if (!v.note.empty()) j["note"] = v.note;
    return j.dump(2) + "\n";
}

std::string weil_csv_header() { return "m,u,e,a,b,direct,prediction,agrees\n"; }

std::string weil_csv_row(int m, int u, FieldElement a, FieldElement b, const WeilSumResult& r) {
    std::ostringstream os;
    const int e = std::gcd(m, u);
    os << m << "," << u << "," << e << "," << a << "," << b << "," << r.value << ",";
    switch (r.kind) {
        case PredictionKind::NotApplicable: os << "na"; break;
        case PredictionKind::Zero: os << 0; break;
        case PredictionKind::Exact: os << r.predicted; break;
        case PredictionKind::PlusMinus: os << "+-" << r.predicted; break;
    }
    os << "," << (r.agrees ? 1 : 0) << "\n";
    return os.str();
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << content;
    if (!out) throw std::runtime_error("write failed for " + path.string());
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

LinearCode load_code(const std::filesystem::path& path) {
    try {
        return code_from_json(read_file(path));
    } catch (const std::exception& e) {
        throw std::runtime_error(path.string() + ": " + e.what());
    }
}

}  // namespace tweight
