#include "joinortho/json_io.hpp"

#include <string>
#include <vector>

namespace joinortho {

ordered_json tuple_to_json(const IntTuple& x) {
    ordered_json arr = ordered_json::array();
    for (int i = 0; i < x.size(); ++i) arr.push_back(x[i]);
    return arr;
}

IntTuple tuple_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw ParseError("expected an array of integers");
    std::vector<int> parts;
    for (const auto& e : j) {
        if (!e.is_number_integer()) throw ParseError("expected an array of integers");
        long long v = e.get<long long>();
        if (v < 0 || v > 1'000'000'000) throw ParseError("tuple entry out of range");
        parts.push_back(static_cast<int>(v));
    }
    return IntTuple(std::move(parts));
}

namespace {

ordered_json matrix_rows(const BinaryMatrix& M) {
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < M.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (int j = 0; j < M.cols(); ++j) row.push_back(M.get(i, j) ? 1 : 0);
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace

ordered_json matrix_to_json(const BinaryMatrix& M) {
    ordered_json j;
    j["rows"] = matrix_rows(M);
    j["row_sums"] = tuple_to_json(IntTuple(M.row_sums()));
    j["col_sums"] = tuple_to_json(IntTuple(M.col_sums()));
    return j;
}

BinaryMatrix matrix_from_rows_json(const nlohmann::json& rows) {
    if (!rows.is_array()) throw ParseError("expected an array of 0-1 rows");
    std::vector<std::vector<int>> data;
    for (const auto& row : rows) {
        if (!row.is_array()) throw ParseError("expected an array of 0-1 rows");
        std::vector<int> r;
        for (const auto& e : row) {
            if (!e.is_number_integer()) throw ParseError("matrix entries must be 0 or 1");
            long long v = e.get<long long>();
            if (v != 0 && v != 1) throw ParseError("matrix entries must be 0 or 1");
            r.push_back(static_cast<int>(v));
        }
        data.push_back(std::move(r));
    }
    if (data.empty()) throw ParseError("a matrix needs at least one row");
    for (const auto& r : data)
        if (r.size() != data.front().size()) throw ParseError("ragged matrix rows");
    return BinaryMatrix::from_rows(data);
}

ordered_json witness_to_json(const WitnessPair& wp) {
    ordered_json j;
    j["mode"] = wp.mode == WitnessMode::D ? "D" : "DTILDE";
    j["r"] = tuple_to_json(wp.shared_r);
    j["V"] = matrix_rows(wp.V);
    j["W"] = matrix_rows(wp.W);
    j["m"] = tuple_to_json(wp.m);
    j["n"] = tuple_to_json(wp.n);
    return j;
}

WitnessPair witness_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw ParseError("expected a witness object");
    for (const char* field : {"mode", "r", "V", "W", "m", "n"})
        if (!j.contains(field)) throw ParseError(std::string("witness lacks field ") + field);
    if (!j["mode"].is_string()) throw ParseError("witness mode must be a string");
    std::string mode = j["mode"].get<std::string>();
    if (mode != "D" && mode != "DTILDE") throw ParseError("witness mode must be D or DTILDE");

    WitnessPair wp;
    wp.mode = mode == "D" ? WitnessMode::D : WitnessMode::DTilde;
    wp.shared_r = tuple_from_json(j["r"]);
    wp.V = matrix_from_rows_json(j["V"]);
    wp.W = matrix_from_rows_json(j["W"]);
    wp.m = tuple_from_json(j["m"]);
    wp.n = tuple_from_json(j["n"]);
    return wp;
}

ordered_json report_to_json(const SuitabilityReport& rep) {
    ordered_json j;
    j["psi"] = rep.psi;
    j["weak"] = rep.weakly;
    j["strong"] = rep.strongly;
    j["delta"] = rep.delta ? tuple_to_json(*rep.delta) : ordered_json(nullptr);
    j["eps"] = rep.eps ? tuple_to_json(*rep.eps) : ordered_json(nullptr);
    j["swapped"] = rep.swapped;
    return j;
}

ordered_json verdict_to_json(const Verdict& v) {
    ordered_json j;
    j["m"] = tuple_to_json(v.m);
    j["n"] = tuple_to_json(v.n);
    j["ajo"] = to_string(v.ajo);
    j["rule"] = to_string(v.rule);
    j["sjo"] = v.sjo;
    j["witness"] = v.witness ? witness_to_json(*v.witness) : ordered_json(nullptr);
    j["report"] = report_to_json(v.report);
    return j;
}

} // namespace joinortho
