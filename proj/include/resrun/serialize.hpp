#pragma once

#include <istream>
#include <ostream>
#include <string>

#include <json.hpp>

#include "resrun/run_counts.hpp"
#include "resrun/sweep.hpp"

namespace resrun {

using ordered_json = nlohmann::ordered_json;

/// {"p", "d", "q", "modulus"} with ascending-degree coefficients including
/// the leading 1. Elements elsewhere serialize as their canonical index.
inline ordered_json field_json(const FieldCtx& ctx) {
    ordered_json j;
    j["p"] = ctx.p();
    j["d"] = ctx.d();
    j["q"] = ctx.q();
    j["modulus"] = ctx.modulus().coeffs;
    return j;
}

inline ordered_json two_squares_json(const TwoSquares& ts) {
    ordered_json j;
    j["q"] = ts.q;
    j["p"] = ts.p;
    j["d"] = ts.d;
    j["s"] = ts.s;
    j["t"] = ts.t;
    return j;
}

inline ordered_json report_json(const RunCountReport& rep) {
    ordered_json j;
    j["q"] = rep.q;
    j["p"] = rep.p;
    j["d"] = rep.d;
    j["len"] = rep.len;
    if (!rep.case_label.empty()) j["case"] = rep.case_label;
    if (rep.s_used) j["s"] = *rep.s_used;
    if (rep.brute_squares) {
        j["brute"]["squares"] = *rep.brute_squares;
        j["brute"]["nonsquares"] = *rep.brute_nonsquares;
    }
    if (rep.closed_squares) {
        j["closed"]["squares"] = *rep.closed_squares;
        j["closed"]["nonsquares"] = *rep.closed_nonsquares;
    }
    if (rep.match) j["match"] = *rep.match;
    return j;
}

inline std::string csv_header() {
    return "q,p,d,len,case,s,brute_sq,brute_nsq,closed_sq,closed_nsq,match";
}

inline std::string report_csv_row(const RunCountReport& rep) {
    auto opt_u = [](const std::optional<u64>& v) { return v ? std::to_string(*v) : std::string(); };
    std::string row = std::to_string(rep.q) + "," + std::to_string(rep.p) + "," +
                      std::to_string(rep.d) + "," + std::to_string(rep.len) + "," +
                      rep.case_label + ",";
    row += rep.s_used ? std::to_string(*rep.s_used) : std::string();
    row += "," + opt_u(rep.brute_squares) + "," + opt_u(rep.brute_nonsquares);
    row += "," + opt_u(rep.closed_squares) + "," + opt_u(rep.closed_nonsquares) + ",";
    if (rep.match) row += *rep.match ? "true" : "false";
    return row;
}

/// Cache format: one line of JSON header {"p","d","q","modulus"}, newline,
/// then q signed bytes with the character value of each element in index
/// order.
inline void save_char_table(const CharTable& table, std::ostream& out) {
    out << field_json(table.field()).dump() << '\n';
    const u64 q = table.q();
    for (u64 i = 0; i < q; ++i) {
        const char b = static_cast<char>(table.value(i));
        out.write(&b, 1);
    }
}

inline CharTable load_char_table(std::istream& in, u64 capacity = kDefaultCapacity) {
    std::string header;
    if (!std::getline(in, header)) raise(Errc::internal_error, "missing cache header");
    const auto j = ordered_json::parse(header);
    const u64 p = j.at("p").get<u64>();
    const u32 d = j.at("d").get<u32>();
    ModulusPoly modulus{j.at("modulus").get<std::vector<u64>>()};
    FieldCtx ctx = make_field_with_modulus(p, std::move(modulus), capacity);
    if (ctx.q() != j.at("q").get<u64>()) raise(Errc::internal_error, "cache header q mismatch");

    const u64 q = ctx.q();
    std::vector<u64> bits((q + 63) / 64, 0);
    u64 squares = 0;
    for (u64 i = 0; i < q; ++i) {
        char b = 0;
        if (!in.read(&b, 1)) raise(Errc::internal_error, "cache truncated");
        const int v = static_cast<signed char>(b);
        if (i == 0 ? v != 0 : (v != 1 && v != -1))
            raise(Errc::internal_error, "cache value out of range");
        if (v == 1) {
            bits[i >> 6] |= u64{1} << (i & 63);
            ++squares;
        }
    }
    if (squares != (q - 1) / 2) raise(Errc::internal_error, "cache square count mismatch");
    return CharTable(std::move(ctx), std::move(bits));
}

} // namespace resrun
