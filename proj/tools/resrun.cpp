// resrun: build finite fields, count runs of consecutive squares or
// non-squares, verify the closed-form counts against exhaustive enumeration,
// and run the character-sum identity batteries.

#include <cstdlib>
#include <ctime>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "resrun/resrun.hpp"

namespace {

using namespace resrun;

enum class Format { table, json, csv };

const std::map<std::string, Format> kFormatMap{
    {"table", Format::table}, {"json", Format::json}, {"csv", Format::csv}};

const std::map<std::string, CountMode> kModeMap{
    {"brute", CountMode::brute}, {"closed", CountMode::closed}, {"both", CountMode::both}};

const std::map<std::string, Battery> kBatteryMap{
    {"bew", Battery::bew},           {"jacobsthal", Battery::jacobsthal},
    {"quartic", Battery::quartic},   {"section3", Battery::section3},
    {"section5", Battery::section5}, {"all", Battery::all}};

std::string utc_timestamp() {
    const std::time_t now = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    return buf;
}

/// CLI flag > RESIDUE_RUNS_CAPACITY env var > built-in default.
u64 resolve_capacity(const CLI::Option* flag, u64 flag_value) {
    if (flag && flag->count() > 0) return flag_value;
    if (const char* env = std::getenv("RESIDUE_RUNS_CAPACITY")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<u64>(v);
        std::cerr << "warning: ignoring unparsable RESIDUE_RUNS_CAPACITY='" << env << "'\n";
    }
    return kDefaultCapacity;
}

std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

void emit_timestamp_prefix(Format format) {
    if (format == Format::table)
        std::cout << "timestamp: " << utc_timestamp() << "\n";
    else if (format == Format::csv)
        std::cout << "# timestamp: " << utc_timestamp() << "\n";
}

struct FieldInfoCmd {
    u64 p = 0;
    u32 d = 1;
    Format format = Format::table;
    bool timestamps = false;
    u64 capacity = kDefaultCapacity;

    int run() const {
        const FieldCtx ctx = make_field(p, d, capacity);
        const u64 q = ctx.q();
        if (timestamps) emit_timestamp_prefix(format);
        switch (format) {
        case Format::json: {
            ordered_json j = field_json(ctx);
            j["lambda"]["1"] = 1;
            j["lambda"]["-1"] = lambda_minus_one(q);
            j["lambda"]["2"] = lambda_two(q);
            j["lambda"]["-2"] = lambda_minus_two(q);
            if (timestamps) j["timestamp"] = utc_timestamp();
            std::cout << j.dump() << "\n";
            break;
        }
        case Format::csv: {
            std::cout << "p,d,q,modulus,lambda_1,lambda_-1,lambda_2,lambda_-2\n";
            std::string mod;
            for (std::size_t i = 0; i < ctx.modulus().coeffs.size(); ++i)
                mod += (i ? ";" : "") + std::to_string(ctx.modulus().coeffs[i]);
            std::cout << p << "," << d << "," << q << "," << mod << ",1," << lambda_minus_one(q)
                      << "," << lambda_two(q) << "," << lambda_minus_two(q) << "\n";
            break;
        }
        case Format::table: {
            std::cout << "p = " << p << ", d = " << d << ", q = " << q << "\n";
            std::cout << "modulus =";
            for (u64 c : ctx.modulus().coeffs) std::cout << " " << c;
            std::cout << " (ascending degree)\n";
            std::cout << "lambda(1) = 1, lambda(-1) = " << lambda_minus_one(q)
                      << ", lambda(2) = " << lambda_two(q)
                      << ", lambda(-2) = " << lambda_minus_two(q) << "\n";
            break;
        }
        }
        return 0;
    }
};

struct CountCmd {
    u64 p = 0;
    u32 d = 1;
    u32 len = 3;
    CountMode mode = CountMode::both;
    Format format = Format::table;
    bool timestamps = false;
    u64 capacity = kDefaultCapacity;

    int run() const {
        const RunCountReport rep = count_runs(p, d, len, mode, capacity);
        if (timestamps) emit_timestamp_prefix(format);
        switch (format) {
        case Format::json: {
            ordered_json j = report_json(rep);
            if (timestamps) j["timestamp"] = utc_timestamp();
            std::cout << j.dump() << "\n";
            break;
        }
        case Format::csv:
            std::cout << csv_header() << "\n" << report_csv_row(rep) << "\n";
            break;
        case Format::table:
            std::cout << "q = " << rep.q << " (p = " << p << ", d = " << d << "), run length "
                      << len << "\n";
            if (!rep.case_label.empty()) {
                std::cout << "case = " << rep.case_label;
                if (rep.s_used) std::cout << ", s = " << *rep.s_used;
                std::cout << "\n";
            }
            if (rep.brute_squares)
                std::cout << "brute:  squares = " << *rep.brute_squares
                          << ", nonsquares = " << *rep.brute_nonsquares << "\n";
            if (rep.closed_squares)
                std::cout << "closed: squares = " << *rep.closed_squares
                          << ", nonsquares = " << *rep.closed_nonsquares << "\n";
            if (rep.match) std::cout << "match = " << (*rep.match ? "true" : "false") << "\n";
            break;
        }
        return rep.match && !*rep.match ? 1 : 0;
    }
};

struct SweepCmd {
    u64 max_q = 1000;
    std::vector<u32> lengths{3};
    bool brute_only = false;
    u32 jobs = 0;
    Format format = Format::table;
    bool timestamps = false;
    u64 capacity = kDefaultCapacity;

    int run() const {
        SweepConfig config;
        config.max_q = max_q;
        config.lengths = lengths;
        config.include_closed = !brute_only;
        config.jobs = jobs;
        config.capacity = capacity;
        const SweepResult res = run_sweep(config);

        if (timestamps) emit_timestamp_prefix(format);
        switch (format) {
        case Format::json: {
            ordered_json j;
            j["rows"] = ordered_json::array();
            for (const SweepRow& row : res.rows) {
                if (!row.error.empty()) {
                    ordered_json e;
                    e["q"] = row.report.q;
                    e["len"] = row.report.len;
                    e["error"] = row.error;
                    j["rows"].push_back(e);
                } else {
                    j["rows"].push_back(report_json(row.report));
                }
            }
            j["summary"]["total"] = res.summary.total;
            j["summary"]["matches"] = res.summary.matches;
            j["summary"]["mismatches"] = res.summary.mismatches;
            j["summary"]["brute_only"] = res.summary.brute_only;
            j["summary"]["errors"] = res.summary.errors;
            j["summary"]["skipped"] = res.summary.skipped;
            if (timestamps) j["timestamp"] = utc_timestamp();
            std::cout << j.dump() << "\n";
            break;
        }
        case Format::csv:
            std::cout << csv_header() << "\n";
            for (const SweepRow& row : res.rows) {
                if (!row.error.empty()) {
                    std::cerr << "q=" << row.report.q << " len=" << row.report.len << ": "
                              << row.error << "\n";
                    continue;
                }
                std::cout << report_csv_row(row.report) << "\n";
            }
            std::cerr << "summary: total=" << res.summary.total
                      << " matches=" << res.summary.matches
                      << " mismatches=" << res.summary.mismatches
                      << " brute_only=" << res.summary.brute_only
                      << " errors=" << res.summary.errors << " skipped=" << res.summary.skipped
                      << "\n";
            break;
        case Format::table:
            for (const SweepRow& row : res.rows) {
                if (!row.error.empty()) {
                    std::cout << "q=" << row.report.q << " len=" << row.report.len << "  "
                              << row.error << "\n";
                    continue;
                }
                const RunCountReport& r = row.report;
                std::cout << "q=" << r.q << " p=" << r.p << " d=" << r.d << " len=" << r.len;
                if (!r.case_label.empty()) std::cout << " " << r.case_label;
                if (r.s_used) std::cout << " s=" << *r.s_used;
                if (r.brute_squares)
                    std::cout << " brute=" << *r.brute_squares << "/" << *r.brute_nonsquares;
                if (r.closed_squares)
                    std::cout << " closed=" << *r.closed_squares << "/" << *r.closed_nonsquares;
                if (r.match) std::cout << (*r.match ? " match" : " MISMATCH");
                std::cout << "\n";
            }
            std::cout << "summary: total=" << res.summary.total
                      << " matches=" << res.summary.matches
                      << " mismatches=" << res.summary.mismatches
                      << " brute_only=" << res.summary.brute_only
                      << " errors=" << res.summary.errors << " skipped=" << res.summary.skipped
                      << "\n";
            break;
        }
        return res.summary.mismatches > 0 ? 1 : 0;
    }
};

struct LemmaCheckCmd {
    u64 p = 0;
    u32 d = 1;
    Battery which = Battery::all;
    Format format = Format::table;
    bool timestamps = false;
    u64 capacity = kDefaultCapacity;

    int run() const {
        const FieldCtx ctx = make_field(p, d, capacity);
        const CharTable table = build_char_table(ctx);
        const std::vector<CheckLine> lines = run_lemma_battery(ctx, table, which);
        u64 failures = 0;
        for (const CheckLine& line : lines) failures += !line.pass;

        if (timestamps) emit_timestamp_prefix(format);
        switch (format) {
        case Format::json: {
            ordered_json j;
            j["q"] = ctx.q();
            j["which"] = battery_name(which);
            j["checks"] = ordered_json::array();
            for (const CheckLine& line : lines) {
                ordered_json c;
                c["name"] = line.name;
                c["pass"] = line.pass;
                c["detail"] = line.detail;
                j["checks"].push_back(c);
            }
            j["failures"] = failures;
            if (timestamps) j["timestamp"] = utc_timestamp();
            std::cout << j.dump() << "\n";
            break;
        }
        case Format::csv:
            std::cout << "name,pass,detail\n";
            for (const CheckLine& line : lines)
                std::cout << csv_quote(line.name) << "," << (line.pass ? "true" : "false") << ","
                          << csv_quote(line.detail) << "\n";
            break;
        case Format::table:
            std::cout << "q = " << ctx.q() << ", battery = " << battery_name(which) << "\n";
            for (const CheckLine& line : lines)
                std::cout << (line.pass ? "[ ok ] " : "[FAIL] ") << line.name << " -- "
                          << line.detail << "\n";
            std::cout << "checks = " << lines.size() << ", failures = " << failures << "\n";
            break;
        }
        return failures > 0 ? 1 : 0;
    }
};

struct DecomposeCmd {
    u64 p = 0;
    u32 d = 1;
    Format format = Format::table;
    bool timestamps = false;

    int run() const {
        const TwoSquares ts = decompose_q(p, d);
        if (timestamps) emit_timestamp_prefix(format);
        switch (format) {
        case Format::json: {
            ordered_json j = two_squares_json(ts);
            if (timestamps) j["timestamp"] = utc_timestamp();
            std::cout << j.dump() << "\n";
            break;
        }
        case Format::csv:
            std::cout << "q,p,d,s,t\n"
                      << ts.q << "," << ts.p << "," << ts.d << "," << ts.s << "," << ts.t << "\n";
            break;
        case Format::table:
            std::cout << "q = " << ts.q << " = (" << ts.s << ")^2 + " << ts.t << "^2"
                      << "  [s = " << ts.s << ", t = " << ts.t << "]\n";
            break;
        }
        return 0;
    }
};

struct JacobsthalCmd {
    u64 p = 0;
    u32 d = 1;
    i64 a = -1;
    u64 a_index = 0;
    bool use_index = false;
    Format format = Format::table;
    bool timestamps = false;
    u64 capacity = kDefaultCapacity;

    int run() const {
        const FieldCtx ctx = make_field(p, d, capacity);
        const CharTable table = build_char_table(ctx);
        const FieldElem arg = use_index ? ctx.elem_from_index(a_index) : ctx.embed(a);
        const u64 idx = ctx.index_of(arg);
        const i64 value = jacobsthal_direct(ctx, table, arg);
        const int lam = table.value(idx);

        std::optional<i64> closed;
        if (ctx.q() % 4 == 1 && lam == 1)
            closed = jacobsthal_closed(p, d, is_fourth_power(ctx, arg));
        else if (ctx.q() % 4 == 3)
            closed = 0;

        if (timestamps) emit_timestamp_prefix(format);
        switch (format) {
        case Format::json: {
            ordered_json j;
            j["q"] = ctx.q();
            j["a_index"] = idx;
            j["lambda_a"] = lam;
            j["value"] = value;
            if (closed) j["closed"] = *closed;
            if (timestamps) j["timestamp"] = utc_timestamp();
            std::cout << j.dump() << "\n";
            break;
        }
        case Format::csv:
            std::cout << "q,a_index,lambda_a,value,closed\n";
            std::cout << ctx.q() << "," << idx << "," << lam << "," << value << ",";
            if (closed) std::cout << *closed;
            std::cout << "\n";
            break;
        case Format::table:
            std::cout << "q = " << ctx.q() << ", a = element " << idx << " (lambda = " << lam
                      << ")\n";
            std::cout << "J(a) = " << value;
            if (closed) std::cout << " (closed form: " << *closed << ")";
            std::cout << "\n";
            break;
        }
        return closed && *closed != value ? 1 : 0;
    }
};

void add_format_options(CLI::App* cmd, Format& format, bool& timestamps) {
    cmd->add_option("--format", format, "output format")
        ->transform(CLI::CheckedTransformer(kFormatMap, CLI::ignore_case))
        ->default_str("table");
    cmd->add_flag("--timestamps", timestamps, "include a timestamp in the output");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-field runs of consecutive squares/non-squares: closed forms, "
                 "exhaustive verification, and character-sum batteries"};
    app.set_version_flag("--version", resrun::kVersion);
    app.require_subcommand(1);

    FieldInfoCmd field_info;
    CLI::App* fi = app.add_subcommand("field-info", "construct a field and show its parameters");
    fi->add_option("--p", field_info.p, "characteristic (odd prime)")->required();
    fi->add_option("--d", field_info.d, "extension degree");
    CLI::Option* fi_cap = fi->add_option("--capacity", field_info.capacity, "max q");
    add_format_options(fi, field_info.format, field_info.timestamps);

    CountCmd count;
    CLI::App* ct = app.add_subcommand("count", "count runs in one field");
    ct->add_option("--p", count.p, "characteristic (odd prime)")->required();
    ct->add_option("--d", count.d, "extension degree");
    ct->add_option("--len", count.len, "run length");
    ct->add_option("--mode", count.mode, "brute, closed or both")
        ->transform(CLI::CheckedTransformer(kModeMap, CLI::ignore_case))
        ->default_str("both");
    CLI::Option* ct_cap = ct->add_option("--capacity", count.capacity, "max q for tables");
    add_format_options(ct, count.format, count.timestamps);

    SweepCmd sweep;
    CLI::App* sw = app.add_subcommand("sweep", "verify closed forms against brute force over all "
                                               "odd prime powers up to a bound");
    sw->add_option("--max-q", sweep.max_q, "upper bound on q")->required();
    sw->add_option("--len", sweep.lengths, "run lengths (repeatable)");
    sw->add_flag("--brute-only", sweep.brute_only, "skip closed forms");
    sw->add_option("--jobs", sweep.jobs, "worker threads (default: cores)");
    CLI::Option* sw_cap = sw->add_option("--capacity", sweep.capacity, "max q for tables");
    add_format_options(sw, sweep.format, sweep.timestamps);

    LemmaCheckCmd lemma;
    CLI::App* lc = app.add_subcommand("lemma-check", "run character-sum identity batteries");
    lc->add_option("--p", lemma.p, "characteristic (odd prime)")->required();
    lc->add_option("--d", lemma.d, "extension degree");
    lc->add_option("--which", lemma.which, "battery")
        ->transform(CLI::CheckedTransformer(kBatteryMap, CLI::ignore_case))
        ->default_str("all");
    CLI::Option* lc_cap = lc->add_option("--capacity", lemma.capacity, "max q for tables");
    add_format_options(lc, lemma.format, lemma.timestamps);

    DecomposeCmd decompose;
    CLI::App* dc = app.add_subcommand("decompose", "two-squares parameter s for q = p^d");
    dc->add_option("--p", decompose.p, "characteristic (odd prime)")->required();
    dc->add_option("--d", decompose.d, "extension degree");
    add_format_options(dc, decompose.format, decompose.timestamps);

    JacobsthalCmd jacobsthal;
    CLI::App* jc = app.add_subcommand("jacobsthal", "direct Jacobsthal sum J(a)");
    jc->add_option("--p", jacobsthal.p, "characteristic (odd prime)")->required();
    jc->add_option("--d", jacobsthal.d, "extension degree");
    jc->add_option("--a", jacobsthal.a, "a as a prime-subfield integer (default -1)");
    CLI::Option* jc_idx =
        jc->add_option("--a-index", jacobsthal.a_index, "a as a canonical element index");
    CLI::Option* jc_cap = jc->add_option("--capacity", jacobsthal.capacity, "max q for tables");
    add_format_options(jc, jacobsthal.format, jacobsthal.timestamps);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2; // --help/--version exit 0; usage errors exit 2
    }

    try {
        if (*fi) {
            field_info.capacity = resolve_capacity(fi_cap, field_info.capacity);
            return field_info.run();
        }
        if (*ct) {
            count.capacity = resolve_capacity(ct_cap, count.capacity);
            return count.run();
        }
        if (*sw) {
            sweep.capacity = resolve_capacity(sw_cap, sweep.capacity);
            return sweep.run();
        }
        if (*lc) {
            lemma.capacity = resolve_capacity(lc_cap, lemma.capacity);
            return lemma.run();
        }
        if (*dc) return decompose.run();
        if (*jc) {
            jacobsthal.capacity = resolve_capacity(jc_cap, jacobsthal.capacity);
            jacobsthal.use_index = jc_idx->count() > 0;
            return jacobsthal.run();
        }
    } catch (const resrun::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
