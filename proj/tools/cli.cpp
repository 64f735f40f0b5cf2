#include "schurkit/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <istream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "schurkit/conjugate_engine.hpp"
#include "schurkit/errors.hpp"
#include "schurkit/json_io.hpp"
#include "schurkit/schur.hpp"
#include "schurkit/tableau.hpp"

namespace schurkit {
namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Request {
    bool json = false;
    std::int64_t max = default_max;
    std::vector<std::string> partitions;
    std::string outer;
    std::string inner;
    std::string source = "-";
    int nvars = 0;
    std::int64_t max_entry = 0;
    std::int64_t n_max = 30;
    std::vector<std::string> mutate_b;
    bool no_precondition = false;
    bool literal = false;
    bool trace = false;
    bool decompose = false;
};

template <typename Range>
std::string join(const Range& values, std::string_view sep = ",") {
    std::string out;
    bool first = true;
    for (const auto& v : values) {
        if (!first)
            out += sep;
        out += std::to_string(v);
        first = false;
    }
    return out;
}

Partition parse_argument(const std::string& text, std::string_view what) {
    try {
        return parse_partition(text);
    } catch (const Error& e) {
        throw UsageError(std::string(what) + ": " + e.what());
    }
}

/// Expands a lone `-` into one partition per input line.
std::vector<Partition> read_partitions(const std::vector<std::string>& raw, std::istream& in) {
    std::vector<Partition> out;
    for (const auto& arg : raw) {
        if (arg != "-") {
            out.push_back(parse_argument(arg, "argument PARTITION '" + arg + "'"));
            continue;
        }
        std::string line;
        for (int lineno = 1; std::getline(in, line); ++lineno)
            out.push_back(parse_argument(line, "standard input line " + std::to_string(lineno)));
    }
    return out;
}

FixedPartitionSequence fixed_argument(const Partition& p, std::int64_t max) {
    try {
        return to_fixed(p, max);
    } catch (const Error& e) {
        throw UsageError("--max " + std::to_string(max) + ": " + e.what());
    }
}

FixedPartitionSequence zero_sequence(std::int64_t max) {
    try {
        return FixedPartitionSequence(max);
    } catch (const Error& e) {
        throw UsageError("--max: " + std::string(e.what()));
    }
}

std::int64_t parse_int(std::string_view text, const std::string& flag) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty())
        throw UsageError(flag + ": '" + std::string(text) + "' is not an integer");
    return v;
}

void apply_mutation(FixedPartitionSequence& b, const std::string& assignment) {
    auto eq = assignment.find('=');
    if (eq == std::string::npos)
        throw UsageError("--mutate-b: expected k=v, got '" + assignment + "'");
    auto k = parse_int(std::string_view(assignment).substr(0, eq), "--mutate-b");
    auto v = parse_int(std::string_view(assignment).substr(eq + 1), "--mutate-b");
    try {
        b.set(k, v);
    } catch (const Error& e) {
        throw UsageError("--mutate-b " + assignment + ": " + e.what());
    }
}

/// B[1..] up to its last nonzero cell; polluted outputs need not be
/// partitions.
std::vector<std::int64_t> used_cells(const FixedPartitionSequence& s) {
    std::int64_t last = 0;
    for (std::int64_t i = 1; i < s.max(); ++i)
        if (s[i] != 0)
            last = i;
    std::vector<std::int64_t> out;
    for (std::int64_t i = 1; i <= last; ++i)
        out.push_back(s[i]);
    return out;
}

std::string nested(const std::vector<std::vector<std::int64_t>>& traces) {
    std::string out;
    for (std::size_t i = 0; i < traces.size(); ++i) {
        if (i > 0)
            out += " | ";
        out += join(traces[i]);
    }
    return out;
}

void print_report(std::ostream& out, const Partition& input, const FixedPartitionSequence& b,
                  const ContractReport& r) {
    out << "input: " << to_string(input) << "\n";
    out << "result: " << join(used_cells(b)) << "\n";
    out << "passed: " << (r.passed() ? "yes" : "no") << "\n";
    out << "completed: " << (r.completed ? "yes" : "no") << "\n";
    out << "writes: " << join(r.writes) << "\n";
    out << "variants.outer: " << join(r.variants.outer) << "\n";
    out << "variants.inner: " << nested(r.variants.inner) << "\n";
    out << "variants.for: " << nested(r.variants.for_loop) << "\n";
    for (const auto& v : r.violations) {
        out << "violation: " << v.id << " at " << v.point << " [";
        for (std::size_t i = 0; i < v.bindings.size(); ++i)
            out << (i ? ", " : "") << v.bindings[i].name << "=" << v.bindings[i].value;
        out << "] " << v.message << "\n";
    }
    for (const auto& e : r.trace) {
        out << "trace: " << to_string(e.point) << " partc=" << e.partc << " edge=" << e.edge;
        if (e.i)
            out << " i=" << *e.i;
        if (e.old_partc)
            out << " old_partc=" << *e.old_partc;
        out << "\n";
    }
}

int cmd_conjugate(const Request& q, std::istream& in, std::ostream& out) {
    auto zeros = zero_sequence(q.max);
    for (const auto& p : read_partitions(q.partitions, in)) {
        auto result = from_fixed(conjgte_run(fixed_argument(p, q.max), zeros));
        if (q.json)
            out << to_json(result).dump() << "\n";
        else
            out << to_string(result) << "\n";
    }
    return exit_ok;
}

int cmd_verify(const Request& q, std::istream& in, std::ostream& out) {
    auto b0 = zero_sequence(q.max);
    for (const auto& m : q.mutate_b)
        apply_mutation(b0, m);
    EngineOptions opt;
    opt.check_precondition = !q.no_precondition;
    opt.semantics = q.literal ? CountSemantics::literal : CountSemantics::exact;
    opt.record_trace = q.trace;

    int status = exit_ok;
    bool first = true;
    for (const auto& p : read_partitions(q.partitions, in)) {
        auto [b, report] = conjgte_instrumented(fixed_argument(p, q.max), b0, opt);
        if (!report.passed())
            status = exit_failure;
        if (q.json) {
            auto j = to_json(report);
            j["input"] = to_json(p);
            j["result"] = used_cells(b);
            out << j.dump() << "\n";
        } else {
            if (!first)
                out << "\n";
            print_report(out, p, b, report);
        }
        first = false;
    }
    return status;
}

int cmd_oracle_compare(const Request& q, std::ostream& out) {
    if (q.n_max < 0)
        throw UsageError("--n-max: must be non-negative");
    auto zeros = zero_sequence(q.max);
    std::int64_t checked = 0;
    std::int64_t skipped = 0;
    std::vector<Partition> mismatches;
    for (std::int64_t n = 0; n <= q.n_max; ++n)
        for (const auto& p : partitions_of(n)) {
            if (static_cast<std::int64_t>(p.length()) >= q.max - 1 || p.first() >= q.max - 1) {
                ++skipped;
                continue;
            }
            ++checked;
            if (from_fixed(conjgte_run(to_fixed(p, q.max), zeros)) != conjugate_oracle(p))
                mismatches.push_back(p);
        }
    if (q.json) {
        json j;
        j["n_max"] = q.n_max;
        j["max"] = q.max;
        j["checked"] = checked;
        j["skipped"] = skipped;
        j["mismatches"] = json::array();
        for (const auto& p : mismatches)
            j["mismatches"].push_back(to_json(p));
        out << j.dump() << "\n";
    } else {
        out << "checked " << checked << " partitions with n <= " << q.n_max << ": "
            << mismatches.size() << " mismatches\n";
        if (skipped > 0)
            out << "skipped " << skipped << " partitions that do not fit --max " << q.max << "\n";
        for (const auto& p : mismatches)
            out << "mismatch: " << to_string(p) << "\n";
    }
    return mismatches.empty() ? exit_ok : exit_failure;
}

int cmd_ssyt(const Request& q, std::istream& in, std::ostream& out) {
    if (q.max_entry < 0)
        throw UsageError("--max-entry: must be non-negative");
    for (const auto& shape : read_partitions(q.partitions, in)) {
        if (q.json) {
            json all = json::array();
            for (const auto& t : enumerate_ssyt(shape, q.max_entry))
                all.push_back(to_json(t));
            out << all.dump() << "\n";
            continue;
        }
        bool first = true;
        for (const auto& t : enumerate_ssyt(shape, q.max_entry)) {
            if (!first)
                out << "\n";
            out << to_string(t);
            first = false;
        }
    }
    return exit_ok;
}

void check_nvars(int nvars) {
    if (nvars < 1)
        throw UsageError("--nvars: must be at least 1");
}

int cmd_schur(const Request& q, std::istream& in, std::ostream& out) {
    check_nvars(q.nvars);
    for (const auto& shape : read_partitions(q.partitions, in)) {
        auto s = schur_polynomial(shape, q.nvars);
        out << (q.json ? to_json(s).dump() + "\n" : to_string(s));
    }
    return exit_ok;
}

int cmd_plethysm(const Request& q, std::ostream& out) {
    check_nvars(q.nvars);
    auto outer = parse_argument(q.outer, "argument OUTER '" + q.outer + "'");
    auto inner = parse_argument(q.inner, "argument INNER '" + q.inner + "'");
    auto p = plethysm(outer, inner, q.nvars);
    if (q.decompose) {
        auto e = schur_decompose(p);
        out << (q.json ? to_json(e).dump() + "\n" : to_string(e));
    } else {
        out << (q.json ? to_json(p).dump() + "\n" : to_string(p));
    }
    return exit_ok;
}

std::string slurp(std::istream& s) {
    return {std::istreambuf_iterator<char>(s), std::istreambuf_iterator<char>()};
}

int cmd_decompose(const Request& q, std::istream& in, std::ostream& out) {
    std::string text;
    if (q.source == "-") {
        text = slurp(in);
    } else {
        std::ifstream file(q.source);
        if (!file)
            throw UsageError("argument SOURCE: cannot open '" + q.source + "'");
        text = slurp(file);
    }
    MonomialPolynomial p(1);
    try {
        auto start = text.find_first_not_of(" \t\r\n");
        if (start != std::string::npos && text[start] == '{') {
            p = polynomial_from_json(json::parse(text));
            if (q.nvars > 0 && p.nvars() != q.nvars)
                throw ArityMismatch("polynomial has " + std::to_string(p.nvars()) + " variables");
        } else {
            p = parse_polynomial(text, q.nvars);
        }
    } catch (const json::exception& e) {
        throw UsageError("argument SOURCE: " + std::string(e.what()));
    } catch (const Error& e) {
        throw UsageError("argument SOURCE: " + std::string(e.what()));
    }
    auto e = schur_decompose(p);
    out << (q.json ? to_json(e).dump() + "\n" : to_string(e));
    return exit_ok;
}

int cmd_descents(const Request& q, std::istream& in, std::ostream& out) {
    for (const auto& p : read_partitions(q.partitions, in)) {
        auto d = descents(p);
        out << (q.json ? json(d).dump() : join(d)) << "\n";
    }
    return exit_ok;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
    Request q;
    CLI::App app{"Partition conjugation with executable contracts, and Schur function tools",
                 "schurkit"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--json", q.json, "Emit JSON instead of text");

    auto* conjugate = app.add_subcommand("conjugate", "Conjugate partitions with conjgte");
    conjugate->add_option("partitions", q.partitions, "Partitions, or - for stdin")->required();
    conjugate->add_option("--max", q.max, "Fixed sequence size")->capture_default_str();

    auto* verify = app.add_subcommand("verify", "Run conjgte with every annotation checked");
    verify->add_option("partitions", q.partitions, "Partitions, or - for stdin")->required();
    verify->add_option("--max", q.max, "Fixed sequence size")->capture_default_str();
    verify->add_option("--mutate-b", q.mutate_b, "Pre-set B[k]=v before the call (repeatable)");
    verify->add_flag("--no-precondition", q.no_precondition, "Run even if the requires clauses fail");
    verify->add_flag("--literal-countifsup", q.literal, "Use the weak, literal countIfSup reading");
    verify->add_flag("--trace", q.trace, "Print every executed statement");

    auto* compare = app.add_subcommand("oracle-compare", "Compare conjgte against the column-count oracle");
    compare->add_option("--n-max", q.n_max, "Largest n to enumerate")->capture_default_str();
    compare->add_option("--max", q.max, "Fixed sequence size")->capture_default_str();

    auto* ssyt = app.add_subcommand("ssyt", "Enumerate semi-standard tableaux");
    ssyt->add_option("partitions", q.partitions, "Shapes, or - for stdin")->required();
    ssyt->add_option("--max-entry", q.max_entry, "Largest entry")->required();

    auto* schur = app.add_subcommand("schur", "Expand a Schur polynomial in monomials");
    schur->add_option("partitions", q.partitions, "Shapes, or - for stdin")->required();
    schur->add_option("--nvars", q.nvars, "Number of variables")->required();

    auto* pleth = app.add_subcommand("plethysm", "Compute s_outer[s_inner]");
    pleth->add_option("outer", q.outer, "Outer shape")->required();
    pleth->add_option("inner", q.inner, "Inner shape")->required();
    pleth->add_option("--nvars", q.nvars, "Number of variables")->required();
    pleth->add_flag("--decompose", q.decompose, "Print the Schur expansion instead");

    auto* decompose = app.add_subcommand("decompose", "Write a symmetric polynomial in the Schur basis");
    decompose->add_option("source", q.source, "Polynomial text or JSON file, or - for stdin");
    decompose->add_option("--nvars", q.nvars, "Number of variables (inferred if omitted)");

    auto* desc = app.add_subcommand("descents", "Descent positions of partitions");
    desc->add_option("partitions", q.partitions, "Partitions, or - for stdin")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        auto chosen = app.get_subcommands();
        out << (chosen.empty() ? app.help() : chosen.front()->help());
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }

    try {
        if (conjugate->parsed())
            return cmd_conjugate(q, in, out);
        if (verify->parsed())
            return cmd_verify(q, in, out);
        if (compare->parsed())
            return cmd_oracle_compare(q, out);
        if (ssyt->parsed())
            return cmd_ssyt(q, in, out);
        if (schur->parsed())
            return cmd_schur(q, in, out);
        if (pleth->parsed())
            return cmd_plethysm(q, out);
        if (decompose->parsed())
            return cmd_decompose(q, in, out);
        if (desc->parsed())
            return cmd_descents(q, in, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_failure;
    }
    err << "error: no subcommand\n";
    return exit_usage;
}

}  // namespace schurkit
