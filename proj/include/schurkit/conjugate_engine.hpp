#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "schurkit/fixed_sequence.hpp"
#include "schurkit/partition.hpp"

namespace schurkit {

/// SCHUR's conjgte, statement for statement: B receives the conjugate of A.
///
/// Requires is_partition(A), B zero on [1, max) and equal sizes; throws
/// PreconditionViolated naming the failed clause. Every array access is
/// bounds-checked and throws IndexOutOfRange, which cannot happen when the
/// preconditions hold.
FixedPartitionSequence conjgte_run(const FixedPartitionSequence& a, FixedPartitionSequence b);

/// Stable annotation ids used in contract reports.
namespace annotation {
inline constexpr std::string_view requires_valid = "requires.valid";
inline constexpr std::string_view requires_is_partition = "requires.is_partition";
inline constexpr std::string_view requires_b_zero = "requires.b_zero";
inline constexpr std::string_view assigns_frame = "assigns.frame";
inline constexpr std::string_view ensures_is_conjugate = "ensures.is_conjugate";
inline constexpr std::string_view outer_variant = "outer.variant";
inline constexpr std::string_view outer_inv_range = "outer.inv.range";
inline constexpr std::string_view outer_inv_partial = "outer.inv.partial";
inline constexpr std::string_view inner_variant = "inner.variant";
inline constexpr std::string_view inner_inv_ghost = "inner.inv.ghost";
inline constexpr std::string_view inner_inv_flat = "inner.inv.flat";
inline constexpr std::string_view inner_inv_bound = "inner.inv.bound";
inline constexpr std::string_view assert_countifsup = "assert.countifsup";
inline constexpr std::string_view for_variant = "for.variant";
inline constexpr std::string_view for_inv_range = "for.inv.range";
inline constexpr std::string_view for_inv_partial = "for.inv.partial";
inline constexpr std::string_view for_assigns = "for.assigns";
inline constexpr std::string_view safety_index = "safety.index";
inline constexpr std::string_view safety_overflow = "safety.overflow";
}  // namespace annotation

/// Statements of conjgte, plus the entry and exit points where the
/// function contract is evaluated.
enum class ProgramPoint {
    entry,        // int i, partc = 1, edge = 0;
    outer_head,   // while (A[partc] != 0)
    edge_assign,  // edge = A[partc];
    ghost,        // ghost int old_partc = partc;
    inner_head,   // do
    inner_body,   //   partc = partc + 1;
    inner_test,   // while (A[partc] == edge);
    assert_point, // assert countIfSup(A, partc, edge, partc-1);
    for_init,     // i = A[partc] + 1
    for_head,     // i <= edge
    for_body,     // B[i] = partc - 1;
    for_step,     // i++
    exit,
    halted,
};

std::string_view to_string(ProgramPoint p);

struct Binding {
    std::string name;
    std::int64_t value = 0;

    friend bool operator==(const Binding&, const Binding&) = default;
};

struct Violation {
    std::string id;
    std::string point;
    std::vector<Binding> bindings;
    std::string message;
};

struct CheckTally {
    std::int64_t evaluated = 0;
    std::int64_t failed = 0;
};

/// Variant values recorded at the start of every loop iteration. The outer
/// loop runs once; inner and for hold one trace per loop entry.
struct VariantTraces {
    std::vector<std::int64_t> outer;
    std::vector<std::vector<std::int64_t>> inner;
    std::vector<std::vector<std::int64_t>> for_loop;
};

/// Snapshot taken before each executed statement.
struct StepEvent {
    ProgramPoint point = ProgramPoint::entry;
    std::int64_t partc = 0;
    std::int64_t edge = 0;
    std::optional<std::int64_t> i;
    std::optional<std::int64_t> old_partc;
};

struct ContractReport {
    std::vector<Violation> violations;
    VariantTraces variants;
    std::set<std::int64_t> writes;
    std::map<std::string, CheckTally, std::less<>> checks;
    std::vector<StepEvent> trace;
    /// False when execution was aborted by a safety violation.
    bool completed = false;

    bool passed() const noexcept { return violations.empty(); }
    bool violated(std::string_view id) const;
};

struct EngineOptions {
    bool check_precondition = true;
    CountSemantics semantics = CountSemantics::exact;
    bool record_trace = false;
};

/// Machine state of conjgte. `i` and `old_partc` are unset until first
/// assigned.
struct ConjugateState {
    FixedPartitionSequence a;
    FixedPartitionSequence b;
    std::int64_t partc = 1;
    std::int64_t edge = 0;
    std::optional<std::int64_t> i;
    std::optional<std::int64_t> old_partc;
};

/// Small-step interpreter over conjgte. Each annotation is evaluated at the
/// single program point it belongs to: loop invariants at every loop head,
/// variants at the start of every iteration, the assert between the
/// do-while and the for loop, the contract at entry and exit.
/// Violations are recorded, never thrown; a failed safety check halts.
class ConjugateInterpreter {
public:
    ConjugateInterpreter(FixedPartitionSequence a, FixedPartitionSequence b,
                         EngineOptions options = {});

    ProgramPoint point() const noexcept { return pc_; }
    const ConjugateState& state() const noexcept { return st_; }
    const ContractReport& report() const noexcept { return report_; }

    /// Executes one statement; returns false once halted.
    bool step();
    void run();

    ContractReport take_report() { return std::move(report_); }
    FixedPartitionSequence take_result() { return std::move(st_.b); }

private:
    void check(std::string_view id, bool ok, std::vector<Binding> bindings, std::string message);
    void violation(std::string_view id, std::vector<Binding> bindings, std::string message);
    void record_variant(std::string_view id, std::vector<std::int64_t>& trace, std::int64_t value);
    std::optional<std::int64_t> load_a(std::int64_t index);
    std::optional<std::int32_t> as_c_int(std::string_view what, std::int64_t v);
    bool count_holds(std::int64_t j, std::int64_t k, std::int64_t z);
    void check_partial_conjugacy(std::string_view id, std::int64_t lo, std::int64_t hi_inclusive);
    std::vector<Binding> loop_bindings() const;
    void halt_on_safety(std::string_view id, std::vector<Binding> bindings, std::string message);

    void do_entry();
    void do_outer_head();
    void do_inner_head();
    void do_inner_test();
    void do_assert();
    void do_for_init();
    void do_for_head();
    void do_for_body();
    void do_exit();

    EngineOptions opt_;
    ConjugateState st_;
    ContractReport report_;
    ProgramPoint pc_ = ProgramPoint::entry;
    std::int64_t frame_limit_ = 0;
    bool a_is_partition_ = false;
    std::vector<std::int64_t> full_counts_;
};

/// Runs the interpreter to completion; violations are reported, not thrown.
std::pair<FixedPartitionSequence, ContractReport> conjgte_instrumented(
    const FixedPartitionSequence& a, FixedPartitionSequence b, bool check_precondition = true);

std::pair<FixedPartitionSequence, ContractReport> conjgte_instrumented(
    const FixedPartitionSequence& a, FixedPartitionSequence b, const EngineOptions& options);

/// 1-based indices i >= 2 with lambda_i < lambda_{i-1}, ascending.
std::vector<std::int64_t> descents(const Partition& p);

}  // namespace schurkit
