#include "schurkit/conjugate_engine.hpp"

#include <algorithm>
#include <limits>

#include "schurkit/checked_int.hpp"
#include "schurkit/errors.hpp"

namespace schurkit {

FixedPartitionSequence conjgte_run(const FixedPartitionSequence& a, FixedPartitionSequence b) {
    if (a.max() != b.max())
        throw PreconditionViolated(std::string(annotation::requires_valid),
                                   "A and B must have the same size");
    if (!is_partition_pred(a))
        throw PreconditionViolated(std::string(annotation::requires_is_partition),
                                   "A does not satisfy is_partition");
    for (std::int64_t k = 1; k < b.max(); ++k)
        if (b[k] != 0)
            throw PreconditionViolated(std::string(annotation::requires_b_zero),
                                       "B[" + std::to_string(k) + "] = " + std::to_string(b[k]) +
                                           " but B must be zero on [1, MAX)");

    std::int64_t i, partc = 1, edge = 0;

    while (a.at(partc) != 0) {
        edge = a.at(partc);
        do
            partc = partc + 1;
        while (a.at(partc) == edge);
        for (i = a.at(partc) + 1; i <= edge; i++)
            b.set(i, partc - 1);
    }
    return b;
}

std::string_view to_string(ProgramPoint p) {
    switch (p) {
    case ProgramPoint::entry: return "entry";
    case ProgramPoint::outer_head: return "outer.head";
    case ProgramPoint::edge_assign: return "outer.edge";
    case ProgramPoint::ghost: return "outer.ghost";
    case ProgramPoint::inner_head: return "inner.head";
    case ProgramPoint::inner_body: return "inner.body";
    case ProgramPoint::inner_test: return "inner.test";
    case ProgramPoint::assert_point: return "assert";
    case ProgramPoint::for_init: return "for.init";
    case ProgramPoint::for_head: return "for.head";
    case ProgramPoint::for_body: return "for.body";
    case ProgramPoint::for_step: return "for.step";
    case ProgramPoint::exit: return "exit";
    case ProgramPoint::halted: return "halted";
    }
    return "?";
}

bool ContractReport::violated(std::string_view id) const {
    return std::any_of(violations.begin(), violations.end(),
                       [&](const Violation& v) { return v.id == id; });
}

ConjugateInterpreter::ConjugateInterpreter(FixedPartitionSequence a, FixedPartitionSequence b,
                                           EngineOptions options)
    : opt_(options), st_{std::move(a), std::move(b), 1, 0, std::nullopt, std::nullopt} {}

void ConjugateInterpreter::violation(std::string_view id, std::vector<Binding> bindings,
                                     std::string message) {
    report_.violations.push_back(
        {std::string(id), std::string(to_string(pc_)), std::move(bindings), std::move(message)});
}

void ConjugateInterpreter::check(std::string_view id, bool ok, std::vector<Binding> bindings,
                                 std::string message) {
    auto& tally = report_.checks[std::string(id)];
    ++tally.evaluated;
    if (ok)
        return;
    ++tally.failed;
    violation(id, std::move(bindings), std::move(message));
}

void ConjugateInterpreter::halt_on_safety(std::string_view id, std::vector<Binding> bindings,
                                          std::string message) {
    auto& tally = report_.checks[std::string(id)];
    ++tally.evaluated;
    ++tally.failed;
    violation(id, std::move(bindings), std::move(message));
    pc_ = ProgramPoint::halted;
}

void ConjugateInterpreter::record_variant(std::string_view id, std::vector<std::int64_t>& trace,
                                          std::int64_t value) {
    auto bindings = loop_bindings();
    bindings.push_back({"variant", value});
    if (!trace.empty())
        bindings.push_back({"previous", trace.back()});
    check(id, value >= 0, bindings, "variant is negative");
    if (!trace.empty())
        check(id, value < trace.back(), bindings, "variant does not decrease");
    trace.push_back(value);
}

std::vector<Binding> ConjugateInterpreter::loop_bindings() const {
    std::vector<Binding> out{{"partc", st_.partc}, {"edge", st_.edge}};
    if (st_.old_partc)
        out.push_back({"old_partc", *st_.old_partc});
    if (st_.i)
        out.push_back({"i", *st_.i});
    return out;
}

std::optional<std::int32_t> ConjugateInterpreter::as_c_int(std::string_view what, std::int64_t v) {
    if (v < std::numeric_limits<std::int32_t>::min() || v > std::numeric_limits<std::int32_t>::max()) {
        auto bindings = loop_bindings();
        bindings.push_back({"value", v});
        halt_on_safety(annotation::safety_overflow, std::move(bindings),
                       std::string(what) + " is not representable as int");
        return std::nullopt;
    }
    return static_cast<std::int32_t>(v);
}

std::optional<std::int64_t> ConjugateInterpreter::load_a(std::int64_t index) {
    if (index < 1 || index >= st_.a.max()) {
        auto bindings = loop_bindings();
        bindings.push_back({"index", index});
        halt_on_safety(annotation::safety_index, std::move(bindings),
                       "read A[" + std::to_string(index) + "] outside [1, MAX)");
        return std::nullopt;
    }
    auto v = as_c_int("A[" + std::to_string(index) + "]", st_.a[index]);
    if (!v)
        return std::nullopt;
    return *v;
}

bool ConjugateInterpreter::count_holds(std::int64_t j, std::int64_t k, std::int64_t z) {
    if (opt_.semantics == CountSemantics::literal)
        return count_if_sup_literal(st_.a, {j, k, z});
    const std::int64_t max = st_.a.max();
    if (!a_is_partition_ || j < 1 || j > max || k < 1 || k >= max)
        return false;
    // A is read-only, so counts over the whole array are memoised per k.
    if (j == max) {
        auto& slot = full_counts_[static_cast<std::size_t>(k)];
        if (slot < 0) {
            slot = 0;
            for (std::int64_t idx = 1; idx < max; ++idx)
                if (st_.a[idx] >= k)
                    ++slot;
        }
        return slot == z;
    }
    std::int64_t count = 0;
    for (std::int64_t idx = 1; idx < j; ++idx)
        if (st_.a[idx] >= k)
            ++count;
    return count == z;
}

void ConjugateInterpreter::check_partial_conjugacy(std::string_view id, std::int64_t lo,
                                                   std::int64_t hi_inclusive) {
    const std::int64_t max = st_.a.max();
    for (std::int64_t k = lo; k <= hi_inclusive; ++k) {
        bool readable = k >= 1 && k < st_.b.max();
        std::int64_t bk = readable ? st_.b[k] : 0;
        if (!readable || !count_holds(max, k, bk)) {
            auto bindings = loop_bindings();
            bindings.push_back({"k", k});
            if (readable)
                bindings.push_back({"B[k]", bk});
            check(id, false, std::move(bindings),
                  readable ? "countIfSup(A, MAX, k, B[k]) does not hold"
                           : "B[k] is outside the valid range of B");
            return;
        }
    }
    check(id, true, {}, {});
}

void ConjugateInterpreter::do_entry() {
    const std::int64_t max = st_.a.max();
    a_is_partition_ = is_partition_pred(st_.a);
    full_counts_.assign(static_cast<std::size_t>(max), -1);
    frame_limit_ = st_.a[1];

    if (opt_.check_precondition) {
        check(annotation::requires_valid, st_.a.max() == st_.b.max(),
              {{"max_a", st_.a.max()}, {"max_b", st_.b.max()}},
              "A and B must both be valid on [1, MAX)");
        check(annotation::requires_is_partition, a_is_partition_, {},
              "A does not satisfy is_partition");
        std::int64_t bad = 0;
        for (std::int64_t k = 1; k < st_.b.max() && !bad; ++k)
            if (st_.b[k] != 0)
                bad = k;
        if (bad)
            check(annotation::requires_b_zero, false, {{"k", bad}, {"B[k]", st_.b[bad]}},
                  "B must be zero on [1, MAX)");
        else
            check(annotation::requires_b_zero, true, {}, {});
    }
    st_.partc = 1;
    st_.edge = 0;
    pc_ = ProgramPoint::outer_head;
}

void ConjugateInterpreter::do_outer_head() {
    const std::int64_t max = st_.a.max();
    check(annotation::outer_inv_range, 1 <= st_.partc && st_.partc < max, loop_bindings(),
          "1 <= partc < MAX does not hold");
    auto a_partc = load_a(st_.partc);
    if (!a_partc)
        return;
    check_partial_conjugacy(annotation::outer_inv_partial, *a_partc + 1, st_.a[1]);
    if (*a_partc != 0) {
        record_variant(annotation::outer_variant, report_.variants.outer, max - st_.partc);
        pc_ = ProgramPoint::edge_assign;
    } else {
        pc_ = ProgramPoint::exit;
    }
}

void ConjugateInterpreter::do_inner_head() {
    const std::int64_t max = st_.a.max();
    const std::int64_t old = *st_.old_partc;
    check(annotation::inner_inv_ghost, old <= st_.partc, loop_bindings(),
          "old_partc <= partc does not hold");

    bool flat = true;
    std::int64_t where = 0;
    for (std::int64_t k = old; k <= st_.partc && flat; ++k) {
        auto v = load_a(k);
        if (!v)
            return;
        if (*v != st_.edge) {
            flat = false;
            where = k;
        }
    }
    auto bindings = loop_bindings();
    if (!flat)
        bindings.push_back({"k", where});
    check(annotation::inner_inv_flat, flat, std::move(bindings),
          "A[k] == edge does not hold on [old_partc, partc]");

    check(annotation::inner_inv_bound, st_.partc < max - 1, loop_bindings(),
          "partc < MAX-1 does not hold");
    record_variant(annotation::inner_variant, report_.variants.inner.back(), max - st_.partc);
    pc_ = ProgramPoint::inner_body;
}

void ConjugateInterpreter::do_inner_test() {
    auto v = load_a(st_.partc);
    if (!v)
        return;
    pc_ = *v == st_.edge ? ProgramPoint::inner_head : ProgramPoint::assert_point;
}

void ConjugateInterpreter::do_assert() {
    check(annotation::assert_countifsup, count_holds(st_.partc, st_.edge, st_.partc - 1),
          loop_bindings(), "countIfSup(A, partc, edge, partc-1) does not hold");
    pc_ = ProgramPoint::for_init;
}

void ConjugateInterpreter::do_for_init() {
    auto v = load_a(st_.partc);
    if (!v)
        return;
    auto sum = c_int_add(static_cast<std::int32_t>(*v), 1);
    if (!sum) {
        halt_on_safety(annotation::safety_overflow, loop_bindings(), "A[partc] + 1 overflows int");
        return;
    }
    st_.i = *sum;
    report_.variants.for_loop.emplace_back();
    pc_ = ProgramPoint::for_head;
}

void ConjugateInterpreter::do_for_head() {
    auto v = load_a(st_.partc);
    if (!v)
        return;
    const std::int64_t i = *st_.i;
    check(annotation::for_inv_range, i >= *v + 1 && st_.edge + 1 >= i, loop_bindings(),
          "A[partc]+1 <= i <= edge+1 does not hold");
    check_partial_conjugacy(annotation::for_inv_partial, *v + 1, i - 1);
    if (i <= st_.edge) {
        record_variant(annotation::for_variant, report_.variants.for_loop.back(), st_.edge - i);
        pc_ = ProgramPoint::for_body;
    } else {
        pc_ = ProgramPoint::outer_head;
    }
}

void ConjugateInterpreter::do_for_body() {
    const std::int64_t i = *st_.i;
    auto value = c_int_sub(static_cast<std::int32_t>(st_.partc), 1);
    if (!value) {
        halt_on_safety(annotation::safety_overflow, loop_bindings(), "partc - 1 overflows int");
        return;
    }
    if (i < 1 || i >= st_.b.max()) {
        halt_on_safety(annotation::safety_index, loop_bindings(),
                       "write B[" + std::to_string(i) + "] outside [1, MAX)");
        return;
    }
    auto a_partc = load_a(st_.partc);
    if (!a_partc)
        return;
    check(annotation::assigns_frame, 1 <= i && i <= frame_limit_, loop_bindings(),
          "write outside B[1..A[1]]");
    check(annotation::for_assigns, *a_partc + 1 <= i && i <= st_.edge, loop_bindings(),
          "write outside B[(A[partc]+1)..edge]");
    st_.b.set(i, *value);
    report_.writes.insert(i);
    pc_ = ProgramPoint::for_step;
}

void ConjugateInterpreter::do_exit() {
    check_partial_conjugacy(annotation::ensures_is_conjugate, 1, st_.a.max() - 1);
    report_.completed = true;
    pc_ = ProgramPoint::halted;
}

bool ConjugateInterpreter::step() {
    if (pc_ == ProgramPoint::halted)
        return false;
    if (opt_.record_trace)
        report_.trace.push_back({pc_, st_.partc, st_.edge, st_.i, st_.old_partc});

    switch (pc_) {
    case ProgramPoint::entry:
        do_entry();
        break;
    case ProgramPoint::outer_head:
        do_outer_head();
        break;
    case ProgramPoint::edge_assign:
        if (auto v = load_a(st_.partc)) {
            st_.edge = *v;
            pc_ = ProgramPoint::ghost;
        }
        break;
    case ProgramPoint::ghost:
        st_.old_partc = st_.partc;
        report_.variants.inner.emplace_back();
        pc_ = ProgramPoint::inner_head;
        break;
    case ProgramPoint::inner_head:
        do_inner_head();
        break;
    case ProgramPoint::inner_body:
        if (auto next = c_int_add(static_cast<std::int32_t>(st_.partc), 1)) {
            st_.partc = *next;
            pc_ = ProgramPoint::inner_test;
        } else {
            halt_on_safety(annotation::safety_overflow, loop_bindings(), "partc + 1 overflows int");
        }
        break;
    case ProgramPoint::inner_test:
        do_inner_test();
        break;
    case ProgramPoint::assert_point:
        do_assert();
        break;
    case ProgramPoint::for_init:
        do_for_init();
        break;
    case ProgramPoint::for_head:
        do_for_head();
        break;
    case ProgramPoint::for_body:
        do_for_body();
        break;
    case ProgramPoint::for_step:
        if (auto next = c_int_add(static_cast<std::int32_t>(*st_.i), 1)) {
            st_.i = *next;
            pc_ = ProgramPoint::for_head;
        } else {
            halt_on_safety(annotation::safety_overflow, loop_bindings(), "i++ overflows int");
        }
        break;
    case ProgramPoint::exit:
        do_exit();
        break;
    case ProgramPoint::halted:
        break;
    }
    return pc_ != ProgramPoint::halted;
}

void ConjugateInterpreter::run() {
    while (step()) {
    }
}

std::pair<FixedPartitionSequence, ContractReport> conjgte_instrumented(
    const FixedPartitionSequence& a, FixedPartitionSequence b, const EngineOptions& options) {
    ConjugateInterpreter machine(a, std::move(b), options);
    machine.run();
    return {machine.take_result(), machine.take_report()};
}

std::pair<FixedPartitionSequence, ContractReport> conjgte_instrumented(
    const FixedPartitionSequence& a, FixedPartitionSequence b, bool check_precondition) {
    EngineOptions options;
    options.check_precondition = check_precondition;
    return conjgte_instrumented(a, std::move(b), options);
}

std::vector<std::int64_t> descents(const Partition& p) {
    std::vector<std::int64_t> out;
    for (std::size_t i = 1; i < p.length(); ++i)
        if (p.part(i) < p.part(i - 1))
            out.push_back(static_cast<std::int64_t>(i) + 1);
    return out;
}

}  // namespace schurkit
