#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <unordered_set>
#include <vector>

#include "bitstorm/program.hpp"

namespace bitstorm {

// DUE cause taxonomy. E2 (MMU), E6 (PCIe) and E7 (thermal) exist in report
// schemas for fidelity but are hardware-only: the interpreter never raises
// them.
enum class TrapCause : uint8_t {
    E1_ADDR_OOB = 0,
    E3_REG_OOB,
    E4_MISALIGNED,
    E5_ILLEGAL_OPERAND,
    HANG,
};

std::string trap_cause_name(TrapCause c);

struct Trap {
    TrapCause cause;
    uint32_t pc_at_trap = 0;
    uint64_t detail = 0;  // offending address or index
};

struct MachineState {
    uint32_t pc = 0;
    std::array<Word32, 256> regs{};  // [255] is RZ, pinned to zero
    std::array<uint8_t, 8> preds{};  // [7] is PT, pinned to true
    std::vector<uint8_t> global_mem;
    std::vector<uint8_t> shared_mem;
    uint64_t dyn_count = 0;
    std::optional<Trap> trap;
    bool exited = false;
};

enum class StepStatus : uint8_t { Continued, Exited, Trapped };

// Per-instruction fault hook. pre_decode may substitute the encoding word of
// one dynamic instance (ENCODING mode); post_write / post_pred_write may
// rewrite the value just written to the destination (VALUE mode).
class RunHook {
public:
    virtual ~RunHook() = default;
    virtual std::optional<Word32> pre_decode(uint64_t dyn_index, uint32_t pc, Word32 word) {
        (void)dyn_index, (void)pc, (void)word;
        return std::nullopt;
    }
    virtual std::optional<Word32> post_write(uint64_t dyn_index, uint8_t reg, Word32 value) {
        (void)dyn_index, (void)reg, (void)value;
        return std::nullopt;
    }
    virtual std::optional<bool> post_pred_write(uint64_t dyn_index, uint8_t pred, bool value) {
        (void)dyn_index, (void)pred, (void)value;
        return std::nullopt;
    }
};

// Single-source taint frontier. Taint enters at injected destinations and
// propagates through data flow; a store with a tainted base conservatively
// taints its whole segment (over-approximation keeps the no-false-negative
// guarantee on straight-line programs).
struct TaintTracker {
    std::array<bool, 256> reg{};
    std::array<bool, 8> pred{};
    std::unordered_set<uint64_t> mem;  // key = (space << 32) | byte address
    bool all_global = false;
    bool all_shared = false;
    bool ever_tainted_address = false;

    bool mem_tainted(MemSpace space, uint64_t addr, uint32_t bytes) const {
        if (space == MemSpace::GLOBAL && all_global) return true;
        if (space == MemSpace::SHARED && all_shared) return true;
        if (mem.empty()) return false;
        const uint64_t base = static_cast<uint64_t>(space) << 32;
        for (uint32_t i = 0; i < bytes; ++i)
            if (mem.count(base + addr + i)) return true;
        return false;
    }
    void set_mem(MemSpace space, uint64_t addr, uint32_t bytes, bool tainted) {
        const uint64_t base = static_cast<uint64_t>(space) << 32;
        for (uint32_t i = 0; i < bytes; ++i) {
            if (tainted)
                mem.insert(base + addr + i);
            else
                mem.erase(base + addr + i);
        }
    }
};

struct SnapshotRec {
    OperatorTag tag;
    MemSpace space = MemSpace::GLOBAL;
    uint32_t offset = 0;
    uint32_t size = 0;
    uint64_t digest = 0;
    std::vector<uint8_t> bytes;  // populated only when requested
};

// Per-dynamic-instruction execution record (golden runs only).
struct DynRecord {
    uint32_t pc = 0;
    uint8_t flags = 0;

    static constexpr uint8_t kWroteReg = 1;
    static constexpr uint8_t kWrotePred = 2;
    static constexpr uint8_t kGuardSkipped = 4;

    bool wrote_reg() const { return flags & kWroteReg; }
    bool wrote_pred() const { return flags & kWrotePred; }
    bool guard_skipped() const { return flags & kGuardSkipped; }
};

struct RunLimits {
    uint64_t max_dyn = 1ull << 30;
    bool record_dyn_trace = false;
    bool record_snapshot_bytes = false;
};

struct RunResult {
    MachineState state;
    uint64_t dyn_count = 0;
    std::optional<Trap> trap;
    std::vector<SnapshotRec> snapshots;
    std::array<uint64_t, kOpcodeCount> histogram{};
    std::vector<DynRecord> dyn_trace;
};

MachineState make_initial_state(const Program& p);

// Executes the instruction at pc. Exactly one of the following holds after a
// call: pc advanced or branched (Continued), EXIT reached (Exited), or the
// trap field is set (Trapped). SNAPSHOT instructions do not increment
// dyn_count; everything else, including guard-skipped instructions, does.
StepStatus step(MachineState& st, const Program& p);

RunResult run(const Program& p, const RunLimits& limits, RunHook* hook = nullptr,
              TaintTracker* taint = nullptr);

}  // namespace bitstorm
