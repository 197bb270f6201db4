#pragma once

#include <cstdint>
#include <string>

#include "bitstorm/opcode.hpp"
#include "bitstorm/word.hpp"

namespace bitstorm {

// Register index 255 is RZ: reads as zero, writes are discarded.
inline constexpr uint8_t kRZ = 255;
// Predicate index 7 is PT: reads as true, writes are discarded.
inline constexpr uint8_t kPT = 7;
inline constexpr uint8_t kNoGuard = 0xff;

enum class OperandKind : uint8_t { NONE = 0, REG, PRED, IMM, CONST };

struct Operand {
    OperandKind kind = OperandKind::NONE;
    uint32_t value = 0;  // reg/pred index, immediate bits, or const-bank byte offset

    static Operand none() { return {}; }
    static Operand reg(uint8_t idx) { return {OperandKind::REG, idx}; }
    static Operand pred(uint8_t idx) { return {OperandKind::PRED, idx}; }
    static Operand imm(Word32 bits) { return {OperandKind::IMM, bits}; }
    static Operand fimm(float f) { return {OperandKind::IMM, f32_bits(f)}; }
    static Operand cbank(uint32_t byte_offset) { return {OperandKind::CONST, byte_offset}; }

    bool operator==(const Operand&) const = default;
};

enum class DestKind : uint8_t { NONE = 0, REG, PRED };
enum class MemSpace : uint8_t { GLOBAL = 0, SHARED = 1, CONST = 2 };
enum class CmpOp : uint8_t { LT = 0, LE, EQ, NE, GE, GT };

enum class OperatorKind : uint8_t { EMBEDDING = 0, ATTENTION, MLP, NORM, LM_HEAD, OTHER };
inline constexpr int kOperatorKindCount = 6;
inline constexpr int16_t kNoLayer = -1;

struct OperatorTag {
    OperatorKind kind = OperatorKind::OTHER;
    int16_t layer = kNoLayer;

    bool operator==(const OperatorTag&) const = default;
};

std::string operator_kind_name(OperatorKind k);
OperatorKind operator_kind_from_name(const std::string& s);  // throws on unknown
std::string operator_tag_string(const OperatorTag& t);       // e.g. "ATTENTION:0", "LM_HEAD"

// Canonical instruction form. Encoding packs (opcode ordinal, dest index,
// src0 index, src1 index) into one word; everything else lives in the side
// table and is immune to ENCODING-mode faults.
struct Instruction {
    Opcode opcode = Opcode::NOP;
    DestKind dest_kind = DestKind::NONE;
    uint8_t dest = 0;
    Operand src[3];
    uint8_t lut_imm = 0;    // LOP3 truth table, minterm index (a<<2)|(b<<1)|c
    uint8_t shift_imm = 0;  // SHF / LEA, 0..31
    uint8_t mem_width = 32;  // 8 / 16 / 32
    MemSpace mem_space = MemSpace::GLOBAL;
    int32_t mem_offset = 0;  // signed byte offset added to the base register
    uint32_t branch_target = 0;
    CmpOp cmp = CmpOp::EQ;
    uint8_t guard = kNoGuard;  // predicate index; false skips execution
    MemSpace snap_space = MemSpace::GLOBAL;
    uint32_t snap_offset = 0;
    uint32_t snap_size = 0;
    OperatorTag tag;

    bool operator==(const Instruction&) const = default;
};

// Encoded layout: [31..24 opcode ordinal][23..16 dest][15..8 src0][7..0 src1].
// Bytes for operands that are not REG/PRED encode as zero and are ignored by
// decode (their values come from the side table).
Word32 encode(const Instruction& ins);

struct DecodeError {
    uint8_t ordinal;
};

// Reconstructs an instruction from an encoded word plus its side-table entry.
// Returns false (filling err) when the opcode ordinal is undefined; register
// and predicate indices are taken verbatim and validated at execution time.
bool decode(Word32 word, const Instruction& side, Instruction& out, DecodeError& err);

std::string disassemble(const Instruction& ins, uint32_t pc);

}  // namespace bitstorm
