#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

namespace bitstorm {

// Dense, stable ordinals; the encoding stores these in bits 31..24.
enum class Opcode : uint8_t {
    // FP32
    FADD = 0,
    FMUL = 1,
    FFMA = 2,
    FSETP = 3,
    MUFU_RCP = 4,
    MUFU_EX2 = 5,
    MUFU_LG2 = 6,
    MUFU_RSQ = 7,
    // FP16
    HADD2 = 8,
    HMUL2 = 9,
    HFMA2 = 10,
    HMMA_STEP = 11,
    F2H2 = 12,
    H2F_LO = 13,
    H2F_HI = 14,
    // INT
    IMAD = 15,
    IADD3 = 16,
    LOP3 = 17,
    SHF = 18,
    LEA = 19,
    ISETP = 20,
    // MOVSEL
    MOV = 21,
    SEL = 22,
    // MEM
    LDG = 23,
    STG = 24,
    LDS = 25,
    STS = 26,
    LDC = 27,
    // CTRL
    BRA = 28,
    EXIT = 29,
    NOP = 30,
    SNAPSHOT = 31,
};

inline constexpr int kOpcodeCount = 32;

enum class OpGroup : uint8_t { FP32 = 0, FP16, INT, MOVSEL, MEM, CTRL };
inline constexpr int kGroupCount = 6;

constexpr OpGroup opcode_group(Opcode op) {
    const auto o = static_cast<uint8_t>(op);
    if (o <= 7) return OpGroup::FP32;
    if (o <= 14) return OpGroup::FP16;
    if (o <= 20) return OpGroup::INT;
    if (o <= 22) return OpGroup::MOVSEL;
    if (o <= 27) return OpGroup::MEM;
    return OpGroup::CTRL;
}

constexpr std::string_view opcode_name(Opcode op) {
    switch (op) {
        case Opcode::FADD: return "FADD";
        case Opcode::FMUL: return "FMUL";
        case Opcode::FFMA: return "FFMA";
        case Opcode::FSETP: return "FSETP";
        case Opcode::MUFU_RCP: return "MUFU_RCP";
        case Opcode::MUFU_EX2: return "MUFU_EX2";
        case Opcode::MUFU_LG2: return "MUFU_LG2";
        case Opcode::MUFU_RSQ: return "MUFU_RSQ";
        case Opcode::HADD2: return "HADD2";
        case Opcode::HMUL2: return "HMUL2";
        case Opcode::HFMA2: return "HFMA2";
        case Opcode::HMMA_STEP: return "HMMA_STEP";
        case Opcode::F2H2: return "F2H2";
        case Opcode::H2F_LO: return "H2F_LO";
        case Opcode::H2F_HI: return "H2F_HI";
        case Opcode::IMAD: return "IMAD";
        case Opcode::IADD3: return "IADD3";
        case Opcode::LOP3: return "LOP3";
        case Opcode::SHF: return "SHF";
        case Opcode::LEA: return "LEA";
        case Opcode::ISETP: return "ISETP";
        case Opcode::MOV: return "MOV";
        case Opcode::SEL: return "SEL";
        case Opcode::LDG: return "LDG";
        case Opcode::STG: return "STG";
        case Opcode::LDS: return "LDS";
        case Opcode::STS: return "STS";
        case Opcode::LDC: return "LDC";
        case Opcode::BRA: return "BRA";
        case Opcode::EXIT: return "EXIT";
        case Opcode::NOP: return "NOP";
        case Opcode::SNAPSHOT: return "SNAPSHOT";
    }
    return "?";
}

constexpr std::string_view group_name(OpGroup g) {
    switch (g) {
        case OpGroup::FP32: return "FP32";
        case OpGroup::FP16: return "FP16";
        case OpGroup::INT: return "INT";
        case OpGroup::MOVSEL: return "MOVSEL";
        case OpGroup::MEM: return "MEM";
        case OpGroup::CTRL: return "CTRL";
    }
    return "?";
}

constexpr bool valid_ordinal(uint8_t ordinal) { return ordinal < kOpcodeCount; }

std::optional<Opcode> opcode_from_name(std::string_view name);
std::optional<OpGroup> group_from_name(std::string_view name);

}  // namespace bitstorm
