#include "bitstorm/opcode.hpp"

#include <array>

namespace bitstorm {

std::optional<Opcode> opcode_from_name(std::string_view name) {
    for (int i = 0; i < kOpcodeCount; ++i) {
        const auto op = static_cast<Opcode>(i);
        if (opcode_name(op) == name) return op;
    }
    return std::nullopt;
}

std::optional<OpGroup> group_from_name(std::string_view name) {
    for (int i = 0; i < kGroupCount; ++i) {
        const auto g = static_cast<OpGroup>(i);
        if (group_name(g) == name) return g;
    }
    return std::nullopt;
}

}  // namespace bitstorm
