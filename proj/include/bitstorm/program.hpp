#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "bitstorm/instruction.hpp"

namespace bitstorm {

struct MemRegion {
    std::string name;
    MemSpace space = MemSpace::GLOBAL;
    uint32_t offset = 0;
    uint32_t size = 0;
};

struct ProgramError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A lowered instruction sequence with its memory layout, constant bank,
// register budget and named output regions. Immutable after construction;
// safe to share across concurrently running interpreters.
struct Program {
    std::vector<Instruction> code;
    std::vector<Word32> words;  // canonical encodings, index-aligned with code
    std::vector<uint8_t> const_bank;
    uint32_t global_size = 0;
    uint32_t shared_size = 0;
    std::vector<std::pair<uint32_t, std::vector<uint8_t>>> global_init;
    uint32_t reg_budget = 256;  // register indices >= budget trap E3 (except RZ)
    std::vector<MemRegion> regions;
    std::map<std::string, int64_t> meta;

    void finalize();  // fills `words`, validates, computes digest
    uint64_t digest() const { return digest_; }

    const MemRegion* find_region(const std::string& name) const;
    const MemRegion& region(const std::string& name) const;  // throws
    int64_t meta_at(const std::string& key) const;           // throws

    std::vector<uint8_t> serialize() const;
    static Program deserialize(const std::vector<uint8_t>& bytes);

    std::string disassembly() const;

private:
    uint64_t digest_ = 0;
};

void save_program(const Program& p, const std::string& path);
Program load_program(const std::string& path);

}  // namespace bitstorm
