// -*- c-basic-offset: 4; indent-tabs-mode: nil -*-
#include "simqos/packet.hpp"

#include <stdexcept>

namespace simqos {

ClassTable ClassTable::standard_three() { return ClassTable({1, 3, 10}); }

ClassTable ClassTable::standard_two() { return ClassTable({3, 10}); }

ClassTable ClassTable::from_tenths(std::vector<int> tenths) {
    if (tenths.size() < 2 || tenths.size() > 8)
        throw std::invalid_argument("class table needs 2..8 lanes");
    for (size_t i = 0; i < tenths.size(); ++i) {
        if (tenths[i] < 1 || tenths[i] > 10)
            throw std::invalid_argument("class weight out of (0, 1] in tenths");
        if (i > 0 && tenths[i] <= tenths[i - 1])
            throw std::invalid_argument("class weights must strictly increase with index");
    }
    if (tenths.back() != 10)
        throw std::invalid_argument("last class weight must be 1.0");
    return ClassTable(std::move(tenths));
}

DelayClass ClassTable::at(int idx) const {
    if (!valid_index(idx))
        throw std::out_of_range("delay class index out of range");
    return DelayClass{static_cast<uint8_t>(idx), tenths_[idx]};
}

uint8_t encode_marking(int delay_class, int drop_priority) {
    if (delay_class < 0 || delay_class > 3)
        throw std::invalid_argument("delay class does not fit the 2-bit field");
    if (drop_priority < 0 || drop_priority > 7)
        throw std::invalid_argument("drop priority does not fit the 3-bit field");
    return static_cast<uint8_t>((delay_class << 4) | drop_priority);
}

void decode_marking(uint8_t wire, int& delay_class, int& drop_priority) {
    if (wire & 0b1100'1000)
        throw std::invalid_argument("reserved marking bits set");
    delay_class = (wire >> 4) & 0b11;
    drop_priority = wire & 0b111;
}

} // namespace simqos
