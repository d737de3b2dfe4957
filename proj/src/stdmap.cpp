// -*- c-basic-offset: 4; indent-tabs-mode: nil -*-
#include "simqos/stdmap.hpp"

#include <stdexcept>

#include "simqos/errors.hpp"

namespace simqos {

const std::array<QciRow, 9>& qci_table() {
    static const std::array<QciRow, 9> rows = {{
        // qci  class                        thp           phb        ac             up  primary ambiguous
        {1, TrafficClass::Conversational, std::nullopt, Phb::EF,   EdcaAc::AC_VO, {7}, false, true},
        {2, TrafficClass::Conversational, std::nullopt, Phb::EF,   EdcaAc::AC_VO, {6}, true,  false},
        {3, TrafficClass::Conversational, std::nullopt, Phb::EF,   EdcaAc::AC_VI, {5}, false, true},
        {4, TrafficClass::Streaming,      std::nullopt, Phb::AF41, EdcaAc::AC_VI, {4}, true,  false},
        {5, TrafficClass::Interactive,    1,            Phb::AF31, EdcaAc::AC_BE, {3}, false, false},
        {6, TrafficClass::Interactive,    2,            Phb::AF21, EdcaAc::AC_BE, {3}, true,  false},
        {7, TrafficClass::Interactive,    3,            Phb::AF11, EdcaAc::AC_BE, {0}, false, false},
        {8, TrafficClass::Background,     std::nullopt, Phb::BE,   EdcaAc::AC_BK, {2}, true,  false},
        {9, TrafficClass::Background,     std::nullopt, Phb::BE,   EdcaAc::AC_BK, {1}, false, false},
    }};
    return rows;
}

const QciRow& row_for_qci(int qci) {
    if (qci < 1 || qci > 9)
        throw UnknownQci("QCI must be in 1..9, got " + std::to_string(qci));
    return qci_table()[qci - 1];
}

Dscp dscp_for_phb(Phb phb) {
    switch (phb) {
    case Phb::EF: return {46};
    case Phb::AF41: return {8 * 4 + 2 * 1};
    case Phb::AF31: return {8 * 3 + 2 * 1};
    case Phb::AF21: return {8 * 2 + 2 * 1};
    case Phb::AF11: return {8 * 1 + 2 * 1};
    case Phb::BE: return {0};
    }
    throw UnknownPhb("PHB outside the mapping alphabet");
}

Phb phb_for_dscp(Dscp dscp) {
    switch (dscp.value) {
    case 46: return Phb::EF;
    case 34: return Phb::AF41;
    case 26: return Phb::AF31;
    case 18: return Phb::AF21;
    case 10: return Phb::AF11;
    case 0: return Phb::BE;
    default:
        throw UnknownDscp("DSCP " + std::to_string(dscp.value) + " outside the mapping alphabet");
    }
}

EdcaAc ac_for_up(UserPriority up) {
    switch (up.value) {
    case 7:
    case 6: return EdcaAc::AC_VO;
    case 5:
    case 4: return EdcaAc::AC_VI;
    case 3:
    case 0: return EdcaAc::AC_BE;
    case 2:
    case 1: return EdcaAc::AC_BK;
    default:
        throw std::out_of_range("user priority must be in 0..7");
    }
}

std::pair<Phb, UserPriority> export_marking(int delay_class, int drop_priority) {
    if (delay_class < 0 || delay_class > 2 || drop_priority < 0 || drop_priority > 7)
        throw std::out_of_range("marking outside the 3x8 input space");
    switch (delay_class) {
    case 0:
        return {Phb::EF, {7}};
    case 1:
        return drop_priority >= 4 ? std::pair<Phb, UserPriority>{Phb::EF, {6}}
                                  : std::pair<Phb, UserPriority>{Phb::AF41, {5}};
    default:
        if (drop_priority >= 6)
            return {Phb::AF31, {3}};
        if (drop_priority >= 4)
            return {Phb::AF21, {3}};
        if (drop_priority >= 2)
            return {Phb::AF11, {0}};
        return {Phb::BE, {1}};
    }
}

const char* to_string(TrafficClass tc) {
    switch (tc) {
    case TrafficClass::Conversational: return "Conversational";
    case TrafficClass::Streaming: return "Streaming";
    case TrafficClass::Interactive: return "Interactive";
    case TrafficClass::Background: return "Background";
    }
    return "?";
}

const char* to_string(Phb phb) {
    switch (phb) {
    case Phb::EF: return "EF";
    case Phb::AF41: return "AF41";
    case Phb::AF31: return "AF31";
    case Phb::AF21: return "AF21";
    case Phb::AF11: return "AF11";
    case Phb::BE: return "BE";
    }
    return "?";
}

const char* to_string(EdcaAc ac) {
    switch (ac) {
    case EdcaAc::AC_VO: return "AC_VO";
    case EdcaAc::AC_VI: return "AC_VI";
    case EdcaAc::AC_BE: return "AC_BE";
    case EdcaAc::AC_BK: return "AC_BK";
    }
    return "?";
}

} // namespace simqos
