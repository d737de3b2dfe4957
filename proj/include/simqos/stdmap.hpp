// -*- c-basic-offset: 4; indent-tabs-mode: nil -*-
#ifndef SIMQOS_STDMAP_HPP
#define SIMQOS_STDMAP_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "simqos/packet.hpp"

namespace simqos {

enum class TrafficClass { Conversational, Streaming, Interactive, Background };

enum class Phb { EF, AF41, AF31, AF21, AF11, BE };

enum class EdcaAc { AC_VO, AC_VI, AC_BE, AC_BK };

// 802.1D user priority, 0 (lowest) through 7 (highest).
struct UserPriority {
    int value = 0;
};

// DiffServ codepoint, 6 bits.
struct Dscp {
    int value = 0;
};

// One row of the 3GPP / IETF / IEEE cross-standard mapping. The traffic
// class labels in the source table span groups of QCI rows; rows 1 and 3
// carry the Conversational-region label only by grouping and are flagged
// ambiguous. The "primary class" highlight is likewise not recoverable from
// text; rows 2/4/6/8 are the recorded default.
struct QciRow {
    int qci = 0;                   // 1..9
    TrafficClass traffic_class{};
    std::optional<int> thp;        // present iff Interactive, 1..3
    Phb phb{};
    EdcaAc edca_ac{};
    UserPriority up{};
    bool primary_class = false;
    bool label_ambiguous = false;
};

// All nine rows, immutable, in QCI order.
const std::array<QciRow, 9>& qci_table();

// Throws UnknownQci outside 1..9.
const QciRow& row_for_qci(int qci);

// Numeric codepoints: EF = 46, BE = 0, AFxy = 8x + 2y.
Dscp dscp_for_phb(Phb phb);
Phb phb_for_dscp(Dscp dscp); // throws UnknownDscp off the alphabet

// 802.1D user-priority to 802.11 access-category mapping.
EdcaAc ac_for_up(UserPriority up);

// Lossy export of an incentive marking into the standard vocabularies. The
// two schemes are not equivalent (delay class and drop priority are
// orthogonal scales); this is a fixed band table for interop traces, total
// over all 3 x 8 inputs and monotone in priority for fixed class.
std::pair<Phb, UserPriority> export_marking(int delay_class, int drop_priority);

const char* to_string(TrafficClass tc);
const char* to_string(Phb phb);
const char* to_string(EdcaAc ac);

} // namespace simqos

#endif
