// -*- c-basic-offset: 4; indent-tabs-mode: nil -*-
#ifndef SIMQOS_CONTRACT_HPP
#define SIMQOS_CONTRACT_HPP

#include <cstdint>
#include <string>

namespace simqos {

// Subscriber contract. The nominal bit rate is the reference against which
// momentary rates are judged; the access cap bounds everything the
// subscriber may push into the network. The price class is a label only.
struct SubscriberContract {
    std::string subscriber_id;
    int64_t nominal_bit_rate_bps = 0; // NBR, > 0
    int64_t access_rate_cap_bps = 0;  // >= NBR
    std::string price_class = "standard";
};

} // namespace simqos

#endif
