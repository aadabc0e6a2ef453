#pragma once

#include <cstdio>
#include <string>
#include <vector>

namespace wsn {

// What happened during a round, in deterministic emission order. `subject`
// is a node id for NodeDied and a cluster index for everything else.
enum class EventKind { NodeDied, ChFailover, ChsecFailover, DeliveryToBS, ClusterIsolated };

inline const char* to_string(EventKind k) {
    switch (k) {
        case EventKind::NodeDied: return "NodeDied";
        case EventKind::ChFailover: return "ChFailover";
        case EventKind::ChsecFailover: return "ChsecFailover";
        case EventKind::DeliveryToBS: return "DeliveryToBS";
        case EventKind::ClusterIsolated: return "ClusterIsolated";
    }
    return "?";
}

struct RoundEvent {
    int round = 0;
    EventKind kind = EventKind::NodeDied;
    int subject = 0;
    std::string detail;
};

inline std::string format_event(const RoundEvent& e) {
    char head[96];
    std::snprintf(head, sizeof(head), "round=%d kind=%s subject=%d detail=", e.round,
                  to_string(e.kind), e.subject);
    return std::string(head) + e.detail;
}

}  // namespace wsn
