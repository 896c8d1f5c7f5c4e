#include "zfb/maxflow.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace zfb {

FlowNetwork::FlowNetwork(int node_count)
    : adj_(static_cast<size_t>(node_count)),
      level_(static_cast<size_t>(node_count)),
      iter_(static_cast<size_t>(node_count)) {}

int FlowNetwork::add_arc(int from, int to, int capacity) {
    int id = static_cast<int>(arcs_.size());
    arcs_.push_back({to, capacity, 0});
    arcs_.push_back({from, 0, 0});
    adj_[static_cast<size_t>(from)].push_back(id);
    adj_[static_cast<size_t>(to)].push_back(id + 1);
    return id;
}

bool FlowNetwork::bfs(int source, int sink) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<int> q;
    q.push(source);
    level_[static_cast<size_t>(source)] = 0;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int id : adj_[static_cast<size_t>(v)]) {
            const Arc& a = arcs_[static_cast<size_t>(id)];
            if (a.cap > 0 && level_[static_cast<size_t>(a.to)] == -1) {
                level_[static_cast<size_t>(a.to)] = level_[static_cast<size_t>(v)] + 1;
                q.push(a.to);
            }
        }
    }
    return level_[static_cast<size_t>(sink)] != -1;
}

int FlowNetwork::dfs(int v, int sink, int limit) {
    if (v == sink)
        return limit;
    for (int& i = iter_[static_cast<size_t>(v)];
         i < static_cast<int>(adj_[static_cast<size_t>(v)].size()); ++i) {
        int id = adj_[static_cast<size_t>(v)][static_cast<size_t>(i)];
        Arc& a = arcs_[static_cast<size_t>(id)];
        if (a.cap <= 0 || level_[static_cast<size_t>(a.to)] !=
                              level_[static_cast<size_t>(v)] + 1)
            continue;
        int pushed = dfs(a.to, sink, std::min(limit, a.cap));
        if (pushed > 0) {
            a.cap -= pushed;
            a.flow += pushed;
            Arc& rev = arcs_[static_cast<size_t>(id ^ 1)];
            rev.cap += pushed;
            rev.flow -= pushed;
            return pushed;
        }
    }
    return 0;
}

int FlowNetwork::max_flow(int source, int sink) {
    int total = 0;
    while (bfs(source, sink)) {
        std::fill(iter_.begin(), iter_.end(), 0);
        int pushed;
        while ((pushed = dfs(source, sink, std::numeric_limits<int>::max())) > 0)
            total += pushed;
    }
    return total;
}

int FlowNetwork::flow_on(int arc) const {
    return arcs_[static_cast<size_t>(arc)].flow;
}

int FlowNetwork::residual(int arc) const {
    return arcs_[static_cast<size_t>(arc)].cap;
}

void FlowNetwork::freeze(int arc) {
    arcs_[static_cast<size_t>(arc)].cap = 0;
    arcs_[static_cast<size_t>(arc ^ 1)].cap = 0;
}

} // namespace zfb
