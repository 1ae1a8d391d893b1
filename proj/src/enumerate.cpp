#include "lyap/enumerate.hpp"

namespace lyap {

namespace {

void extend_partition(int remaining, int cap, std::vector<int>& current,
                      std::vector<std::vector<int>>& out) {
    if (remaining == 0) {
        out.push_back(current);
        return;
    }
    for (int part = std::min(remaining, cap); part >= 1; --part) {
        current.push_back(part);
        extend_partition(remaining - part, part, current, out);
        current.pop_back();
    }
}

} // namespace

std::vector<std::vector<int>> partitions(int n, int max_part) {
    std::vector<std::vector<int>> out;
    if (n < 0)
        return out;
    std::vector<int> current;
    extend_partition(n, max_part < 0 ? n : std::min(n, max_part), current, out);
    return out;
}

std::vector<std::vector<int>> base_genus0_signatures(int max_abs_sum, int max_entry,
                                                     bool require_cover) {
    // With P poles the non-pole orders form a partition of P - 4, so the
    // absolute sum is 2P - 4 regardless of the partition.
    std::vector<std::vector<int>> out;
    for (int poles = 4; 2 * poles - 4 <= max_abs_sum; ++poles) {
        for (const auto& heads : partitions(poles - 4, max_entry)) {
            if (require_cover) {
                int odd = poles;
                for (int h : heads) odd += h % 2;
                if (odd / 2 - 1 < 2)
                    continue; // cover genus below 2
            }
            std::vector<int> sig = heads;
            sig.insert(sig.end(), poles, -1);
            out.push_back(std::move(sig));
        }
    }
    return out;
}

} // namespace lyap
